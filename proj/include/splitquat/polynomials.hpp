#ifndef SPLITQUAT_POLYNOMIALS_HPP
#define SPLITQUAT_POLYNOMIALS_HPP

#include <complex>
#include <iosfwd>
#include <stdexcept>
#include <utility>
#include <vector>

#include "splitquat/algebra.hpp"

namespace splitquat {

struct InternalInconsistency : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotARightZero : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct LeadingCoefficientNotInvertible : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DegreeMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotConjugationClosed : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Polynomial with real coefficients, ascending degree order.
struct RealPoly {
    std::vector<double> coeffs;   // coeffs[l] multiplies t^l

    RealPoly() : coeffs{0.0} {}
    explicit RealPoly(std::vector<double> c) : coeffs(std::move(c)) {
        if (coeffs.empty()) coeffs.push_back(0.0);
    }

    int degree(const Tolerance& tol = default_tolerance()) const;
    double scale() const;   // max |coefficient|
    double operator[](std::size_t l) const { return l < coeffs.size() ? coeffs[l] : 0.0; }
    double eval(double t) const;
    std::complex<double> eval(std::complex<double> t) const;
    std::complex<double> eval_derivative(std::complex<double> t) const;

    friend RealPoly operator+(const RealPoly& a, const RealPoly& b);
    friend RealPoly operator-(const RealPoly& a, const RealPoly& b);
    friend RealPoly operator*(const RealPoly& a, const RealPoly& b);
    friend RealPoly operator*(const RealPoly& a, double s);
    friend std::ostream& operator<<(std::ostream& os, const RealPoly& p);
};

/// Left polynomial over the split quaternions.  The indeterminate t commutes
/// with all coefficients, so (a t^m)(b t^n) = (a*b) t^{m+n}.  Coefficients are
/// stored ascending; coeffs[l] multiplies t^l.
struct Poly {
    std::vector<SplitQuaternion> coeffs;

    Poly() : coeffs{SplitQuaternion{}} {}
    explicit Poly(std::vector<SplitQuaternion> c) : coeffs(std::move(c)) {
        if (coeffs.empty()) coeffs.push_back(SplitQuaternion{});
    }
    Poly(const RealPoly& p);

    /// Quadratic a t^2 + b t + c.
    static Poly quadratic(const SplitQuaternion& a, const SplitQuaternion& b,
                          const SplitQuaternion& c) {
        return Poly({c, b, a});
    }
    /// Monic linear t - h.
    static Poly linear_monic(const SplitQuaternion& h) {
        return Poly({-h, SplitQuaternion{1.0}});
    }
    static Poly constant(const SplitQuaternion& u) { return Poly({u}); }

    int degree(const Tolerance& tol = default_tolerance()) const;
    double scale() const;   // max coordinate magnitude over all coefficients
    SplitQuaternion operator[](std::size_t l) const {
        return l < coeffs.size() ? coeffs[l] : SplitQuaternion{};
    }
    SplitQuaternion leading(const Tolerance& tol = default_tolerance()) const;

    /// Drops trailing coefficients that are zero at the given tolerance.
    Poly trimmed(const Tolerance& tol = default_tolerance()) const;

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const SplitQuaternion& u, const Poly& p);
    friend Poly operator*(const Poly& p, const SplitQuaternion& u);
    friend std::ostream& operator<<(std::ostream& os, const Poly& p);
};

/// Coefficientwise conjugation; reverses products: conj(P*Q) = conj(Q)*conj(P).
Poly conj_poly(const Poly& p);

/// P * conj(P), checked to be real.  Throws InternalInconsistency if any
/// product coefficient has a vector part above tolerance.
RealPoly norm_poly(const Poly& p, const Tolerance& tol = default_tolerance());

/// Right evaluation: P(h) = sum_l p_l h^l (powers on the right).
SplitQuaternion eval_right(const Poly& p, const SplitQuaternion& h);

/// Evaluation at a real parameter value.
SplitQuaternion eval_real(const Poly& p, double t);

/// Quotient Q with P = Q*(t - h), by synthetic right division.
/// Precondition eval_right(P, h) = 0; otherwise throws NotARightZero.
Poly quotient_by_right_linear(const Poly& p, const SplitQuaternion& h,
                              const Tolerance& tol = default_tolerance());

/// P(t + s), expanded (Taylor shift).  Zeros and factorizations of the result
/// correspond to those of P under h -> h + s.
Poly reparametrize(const Poly& p, double s);
RealPoly reparametrize(const RealPoly& p, double s);

/// (a, a^{-1} P) for invertible leading coefficient a, so P = a * monic.
std::pair<SplitQuaternion, Poly> monic_reduce(const Poly& p,
                                              const Tolerance& tol = default_tolerance());

/// All (complex) roots of a real polynomial of degree 1..4, with multiplicity.
/// Durand-Kerner iteration with Newton polishing; conjugate symmetry enforced,
/// near-real roots snapped exactly real, clustered multiple roots refined and
/// returned as repeated values.
std::vector<std::complex<double>> polynomial_roots(const RealPoly& p,
                                                   const Tolerance& tol = default_tolerance());

/// The four roots of a degree-4 real polynomial.  Throws DegreeMismatch if the
/// degree (at tolerance) is not 4.
std::vector<std::complex<double>> real_quartic_roots(const RealPoly& p,
                                                     const Tolerance& tol = default_tolerance());

/// All splittings of a conjugation-closed root multiset {t1..t4} into two
/// pairs whose quadratics (t-ti)(t-tj) are both real.  Repeated roots are
/// treated as distinct slots; duplicate pairings are removed.
/// Throws NotConjugationClosed if the roots are not closed under conjugation.
std::vector<std::pair<RealPoly, RealPoly>>
real_quadratic_factor_pairings(const std::vector<std::complex<double>>& roots,
                               const Tolerance& tol = default_tolerance());

} // namespace splitquat

#endif
