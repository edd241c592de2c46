#ifndef SPLITQUAT_FACTORIZATION_HPP
#define SPLITQUAT_FACTORIZATION_HPP

#include <complex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "splitquat/nullquadric.hpp"
#include "splitquat/polynomials.hpp"

namespace splitquat {

struct NotQuadratic : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct MNotAFactor : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NormPolyNotZero : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ZeroLeadingCoefficient : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DependentCoefficientsError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Which normalization branch handled the input.
enum class CaseLabel {
    RealPolynomial,
    BRealCNonreal,
    DependentBNonreal,
    Independent,
    NullNormDependent,
    NullNormIndependent,
    NonInvertibleLeadReparametrized,
};
const char* to_string(CaseLabel label);

/// Placement of the constant factor in a witness.  Inputs with invertible
/// leading coefficient always factor as unit*(t-h1)*(t-h2); quadratics whose
/// curve lies on the null quadric may only admit the constant on the right
/// (coefficients on a left ruling) or between the linear factors (independent
/// coefficients).  General covers products of two non-normalizable linear
/// polynomials; the full factor list is authoritative in every case.
enum class UnitPos { Left, Middle, Right, General };
const char* to_string(UnitPos pos);

struct Witness {
    SplitQuaternion unit;
    SplitQuaternion h1, h2;
    UnitPos unit_pos = UnitPos::Left;
    std::vector<Poly> factors;   // ordered; their product reproduces the input
    double residual = 0.0;
};

enum class RemainderClass { UniqueRoot, NullLine, DependentCoefficients, Constant };
const char* to_string(RemainderClass cls);

/// One real quadratic factor M of the norm polynomial together with the
/// remainder R = P - M and its classification.
struct RemainderInfo {
    RealPoly M;
    Poly R;
    RemainderClass cls = RemainderClass::Constant;
    std::optional<RulingClass> ruling;   // set for NullLine remainders
};

/// Scalars of the dependent-coefficient decompositions: c = lambda + mu*b for
/// monic inputs; b = alpha*a (or c = alpha*a + beta*b) in the vanishing-norm
/// cases; m is the constant coefficient of the shifted quadratic factor used
/// by the common-zero construction.
struct DependentDecomposition {
    std::optional<double> lambda, mu;
    std::optional<double> alpha, beta;
    std::optional<double> m;
};

struct Certificate {
    RealPoly norm_poly;
    std::vector<std::complex<double>> quartic_roots;
    std::vector<RemainderInfo> remainders;
    std::vector<std::pair<std::string, double>> predicate_values;
    std::optional<RealPoly> chosen_M;
    /// Solution of the 2x2 system in the common-zero construction.
    std::optional<std::pair<double, double>> common_zero_lambda_mu;
    DependentDecomposition decomposition;
    std::optional<int> segment_intersections;
    std::optional<int> line_intersections;   // meaningful only with segment count
    bool line_on_quadric = false;
    std::optional<double> reparametrization_shift;
    std::string note;
};

struct FactorizationOutcome {
    CaseLabel label = CaseLabel::Independent;
    bool factorizable = false;
    std::vector<Witness> witnesses;   // [0] is the canonical witness
    Certificate certificate;
    double residual = 0.0;            // canonical witness residual

    const Witness* canonical() const { return witnesses.empty() ? nullptr : &witnesses[0]; }
};

struct FactorizeOptions {
    Tolerance tol{};
    bool enumerate_all = false;
};

/// Complete factorization decision for a quadratic polynomial.  Normalization
/// pipeline: identically vanishing norm polynomial first, then projective
/// reparametrization for non-invertible leading coefficients, then the monic
/// case dispatch.  Witnesses are mapped back through every normalization so
/// that their factor product reproduces the original input.
/// Throws NotQuadratic unless deg P = 2.
FactorizationOutcome factorize(const Poly& p, const FactorizeOptions& opts = {});

/// Zero set of t^2 + c0 for real c0: always the quadric {x : Sc(x) = 0,
/// norm(x) = c0}, plus two real zeros when c0 <= 0.
struct RealZeroSet {
    enum class Shape { OneSheetHyperboloid, Cone, TwoSheetHyperboloid } shape;
    std::vector<double> real_zeros;             // present when c0 <= 0
    std::vector<SplitQuaternion> sample_zeros;  // concrete vectorial zeros
};
RealZeroSet factor_monic_real(double c0, const Tolerance& tol = default_tolerance());

/// Verdict and witness for t^2 + c with nonreal c: factorizable iff
/// norm(Vec c) > 0, or norm(c) >= 0 and Sc(c) < 0.  The witness zero uses
/// the largest admissible real scalar part.
FactorizationOutcome factor_monic_b_real(const SplitQuaternion& c,
                                         const FactorizeOptions& opts = {});

/// Verdict and witness for t^2 + b t + lambda + mu*b with vectorial nonreal b,
/// split by the sign of norm(b).
FactorizationOutcome factor_monic_dependent(const SplitQuaternion& b, double lambda, double mu,
                                            const FactorizeOptions& opts = {});

/// Generic factorization step: for a monic quadratic factor M of the norm
/// polynomial, R = P - M; when R is linear with invertible leading coefficient
/// its unique zero is a right zero of P.  Returns nullopt when R vanishes
/// identically as a norm (null line), is constant, or has dependent
/// coefficients whose real zero is not admissible.
/// Throws MNotAFactor when M does not divide the norm polynomial.
std::optional<std::pair<SplitQuaternion, SplitQuaternion>>
factor_generic(const Poly& p, const RealPoly& m, const Tolerance& tol = default_tolerance());

/// All remainder polynomials of a monic quadratic: one entry per real
/// quadratic factor of the norm polynomial, classified.
/// Throws VanishingNormPolynomial when the norm polynomial is identically zero.
std::vector<RemainderInfo> remainder_candidates(const Poly& p,
                                                const Tolerance& tol = default_tolerance());

/// Factorization of a monic quadratic with linearly independent coefficients
/// 1, b, c; always succeeds.  Uses the generic step when some remainder has an
/// invertible leading coefficient and the common zero on a right-ruling
/// remainder otherwise.  Extra outputs for the certificate are reported via
/// the optional out-parameters.
/// Throws DependentCoefficientsError when the coefficients are dependent.
std::pair<SplitQuaternion, SplitQuaternion>
factor_independent(const Poly& p, const Tolerance& tol = default_tolerance(),
                   Certificate* cert = nullptr);

/// Common right zero of M1 = t^2 + m and a right-ruling remainder
/// R1 = r1 t + r0: solves r1 x = -r0 on the division plane, then fixes the two
/// plane parameters by requiring norm = m and vanishing scalar part.
/// Throws SingularSystem if the 2x2 system degenerates (precondition broken).
SplitQuaternion common_zero_on_null_remainder(double m, const Poly& r1_poly,
                                              const Tolerance& tol = default_tolerance(),
                                              std::pair<double, double>* lambda_mu = nullptr);

/// Factorization of quadratics whose norm polynomial vanishes identically
/// (the curve lies on the null quadric); always factorizable.
/// Throws NormPolyNotZero / ZeroLeadingCoefficient on precondition failure.
FactorizationOutcome factorize_null_norm(const Poly& p, const FactorizeOptions& opts = {});

} // namespace splitquat

#endif
