#include "splitquat/polynomials.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>

namespace splitquat {

// ---------------------------------------------------------------------------
// RealPoly

int RealPoly::degree(const Tolerance& tol) const {
    const double s = scale();
    for (int l = static_cast<int>(coeffs.size()) - 1; l >= 0; --l)
        if (!tol.is_zero(coeffs[l], s)) return l;
    return -1;   // zero polynomial
}

double RealPoly::scale() const {
    double s = 0.0;
    for (double c : coeffs) s = std::max(s, std::abs(c));
    return s;
}

double RealPoly::eval(double t) const {
    double v = 0.0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) v = v * t + *it;
    return v;
}

std::complex<double> RealPoly::eval(std::complex<double> t) const {
    std::complex<double> v = 0.0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) v = v * t + *it;
    return v;
}

std::complex<double> RealPoly::eval_derivative(std::complex<double> t) const {
    std::complex<double> v = 0.0;
    for (std::size_t l = coeffs.size(); l-- > 1;)
        v = v * t + static_cast<double>(l) * coeffs[l];
    return v;
}

RealPoly operator+(const RealPoly& a, const RealPoly& b) {
    std::vector<double> c(std::max(a.coeffs.size(), b.coeffs.size()), 0.0);
    for (std::size_t l = 0; l < c.size(); ++l) c[l] = a[l] + b[l];
    return RealPoly(std::move(c));
}

RealPoly operator-(const RealPoly& a, const RealPoly& b) {
    std::vector<double> c(std::max(a.coeffs.size(), b.coeffs.size()), 0.0);
    for (std::size_t l = 0; l < c.size(); ++l) c[l] = a[l] - b[l];
    return RealPoly(std::move(c));
}

RealPoly operator*(const RealPoly& a, const RealPoly& b) {
    std::vector<double> c(a.coeffs.size() + b.coeffs.size() - 1, 0.0);
    for (std::size_t m = 0; m < a.coeffs.size(); ++m)
        for (std::size_t n = 0; n < b.coeffs.size(); ++n)
            c[m + n] += a.coeffs[m] * b.coeffs[n];
    return RealPoly(std::move(c));
}

RealPoly operator*(const RealPoly& a, double s) {
    std::vector<double> c(a.coeffs);
    for (double& v : c) v *= s;
    return RealPoly(std::move(c));
}

std::ostream& operator<<(std::ostream& os, const RealPoly& p) {
    std::ostringstream buf;
    bool first = true;
    for (int l = static_cast<int>(p.coeffs.size()) - 1; l >= 0; --l) {
        const double c = p.coeffs[l];
        if (c == 0.0) continue;
        if (first) {
            if (c < 0) buf << "-";
            first = false;
        } else {
            buf << (c < 0 ? " - " : " + ");
        }
        const double a = std::abs(c);
        if (a != 1.0 || l == 0) buf << a;
        if (l >= 1) buf << (a != 1.0 ? "*t" : "t");
        if (l >= 2) buf << "^" << l;
    }
    if (first) buf << "0";
    return os << buf.str();
}

// ---------------------------------------------------------------------------
// Poly

Poly::Poly(const RealPoly& p) {
    coeffs.reserve(p.coeffs.size());
    for (double c : p.coeffs) coeffs.emplace_back(c);
}

int Poly::degree(const Tolerance& tol) const {
    const double s = scale();
    for (int l = static_cast<int>(coeffs.size()) - 1; l >= 0; --l)
        if (linf(coeffs[l]) > tol.threshold(s)) return l;
    return -1;
}

double Poly::scale() const {
    double s = 0.0;
    for (const auto& c : coeffs) s = std::max(s, linf(c));
    return s;
}

SplitQuaternion Poly::leading(const Tolerance& tol) const {
    const int d = degree(tol);
    return d < 0 ? SplitQuaternion{} : coeffs[static_cast<std::size_t>(d)];
}

Poly Poly::trimmed(const Tolerance& tol) const {
    const int d = degree(tol);
    if (d < 0) return Poly();
    return Poly(std::vector<SplitQuaternion>(coeffs.begin(), coeffs.begin() + d + 1));
}

Poly operator+(const Poly& a, const Poly& b) {
    std::vector<SplitQuaternion> c(std::max(a.coeffs.size(), b.coeffs.size()));
    for (std::size_t l = 0; l < c.size(); ++l) c[l] = a[l] + b[l];
    return Poly(std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) {
    std::vector<SplitQuaternion> c(std::max(a.coeffs.size(), b.coeffs.size()));
    for (std::size_t l = 0; l < c.size(); ++l) c[l] = a[l] - b[l];
    return Poly(std::move(c));
}

Poly operator*(const Poly& a, const Poly& b) {
    std::vector<SplitQuaternion> c(a.coeffs.size() + b.coeffs.size() - 1);
    for (std::size_t m = 0; m < a.coeffs.size(); ++m)
        for (std::size_t n = 0; n < b.coeffs.size(); ++n)
            c[m + n] += a.coeffs[m] * b.coeffs[n];
    return Poly(std::move(c));
}

Poly operator*(const SplitQuaternion& u, const Poly& p) {
    std::vector<SplitQuaternion> c(p.coeffs);
    for (auto& v : c) v = u * v;
    return Poly(std::move(c));
}

Poly operator*(const Poly& p, const SplitQuaternion& u) {
    std::vector<SplitQuaternion> c(p.coeffs);
    for (auto& v : c) v = v * u;
    return Poly(std::move(c));
}

std::ostream& operator<<(std::ostream& os, const Poly& p) {
    std::ostringstream buf;
    bool first = true;
    for (int l = static_cast<int>(p.coeffs.size()) - 1; l >= 0; --l) {
        const SplitQuaternion& c = p.coeffs[static_cast<std::size_t>(l)];
        if (linf(c) == 0.0) continue;
        if (!first) buf << " + ";
        first = false;
        buf << "(" << c << ")";
        if (l >= 1) buf << "t";
        if (l >= 2) buf << "^" << l;
    }
    if (first) buf << "0";
    return os << buf.str();
}

Poly conj_poly(const Poly& p) {
    std::vector<SplitQuaternion> c(p.coeffs);
    for (auto& v : c) v = conj(v);
    return Poly(std::move(c));
}

RealPoly norm_poly(const Poly& p, const Tolerance& tol) {
    const Poly n = p * conj_poly(p);
    const double s = n.scale();
    std::vector<double> c;
    c.reserve(n.coeffs.size());
    for (const auto& v : n.coeffs) {
        if (linf(vector_part(v)) > 1e3 * tol.threshold(s))
            throw InternalInconsistency("norm polynomial has a non-real coefficient");
        c.push_back(v.w);
    }
    return RealPoly(std::move(c));
}

SplitQuaternion eval_right(const Poly& p, const SplitQuaternion& h) {
    SplitQuaternion v;
    SplitQuaternion power{1.0};
    for (const auto& c : p.coeffs) {
        v += c * power;
        power = power * h;
    }
    return v;
}

SplitQuaternion eval_real(const Poly& p, double t) {
    SplitQuaternion v;
    for (auto it = p.coeffs.rbegin(); it != p.coeffs.rend(); ++it) v = v * t + *it;
    return v;
}

Poly quotient_by_right_linear(const Poly& p, const SplitQuaternion& h, const Tolerance& tol) {
    const double hs = std::max(1.0, linf(h));
    const double s = std::max(p.scale(), p.scale() * hs * hs);
    const SplitQuaternion rem = eval_right(p, h);
    if (linf(rem) > 1e3 * tol.threshold(s))
        throw NotARightZero("value is not a right zero of the polynomial");

    const int n = p.degree(tol);
    if (n < 1) throw NotARightZero("polynomial has no linear factor");
    // q_{l-1} = p_l + q_l * h, descending from q_{n-1} = p_n.
    std::vector<SplitQuaternion> q(static_cast<std::size_t>(n));
    SplitQuaternion carry = p[static_cast<std::size_t>(n)];
    for (int l = n - 1; l >= 0; --l) {
        q[static_cast<std::size_t>(l)] = carry;
        carry = p[static_cast<std::size_t>(l)] + carry * h;
    }
    return Poly(std::move(q));
}

Poly reparametrize(const Poly& p, double s) {
    // Ruffini-Horner Taylor shift.
    std::vector<SplitQuaternion> c(p.coeffs);
    const std::size_t n = c.size();
    for (std::size_t pass = 0; pass + 1 < n; ++pass)
        for (std::size_t l = n - 1; l >= pass + 1; --l)
            c[l - 1] += c[l] * s;
    return Poly(std::move(c));
}

RealPoly reparametrize(const RealPoly& p, double s) {
    std::vector<double> c(p.coeffs);
    const std::size_t n = c.size();
    for (std::size_t pass = 0; pass + 1 < n; ++pass)
        for (std::size_t l = n - 1; l >= pass + 1; --l)
            c[l - 1] += c[l] * s;
    return RealPoly(std::move(c));
}

std::pair<SplitQuaternion, Poly> monic_reduce(const Poly& p, const Tolerance& tol) {
    const SplitQuaternion a = p.leading(tol);
    if (is_null(a, tol))
        throw LeadingCoefficientNotInvertible("leading coefficient is a zero divisor");
    return {a, inverse(a, tol) * p};
}

// ---------------------------------------------------------------------------
// Quadratic factor pairings

namespace {

RealPoly quadratic_from_pair(std::complex<double> t1, std::complex<double> t2) {
    return RealPoly({(t1 * t2).real(), -(t1 + t2).real(), 1.0});
}

bool pair_is_real(std::complex<double> t1, std::complex<double> t2, double scale,
                  const Tolerance& tol) {
    // (t-t1)(t-t2) real <=> t1+t2 and t1*t2 real.
    return tol.is_zero(std::imag(t1 + t2), scale) &&
           tol.is_zero(std::imag(t1 * t2), scale * scale);
}

} // namespace

std::vector<std::pair<RealPoly, RealPoly>>
real_quadratic_factor_pairings(const std::vector<std::complex<double>>& roots,
                               const Tolerance& tol) {
    if (roots.size() != 4)
        throw DegreeMismatch("pairing requires exactly four roots");

    double scale = 1.0;
    for (auto r : roots) scale = std::max(scale, std::abs(r));

    // Conjugation closure: every root must have a conjugate partner.
    {
        std::vector<bool> used(4, false);
        for (int m = 0; m < 4; ++m) {
            if (used[m] || tol.is_zero(roots[m].imag(), scale)) continue;
            bool found = false;
            for (int n = 0; n < 4; ++n) {
                if (n == m || used[n]) continue;
                if (std::abs(roots[n] - std::conj(roots[m])) <= 1e3 * tol.threshold(scale)) {
                    used[m] = used[n] = true;
                    found = true;
                    break;
                }
            }
            if (!found)
                throw NotConjugationClosed("roots are not closed under complex conjugation");
        }
    }

    static const int splits[3][4] = {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}};
    std::vector<std::pair<RealPoly, RealPoly>> out;
    for (const auto& sp : splits) {
        const auto ta = roots[sp[0]], tb = roots[sp[1]];
        const auto tc = roots[sp[2]], td = roots[sp[3]];
        if (!pair_is_real(ta, tb, scale, tol) || !pair_is_real(tc, td, scale, tol)) continue;
        RealPoly m1 = quadratic_from_pair(ta, tb);
        RealPoly m2 = quadratic_from_pair(tc, td);
        // Canonical order inside the pairing and de-duplication across pairings.
        auto lex_less = [](const RealPoly& a, const RealPoly& b) {
            for (int l = 0; l < 3; ++l) {
                if (a[l] < b[l]) return true;
                if (a[l] > b[l]) return false;
            }
            return false;
        };
        if (lex_less(m2, m1)) std::swap(m1, m2);
        bool dup = false;
        const double thr = 1e3 * tol.threshold(scale * scale);
        for (const auto& [e1, e2] : out) {
            bool same = true;
            for (int l = 0; l < 3; ++l)
                if (std::abs(e1[l] - m1[l]) > thr || std::abs(e2[l] - m2[l]) > thr) same = false;
            if (same) { dup = true; break; }
        }
        if (!dup) out.emplace_back(std::move(m1), std::move(m2));
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        for (int l = 0; l < 3; ++l) {
            if (a.first[l] != b.first[l]) return a.first[l] < b.first[l];
        }
        return false;
    });
    return out;
}

} // namespace splitquat
