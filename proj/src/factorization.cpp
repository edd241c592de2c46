#include "splitquat/factorization.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "detail/smallmat.hpp"
#include "splitquat/verification.hpp"

namespace splitquat {

namespace {

constexpr double kRankThreshold = 1e-8;   // singular value ratio for dependence

double dot(const SplitQuaternion& a, const SplitQuaternion& b) {
    return a.w * b.w + a.x * b.x + a.y * b.y + a.z * b.z;
}

int coefficient_rank(const SplitQuaternion& u, const SplitQuaternion& v,
                     const SplitQuaternion& w) {
    double s = std::max({linf(u), linf(v), linf(w)});
    if (s == 0.0) return 0;
    const auto col = [s](const SplitQuaternion& h) {
        return detail::Vec4{h.w / s, h.x / s, h.y / s, h.z / s};
    };
    const auto sv = detail::singular_values_3({col(u), col(v), col(w)});
    int rank = 0;
    for (double sigma : sv)
        if (sigma > kRankThreshold * sv[0]) ++rank;
    return rank;
}

bool is_monic_linear(const Poly& f, const Tolerance& tol) {
    return f.degree(tol) == 1 && is_zero(f[1] - SplitQuaternion{1.0}, tol);
}

Witness make_witness(std::vector<Poly> factors) {
    Witness w;
    w.factors = std::move(factors);
    return w;
}

Witness witness_pair(const SplitQuaternion& h1, const SplitQuaternion& h2) {
    return make_witness({Poly::linear_monic(h1), Poly::linear_monic(h2)});
}

/// Fills unit/h1/h2/unit_pos from the factor list shape.
void derive_presentation(Witness& w, const Tolerance& tol) {
    const auto& f = w.factors;
    w.unit = SplitQuaternion{1.0};
    w.h1 = w.h2 = SplitQuaternion{};
    w.unit_pos = UnitPos::General;

    auto deg = [&](std::size_t m) { return f[m].degree(tol); };
    if (f.size() == 2 && is_monic_linear(f[0], tol) && is_monic_linear(f[1], tol)) {
        w.unit_pos = UnitPos::Left;
        w.h1 = -f[0][0];
        w.h2 = -f[1][0];
        return;
    }
    if (f.size() == 3) {
        if (deg(0) == 0 && is_monic_linear(f[1], tol) && is_monic_linear(f[2], tol)) {
            w.unit_pos = UnitPos::Left;
            w.unit = f[0][0];
            w.h1 = -f[1][0];
            w.h2 = -f[2][0];
            return;
        }
        if (is_monic_linear(f[0], tol) && deg(1) == 0 && is_monic_linear(f[2], tol)) {
            w.unit_pos = UnitPos::Middle;
            w.unit = f[1][0];
            w.h1 = -f[0][0];
            w.h2 = -f[2][0];
            return;
        }
        if (is_monic_linear(f[0], tol) && is_monic_linear(f[1], tol) && deg(2) == 0) {
            w.unit_pos = UnitPos::Right;
            w.unit = f[2][0];
            w.h1 = -f[0][0];
            w.h2 = -f[1][0];
            return;
        }
    }
    // General product of linear polynomials; report what is well defined.
    Poly prod = Poly::constant(SplitQuaternion{1.0});
    for (const auto& g : f) prod = prod * g;
    w.unit = prod.leading(tol);
    if (!f.empty() && is_monic_linear(f.back(), tol)) w.h2 = -f.back()[0];
}

void finalize_witnesses(std::vector<Witness>& ws, const Poly& target, const Tolerance& tol) {
    for (auto& w : ws) {
        derive_presentation(w, tol);
        w.residual = verify_product(target, w.factors).max_abs;
    }
}

/// Maps a factorization of P(t + s) back to one of P.
std::vector<Poly> shift_factors(const std::vector<Poly>& factors, double s) {
    std::vector<Poly> out;
    out.reserve(factors.size());
    for (const auto& f : factors) out.push_back(reparametrize(f, -s));
    return out;
}

void shift_witnesses(std::vector<Witness>& ws, double s) {
    if (s == 0.0) return;
    for (auto& w : ws) w.factors = shift_factors(w.factors, s);
}

void prepend_unit(std::vector<Witness>& ws, const SplitQuaternion& unit) {
    for (auto& w : ws)
        w.factors.insert(w.factors.begin(), Poly::constant(unit));
}

void dedupe_witnesses(std::vector<Witness>& ws, const Tolerance& tol) {
    std::vector<Witness> out;
    for (auto& w : ws) {
        bool dup = false;
        for (const auto& v : out) {
            if (v.factors.size() != w.factors.size()) continue;
            bool same = true;
            for (std::size_t m = 0; m < v.factors.size() && same; ++m) {
                const Poly d = v.factors[m] - w.factors[m];
                const double s = std::max(v.factors[m].scale(), w.factors[m].scale());
                if (d.scale() > tol.threshold(s)) same = false;
            }
            if (same) { dup = true; break; }
        }
        if (!dup) out.push_back(std::move(w));
    }
    ws = std::move(out);
    if (ws.size() > 16) ws.resize(16);
}

/// Newton refinement of an approximate right zero of a monic quadratic;
/// never returns a worse zero than the input.
SplitQuaternion refine_monic_zero(const Poly& p, const SplitQuaternion& x, const Tolerance&) {
    const double s = -p[1].w / 2.0;
    const Poly sh = reparametrize(p, s);
    const SplitQuaternion y = polish_zero(vector_part(sh[1]), sh[0], x - SplitQuaternion{s});
    const SplitQuaternion refined = y + SplitQuaternion{s};
    return linf(eval_right(p, refined)) <= linf(eval_right(p, x)) ? refined : x;
}

/// Same for a quadratic with arbitrary (possibly non-invertible) leading
/// coefficient: damped Newton on the right evaluation map.
SplitQuaternion refine_general_zero(const Poly& p, SplitQuaternion x) {
    const SplitQuaternion a = p[2], b = p[1];
    const SplitQuaternion basis[4] = {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
    SplitQuaternion best = x;
    double best_res = linf(eval_right(p, x));
    for (int iter = 0; iter < 25; ++iter) {
        detail::Mat4 jac;
        for (int k = 0; k < 4; ++k) {
            const SplitQuaternion col = a * (x * basis[k] + basis[k] * x) + b * basis[k];
            jac[0][static_cast<std::size_t>(k)] = col.w;
            jac[1][static_cast<std::size_t>(k)] = col.x;
            jac[2][static_cast<std::size_t>(k)] = col.y;
            jac[3][static_cast<std::size_t>(k)] = col.z;
        }
        const SplitQuaternion f = eval_right(p, x);
        detail::Vec4 rhs{-f.w, -f.x, -f.y, -f.z};
        auto step = detail::solve4(jac, rhs);
        if (!step) {
            for (int d = 0; d < 4; ++d) jac[static_cast<std::size_t>(d)][static_cast<std::size_t>(d)] += 1e-8;
            step = detail::solve4(jac, rhs);
            if (!step) break;
        }
        double eta = 1.0;
        bool improved = false;
        for (int halving = 0; halving < 20; ++halving) {
            const SplitQuaternion trial{x.w + eta * (*step)[0], x.x + eta * (*step)[1],
                                        x.y + eta * (*step)[2], x.z + eta * (*step)[3]};
            const double res = linf(eval_right(p, trial));
            if (res < best_res) {
                x = trial;
                best = trial;
                best_res = res;
                improved = true;
                break;
            }
            eta *= 0.5;
        }
        if (!improved) break;
    }
    return best;
}

std::pair<RealPoly, RealPoly> divmod_real(const RealPoly& num, const RealPoly& den,
                                          const Tolerance& tol) {
    const int dn = num.degree(tol), dd = den.degree(tol);
    if (dd < 0) throw std::invalid_argument("division by zero polynomial");
    std::vector<double> rem(num.coeffs);
    rem.resize(static_cast<std::size_t>(std::max(dn + 1, 1)), 0.0);
    if (dn < dd) return {RealPoly({0.0}), RealPoly(std::move(rem))};
    std::vector<double> quot(static_cast<std::size_t>(dn - dd + 1), 0.0);
    const double lead = den.coeffs[static_cast<std::size_t>(dd)];
    for (int l = dn - dd; l >= 0; --l) {
        const double q = rem[static_cast<std::size_t>(l + dd)] / lead;
        quot[static_cast<std::size_t>(l)] = q;
        for (int k = 0; k <= dd; ++k) rem[static_cast<std::size_t>(l + k)] -= q * den[static_cast<std::size_t>(k)];
    }
    return {RealPoly(std::move(quot)), RealPoly(std::move(rem))};
}

void push_value(Certificate& cert, const std::string& name, double v) {
    cert.predicate_values.emplace_back(name, v);
}

} // namespace

// ---------------------------------------------------------------------------
// enum names

const char* to_string(CaseLabel label) {
    switch (label) {
        case CaseLabel::RealPolynomial: return "RealPolynomial";
        case CaseLabel::BRealCNonreal: return "BRealCNonreal";
        case CaseLabel::DependentBNonreal: return "DependentBNonreal";
        case CaseLabel::Independent: return "Independent";
        case CaseLabel::NullNormDependent: return "NullNormDependent";
        case CaseLabel::NullNormIndependent: return "NullNormIndependent";
        case CaseLabel::NonInvertibleLeadReparametrized: return "NonInvertibleLeadReparametrized";
    }
    return "?";
}

const char* to_string(UnitPos pos) {
    switch (pos) {
        case UnitPos::Left: return "left";
        case UnitPos::Middle: return "middle";
        case UnitPos::Right: return "right";
        case UnitPos::General: return "general";
    }
    return "?";
}

const char* to_string(RemainderClass cls) {
    switch (cls) {
        case RemainderClass::UniqueRoot: return "UniqueRoot";
        case RemainderClass::NullLine: return "NullLine";
        case RemainderClass::DependentCoefficients: return "DependentCoefficients";
        case RemainderClass::Constant: return "Constant";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// t^2 + c0, real c0

RealZeroSet factor_monic_real(double c0, const Tolerance& tol) {
    RealZeroSet set;
    if (tol.is_zero(c0, std::abs(c0))) {
        set.shape = RealZeroSet::Shape::Cone;
        set.real_zeros = {0.0, 0.0};
        set.sample_zeros = {SplitQuaternion{0, 1, 1, 0}};
    } else if (c0 < 0) {
        set.shape = RealZeroSet::Shape::OneSheetHyperboloid;
        const double r = std::sqrt(-c0);
        set.real_zeros = {r, -r};
        set.sample_zeros = {SplitQuaternion{0, 0, r, 0}};
    } else {
        set.shape = RealZeroSet::Shape::TwoSheetHyperboloid;
        set.sample_zeros = {SplitQuaternion{0, std::sqrt(c0), 0, 0}};
    }
    return set;
}

// ---------------------------------------------------------------------------
// t^2 + c, nonreal c

FactorizationOutcome factor_monic_b_real(const SplitQuaternion& c, const FactorizeOptions& opts) {
    const Tolerance& tol = opts.tol;
    const double scale = linf(c);
    if (is_zero(vector_part(c), tol, scale))
        throw std::invalid_argument("constant coefficient must be nonreal");

    FactorizationOutcome out;
    out.label = CaseLabel::BRealCNonreal;
    const double ccbar = norm(c);
    const double vnorm = norm(vector_part(c));
    const double c0 = c.w;
    const double s2 = std::max(1.0, scale) * std::max(1.0, scale);

    push_value(out.certificate, "c_cbar", ccbar);
    push_value(out.certificate, "vec_c_norm", vnorm);
    push_value(out.certificate, "c0", c0);

    out.factorizable = vnorm > tol.threshold(s2) ||
                       (ccbar >= -tol.threshold(s2) && c0 < -tol.threshold(scale));
    if (!out.factorizable) {
        out.certificate.note =
            "no real x0 in the zero formula: requires norm(Vec c) > 0 or (norm(c) >= 0 and Sc c < 0)";
        return out;
    }

    const double root = std::sqrt(std::max(0.0, ccbar));
    auto witness_for = [&](double x0) {
        const SplitQuaternion x{x0, -c.x / (2 * x0), -c.y / (2 * x0), -c.z / (2 * x0)};
        return witness_pair(-x, x);
    };
    const double lead_sq = 0.5 * (-c0 + root);
    out.witnesses.push_back(witness_for(std::sqrt(lead_sq)));
    if (opts.enumerate_all) {
        const double other_sq = 0.5 * (-c0 - root);
        std::vector<double> values{-std::sqrt(lead_sq)};
        if (other_sq > tol.threshold(s2)) {
            values.push_back(std::sqrt(other_sq));
            values.push_back(-std::sqrt(other_sq));
        }
        for (double x0 : values) out.witnesses.push_back(witness_for(x0));
    }
    const Poly p = Poly::quadratic(SplitQuaternion{1.0}, SplitQuaternion{}, c);
    finalize_witnesses(out.witnesses, p, tol);
    out.residual = out.witnesses.front().residual;
    return out;
}

// ---------------------------------------------------------------------------
// t^2 + b t + lambda + mu b, vectorial nonreal b

FactorizationOutcome factor_monic_dependent(const SplitQuaternion& b, double lambda, double mu,
                                            const FactorizeOptions& opts) {
    const Tolerance& tol = opts.tol;
    const SplitQuaternion c = SplitQuaternion{lambda} + mu * b;
    const Poly p = Poly::quadratic(SplitQuaternion{1.0}, b, c);

    FactorizationOutcome out;
    out.label = CaseLabel::DependentBNonreal;
    out.certificate.decomposition.lambda = lambda;
    out.certificate.decomposition.mu = mu;

    const double bb = norm(b);
    const double sb = linf(b);
    const double thr_bb = tol.threshold(sb * sb);
    const double lm2 = lambda + mu * mu;
    const double thr_lm = tol.threshold(std::max(std::abs(lambda), mu * mu));

    push_value(out.certificate, "b_bbar", bb);
    push_value(out.certificate, "lambda", lambda);
    push_value(out.certificate, "mu", mu);
    push_value(out.certificate, "lambda_plus_mu_sq", lm2);

    const bool shortcut = std::abs(lm2) <= thr_lm;
    auto shortcut_witness = [&]() {
        // P = (t + mu)(t - mu + b)
        return witness_pair(SplitQuaternion{-mu}, SplitQuaternion{mu} - b);
    };
    auto generic_with = [&](const RealPoly& m) -> std::optional<Witness> {
        auto pq = factor_generic(p, m, tol);
        if (!pq) return std::nullopt;
        if (!out.certificate.chosen_M) out.certificate.chosen_M = m;
        return witness_pair(pq->first, pq->second);
    };

    if (bb > thr_bb) {
        out.factorizable = true;
        if (shortcut) out.witnesses.push_back(shortcut_witness());
        if (out.witnesses.empty() || opts.enumerate_all) {
            const auto n = norm_poly(p, tol);
            const auto roots = real_quartic_roots(n, tol);
            const auto pairings = real_quadratic_factor_pairings(roots, tol);
            const double accept = tol.threshold(p.scale());
            std::optional<Witness> best;
            double best_res = std::numeric_limits<double>::max();
            std::optional<RealPoly> best_m;
            bool accepted = false;
            for (const auto& [m1, m2] : pairings) {
                for (const RealPoly* m : {&m1, &m2}) {
                    auto pq = factor_generic(p, *m, tol);
                    if (!pq) continue;
                    Witness w = witness_pair(pq->first, pq->second);
                    if (opts.enumerate_all) {
                        if (!best_m) best_m = *m;
                        out.witnesses.push_back(std::move(w));
                        continue;
                    }
                    const double res = verify_product(p, w.factors).max_abs;
                    if (res < best_res) {
                        best = std::move(w);
                        best_res = res;
                        best_m = *m;
                    }
                    if (res <= accept) {
                        accepted = true;
                        break;
                    }
                }
                if (accepted) break;
            }
            if (!opts.enumerate_all) {
                if (!best)
                    throw InternalInconsistency("generic step failed with positive norm(b)");
                out.witnesses.push_back(std::move(*best));
            }
            if (best_m && !out.certificate.chosen_M) out.certificate.chosen_M = *best_m;
        }
    } else if (bb >= -thr_bb) {
        // norm(b) = 0
        if (shortcut) {
            out.factorizable = true;
            out.witnesses.push_back(shortcut_witness());
        } else if (lambda < -tol.threshold(std::abs(lambda))) {
            out.factorizable = true;
            const double sl = std::sqrt(-lambda);
            const SplitQuaternion h1 = SplitQuaternion{sl} - 0.5 * (1.0 + mu / sl) * b;
            const SplitQuaternion h2 = SplitQuaternion{-sl} - 0.5 * (1.0 - mu / sl) * b;
            out.witnesses.push_back(witness_pair(h1, h2));
        } else {
            out.factorizable = false;
            out.certificate.note = "norm(b) = 0 requires lambda + mu^2 = 0 or lambda < 0";
        }
    } else {
        // norm(b) < 0
        const double s = std::sqrt(-bb);
        const double gap = bb + 4 * lambda;
        const double mixed = 4 * mu * s;
        push_value(out.certificate, "b_bbar_plus_4lambda", gap);
        push_value(out.certificate, "four_mu_sqrt_minus_b_bbar", mixed);
        const double thr_gap = tol.threshold(std::max(std::abs(bb), 4 * std::abs(lambda)));
        const bool sandwich = gap <= thr_gap && mixed >= gap - thr_gap && mixed <= -gap + thr_gap;
        if (shortcut) {
            out.factorizable = true;
            out.witnesses.push_back(shortcut_witness());
        } else if (sandwich) {
            out.factorizable = true;
            // Real linear splitting of the norm polynomial; M is the product of
            // its outer factors.
            const double inner_plus = std::max(0.0, -gap + mixed);
            const double inner_minus = std::max(0.0, -gap - mixed);
            const double l1_root = 0.5 * (s + std::sqrt(inner_minus));     // L1 = t + ...
            const double l4_root = -0.5 * (s - std::sqrt(inner_plus));     // L4 = t + ...
            const RealPoly m = RealPoly({l1_root, 1.0}) * RealPoly({l4_root, 1.0});
            if (auto w = generic_with(m))
                out.witnesses.push_back(std::move(*w));
            else
                throw InternalInconsistency("splitting factor produced no unique zero");
        } else {
            out.factorizable = false;
            out.certificate.note =
                "norm(b) < 0 requires lambda + mu^2 = 0 or the splitting inequalities";
        }
    }

    if (out.factorizable) {
        finalize_witnesses(out.witnesses, p, tol);
        dedupe_witnesses(out.witnesses, tol);
        out.residual = out.witnesses.front().residual;
    }
    return out;
}

// ---------------------------------------------------------------------------
// generic factorization step

std::optional<std::pair<SplitQuaternion, SplitQuaternion>>
factor_generic(const Poly& p, const RealPoly& m, const Tolerance& tol) {
    const RealPoly n = norm_poly(p, tol);
    const auto [quot, rem] = divmod_real(n, m, tol);
    (void)quot;
    if (rem.degree(tol) >= 0 && rem.scale() > 1e3 * tol.threshold(n.scale()))
        throw MNotAFactor("quadratic is not a factor of the norm polynomial");

    const Poly r = (p - Poly(m)).trimmed(tol);
    if (r.degree(tol) <= 0) return std::nullopt;   // constant remainder

    const SplitQuaternion r1 = r[1], r0 = r[0];
    const SplitQuaternion b = p[1];
    if (!independent(r0, r1, tol)) {
        // R = r1 (t + rho): the real zero -rho works iff it is a zero of M.
        const double rho = dot(r0, r1) / dot(r1, r1);
        if (std::abs(m.eval(-rho)) <= 1e3 * tol.threshold(m.scale() * std::max(1.0, rho * rho))) {
            const SplitQuaternion h2{-rho};
            return std::make_pair(-b - h2, h2);
        }
        return std::nullopt;
    }
    if (is_null(r1, tol)) return std::nullopt;   // null line; no unique zero

    // Division by a nearly-null leading coefficient amplifies root noise;
    // polishing against the original polynomial restores the zero.
    SplitQuaternion h2 = -(inverse(r1, tol) * r0);
    h2 = refine_monic_zero(p, h2, tol);
    return std::make_pair(-b - h2, h2);
}

// ---------------------------------------------------------------------------
// remainder candidates

std::vector<RemainderInfo> remainder_candidates(const Poly& p, const Tolerance& tol) {
    const RealPoly n = norm_poly(p, tol);
    if (n.degree(tol) < 0)
        throw VanishingNormPolynomial("norm polynomial vanishes identically");
    if (p.degree(tol) != 2 || !is_zero(p[2] - SplitQuaternion{1.0}, tol))
        throw NotQuadratic("remainder machinery expects a monic quadratic");

    const auto roots = real_quartic_roots(n, tol);
    const auto pairings = real_quadratic_factor_pairings(roots, tol);

    std::vector<RealPoly> ms;
    for (const auto& [m1, m2] : pairings) {
        for (const RealPoly* m : {&m1, &m2}) {
            bool dup = false;
            for (const auto& e : ms) {
                if (std::abs(e[0] - (*m)[0]) <= 1e-9 * (1.0 + n.scale()) &&
                    std::abs(e[1] - (*m)[1]) <= 1e-9 * (1.0 + n.scale()))
                    dup = true;
            }
            if (!dup) ms.push_back(*m);
        }
    }
    std::sort(ms.begin(), ms.end(), [](const RealPoly& a, const RealPoly& b) {
        if (a[0] != b[0]) return a[0] < b[0];
        return a[1] < b[1];
    });

    std::vector<RemainderInfo> out;
    for (auto& m : ms) {
        RemainderInfo info;
        info.R = (p - Poly(m)).trimmed(tol);
        info.M = std::move(m);
        const int rd = info.R.degree(tol);
        if (rd <= 0) {
            info.cls = RemainderClass::Constant;
        } else {
            const SplitQuaternion r1 = info.R[1], r0 = info.R[0];
            if (!independent(r0, r1, tol)) {
                info.cls = RemainderClass::DependentCoefficients;
            } else if (!is_null(r1, tol)) {
                info.cls = RemainderClass::UniqueRoot;
            } else {
                info.cls = RemainderClass::NullLine;
                info.ruling = ruling_type(r0, r1, tol);
            }
        }
        out.push_back(std::move(info));
    }
    return out;
}

// ---------------------------------------------------------------------------
// common zero of t^2 + m and a right-ruling remainder

SplitQuaternion common_zero_on_null_remainder(double m, const Poly& r1_poly, const Tolerance& tol,
                                              std::pair<double, double>* lambda_mu) {
    const SplitQuaternion r1 = r1_poly[1], r0 = r1_poly[0];
    const SplitQuaternion i = SplitQuaternion::unit_i();

    // Particular solution of r1 x = -r0 on the division plane.
    const SplitQuaternion h = solve_division_plane(-r0, r1, DivisionSide::Right, tol).u;

    const double a11 = (-(r0 + conj(r0))).w;
    const double a12 = (i * r0 - conj(r0) * i).w;
    const double a21 = conj(r1).w;
    const double a22 = (conj(r1) * i).w;
    const double rhs1 = m - norm(h);
    const double rhs2 = -h.w;

    const double det_scale = std::max(1.0, linf(r0)) * std::max(1.0, linf(r1));
    const auto lm = detail::solve2(a11, a12, a21, a22, rhs1, rhs2, tol.threshold(det_scale));
    if (!lm)
        throw SingularSystem("positive parts of the remainder coefficients are dependent");
    if (lambda_mu) *lambda_mu = *lm;

    return h + lm->first * conj(r1) + lm->second * (conj(r1) * i);
}

// ---------------------------------------------------------------------------
// independent coefficients

std::pair<SplitQuaternion, SplitQuaternion>
factor_independent(const Poly& p, const Tolerance& tol, Certificate* cert) {
    const SplitQuaternion b = p[1], c = p[0];
    if (coefficient_rank(SplitQuaternion{1.0}, b, c) != 3)
        throw DependentCoefficientsError("coefficients 1, b, c are linearly dependent");

    const auto cands = remainder_candidates(p, tol);
    const double accept = tol.threshold(p.scale());

    // First admissible quadratic factor in pairing order; admissibility
    // includes the re-expansion residual since a nearly-null remainder lead
    // can leave the division-based zero badly conditioned.
    std::optional<std::pair<SplitQuaternion, SplitQuaternion>> best;
    double best_res = std::numeric_limits<double>::max();
    RealPoly best_m;
    for (const auto& cand : cands) {
        if (cand.cls != RemainderClass::UniqueRoot) continue;
        auto pq = factor_generic(p, cand.M, tol);
        if (!pq) continue;
        const double res =
            verify_product(p, {Poly::linear_monic(pq->first), Poly::linear_monic(pq->second)})
                .max_abs;
        if (res < best_res) {
            best = pq;
            best_res = res;
            best_m = cand.M;
        }
        if (res <= accept) break;
    }
    if (best && best_res <= accept) {
        if (cert) cert->chosen_M = best_m;
        return *best;
    }

    for (const auto& cand : cands) {
        if (cand.cls != RemainderClass::NullLine || cand.ruling != RulingClass::RightRuling)
            continue;
        // Shift so the chosen quadratic factor has zero linear coefficient.
        const double s = -cand.M[1] / 2.0;
        const double m = reparametrize(cand.M, s)[0];
        const Poly r_shifted = reparametrize(cand.R, s);
        std::pair<double, double> lm;
        const SplitQuaternion x = common_zero_on_null_remainder(m, r_shifted, tol, &lm);
        const SplitQuaternion h2 = x + SplitQuaternion{s};
        if (cert) {
            cert->chosen_M = cand.M;
            cert->common_zero_lambda_mu = lm;
            cert->decomposition.m = m;
        }
        return {-b - h2, h2};
    }

    // Remainders that are almost rulings: run the common-zero construction at
    // a loosened tolerance and polish the result on the original polynomial.
    Tolerance loose;
    loose.eps = 1e-4;
    for (const auto& cand : cands) {
        if (cand.cls != RemainderClass::UniqueRoot) continue;
        const SplitQuaternion r1 = cand.R[1];
        if (std::abs(norm(r1)) > 1e-4 * linf(r1) * linf(r1)) continue;
        try {
            if (ruling_type(cand.R[0], r1, loose) != RulingClass::RightRuling) continue;
            const double s = -cand.M[1] / 2.0;
            const double m = reparametrize(cand.M, s)[0];
            std::pair<double, double> lm;
            const SplitQuaternion x =
                common_zero_on_null_remainder(m, reparametrize(cand.R, s), loose, &lm);
            const SplitQuaternion h2 = refine_monic_zero(p, x + SplitQuaternion{s}, tol);
            const double res = verify_product(p, {Poly::linear_monic(-b - h2),
                                                  Poly::linear_monic(h2)})
                                   .max_abs;
            if (res < best_res) {
                best = std::make_pair(-b - h2, h2);
                best_res = res;
                best_m = cand.M;
                if (cert) {
                    cert->common_zero_lambda_mu = lm;
                    cert->decomposition.m = m;
                }
            }
        } catch (const std::exception&) {
        }
    }
    if (best) {
        if (cert) cert->chosen_M = best_m;
        return *best;
    }
    throw InternalInconsistency("independent coefficients but no admissible remainder");
}

// ---------------------------------------------------------------------------
// vanishing norm polynomial

namespace {

/// Factorization of the monic polynomial t^2 + beta t + u; the right-ruling
/// cases below call it with u from the division plane, canonically in the
/// subring spanned by {1, i} but off it on the enumeration grid.
/// Returns monic factor pairs (g1, g2).
std::vector<std::pair<SplitQuaternion, SplitQuaternion>>
factor_positive_subring(double beta, const SplitQuaternion& u, const FactorizeOptions& opts,
                        Certificate* cert) {
    const Tolerance& tol = opts.tol;
    const double shift = -beta / 2.0;
    const SplitQuaternion u_shifted = u + SplitQuaternion{shift * shift + beta * shift};

    std::vector<std::pair<SplitQuaternion, SplitQuaternion>> out;
    if (is_zero(vector_part(u_shifted), tol, linf(u_shifted))) {
        const auto set = factor_monic_real(u_shifted.w, tol);
        if (!set.real_zeros.empty()) {
            out.emplace_back(SplitQuaternion{set.real_zeros[1]}, SplitQuaternion{set.real_zeros[0]});
        }
        for (const auto& z : set.sample_zeros) out.emplace_back(-z, z);
        if (cert) push_value(*cert, "real_constant", u_shifted.w);
    } else {
        FactorizeOptions sub = opts;
        auto inner = factor_monic_b_real(u_shifted, sub);
        if (!inner.factorizable)
            throw InternalInconsistency("positive-subring quadratic must factor");
        for (const auto& w : inner.witnesses) out.emplace_back(w.h1, w.h2);
    }
    for (auto& [g1, g2] : out) {
        g1 += SplitQuaternion{shift};
        g2 += SplitQuaternion{shift};
    }
    if (!opts.enumerate_all && out.size() > 1) out.resize(1);
    return out;
}

/// Factor pairs (g1, g2) with Q = A (t - g1)(t - g2) for Q = A t^2 + B t + C
/// whose coefficient points lie on a right ruling through [A].
std::vector<std::pair<SplitQuaternion, SplitQuaternion>>
factor_on_right_ruling(const Poly& q, const FactorizeOptions& opts, Certificate* cert) {
    const Tolerance& tol = opts.tol;
    const SplitQuaternion a = q[2], b = q[1], c = q[0];
    const double scale = q.scale();

    const bool b_zero = is_zero(b, tol, scale);
    const bool c_zero = is_zero(c, tol, scale);

    auto division_offsets = [&]() {
        std::vector<std::pair<double, double>> grid{{0.0, 0.0}};
        if (opts.enumerate_all)
            for (double lam : {1.0, -1.0})
                for (double mu : {0.0, 1.0, -1.0}) grid.emplace_back(lam, mu);
        return grid;
    };

    std::vector<std::pair<SplitQuaternion, SplitQuaternion>> out;
    if (b_zero && (c_zero || projectively_equal(c, a, tol))) {
        // Q = a (t^2 + gamma), gamma real.
        const double gamma = c_zero ? 0.0 : dot(c, a) / dot(a, a);
        if (cert) {
            cert->note = "vanishing norm, dependent: real polynomial under the unit";
            push_value(*cert, "gamma", gamma);
        }
        out = factor_positive_subring(0.0, SplitQuaternion{gamma}, opts, cert);
    } else if (b_zero) {
        // Q = a (t^2 + h) with c = a h; h from the division plane.
        const auto plane = solve_division_plane(c, a, DivisionSide::Right, tol);
        if (cert) cert->note = "vanishing norm, dependent: constant transported off the ruling";
        for (const auto& [lam, mu] : division_offsets()) {
            const SplitQuaternion h = plane.u + lam * plane.basis.first + mu * plane.basis.second;
            if (is_zero(vector_part(h), tol, linf(h)) ||
                norm(vector_part(h)) <= tol.threshold(linf(h) * linf(h))) {
                if (lam != 0.0 || mu != 0.0) continue;   // canonical choice must work
            }
            try {
                auto pairs = factor_positive_subring(0.0, h, opts, cert);
                out.insert(out.end(), pairs.begin(), pairs.end());
            } catch (const InternalInconsistency&) {
                if (lam == 0.0 && mu == 0.0) throw;
            }
        }
    } else if (projectively_equal(b, a, tol)) {
        // Q = a (t^2 + alpha t + h) with b = alpha a, c = a h.
        const double alpha = dot(b, a) / dot(a, a);
        SplitQuaternion h{};
        if (!c_zero) h = solve_division_plane(c, a, DivisionSide::Right, tol).u;
        if (cert) {
            cert->note = "vanishing norm, dependent: linear coefficient parallel to the lead";
            cert->decomposition.alpha = alpha;
        }
        out = factor_positive_subring(alpha, h, opts, cert);
    } else {
        // Q = a (t^2 + h t + alpha + beta h) with b = a h, c = alpha a + beta b.
        const SplitQuaternion h = solve_division_plane(b, a, DivisionSide::Right, tol).u;
        double alpha = 0.0, beta = 0.0;
        if (!c_zero) {
            const double gaa = dot(a, a), gab = dot(a, b), gbb = dot(b, b);
            const auto ab = detail::solve2(gaa, gab, gab, gbb, dot(a, c), dot(b, c),
                                           1e-14 * std::max(1.0, gaa * gbb));
            if (!ab) throw InternalInconsistency("dependent decomposition is singular");
            alpha = ab->first;
            beta = ab->second;
        }
        const SplitQuaternion cc = SplitQuaternion{alpha} + beta * h;
        if (cert) {
            cert->note = "vanishing norm, dependent: generic right-ruling layout";
            cert->decomposition.alpha = alpha;
            cert->decomposition.beta = beta;
        }
        // Kill the scalar part of h, then the dependent machinery applies with
        // norm(Vec h) > 0.
        const double shift = -h.w / 2.0;
        const SplitQuaternion b2 = vector_part(h);
        const SplitQuaternion c2 = cc + SplitQuaternion{shift * shift} + shift * h;
        if (std::abs(c2.y) + std::abs(c2.z) > 1e3 * tol.threshold(linf(c2)))
            throw InternalInconsistency("shifted constant left the positive subring");
        const double lambda = c2.w;
        const double mu = c2.x / b2.x;
        FactorizeOptions sub = opts;
        auto inner = factor_monic_dependent(b2, lambda, mu, sub);
        if (!inner.factorizable)
            throw InternalInconsistency("positive norm(b) branch must factor");
        for (const auto& w : inner.witnesses)
            out.emplace_back(w.h1 + SplitQuaternion{shift}, w.h2 + SplitQuaternion{shift});
    }
    if (out.empty()) throw InternalInconsistency("right-ruling case produced no factor pair");
    return out;
}

} // namespace

FactorizationOutcome factorize_null_norm(const Poly& p, const FactorizeOptions& opts) {
    const Tolerance& tol = opts.tol;
    if (p.degree(tol) != 2) throw NotQuadratic("expected a quadratic polynomial");
    const SplitQuaternion a = p[2], b = p[1], c = p[0];
    if (linf(a) == 0.0) throw ZeroLeadingCoefficient("leading coefficient vanishes");
    const RealPoly n = norm_poly(p, tol);
    if (n.degree(tol) >= 0) throw NormPolyNotZero("norm polynomial does not vanish");

    FactorizationOutcome out;
    out.certificate.norm_poly = RealPoly({0, 0, 0, 0, 0});
    const double scale = p.scale();

    if (coefficient_rank(a, b, c) == 3) {
        out.label = CaseLabel::NullNormIndependent;
        out.factorizable = true;
        if (is_null(b, tol))
            throw InternalInconsistency("independent vanishing-norm with non-invertible b");

        const SplitQuaternion h2 = -(inverse(b, tol) * c);
        const SplitQuaternion w = b + a * h2;
        out.certificate.note = "vanishing norm, independent: -b^{-1} c is a right zero";
        push_value(out.certificate, "zero_w", h2.w);
        push_value(out.certificate, "zero_x", h2.x);
        push_value(out.certificate, "zero_y", h2.y);
        push_value(out.certificate, "zero_z", h2.z);

        if (is_zero(w, tol, scale)) {
            out.witnesses.push_back(make_witness(
                {Poly::linear_monic(SplitQuaternion{}), Poly::constant(a), Poly::linear_monic(h2)}));
        } else {
            const auto plane = solve_division_plane(-w, a, DivisionSide::Left, tol);
            std::vector<std::pair<double, double>> grid{{0.0, 0.0}};
            if (opts.enumerate_all)
                for (double lam : {1.0, -1.0})
                    for (double mu : {0.0, 1.0, -1.0}) grid.emplace_back(lam, mu);
            for (const auto& [lam, mu] : grid) {
                const SplitQuaternion h1 =
                    plane.u + lam * plane.basis.first + mu * plane.basis.second;
                out.witnesses.push_back(make_witness(
                    {Poly::linear_monic(h1), Poly::constant(a), Poly::linear_monic(h2)}));
            }
        }
    } else {
        out.label = CaseLabel::NullNormDependent;
        out.factorizable = true;

        const double pscale = std::max(1.0, linf(a)) * std::max(1.0, scale);
        const bool b_zero = is_zero(b, tol, scale);
        const bool c_zero = is_zero(c, tol, scale);
        const bool right = (b_zero || is_zero(conj(a) * b, tol, pscale)) &&
                           (c_zero || is_zero(conj(a) * c, tol, pscale));
        const bool left = (b_zero || is_zero(b * conj(a), tol, pscale)) &&
                          (c_zero || is_zero(c * conj(a), tol, pscale));
        if (!right && !left)
            throw InternalInconsistency("dependent vanishing-norm coefficients span no ruling");

        if (right) {
            for (const auto& [g1, g2] : factor_on_right_ruling(p, opts, &out.certificate))
                out.witnesses.push_back(make_witness(
                    {Poly::constant(a), Poly::linear_monic(g1), Poly::linear_monic(g2)}));
        } else {
            const Poly q = conj_poly(p);
            for (const auto& [g1, g2] : factor_on_right_ruling(q, opts, &out.certificate))
                out.witnesses.push_back(make_witness({Poly::linear_monic(conj(g2)),
                                                      Poly::linear_monic(conj(g1)),
                                                      Poly::constant(a)}));
            out.certificate.note += " (conjugate flip applied: left ruling)";
        }
    }

    finalize_witnesses(out.witnesses, p, tol);
    // Enumerated grid entries whose construction left the validity region are
    // dropped; the canonical witness always stays.
    if (out.witnesses.size() > 1) {
        const double keep = 1e3 * tol.threshold(p.scale());
        std::vector<Witness> kept;
        kept.push_back(out.witnesses.front());
        for (std::size_t m = 1; m < out.witnesses.size(); ++m)
            if (out.witnesses[m].residual <= keep) kept.push_back(std::move(out.witnesses[m]));
        out.witnesses = std::move(kept);
    }
    dedupe_witnesses(out.witnesses, tol);
    out.residual = out.witnesses.front().residual;
    return out;
}

// ---------------------------------------------------------------------------
// dispatcher

namespace {

/// Monic dispatch; witnesses are factor lists for the monic polynomial.
FactorizationOutcome factorize_monic(const Poly& p, const FactorizeOptions& opts) {
    const Tolerance& tol = opts.tol;
    const SplitQuaternion b = p[1], c = p[0];
    const double scale = p.scale();

    const bool b_real = is_zero(vector_part(b), tol, scale);
    const bool c_real = is_zero(vector_part(c), tol, scale);

    if (!b_real && coefficient_rank(SplitQuaternion{1.0}, b, c) == 3) {
        FactorizationOutcome out;
        out.label = CaseLabel::Independent;
        out.factorizable = true;
        auto pq = factor_independent(p, tol, &out.certificate);
        out.witnesses.push_back(witness_pair(pq.first, pq.second));
        if (opts.enumerate_all) {
            const auto cands = remainder_candidates(p, tol);
            for (const auto& cand : cands) {
                if (cand.cls == RemainderClass::UniqueRoot) {
                    if (auto extra = factor_generic(p, cand.M, tol))
                        out.witnesses.push_back(witness_pair(extra->first, extra->second));
                } else if (cand.cls == RemainderClass::NullLine &&
                           cand.ruling == RulingClass::RightRuling) {
                    const double s = -cand.M[1] / 2.0;
                    const double m = reparametrize(cand.M, s)[0];
                    const SplitQuaternion x =
                        common_zero_on_null_remainder(m, reparametrize(cand.R, s), tol);
                    const SplitQuaternion h2 = x + SplitQuaternion{s};
                    out.witnesses.push_back(witness_pair(-b - h2, h2));
                }
            }
        }
        return out;
    }

    // Dependent coefficients: kill the scalar part of b first.
    const double s = -b.w / 2.0;
    const Poly ps = reparametrize(p, s);
    const SplitQuaternion bs = ps[1], cs = ps[0];

    FactorizationOutcome out;
    if (b_real && c_real) {
        out.label = CaseLabel::RealPolynomial;
        out.factorizable = true;
        const double c0 = cs.w;
        const auto set = factor_monic_real(c0, tol);
        push_value(out.certificate, "c0", c0);
        out.certificate.note = set.shape == RealZeroSet::Shape::OneSheetHyperboloid
                                   ? "vectorial zeros form a one-sheet hyperboloid"
                               : set.shape == RealZeroSet::Shape::Cone
                                   ? "vectorial zeros form a cone"
                                   : "vectorial zeros form a two-sheet hyperboloid";
        if (!set.real_zeros.empty())
            out.witnesses.push_back(witness_pair(SplitQuaternion{set.real_zeros[1]},
                                                 SplitQuaternion{set.real_zeros[0]}));
        for (const auto& z : set.sample_zeros) {
            if (!out.witnesses.empty() && !opts.enumerate_all) break;
            out.witnesses.push_back(witness_pair(-z, z));
        }
    } else if (b_real) {
        FactorizeOptions sub = opts;
        out = factor_monic_b_real(cs, sub);
    } else {
        // c = lambda + mu b in the shifted frame.
        const SplitQuaternion vb = vector_part(bs);
        const double lambda = cs.w;
        const double mu = dot(vector_part(cs), vb) / dot(vb, vb);
        const SplitQuaternion resid = cs - SplitQuaternion{lambda} - mu * vb;
        if (linf(resid) > 1e5 * tol.threshold(scale))
            throw InternalInconsistency("rank decision contradicts the lambda/mu decomposition");
        FactorizeOptions sub = opts;
        out = factor_monic_dependent(vb, lambda, mu, sub);
    }

    shift_witnesses(out.witnesses, s);
    if (s != 0.0) out.certificate.reparametrization_shift = s;
    return out;
}

FactorizationOutcome factorize_noninvertible(const Poly& p, const RealPoly& n,
                                             const FactorizeOptions& opts) {
    const Tolerance& tol = opts.tol;
    const double scale = p.scale();
    const double thr = tol.eps * std::pow(std::max(1.0, scale), 4);

    double s = 0.0;
    bool found = false;
    for (double cand : {0.0, 1.0, -1.0, 2.0, -2.0, 3.0, -3.0, 4.0, -4.0, 5.0, -5.0}) {
        if (std::abs(n.eval(cand)) > thr) {
            s = cand;
            found = true;
            break;
        }
    }
    if (!found)
        throw InternalInconsistency("no parameter with invertible curve point found");

    // Shift so the constant coefficient is invertible, then reverse the
    // coefficients: Q(t) = t^2 P(s + 1/t) has invertible leading coefficient.
    const Poly ps = reparametrize(p, s);
    const Poly q(std::vector<SplitQuaternion>{ps[2], ps[1], ps[0]});

    FactorizeOptions sub = opts;
    sub.enumerate_all = true;   // needed to pick the best-shaped mapping below
    FactorizationOutcome inner = factorize(q, sub);

    FactorizationOutcome out;
    out.label = CaseLabel::NonInvertibleLeadReparametrized;
    out.certificate = inner.certificate;
    out.certificate.reparametrization_shift = s;
    out.certificate.note = std::string("leading coefficient on the null cone; handled via t -> ") +
                           (s == 0.0 ? "1/t" : "s + 1/t") +
                           " (inner case: " + to_string(inner.label) + ")";
    out.certificate.norm_poly = n;
    out.certificate.remainders.clear();
    out.factorizable = inner.factorizable;
    if (!inner.factorizable) return out;

    const SplitQuaternion a = p[2];
    // Prefer inner witnesses whose right zero is invertible: they map to a
    // product (a t + w)(t - h2).
    std::stable_sort(inner.witnesses.begin(), inner.witnesses.end(),
                     [&](const Witness& lhs, const Witness& rhs) {
                         auto quality = [&](const Witness& w) {
                             if (w.unit_pos != UnitPos::Left) return 3;
                             if (!is_null(w.h2, tol)) return 0;
                             if (!is_null(w.h1, tol)) return 1;
                             return 2;
                         };
                         return quality(lhs) < quality(rhs);
                     });

    for (const auto& iw : inner.witnesses) {
        if (iw.unit_pos != UnitPos::Left) continue;
        const SplitQuaternion u = iw.unit, g1 = iw.h1, g2 = iw.h2;
        Witness w;
        if (!is_null(g2, tol)) {
            // P = (a t + w')(t - h2) with h2 = g2^{-1} + s and w' = b + a h2
            // from synthetic right division; the mapped zero is polished on
            // the original polynomial before the cofactor is formed.
            const SplitQuaternion h2 =
                refine_general_zero(p, inverse(g2, tol) + SplitQuaternion{s});
            const SplitQuaternion wp = p[1] + a * h2;
            if (is_zero(wp * conj(a), tol, std::max(1.0, linf(wp)) * std::max(1.0, linf(a)))) {
                // w' lies in the image of right multiplication by a: the
                // constant can be isolated between two monic factors.
                const SplitQuaternion h1 =
                    is_zero(wp, tol, scale)
                        ? SplitQuaternion{}
                        : solve_division_plane(-wp, a, DivisionSide::Left, tol).u;
                w = make_witness({Poly::linear_monic(h1), Poly::constant(a), Poly::linear_monic(h2)});
            } else {
                w = make_witness({Poly(std::vector<SplitQuaternion>{wp, a}), Poly::linear_monic(h2)});
            }
        } else if (!is_null(g1, tol)) {
            // P = (-u g1)(t - h1)(1 - g2 (t - s)).
            const SplitQuaternion h1 = inverse(g1, tol) + SplitQuaternion{s};
            const Poly l2(std::vector<SplitQuaternion>{SplitQuaternion{1.0} + s * g2, -g2});
            w = make_witness({Poly::constant(-(u * g1)), Poly::linear_monic(h1), l2});
        } else {
            const Poly l1(std::vector<SplitQuaternion>{u + s * (u * g1), -(u * g1)});
            const Poly l2(std::vector<SplitQuaternion>{SplitQuaternion{1.0} + s * g2, -g2});
            w = make_witness({l1, l2});
        }
        out.witnesses.push_back(std::move(w));
        if (!opts.enumerate_all && !out.witnesses.empty()) break;
    }
    if (out.witnesses.empty())
        throw InternalInconsistency("no mappable witness from the reversed polynomial");
    return out;
}

void attach_geometry(FactorizationOutcome& out, const Poly& p, const FactorizeOptions& opts) {
    const Tolerance& tol = opts.tol;
    const SplitQuaternion a = p[2], b = p[1], c = p[0];
    if (coefficient_rank(a, b, c) != 2) return;

    try {
        const auto seg = segment_null_intersections(p, tol);
        out.certificate.segment_intersections = seg.count;
    } catch (const VanishingNormPolynomial&) {
        return;
    }
    // Two independent vectors spanning the coefficient plane.
    const SplitQuaternion* best_p = nullptr;
    const SplitQuaternion* best_q = nullptr;
    const SplitQuaternion* list[3] = {&a, &b, &c};
    for (int m = 0; m < 3 && !best_p; ++m)
        for (int l = m + 1; l < 3 && !best_p; ++l)
            if (independent(*list[m], *list[l], tol)) {
                best_p = list[m];
                best_q = list[l];
            }
    if (!best_p) return;
    const auto count = line_null_intersections({{*best_p}, {*best_q}}, tol);
    if (count)
        out.certificate.line_intersections = *count;
    else
        out.certificate.line_on_quadric = true;
}

} // namespace

namespace {

FactorizationOutcome factorize_core(const Poly& p, const FactorizeOptions& opts) {
    const Tolerance& tol = opts.tol;
    const RealPoly n = norm_poly(p, tol);

    FactorizationOutcome out;
    if (n.degree(tol) < 0) {
        out = factorize_null_norm(p, opts);
    } else if (is_null(p[2], tol)) {
        out = factorize_noninvertible(p, n, opts);
        out.certificate.norm_poly = n;
        if (n.degree(tol) >= 1) {
            try {
                out.certificate.quartic_roots = polynomial_roots(n, tol);
            } catch (const DegreeMismatch&) {
            }
        }
    } else {
        auto [unit, monic] = monic_reduce(p, tol);
        out = factorize_monic(monic, opts);
        prepend_unit(out.witnesses, unit);
        out.certificate.norm_poly = n;
        const RealPoly nm = norm_poly(monic, tol);
        out.certificate.quartic_roots = real_quartic_roots(nm, tol);
        try {
            out.certificate.remainders = remainder_candidates(monic, tol);
        } catch (const VanishingNormPolynomial&) {
        }
    }

    attach_geometry(out, p, opts);

    if (out.factorizable) {
        finalize_witnesses(out.witnesses, p, tol);
        dedupe_witnesses(out.witnesses, tol);
        out.residual = out.witnesses.front().residual;
    }
    return out;
}

} // namespace

FactorizationOutcome factorize(const Poly& p_in, const FactorizeOptions& opts) {
    const Tolerance& tol = opts.tol;

    // The zero-test policy floors scales at 1, so inputs far from unit
    // magnitude are normalized before anything else (including the degree
    // decision); a real rescaling commutes with everything and only touches
    // the constant factor of each witness.
    const double input_scale = p_in.scale();
    if (input_scale == 0.0) throw NotQuadratic("factorization requires a quadratic polynomial");
    if (input_scale > 0.5 && input_scale < 2.0) {
        const Poly p = p_in.trimmed(tol);
        if (p.degree(tol) != 2) throw NotQuadratic("factorization requires a quadratic polynomial");
        return factorize_core(p, opts);
    }

    const Poly scaled = (SplitQuaternion{1.0 / input_scale} * p_in).trimmed(tol);
    if (scaled.degree(tol) != 2) throw NotQuadratic("factorization requires a quadratic polynomial");
    const Poly p = SplitQuaternion{input_scale} * scaled;
    FactorizationOutcome out = factorize_core(scaled, opts);

    for (auto& w : out.witnesses) {
        bool applied = false;
        for (auto& f : w.factors) {
            if (f.degree(tol) == 0) {
                f = f * SplitQuaternion{input_scale};
                applied = true;
                break;
            }
        }
        if (!applied)
            w.factors.insert(w.factors.begin(), Poly::constant(SplitQuaternion{input_scale}));
    }
    // The certificate's monic-reduction data is scale-invariant; the norm
    // polynomial of the input picks up the square of the factor.
    out.certificate.norm_poly =
        out.certificate.norm_poly * (input_scale * input_scale);

    if (out.factorizable) {
        finalize_witnesses(out.witnesses, p, tol);
        dedupe_witnesses(out.witnesses, tol);
        out.residual = out.witnesses.front().residual;
    }
    return out;
}

} // namespace splitquat
