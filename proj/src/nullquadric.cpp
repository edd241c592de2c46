#include "splitquat/nullquadric.hpp"

#include <algorithm>
#include <cmath>

namespace splitquat {

const char* to_string(RulingClass rc) {
    switch (rc) {
        case RulingClass::LeftRuling: return "LeftRuling";
        case RulingClass::RightRuling: return "RightRuling";
        case RulingClass::NotNull: return "NotNull";
        case RulingClass::NullButSinglePoint: return "NullButSinglePoint";
    }
    return "?";
}

bool projectively_equal(const SplitQuaternion& a, const SplitQuaternion& b,
                        const Tolerance& tol) {
    const double sa = linf(a), sb = linf(b);
    const double thr = tol.threshold(std::max(sa, 1e-30) * std::max(sb, 1e-30));
    const double ca[4] = {a.w, a.x, a.y, a.z};
    const double cb[4] = {b.w, b.x, b.y, b.z};
    for (int m = 0; m < 4; ++m)
        for (int n = m + 1; n < 4; ++n)
            if (std::abs(ca[m] * cb[n] - ca[n] * cb[m]) > thr) return false;
    return true;
}

bool independent(const SplitQuaternion& a, const SplitQuaternion& b, const Tolerance& tol) {
    if (linf(a) == 0.0 || linf(b) == 0.0) return false;
    return !projectively_equal(a, b, tol);
}

bool on_null_quadric(const SplitQuaternion& h, const Tolerance& tol) {
    if (linf(h) == 0.0) throw ZeroVector("projective point needs a nonzero representative");
    return is_null(h, tol);
}

bool is_null_line(const SplitQuaternion& r0, const SplitQuaternion& r1, const Tolerance& tol) {
    if (!independent(r0, r1, tol)) throw DependentInput("representatives span no line");
    const double s0 = linf(r0), s1 = linf(r1);
    return tol.is_zero(bilinear_q(r0, r0), s0 * s0) &&
           tol.is_zero(bilinear_q(r0, r1), s0 * s1) &&
           tol.is_zero(bilinear_q(r1, r1), s1 * s1);
}

RulingClass ruling_type(const SplitQuaternion& r0, const SplitQuaternion& r1,
                        const Tolerance& tol) {
    if (!independent(r0, r1, tol)) throw DependentInput("representatives span no line");
    if (!is_null_line(r0, r1, tol)) return RulingClass::NotNull;

    const double s = std::max(1.0, linf(r0)) * std::max(1.0, linf(r1));
    // Test both orders of both products; an actual ruling passes exactly one pair.
    const bool right = is_zero(conj(r1) * r0, tol, s) && is_zero(conj(r0) * r1, tol, s);
    const bool left = is_zero(r0 * conj(r1), tol, s) && is_zero(r1 * conj(r0), tol, s);
    if (right && left) return RulingClass::NullButSinglePoint;
    if (right) return RulingClass::RightRuling;
    if (left) return RulingClass::LeftRuling;
    // A null line is one of the two rulings; numerically ambiguous input only.
    return RulingClass::NullButSinglePoint;
}

DivisionPlane solve_division_plane(const SplitQuaternion& g, const SplitQuaternion& h,
                                   DivisionSide side, const Tolerance& tol) {
    if (linf(h) == 0.0 || linf(g) == 0.0)
        throw ZeroVector("division plane needs nonzero h and g");

    const SplitQuaternion hpos{h.w, h.x, 0.0, 0.0};   // positive part h0 + h1 i
    const SplitQuaternion gpos{g.w, g.x, 0.0, 0.0};
    if (is_null(hpos, tol))
        throw WrongRuling("positive part of h vanishes; h is not a usable null element");

    DivisionPlane plane;
    const SplitQuaternion hb = conj(h);
    const SplitQuaternion i = SplitQuaternion::unit_i();
    if (side == DivisionSide::Left) {
        plane.u = gpos * inverse(hpos, tol);
        plane.basis = {hb, i * hb};
    } else {
        plane.u = inverse(hpos, tol) * gpos;
        plane.basis = {hb, hb * i};
    }

    const SplitQuaternion residual =
        (side == DivisionSide::Left) ? plane.u * h - g : h * plane.u - g;
    const double s = std::max(1.0, linf(plane.u)) * std::max(1.0, linf(h)) +
                     linf(g);
    if (linf(residual) > 1e3 * tol.threshold(s))
        throw WrongRuling("[h] v [g] is not a ruling of the required family");
    return plane;
}

SegmentIntersections segment_null_intersections(const Poly& p, const Tolerance& tol) {
    const RealPoly n = norm_poly(p, tol);
    if (n.degree(tol) < 0)
        throw VanishingNormPolynomial("curve lies on the null quadric");

    SegmentIntersections result;
    struct CurvePoint {
        SplitQuaternion value;
        bool base = false;   // evaluation vanished: no projective class
    };
    std::vector<CurvePoint> points;

    const int nd = n.degree(tol);
    if (nd >= 1) {
        for (const auto& root : polynomial_roots(n, tol)) {
            if (root.imag() != 0.0) continue;
            const double t = root.real();
            if (std::find_if(result.parameters.begin(), result.parameters.end(),
                             [&](double u) {
                                 return std::abs(u - t) <= 1e-6 * (1.0 + std::abs(t));
                             }) != result.parameters.end())
                continue;
            result.parameters.push_back(t);
            // A vanishing evaluation marks a real zero of the polynomial; the
            // threshold absorbs the eps^(1/m) noise of repeated norm roots.
            const double base_thr = std::sqrt(tol.eps) * std::max(1.0, p.scale()) * (1.0 + t * t);
            const SplitQuaternion value = eval_real(p, t);
            points.push_back({value, linf(value) <= base_thr});
        }
    }
    if (nd < 2 * p.degree(tol)) {
        // Norm polynomial drops degree: the point at infinity (leading
        // coefficient) lies on the quadric.
        result.at_infinity = true;
        points.push_back({p.leading(tol), false});
    }

    // Merge coincident curve points reached at distinct parameters.
    std::vector<SplitQuaternion> distinct;
    int base_points = 0;
    for (const auto& pt : points) {
        if (pt.base) {
            ++base_points;   // counted individually
            continue;
        }
        bool seen = false;
        for (const auto& q : distinct)
            if (projectively_equal(pt.value, q, tol)) {
                seen = true;
                break;
            }
        if (!seen) distinct.push_back(pt.value);
    }
    result.count = static_cast<int>(distinct.size()) + base_points;
    return result;
}

std::optional<int> line_null_intersections(const ProjectiveLine& line, const Tolerance& tol) {
    const SplitQuaternion& p = line.p.rep;
    const SplitQuaternion& q = line.q.rep;
    if (!independent(p, q, tol)) throw DependentInput("degenerate projective line");

    const double sp = linf(p), sq = linf(q);
    const double qpp = bilinear_q(p, p), qpq = bilinear_q(p, q), qqq = bilinear_q(q, q);
    if (tol.is_zero(qpp, sp * sp) && tol.is_zero(qpq, sp * sq) && tol.is_zero(qqq, sq * sq))
        return std::nullopt;   // contained in the quadric

    const double disc = qpq * qpq - qpp * qqq;
    const double s2 = sp * sp * sq * sq;
    if (tol.is_zero(disc, s2)) return 1;
    return disc > 0 ? 2 : 0;
}

} // namespace splitquat
