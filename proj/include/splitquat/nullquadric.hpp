#ifndef SPLITQUAT_NULLQUADRIC_HPP
#define SPLITQUAT_NULLQUADRIC_HPP

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "splitquat/polynomials.hpp"

namespace splitquat {

struct ZeroVector : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DependentInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct WrongRuling : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct VanishingNormPolynomial : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct SingularSystem : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Point of the projective space over the split quaternions, stored by a
/// nonzero representative.  Equality is equality up to real scale.
struct ProjectivePoint {
    SplitQuaternion rep;
};

/// Line spanned by two points with linearly independent representatives.
struct ProjectiveLine {
    ProjectivePoint p, q;
};

/// Classification of the line spanned by two independent representatives
/// with respect to the two families of lines on the null quadric.
enum class RulingClass { LeftRuling, RightRuling, NotNull, NullButSinglePoint };

const char* to_string(RulingClass rc);

/// Projective equality via vanishing 2x2 minors of the coordinate matrix.
bool projectively_equal(const SplitQuaternion& a, const SplitQuaternion& b,
                        const Tolerance& tol = default_tolerance());

/// Linear independence of two vectors in R^4 (largest 2x2 minor above tolerance).
bool independent(const SplitQuaternion& a, const SplitQuaternion& b,
                 const Tolerance& tol = default_tolerance());

/// Membership of [h] in the null quadric: norm(h) = 0 at scale-aware tolerance.
/// Throws ZeroVector for h = 0.
bool on_null_quadric(const SplitQuaternion& h, const Tolerance& tol = default_tolerance());

/// The line [r0] v [r1] lies on the null quadric iff q(r0,r0) = q(r0,r1) =
/// q(r1,r1) = 0, equivalently iff the norm polynomial of r1*t + r0 vanishes.
bool is_null_line(const SplitQuaternion& r0, const SplitQuaternion& r1,
                  const Tolerance& tol = default_tolerance());

/// Which family of lines [r0] v [r1] belongs to: a right ruling satisfies
/// conj(r1)*r0 = 0, a left ruling r0*conj(r1) = 0.  Both products vanishing is
/// possible only for degenerate input and reports NullButSinglePoint.
RulingClass ruling_type(const SplitQuaternion& r0, const SplitQuaternion& r1,
                        const Tolerance& tol = default_tolerance());

enum class DivisionSide { Left, Right };   // Left: g = x*h, Right: g = h*x

struct DivisionPlane {
    SplitQuaternion u;                           // particular solution
    std::pair<SplitQuaternion, SplitQuaternion> basis;   // kernel directions
};

/// Affine two-plane of solutions x of g = x*h (side Left) or g = h*x (side
/// Right) for null h, valid when [h] v [g] is a ruling of the matching family
/// (or [g] = [h]).  Every u + lambda*b1 + mu*b2 solves the equation.
/// Throws WrongRuling when the returned particular solution fails to solve it.
DivisionPlane solve_division_plane(const SplitQuaternion& g, const SplitQuaternion& h,
                                   DivisionSide side,
                                   const Tolerance& tol = default_tolerance());

struct SegmentIntersections {
    int count = 0;                    // distinct null-quadric points on the curve
    std::vector<double> parameters;   // real parameters (infinity excluded)
    bool at_infinity = false;         // leading coefficient lies on the quadric
};

/// Points of the null quadric on the parameterized curve {[P(t)] : t real or
/// infinite}: distinct real roots of the norm polynomial (plus the point at
/// infinity when the leading coefficient is null), with coincident curve
/// points at distinct parameters merged projectively.
/// Throws VanishingNormPolynomial if the norm polynomial is identically zero.
SegmentIntersections segment_null_intersections(const Poly& p,
                                                const Tolerance& tol = default_tolerance());

/// Number of real points in which a projective line meets the null quadric:
/// sign of q(p,q)^2 - q(p,p)*q(q,q).  nullopt means the line lies on the
/// quadric (infinitely many points).
std::optional<int> line_null_intersections(const ProjectiveLine& line,
                                           const Tolerance& tol = default_tolerance());

} // namespace splitquat

#endif
