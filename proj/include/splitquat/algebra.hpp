#ifndef SPLITQUAT_ALGEBRA_HPP
#define SPLITQUAT_ALGEBRA_HPP

#include <cmath>
#include <iosfwd>
#include <stdexcept>

#include "splitquat/tolerance.hpp"

namespace splitquat {

struct NotInvertible : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Element of the four-dimensional real algebra generated by i, j, k with
///
///   i^2 = -1,   j^2 = k^2 = +1,   ij = k = -ji,   jk = -i = -kj,   ki = j = -ik.
///
/// Written w + x*i + y*j + z*k.  The norm w^2 + x^2 - y^2 - z^2 is indefinite
/// of signature (2,2); elements of vanishing norm are zero divisors.
struct SplitQuaternion {
    double w = 0.0;
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    constexpr SplitQuaternion() = default;
    constexpr SplitQuaternion(double w_, double x_, double y_, double z_)
        : w(w_), x(x_), y(y_), z(z_) {}
    constexpr SplitQuaternion(double real) : w(real) {}

    static constexpr SplitQuaternion unit_i() { return {0, 1, 0, 0}; }
    static constexpr SplitQuaternion unit_j() { return {0, 0, 1, 0}; }
    static constexpr SplitQuaternion unit_k() { return {0, 0, 0, 1}; }

    constexpr SplitQuaternion& operator+=(const SplitQuaternion& r) {
        w += r.w; x += r.x; y += r.y; z += r.z;
        return *this;
    }
    constexpr SplitQuaternion& operator-=(const SplitQuaternion& r) {
        w -= r.w; x -= r.x; y -= r.y; z -= r.z;
        return *this;
    }
    constexpr SplitQuaternion& operator*=(double s) {
        w *= s; x *= s; y *= s; z *= s;
        return *this;
    }

    friend constexpr SplitQuaternion operator+(SplitQuaternion a, const SplitQuaternion& b) { return a += b; }
    friend constexpr SplitQuaternion operator-(SplitQuaternion a, const SplitQuaternion& b) { return a -= b; }
    friend constexpr SplitQuaternion operator-(const SplitQuaternion& a) { return {-a.w, -a.x, -a.y, -a.z}; }
    friend constexpr SplitQuaternion operator*(SplitQuaternion a, double s) { return a *= s; }
    friend constexpr SplitQuaternion operator*(double s, SplitQuaternion a) { return a *= s; }
    friend constexpr SplitQuaternion operator/(SplitQuaternion a, double s) { return a *= (1.0 / s); }

    // Fixed, fully expanded 16-term product derived from the relations above.
    friend constexpr SplitQuaternion operator*(const SplitQuaternion& a, const SplitQuaternion& b) {
        return {
            a.w * b.w - a.x * b.x + a.y * b.y + a.z * b.z,
            a.w * b.x + a.x * b.w - a.y * b.z + a.z * b.y,
            a.w * b.y + a.y * b.w - a.x * b.z + a.z * b.x,
            a.w * b.z + a.z * b.w + a.x * b.y - a.y * b.x,
        };
    }

    friend std::ostream& operator<<(std::ostream& os, const SplitQuaternion& h);
};

/// Coefficientwise conjugate w - xi - yj - zk; an anti-automorphism.
constexpr SplitQuaternion conj(const SplitQuaternion& h) {
    return {h.w, -h.x, -h.y, -h.z};
}

/// h * conj(h) = w^2 + x^2 - y^2 - z^2.
constexpr double norm(const SplitQuaternion& h) {
    return h.w * h.w + h.x * h.x - h.y * h.y - h.z * h.z;
}

/// Symmetric bilinear form of signature (2,2) polarizing the norm:
/// q(h,g) = (h*conj(g) + g*conj(h)) / 2.
constexpr double bilinear_q(const SplitQuaternion& h, const SplitQuaternion& g) {
    return h.w * g.w + h.x * g.x - h.y * g.y - h.z * g.z;
}

constexpr double scalar_part(const SplitQuaternion& h) { return h.w; }

constexpr SplitQuaternion vector_part(const SplitQuaternion& h) {
    return {0.0, h.x, h.y, h.z};
}

/// (scalar part, vector part); the sum reconstructs h.
constexpr std::pair<double, SplitQuaternion> parts(const SplitQuaternion& h) {
    return {scalar_part(h), vector_part(h)};
}

inline double linf(const SplitQuaternion& h) {
    return std::max(std::max(std::abs(h.w), std::abs(h.x)),
                    std::max(std::abs(h.y), std::abs(h.z)));
}

inline bool is_zero(const SplitQuaternion& h, const Tolerance& tol = default_tolerance(),
                    double scale = 1.0) {
    return linf(h) <= tol.threshold(scale);
}

/// Norm test scaled quadratically in the coordinates.
inline bool is_null(const SplitQuaternion& h, const Tolerance& tol = default_tolerance()) {
    const double s = linf(h);
    return tol.is_zero(norm(h), s * s);
}

/// h^{-1} = conj(h) / norm(h).  Throws NotInvertible on the null cone.
inline SplitQuaternion inverse(const SplitQuaternion& h, const Tolerance& tol = default_tolerance()) {
    if (is_null(h, tol))
        throw NotInvertible("split quaternion has vanishing norm");
    return conj(h) / norm(h);
}

inline bool approx_equal(const SplitQuaternion& a, const SplitQuaternion& b,
                         const Tolerance& tol = default_tolerance()) {
    const double s = std::max(linf(a), linf(b));
    return linf(a - b) <= tol.threshold(s);
}

} // namespace splitquat

#endif
