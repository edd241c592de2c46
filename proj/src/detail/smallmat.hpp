#ifndef SPLITQUAT_DETAIL_SMALLMAT_HPP
#define SPLITQUAT_DETAIL_SMALLMAT_HPP

#include <array>
#include <cmath>
#include <optional>

// Tiny dense linear algebra helpers for fixed sizes up to 4.

namespace splitquat::detail {

using Vec4 = std::array<double, 4>;
using Mat4 = std::array<std::array<double, 4>, 4>;

/// Solves A x = b by Gaussian elimination with partial pivoting.
/// Returns nullopt when a pivot falls below the threshold.
inline std::optional<Vec4> solve4(Mat4 a, Vec4 b, double pivot_eps = 1e-13) {
    std::array<int, 4> perm{0, 1, 2, 3};
    for (int col = 0; col < 4; ++col) {
        int piv = col;
        for (int row = col + 1; row < 4; ++row)
            if (std::abs(a[row][col]) > std::abs(a[piv][col])) piv = row;
        if (std::abs(a[piv][col]) < pivot_eps) return std::nullopt;
        std::swap(a[col], a[piv]);
        std::swap(b[col], b[piv]);
        std::swap(perm[col], perm[piv]);
        for (int row = col + 1; row < 4; ++row) {
            const double f = a[row][col] / a[col][col];
            for (int k = col; k < 4; ++k) a[row][k] -= f * a[col][k];
            b[row] -= f * b[col];
        }
    }
    Vec4 x{};
    for (int row = 3; row >= 0; --row) {
        double v = b[row];
        for (int k = row + 1; k < 4; ++k) v -= a[row][k] * x[k];
        x[row] = v / a[row][row];
    }
    return x;
}

/// Singular values of a 4 x 3 matrix given by its columns, descending.
/// One-sided Jacobi: rotate column pairs until mutually orthogonal; the
/// singular values are the final column norms.  Unlike the normal-equations
/// route this keeps tiny singular values at machine-epsilon accuracy, which
/// the rank threshold relies on.
inline std::array<double, 3> singular_values_3(std::array<Vec4, 3> cols) {
    auto col_dot = [&](int p, int q) {
        double s = 0.0;
        for (int r = 0; r < 4; ++r) s += cols[p][r] * cols[q][r];
        return s;
    };
    for (int sweep = 0; sweep < 60; ++sweep) {
        bool rotated = false;
        for (int p = 0; p < 3; ++p)
            for (int q = p + 1; q < 3; ++q) {
                const double app = col_dot(p, p), aqq = col_dot(q, q), apq = col_dot(p, q);
                if (std::abs(apq) <= 1e-15 * std::sqrt(app * aqq) || apq == 0.0) continue;
                rotated = true;
                const double zeta = (aqq - app) / (2.0 * apq);
                const double t = (zeta >= 0 ? 1.0 : -1.0) /
                                 (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = c * t;
                for (int r = 0; r < 4; ++r) {
                    const double vp = cols[p][r], vq = cols[q][r];
                    cols[p][r] = c * vp - s * vq;
                    cols[q][r] = s * vp + c * vq;
                }
            }
        if (!rotated) break;
    }
    std::array<double, 3> sv{std::sqrt(col_dot(0, 0)), std::sqrt(col_dot(1, 1)),
                             std::sqrt(col_dot(2, 2))};
    if (sv[0] < sv[1]) std::swap(sv[0], sv[1]);
    if (sv[1] < sv[2]) std::swap(sv[1], sv[2]);
    if (sv[0] < sv[1]) std::swap(sv[0], sv[1]);
    return sv;
}

/// Solves the 2x2 system [[a,b],[c,d]] (x,y) = (e,f); nullopt if the
/// determinant is below the threshold.
inline std::optional<std::pair<double, double>> solve2(double a, double b, double c, double d,
                                                       double e, double f,
                                                       double det_eps) {
    const double det = a * d - b * c;
    if (std::abs(det) <= det_eps) return std::nullopt;
    return std::make_pair((e * d - b * f) / det, (a * f - e * c) / det);
}

} // namespace splitquat::detail

#endif
