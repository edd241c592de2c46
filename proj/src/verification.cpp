#include "splitquat/verification.hpp"

#include <cmath>
#include <random>

#include "detail/smallmat.hpp"

namespace splitquat {

ResidualReport verify_product(const Poly& p, const std::vector<Poly>& factors) {
    Poly prod = Poly::constant(SplitQuaternion{1.0});
    for (const auto& f : factors) prod = prod * f;

    ResidualReport report;
    report.scale = p.scale();
    const std::size_t n = std::max(prod.coeffs.size(), p.coeffs.size());
    for (std::size_t l = 0; l < n; ++l) {
        const double d = linf(prod[l] - p[l]);
        report.per_coefficient.push_back(d);
        report.max_abs = std::max(report.max_abs, d);
    }
    return report;
}

ResidualReport verify_factorization(const Poly& p, const SplitQuaternion& unit,
                                    const SplitQuaternion& h1, const SplitQuaternion& h2) {
    return verify_product(p, {Poly::constant(unit), Poly::linear_monic(h1), Poly::linear_monic(h2)});
}

std::array<double, 4> equation_system_residual(const SplitQuaternion& b,
                                               const SplitQuaternion& c,
                                               const SplitQuaternion& x) {
    const double b1 = b.x, b2 = b.y, b3 = b.z;
    const double x0 = x.w, x1 = x.x, x2 = x.y, x3 = x.z;
    return {
        x0 * x0 - x1 * x1 + x2 * x2 + x3 * x3 - b1 * x1 + b2 * x2 + b3 * x3 + c.w,
        2 * x0 * x1 + b1 * x0 + b3 * x2 - b2 * x3 + c.x,
        2 * x0 * x2 + b2 * x0 + b3 * x1 - b1 * x3 + c.y,
        2 * x0 * x3 + b3 * x0 - b2 * x1 + b1 * x2 + c.z,
    };
}

namespace {

using detail::Mat4;
using detail::Vec4;

double max_abs(const std::array<double, 4>& v) {
    double m = 0.0;
    for (double e : v) m = std::max(m, std::abs(e));
    return m;
}

Mat4 jacobian(const SplitQuaternion& b, const SplitQuaternion& x) {
    const double b1 = b.x, b2 = b.y, b3 = b.z;
    const double x0 = x.w, x1 = x.x, x2 = x.y, x3 = x.z;
    return {{
        {2 * x0, -2 * x1 - b1, 2 * x2 + b2, 2 * x3 + b3},
        {2 * x1 + b1, 2 * x0, b3, -b2},
        {2 * x2 + b2, b3, 2 * x0, -b1},
        {2 * x3 + b3, -b2, b1, 2 * x0},
    }};
}

std::optional<SplitQuaternion> newton_from(const SplitQuaternion& b, const SplitQuaternion& c,
                                           SplitQuaternion x, const SearchOptions& opts) {
    double res = max_abs(equation_system_residual(b, c, x));
    for (int iter = 0; iter < opts.budget; ++iter) {
        if (res <= opts.residual_tol) return x;
        const auto f = equation_system_residual(b, c, x);
        Mat4 jac = jacobian(b, x);
        Vec4 rhs{-f[0], -f[1], -f[2], -f[3]};
        auto step = detail::solve4(jac, rhs);
        if (!step) {
            // Levenberg regularization for a singular Jacobian.
            for (int d = 0; d < 4; ++d) jac[d][d] += 1e-8;
            step = detail::solve4(jac, rhs);
            if (!step) return std::nullopt;
        }
        double eta = 1.0;
        bool improved = false;
        for (int halving = 0; halving < 20; ++halving) {
            const SplitQuaternion trial{x.w + eta * (*step)[0], x.x + eta * (*step)[1],
                                        x.y + eta * (*step)[2], x.z + eta * (*step)[3]};
            const double trial_res = max_abs(equation_system_residual(b, c, trial));
            if (trial_res < res) {
                x = trial;
                res = trial_res;
                improved = true;
                break;
            }
            eta *= 0.5;
        }
        if (!improved) return std::nullopt;
    }
    return res <= opts.residual_tol ? std::optional<SplitQuaternion>(x) : std::nullopt;
}

} // namespace

std::optional<SplitQuaternion> search_zero(const SplitQuaternion& b, const SplitQuaternion& c,
                                           const SearchOptions& opts) {
    std::mt19937 gen(opts.seed);
    std::uniform_real_distribution<double> dist(-4.0, 4.0);
    for (int start = 0; start < 64; ++start) {
        const SplitQuaternion x0{dist(gen), dist(gen), dist(gen), dist(gen)};
        if (auto zero = newton_from(b, c, x0, opts)) return zero;
    }
    return std::nullopt;
}

SplitQuaternion polish_zero(const SplitQuaternion& b, const SplitQuaternion& c,
                            const SplitQuaternion& x_in, int iterations) {
    SplitQuaternion x = x_in;
    SplitQuaternion best = x;
    double best_res = max_abs(equation_system_residual(b, c, x));
    for (int iter = 0; iter < iterations; ++iter) {
        const auto f = equation_system_residual(b, c, x);
        Mat4 jac = jacobian(b, x);
        Vec4 rhs{-f[0], -f[1], -f[2], -f[3]};
        auto step = detail::solve4(jac, rhs);
        if (!step) {
            for (int d = 0; d < 4; ++d) jac[d][d] += 1e-8;
            step = detail::solve4(jac, rhs);
            if (!step) break;
        }
        double eta = 1.0;
        bool improved = false;
        for (int halving = 0; halving < 20; ++halving) {
            const SplitQuaternion trial{x.w + eta * (*step)[0], x.x + eta * (*step)[1],
                                        x.y + eta * (*step)[2], x.z + eta * (*step)[3]};
            const double res = max_abs(equation_system_residual(b, c, trial));
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

} // namespace splitquat
