#include "splitquat/polynomials.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

// Roots of real polynomials up to degree four.  Degrees one and two use the
// stable closed forms; degrees three and four use Durand-Kerner simultaneous
// iteration with deterministic initialization, Newton polishing, conjugate
// symmetrization and real snapping.  Repeated roots stall fixed-point
// iterations at a noise floor of eps^(1/m), so every result is validated by
// its backward error; on failure the roots are repaired through the
// derivative, where the multiplicity drops by one, and the remainder is
// deflated and solved in closed form.

namespace splitquat {

namespace {

using cd = std::complex<double>;

constexpr int kMaxDkIterations = 200;
constexpr double kRealSnap = 1e-7;       // |Im| <= snap*(1+|root|) snaps to real
constexpr double kClusterDist = 1e-6;    // pairwise distance for multiple roots

std::vector<cd> closed_quadratic(double c0, double c1, double c2) {
    const double disc = c1 * c1 - 4 * c2 * c0;
    if (disc >= 0) {
        const double sq = std::sqrt(disc);
        const double q = -0.5 * (c1 + (c1 >= 0 ? sq : -sq));
        cd r1, r2;
        if (q != 0.0) {
            r1 = cd(q / c2, 0);
            r2 = cd(c0 / q, 0);
        } else {
            r1 = cd(0, 0);
            r2 = cd(-c1 / c2, 0);
        }
        if (r1.real() > r2.real()) std::swap(r1, r2);
        return {r1, r2};
    }
    const double re = -c1 / (2 * c2);
    const double im = std::abs(std::sqrt(-disc) / (2 * c2));
    return {cd(re, -im), cd(re, im)};
}

double backward_error(const RealPoly& p, cd z) {
    const double az = std::abs(z);
    double denom = 0.0, power = 1.0;
    for (double c : p.coeffs) {
        denom += std::abs(c) * power;
        power *= az;
    }
    if (denom == 0.0) return 0.0;
    return std::abs(p.eval(z)) / denom;
}

/// Relative coefficient deviation of lead * prod (t - z_i) from p.  Catches
/// multiset errors (a wrong multiplicity split) that per-root residuals miss.
double expansion_error(const RealPoly& p, const std::vector<cd>& roots, int n, double lead) {
    std::vector<cd> coeffs{1.0};
    for (auto z : roots) {
        coeffs.push_back(coeffs.back());
        for (std::size_t l = coeffs.size() - 2; l >= 1; --l)
            coeffs[l] = coeffs[l - 1] - z * coeffs[l];
        coeffs[0] *= -z;
    }
    double err = 0.0;
    for (int l = 0; l <= n; ++l) {
        const cd v = lead * coeffs[static_cast<std::size_t>(l)];
        err = std::max(err, std::abs(v - cd(p[static_cast<std::size_t>(l)], 0.0)));
    }
    return err / std::max(1.0, p.scale());
}

RealPoly derivative(const RealPoly& p) {
    std::vector<double> dc;
    for (std::size_t l = 1; l < p.coeffs.size(); ++l)
        dc.push_back(static_cast<double>(l) * p.coeffs[l]);
    return RealPoly(std::move(dc));
}

std::vector<cd> durand_kerner(const std::vector<double>& monic, int n) {
    double bound = 0.0;
    for (int l = 0; l < n; ++l) bound = std::max(bound, std::abs(monic[static_cast<std::size_t>(l)]));
    bound = 1.0 + bound;

    const cd seed(0.4, 0.9);
    std::vector<cd> z(static_cast<std::size_t>(n));
    cd rot = seed;
    for (auto& zi : z) {
        zi = bound * rot;
        rot *= seed;
    }

    auto eval = [&](cd t) {
        cd v = 1.0;
        for (int l = n - 1; l >= 0; --l) v = v * t + monic[static_cast<std::size_t>(l)];
        return v;
    };

    for (int iter = 0; iter < kMaxDkIterations; ++iter) {
        double shift = 0.0;
        for (int m = 0; m < n; ++m) {
            cd denom = 1.0;
            for (int l = 0; l < n; ++l)
                if (l != m) denom *= z[static_cast<std::size_t>(m)] - z[static_cast<std::size_t>(l)];
            if (denom == cd(0.0)) denom = cd(1e-300, 0.0);
            const cd delta = eval(z[static_cast<std::size_t>(m)]) / denom;
            z[static_cast<std::size_t>(m)] -= delta;
            shift = std::max(shift, std::abs(delta));
        }
        if (shift < 1e-14 * (1.0 + bound)) break;
    }
    return z;
}

void newton_polish(const RealPoly& p, cd& z, int multiplicity = 1) {
    for (int iter = 0; iter < 30; ++iter) {
        const cd f = p.eval(z);
        const cd df = p.eval_derivative(z);
        if (std::abs(df) == 0.0) break;
        const cd step = static_cast<double>(multiplicity) * f / df;
        if (std::abs(step) > 1.0 + std::abs(z)) break;   // derivative too noisy
        z -= step;
        if (std::abs(step) < 1e-15 * (1.0 + std::abs(z))) break;
    }
}

void enforce_conjugate_pairs(std::vector<cd>& z) {
    std::vector<bool> used(z.size(), false);
    for (std::size_t m = 0; m < z.size(); ++m) {
        if (used[m] || std::abs(z[m].imag()) <= kRealSnap * (1.0 + std::abs(z[m]))) continue;
        std::size_t best = m;
        double best_d = std::numeric_limits<double>::max();
        for (std::size_t l = 0; l < z.size(); ++l) {
            if (l == m || used[l]) continue;
            const double d = std::abs(z[l] - std::conj(z[m]));
            if (d < best_d) { best_d = d; best = l; }
        }
        if (best != m && best_d <= 1e-4 * (1.0 + std::abs(z[m]))) {
            const cd avg = 0.5 * (z[m] + std::conj(z[best]));
            z[m] = avg;
            z[best] = std::conj(avg);
            used[m] = used[best] = true;
        }
    }
}

void snap_real(std::vector<cd>& z) {
    for (auto& zi : z)
        if (std::abs(zi.imag()) <= kRealSnap * (1.0 + std::abs(zi))) zi = cd(zi.real(), 0.0);
}

// Merge near-coincident roots and refine each cluster: refinement steps are
// leashed to the cluster since near-multiple roots have noisy derivatives.
void merge_clusters(const RealPoly& p, std::vector<cd>& z, double coeff_scale) {
    const std::size_t n = z.size();
    std::vector<std::size_t> group(n);
    for (std::size_t m = 0; m < n; ++m) group[m] = m;
    auto find = [&](std::size_t m) {
        while (group[m] != m) m = group[m] = group[group[m]];
        return m;
    };

    for (std::size_t m = 0; m < n; ++m) {
        for (std::size_t l = m + 1; l < n; ++l) {
            const double d = std::abs(z[m] - z[l]);
            const double sz = 1.0 + std::max(std::abs(z[m]), std::abs(z[l]));
            bool same = d <= kClusterDist * sz;
            if (!same && d <= 1e-3 * sz) {
                const cd mid = 0.5 * (z[m] + z[l]);
                const double fs = std::abs(p.eval(mid));
                const double dfs = std::abs(p.eval_derivative(mid));
                same = fs <= 1e-9 * std::max(1.0, coeff_scale) &&
                       dfs <= 1e-4 * std::max(1.0, coeff_scale);
            }
            if (same) group[find(m)] = find(l);
        }
    }

    for (std::size_t root_rep = 0; root_rep < n; ++root_rep) {
        if (find(root_rep) != root_rep) continue;
        std::vector<std::size_t> members;
        for (std::size_t m = 0; m < n; ++m)
            if (find(m) == root_rep) members.push_back(m);
        if (members.size() < 2) continue;

        cd mean = 0.0;
        for (auto m : members) mean += z[m];
        mean /= static_cast<double>(members.size());
        double spread = 0.0;
        for (auto m : members) spread = std::max(spread, std::abs(z[m] - mean));
        const double leash = 100.0 * spread + 1e-6 * (1.0 + std::abs(mean));

        cd center = mean;
        newton_polish(p, center, static_cast<int>(members.size()));
        if (std::abs(center - mean) > leash) center = mean;

        // A multiplicity-m root is a simple root of the (m-1)-th derivative,
        // where polishing reaches machine precision.
        RealPoly deriv = p;
        for (std::size_t k = 1; k < members.size(); ++k) deriv = derivative(deriv);
        cd center2 = center;
        newton_polish(deriv, center2, 1);
        if (std::abs(center2 - mean) <= leash &&
            std::abs(p.eval(center2)) <=
                std::max(4.0 * std::abs(p.eval(center)), 1e-12 * std::max(1.0, coeff_scale)))
            center = center2;

        for (auto m : members) z[m] = center;
    }
}

void sort_roots(std::vector<cd>& z) {
    std::sort(z.begin(), z.end(), [](cd a, cd b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
}

std::vector<double> deflate_real(std::vector<double> coeffs, double w) {
    std::vector<double> q(coeffs.size() - 1, 0.0);
    double carry = coeffs.back();
    for (int l = static_cast<int>(coeffs.size()) - 2; l >= 0; --l) {
        q[static_cast<std::size_t>(l)] = carry;
        carry = coeffs[static_cast<std::size_t>(l)] + carry * w;
    }
    return q;
}

std::vector<double> deflate_quadratic(std::vector<double> coeffs, double p1, double p0) {
    // divide by t^2 + p1 t + p0
    const int n = static_cast<int>(coeffs.size()) - 1;
    std::vector<double> q(static_cast<std::size_t>(n - 1), 0.0);
    for (int l = n - 2; l >= 0; --l) {
        const double head = coeffs[static_cast<std::size_t>(l + 2)];
        q[static_cast<std::size_t>(l)] = head;
        coeffs[static_cast<std::size_t>(l + 1)] -= head * p1;
        coeffs[static_cast<std::size_t>(l)] -= head * p0;
    }
    return q;
}

std::vector<cd> roots_by_iteration(const RealPoly& p, int n) {
    const double lead = p.coeffs[static_cast<std::size_t>(n)];
    std::vector<double> monic(static_cast<std::size_t>(n));
    for (int l = 0; l < n; ++l) monic[static_cast<std::size_t>(l)] = p[static_cast<std::size_t>(l)] / lead;

    std::vector<cd> z = durand_kerner(monic, n);
    for (auto& zi : z) newton_polish(p, zi);
    enforce_conjugate_pairs(z);
    snap_real(z);
    merge_clusters(p, z, p.scale());
    snap_real(z);
    enforce_conjugate_pairs(z);
    return z;
}

std::vector<cd> roots_recursive(const RealPoly& p, const Tolerance& tol, int depth) {
    const int n = p.degree(tol);
    if (n < 1 || n > 4) throw DegreeMismatch("root solver handles degrees 1 through 4");
    const double lead = p.coeffs[static_cast<std::size_t>(n)];

    if (n == 1) return {cd(-p[0] / lead, 0.0)};
    if (n == 2) return closed_quadratic(p[0], p[1], p[2]);

    std::vector<cd> z = roots_by_iteration(p, n);

    bool valid = true;
    for (auto& zi : z)
        if (backward_error(p, zi) > 1e-12) valid = false;
    // The expanded product must reproduce the polynomial; a stalled
    // multiple-root iteration can leave every root individually plausible
    // while the multiset is wrong.
    if (valid && expansion_error(p, z, n, lead) > 1e-8) valid = false;
    if (valid) {
        // Real coefficients force non-real roots to appear in conjugate pairs.
        std::vector<bool> used(z.size(), false);
        for (std::size_t m = 0; m < z.size() && valid; ++m) {
            if (used[m] || std::abs(z[m].imag()) <= kRealSnap * (1.0 + std::abs(z[m]))) continue;
            bool paired = false;
            for (std::size_t l = 0; l < z.size(); ++l) {
                if (l == m || used[l]) continue;
                if (std::abs(z[l] - std::conj(z[m])) <= kRealSnap * (1.0 + std::abs(z[m]))) {
                    used[m] = used[l] = true;
                    paired = true;
                    break;
                }
            }
            if (!paired) valid = false;
        }
    }
    if (valid || depth > 2) {
        sort_roots(z);
        return z;
    }

    // Repair via the derivative: clusters of its roots that are also roots of
    // p mark multiple roots of p with multiplicity one higher.
    const RealPoly dp = derivative(p);
    std::vector<cd> droots = roots_recursive(dp, tol, depth + 1);

    struct Multiple {
        cd w;
        int mult;   // multiplicity in p
    };
    std::vector<Multiple> multiples;
    std::vector<bool> used(droots.size(), false);
    for (std::size_t m = 0; m < droots.size(); ++m) {
        if (used[m]) continue;
        int count = 1;
        used[m] = true;
        for (std::size_t l = m + 1; l < droots.size(); ++l) {
            if (used[l]) continue;
            if (std::abs(droots[l] - droots[m]) <= 1e-5 * (1.0 + std::abs(droots[m]))) {
                used[l] = true;
                ++count;
            }
        }
        if (backward_error(p, droots[m]) <= 1e-10)
            multiples.push_back({droots[m], count + 1});
    }
    if (multiples.empty()) {
        sort_roots(z);
        return z;   // repair found nothing; report the best effort
    }

    std::vector<cd> result;
    std::vector<double> rest(p.coeffs.begin(), p.coeffs.begin() + n + 1);
    for (auto& mul : multiples) {
        if (std::abs(mul.w.imag()) <= kRealSnap * (1.0 + std::abs(mul.w))) {
            const double w = mul.w.real();
            for (int rep = 0; rep < mul.mult && static_cast<int>(rest.size()) > 1; ++rep) {
                rest = deflate_real(std::move(rest), w);
                result.emplace_back(w, 0.0);
            }
        } else if (mul.w.imag() > 0) {
            // conjugate pair; deflate by the real quadratic
            const double re = mul.w.real();
            const double ab2 = std::norm(mul.w);
            for (int rep = 0; rep < mul.mult && static_cast<int>(rest.size()) > 2; ++rep) {
                rest = deflate_quadratic(std::move(rest), -2 * re, ab2);
                result.emplace_back(re, -mul.w.imag());
                result.emplace_back(re, mul.w.imag());
            }
        }
    }
    const std::size_t multiple_count = result.size();
    const RealPoly rem{std::vector<double>(rest)};
    const int rd = rem.degree(tol);
    if (rd >= 1) {
        const auto tail = roots_recursive(rem, tol, depth + 1);
        result.insert(result.end(), tail.begin(), tail.end());
    }
    if (static_cast<int>(result.size()) != n) {
        sort_roots(z);
        return z;   // inconsistent deflation; keep the direct result
    }
    // Deflation can drift the simple tail roots; the multiple roots already
    // sit where the derivative pinned them and plain polishing near a
    // multiple root only adds derivative noise.
    for (std::size_t m = multiple_count; m < result.size(); ++m) newton_polish(p, result[m]);
    if (expansion_error(p, result, n, lead) > expansion_error(p, z, n, lead)) {
        sort_roots(z);
        return z;   // the repair must not make things worse
    }
    sort_roots(result);
    return result;
}

} // namespace

std::vector<std::complex<double>> polynomial_roots(const RealPoly& p, const Tolerance& tol) {
    return roots_recursive(p, tol, 0);
}

std::vector<std::complex<double>> real_quartic_roots(const RealPoly& p, const Tolerance& tol) {
    if (p.degree(tol) != 4)
        throw DegreeMismatch("expected a degree-4 polynomial");
    return polynomial_roots(p, tol);
}

} // namespace splitquat
