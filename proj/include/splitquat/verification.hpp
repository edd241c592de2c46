#ifndef SPLITQUAT_VERIFICATION_HPP
#define SPLITQUAT_VERIFICATION_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "splitquat/polynomials.hpp"

namespace splitquat {

/// Coefficientwise deviation of a reconstructed polynomial from its target.
struct ResidualReport {
    double max_abs = 0.0;
    std::vector<double> per_coefficient;
    double scale = 1.0;   // magnitude of the target, for relative comparison

    bool within(double rel_tol) const { return max_abs <= rel_tol * std::max(1.0, scale); }
};

/// Expands the given ordered factor list and reports the deviation from p.
ResidualReport verify_product(const Poly& p, const std::vector<Poly>& factors);

/// Deviation of unit*(t - h1)*(t - h2) from p.
ResidualReport verify_factorization(const Poly& p, const SplitQuaternion& unit,
                                    const SplitQuaternion& h1, const SplitQuaternion& h2);

/// The four real equations equivalent to eval_right(t^2 + b t + c, x) = 0
/// for vectorial b, evaluated exactly as displayed.
std::array<double, 4> equation_system_residual(const SplitQuaternion& b,
                                               const SplitQuaternion& c,
                                               const SplitQuaternion& x);

struct SearchOptions {
    int budget = 60;            // Newton iterations per start
    std::uint32_t seed = 12345; // start-point generator seed
    double residual_tol = 1e-9;
};

/// Multi-start damped Newton search for a zero of t^2 + b t + c (b vectorial),
/// from 64 deterministic starting points in [-4,4]^4.  Returns the zero found
/// from the lowest-indexed successful start, or nullopt.  Absence of a result
/// is evidence, not proof, of non-existence.
std::optional<SplitQuaternion> search_zero(const SplitQuaternion& b, const SplitQuaternion& c,
                                           const SearchOptions& opts = {});

/// Damped Newton refinement of an approximate zero of t^2 + b t + c
/// (b vectorial).  Returns the iterate with the smallest residual seen,
/// which is never worse than the input.
SplitQuaternion polish_zero(const SplitQuaternion& b, const SplitQuaternion& c,
                            const SplitQuaternion& x, int iterations = 25);

} // namespace splitquat

#endif
