#ifndef SPLITQUAT_TOLERANCE_HPP
#define SPLITQUAT_TOLERANCE_HPP

#include <algorithm>
#include <cmath>

namespace splitquat {

/// Zero-test policy used throughout the library.
///
/// A quantity x of magnitude scale s counts as zero when
/// |x| <= eps * max(1, s).  Every branch decision (case dispatch, rank
/// tests, ruling tests) goes through this single rule so that verdicts
/// are reproducible for a given eps.
struct Tolerance {
    double eps = 1e-9;

    bool is_zero(double x, double scale = 1.0) const {
        return std::abs(x) <= eps * std::max(1.0, scale);
    }
    double threshold(double scale = 1.0) const {
        return eps * std::max(1.0, scale);
    }
};

inline const Tolerance& default_tolerance() {
    static const Tolerance tol{};
    return tol;
}

} // namespace splitquat

#endif
