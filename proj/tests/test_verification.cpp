#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "splitquat/verification.hpp"
#include "support/generators.hpp"

using namespace splitquat;
using testgen::random_quaternion;
using testgen::random_vectorial;

namespace {
const SplitQuaternion I = SplitQuaternion::unit_i();
const SplitQuaternion J = SplitQuaternion::unit_j();

double residual_linf(const std::array<double, 4>& r) {
    double m = 0;
    for (double v : r) m = std::max(m, std::abs(v));
    return m;
}
} // namespace

TEST_CASE("re-expansion residual") {
    // Witness from the running example is exact.
    const Poly p = Poly::quadratic(SplitQuaternion{1.0}, SplitQuaternion{1, 0, 0, 1},
                                   SplitQuaternion{2, 1, 1, 1});
    const auto report = verify_factorization(p, SplitQuaternion{1.0},
                                             SplitQuaternion{-1, 1.5, -0.5, 0},
                                             SplitQuaternion{0, -1.5, 0.5, -1});
    CHECK(report.max_abs <= 1e-12);

    const Poly q = Poly::quadratic(SplitQuaternion{1.0}, -(I + J), SplitQuaternion::unit_k());
    CHECK(verify_factorization(q, SplitQuaternion{1.0}, I, J).max_abs <= 1e-14);

    // A perturbed witness is detected.
    const auto perturbed = verify_factorization(
        q, SplitQuaternion{1.0}, I, J + SplitQuaternion{0, 1e-3, 0, 0});
    CHECK(perturbed.max_abs >= 1e-4);
    CHECK(perturbed.max_abs <= 1e-1);
}

TEST_CASE("equation system matches right evaluation") {
    std::mt19937 gen(89);
    for (int trial = 0; trial < 1000; ++trial) {
        const SplitQuaternion b = random_vectorial(gen);
        const SplitQuaternion c = random_quaternion(gen);
        const SplitQuaternion x = random_quaternion(gen);
        const auto rs = equation_system_residual(b, c, x);
        const SplitQuaternion value =
            eval_right(Poly::quadratic(SplitQuaternion{1.0}, b, c), x);
        const double scale = 1 + linf(x) * linf(x) + linf(b) * linf(x) + linf(c);
        CHECK(std::abs(rs[0] - value.w) <= 1e-12 * scale);
        CHECK(std::abs(rs[1] - value.x) <= 1e-12 * scale);
        CHECK(std::abs(rs[2] - value.y) <= 1e-12 * scale);
        CHECK(std::abs(rs[3] - value.z) <= 1e-12 * scale);
    }

    // x = 0, c = 0 solves for any vectorial b.
    CHECK(residual_linf(equation_system_residual(random_vectorial(gen), SplitQuaternion{},
                                                 SplitQuaternion{})) == 0.0);
}

TEST_CASE("zero search finds known zeros") {
    // t^2 + i has the zero (1 - i)/sqrt(2).
    const auto z1 = search_zero(SplitQuaternion{}, I);
    REQUIRE(z1.has_value());
    CHECK(residual_linf(equation_system_residual(SplitQuaternion{}, I, *z1)) <= 1e-9);
    const double r = 1.0 / std::sqrt(2.0);
    CHECK(std::abs(std::abs(z1->w) - r) <= 1e-6);

    // t^2 + k t + i: solver output satisfies the displayed system.
    const SplitQuaternion k = SplitQuaternion::unit_k();
    const auto zk = search_zero(k, I);
    REQUIRE(zk.has_value());
    CHECK(residual_linf(equation_system_residual(k, I, *zk)) <= 1e-10);

    // Dependent instance b = i+j, lambda = -1: zeros exist.
    const SplitQuaternion b{0, 1, 1, 0};
    const auto z2 = search_zero(b, SplitQuaternion{-1.0});
    REQUIRE(z2.has_value());
    CHECK(residual_linf(equation_system_residual(b, SplitQuaternion{-1.0}, *z2)) <= 1e-9);
}

TEST_CASE("zero search reports nothing for non-factorizable instances") {
    // t^2 + 2+i+j+k has no zeros.
    CHECK_FALSE(search_zero(SplitQuaternion{}, SplitQuaternion{2, 1, 1, 1}).has_value());

    // Integer grid of radius 5 confirms a large minimum residual.
    double min_res = 1e30;
    for (int w = -5; w <= 5; ++w)
        for (int x = -5; x <= 5; ++x)
            for (int y = -5; y <= 5; ++y)
                for (int z = -5; z <= 5; ++z)
                    min_res = std::min(
                        min_res, residual_linf(equation_system_residual(
                                     SplitQuaternion{}, SplitQuaternion{2, 1, 1, 1},
                                     SplitQuaternion{double(w), double(x), double(y), double(z)})));
    CHECK(min_res >= 0.1);
}

TEST_CASE("search is deterministic for a fixed seed") {
    const SplitQuaternion b{0, 1, 1, 0};
    const auto z1 = search_zero(b, SplitQuaternion{-1.0});
    const auto z2 = search_zero(b, SplitQuaternion{-1.0});
    REQUIRE(z1.has_value());
    REQUIRE(z2.has_value());
    CHECK(linf(*z1 - *z2) == 0.0);
}
