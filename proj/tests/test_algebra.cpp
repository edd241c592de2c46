#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "splitquat/algebra.hpp"
#include "support/generators.hpp"

using namespace splitquat;
using testgen::random_quaternion;

namespace {
const SplitQuaternion I = SplitQuaternion::unit_i();
const SplitQuaternion J = SplitQuaternion::unit_j();
const SplitQuaternion K = SplitQuaternion::unit_k();

bool close(const SplitQuaternion& a, const SplitQuaternion& b, double eps = 1e-12) {
    return linf(a - b) <= eps;
}

// Rank of the 4x4 matrix of the map x -> x*h, by Gaussian elimination.
int right_multiplication_rank(const SplitQuaternion& h) {
    double m[4][4];
    const SplitQuaternion images[4] = {SplitQuaternion{1.0} * h, I * h, J * h, K * h};
    for (int col = 0; col < 4; ++col) {
        m[0][col] = images[col].w;
        m[1][col] = images[col].x;
        m[2][col] = images[col].y;
        m[3][col] = images[col].z;
    }
    int rank = 0;
    for (int col = 0; col < 4 && rank < 4; ++col) {
        int piv = -1;
        for (int row = rank; row < 4; ++row)
            if (std::abs(m[row][col]) > 1e-9) { piv = row; break; }
        if (piv < 0) continue;
        for (int k = 0; k < 4; ++k) std::swap(m[rank][k], m[piv][k]);
        for (int row = rank + 1; row < 4; ++row) {
            const double f = m[row][col] / m[rank][col];
            for (int k = 0; k < 4; ++k) m[row][k] -= f * m[rank][k];
        }
        ++rank;
    }
    return rank;
}
} // namespace

TEST_CASE("multiplication table") {
    CHECK(close(I * J, K));
    CHECK(close(J * I, -K));
    CHECK(close(J * K, -I));
    CHECK(close(K * J, I));
    CHECK(close(K * I, J));
    CHECK(close(I * K, -J));
    CHECK(close(I * I, SplitQuaternion{-1.0}));
    CHECK(close(J * J, SplitQuaternion{1.0}));
    CHECK(close(K * K, SplitQuaternion{1.0}));
    // i j k = 1
    CHECK(close(I * J * K, SplitQuaternion{1.0}));
}

TEST_CASE("products") {
    const SplitQuaternion lhs{1, 0, 0, 1};    // 1 + k
    const SplitQuaternion rhs{-1, -1, 0, 0};  // -1 - i
    CHECK(close(lhs * rhs, SplitQuaternion{-1, -1, -1, -1}));

    std::mt19937 gen(7);
    for (int trial = 0; trial < 100; ++trial) {
        const SplitQuaternion g = random_quaternion(gen);
        CHECK(close(SplitQuaternion{1.0} * g, g));
        CHECK(close(g * SplitQuaternion{1.0}, g));
    }
}

TEST_CASE("conjugation") {
    CHECK(close(conj(SplitQuaternion{1, 1, 1, 1}), SplitQuaternion{1, -1, -1, -1}));
    CHECK(close(conj(I * J), conj(J) * conj(I)));

    std::mt19937 gen(11);
    for (int trial = 0; trial < 200; ++trial) {
        const SplitQuaternion h = random_quaternion(gen);
        const SplitQuaternion g = random_quaternion(gen);
        CHECK(close(conj(conj(h)), h));
        CHECK(linf(conj(h * g) - conj(g) * conj(h)) <= 1e-11 * (1 + linf(h) * linf(g)));
    }
}

TEST_CASE("norm") {
    CHECK(norm(SplitQuaternion{1, 1, 0, 0}) == doctest::Approx(2.0));
    CHECK(norm(J) == doctest::Approx(-1.0));
    CHECK(norm(SplitQuaternion{1, 0, 1, 0}) == doctest::Approx(0.0));

    std::mt19937 gen(13);
    for (int trial = 0; trial < 200; ++trial) {
        const SplitQuaternion h = random_quaternion(gen);
        const SplitQuaternion g = random_quaternion(gen);
        // norm(h) equals the scalar part of h * conj(h), which is real.
        const SplitQuaternion hh = h * conj(h);
        CHECK(linf(vector_part(hh)) <= 1e-12 * (1 + linf(h) * linf(h)));
        CHECK(hh.w == doctest::Approx(norm(h)).epsilon(1e-10));
        // Multiplicativity.
        CHECK(norm(h * g) ==
              doctest::Approx(norm(h) * norm(g)).epsilon(1e-9).scale(1 + std::abs(norm(h) * norm(g))));
    }
}

TEST_CASE("bilinear form") {
    CHECK(bilinear_q(SplitQuaternion{1.0}, I) == doctest::Approx(0.0));
    CHECK(bilinear_q(SplitQuaternion{1, 0, 0, 1}, SplitQuaternion{2, 1, 1, 1}) == doctest::Approx(1.0));

    std::mt19937 gen(17);
    for (int trial = 0; trial < 200; ++trial) {
        const SplitQuaternion h = random_quaternion(gen);
        const SplitQuaternion g = random_quaternion(gen);
        CHECK(bilinear_q(h, h) == doctest::Approx(norm(h)).epsilon(1e-12));
        CHECK(bilinear_q(h, g) == doctest::Approx(bilinear_q(g, h)));
        // Polarization: 2 q(h,g) = norm(h+g) - norm(h) - norm(g).
        CHECK(2 * bilinear_q(h, g) ==
              doctest::Approx(norm(h + g) - norm(h) - norm(g)).epsilon(1e-10).scale(1 + linf(h) * linf(g)));
        // q(h,g) is the scalar part of (h conj(g) + g conj(h)) / 2.
        const SplitQuaternion sym = (h * conj(g) + g * conj(h)) * 0.5;
        CHECK(linf(vector_part(sym)) <= 1e-11 * (1 + linf(h) * linf(g)));
        CHECK(sym.w == doctest::Approx(bilinear_q(h, g)).epsilon(1e-10));
    }
}

TEST_CASE("inverse") {
    CHECK(close(inverse(J), J));
    CHECK(close(inverse(SplitQuaternion{1, 1, 0, 0}), SplitQuaternion{0.5, -0.5, 0, 0}));
    CHECK_THROWS_AS((void)inverse(SplitQuaternion{1, 0, 1, 0}), NotInvertible);

    std::mt19937 gen(19);
    for (int trial = 0; trial < 200; ++trial) {
        const SplitQuaternion h = testgen::random_invertible(gen);
        const SplitQuaternion hi = inverse(h);
        CHECK(linf(h * hi - SplitQuaternion{1.0}) <= 1e-9);
        CHECK(linf(hi * h - SplitQuaternion{1.0}) <= 1e-9);
    }
}

TEST_CASE("scalar and vector parts") {
    const auto [s, v] = parts(SplitQuaternion{2, 1, 1, 1});
    CHECK(s == doctest::Approx(2.0));
    CHECK(close(v, SplitQuaternion{0, 1, 1, 1}));
    CHECK(close(SplitQuaternion{s} + v, SplitQuaternion{2, 1, 1, 1}));

    const auto [s5, v5] = parts(SplitQuaternion{5.0});
    CHECK(s5 == doctest::Approx(5.0));
    CHECK(linf(v5) == 0.0);

    // Vec(c) * conj(Vec(c)) for c = 2+i+j+k.
    const SplitQuaternion vc = vector_part(SplitQuaternion{2, 1, 1, 1});
    CHECK(norm(vc) == doctest::Approx(-1.0));
}

TEST_CASE("zero divisors induce rank-2 right multiplication") {
    std::mt19937 gen(23);
    for (int trial = 0; trial < 100; ++trial) {
        const SplitQuaternion h = testgen::random_null(gen);
        REQUIRE(std::abs(norm(h)) <= 1e-9 * (1 + linf(h) * linf(h)));
        CHECK(right_multiplication_rank(h) == 2);
    }
    // Invertible elements act with full rank.
    CHECK(right_multiplication_rank(SplitQuaternion{1, 1, 0, 0}) == 4);
}
