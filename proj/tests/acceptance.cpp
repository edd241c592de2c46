// Acceptance suite: runs every shipping criterion at its stated tolerance and
// prints one PASS/FAIL line per criterion.  Exit status is the number of
// failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <vector>

#include "splitquat/factorization.hpp"
#include "splitquat/verification.hpp"
#include "support/generators.hpp"

using namespace splitquat;
using testgen::random_integer_quaternion;
using testgen::random_null;
using testgen::random_quaternion;

namespace {

const SplitQuaternion I = SplitQuaternion::unit_i();
const SplitQuaternion J = SplitQuaternion::unit_j();
const SplitQuaternion K = SplitQuaternion::unit_k();

int failures = 0;

void record(int number, const char* title, bool ok, const std::string& detail = "") {
    std::printf("%s  criterion %d: %s%s%s\n", ok ? "PASS" : "FAIL", number, title,
                detail.empty() ? "" : " -- ", detail.c_str());
    if (!ok) ++failures;
}

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

bool close(const SplitQuaternion& a, const SplitQuaternion& b, double eps) {
    return linf(a - b) <= eps;
}

/// Vectorial element with prescribed norm x^2 - y^2 - z^2 = w.
SplitQuaternion vectorial_with_norm(double w, std::mt19937& gen) {
    std::uniform_real_distribution<double> radius(0.3, 2.0);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * 3.14159265358979323846);
    const double phi = angle(gen);
    if (w >= 0) {
        const double s = radius(gen);
        return {0.0, std::sqrt(w + s * s), s * std::cos(phi), s * std::sin(phi)};
    }
    const double x = radius(gen);
    const double s = std::sqrt(x * x - w);
    return {0.0, x, s * std::cos(phi), s * std::sin(phi)};
}

bool has_real_factor(const Poly& p) {
    const RealPoly sc({p[0].w, p[1].w, p[2].w});
    if (sc.degree() < 1) return false;
    for (const auto& root : polynomial_roots(sc))
        if (root.imag() == 0.0 && linf(eval_real(p, root.real())) < 1e-7 * (1 + p.scale()))
            return true;
    return false;
}

// ---------------------------------------------------------------------------

void criterion1_worked_example() {
    const auto t0 = std::chrono::steady_clock::now();
    const Poly p = Poly::quadratic(SplitQuaternion{1.0}, SplitQuaternion{1, 0, 0, 1},
                                   SplitQuaternion{2, 1, 1, 1});
    const auto out = factorize(p);
    const double elapsed = ms_since(t0);

    bool ok = out.factorizable && out.label == CaseLabel::Independent;
    std::string detail;

    // Quadratic factors t^2 + 1 and t^2 + 2t + 3 of the norm polynomial.
    ok = ok && out.certificate.remainders.size() == 2;
    if (ok) {
        const auto& r0 = out.certificate.remainders[0];
        const auto& r1 = out.certificate.remainders[1];
        ok = ok && std::abs(r0.M[0] - 1) <= 1e-10 && std::abs(r0.M[1]) <= 1e-10;
        ok = ok && std::abs(r1.M[0] - 3) <= 1e-10 && std::abs(r1.M[1] - 2) <= 1e-10;
        ok = ok && r0.cls == RemainderClass::NullLine && r1.cls == RemainderClass::NullLine;
        ok = ok && r0.ruling == RulingClass::RightRuling && r1.ruling == RulingClass::LeftRuling;
    }
    // Plane parameters and the zero.
    ok = ok && out.certificate.common_zero_lambda_mu &&
         std::abs(out.certificate.common_zero_lambda_mu->first - 1.0) <= 1e-10 &&
         std::abs(out.certificate.common_zero_lambda_mu->second + 0.5) <= 1e-10;
    if (ok) {
        const Witness& w = out.witnesses.front();
        ok = ok && close(w.unit, SplitQuaternion{1.0}, 1e-10) &&
             close(w.h1, SplitQuaternion{-1, 1.5, -0.5, 0}, 1e-10) &&
             close(w.h2, SplitQuaternion{0, -1.5, 0.5, -1}, 1e-10) && w.residual <= 1e-10;
    }
    ok = ok && elapsed < 10.0;
    detail = "time " + std::to_string(elapsed) + " ms";
    record(1, "worked example reproduced to 1e-10", ok, detail);
}

void criterion2_round_trip() {
    const auto t0 = std::chrono::steady_clock::now();
    std::mt19937 gen(20240801);
    int bad = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        SplitQuaternion a = random_integer_quaternion(gen);
        while (std::abs(norm(a)) < 0.5) a = random_integer_quaternion(gen);
        const Poly p = Poly::constant(a) * Poly::linear_monic(random_integer_quaternion(gen)) *
                       Poly::linear_monic(random_integer_quaternion(gen));
        try {
            const auto out = factorize(p);
            if (!out.factorizable || out.residual > 1e-8 * std::max(1.0, p.scale())) ++bad;
        } catch (const std::exception&) {
            ++bad;
        }
    }
    const double elapsed = ms_since(t0);
    record(2, "1000 random products re-factor with residual <= 1e-8 * scale", bad == 0 && elapsed < 5000.0,
           std::to_string(bad) + " failures, time " + std::to_string(elapsed) + " ms");
}

void criterion3_theorem_b_real() {
    const auto t0 = std::chrono::steady_clock::now();
    std::mt19937 gen(20240802);
    std::uniform_real_distribution<double> small(0.1, 2.5);
    int mismatch = 0, oracle_bad = 0;

    auto check_instance = [&](const SplitQuaternion& c, bool expect) {
        const Poly p = Poly::quadratic(SplitQuaternion{1.0}, SplitQuaternion{}, c);
        const auto out = factorize(p);
        if (out.factorizable != expect) ++mismatch;
        const auto zero = search_zero(SplitQuaternion{}, c);
        if (zero.has_value() != expect) ++oracle_bad;
        if (zero) {
            const auto res = equation_system_residual(SplitQuaternion{}, c, *zero);
            for (double r : res)
                if (std::abs(r) > 1e-9) ++oracle_bad;
        }
    };

    for (int trial = 0; trial < 200; ++trial) {
        // Region 1: norm(Vec c) > 0 -> factorizable.
        {
            const SplitQuaternion v = vectorial_with_norm(small(gen), gen);
            check_instance(v + SplitQuaternion{std::uniform_real_distribution<double>(-2, 2)(gen)},
                           true);
        }
        // Region 2: norm(c) >= 0 and c0 < 0 -> factorizable.
        {
            const double c0 = -small(gen) - 0.2;
            const double vn = std::uniform_real_distribution<double>(-0.8 * c0 * c0, -0.05)(gen);
            check_instance(vectorial_with_norm(vn, gen) + SplitQuaternion{c0}, true);
        }
        // Region 3: norm(c) < 0 -> not factorizable.
        {
            const double c0 = std::uniform_real_distribution<double>(-1.5, 1.5)(gen);
            const double vn =
                std::uniform_real_distribution<double>(-4 * c0 * c0 - 4.0, -1.2 * c0 * c0 - 0.2)(gen);
            check_instance(vectorial_with_norm(vn, gen) + SplitQuaternion{c0}, false);
        }
        // Region 4: norm(c) >= 0, c0 > 0, norm(Vec c) < 0 -> not factorizable.
        {
            const double c0 = small(gen) + 0.3;
            const double vn = std::uniform_real_distribution<double>(-0.8 * c0 * c0, -0.05)(gen);
            check_instance(vectorial_with_norm(vn, gen) + SplitQuaternion{c0}, false);
        }
        // Region 5: norm(Vec c) = 0 and c0 >= 0 -> not factorizable.
        {
            const double c0 = (trial % 10 == 0) ? 0.0 : small(gen);
            check_instance(vectorial_with_norm(0.0, gen) + SplitQuaternion{c0}, false);
        }
    }
    const double elapsed = ms_since(t0);
    record(3, "vanishing-linear-term predicate matches the zero-search oracle",
           mismatch == 0 && oracle_bad == 0 && elapsed < 30000.0,
           std::to_string(mismatch) + " verdict / " + std::to_string(oracle_bad) +
               " oracle mismatches, time " + std::to_string(elapsed) + " ms");
}

void criterion4_theorem_dependent() {
    const auto t0 = std::chrono::steady_clock::now();
    std::mt19937 gen(20240803);
    std::uniform_real_distribution<double> par(-2.5, 2.5);
    std::uniform_real_distribution<double> mag(0.2, 2.0);
    int mismatch = 0, oracle_bad = 0;

    auto predicate = [](double bb, double lambda, double mu) {
        if (std::abs(lambda + mu * mu) <= 1e-12) return true;
        if (bb > 1e-12) return true;
        if (std::abs(bb) <= 1e-12) return lambda < 0;
        const double gap = bb + 4 * lambda;
        const double mixed = 4 * mu * std::sqrt(-bb);
        return gap <= 1e-12 && mixed >= gap - 1e-12 && mixed <= -gap + 1e-12;
    };

    auto check_instance = [&](const SplitQuaternion& b, double lambda, double mu) {
        const bool expect = predicate(norm(b), lambda, mu);
        const auto out = factor_monic_dependent(b, lambda, mu);
        if (out.factorizable != expect) ++mismatch;
        const SplitQuaternion c = SplitQuaternion{lambda} + mu * b;
        const auto zero = search_zero(b, c);
        if (zero.has_value() != expect) ++oracle_bad;
        if (zero) {
            const auto res = equation_system_residual(b, c, *zero);
            for (double r : res)
                if (std::abs(r) > 1e-9) ++oracle_bad;
        }
    };

    for (int trial = 0; trial < 200; ++trial) {
        // Stratum: norm(b) > 0.
        check_instance(vectorial_with_norm(mag(gen), gen), par(gen), par(gen));
        // Stratum: norm(b) = 0.
        check_instance(vectorial_with_norm(0.0, gen), par(gen), par(gen));
        // Stratum: norm(b) < 0.
        check_instance(vectorial_with_norm(-mag(gen), gen), par(gen), par(gen));
        // Boundary: lambda + mu^2 = 0 in every stratum.
        {
            const double mu = par(gen);
            check_instance(vectorial_with_norm(mag(gen) - 2.0, gen), -mu * mu, mu);
        }
        // Boundary: norm(b) + 4 lambda = 0, with and without mu = 0.
        {
            const SplitQuaternion b = vectorial_with_norm(-mag(gen), gen);
            check_instance(b, -norm(b) / 4, 0.0);
            check_instance(b, -norm(b) / 4, 0.7);
        }
    }
    const double elapsed = ms_since(t0);
    record(4, "dependent-coefficient predicate matches the zero-search oracle",
           mismatch == 0 && oracle_bad == 0 && elapsed < 30000.0,
           std::to_string(mismatch) + " verdict / " + std::to_string(oracle_bad) +
               " oracle mismatches, time " + std::to_string(elapsed) + " ms");
}

void criterion5_independent() {
    std::mt19937 gen(20240804);
    int bad = 0, produced = 0;

    auto check = [&](const Poly& p) {
        ++produced;
        try {
            const auto out = factorize(p);
            if (!out.factorizable || out.residual > 1e-8 * std::max(1.0, p.scale())) ++bad;
        } catch (const std::exception&) {
            ++bad;
        }
    };

    while (produced < 480) {
        const SplitQuaternion a = testgen::random_invertible(gen);
        const SplitQuaternion b = random_quaternion(gen);
        const SplitQuaternion c = random_quaternion(gen);
        // rank-3 check on the raw coefficients
        const Poly p = Poly::quadratic(a, b, c);
        const auto inv = inverse(a);
        const SplitQuaternion mb = inv * b, mc = inv * c;
        // skip dependent triples (they belong to other criteria)
        double min_indep = std::min(linf(vector_part(mb)), linf(vector_part(mc)));
        if (min_indep < 0.05) continue;
        if (!independent(vector_part(mb), vector_part(mc))) continue;
        check(p);
    }
    // Engineered: every remainder candidate is a null line.
    for (double sigma : {0.5, 1.0, 1.5, 2.0, 3.0}) {
        for (double shift : {0.0, 1.0, -2.0, 0.5}) {
            const Poly p = Poly::linear_monic(sigma * I) * Poly::linear_monic(sigma * J);
            check(reparametrize(p, shift));
        }
    }
    record(5, "independent coefficients: 100% factorizable (500 instances)", bad == 0,
           std::to_string(bad) + " failures of " + std::to_string(produced));
}

void criterion6_vanishing() {
    std::mt19937 gen(20240805);
    int bad = 0, produced = 0, indep_zero_bad = 0;

    auto check = [&](const Poly& p) {
        if (p.degree() != 2) return;
        if (norm_poly(p).degree() >= 0) return;   // construction missed the quadric
        ++produced;
        try {
            const auto out = factorize(p);
            if (!out.factorizable || out.residual > 1e-8 * std::max(1.0, p.scale())) {
                ++bad;
                return;
            }
            if (out.label == CaseLabel::NullNormIndependent) {
                const SplitQuaternion expected = -(inverse(p[1]) * p[0]);
                if (linf(out.witnesses.front().h2 - expected) > 1e-10 * (1 + linf(expected)))
                    ++indep_zero_bad;
            }
        } catch (const std::exception&) {
            ++bad;
        }
    };

    while (produced < 496) {
        const SplitQuaternion a = random_null(gen);
        switch (produced % 4) {
            case 0:   // right ruling layout
                check(Poly::quadratic(a, a * random_quaternion(gen), a * random_quaternion(gen)));
                break;
            case 1:   // left ruling layout
                check(Poly::quadratic(a, random_quaternion(gen) * a, random_quaternion(gen) * a));
                break;
            case 2: {   // real polynomial under the unit / sparse layouts
                std::uniform_real_distribution<double> d(-3, 3);
                check(Poly::quadratic(a, SplitQuaternion{}, d(gen) * a));
                break;
            }
            default: {   // independent: null-line left factor times a generic monic one
                const SplitQuaternion r1 = random_null(gen);
                const Poly line(std::vector<SplitQuaternion>{random_quaternion(gen) * r1, r1});
                check(line * Poly::linear_monic(random_quaternion(gen)));
                break;
            }
        }
    }
    // Conics on the quadric.
    check(Poly::quadratic(SplitQuaternion{1, 0, 1, 0}, I, SplitQuaternion{-0.25, 0, 0.25, 0}));
    check(Poly::quadratic(SplitQuaternion{2, 0, 2, 0}, 2.0 * I, SplitQuaternion{-0.5, 0, 0.5, 0}));
    check(reparametrize(
        Poly::quadratic(SplitQuaternion{1, 0, 1, 0}, I, SplitQuaternion{-0.25, 0, 0.25, 0}), 1.0));
    check(Poly::quadratic(SplitQuaternion{1, 0, 0, 1}, SplitQuaternion{1, 0, 0, 1} * (J + K),
                          SplitQuaternion{}));

    record(6, "vanishing norm polynomial: 100% factorizable (500 instances)",
           bad == 0 && indep_zero_bad == 0 && produced >= 500,
           std::to_string(bad) + " failures, " + std::to_string(indep_zero_bad) +
               " zero mismatches of " + std::to_string(produced));
}

// Shared corpus for criteria 7 and 8: monic, no real factor, nonvanishing norm.
std::vector<Poly> mixed_corpus() {
    std::mt19937 gen(20240806);
    std::uniform_real_distribution<double> d(-2.5, 2.5);
    std::vector<Poly> corpus;
    while (corpus.size() < 300) {
        SplitQuaternion b, c;
        if (corpus.size() % 2 == 0) {
            b = testgen::random_vectorial(gen, 2.0);
            c = SplitQuaternion{d(gen)} + d(gen) * b;   // dependent
        } else {
            b = random_quaternion(gen, 2.0);
            c = random_quaternion(gen, 2.0);            // generically independent
        }
        const Poly p = Poly::quadratic(SplitQuaternion{1.0}, b, c);
        if (norm_poly(p).degree() < 0) continue;
        if (has_real_factor(p)) continue;
        corpus.push_back(p);
    }
    return corpus;
}

void criterion7_universal() {
    int mismatch = 0;
    for (const auto& p : mixed_corpus()) {
        const auto out = factorize(p);
        bool admissible = false;
        for (const auto& cand : remainder_candidates(p))
            if (cand.R.degree() == 1 && independent(cand.R[0], cand.R[1])) admissible = true;
        if (out.factorizable != admissible) ++mismatch;
    }
    record(7, "factorizable iff some remainder is linear with independent coefficients",
           mismatch == 0, std::to_string(mismatch) + " disagreements of 300");
}

void criterion8_geometric() {
    int mismatch = 0, used = 0;
    for (const auto& p : mixed_corpus()) {
        const SplitQuaternion b = p[1], c = p[0];
        // dependent sub-corpus only
        if (independent(vector_part(b), vector_part(c)) || linf(vector_part(b)) < 1e-9) continue;
        ++used;
        const auto out = factorize(p);
        const auto seg = segment_null_intersections(p);
        const auto line = line_null_intersections({{SplitQuaternion{1.0}}, {b}});
        if (!line || out.factorizable != (seg.count == *line)) ++mismatch;
    }
    record(8, "factorizable iff curve and coefficient line meet the quadric equally",
           mismatch == 0 && used >= 100,
           std::to_string(mismatch) + " disagreements of " + std::to_string(used));
}

void criterion9_property_suites() {
    std::mt19937 gen(20240807);
    int bad = 0;

    // Null-line lemma equivalence.
    for (int trial = 0; trial < 1000; ++trial) {
        SplitQuaternion r1 = random_null(gen);
        SplitQuaternion r0 =
            (trial % 2 == 0) ? random_quaternion(gen) : random_quaternion(gen) * r1;
        if (!independent(r0, r1)) continue;
        const Poly line(std::vector<SplitQuaternion>{r0, r1});
        if (is_null_line(r0, r1) != (norm_poly(line).degree() < 0)) ++bad;
    }
    // Ruling generation via one-sided translates.
    for (int trial = 0; trial < 1000; ++trial) {
        const SplitQuaternion h = random_null(gen);
        const SplitQuaternion p = random_quaternion(gen);
        const SplitQuaternion ph = p * h, hp = h * p;
        if (linf(ph) > 0.1 && !projectively_equal(ph, h) &&
            ruling_type(ph, h) != RulingClass::LeftRuling)
            ++bad;
        if (linf(hp) > 0.1 && !projectively_equal(hp, h) &&
            ruling_type(hp, h) != RulingClass::RightRuling)
            ++bad;
    }
    // Plane-solver residuals on a parameter grid.
    for (int trial = 0; trial < 1000; ++trial) {
        const SplitQuaternion h = random_null(gen);
        const SplitQuaternion g = random_quaternion(gen) * h;
        if (linf(g) < 0.1) continue;
        const auto plane = solve_division_plane(g, h, DivisionSide::Left);
        for (double lam : {-1.0, 0.0, 1.0})
            for (double mu : {-1.0, 0.0, 1.0}) {
                const SplitQuaternion x = plane.u + lam * plane.basis.first + mu * plane.basis.second;
                if (linf(x * h - g) > 1e-9 * (1 + linf(x) * linf(h) + linf(g))) ++bad;
            }
    }
    // Conjugation swaps rulings.
    for (int trial = 0; trial < 1000; ++trial) {
        const SplitQuaternion h = random_null(gen);
        const SplitQuaternion r = random_quaternion(gen) * h;
        if (linf(r) < 0.1 || projectively_equal(r, h)) continue;
        const RulingClass rc = ruling_type(r, h), cc = ruling_type(conj(r), conj(h));
        if (rc == RulingClass::LeftRuling && cc != RulingClass::RightRuling) ++bad;
        if (rc == RulingClass::RightRuling && cc != RulingClass::LeftRuling) ++bad;
    }
    // Norm multiplicativity.
    for (int trial = 0; trial < 1000; ++trial) {
        const SplitQuaternion h = random_quaternion(gen);
        const SplitQuaternion g = random_quaternion(gen);
        const double lhs = norm(h * g), rhs = norm(h) * norm(g);
        if (std::abs(lhs - rhs) > 1e-9 * (1 + std::abs(rhs))) ++bad;
    }
    record(9, "algebra/geometry property suites (5 x 1000 trials)", bad == 0,
           std::to_string(bad) + " property violations");
}

} // namespace

int main() {
    const auto t0 = std::chrono::steady_clock::now();
    criterion1_worked_example();
    criterion2_round_trip();
    criterion3_theorem_b_real();
    criterion4_theorem_dependent();
    criterion5_independent();
    criterion6_vanishing();
    criterion7_universal();
    criterion8_geometric();
    criterion9_property_suites();
    std::printf("%s -- %d criterion failure(s), total %.1f ms\n",
                failures == 0 ? "ALL CRITERIA PASS" : "CRITERIA FAILED", failures, ms_since(t0));
    return failures;
}
