#include <doctest.h>

#include <cmath>

#include "steklov/bounds.hpp"
#include "steklov/error.hpp"
#include "steklov/profiles.hpp"
#include "steklov/solver.hpp"

using namespace steklov;

TEST_CASE("constructed profiles are admissible") {
    CHECK(validate_profile(annulus_profile(1.0, 2.0, 101)).ok());
    CHECK(validate_profile(degenerate_profile(1.0, 0.5, 1.0, 0.0, 101)).ok());
    CHECK(validate_profile(degenerate_profile(1.0, 0.5, 1.0, 0.05, 2001)).ok());
    CHECK(validate_profile(degenerate_profile(1.0, 1.0, 2.0, 1e-3, 2001)).ok());
    CHECK_THROWS_AS(annulus_profile(-1.0, 1.0, 101), InvalidInputError);
    CHECK_THROWS_AS(degenerate_profile(1.0, 0.5, 0.4, 0.0, 101), InvalidInputError);
}

TEST_CASE("rounded tent stays within epsilon of the tent and is C1 at the cap ends") {
    const double r1 = 1.0, r2 = 0.7, L = 1.5, w = 0.1;
    const double apex_r = 0.5 * (L - r1 + r2);
    const double apex = r1 + apex_r;
    for (int i = 0; i <= 1000; ++i) {
        const double r = L * i / 1000.0;
        const double tent = std::min(r1 + r, r2 + L - r);
        const double v = rounded_tent(r, r1, r2, L, w);
        CHECK(v <= tent + 1e-15);
        CHECK(tent - v <= 0.5 * w + 1e-15);
    }
    CHECK(rounded_tent(apex_r, r1, r2, L, w) == doctest::Approx(apex - 0.5 * w));
    const double h = 1e-7;
    for (double edge : {apex_r - w, apex_r + w}) {
        const double left = (rounded_tent(edge, r1, r2, L, w) - rounded_tent(edge - h, r1, r2, L, w)) / h;
        const double right = (rounded_tent(edge + h, r1, r2, L, w) - rounded_tent(edge, r1, r2, L, w)) / h;
        CHECK(left == doctest::Approx(right).epsilon(1e-5));
    }
}

TEST_CASE("the tent dominates random profiles pointwise") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto p = random_profile(1.0, 0.6, 1.3, seed, 501);
        const auto t = degenerate_profile(1.0, 0.6, 1.3, 0.0, 501);
        for (int i = 0; i < p.size(); ++i) CHECK(p.h_values()[i] <= t.h_values()[i] + 1e-12);
    }
}

TEST_CASE("random profiles are deterministic in the seed and admissible") {
    const auto a = random_profile(1.0, 0.5, 1.0, 99, 2001);
    const auto b = random_profile(1.0, 0.5, 1.0, 99, 2001);
    const auto c = random_profile(1.0, 0.5, 1.0, 100, 2001);
    CHECK(a.h_values() == b.h_values());
    CHECK(a.h_values() != c.h_values());
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const auto p = random_profile(1.0, 0.5, 1.0, seed, 401);
        const auto rep = validate_profile(p);
        CHECK(rep.ok());
        CHECK(p.r1() == 1.0);
        CHECK(p.r2() == doctest::Approx(0.5).epsilon(1e-12));
        for (double h : p.h_values()) CHECK(h >= 0.05 * 0.5);
    }
}

TEST_CASE("random profiles near the degenerate length") {
    // Mean slope 0.99: the clipped slope field still has room to vary.
    const auto p = random_profile(1.0, 0.5, 0.5 / 0.99, 3, 401);
    CHECK(validate_profile(p).ok());
    // Mean slope beyond the clip level cannot be sampled.
    CHECK_THROWS_AS(random_profile(1.0, 0.5, 0.5 + 1e-4, 3, 401), GenerationError);
    CHECK_THROWS_AS(random_profile(1.0, 0.5, 0.4, 3, 401), InvalidInputError);
}

TEST_CASE("capped profile dominates and raises the first eigenvalues") {
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
        const auto p = random_profile(1.0, 1.0, 1.0, 500 + seed, 2001);
        const auto c = capped_profile(p);
        CHECK(validate_profile(c.profile).ok());
        CHECK(c.level >= p.max_height());
        for (int i = 0; i < p.size(); ++i) CHECK(c.profile.h_values()[i] >= p.h_values()[i] - 1e-12);
        const auto s0 = steklov_spectrum(p, Dimension(3), 5);
        const auto s1 = steklov_spectrum(c.profile, Dimension(3), 5);
        for (int k = 1; k <= 5; ++k) CHECK(s1.eigenvalues[k] > s0.eigenvalues[k]);
    }
}

TEST_CASE("capped profile falls back near the tent") {
    const auto t = degenerate_profile(1.0, 1.0, 1.0, 1e-4, 201);
    const auto c = capped_profile(t);
    CHECK(validate_profile(c.profile).ok());
    for (int i = 0; i < t.size(); ++i) CHECK(c.profile.h_values()[i] >= t.h_values()[i] - 1e-12);
}

TEST_CASE("sharpness family satisfies the pointwise gap bound") {
    for (int n : {3, 4}) {
        for (double eps : {0.2, 0.1, 0.05, 0.02}) {
            const auto params = SharpnessFamilyParams::make(Dimension(n), 1.0, 2.0, eps);
            CHECK(params.epsilon_star == doctest::Approx(eps / params.bound));
            const auto p = sharpness_profile(params, 4001);
            CHECK(validate_profile(p).ok());
            for (int i = 0; i < p.size(); ++i) {
                const double r = p.r_grid()[i];
                if (r > 1.0) break;
                const double gap = std::pow(1.0 + r, n - 1) - std::pow(p.h_values()[i], n - 1);
                CHECK(gap >= -1e-12);
                CHECK(gap < params.epsilon_star);
            }
        }
    }
}

TEST_CASE("the tent attains the bound for equal radii") {
    // Two shells glued at the apex: sigma_1 = min(sigma_(0)^D, sigma_(1)^N) = A(L).
    for (int n : {3, 4}) {
        const double A = theorem2_bound(BoundInputs(Dimension(n), 1.0, 1.0, 2.0)).bound;
        const auto t = degenerate_profile(1.0, 1.0, 2.0, 0.0, 4001);
        CHECK(steklov_spectrum(t, Dimension(n), 1).eigenvalues[1] == doctest::Approx(A).epsilon(1e-6));
    }
}

TEST_CASE("sharpness gaps are positive, shrink with epsilon and stay below epsilon") {
    double prev = INFINITY;
    for (double eps : {0.2, 0.1, 0.05, 0.02}) {
        const auto g = sharpness_gap(SharpnessFamilyParams::make(Dimension(3), 1.0, 2.0, eps), 2001);
        CHECK(g.gap > 0.0);
        CHECK(g.gap < prev);
        CHECK(g.gap < eps);
        CHECK(g.mode == 1);
        // The uncorrected gap differs by the tent's discretization error only.
        CHECK(g.raw_gap - g.gap == doctest::Approx(g.bound - g.tent_sigma1));
        prev = g.gap;
    }
}

TEST_CASE("corrected sharpness gap is grid independent") {
    for (double eps : {0.2, 0.1}) {
        const auto params = SharpnessFamilyParams::make(Dimension(3), 1.0, 2.0, eps);
        const double a = sharpness_gap(params, 2001).gap;
        const double b = sharpness_gap(params, 4001).gap;
        CHECK(b == doctest::Approx(a).epsilon(0.01));
    }
}

TEST_CASE("sharpness family rejects corners below grid resolution") {
    const auto params = SharpnessFamilyParams::make(Dimension(3), 1.0, 2.0, 1e-9);
    CHECK_THROWS_AS(sharpness_profile(params, 101), InvalidInputError);
}
