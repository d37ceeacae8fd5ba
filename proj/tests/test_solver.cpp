#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "oracles.hpp"
#include "steklov/closedform.hpp"
#include "steklov/error.hpp"
#include "steklov/profiles.hpp"
#include "steklov/solver.hpp"

using namespace steklov;

TEST_CASE("harmonic extension on the annulus matches the exact solution") {
    const double R = 1.0, L = 1.0;
    for (int n : {3, 4}) {
        for (int l : {0, 1, 3}) {
            const auto p = annulus_profile(R, L, 2001);
            const auto [e0, e1] = harmonic_extensions(p, Dimension(n), l, 2001);
            const oracle::AnnulusHarmonic ex(n, l, R, L, 1.0, 0.0);
            double err = 0.0;
            for (std::size_t i = 0; i < e0.grid.size(); ++i) {
                err = std::max(err, std::abs(e0.values[i] - ex.value(e0.grid[i])));
            }
            CHECK(err < 1e-6);
            CHECK(e0.boundary.u0 == 1.0);
            CHECK(e0.boundary.uL == 0.0);
            CHECK(e1.boundary.uL == 1.0);
            CHECK(e0.boundary.du0 == doctest::Approx(ex.derivative(0.0)).epsilon(1e-5));
        }
    }
}

TEST_CASE("discrete harmonic extension is linear in the boundary data") {
    const auto p = random_profile(1.0, 0.8, 1.2, 5, 501);
    const auto d = RadialDiscretization::from_profile(p, Dimension(3), ModeSpec::make(2, Dimension(3)), 501);
    const auto a = d.solve_dirichlet(1.0, 0.0);
    const auto b = d.solve_dirichlet(0.0, 1.0);
    const auto c = d.solve_dirichlet(2.5, -0.75);
    double err = 0.0;
    for (std::size_t i = 0; i < c.size(); ++i) err = std::max(err, std::abs(c[i] - (2.5 * a[i] - 0.75 * b[i])));
    CHECK(err < 1e-12);
    // Interior residual vanishes.
    const auto Kc = d.apply(c);
    for (std::size_t i = 1; i + 1 < Kc.size(); ++i) CHECK(std::abs(Kc[i]) < 1e-9);
}

TEST_CASE("mode l = 0 keeps constants harmonic") {
    const auto p = random_profile(1.0, 1.3, 0.9, 17, 401);
    const auto d = RadialDiscretization::from_profile(p, Dimension(4), ModeSpec::make(0, Dimension(4)), 401);
    const auto u = d.solve_dirichlet(1.0, 1.0);
    for (double v : u) CHECK(v == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(std::abs(d.flux_left(u)) < 1e-10);
    CHECK(std::abs(d.flux_right(u)) < 1e-10);
}

TEST_CASE("energy matches the boundary fluxes (Green identity)") {
    const auto p = random_profile(1.0, 0.6, 1.1, 23, 801);
    const auto d = RadialDiscretization::from_profile(p, Dimension(3), ModeSpec::make(1, Dimension(3)), 801);
    const auto a = d.solve_dirichlet(1.0, 0.0);
    const auto b = d.solve_dirichlet(0.0, 1.0);
    CHECK(d.energy(a, b) == doctest::Approx(d.flux_right(a)).epsilon(1e-10));
    CHECK(d.energy(a, b) == doctest::Approx(d.flux_left(b)).epsilon(1e-10));
    CHECK(d.energy(a, a) == doctest::Approx(d.flux_left(a)).epsilon(1e-10));
}

TEST_CASE("DtN matrix is symmetric after normalization") {
    for (std::uint64_t seed : {1u, 2u, 3u, 4u}) {
        const auto p = random_profile(1.0, 0.7, 1.0, seed, 1001);
        for (int l : {0, 1, 5}) {
            const auto m = dtn_matrix(p, Dimension(3), l, 1001);
            const auto s = m.normalized();
            CHECK(std::abs(s[0][1] - s[1][0]) <= 1e-10 * std::max(1.0, std::abs(s[0][1])));
            const auto ev = m.eigenvalues();
            CHECK(ev[0] <= ev[1]);
        }
    }
}

TEST_CASE("annulus DtN eigenvalues match the exact pair") {
    for (int n : {3, 4, 5}) {
        for (int l : {0, 1, 2, 6}) {
            const auto p = annulus_profile(1.0, 1.0, 4001);
            const auto ev = dtn_matrix(p, Dimension(n), l, 4001).eigenvalues();
            const auto ex = oracle::annulus_mode_pair(n, l, 1.0, 1.0);
            CHECK(ev[0] == doctest::Approx(ex[0]).epsilon(1e-6).scale(1.0));
            CHECK(ev[1] == doctest::Approx(ex[1]).epsilon(1e-6));
        }
    }
}

TEST_CASE("symmetric profile has equal DtN diagonal") {
    const auto p = degenerate_profile(1.0, 1.0, 2.0, 0.1, 2001);
    for (int l : {0, 1, 4}) {
        const auto m = dtn_matrix(p, Dimension(3), l, 2001);
        CHECK(std::abs(m.entries[0][0] - m.entries[1][1]) < 1e-8);
    }
}

TEST_CASE("spectrum agrees with brute-force enumeration on the annulus") {
    for (int n : {3, 4}) {
        const auto p = annulus_profile(1.0, 1.0, 4001);
        const int count = 20;
        const auto res = steklov_spectrum(p, Dimension(n), count);
        const auto bf = oracle::brute_force_spectrum(
            [n](int l) { return oracle::annulus_mode_pair(n, l, 1.0, 1.0); }, n, 10, count + 1);
        REQUIRE(res.eigenvalues.size() == std::size_t(count + 1));
        for (int k = 0; k <= count; ++k) {
            CHECK(res.eigenvalues[k] == doctest::Approx(bf[k]).epsilon(1e-6).scale(1.0));
        }
        CHECK(std::is_sorted(res.eigenvalues.begin(), res.eigenvalues.end()));
        CHECK(std::abs(res.eigenvalues[0]) < 1e-8);
    }
}

TEST_CASE("near-degenerate tent approaches sigma_1 = 1.4") {
    const auto p = degenerate_profile(1.0, 1.0, 2.0, 1e-3, 2001);
    const auto res = steklov_spectrum(p, Dimension(3), 4);
    CHECK(std::abs(res.eigenvalues[0]) < 1e-8);
    CHECK(std::abs(res.eigenvalues[1] - 1.4) < 0.02 * 1.4);
    // Triple eigenvalue from the l = 1 mode on S^2.
    CHECK(res.entries[1].l == 1);
    CHECK(res.eigenvalues[3] == doctest::Approx(res.eigenvalues[1]));
}

TEST_CASE("second-order convergence of the mixed oracle") {
    const ShellSpec s(Dimension(3), 1.0, 1.0);
    for (auto outer : {OuterCondition::Dirichlet, OuterCondition::Neumann}) {
        const int k = 2;
        const double exact = outer == OuterCondition::Dirichlet ? sigma_dirichlet(s, k) : sigma_neumann(s, k);
        const double e1 = std::abs(mixed_eigenvalue_oracle(s, k, outer, 201) - exact);
        const double e2 = std::abs(mixed_eigenvalue_oracle(s, k, outer, 401) - exact);
        const double ratio = e1 / e2;
        CHECK(ratio > 3.5);
        CHECK(ratio < 4.5);
        CHECK(std::abs(mixed_eigenvalue_extrapolated(s, k, outer, 2001) - exact) < 1e-8 * exact);
    }
}

TEST_CASE("Richardson extrapolation examples") {
    CHECK(richardson(1.0, 1.0, 2) == 1.0);
    CHECK(richardson(1.04, 1.01, 2) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(richardson(3.0, 2.0, 1) == doctest::Approx(1.0));
}

TEST_CASE("per-mode values increase with the degree") {
    for (std::uint64_t seed : {7u, 8u, 9u}) {
        const auto p = random_profile(1.0, 1.0, 1.5, seed, 1001);
        const auto res = steklov_spectrum(p, Dimension(3), 60);
        double prev0 = -1.0, prev1 = -1.0;
        for (const auto& [l, pair] : res.per_mode) {
            if (l > 10) break;
            CHECK(pair[0] > prev0);
            CHECK(pair[1] > prev1);
            prev0 = pair[0];
            prev1 = pair[1];
        }
    }
}

TEST_CASE("spectrum scales as 1/t under dilation") {
    const auto p = random_profile(1.0, 0.8, 1.4, 31, 2001);
    const auto base = steklov_spectrum(p, Dimension(3), 6);
    for (double t : {0.5, 3.0}) {
        const auto s = steklov_spectrum(p.scaled(t), Dimension(3), 6);
        for (int k = 1; k <= 6; ++k) {
            CHECK(s.eigenvalues[k] == doctest::Approx(base.eigenvalues[k] / t).epsilon(1e-4));
        }
    }
}

TEST_CASE("spectrum input validation") {
    const auto p = annulus_profile(1.0, 1.0, 101);
    CHECK_THROWS_AS(steklov_spectrum(p, Dimension(3), -1), InvalidInputError);
    CHECK_THROWS_AS(steklov_spectrum(p, Dimension(3), 4, 8), InvalidInputError);
    std::vector<double> r{0.0, 0.5, 1.0}, h{1.0, 3.0, 1.0};
    CHECK_THROWS_AS(steklov_spectrum(RevolutionProfile(r, h, 1.0, 1.0), Dimension(3), 2), InvalidInputError);
}

TEST_CASE("tent dominates random profiles and the larger profile has larger sigma_1") {
    // Domination sanity only: the tent is the pointwise maximum.
    for (std::uint64_t seed = 40; seed < 44; ++seed) {
        const auto p = random_profile(1.0, 1.0, 2.0, seed, 1001);
        const auto t = degenerate_profile(1.0, 1.0, 2.0, 0.0, 1001);
        for (int i = 0; i < p.size(); ++i) CHECK(p.h_values()[i] <= t.h_values()[i] + 1e-12);
        const double s_p = steklov_spectrum(p, Dimension(3), 1).eigenvalues[1];
        const double s_t = steklov_spectrum(t, Dimension(3), 1).eigenvalues[1];
        CHECK(s_p < s_t);
    }
}
