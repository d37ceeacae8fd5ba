// Test-only reference computations. Nothing here goes through the finite
// difference solver or the bound formulas under test.
#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <vector>

namespace oracle {

/// Exact radial harmonic on the shell R <= s <= R + L in degree l:
/// u(s) = A s^l + B s^{2-n-l}, fitted to u(R) = left, u(R+L) = right.
struct AnnulusHarmonic {
    int n, l;
    double R, L, A, B;

    AnnulusHarmonic(int n_, int l_, double R_, double L_, double left, double right)
        : n(n_), l(l_), R(R_), L(L_) {
        const double s0 = R, s1 = R + L;
        const double f0 = std::pow(s0, l), f1 = std::pow(s1, l);
        const double g0 = std::pow(s0, 2 - n - l), g1 = std::pow(s1, 2 - n - l);
        const double det = f0 * g1 - f1 * g0;
        A = (left * g1 - right * g0) / det;
        B = (f0 * right - f1 * left) / det;
    }
    double value(double r) const {
        const double s = R + r;
        return A * std::pow(s, l) + B * std::pow(s, 2 - n - l);
    }
    double derivative(double r) const {
        const double s = R + r;
        const double df = l == 0 ? 0.0 : l * std::pow(s, l - 1);
        return A * df + B * (2 - n - l) * std::pow(s, 1 - n - l);
    }
};

/// Exact per-mode Steklov eigenvalue pair of the annulus profile h = R + r on
/// [0, L] (both boundary spheres spectral).
inline std::array<double, 2> annulus_mode_pair(int n, int l, double R, double L) {
    const AnnulusHarmonic e0(n, l, R, L, 1.0, 0.0), e1(n, l, R, L, 0.0, 1.0);
    const double a0 = std::pow(R, n - 1), a1 = std::pow(R + L, n - 1);
    // Energy matrix from boundary fluxes: M_ij = outward flux of e_j at boundary i.
    const double m00 = -a0 * e0.derivative(0.0), m01 = -a0 * e1.derivative(0.0);
    const double m10 = a1 * e0.derivative(L), m11 = a1 * e1.derivative(L);
    // Generalized eigenproblem M x = sigma diag(a0, a1) x.
    const double s00 = m00 / a0, s11 = m11 / a1, s01 = 0.5 * (m01 + m10) / std::sqrt(a0 * a1);
    const double mean = 0.5 * (s00 + s11);
    const double rad = std::hypot(0.5 * (s00 - s11), s01);
    return {mean - rad, mean + rad};
}

inline long long binom(long long m, long long k) {
    if (k < 0 || k > m) return 0;
    long long c = 1;
    for (long long i = 1; i <= k; ++i) c = c * (m - k + i) / i;
    return c;
}

/// Brute force: every (mode, branch) for l <= l_max expanded by multiplicity
/// and sorted; returns the first `count` values.
inline std::vector<double> brute_force_spectrum(
    const std::function<std::array<double, 2>(int)>& mode_pair, int n, int l_max, int count) {
    std::vector<double> all;
    for (int l = 0; l <= l_max; ++l) {
        const long long m = l == 0 ? 1 : binom(n + l - 2, l) + binom(n + l - 3, l - 1);
        const auto p = mode_pair(l);
        for (long long c = 0; c < m; ++c) {
            all.push_back(p[0]);
            all.push_back(p[1]);
        }
    }
    std::sort(all.begin(), all.end());
    all.resize(std::min<std::size_t>(all.size(), count));
    return all;
}

/// Mixed Steklov eigenvalue of a shell from the exact radial solution
/// u = s^k + b s^{2-n-k}, with b fixed by the outer condition:
/// sigma = -u'(R) / u(R).
inline double shell_mixed(int n, int k, double R, double L, bool dirichlet_outer) {
    const double s1 = R + L;
    double b;
    if (dirichlet_outer) {
        b = -std::pow(s1, 2 * k + n - 2);
    } else {
        b = double(k) / double(k + n - 2) * std::pow(s1, 2 * k + n - 2);
    }
    const double u = std::pow(R, k) + b * std::pow(R, 2 - n - k);
    const double du = (k == 0 ? 0.0 : k * std::pow(R, k - 1)) + b * (2 - n - k) * std::pow(R, 1 - n - k);
    return -du / u;
}

/// Bisection root of a continuous function with a sign change on [lo, hi].
inline double bisect(const std::function<double(double)>& f, double lo, double hi) {
    double flo = f(lo);
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if ((fm < 0) == (flo < 0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

/// Symmetric case n = 3, R1 = R2 = R: with t = 1 + L/(2R) the crossing of the
/// two combinations solves t^4 - 2t^3 - 4t + 2 = 0 (root t > 1).
inline double symmetric_quartic_root() {
    return bisect([](double t) { return t * t * t * t - 2 * t * t * t - 4 * t + 2; }, 1.5, 4.0);
}

}  // namespace oracle
