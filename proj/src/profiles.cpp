#include "steklov/profiles.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "steklov/bounds.hpp"
#include "steklov/error.hpp"
#include "steklov/solver.hpp"

namespace steklov {

namespace {

std::vector<double> grid_points(double length, int grid_size) {
    if (grid_size < 2) throw InvalidInputError("profile grid needs at least 2 points");
    const auto n = static_cast<std::size_t>(grid_size);
    std::vector<double> r(n);
    for (std::size_t i = 0; i < n; ++i) r[i] = length * double(i) / double(n - 1);
    r.back() = length;
    return r;
}

void check_radii(double r1, double r2, double length) {
    if (!(r1 > 0.0) || !(r2 > 0.0)) throw InvalidInputError("boundary radii must be positive");
    if (!(length > 0.0)) throw InvalidInputError("meridian length must be positive");
    if (length < std::abs(r1 - r2) - 1e-12 * std::max({r1, r2, length})) {
        throw InvalidInputError("infeasible geometry: L < |R1 - R2|");
    }
}

// Quadratic arc joining slope +1 (left of apex) and -1 (right of apex).
double apex_cap(double x, double apex, double w) { return apex - 0.5 * w - x * x / (2.0 * w); }

}  // namespace

RevolutionProfile annulus_profile(double r, double length, int grid_size) {
    if (!(r > 0.0) || !(length > 0.0)) throw InvalidInputError("annulus needs R > 0 and L > 0");
    auto grid = grid_points(length, grid_size);
    std::vector<double> h(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) h[i] = r + grid[i];
    h.back() = r + length;
    return RevolutionProfile(std::move(grid), std::move(h), r, r + length);
}

double rounded_tent(double r, double r1, double r2, double length, double w) {
    const double r_apex = 0.5 * (length - r1 + r2);
    const double apex = 0.5 * (r1 + r2 + length);
    const double x = r - r_apex;
    if (w > 0.0 && std::abs(x) < w) return apex_cap(x, apex, w);
    return std::min(r1 + r, r2 + length - r);
}

RevolutionProfile degenerate_profile(double r1, double r2, double length, double corner_epsilon,
                                     int grid_size) {
    check_radii(r1, r2, length);
    if (!(corner_epsilon >= 0.0)) throw InvalidInputError("corner epsilon must be nonnegative");
    const double r_apex = std::max(0.5 * (length - r1 + r2), 0.0);
    // The cap sits w/2 below the apex.
    const double w = std::min({2.0 * corner_epsilon, r_apex, length - r_apex});
    auto grid = grid_points(length, grid_size);
    std::vector<double> h(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) h[i] = rounded_tent(grid[i], r1, r2, length, w);
    h.front() = r1;
    h.back() = r2;
    return RevolutionProfile(std::move(grid), std::move(h), r1, r2);
}

CappedProfile capped_profile(const RevolutionProfile& p, double plateau_margin,
                             double smoothing_width) {
    require_valid(p);
    if (!(plateau_margin > 0.0 && plateau_margin <= 1.0)) {
        throw InvalidInputError("plateau margin must lie in (0, 1]");
    }
    if (!(smoothing_width > 0.0)) throw InvalidInputError("smoothing width must be positive");

    const double r1 = p.r1();
    const double r2 = p.r2();
    const double len = p.length();
    const double apex = 0.5 * (r1 + r2 + len);
    const double m = p.max_height();
    const double level = m + plateau_margin * std::max(apex - m, 0.0);
    const double rise_end = level - r1;          // R1 + r reaches the plateau
    const double fall_start = len - (level - r2);  // R2 + L - r leaves the plateau

    // Corner rounding stays above m as long as w <= level - m, and the two
    // corners must not overlap.
    double w = std::min({smoothing_width, level - m, 0.5 * (fall_start - rise_end)});
    const auto& grid = p.r_grid();
    const auto& h1 = p.h_values();
    std::vector<double> h2(grid.size());

    CappedProfile out{p, level, w, false};
    if (!(w > p.spacing())) {
        // Input already (almost) touches the apex: dominate it with the rounded tent.
        const double wt = std::min({smoothing_width, std::max(0.5 * (len - r1 + r2), 0.0),
                                    std::max(0.5 * (len + r1 - r2), 0.0)});
        for (std::size_t i = 0; i < grid.size(); ++i) {
            h2[i] = std::max(h1[i], rounded_tent(grid[i], r1, r2, len, wt));
        }
        out.fell_back = true;
        out.smoothing_width = wt;
        out.level = apex;
    } else {
        for (std::size_t i = 0; i < grid.size(); ++i) {
            const double r = grid[i];
            double v;
            if (r <= rise_end - w) {
                v = r1 + r;
            } else if (r < rise_end + w) {
                const double x = r - rise_end - w;
                v = level - x * x / (4.0 * w);
            } else if (r <= fall_start - w) {
                v = level;
            } else if (r < fall_start + w) {
                const double x = r - fall_start + w;
                v = level - x * x / (4.0 * w);
            } else {
                v = r2 + len - r;
            }
            h2[i] = v;
        }
    }
    h2.front() = r1;
    h2.back() = r2;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (h2[i] < h1[i] - 1e-12 * std::max(1.0, h1[i])) {
            throw NumericalError("capped profile fails to dominate its input at index " +
                                 std::to_string(i));
        }
    }
    out.profile = RevolutionProfile(grid, std::move(h2), r1, r2);
    return out;
}

SharpnessFamilyParams SharpnessFamilyParams::make(Dimension n, double radius, double length,
                                                  double epsilon) {
    if (!(radius > 0.0) || !(length > 0.0)) {
        throw InvalidInputError("sharpness family needs R > 0 and L > 0");
    }
    if (!(epsilon > 0.0)) throw InvalidInputError("epsilon must be positive");
    const double bound = theorem2_bound(BoundInputs(n, radius, radius, length)).bound;
    const double eps_star = epsilon / bound;
    const double apex = radius + 0.5 * length;
    const double p = n.sphere_dim();
    // The gap (R + r)^{n-1} - h^{n-1} peaks at the apex, where h = apex - w/2.
    const double top = std::pow(apex, p);
    double w_max = top > eps_star ? 2.0 * (apex - std::pow(top - eps_star, 1.0 / p)) : 2.0 * apex;
    const double width = std::min(0.9 * w_max, 0.99 * 0.5 * length);
    return SharpnessFamilyParams{n, radius, length, epsilon, bound, eps_star, width};
}

RevolutionProfile sharpness_profile(const SharpnessFamilyParams& params, int grid_size) {
    const double R = params.radius;
    const double len = params.length;
    const double w = params.corner_width;
    if (!(w > 0.0 && w < 0.5 * len)) throw InvalidInputError("corner width must lie in (0, L/2)");
    const double dr = len / double(grid_size - 1);
    if (w < 2.0 * dr) {
        throw InvalidInputError("epsilon = " + std::to_string(params.epsilon) +
                                " needs a corner narrower than two grid cells; increase the grid size");
    }
    auto grid = grid_points(len, grid_size);
    std::vector<double> h(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) h[i] = rounded_tent(grid[i], R, R, len, w);
    h.front() = R;
    h.back() = R;
    return RevolutionProfile(std::move(grid), std::move(h), R, R);
}

SharpnessGap sharpness_gap(const SharpnessFamilyParams& params, int grid_size) {
    const auto p = sharpness_profile(params, grid_size);
    const auto tent = degenerate_profile(params.radius, params.radius, params.length, 0.0, grid_size);
    const auto spec = steklov_spectrum(p, params.n, 1);
    const double s_tent = steklov_spectrum(tent, params.n, 1).eigenvalues.at(1);
    SharpnessGap g;
    g.sigma1 = spec.eigenvalues.at(1);
    g.tent_sigma1 = s_tent;
    g.bound = params.bound;
    g.raw_gap = params.bound - g.sigma1;
    g.gap = s_tent - g.sigma1;
    g.mode = spec.entries.at(1).l;
    return g;
}

RevolutionProfile random_profile(double r1, double r2, double length, std::uint64_t seed,
                                 int grid_size) {
    check_radii(r1, r2, length);
    if (!(length > std::abs(r1 - r2))) {
        throw InvalidInputError("random profiles need L > |R1 - R2|");
    }
    constexpr double kDelta = 1e-3;
    constexpr double kMaxSlope = 1.0 - kDelta;
    constexpr int kAttempts = 64;
    const double mean_slope = (r2 - r1) / length;
    if (std::abs(mean_slope) >= kMaxSlope) {
        throw GenerationError("seed " + std::to_string(seed) +
                              ": mean slope |R2 - R1| / L is too close to 1 to sample");
    }
    const double floor_h = 0.05 * std::min(r1, r2);
    auto grid = grid_points(length, grid_size);
    const std::size_t cells = grid.size() - 1;
    const double dr = length / double(cells);

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    std::uniform_real_distribution<double> amp_dist(0.2, 1.2);
    std::uniform_int_distribution<int> terms_dist(1, 4);

    std::vector<double> raw(cells), slope(cells), h(grid.size());
    for (int attempt = 0; attempt < kAttempts; ++attempt) {
        const int terms = terms_dist(rng);
        const double amp = amp_dist(rng);
        std::vector<double> a(terms), b(terms);
        for (int j = 0; j < terms; ++j) {
            a[j] = unit(rng) / (j + 1);
            b[j] = unit(rng) / (j + 1);
        }
        for (std::size_t i = 0; i < cells; ++i) {
            const double x = (double(i) + 0.5) / double(cells);
            double s = 0.0;
            for (int j = 0; j < terms; ++j) {
                const double arg = std::numbers::pi * (j + 1) * x;
                s += a[j] * std::cos(arg) + b[j] * std::sin(arg);
            }
            raw[i] = mean_slope + amp * s;
        }

        // Constant slope shift c such that sum clip(raw + c) dr = R2 - R1.
        auto integral = [&](double c) {
            double sum = 0.0;
            for (double s : raw) sum += std::clamp(s + c, -kMaxSlope, kMaxSlope);
            return sum * dr;
        };
        const double target = r2 - r1;
        double lo = -2.0, hi = 2.0;
        for (int it = 0; it < 200; ++it) {
            const double mid = 0.5 * (lo + hi);
            if (integral(mid) < target) {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        const double shift = 0.5 * (lo + hi);
        for (std::size_t i = 0; i < cells; ++i) slope[i] = std::clamp(raw[i] + shift, -kMaxSlope, kMaxSlope);

        h[0] = r1;
        for (std::size_t i = 0; i < cells; ++i) h[i + 1] = h[i] + slope[i] * dr;
        h.back() = r2;
        if (*std::min_element(h.begin(), h.end()) < floor_h) continue;

        RevolutionProfile p(grid, h, r1, r2);
        if (validate_profile(p).ok()) return p;
    }
    throw GenerationError("seed " + std::to_string(seed) + ": no admissible profile after " +
                          std::to_string(kAttempts) + " attempts");
}

}  // namespace steklov
