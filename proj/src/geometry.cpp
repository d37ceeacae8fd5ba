#include "steklov/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>
#include <utility>

#include "steklov/error.hpp"

namespace steklov {

Dimension::Dimension(int n) : n_(n) {
    if (n < 3) {
        throw InvalidInputError("unsupported dimension n = " + std::to_string(n) +
                                " (hypersurfaces of revolution require n >= 3)");
    }
}

ShellSpec::ShellSpec(Dimension dim, double inner, double w)
    : n(dim), inner_radius(inner), width(w) {
    if (!(inner > 0.0) || !std::isfinite(inner)) {
        throw InvalidInputError("shell inner radius must be positive and finite");
    }
    if (!(w >= 0.0) || !std::isfinite(w)) {
        throw InvalidInputError("shell width must be nonnegative and finite");
    }
}

double mode_eigenvalue(int l, Dimension n) {
    if (l < 0) throw InvalidInputError("harmonic degree must be nonnegative");
    return double(l) * double(l + n.value() - 2);
}

namespace {

long long binomial(long long m, long long k) {
    if (k < 0 || k > m) return 0;
    k = std::min(k, m - k);
    // c * (m - k + i) is divisible by i; divide by the gcd first to delay overflow.
    long long c = 1;
    for (long long i = 1; i <= k; ++i) {
        const long long f = m - k + i;
        const long long g = std::gcd(c, i);
        long long prod;
        if (__builtin_mul_overflow(c / g, f / (i / g), &prod)) {
            throw InvalidInputError("spherical-harmonic multiplicity overflows");
        }
        c = prod;
    }
    return c;
}

}  // namespace

long long mode_multiplicity(int l, Dimension n) {
    if (l < 0) throw InvalidInputError("harmonic degree must be nonnegative");
    if (l == 0) return 1;
    const long long nn = n.value();
    return binomial(nn + l - 2, l) + binomial(nn + l - 3, l - 1);
}

ModeSpec ModeSpec::make(int l, Dimension n) {
    return ModeSpec{l, mode_eigenvalue(l, n), mode_multiplicity(l, n)};
}

// ---------------------------------------------------------------------------

RevolutionProfile::RevolutionProfile(double length, std::vector<double> h_values)
    : h_(std::move(h_values)) {
    if (h_.size() < 2) throw InvalidInputError("profile needs at least 2 samples");
    if (!(length > 0.0)) throw InvalidInputError("profile length must be positive");
    const std::size_t n = h_.size();
    r_.resize(n);
    for (std::size_t i = 0; i < n; ++i) r_[i] = length * double(i) / double(n - 1);
    r_.back() = length;
    r1_ = h_.front();
    r2_ = h_.back();
}

RevolutionProfile::RevolutionProfile(std::vector<double> r_grid, std::vector<double> h_values,
                                     double r1, double r2)
    : r_(std::move(r_grid)), h_(std::move(h_values)), r1_(r1), r2_(r2) {
    if (r_.size() != h_.size()) {
        throw InvalidInputError("profile grid and height arrays differ in length");
    }
    if (h_.empty()) throw InvalidInputError("profile has no samples");
}

double RevolutionProfile::at(double r) const {
    const double len = length();
    if (r <= 0.0) return h_.front();
    if (r >= len) return h_.back();
    // Grid is uniform for admissible profiles; locate by index then refine.
    auto it = std::upper_bound(r_.begin(), r_.end(), r);
    const auto j = static_cast<std::size_t>(it - r_.begin());
    const std::size_t i = j - 1;
    const double t = (r - r_[i]) / (r_[j] - r_[i]);
    return h_[i] + t * (h_[j] - h_[i]);
}

double RevolutionProfile::max_height() const { return *std::max_element(h_.begin(), h_.end()); }

RevolutionProfile RevolutionProfile::reflected() const {
    std::vector<double> h(h_.rbegin(), h_.rend());
    std::vector<double> r(r_.size());
    const double len = length();
    for (std::size_t i = 0; i < r_.size(); ++i) r[i] = len - r_[r_.size() - 1 - i];
    r.front() = 0.0;
    return RevolutionProfile(std::move(r), std::move(h), r2_, r1_);
}

RevolutionProfile RevolutionProfile::scaled(double t) const {
    if (!(t > 0.0)) throw InvalidInputError("scale factor must be positive");
    std::vector<double> r(r_), h(h_);
    for (auto& x : r) x *= t;
    for (auto& x : h) x *= t;
    return RevolutionProfile(std::move(r), std::move(h), r1_ * t, r2_ * t);
}

// ---------------------------------------------------------------------------

std::string to_string(Violation v) {
    switch (v) {
        case Violation::TooFewPoints: return "too-few-points";
        case Violation::NonIncreasingGrid: return "non-increasing-grid";
        case Violation::NonUniformGrid: return "non-uniform-grid";
        case Violation::GridNotAtZero: return "grid-not-at-zero";
        case Violation::EndpointMismatch: return "endpoint-mismatch";
        case Violation::NonPositiveHeight: return "nonpositive-height";
        case Violation::SlopeViolation: return "slope-violation";
        case Violation::InfeasibleLength: return "infeasible-length";
    }
    return "unknown";
}

bool ValidationReport::has(Violation v) const {
    return std::any_of(issues.begin(), issues.end(),
                       [v](const ValidationIssue& i) { return i.kind == v; });
}

std::string ValidationReport::summary() const {
    if (ok()) return "profile is admissible";
    std::ostringstream os;
    os << "profile is not admissible:";
    for (const auto& i : issues) os << " [" << to_string(i.kind) << " at " << i.index << ": " << i.detail << "]";
    return os.str();
}

ValidationReport validate_profile(const RevolutionProfile& p, double slope_tol) {
    ValidationReport rep;
    const auto& r = p.r_grid();
    const auto& h = p.h_values();
    const std::size_t n = h.size();
    auto add = [&](Violation v, std::size_t i, std::string d) {
        rep.issues.push_back({v, i, std::move(d)});
    };
    if (n < 2) {
        add(Violation::TooFewPoints, 0, "need at least 2 grid points");
        return rep;
    }
    const double len = r.back() - r.front();
    const double scale = std::max(std::abs(len), 1.0);

    if (std::abs(r.front()) > 1e-12 * scale) add(Violation::GridNotAtZero, 0, "grid must start at r = 0");

    bool increasing = true;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (!(r[i + 1] > r[i])) {
            add(Violation::NonIncreasingGrid, i + 1, "r values must be strictly increasing");
            increasing = false;
            break;
        }
    }
    if (increasing) {
        const double dr = len / double(n - 1);
        for (std::size_t i = 0; i < n; ++i) {
            if (std::abs(r[i] - (r.front() + dr * double(i))) > 1e-9 * scale) {
                add(Violation::NonUniformGrid, i, "grid spacing is not uniform");
                break;
            }
        }
    }

    auto close = [](double a, double b) {
        return std::abs(a - b) <= 1e-10 * std::max({1.0, std::abs(a), std::abs(b)});
    };
    if (!close(h.front(), p.r1())) {
        add(Violation::EndpointMismatch, 0,
            "h(0) = " + std::to_string(h.front()) + " but R1 = " + std::to_string(p.r1()));
    }
    if (!close(h.back(), p.r2())) {
        add(Violation::EndpointMismatch, n - 1,
            "h(L) = " + std::to_string(h.back()) + " but R2 = " + std::to_string(p.r2()));
    }

    for (std::size_t i = 0; i < n; ++i) {
        if (!(h[i] > 0.0) || !std::isfinite(h[i])) {
            add(Violation::NonPositiveHeight, i, "h must be positive");
            break;
        }
    }

    if (increasing) {
        for (std::size_t i = 0; i + 1 < n; ++i) {
            const double s = std::abs(h[i + 1] - h[i]) / (r[i + 1] - r[i]);
            if (s > rep.max_slope || std::isnan(s)) {
                rep.max_slope = s;
                rep.max_slope_index = i;
            }
        }
        if (!(rep.max_slope <= 1.0 + slope_tol)) {
            add(Violation::SlopeViolation, rep.max_slope_index,
                "discrete slope " + std::to_string(rep.max_slope) + " exceeds 1");
        }
    }

    if (len < std::abs(p.r1() - p.r2()) - 1e-12 * scale) {
        add(Violation::InfeasibleLength, n - 1, "L < |R1 - R2|");
    }
    return rep;
}

void require_valid(const RevolutionProfile& p, double slope_tol) {
    const auto rep = validate_profile(p, slope_tol);
    if (!rep.ok()) throw InvalidInputError(rep.summary());
}

}  // namespace steklov
