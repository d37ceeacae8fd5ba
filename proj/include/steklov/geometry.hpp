#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace steklov {

/// Dimension n of the hypersurface M = [0, L] x S^{n-1}. Only n >= 3 is
/// supported; the boundary spheres have dimension n - 1.
class Dimension {
public:
    explicit Dimension(int n);

    [[nodiscard]] int value() const noexcept { return n_; }
    /// n - 1, the exponent of the boundary volume factor h^{n-1}.
    [[nodiscard]] int sphere_dim() const noexcept { return n_ - 1; }

    friend bool operator==(Dimension, Dimension) = default;

private:
    int n_;
};

/// Spherical shell A_{R+L}: the region between concentric spheres of radii R
/// and R + L. A zero width is representable because the bound formulas need
/// the degenerate shell; operations that cannot handle it reject it.
struct ShellSpec {
    ShellSpec(Dimension n, double inner_radius, double width);

    Dimension n;
    double inner_radius;
    double width;

    [[nodiscard]] double outer_radius() const noexcept { return inner_radius + width; }
};

/// Spherical-harmonic degree l on S^{n-1} together with its Laplace eigenvalue
/// l(l+n-2) and multiplicity.
struct ModeSpec {
    int l;
    double lambda;
    long long multiplicity;

    static ModeSpec make(int l, Dimension n);
};

double mode_eigenvalue(int l, Dimension n);
long long mode_multiplicity(int l, Dimension n);

/// Meridian profile h(r) of the metric dr^2 + h(r)^2 g0, sampled on a uniform
/// grid over [0, L]. Construction only checks that the arrays are consistent;
/// admissibility is established with validate_profile().
class RevolutionProfile {
public:
    /// Profile sampled on the uniform grid r_i = i L / (N - 1). R1 and R2 are
    /// taken from the first and last samples.
    RevolutionProfile(double length, std::vector<double> h_values);

    /// Profile with explicit grid and declared boundary radii (file input,
    /// diagnostics). The grid is kept as given.
    RevolutionProfile(std::vector<double> r_grid, std::vector<double> h_values, double r1,
                      double r2);

    [[nodiscard]] const std::vector<double>& r_grid() const noexcept { return r_; }
    [[nodiscard]] const std::vector<double>& h_values() const noexcept { return h_; }
    [[nodiscard]] double r1() const noexcept { return r1_; }
    [[nodiscard]] double r2() const noexcept { return r2_; }
    [[nodiscard]] double length() const noexcept { return r_.back(); }
    [[nodiscard]] std::size_t size() const noexcept { return h_.size(); }
    [[nodiscard]] double spacing() const noexcept { return length() / double(size() - 1); }

    /// Piecewise-linear interpolation of h at r in [0, L].
    [[nodiscard]] double at(double r) const;

    [[nodiscard]] double max_height() const;

    /// Same profile with r -> L - r (swaps the roles of the boundary spheres).
    [[nodiscard]] RevolutionProfile reflected() const;

    /// Lengths scaled by t: r -> t r, h -> t h.
    [[nodiscard]] RevolutionProfile scaled(double t) const;

private:
    std::vector<double> r_;
    std::vector<double> h_;
    double r1_;
    double r2_;
};

enum class Violation {
    TooFewPoints,
    NonIncreasingGrid,
    NonUniformGrid,
    GridNotAtZero,
    EndpointMismatch,
    NonPositiveHeight,
    SlopeViolation,
    InfeasibleLength,
};

std::string to_string(Violation v);

struct ValidationIssue {
    Violation kind;
    std::size_t index;  // grid index where the issue was found (worst index for slopes)
    std::string detail;
};

struct ValidationReport {
    std::vector<ValidationIssue> issues;
    double max_slope = 0.0;
    std::size_t max_slope_index = 0;

    [[nodiscard]] bool ok() const noexcept { return issues.empty(); }
    [[nodiscard]] bool has(Violation v) const;
    [[nodiscard]] std::string summary() const;
};

inline constexpr double kDefaultSlopeTol = 1e-9;

ValidationReport validate_profile(const RevolutionProfile& p, double slope_tol = kDefaultSlopeTol);

/// Throws InvalidInputError carrying the report summary if p is not admissible.
void require_valid(const RevolutionProfile& p, double slope_tol = kDefaultSlopeTol);

}  // namespace steklov
