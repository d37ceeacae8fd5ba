#pragma once

#include <array>
#include <functional>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "steklov/closedform.hpp"
#include "steklov/geometry.hpp"

namespace steklov {

inline constexpr int kDefaultGridSize = 2001;
inline constexpr int kMinGridSize = 16;
inline constexpr int kMaxModeDegree = 64;

/// Conservative second-order discretization of the radial operator
///
///   -(h^{n-1} u')' + lambda h^{n-3} u
///
/// on a uniform grid of N nodes over [0, L]. The flux coefficient h^{n-1} is
/// evaluated at half-nodes and the potential with trapezoidal weights, so the
/// assembled stiffness matrix K is exactly the Hessian of the discrete energy
///
///   E(u) = sum_i a_{i+1/2} (u_{i+1} - u_i)^2 / dr + sum_i w_i q_i u_i^2.
///
/// Boundary fluxes (K u)_0 and (K u)_{N-1} play the role of -a u'(0) and
/// a u'(L); they are what the Dirichlet-to-Neumann map is built from.
class RadialDiscretization {
public:
    /// h_nodes holds h at the N grid nodes, h_mid at the N - 1 half-nodes.
    RadialDiscretization(std::span<const double> h_nodes, std::span<const double> h_mid,
                         double length, Dimension n, const ModeSpec& mode);

    static RadialDiscretization from_function(const std::function<double(double)>& h,
                                              double length, Dimension n, const ModeSpec& mode,
                                              int grid_size);
    /// Uses the stored samples when grid_size matches the profile, otherwise
    /// resamples by linear interpolation.
    static RadialDiscretization from_profile(const RevolutionProfile& p, Dimension n,
                                             const ModeSpec& mode, int grid_size);

    [[nodiscard]] int size() const noexcept { return static_cast<int>(diag_.size()); }
    [[nodiscard]] double spacing() const noexcept { return dr_; }
    [[nodiscard]] double length() const noexcept { return length_; }
    [[nodiscard]] const ModeSpec& mode() const noexcept { return mode_; }
    /// h^{n-1} at r = 0 and r = L (boundary volume factors).
    [[nodiscard]] double weight_left() const noexcept { return w_left_; }
    [[nodiscard]] double weight_right() const noexcept { return w_right_; }

    /// Discrete harmonic function with u(0) = left and u(L) = right.
    [[nodiscard]] std::vector<double> solve_dirichlet(double left, double right) const;
    /// Discrete harmonic function with u(0) = left and the natural (zero-flux)
    /// condition at r = L.
    [[nodiscard]] std::vector<double> solve_natural_right(double left) const;

    /// (K u)_i for every node.
    [[nodiscard]] std::vector<double> apply(std::span<const double> u) const;
    [[nodiscard]] double flux_left(std::span<const double> u) const;
    [[nodiscard]] double flux_right(std::span<const double> u) const;
    [[nodiscard]] double energy(std::span<const double> u, std::span<const double> v) const;

private:
    [[nodiscard]] std::vector<double> solve_interior(std::size_t last, double left,
                                                     double right) const;

    double length_;
    double dr_;
    ModeSpec mode_;
    std::vector<double> diag_;
    std::vector<double> off_;  // off_[i] couples nodes i and i + 1
    double w_left_;
    double w_right_;
};

struct RadialSolution {
    ModeSpec mode;
    std::vector<double> grid;
    std::vector<double> values;
    struct BoundaryData {
        double u0;
        double uL;
        double du0;  // recovered from the discrete boundary flux
        double duL;
    } boundary;
};

/// Per-mode Dirichlet-to-Neumann matrix. energy[i][j] = E(e_i, e_j) with e_0,
/// e_1 the harmonic extensions of (1, 0) and (0, 1); entries[i][j] =
/// energy[i][j] / weights[i]. The per-mode Steklov eigenvalues solve
/// energy x = sigma diag(weights) x.
struct DtnMatrix {
    ModeSpec mode;
    std::array<std::array<double, 2>, 2> energy;
    std::array<std::array<double, 2>, 2> entries;
    std::array<double, 2> weights;

    /// W^{-1/2} E W^{-1/2}, symmetric up to solve rounding.
    [[nodiscard]] std::array<std::array<double, 2>, 2> normalized() const;
    /// Ascending pair of per-mode Steklov eigenvalues.
    [[nodiscard]] std::array<double, 2> eigenvalues() const;
};

struct SpectrumEntry {
    double value;
    int l;       // harmonic degree of the attaining mode
    int branch;  // 0 = lower, 1 = upper per-mode eigenvalue
    long long multiplicity;
};

struct SpectrumResult {
    /// sigma_0 .. sigma_K with repetition according to multiplicity.
    std::vector<double> eigenvalues;
    /// Mode that produced each entry of `eigenvalues`.
    std::vector<SpectrumEntry> entries;
    std::map<int, std::array<double, 2>> per_mode;
    int grid_size = 0;
    bool extrapolated = false;
};

std::pair<RadialSolution, RadialSolution> harmonic_extensions(const RevolutionProfile& p,
                                                              Dimension n, int l,
                                                              int grid_size = kDefaultGridSize);

DtnMatrix dtn_matrix(const RevolutionProfile& p, Dimension n, int l,
                     int grid_size = kDefaultGridSize);

/// sigma_0 .. sigma_K of the full Steklov problem. A grid size different from
/// the profile's native one resamples h by linear interpolation.
SpectrumResult steklov_spectrum(const RevolutionProfile& p, Dimension n, int count,
                                int grid_size);

/// Same as steklov_spectrum on the profile's native grid.
SpectrumResult steklov_spectrum(const RevolutionProfile& p, Dimension n, int count);

/// Harmonic extension of boundary value 1 from the inner sphere of the shell
/// (profile h = R + r) with the given condition on the outer sphere.
RadialSolution mixed_extension(const ShellSpec& shell, int l, OuterCondition outer,
                               int grid_size = kDefaultGridSize);

/// Numeric mixed Steklov eigenvalue of the shell in mode l: E(e, e) / R^{n-1}
/// with e from mixed_extension.
double mixed_eigenvalue_oracle(const ShellSpec& shell, int l, OuterCondition outer,
                               int grid_size = kDefaultGridSize);

/// Oracle evaluated at N and 2N - 1 nodes (halved spacing) and combined with
/// second-order Richardson extrapolation.
double mixed_eigenvalue_extrapolated(const ShellSpec& shell, int l, OuterCondition outer,
                                     int grid_size = kDefaultGridSize);

/// (2^order v_2N - v_N) / (2^order - 1).
double richardson(double value_at_n, double value_at_2n, int order);

}  // namespace steklov
