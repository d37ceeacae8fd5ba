#include "steklov/solver.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "steklov/error.hpp"

namespace steklov {

namespace {

void check_grid(int grid_size) {
    if (grid_size < kMinGridSize) {
        throw InvalidInputError("grid size " + std::to_string(grid_size) + " is below the minimum " +
                                std::to_string(kMinGridSize));
    }
}

std::vector<double> uniform_grid(double length, std::size_t n) {
    std::vector<double> r(n);
    for (std::size_t i = 0; i < n; ++i) r[i] = length * double(i) / double(n - 1);
    r.back() = length;
    return r;
}

}  // namespace

RadialDiscretization::RadialDiscretization(std::span<const double> h_nodes,
                                           std::span<const double> h_mid, double length,
                                           Dimension n, const ModeSpec& mode)
    : length_(length), mode_(mode) {
    const std::size_t N = h_nodes.size();
    if (N < 2 || h_mid.size() + 1 != N) {
        throw InvalidInputError("radial discretization needs N nodes and N - 1 half-nodes");
    }
    if (!(length > 0.0)) throw InvalidInputError("radial interval must have positive length");
    dr_ = length / double(N - 1);
    const int p = n.sphere_dim();
    diag_.assign(N, 0.0);
    off_.assign(N - 1, 0.0);
    for (std::size_t i = 0; i + 1 < N; ++i) {
        const double a = std::pow(h_mid[i], p) / dr_;
        off_[i] = -a;
        diag_[i] += a;
        diag_[i + 1] += a;
    }
    if (mode.lambda != 0.0) {
        for (std::size_t i = 0; i < N; ++i) {
            const double w = (i == 0 || i + 1 == N) ? 0.5 * dr_ : dr_;
            diag_[i] += mode.lambda * std::pow(h_nodes[i], p - 2) * w;
        }
    }
    w_left_ = std::pow(h_nodes.front(), p);
    w_right_ = std::pow(h_nodes.back(), p);
}

RadialDiscretization RadialDiscretization::from_function(const std::function<double(double)>& h,
                                                         double length, Dimension n,
                                                         const ModeSpec& mode, int grid_size) {
    check_grid(grid_size);
    const auto N = static_cast<std::size_t>(grid_size);
    const double dr = length / double(N - 1);
    std::vector<double> nodes(N), mid(N - 1);
    for (std::size_t i = 0; i < N; ++i) nodes[i] = h(i + 1 == N ? length : dr * double(i));
    for (std::size_t i = 0; i + 1 < N; ++i) mid[i] = h(dr * (double(i) + 0.5));
    return RadialDiscretization(nodes, mid, length, n, mode);
}

RadialDiscretization RadialDiscretization::from_profile(const RevolutionProfile& p, Dimension n,
                                                        const ModeSpec& mode, int grid_size) {
    check_grid(grid_size);
    if (static_cast<std::size_t>(grid_size) == p.size()) {
        const auto& h = p.h_values();
        std::vector<double> mid(h.size() - 1);
        for (std::size_t i = 0; i + 1 < h.size(); ++i) mid[i] = 0.5 * (h[i] + h[i + 1]);
        return RadialDiscretization(h, mid, p.length(), n, mode);
    }
    return from_function([&p](double r) { return p.at(r); }, p.length(), n, mode, grid_size);
}

std::vector<double> RadialDiscretization::solve_interior(std::size_t last, double left,
                                                         double right) const {
    // Unknowns are nodes 1..last; node 0 carries `left`. If last < N - 1 the
    // node N - 1 carries `right`, otherwise row N - 1 is the natural condition.
    const std::size_t N = diag_.size();
    std::vector<double> u(N, 0.0);
    u[0] = left;
    if (last + 1 < N) u[N - 1] = right;
    if (last == 0) return u;

    const std::size_t m = last;  // rows 1..m
    std::vector<double> c(m + 1, 0.0), d(m + 1, 0.0);
    for (std::size_t i = 1; i <= m; ++i) {
        double rhs = 0.0;
        if (i == 1) rhs -= off_[0] * left;
        if (i == N - 2 && last + 1 < N) rhs -= off_[N - 2] * right;
        const double sub = (i == 1) ? 0.0 : off_[i - 1];
        const double sup = (i < m) ? off_[i] : 0.0;
        const double denom = diag_[i] - sub * c[i - 1];
        if (!(std::abs(denom) > 0.0) || !std::isfinite(denom)) {
            throw NumericalError("singular tridiagonal system in radial solve");
        }
        c[i] = sup / denom;
        d[i] = (rhs - sub * d[i - 1]) / denom;
    }
    u[m] = d[m];
    for (std::size_t i = m - 1; i >= 1; --i) u[i] = d[i] - c[i] * u[i + 1];
    return u;
}

std::vector<double> RadialDiscretization::solve_dirichlet(double left, double right) const {
    return solve_interior(diag_.size() - 2, left, right);
}

std::vector<double> RadialDiscretization::solve_natural_right(double left) const {
    return solve_interior(diag_.size() - 1, left, 0.0);
}

std::vector<double> RadialDiscretization::apply(std::span<const double> u) const {
    const std::size_t N = diag_.size();
    std::vector<double> out(N);
    for (std::size_t i = 0; i < N; ++i) {
        double v = diag_[i] * u[i];
        if (i > 0) v += off_[i - 1] * u[i - 1];
        if (i + 1 < N) v += off_[i] * u[i + 1];
        out[i] = v;
    }
    return out;
}

double RadialDiscretization::flux_left(std::span<const double> u) const {
    return diag_[0] * u[0] + off_[0] * u[1];
}

double RadialDiscretization::flux_right(std::span<const double> u) const {
    const std::size_t N = diag_.size();
    return off_[N - 2] * u[N - 2] + diag_[N - 1] * u[N - 1];
}

double RadialDiscretization::energy(std::span<const double> u, std::span<const double> v) const {
    const auto Kv = apply(v);
    double s = 0.0;
    for (std::size_t i = 0; i < Kv.size(); ++i) s += u[i] * Kv[i];
    return s;
}

// ---------------------------------------------------------------------------

std::array<std::array<double, 2>, 2> DtnMatrix::normalized() const {
    std::array<std::array<double, 2>, 2> s{};
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) s[i][j] = energy[i][j] / std::sqrt(weights[i] * weights[j]);
    }
    return s;
}

std::array<double, 2> DtnMatrix::eigenvalues() const {
    const auto s = normalized();
    const double a = s[0][0];
    const double c = s[1][1];
    const double b = 0.5 * (s[0][1] + s[1][0]);
    const double mean = 0.5 * (a + c);
    const double rad = std::hypot(0.5 * (a - c), b);
    const double hi = mean + rad;
    // det / hi avoids cancellation in mean - rad when the pair is well separated.
    const double lo = hi > 0.0 ? (a * c - b * b) / hi : mean - rad;
    return {lo, hi};
}

namespace {

RadialSolution make_solution(const RadialDiscretization& disc, std::vector<double> values) {
    RadialSolution s;
    s.mode = disc.mode();
    s.grid = uniform_grid(disc.length(), values.size());
    const double fl = disc.flux_left(values);
    const double fr = disc.flux_right(values);
    s.boundary = {values.front(), values.back(), -fl / disc.weight_left(), fr / disc.weight_right()};
    s.values = std::move(values);
    return s;
}

void check_profile_for_solver(const RevolutionProfile& p) {
    require_valid(p);
    if (!(p.length() > 0.0)) throw InvalidInputError("profile length must be positive");
}

}  // namespace

std::pair<RadialSolution, RadialSolution> harmonic_extensions(const RevolutionProfile& p,
                                                              Dimension n, int l, int grid_size) {
    check_grid(grid_size);
    check_profile_for_solver(p);
    const auto disc = RadialDiscretization::from_profile(p, n, ModeSpec::make(l, n), grid_size);
    return {make_solution(disc, disc.solve_dirichlet(1.0, 0.0)),
            make_solution(disc, disc.solve_dirichlet(0.0, 1.0))};
}

namespace {

DtnMatrix dtn_from(const RadialDiscretization& disc) {
    const auto e0 = disc.solve_dirichlet(1.0, 0.0);
    const auto e1 = disc.solve_dirichlet(0.0, 1.0);
    DtnMatrix m;
    m.mode = disc.mode();
    // Boundary fluxes of the discrete harmonic extensions: E(e_i, e_j) = (K e_j)_i.
    m.energy = {{{disc.flux_left(e0), disc.flux_left(e1)},
                 {disc.flux_right(e0), disc.flux_right(e1)}}};
    m.weights = {disc.weight_left(), disc.weight_right()};
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) m.entries[i][j] = m.energy[i][j] / m.weights[i];
    }
    return m;
}

}  // namespace

DtnMatrix dtn_matrix(const RevolutionProfile& p, Dimension n, int l, int grid_size) {
    check_grid(grid_size);
    check_profile_for_solver(p);
    return dtn_from(RadialDiscretization::from_profile(p, n, ModeSpec::make(l, n), grid_size));
}

SpectrumResult steklov_spectrum(const RevolutionProfile& p, Dimension n, int count,
                                int grid_size) {
    if (count < 1) throw InvalidInputError("eigenvalue count K must be at least 1");
    check_grid(grid_size);
    check_profile_for_solver(p);

    const auto want = static_cast<std::size_t>(count) + 1;
    SpectrumResult res;
    res.grid_size = grid_size;
    std::vector<SpectrumEntry> flat;
    auto by_value = [](const SpectrumEntry& a, const SpectrumEntry& b) {
        if (a.value != b.value) return a.value < b.value;
        if (a.l != b.l) return a.l < b.l;
        return a.branch < b.branch;
    };

    std::array<double, 2> prev{0.0, 0.0};
    bool done = false;
    for (int l = 0; l <= kMaxModeDegree; ++l) {
        const auto mode = ModeSpec::make(l, n);
        const auto pair = dtn_from(RadialDiscretization::from_profile(p, n, mode, grid_size)).eigenvalues();
        if (l > 0) {
            for (int b = 0; b < 2; ++b) {
                const double slack = 1e-10 * std::abs(prev[b]) + 1e-12;
                if (pair[b] < prev[b] - slack) {
                    std::ostringstream os;
                    os << "per-mode eigenvalues decreased from l = " << l - 1 << " to l = " << l
                       << " (branch " << b << ": " << prev[b] << " -> " << pair[b]
                       << "); mode cutoff is not valid";
                    throw NumericalError(os.str());
                }
            }
        }
        prev = pair;
        if (flat.size() >= want && pair[0] > flat[want - 1].value) {
            done = true;
            break;
        }
        res.per_mode[l] = pair;
        const auto copies = static_cast<std::size_t>(
            std::min<long long>(mode.multiplicity, static_cast<long long>(want)));
        for (int b = 0; b < 2; ++b) {
            for (std::size_t c = 0; c < copies; ++c) flat.push_back({pair[b], l, b, mode.multiplicity});
        }
        std::sort(flat.begin(), flat.end(), by_value);
        if (flat.size() > want) flat.resize(want);
    }
    if (!done) {
        throw NumericalError("mode cutoff exceeded l = " + std::to_string(kMaxModeDegree) +
                             " before sigma_" + std::to_string(count) + " was resolved");
    }
    res.entries = flat;
    res.eigenvalues.reserve(flat.size());
    for (const auto& e : flat) res.eigenvalues.push_back(e.value);
    return res;
}

SpectrumResult steklov_spectrum(const RevolutionProfile& p, Dimension n, int count) {
    return steklov_spectrum(p, n, count, static_cast<int>(p.size()));
}

RadialSolution mixed_extension(const ShellSpec& shell, int l, OuterCondition outer,
                               int grid_size) {
    check_grid(grid_size);
    if (!(shell.width > 0.0)) throw InvalidInputError("oracle needs a shell of positive width");
    const double R = shell.inner_radius;
    const auto disc = RadialDiscretization::from_function(
        [R](double r) { return R + r; }, shell.width, shell.n, ModeSpec::make(l, shell.n),
        grid_size);
    auto u = outer == OuterCondition::Dirichlet ? disc.solve_dirichlet(1.0, 0.0)
                                                : disc.solve_natural_right(1.0);
    return make_solution(disc, std::move(u));
}

double mixed_eigenvalue_oracle(const ShellSpec& shell, int l, OuterCondition outer,
                               int grid_size) {
    const auto sol = mixed_extension(shell, l, outer, grid_size);
    // E(e, e) = e(0) (K e)_0 for a discrete harmonic e with e(0) = 1.
    return -sol.boundary.du0;
}

double mixed_eigenvalue_extrapolated(const ShellSpec& shell, int l, OuterCondition outer,
                                     int grid_size) {
    const double coarse = mixed_eigenvalue_oracle(shell, l, outer, grid_size);
    const double fine = mixed_eigenvalue_oracle(shell, l, outer, 2 * grid_size - 1);
    return richardson(coarse, fine, 2);
}

double richardson(double value_at_n, double value_at_2n, int order) {
    if (order < 1) throw InvalidInputError("Richardson order must be at least 1");
    const double f = std::ldexp(1.0, order);
    return (f * value_at_2n - value_at_n) / (f - 1.0);
}

}  // namespace steklov
