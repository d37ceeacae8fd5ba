#include "steklov/closedform.hpp"

#include <cmath>

#include "steklov/error.hpp"

namespace steklov {

namespace {

// Above this value of log(rho) the formulas are rewritten in terms of 1/rho.
constexpr double kLogSwitch = 600.0;

double log_rho(const ShellSpec& s, int k) {
    const int exponent = 2 * k + s.n.value() - 2;
    return double(exponent) * std::log1p(s.width / s.inner_radius);
}

void check_degree(int k) {
    if (k < 0) throw InvalidInputError("mode degree k must be nonnegative");
}

}  // namespace

std::string to_string(OuterCondition c) {
    return c == OuterCondition::Dirichlet ? "dirichlet" : "neumann";
}

double sigma_dirichlet(const ShellSpec& s, int k) {
    check_degree(k);
    if (!(s.width > 0.0)) {
        throw InvalidInputError("Steklov-Dirichlet eigenvalue needs a shell of positive width");
    }
    const double R = s.inner_radius;
    const double kk = k;
    const double m = double(k + s.n.value() - 2);
    const double lr = log_rho(s, k);
    if (lr > kLogSwitch) {
        const double inv = std::exp(-lr);
        return (m + kk * inv) / (R * -std::expm1(-lr));
    }
    const double rho = std::exp(lr);
    return (kk + m * rho) / (R * std::expm1(lr));
}

double sigma_neumann(const ShellSpec& s, int k) {
    check_degree(k);
    if (k == 0) return 0.0;
    const double R = s.inner_radius;
    const double kk = k;
    const double ratio = kk / double(k + s.n.value() - 2);
    const double lr = log_rho(s, k);
    if (lr > kLogSwitch) {
        const double inv = std::exp(-lr);
        return kk * -std::expm1(-lr) / (R * (inv + ratio));
    }
    const double rho = std::exp(lr);
    return kk * std::expm1(lr) / (R * (1.0 + ratio * rho));
}

ShellEigenvalue shell_eigenvalue(const ShellSpec& shell, int k, OuterCondition kind) {
    const double v =
        kind == OuterCondition::Dirichlet ? sigma_dirichlet(shell, k) : sigma_neumann(shell, k);
    return ShellEigenvalue{shell, k, kind, v};
}

}  // namespace steklov
