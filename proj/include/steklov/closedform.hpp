#pragma once

#include <string>

#include "steklov/geometry.hpp"

namespace steklov {

/// Boundary condition imposed on the outer sphere of a shell. The spectral
/// (Steklov) condition always sits on the inner sphere.
enum class OuterCondition { Dirichlet, Neumann };

std::string to_string(OuterCondition c);

/// Distinct mixed Steklov-Dirichlet eigenvalue sigma_(k)^D of the shell,
/// attained by the degree-k harmonics. Requires a positive width.
double sigma_dirichlet(const ShellSpec& shell, int k);

/// Distinct mixed Steklov-Neumann eigenvalue sigma_(k)^N of the shell.
///
///   sigma = k (rho - 1) / (R (1 + k rho / (k + n - 2))),
///   rho   = ((R + L) / R)^(2k + n - 2).
///
/// The (R+L)-power form follows from imposing u'(R+L) = 0 on
/// u = r^k + b r^(2-n-k); the oracle solver confirms it for all k tested.
/// Returns 0 for k = 0 (constants) and for a zero-width shell.
double sigma_neumann(const ShellSpec& shell, int k);

struct ShellEigenvalue {
    ShellSpec shell;
    int k;
    OuterCondition kind;
    double value;
};

ShellEigenvalue shell_eigenvalue(const ShellSpec& shell, int k, OuterCondition kind);

}  // namespace steklov
