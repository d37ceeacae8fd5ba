#pragma once

#include <string>
#include <utility>

#include "steklov/geometry.hpp"

namespace steklov {

/// Boundary radii and meridian length of a hypersurface of revolution.
/// Requires L >= |R1 - R2| and L > 0.
struct BoundInputs {
    BoundInputs(Dimension n, double r1, double r2, double length);

    Dimension n;
    double r1;
    double r2;
    double length;

    /// Roles of the two boundary spheres exchanged.
    [[nodiscard]] BoundInputs swapped() const { return BoundInputs(n, r2, r1, length); }
    [[nodiscard]] BoundInputs scaled(double t) const;
};

struct SplitLengths {
    double l1;  // width of the shell around the first boundary sphere
    double l2;  // L - l1
};

struct Weights {
    double q1;
    double q2;
    double alpha;
    double beta;
};

enum class BoundCombo { Neumann, Dirichlet };
std::string to_string(BoundCombo c);

struct BoundReport {
    double r1;
    double r2;
    double length;
    bool swapped;  // inputs were reordered so that r1 >= r2
    double l1;
    double q1;
    double q2;
    double alpha;
    double beta;
    double neumann_combo;
    double dirichlet_combo;  // +infinity when one shell has zero width
    double bound;
    BoundCombo attained_by;
};

/// L1 = (L - R1 + R2) / 2 and L - L1. Both shells A_{R1+L1}, A_{R2+L-L1}
/// have outer radius (R1 + R2 + L) / 2.
SplitLengths split_length(const BoundInputs& in);

/// Q_i = R_i^{n-1} (R_i + (R1+R2+L)^n R_i^{1-n} / ((n-1) 2^n))^2 and the
/// normalized weights alpha = Q1/(Q1+Q2), beta = Q2/(Q1+Q2).
Weights weights(const BoundInputs& in);

/// Dirichlet-combination f1(L). Returns +infinity when L = |R1 - R2|.
double dirichlet_combo(const BoundInputs& in);

/// Neumann-combination f2(L) = alpha sigma_1^N(A_{R1+L1}) + beta sigma_1^N(A_{R2+L-L1}).
double neumann_combo(const BoundInputs& in);

/// min(f1, f2) with all intermediate quantities.
BoundReport theorem2_bound(const BoundInputs& in);

inline constexpr double kDefaultBoundTol = 1e-10;

struct CrossingResult {
    double lstar;
    double f1;
    double f2;
    double b_n;  // f1 at the crossing
    int iterations;
};

/// Length L* where f1 and f2 cross, found by bracket expansion and bisection.
/// |f1 - f2| <= tol f1 at the returned point.
CrossingResult lstar_crossing(Dimension n, double r1, double r2, double tol = kDefaultBoundTol);

double lstar(Dimension n, double r1, double r2, double tol = kDefaultBoundTol);

/// L-independent bound B_n(R1, R2) = f1(L*).
double b_n(Dimension n, double r1, double r2, double tol = kDefaultBoundTol);

/// Compares both sign variants of the Q_i formula against the value
/// R_i^{n-1} psi_i(0)^2 obtained from the numerically computed first
/// Steklov-Neumann eigenfunction of each shell, normalized to match the
/// closed-form radial solution r + c r^{1-n} at the common outer radius.
struct WeightSignDiagnostic {
    double q_plus[2];
    double q_minus[2];
    double q_numeric[2];
    /// Relative deviation of each variant's alpha from the numeric alpha.
    double alpha_error_plus;
    double alpha_error_minus;
    [[nodiscard]] bool supports_plus() const { return alpha_error_plus <= alpha_error_minus; }
};

WeightSignDiagnostic weight_sign_diagnostic(const BoundInputs& in, int grid_size = 2001);

}  // namespace steklov
