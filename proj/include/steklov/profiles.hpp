#pragma once

#include <cstdint>

#include "steklov/geometry.hpp"

namespace steklov {

/// h(r) = R + r on [0, L]: the shell A_{R+L} seen as a profile.
RevolutionProfile annulus_profile(double r, double length, int grid_size);

/// Tent min(R1 + r, R2 + L - r), the pointwise maximum over all admissible
/// profiles with these radii and length. With corner_epsilon > 0 the apex is
/// replaced by a C1 parabolic cap lying at most corner_epsilon below it.
RevolutionProfile degenerate_profile(double r1, double r2, double length, double corner_epsilon,
                                     int grid_size);

/// Tent with a parabolic cap of half-width w around its apex at r_apex.
double rounded_tent(double r, double r1, double r2, double length, double w);

struct CappedProfile {
    RevolutionProfile profile;
    double level;            // plateau height, at least max h of the input
    double smoothing_width;  // half-width of the rounding at each plateau corner
    bool fell_back;          // input too close to the tent; rounded tent used instead
};

/// Dominating profile: rises as R1 + r, plateaus at
/// level = m + plateau_margin (apex - m) with m = max h, and descends as
/// R2 + L - r. Plateau corners are rounded with C1 parabolic arcs. The result
/// satisfies h2 >= h1 pointwise and stays admissible.
CappedProfile capped_profile(const RevolutionProfile& p, double plateau_margin = 0.5,
                             double smoothing_width = 0.05);

/// Parameters of the symmetric rounded-tent family approaching the bound.
struct SharpnessFamilyParams {
    Dimension n;
    double radius;  // R1 = R2
    double length;
    double epsilon;
    double bound;          // two-shell bound A(L) for these radii and length
    double epsilon_star;   // epsilon / bound
    double corner_width;   // half-width of the apex rounding

    static SharpnessFamilyParams make(Dimension n, double radius, double length, double epsilon);
};

/// Symmetric rounded tent with (R + r)^{n-1} - h^{n-1} < epsilon / A(L) on
/// [0, L/2]. Throws InvalidInputError if the corner is narrower than two grid
/// cells.
RevolutionProfile sharpness_profile(const SharpnessFamilyParams& params, int grid_size);

/// Gap A(L) - sigma_1 of one member of the sharpness family.
///
/// With equal radii the tent is two shells glued at the apex and its sigma_1
/// equals A(L) exactly. The true gaps shrink far below the O(dr^2) error of
/// either eigenvalue, so `gap` compares against the tent solved on the same
/// grid, which cancels that error. `raw_gap` is A(L) minus the uncorrected
/// numeric sigma_1.
struct SharpnessGap {
    double sigma1;
    double tent_sigma1;
    double bound;
    double raw_gap;
    double gap;
    int mode;  // harmonic degree attaining sigma_1
};
SharpnessGap sharpness_gap(const SharpnessFamilyParams& params, int grid_size);

/// Deterministic random admissible profile. A smooth slope field (random
/// trigonometric series) is clipped to |s| <= 1 - 1e-3 and shifted by a
/// constant so that it integrates to R2 - R1; samples with h below
/// 0.05 min(R1, R2) are rejected and redrawn. Throws GenerationError after
/// the retry budget.
RevolutionProfile random_profile(double r1, double r2, double length, std::uint64_t seed,
                                 int grid_size);

}  // namespace steklov
