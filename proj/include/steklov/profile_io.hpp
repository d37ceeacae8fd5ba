#pragma once

#include <iosfwd>
#include <string>

#include "steklov/geometry.hpp"

namespace steklov {

/// Reads the `r,h` CSV profile format: a header line `r,h` followed by one
/// row per grid point. R1, R2 and L are inferred from the first and last
/// rows. Throws InvalidInputError naming the offending line on malformed
/// input. The result is not validated.
RevolutionProfile read_profile_csv(std::istream& in);
RevolutionProfile read_profile_csv_file(const std::string& path);

/// Writes the profile in the same format with 17 significant digits, so a
/// write/read cycle reproduces the samples exactly.
void write_profile_csv(std::ostream& out, const RevolutionProfile& p);

}  // namespace steklov
