#pragma once

#include <string>

#include <json.hpp>

namespace steklov {

/// Deterministic JSON text: keys in lexicographic order, two-space
/// indentation, floating-point numbers with 17 significant digits (always
/// carrying a decimal point or exponent), non-finite numbers as null.
/// Parsing the output and emitting it again reproduces it byte for byte.
std::string canonical_json(const nlohmann::json& doc);

}  // namespace steklov
