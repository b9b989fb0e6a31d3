#pragma once

#include <string>
#include <string_view>

#include "nts/lrp/lrp.hpp"

namespace nts::lrp {

/// Canonical text format:
///
///     n m alpha rounding          alpha may be "auto"; rounding is
///     demand                      "none" or "nearest-integer"
///     ... (n lines)
///     capacity opening_cost
///     ... (m lines)
///     MATRIX                      then n+m rows of n+m costs
///     COORDS                      or n+m lines "x y" (Euclidean costs)
///
/// Clients come first, then depots. Blank lines and '#' comments are
/// ignored. Errors are ParseError with the 1-based line number.
Instance parse_lrp(std::string_view text);

/// Writes the MATRIX form with round-trip precision.
std::string format_lrp(const Instance& inst);

}  // namespace nts::lrp
