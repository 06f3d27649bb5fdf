#pragma once

#include <string>
#include <vector>

#include "fracsimp/simpson_core.hpp"

// Serialization of BoundReport to JSON and CSV. Field names and order are
// fixed: theorem, tau, m, gamma, delta, p, q, k_lo, k_hi, lipschitz, lhs,
// rhs, slack, pass, quad_error. Floating-point values are printed with 17
// significant digits so equal inputs always serialize to identical bytes.

namespace fracsimp {

// %.17g rendering of a double ("1e+300", "0.13888888888888889", ...).
std::string format_double(double v);

std::string to_json(const BoundReport& r);
std::string to_json(const std::vector<BoundReport>& rs);  // JSON array, one row per line

std::string csv_header();
std::string to_csv_row(const BoundReport& r);
std::string to_csv(const std::vector<BoundReport>& rs);   // header plus rows

// Fixed-width human-readable rendering.
std::string to_pretty(const BoundReport& r);
std::string to_pretty(const std::vector<BoundReport>& rs);

}  // namespace fracsimp
