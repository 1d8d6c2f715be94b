#pragma once

#include <string>

#include <json.hpp>

#include "romanovski/poly.hpp"

namespace romanovski {

/// Shared wire format: a Rational is the string "num/den" (or "num"),
/// a Poly is a JSON array of such strings in ascending degree order.

nlohmann::json poly_to_json(const Poly& p);
Poly poly_from_json(const nlohmann::json& j);

/// "degree,c0,c1,...,cdeg" with rational coefficient strings.
std::string poly_csv_row(std::size_t degree_index, const Poly& p);

/// Round-trip-safe float rendering, 17 significant digits, '.' separator.
std::string format_double(double v);

}  // namespace romanovski
