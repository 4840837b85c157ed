#pragma once

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "qcox/quiver.hpp"

namespace qcox {

// Text format:
//
//   quiver NAME {
//     vertices: 1, 2, 3;
//     arrows:
//       a: 1 -> 2;
//       d: 2 -> 1;
//     relations:
//       a*d;
//       d*a - 3/2*b*g;
//   }
//
// `#` starts a comment running to end of line. Products read left to right:
// `a*b` traverses a, then b. Vertex names may be numerals; arrow names may not,
// so a leading numeral in a term is always a coefficient.

/// Parses and validates. Throws SyntaxError (with line/column) or
/// Error(ValidationError) naming the first invariant that fails.
BoundQuiver parse_quiver(std::string_view text);

/// Parses without running validate(); names must still resolve.
BoundQuiver parse_quiver_unchecked(std::string_view text);

/// Canonical text form; parse_quiver(emit_text(bq)) == bq.
std::string emit_text(const BoundQuiver& bq);

/// {"name", "vertices":[...], "arrows":[{"name","source","target"}],
///  "relations":[[{"coeff","path":[arrow names]}]]}; source/target are vertex names.
nlohmann::json to_json(const BoundQuiver& bq);
BoundQuiver bound_quiver_from_json(const nlohmann::json& j, bool check = true);
BoundQuiver parse_quiver_json(std::string_view text, bool check = true);

/// True when `name` is a legal vertex name token.
bool is_valid_vertex_name(std::string_view name);
/// True when `name` is a legal arrow name token (not purely numeric).
bool is_valid_arrow_name(std::string_view name);

}  // namespace qcox
