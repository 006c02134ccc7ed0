#pragma once

#include <string>

#include "json.hpp"
#include "tc_atlas/f2_algebra.hpp"

namespace tc_atlas {

/// {"top_degree": int, "basis": [{"label": str, "degree": int}],
///  "mult": [[i, j, [k, ...]], ...]} with nonzero entries in (i, j) order.
nlohmann::json algebra_to_json(const GradedF2Algebra& a);

/// Inverse of algebra_to_json. Throws ParseError on a malformed document and
/// DomainError when the table violates the algebra invariants.
GradedF2Algebra algebra_from_json(const nlohmann::json& doc);

std::string algebra_to_string(const GradedF2Algebra& a, int indent = -1);
GradedF2Algebra algebra_from_string(const std::string& text);

}  // namespace tc_atlas
