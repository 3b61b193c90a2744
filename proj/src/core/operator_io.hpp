#pragma once

#include <string>

#include "core/mult_map.hpp"

namespace apurity::oracle {

/// Parses {"n": N, "k": K, "terms": [{"coeff": c, "alpha": [...], "beta": [...]}, ...]}.
/// Integers may be JSON numbers or decimal strings. Invariants are checked on load.
ContractionOperator parse_operator(const std::string& json_text);

ContractionOperator load_operator_file(const std::string& path);

std::string operator_to_json(const ContractionOperator& op);

}  // namespace apurity::oracle
