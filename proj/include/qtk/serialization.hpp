#pragma once

#include <string>

#include "json.hpp"
#include "qtk/permutation.hpp"
#include "qtk/quandle.hpp"

namespace qtk {

/// {"size": n, "table": [[...], ...], "labels": [...]}
nlohmann::json quandle_to_json(const FiniteQuandle& q);
/// Inverse of quandle_to_json; the table is re-validated.
FiniteQuandle quandle_from_json(const nlohmann::json& j);

/// 0-based image array.
nlohmann::json permutation_to_json(const Permutation& p);
Permutation permutation_from_json(const nlohmann::json& j);

}  // namespace qtk
