#include "qtk/serialization.hpp"

namespace qtk {

nlohmann::json quandle_to_json(const FiniteQuandle& q) {
  nlohmann::json table = nlohmann::json::array();
  for (point_t a = 0; a < q.size(); ++a) {
    auto r = q.row(a);
    table.push_back(std::vector<point_t>(r.begin(), r.end()));
  }
  return {{"size", q.size()}, {"table", std::move(table)}, {"labels", q.labels()}};
}

FiniteQuandle quandle_from_json(const nlohmann::json& j) {
  const auto n = j.at("size").get<std::size_t>();
  const auto& rows = j.at("table");
  if (!rows.is_array() || rows.size() != n) {
    throw QuandleAxiomError(Axiom::Shape, 0, 0, 0, "table row count differs from size");
  }
  std::vector<std::vector<point_t>> table;
  for (const auto& row : rows) table.push_back(row.get<std::vector<point_t>>());
  std::vector<std::string> labels;
  if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
  return validate(table, std::move(labels));
}

nlohmann::json permutation_to_json(const Permutation& p) {
  return std::vector<point_t>(p.images().begin(), p.images().end());
}

Permutation permutation_from_json(const nlohmann::json& j) {
  return Permutation(j.get<std::vector<point_t>>());
}

}  // namespace qtk
