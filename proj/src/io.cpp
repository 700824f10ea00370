#include "uncross/io.hpp"

#include <sstream>

#include "json.hpp"

namespace uncross {

std::string to_json_line(const CheckReport& r) {
  nlohmann::ordered_json j;
  j["name"] = r.name;
  j["universe"] = r.universe;
  j["casesChecked"] = r.casesChecked;
  j["violations"] = r.violations;
  return j.dump();
}

std::string poset_to_json(const GradedPoset& P) {
  nlohmann::ordered_json j;
  j["n"] = P.n();
  j["includesBottom"] = P.has_bottom();
  nlohmann::ordered_json elements = nlohmann::ordered_json::array();
  for (int id = 0; id < P.size(); ++id) {
    nlohmann::ordered_json e;
    e["id"] = id;
    if (P.is_bottom(id))
      e["partner"] = nullptr;
    else
      e["partner"] = P.matching_of(id).partners();
    e["rank"] = P.rank(id);
    elements.push_back(std::move(e));
  }
  j["elements"] = std::move(elements);
  nlohmann::ordered_json covers = nlohmann::ordered_json::array();
  for (auto [l, u] : P.covers()) covers.push_back({l, u});
  j["covers"] = std::move(covers);
  return j.dump(2);
}

namespace {

std::string node_label(const GradedPoset& P, int id) {
  if (P.is_bottom(id)) return "bot";
  std::string s = "[";
  const auto& p = P.matching_of(id).partners();
  for (size_t i = 0; i < p.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(p[i]);
  }
  return s + "]";
}

}  // namespace

std::string poset_to_dot(const GradedPoset& P) {
  std::ostringstream os;
  os << "digraph uncrossing {\n  rankdir=BT;\n  node [shape=box];\n";
  for (int id = 0; id < P.size(); ++id)
    os << "  n" << id << " [label=\"" << node_label(P, id) << "\"];\n";
  for (int r = -1; r <= P.max_rank(); ++r) {
    std::string row;
    for (int id = 0; id < P.size(); ++id)
      if (P.rank(id) == r) row += " n" + std::to_string(id) + ";";
    if (!row.empty()) os << "  { rank=same;" << row << " }\n";
  }
  for (auto [l, u] : P.covers()) os << "  n" << l << " -> n" << u << ";\n";
  os << "}\n";
  return os.str();
}

std::string matching_to_json(const Matching& m) {
  return nlohmann::json(m.partners()).dump();
}

Matching matching_from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  if (!j.is_array()) throw std::invalid_argument("matching json: expected an array");
  return Matching(j.get<std::vector<int>>());
}

std::string window_to_json(const AffinePermutation& g) {
  return nlohmann::json(g.window()).dump();
}

AffinePermutation window_from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  if (!j.is_array()) throw std::invalid_argument("window json: expected an array");
  return AffinePermutation(j.get<std::vector<int>>());
}

}  // namespace uncross
