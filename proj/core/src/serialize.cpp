#include "liepencil/serialize.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "json.hpp"

namespace liepencil {

namespace {

using nlohmann::json;

int common_scalar_order(const LieAlgebra& a) {
  long m = 1;
  for (const auto& [key, sv] : a.structure)
    for (const auto& [k, c] : sv) m = std::lcm(m, static_cast<long>(c.order()));
  return static_cast<int>(m);
}

}  // namespace

std::string serialize_algebra(const LieAlgebra& a) {
  json out;
  out["format"] = 1;
  out["dim"] = a.dim;
  int order = common_scalar_order(a);
  out["scalar_order"] = order;
  out["labels"] = a.labels.empty() ? std::vector<std::string>(a.dim, "") : a.labels;
  json brackets = json::array();
  for (const auto& [key, sv] : a.structure) {
    SparseVec sorted = sv;
    std::sort(sorted.begin(), sorted.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    for (const auto& [k, c] : sorted)
      brackets.push_back(json::array({key.first, key.second, k, c.to_order(order).str()}));
  }
  out["brackets"] = std::move(brackets);
  return out.dump(2) + "\n";
}

LieAlgebra deserialize_algebra(const std::string& text) {
  json in;
  try {
    in = json::parse(text);
  } catch (const json::exception& e) {
    throw std::runtime_error(std::string("algebra parse: ") + e.what());
  }
  if (!in.is_object() || !in.contains("format") || !in["format"].is_number_integer() ||
      in["format"].get<int>() != 1)
    throw std::runtime_error("algebra parse: missing or unsupported \"format\" (expected 1)");
  for (const char* field : {"dim", "scalar_order", "labels", "brackets"})
    if (!in.contains(field))
      throw std::runtime_error(std::string("algebra parse: missing \"") + field + "\"");

  LieAlgebra a;
  a.dim = in["dim"].get<int>();
  if (a.dim < 0) throw std::runtime_error("algebra parse: negative dim");
  int order = in["scalar_order"].get<int>();
  if (order < 1) throw std::runtime_error("algebra parse: scalar_order must be >= 1");

  if (!in["labels"].is_array() || static_cast<int>(in["labels"].size()) != a.dim)
    throw std::runtime_error("algebra parse: labels must be an array of length dim");
  a.labels = in["labels"].get<std::vector<std::string>>();

  if (!in["brackets"].is_array())
    throw std::runtime_error("algebra parse: brackets must be an array");
  for (const auto& entry : in["brackets"]) {
    if (!entry.is_array() || entry.size() != 4 || !entry[3].is_string())
      throw std::runtime_error("algebra parse: bracket entries are [i, j, k, \"scalar\"]");
    int i = entry[0].get<int>(), j = entry[1].get<int>(), k = entry[2].get<int>();
    if (i < 0 || j < 0 || k < 0 || i >= a.dim || j >= a.dim || k >= a.dim || i >= j)
      throw std::runtime_error("algebra parse: bracket indices out of range or not i < j");
    auto c = parse_cyc(entry[3].get<std::string>(), order);
    if (!c) throw std::runtime_error("algebra parse: bad scalar \"" +
                                     entry[3].get<std::string>() + "\"");
    a.set_constant(i, j, k, *c);
  }
  return a;
}

}  // namespace liepencil
