#include "pa/documents.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "pa/errors.hpp"
#include "pa/generators.hpp"

namespace pa {

namespace {

using nlohmann::json;

std::vector<std::string> string_array(const json& j, const char* field) {
  if (!j.contains(field) || !j[field].is_array())
    throw Error(ErrorCode::ParseError, std::string("missing array field '") + field + "'");
  std::vector<std::string> out;
  for (const auto& v : j[field]) {
    if (!v.is_string())
      throw Error(ErrorCode::ParseError, std::string("'") + field + "' must hold strings");
    out.push_back(v.get<std::string>());
  }
  return out;
}

std::vector<std::pair<std::string, std::string>> pair_array(const json& j, const char* field) {
  if (!j.contains(field) || !j[field].is_array())
    throw Error(ErrorCode::ParseError, std::string("missing array field '") + field + "'");
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& v : j[field]) {
    if (!v.is_array() || v.size() != 2 || !v[0].is_string() || !v[1].is_string())
      throw Error(ErrorCode::ParseError,
                  std::string("'") + field + "' entries must be [string, string]");
    out.emplace_back(v[0].get<std::string>(), v[1].get<std::string>());
  }
  return out;
}

}  // namespace

Poset load_poset(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded() || !j.is_object())
    throw Error(ErrorCode::ParseError, "document is not a JSON object");

  if (j.contains("elements")) {
    return Poset::from_covers(string_array(j, "elements"), pair_array(j, "covers"));
  }
  if (j.contains("nodes")) {
    GraphSpec g;
    g.nodes = string_array(j, "nodes");
    g.edges = j.contains("edges") ? pair_array(j, "edges")
                                  : std::vector<std::pair<std::string, std::string>>{};
    g.loops = j.contains("loops") ? string_array(j, "loops") : std::vector<std::string>{};
    return graph_face_poset(g);
  }
  if (j.contains("ground")) {
    std::vector<std::string> ground = string_array(j, "ground");
    if (!j.contains("blocks") || !j["blocks"].is_array())
      throw Error(ErrorCode::ParseError, "missing array field 'blocks'");
    std::vector<std::vector<std::string>> blocks;
    for (const auto& b : j["blocks"]) {
      if (!b.is_array()) throw Error(ErrorCode::ParseError, "'blocks' entries must be arrays");
      std::vector<std::string> blk;
      for (const auto& m : b) {
        if (!m.is_string())
          throw Error(ErrorCode::ParseError, "'blocks' entries must hold strings");
        blk.push_back(m.get<std::string>());
      }
      blocks.push_back(std::move(blk));
    }
    if (j.value("kind", "") == "hypergraph") return hypergraph_poset(ground, blocks);
    return building_set_poset(BuildingSet{std::move(ground), std::move(blocks)});
  }
  throw Error(ErrorCode::ParseError,
              "document must contain 'elements', 'nodes', or 'ground'");
}

std::string poset_to_json(const Poset& p) {
  json j;
  j["elements"] = p.ids();  // already canonically sorted
  std::vector<std::pair<std::string, std::string>> covers;
  for (auto [lo, hi] : p.covers()) covers.emplace_back(p.id(lo), p.id(hi));
  std::sort(covers.begin(), covers.end());
  j["covers"] = json::array();
  for (const auto& [lo, hi] : covers) j["covers"].push_back({lo, hi});
  return j.dump(2) + "\n";
}

std::string poset_to_dot(const Poset& p) {
  std::ostringstream os;
  os << "digraph hasse {\n  rankdir=BT;\n  node [shape=plaintext];\n";
  for (const auto& id : p.ids()) os << "  \"" << id << "\";\n";
  std::vector<std::pair<std::string, std::string>> covers;
  for (auto [lo, hi] : p.covers()) covers.emplace_back(p.id(lo), p.id(hi));
  std::sort(covers.begin(), covers.end());
  for (const auto& [lo, hi] : covers)
    os << "  \"" << lo << "\" -> \"" << hi << "\";\n";
  os << "}\n";
  return os.str();
}

}  // namespace pa
