#include "pa/generators.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "pa/errors.hpp"

namespace pa {

namespace {

std::string padded(const std::string& prefix, int i) {
  std::ostringstream os;
  os << prefix << (i < 10 ? "0" : "") << i;
  return os.str();
}

}  // namespace

Poset graph_face_poset(const GraphSpec& g) {
  std::set<std::string> nodes(g.nodes.begin(), g.nodes.end());
  auto require_node = [&](const std::string& v) {
    if (!nodes.count(v)) throw Error(ErrorCode::UnknownNode, "unknown node '" + v + "'");
  };
  std::vector<std::string> ids = g.nodes;
  std::vector<std::pair<std::string, std::string>> covers;
  std::map<std::string, int> multiplicity;
  auto add_element = [&](const std::string& base, const std::vector<std::string>& below) {
    int k = ++multiplicity[base];
    std::string id = k == 1 ? base : base + "#" + std::to_string(k);
    ids.push_back(id);
    for (const auto& b : below) covers.emplace_back(b, id);
  };
  for (const auto& [u, v] : g.edges) {
    require_node(u);
    require_node(v);
    if (u == v) {
      add_element(u + "-" + u, {u});
      continue;
    }
    std::string a = std::min(u, v), b = std::max(u, v);
    add_element(a + "-" + b, {a, b});
  }
  for (const auto& v : g.loops) {
    require_node(v);
    add_element(v + "-" + v, {v});
  }
  return Poset::from_covers(std::move(ids), covers);
}

namespace {

std::string block_id(const std::vector<std::string>& members) {
  std::ostringstream os;
  os << "B(";
  for (std::size_t i = 0; i < members.size(); ++i) os << (i ? "," : "") << members[i];
  os << ")";
  return os.str();
}

Poset two_rank_from_blocks(const std::vector<std::string>& ground,
                           const std::set<std::vector<std::string>>& blocks) {
  std::vector<std::string> ids = ground;
  std::vector<std::pair<std::string, std::string>> covers;
  for (const auto& blk : blocks) {
    std::string id = block_id(blk);
    ids.push_back(id);
    for (const auto& m : blk) covers.emplace_back(m, id);
  }
  return Poset::from_covers(std::move(ids), covers);
}

std::set<std::vector<std::string>> normalize_blocks(
    const std::vector<std::string>& ground, const std::vector<std::vector<std::string>>& family) {
  std::set<std::string> gset(ground.begin(), ground.end());
  if (gset.size() != ground.size())
    throw Error(ErrorCode::DuplicateId, "duplicate ground element");
  std::set<std::vector<std::string>> blocks;
  for (const auto& blk : family) {
    std::set<std::string> s(blk.begin(), blk.end());
    if (s.empty()) throw Error(ErrorCode::EmptyResult, "empty block");
    for (const auto& m : s)
      if (!gset.count(m)) throw Error(ErrorCode::UnknownElement, "block member '" + m + "'");
    blocks.insert(std::vector<std::string>(s.begin(), s.end()));
  }
  return blocks;
}

}  // namespace

Poset building_set_poset(const BuildingSet& bs) {
  auto blocks = normalize_blocks(bs.ground, bs.blocks);
  for (const auto& g : bs.ground)
    if (!blocks.count({g}))
      throw Error(ErrorCode::NotABuildingSet, "missing singleton {" + g + "}");
  for (const auto& a : blocks)
    for (const auto& b : blocks) {
      std::vector<std::string> inter, uni;
      std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(inter));
      if (inter.empty()) continue;
      std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(uni));
      if (!blocks.count(uni))
        throw Error(ErrorCode::NotABuildingSet,
                    "union of intersecting blocks " + block_id(a) + ", " + block_id(b) +
                        " is missing");
    }
  return two_rank_from_blocks(bs.ground, blocks);
}

Poset hypergraph_poset(const std::vector<std::string>& ground,
                       const std::vector<std::vector<std::string>>& family) {
  return two_rank_from_blocks(ground, normalize_blocks(ground, family));
}

std::vector<std::string> standard_family_names() {
  return {"chain", "antichain", "zigzag", "cross_stack", "fan", "bundle_over"};
}

Poset standard(const std::string& name, int size) {
  if (size < 1) throw Error(ErrorCode::BadSize, "size must be >= 1");
  std::vector<std::string> ids;
  std::vector<std::pair<std::string, std::string>> covers;
  if (name == "chain") {
    for (int i = 1; i <= size; ++i) ids.push_back(padded("c", i));
    for (int i = 1; i < size; ++i) covers.emplace_back(padded("c", i), padded("c", i + 1));
  } else if (name == "antichain") {
    for (int i = 1; i <= size; ++i) ids.push_back(padded("a", i));
  } else if (name == "zigzag") {
    if (size % 2 == 0) throw Error(ErrorCode::BadSize, "zigzag size must be odd");
    int n = (size + 1) / 2;
    for (int i = 1; i <= n; ++i) ids.push_back(padded("a", i));
    for (int i = 1; i < n; ++i) {
      ids.push_back(padded("b", i));
      covers.emplace_back(padded("a", i), padded("b", i));
      covers.emplace_back(padded("a", i + 1), padded("b", i));
    }
  } else if (name == "cross_stack") {
    for (int r = 1; r <= size; ++r) {
      ids.push_back(padded("x", r) + "a");
      ids.push_back(padded("x", r) + "b");
      if (r > 1)
        for (const char* lo : {"a", "b"})
          for (const char* hi : {"a", "b"})
            covers.emplace_back(padded("x", r - 1) + lo, padded("x", r) + hi);
    }
  } else if (name == "fan") {
    ids.push_back("t");
    for (int i = 1; i <= size + 1; ++i) {
      ids.push_back(padded("m", i));
      covers.emplace_back(padded("m", i), "t");
    }
  } else if (name == "bundle_over") {
    ids.push_back("m");
    for (int i = 1; i <= size; ++i) {
      ids.push_back(padded("t", i));
      covers.emplace_back("m", padded("t", i));
    }
  } else {
    throw Error(ErrorCode::ParseError, "unknown family '" + name + "'");
  }
  return Poset::from_covers(std::move(ids), covers);
}

}  // namespace pa
