#pragma once

#include <string>
#include <utility>
#include <vector>

#include "pa/poset.hpp"

namespace pa {

/// Pseudograph: loops and parallel edges allowed (multiplicity = repetition).
struct GraphSpec {
  std::vector<std::string> nodes;
  std::vector<std::pair<std::string, std::string>> edges;
  std::vector<std::string> loops;
};

/// Face poset of a pseudograph: elements are the nodes plus one element per
/// edge/loop covering its endpoints. Edge ids are "u-v" (endpoints sorted),
/// loops "v-v"; repeated edges get "#2", "#3", ... suffixes and thus become
/// bundle-mates automatically. Throws UnknownNode.
Poset graph_face_poset(const GraphSpec& g);

struct BuildingSet {
  std::vector<std::string> ground;
  std::vector<std::vector<std::string>> blocks;
};

/// Two-rank poset of a building set: minimal elements = ground, one maximal
/// element per block covering exactly its members (id "B(a,b,...)").
/// Validates the building-set axioms (all singletons present, union of any
/// two intersecting blocks present); throws NotABuildingSet.
Poset building_set_poset(const BuildingSet& bs);

/// Same construction for an arbitrary family of non-empty subsets; performs
/// no building-set validation. Duplicate blocks are merged.
Poset hypergraph_poset(const std::vector<std::string>& ground,
                       const std::vector<std::vector<std::string>>& family);

/// Named families; throws BadSize (size < 1, or even zigzag size) and
/// ParseError for an unknown name.
///   chain(k), antichain(k)
///   zigzag(2n-1): n minimal a01.., n-1 maximal b01.., b_i covers a_i, a_{i+1}
///   cross_stack(r): two elements per rank 1..r, full covers between ranks
///   fan(n): one maximal t covering n+1 minimal m01..
///   bundle_over(n): one minimal m covered by n maximal t01..
Poset standard(const std::string& name, int size);

std::vector<std::string> standard_family_names();

}  // namespace pa
