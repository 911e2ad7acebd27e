#pragma once

#include <string>

#include "pa/poset.hpp"

namespace pa {

/// Parses a structured-text (JSON) poset document. Three forms are accepted
/// and compiled to a poset:
///   {"elements": [...], "covers": [[lo, hi], ...]}          plain poset
///   {"nodes": [...], "edges": [[u, v], ...], "loops": [...]} pseudograph
///   {"ground": [...], "blocks": [[...], ...]}               building set;
///     with "kind": "hypergraph" the building-set axioms are not enforced
/// Throws ParseError on malformed input, plus the constructors' errors.
Poset load_poset(const std::string& text);

/// Canonical serialization (elements sorted, covers sorted lexicographically).
std::string poset_to_json(const Poset& p);

/// Hasse diagram in DOT format (edges point from lower to upper elements).
std::string poset_to_dot(const Poset& p);

}  // namespace pa
