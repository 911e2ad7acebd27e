#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pa/lattice.hpp"

namespace pa {

/// Combinatorial simple polytope: vertex-facet incidence. Each vertex is the
/// sorted set of indices of the dim facets through it. Facet labels are
/// opaque and unique. At most 64 facets.
struct SimplePolytope {
  int dim = 0;
  std::vector<std::string> facets;
  std::vector<std::vector<int>> vertices;

  std::optional<int> find_facet(const std::string& label) const;
  /// Throws UnknownFacet.
  int facet_index(const std::string& label) const;
  std::vector<std::string> facet_labels_sorted() const;
};

SimplePolytope point();

/// k-simplex; facet i is opposite vertex i. Default labels "s0".."sk".
SimplePolytope simplex(int k, std::vector<std::string> labels = {});

/// Cartesian product; facets are the disjoint union of the factors'.
/// Throws LabelClash if the factors share a facet label.
SimplePolytope product(const SimplePolytope& a, const SimplePolytope& b);

/// Vertices of the face supported by a facet set (every vertex containing
/// all of them), or nullopt when the intersection is empty. Labels must
/// exist (UnknownFacet). In a simple polytope the face has codimension |S|.
std::optional<std::vector<int>> face_vertices(const SimplePolytope& q,
                                              const std::vector<std::string>& facet_set);

/// Combinatorial truncation of the face addressed by `facet_set`:
/// codimension 1 is a relabel, otherwise every vertex on the face splits
/// into |S| vertices on the new facet. Throws NoSuchFace / ValidationFailed.
SimplePolytope truncate_face(const SimplePolytope& q, const std::vector<std::string>& facet_set,
                             const std::string& new_label);

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

/// Checks all SimplePolytope invariants (vertex degrees, distinctness,
/// d-regular connected graph, codimension-|S| faces).
ValidationReport validate(const SimplePolytope& q);

/// Face lattice by deduplicated vertex sets; face label = sorted labels of
/// its adjacent facets joined by "|" (top face label "*").
FaceLattice face_lattice(const SimplePolytope& q);

}  // namespace pa
