#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pa/polytope.hpp"
#include "pa/poset.hpp"
#include "pa/tubing.hpp"

namespace pa {

/// One truncation of the recursive construction: the face addressed by a set
/// of facet labels is cut and the new facet labeled `new_label` (a tube of
/// the target poset). Steps with a single face label execute as relabels.
struct TruncationStep {
  std::vector<std::string> face;
  std::string new_label;
  int size = 0;  // |tube| ordering key
};

struct BuildOptions {
  /// Root override for the outermost recursion level (testing order
  /// independence); must be a maximal element of a maximum-length chain.
  std::optional<std::string> root;
  /// When set, receives the outermost connected-case schedule.
  std::vector<TruncationStep>* schedule_out = nullptr;
};

/// Recursive truncation construction of KP. The result is a simple polytope
/// whose facet labels are exactly the canonical labels of tubes(P); validated
/// before returning. Throws ComponentNotTube / NoSuchFace / ValidationFailed /
/// LabelMismatch on internal inconsistencies.
SimplePolytope build(const Poset& p, const BuildOptions& options = {});

/// Trivial-bundle schedule: one step per tube u containing x, face =
/// tube_components(P,x,u), ordered by |u| descending then label.
std::vector<TruncationStep> schedule_trivial(const Poset& p, int x);

/// Nontrivial-bundle schedule over candidate pairs (t, B); see build().
/// Ordered by |target| ascending then label.
std::vector<TruncationStep> schedule_nontrivial(const Poset& p, int x);

struct OracleReport {
  bool isomorphic = false;
  bool facet_labels_match = false;
  std::vector<long long> f_oracle;
  std::vector<long long> f_build;
};

/// Cross-check: face_lattice(build(P)) vs the direct face_poset(P), with the
/// facet bijection pinned to the identity on tube labels.
OracleReport verify_against_oracle(const Poset& p, long long budget = kDefaultBudget);

/// Facet label used for the simplex side of the nontrivial case ("^" + id).
std::string simplex_facet_label(const std::string& bundle_member);

}  // namespace pa
