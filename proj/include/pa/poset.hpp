#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pa/errors.hpp"

namespace pa {

/// Subset of a poset's elements as a bitmask over canonical element indices.
using Mask = std::uint64_t;

constexpr int kMaxElements = 64;

inline Mask bit(int i) { return Mask{1} << i; }
int popcount(Mask m);

/// Finite poset over string identifiers. Elements are stored in canonical
/// (lexicographic) order; all set-valued results are masks over that order.
/// Immutable after construction.
class Poset {
 public:
  /// Builds a poset from element ids and strict-order edges (lower, upper).
  /// Edges need not be covers: the relation is transitively closed, then
  /// reduced. Throws DuplicateId, UnknownElement, Cycle, BadSize, EmptyResult.
  static Poset from_covers(std::vector<std::string> ids,
                           const std::vector<std::pair<std::string, std::string>>& edges);

  int n() const { return n_; }
  Mask all() const { return n_ == 64 ? ~Mask{0} : (Mask{1} << n_) - 1; }
  const std::vector<std::string>& ids() const { return ids_; }
  const std::string& id(int i) const { return ids_[i]; }

  /// Index of an id; throws UnknownElement.
  int index(const std::string& id) const;
  std::optional<int> find(const std::string& id) const;

  /// Strict down-set of x (the paper's boundary).
  Mask boundary(int x) const;
  bool leq(int a, int b) const { return a == b || (down_[b] >> a & 1); }

  Mask bundle(int x) const;
  int bundle_count() const { return static_cast<int>(bundle_masks_.size()); }
  /// Partition of the elements into bundles, canonically ordered.
  const std::vector<Mask>& bundles() const { return bundle_masks_; }
  /// Bundles sorted so each bundle's boundary precedes it (used by the
  /// filled-lower-set enumeration).
  const std::vector<int>& bundle_order() const { return bundle_order_; }
  Mask bundle_boundary(int b) const { return bundle_boundary_[b]; }

  /// Cover relation (transitive reduction), as (lower, upper) index pairs.
  const std::vector<std::pair<int, int>>& covers() const { return covers_; }
  /// Cover-graph neighbours of element i (both directions).
  Mask cover_adjacency(int i) const { return adj_[i]; }

  bool is_lower_set(Mask s) const;
  Mask lower_closure(Mask s) const;

  /// Connectivity of the cover graph restricted to s. Empty sets are
  /// disconnected by convention (tubes are non-empty); singletons connected.
  bool is_connected_subset(Mask s) const;
  std::vector<Mask> component_masks() const;
  std::vector<Poset> hasse_components() const;

  /// Induced sub-poset on the elements NOT in `removed`.
  /// Throws EmptyResult if nothing remains.
  Poset delete_elements(Mask removed) const;
  Poset collapse_bundle(int x) const;

  /// Maximal element of a maximum-length chain; lexicographically least id
  /// among candidates.
  int pick_truncation_root() const;
  std::vector<int> root_candidates() const;

  std::vector<std::string> set_ids(Mask s) const;
  Mask mask_of_ids(const std::vector<std::string>& members) const;
  /// Canonical label of an element subset, e.g. "{a,b,p}".
  std::string set_label(Mask s) const;

  bool same_elements(const Poset& other) const { return ids_ == other.ids_; }

 private:
  Poset() = default;

  int n_ = 0;
  std::vector<std::string> ids_;
  std::vector<Mask> down_;           // strict down-sets
  std::vector<std::pair<int, int>> covers_;
  std::vector<Mask> adj_;            // undirected cover adjacency
  std::vector<int> bundle_of_;
  std::vector<Mask> bundle_masks_;
  std::vector<Mask> bundle_boundary_;
  std::vector<int> bundle_order_;
};

/// Re-expresses a mask of `from` in the indexing of `to` (matching by id).
/// Throws UnknownElement if an element of the mask is absent in `to`.
Mask transfer_mask(const Poset& from, Mask m, const Poset& to);

/// Canonical order on element subsets: lexicographic on the sorted id
/// sequences (element indices are already in id order).
bool mask_less(Mask a, Mask b);

}  // namespace pa
