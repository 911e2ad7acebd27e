#pragma once

#include <string>
#include <vector>

#include "pa/lattice.hpp"
#include "pa/poset.hpp"
#include "pa/tubing.hpp"

namespace pa {

/// Canonical isomorphism key of a poset (exact, min over all relabelings);
/// intended for <= 9 elements. Equal keys <=> isomorphic posets.
std::string poset_canonical_key(const Poset& p);

/// All posets on n elements up to isomorphism (exact canonical forms),
/// deterministic order, ids "a", "b", ... Intended for n <= 6.
std::vector<Poset> all_posets(int n, bool connected_only);

/// All two-rank posets with at most `max_elements` elements, up to
/// isomorphism: m >= 1 minimal elements (m01..) plus k >= 1 maximal elements
/// (t01..), each maximal covering a non-empty subset of the minimals.
/// `require_nontrivial_bundle` keeps only posets where some maximal bundle
/// has size >= 2 (a repeated boundary among the maximals).
std::vector<Poset> two_rank_posets(int max_elements, bool require_nontrivial_bundle);

struct CensusReport {
  long long candidates = 0;
  long long fvector_matches = 0;
  long long iso_matches = 0;
  std::vector<std::string> iso_match_keys;  // canonical keys of isomorphic candidates
};

/// For each candidate whose f-vector equals the reference's, run lattice_iso
/// against the reference and tally the outcomes.
CensusReport census_compare(const FaceLattice& reference, const std::vector<Poset>& candidates,
                            long long budget = kDefaultBudget);

}  // namespace pa
