#include "pa/census.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

#include "pa/errors.hpp"

namespace pa {

namespace {

// relation of p as an n*n bit matrix (strict order), permuted by sigma
std::array<std::uint64_t, 2> relation_bits(const Poset& p, const std::vector<int>& sigma) {
  std::array<std::uint64_t, 2> bits{0, 0};
  int n = p.n();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a != b && p.leq(a, b)) {
        int idx = sigma[a] * n + sigma[b];
        bits[idx >> 6] |= std::uint64_t{1} << (idx & 63);
      }
  return bits;
}

}  // namespace

std::string poset_canonical_key(const Poset& p) {
  int n = p.n();
  if (n > 9) throw Error(ErrorCode::BadSize, "canonical key supported up to 9 elements");
  std::vector<int> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  std::array<std::uint64_t, 2> best{~std::uint64_t{0}, ~std::uint64_t{0}};
  do {
    best = std::min(best, relation_bits(p, sigma));
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  std::ostringstream os;
  os << n << ':' << std::hex << best[1] << ':' << best[0];
  return os.str();
}

std::vector<Poset> all_posets(int n, bool connected_only) {
  if (n < 1 || n > 7) throw Error(ErrorCode::BadSize, "poset corpus supported for 1..7 elements");
  // pairs (i, j) with i < j, in a fixed order; every poset admits a linear
  // extension, so relations R subseteq {(i,j): i<j} that are transitively
  // closed cover all isomorphism classes
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  int np = static_cast<int>(pairs.size());
  std::vector<int> pair_index(n * n, -1);
  for (int k = 0; k < np; ++k) pair_index[pairs[k].first * n + pairs[k].second] = k;

  std::vector<int> identity(n);
  std::iota(identity.begin(), identity.end(), 0);
  std::vector<std::vector<int>> perms;
  {
    std::vector<int> sigma = identity;
    do {
      perms.push_back(sigma);
    } while (std::next_permutation(sigma.begin(), sigma.end()));
  }

  std::vector<std::string> ids;
  for (int i = 0; i < n; ++i) ids.push_back(std::string(1, static_cast<char>('a' + i)));

  std::set<std::array<std::uint64_t, 2>> seen;
  std::vector<Poset> out;
  for (std::uint64_t r = 0; r < (std::uint64_t{1} << np); ++r) {
    bool transitive = true;
    for (int i = 0; i < n && transitive; ++i)
      for (int j = i + 1; j < n && transitive; ++j) {
        if (!(r >> pair_index[i * n + j] & 1)) continue;
        for (int k = j + 1; k < n; ++k)
          if ((r >> pair_index[j * n + k] & 1) && !(r >> pair_index[i * n + k] & 1)) {
            transitive = false;
            break;
          }
      }
    if (!transitive) continue;

    std::array<std::uint64_t, 2> best{~std::uint64_t{0}, ~std::uint64_t{0}};
    for (const auto& sigma : perms) {
      std::array<std::uint64_t, 2> bits{0, 0};
      for (int k = 0; k < np; ++k)
        if (r >> k & 1) {
          int idx = sigma[pairs[k].first] * n + sigma[pairs[k].second];
          bits[idx >> 6] |= std::uint64_t{1} << (idx & 63);
        }
      best = std::min(best, bits);
    }
    if (!seen.insert(best).second) continue;

    std::vector<std::pair<std::string, std::string>> edges;
    for (int k = 0; k < np; ++k)
      if (r >> k & 1) edges.emplace_back(ids[pairs[k].first], ids[pairs[k].second]);
    Poset p = Poset::from_covers(ids, edges);
    if (connected_only && !p.is_connected_subset(p.all())) continue;
    out.push_back(std::move(p));
  }
  return out;
}

namespace {

std::string padded(const std::string& prefix, int i) {
  std::ostringstream os;
  os << prefix << (i < 10 ? "0" : "") << i;
  return os.str();
}

}  // namespace

std::vector<Poset> two_rank_posets(int max_elements, bool require_nontrivial_bundle) {
  if (max_elements < 2 || max_elements > 12)
    throw Error(ErrorCode::BadSize, "two-rank census supported for 2..12 elements");
  std::vector<Poset> out;
  for (int m = 1; m < max_elements; ++m) {
    // canonicalize a multiset of boundary subsets under permutations of the
    // minimal elements
    std::vector<std::vector<int>> perms;
    {
      std::vector<int> sigma(m);
      std::iota(sigma.begin(), sigma.end(), 0);
      do {
        perms.push_back(sigma);
      } while (std::next_permutation(sigma.begin(), sigma.end()));
    }
    auto canonical = [&](const std::vector<std::uint32_t>& blocks) {
      std::vector<std::uint32_t> best = blocks;
      std::vector<std::uint32_t> cur(blocks.size());
      for (const auto& sigma : perms) {
        for (std::size_t i = 0; i < blocks.size(); ++i) {
          std::uint32_t b = 0;
          for (int e = 0; e < m; ++e)
            if (blocks[i] >> e & 1) b |= std::uint32_t{1} << sigma[e];
          cur[i] = b;
        }
        std::sort(cur.begin(), cur.end());
        if (cur < best) best = cur;
      }
      return best;
    };
    std::uint32_t nsub = (std::uint32_t{1} << m) - 1;  // non-empty subsets 1..nsub
    for (int k = 1; k + m <= max_elements; ++k) {
      std::vector<std::uint32_t> blocks;
      // nondecreasing sequences of k non-empty subsets
      std::function<void(std::uint32_t)> rec = [&](std::uint32_t lo) {
        if (static_cast<int>(blocks.size()) == k) {
          if (require_nontrivial_bundle &&
              std::adjacent_find(blocks.begin(), blocks.end()) == blocks.end())
            return;
          if (canonical(blocks) != blocks) return;  // emit canonical reps only
          std::vector<std::string> ids;
          std::vector<std::pair<std::string, std::string>> edges;
          for (int i = 1; i <= m; ++i) ids.push_back(padded("m", i));
          for (int j = 1; j <= k; ++j) {
            ids.push_back(padded("t", j));
            for (int e = 0; e < m; ++e)
              if (blocks[j - 1] >> e & 1) edges.emplace_back(padded("m", e + 1), padded("t", j));
          }
          out.push_back(Poset::from_covers(std::move(ids), edges));
          return;
        }
        for (std::uint32_t s = lo; s <= nsub; ++s) {
          blocks.push_back(s);
          rec(s);
          blocks.pop_back();
        }
      };
      rec(1);
    }
  }
  return out;
}

CensusReport census_compare(const FaceLattice& reference, const std::vector<Poset>& candidates,
                            long long budget) {
  CensusReport rep;
  std::vector<long long> ref_f = reference.f_vector();
  for (const Poset& p : candidates) {
    ++rep.candidates;
    if (dimension(p) != reference.top_dim) continue;
    if (f_vector(p, budget) != ref_f) continue;
    ++rep.fvector_matches;
    if (lattice_iso(reference, face_poset(p, budget)).has_value()) {
      ++rep.iso_matches;
      rep.iso_match_keys.push_back(p.n() <= 9 ? poset_canonical_key(p)
                                              : p.set_label(p.all()));
    }
  }
  return rep;
}

}  // namespace pa
