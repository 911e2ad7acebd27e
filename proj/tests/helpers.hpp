#pragma once

// Shared test utilities: independent brute-force oracles (deliberately naive
// re-implementations used to cross-check the library) and seeded random
// generators for posets, graphs, and building sets.

#include <algorithm>
#include <bit>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "pa/lattice.hpp"
#include "pa/poset.hpp"
#include "pa/tubing.hpp"

namespace tst {

using pa::Mask;
using pa::Poset;

// ---- naive tube/tubing oracles (subset filtering from first principles) ----

inline bool naive_is_lower(const Poset& p, Mask s) {
  for (int y = 0; y < p.n(); ++y)
    if (s >> y & 1)
      for (int z = 0; z < p.n(); ++z)
        if (z != y && p.leq(z, y) && !(s >> z & 1)) return false;
  return true;
}

inline bool naive_is_connected(const Poset& p, Mask s) {
  if (!s) return false;
  Mask comp = Mask{1} << std::countr_zero(s);
  for (bool grew = true; grew;) {
    grew = false;
    for (auto [lo, hi] : p.covers()) {
      bool a = comp >> lo & 1, b = comp >> hi & 1;
      if (a == b || !(s >> lo & 1) || !(s >> hi & 1)) continue;
      comp |= pa::bit(lo) | pa::bit(hi);
      grew = true;
    }
  }
  return (comp & s) == s;
}

inline bool naive_is_filled(const Poset& p, Mask s) {
  for (int x = 0; x < p.n(); ++x) {
    if ((p.boundary(x) & ~s) != 0) continue;
    // bundle of x from scratch: equal boundaries
    bool met = false;
    for (int y = 0; y < p.n(); ++y)
      if (p.boundary(y) == p.boundary(x) && (s >> y & 1)) met = true;
    if (!met) return false;
  }
  return true;
}

inline std::vector<Mask> naive_tubes(const Poset& p) {
  std::vector<Mask> out;
  for (Mask s = 1; s < p.all(); ++s)
    if (naive_is_lower(p, s) && naive_is_connected(p, s) && naive_is_filled(p, s))
      out.push_back(s);
  std::sort(out.begin(), out.end(), pa::mask_less);
  return out;
}

inline bool naive_is_tubing(const Poset& p, const std::vector<Mask>& t) {
  Mask all_union = 0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    all_union |= t[i];
    for (std::size_t j = i + 1; j < t.size(); ++j) {
      Mask a = t[i], b = t[j];
      if (!((a & b) == 0 || (a & ~b) == 0 || (b & ~a) == 0)) return false;
    }
  }
  if (!t.empty() && all_union == p.all()) return false;
  // every non-empty pairwise-disjoint subfamily has a filled union
  for (std::size_t sub = 1; sub < (std::size_t{1} << t.size()); ++sub) {
    Mask u = 0;
    bool disjoint = true;
    for (std::size_t i = 0; i < t.size() && disjoint; ++i)
      if (sub >> i & 1) {
        if (u & t[i]) disjoint = false;
        u |= t[i];
      }
    if (disjoint && !naive_is_filled(p, u)) return false;
  }
  return true;
}

inline std::vector<std::vector<Mask>> naive_tubings(const Poset& p) {
  std::vector<Mask> ts = naive_tubes(p);
  std::vector<std::vector<Mask>> out;
  for (std::size_t sub = 0; sub < (std::size_t{1} << ts.size()); ++sub) {
    std::vector<Mask> t;
    for (std::size_t i = 0; i < ts.size(); ++i)
      if (sub >> i & 1) t.push_back(ts[i]);
    if (naive_is_tubing(p, t)) out.push_back(std::move(t));
  }
  return out;
}

// ---- graph associahedron oracle (tubes of a simple connected graph) ----

struct SimpleGraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
};

inline bool graph_connected_subset(const SimpleGraph& g, unsigned s) {
  if (!s) return false;
  unsigned comp = 1u << std::countr_zero(s);
  for (bool grew = true; grew;) {
    grew = false;
    for (auto [a, b] : g.edges)
      if ((s >> a & 1) && (s >> b & 1) && ((comp >> a & 1) != (comp >> b & 1))) {
        comp |= (1u << a) | (1u << b);
        grew = true;
      }
  }
  return (comp & s) == s;
}

inline bool graph_adjacent(const SimpleGraph& g, unsigned s1, unsigned s2) {
  for (auto [a, b] : g.edges)
    if (((s1 >> a & 1) && (s2 >> b & 1)) || ((s1 >> b & 1) && (s2 >> a & 1))) return true;
  return false;
}

/// Face lattice of the graph associahedron of a connected simple graph:
/// faces = tubings (tubes pairwise nested or non-adjacent), reverse inclusion.
inline pa::FaceLattice graph_associahedron(const SimpleGraph& g) {
  unsigned full = (1u << g.n) - 1;
  std::vector<unsigned> tubes;
  for (unsigned s = 1; s < full; ++s)
    if (graph_connected_subset(g, s)) tubes.push_back(s);
  auto compatible = [&](unsigned a, unsigned b) {
    if ((a & ~b) == 0 || (b & ~a) == 0) return true;
    return (a & b) == 0 && !graph_adjacent(g, a, b);
  };
  std::vector<std::vector<unsigned>> faces;  // tubings, all sizes
  std::vector<unsigned> cur;
  auto rec = [&](auto&& self, std::size_t i) -> void {
    faces.push_back(cur);
    for (std::size_t j = i; j < tubes.size(); ++j) {
      bool ok = true;
      for (unsigned t : cur)
        if (!compatible(t, tubes[j])) {
          ok = false;
          break;
        }
      if (!ok) continue;
      cur.push_back(tubes[j]);
      self(self, j + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  int d = g.n - 1;
  std::sort(faces.begin(), faces.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a < b;
  });
  std::map<std::vector<unsigned>, int> index;
  pa::FaceLattice l;
  l.top_dim = d;
  l.faces.resize(faces.size());
  for (std::size_t i = 0; i < faces.size(); ++i) {
    l.faces[i].dim = d - static_cast<int>(faces[i].size());
    l.faces[i].label = "g" + std::to_string(i);
    index[faces[i]] = static_cast<int>(i);
    if (faces[i].empty()) l.top = static_cast<int>(i);
  }
  for (std::size_t i = 0; i < faces.size(); ++i)
    for (std::size_t k = 0; k < faces[i].size(); ++k) {
      std::vector<unsigned> up = faces[i];
      up.erase(up.begin() + static_cast<long>(k));
      l.faces[index.at(up)].covers.push_back(static_cast<int>(i));
    }
  return l;
}

// ---- nested-set complex oracle (nestohedron of a connected building set) ----

/// Building set over ground {0..n-1} as a set of masks; must contain the full
/// set (connected). Faces = nested sets of B minus {full}: pairwise nested or
/// disjoint, and no pairwise-disjoint subfamily of size >= 2 with union in B.
inline pa::FaceLattice nested_set_lattice(int n, const std::set<unsigned>& building) {
  unsigned full = (1u << n) - 1;
  std::vector<unsigned> elems;
  for (unsigned b : building)
    if (b != full) elems.push_back(b);
  std::vector<std::vector<unsigned>> faces;
  std::vector<unsigned> cur;
  auto valid_add = [&](unsigned t) {
    for (unsigned s : cur)
      if (!((s & ~t) == 0 || (t & ~s) == 0 || (s & t) == 0)) return false;
    // antichains (pairwise disjoint subfamilies) of size >= 2 must have
    // union outside B
    std::vector<unsigned> dis;
    for (unsigned s : cur)
      if ((s & t) == 0) dis.push_back(s);
    for (std::size_t sub = 1; sub < (std::size_t{1} << dis.size()); ++sub) {
      unsigned u = t;
      bool disjoint = true;
      for (std::size_t i = 0; i < dis.size() && disjoint; ++i)
        if (sub >> i & 1) {
          if (u & dis[i]) disjoint = false;
          u |= dis[i];
        }
      if (disjoint && building.count(u)) return false;
    }
    return true;
  };
  auto rec = [&](auto&& self, std::size_t i) -> void {
    faces.push_back(cur);
    for (std::size_t j = i; j < elems.size(); ++j) {
      if (!valid_add(elems[j])) continue;
      cur.push_back(elems[j]);
      self(self, j + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  int d = n - 1;
  std::sort(faces.begin(), faces.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a < b;
  });
  std::map<std::vector<unsigned>, int> index;
  pa::FaceLattice l;
  l.top_dim = d;
  l.faces.resize(faces.size());
  for (std::size_t i = 0; i < faces.size(); ++i) {
    l.faces[i].dim = d - static_cast<int>(faces[i].size());
    l.faces[i].label = "n" + std::to_string(i);
    index[faces[i]] = static_cast<int>(i);
    if (faces[i].empty()) l.top = static_cast<int>(i);
  }
  for (std::size_t i = 0; i < faces.size(); ++i)
    for (std::size_t k = 0; k < faces[i].size(); ++k) {
      std::vector<unsigned> up = faces[i];
      up.erase(up.begin() + static_cast<long>(k));
      l.faces[index.at(up)].covers.push_back(static_cast<int>(i));
    }
  return l;
}

// ---- seeded random generators ----

inline std::vector<std::string> letter_ids(int n) {
  std::vector<std::string> ids;
  for (int i = 0; i < n; ++i) ids.push_back(std::string(1, static_cast<char>('a' + i)));
  return ids;
}

/// Random poset on n elements: each pair i<j related with probability prob;
/// from_covers transitively closes and reduces.
inline Poset random_poset(std::mt19937& rng, int n, double prob) {
  std::vector<std::string> ids = letter_ids(n);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::vector<std::pair<std::string, std::string>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng) < prob) edges.emplace_back(ids[i], ids[j]);
  return Poset::from_covers(ids, edges);
}

inline Poset random_connected_poset(std::mt19937& rng, int n, double prob = 0.3) {
  for (;;) {
    Poset p = random_poset(rng, n, prob);
    if (p.is_connected_subset(p.all())) return p;
  }
}

inline Poset random_disconnected_poset(std::mt19937& rng, int n, double prob = 0.2) {
  for (;;) {
    Poset p = random_poset(rng, n, prob);
    if (!p.is_connected_subset(p.all())) return p;
  }
}

/// Random connected building set over ground {0..n-1} as masks: random seeds,
/// closed under unions of intersecting pairs, with singletons and the full set.
inline std::set<unsigned> random_building_set(std::mt19937& rng, int n) {
  unsigned full = (1u << n) - 1;
  std::set<unsigned> b;
  for (int i = 0; i < n; ++i) b.insert(1u << i);
  b.insert(full);
  std::uniform_int_distribution<unsigned> pick(1, full - 1);
  std::uniform_int_distribution<int> count(0, n);
  int extra = count(rng);
  for (int i = 0; i < extra; ++i) b.insert(pick(rng));
  for (bool grew = true; grew;) {
    grew = false;
    for (unsigned x : b)
      for (unsigned y : b)
        if ((x & y) && !b.count(x | y)) {
          b.insert(x | y);
          grew = true;
          break;
        }
  }
  return b;
}

}  // namespace tst
