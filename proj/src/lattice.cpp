#include "pa/lattice.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <sstream>

namespace pa {

namespace {

// little dynamic bitset over face indices
struct Bits {
  std::vector<std::uint64_t> w;
  explicit Bits(int n = 0) : w((n + 63) / 64, 0) {}
  void set(int i) { w[i >> 6] |= std::uint64_t{1} << (i & 63); }
  bool get(int i) const { return w[i >> 6] >> (i & 63) & 1; }
  void or_with(const Bits& o) {
    for (std::size_t k = 0; k < w.size(); ++k) w[k] |= o.w[k];
  }
};

std::vector<int> dim_order(const FaceLattice& l) {
  std::vector<int> order(l.faces.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::stable_sort(order.begin(), order.end(),
                   [&l](int a, int b) { return l.faces[a].dim < l.faces[b].dim; });
  return order;
}

}  // namespace

std::vector<long long> FaceLattice::f_vector() const {
  std::vector<long long> f(std::max(top_dim, 0), 0);
  for (const auto& face : faces)
    if (face.dim < top_dim) ++f[face.dim];
  return f;
}

std::vector<long long> FaceLattice::f_polynomial() const {
  std::vector<long long> f(top_dim + 1, 0);
  for (const auto& face : faces) ++f[face.dim];
  return f;
}

int FaceLattice::count_faces(int dim) const {
  int c = 0;
  for (const auto& face : faces) c += face.dim == dim;
  return c;
}

bool graded_check(const FaceLattice& l) {
  if (l.top < 0 || l.faces[l.top].dim != l.top_dim) return false;
  std::vector<int> per_dim(l.top_dim + 1, 0);
  for (const auto& f : l.faces) {
    if (f.dim < 0 || f.dim > l.top_dim) return false;
    ++per_dim[f.dim];
    for (int c : f.covers)
      if (l.faces[c].dim != f.dim - 1) return false;
  }
  if (per_dim[l.top_dim] != 1) return false;
  for (int d = 0; d <= l.top_dim; ++d)
    if (per_dim[d] == 0) return false;
  return true;
}

bool euler_check(const FaceLattice& l) {
  auto f = l.f_vector();
  long long sum = 0;
  for (std::size_t i = 0; i < f.size(); ++i) sum += (i % 2 ? -1 : 1) * f[i];
  long long expect = 1 - (l.top_dim % 2 ? -1 : 1);
  return sum == expect;
}

bool diamond_check(const FaceLattice& l) {
  int n = static_cast<int>(l.faces.size());
  std::vector<Bits> below(n, Bits(n));  // faces <= i
  for (int i : dim_order(l)) {
    below[i].set(i);
    for (int c : l.faces[i].covers) below[i].or_with(below[c]);
  }
  // intervals from the formal bottom: every 1-face has exactly two 0-faces
  for (int i = 0; i < n; ++i) {
    if (l.faces[i].dim != 1) continue;
    int verts = 0;
    for (int j = 0; j < n; ++j)
      if (l.faces[j].dim == 0 && below[i].get(j)) ++verts;
    if (verts != 2) return false;
  }
  // proper intervals of length two
  for (int hi = 0; hi < n; ++hi) {
    int d = l.faces[hi].dim;
    if (d < 2) continue;
    for (int lo = 0; lo < n; ++lo) {
      if (l.faces[lo].dim != d - 2 || !below[hi].get(lo)) continue;
      int mid = 0;
      for (int m = 0; m < n; ++m)
        if (l.faces[m].dim == d - 1 && below[hi].get(m) && below[m].get(lo)) ++mid;
      if (mid != 2) return false;
    }
  }
  return true;
}

namespace {

struct IsoSearch {
  const FaceLattice& a;
  const FaceLattice& b;
  long long budget;
  long long nodes = 0;
  int n = 0;
  std::vector<Bits> adj_a, adj_b;  // undirected cover adjacency
  std::vector<int> color_a, color_b;
  std::vector<int> map_ab, map_ba;

  bool refine(const std::vector<int>* seed_a, const std::vector<int>* seed_b) {
    color_a.assign(a.faces.size(), 0);
    color_b.assign(b.faces.size(), 0);
    // initial color: dimension (+ optional external color)
    std::map<std::pair<int, int>, int> init;
    auto assign_init = [&init](const FaceLattice& l, std::vector<int>& col,
                               const std::vector<int>* seed) {
      for (std::size_t i = 0; i < l.faces.size(); ++i) {
        std::pair<int, int> key{l.faces[i].dim, seed ? (*seed)[i] : 0};
        auto [it, _] = init.try_emplace(key, static_cast<int>(init.size()));
        col[i] = it->second;
      }
    };
    assign_init(a, color_a, seed_a);
    assign_init(b, color_b, seed_b);

    std::size_t classes = init.size();
    for (int round = 0; round < n; ++round) {
      std::map<std::vector<int>, int> next;
      auto signature = [this](const FaceLattice& l, const std::vector<Bits>& adj,
                              const std::vector<int>& col, int i) {
        std::vector<int> sig{col[i], -1};
        std::vector<int> down, up;
        for (int c : l.faces[i].covers) down.push_back(col[c]);
        for (int j = 0; j < static_cast<int>(l.faces.size()); ++j)
          if (adj[i].get(j) && l.faces[j].dim == l.faces[i].dim + 1) up.push_back(col[j]);
        std::sort(down.begin(), down.end());
        std::sort(up.begin(), up.end());
        sig.insert(sig.end(), down.begin(), down.end());
        sig.push_back(-2);
        sig.insert(sig.end(), up.begin(), up.end());
        return sig;
      };
      std::vector<int> na(a.faces.size()), nb(b.faces.size());
      for (std::size_t i = 0; i < a.faces.size(); ++i) {
        auto [it, _] = next.try_emplace(signature(a, adj_a, color_a, static_cast<int>(i)),
                                        static_cast<int>(next.size()));
        na[i] = it->second;
      }
      for (std::size_t i = 0; i < b.faces.size(); ++i) {
        auto sig = signature(b, adj_b, color_b, static_cast<int>(i));
        auto it = next.find(sig);
        if (it == next.end()) return false;
        nb[i] = it->second;
      }
      std::map<int, int> ha, hb;
      for (int c : na) ++ha[c];
      for (int c : nb) ++hb[c];
      if (ha != hb) return false;
      bool stable = next.size() == classes;
      classes = next.size();
      color_a = std::move(na);
      color_b = std::move(nb);
      if (stable) break;
    }
    return true;
  }

  bool consistent(int u, int v) const {
    for (int w = 0; w < static_cast<int>(a.faces.size()); ++w) {
      if (map_ab[w] < 0 || w == u) continue;
      if (adj_a[u].get(w) != adj_b[v].get(map_ab[w])) return false;
    }
    return true;
  }

  bool search(const std::vector<int>& order, std::size_t k) {
    if (++nodes > budget) throw Error(ErrorCode::BudgetExceeded, "lattice_iso search budget");
    if (k == order.size()) return true;
    int u = order[k];
    for (int v = 0; v < static_cast<int>(b.faces.size()); ++v) {
      if (map_ba[v] >= 0 || color_b[v] != color_a[u]) continue;
      if (!consistent(u, v)) continue;
      map_ab[u] = v;
      map_ba[v] = u;
      if (search(order, k + 1)) return true;
      map_ab[u] = -1;
      map_ba[v] = -1;
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<int>> lattice_iso(const FaceLattice& l1, const FaceLattice& l2,
                                            long long budget,
                                            const std::vector<int>* colors1,
                                            const std::vector<int>* colors2) {
  if (l1.top_dim != l2.top_dim) return std::nullopt;
  if (l1.faces.size() != l2.faces.size()) return std::nullopt;
  if (l1.f_vector() != l2.f_vector()) return std::nullopt;

  IsoSearch s{l1, l2, budget};
  s.n = static_cast<int>(l1.faces.size());
  auto build_adj = [](const FaceLattice& l) {
    int n = static_cast<int>(l.faces.size());
    std::vector<Bits> adj(n, Bits(n));
    for (int i = 0; i < n; ++i)
      for (int c : l.faces[i].covers) {
        adj[i].set(c);
        adj[c].set(i);
      }
    return adj;
  };
  s.adj_a = build_adj(l1);
  s.adj_b = build_adj(l2);
  if (!s.refine(colors1, colors2)) return std::nullopt;

  s.map_ab.assign(l1.faces.size(), -1);
  s.map_ba.assign(l2.faces.size(), -1);
  // assign rare colors first, then grow through adjacency for early pruning
  std::vector<int> class_size(l1.faces.size() + 1, 0);
  std::map<int, int> hist;
  for (int c : s.color_a) ++hist[c];
  std::vector<int> order;
  std::vector<char> placed(l1.faces.size(), 0);
  auto pick_next = [&]() {
    int best = -1;
    for (int i = 0; i < static_cast<int>(l1.faces.size()); ++i) {
      if (placed[i]) continue;
      bool touches = order.empty();
      for (int j : order)
        if (s.adj_a[i].get(j)) {
          touches = true;
          break;
        }
      if (!touches) continue;
      if (best < 0 || hist[s.color_a[i]] < hist[s.color_a[best]]) best = i;
    }
    if (best < 0) {  // disconnected cover graph (cannot happen for lattices, but be safe)
      for (int i = 0; i < static_cast<int>(l1.faces.size()); ++i)
        if (!placed[i]) return i;
    }
    return best;
  };
  while (order.size() < l1.faces.size()) {
    int i = pick_next();
    placed[i] = 1;
    order.push_back(i);
  }
  if (!s.search(order, 0)) return std::nullopt;
  return s.map_ab;
}

std::string lattice_to_dot(const FaceLattice& l) {
  std::ostringstream os;
  os << "digraph lattice {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < l.faces.size(); ++i)
    os << "  f" << i << " [label=\"" << l.faces[i].label << "\"];\n";
  for (std::size_t i = 0; i < l.faces.size(); ++i)
    for (int c : l.faces[i].covers) os << "  f" << c << " -> f" << i << ";\n";
  os << "}\n";
  return os.str();
}

std::string fvec_to_string(const std::vector<long long>& f) {
  std::ostringstream os;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) os << ' ';
    os << f[i];
  }
  return os.str();
}

}  // namespace pa
