#include "pa/poset.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace pa {

int popcount(Mask m) { return std::popcount(m); }

bool mask_less(Mask a, Mask b) {
  // lexicographic on ascending index sequences
  while (a && b) {
    int ia = std::countr_zero(a);
    int ib = std::countr_zero(b);
    if (ia != ib) return ia < ib;
    a &= a - 1;
    b &= b - 1;
  }
  return a == 0 && b != 0;
}

Poset Poset::from_covers(std::vector<std::string> ids,
                         const std::vector<std::pair<std::string, std::string>>& edges) {
  Poset p;
  if (ids.empty()) throw Error(ErrorCode::EmptyResult, "poset has no elements");
  std::sort(ids.begin(), ids.end());
  for (std::size_t i = 1; i < ids.size(); ++i)
    if (ids[i] == ids[i - 1])
      throw Error(ErrorCode::DuplicateId, "duplicate element '" + ids[i] + "'");
  for (const auto& id : ids)
    if (id.empty()) throw Error(ErrorCode::ParseError, "empty element identifier");
  if (ids.size() > kMaxElements)
    throw Error(ErrorCode::BadSize, "more than 64 elements");

  p.ids_ = std::move(ids);
  p.n_ = static_cast<int>(p.ids_.size());

  auto idx = [&p](const std::string& s) {
    auto it = std::lower_bound(p.ids_.begin(), p.ids_.end(), s);
    if (it == p.ids_.end() || *it != s)
      throw Error(ErrorCode::UnknownElement, "unknown element '" + s + "'");
    return static_cast<int>(it - p.ids_.begin());
  };

  std::vector<Mask> direct(p.n_, 0);
  for (const auto& [lo, hi] : edges) {
    int a = idx(lo), b = idx(hi);
    if (a == b) throw Error(ErrorCode::Cycle, "self-loop on '" + lo + "'");
    direct[b] |= bit(a);
  }

  // topological order (Kahn) over the direct edges
  std::vector<int> indeg(p.n_, 0);
  for (int i = 0; i < p.n_; ++i) indeg[i] = popcount(direct[i]);
  std::vector<Mask> above(p.n_, 0);
  for (int i = 0; i < p.n_; ++i)
    for (Mask m = direct[i]; m; m &= m - 1) above[std::countr_zero(m)] |= bit(i);

  std::vector<int> order;
  std::vector<int> queue;
  for (int i = 0; i < p.n_; ++i)
    if (indeg[i] == 0) queue.push_back(i);
  while (!queue.empty()) {
    int v = queue.back();
    queue.pop_back();
    order.push_back(v);
    for (Mask m = above[v]; m; m &= m - 1) {
      int w = std::countr_zero(m);
      if (--indeg[w] == 0) queue.push_back(w);
    }
  }
  if (static_cast<int>(order.size()) != p.n_)
    throw Error(ErrorCode::Cycle, "order edges form a directed cycle");

  // transitive closure along the topological order
  p.down_.assign(p.n_, 0);
  for (int v : order)
    for (Mask m = direct[v]; m; m &= m - 1) {
      int w = std::countr_zero(m);
      p.down_[v] |= bit(w) | p.down_[w];
    }

  // transitive reduction: (w, v) is a cover iff w is not below any other
  // element below v
  p.adj_.assign(p.n_, 0);
  for (int v = 0; v < p.n_; ++v) {
    Mask implied = 0;
    for (Mask m = p.down_[v]; m; m &= m - 1) implied |= p.down_[std::countr_zero(m)];
    for (Mask m = p.down_[v] & ~implied; m; m &= m - 1) {
      int w = std::countr_zero(m);
      p.covers_.emplace_back(w, v);
      p.adj_[w] |= bit(v);
      p.adj_[v] |= bit(w);
    }
  }
  std::sort(p.covers_.begin(), p.covers_.end());

  // bundles: equivalence classes of equal boundaries
  std::map<Mask, Mask> classes;  // boundary -> members (map iteration unused for order)
  for (int i = 0; i < p.n_; ++i) classes[p.down_[i]] |= bit(i);
  std::vector<Mask> blocks;
  for (auto& [bd, members] : classes) blocks.push_back(members);
  std::sort(blocks.begin(), blocks.end(), mask_less);
  p.bundle_masks_ = blocks;
  p.bundle_of_.assign(p.n_, -1);
  p.bundle_boundary_.resize(blocks.size());
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    p.bundle_boundary_[k] = p.down_[std::countr_zero(blocks[k])];
    for (Mask m = blocks[k]; m; m &= m - 1) p.bundle_of_[std::countr_zero(m)] = static_cast<int>(k);
  }
  // linear extension of bundles: boundary size ascending puts each bundle
  // after everything in its boundary
  p.bundle_order_.resize(blocks.size());
  std::iota(p.bundle_order_.begin(), p.bundle_order_.end(), 0);
  std::sort(p.bundle_order_.begin(), p.bundle_order_.end(), [&p](int a, int b) {
    int sa = popcount(p.bundle_boundary_[a]);
    int sb = popcount(p.bundle_boundary_[b]);
    if (sa != sb) return sa < sb;
    return mask_less(p.bundle_masks_[a], p.bundle_masks_[b]);
  });
  return p;
}

int Poset::index(const std::string& id) const {
  auto r = find(id);
  if (!r) throw Error(ErrorCode::UnknownElement, "unknown element '" + id + "'");
  return *r;
}

std::optional<int> Poset::find(const std::string& id) const {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
  if (it == ids_.end() || *it != id) return std::nullopt;
  return static_cast<int>(it - ids_.begin());
}

Mask Poset::boundary(int x) const {
  if (x < 0 || x >= n_) throw Error(ErrorCode::UnknownElement, "element index out of range");
  return down_[x];
}

Mask Poset::bundle(int x) const {
  if (x < 0 || x >= n_) throw Error(ErrorCode::UnknownElement, "element index out of range");
  return bundle_masks_[bundle_of_[x]];
}

bool Poset::is_lower_set(Mask s) const {
  if (s & ~all()) throw Error(ErrorCode::UnknownElement, "set not within poset");
  for (Mask m = s; m; m &= m - 1)
    if (down_[std::countr_zero(m)] & ~s) return false;
  return true;
}

Mask Poset::lower_closure(Mask s) const {
  if (s & ~all()) throw Error(ErrorCode::UnknownElement, "set not within poset");
  Mask out = s;
  for (Mask m = s; m; m &= m - 1) out |= down_[std::countr_zero(m)];
  return out;
}

bool Poset::is_connected_subset(Mask s) const {
  if (s & ~all()) throw Error(ErrorCode::UnknownElement, "set not within poset");
  if (!s) return false;
  Mask seen = bit(std::countr_zero(s));
  Mask frontier = seen;
  while (frontier) {
    Mask next = 0;
    for (Mask m = frontier; m; m &= m - 1) next |= adj_[std::countr_zero(m)] & s;
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == s;
}

std::vector<Mask> Poset::component_masks() const {
  std::vector<Mask> out;
  Mask rest = all();
  while (rest) {
    Mask seed = bit(std::countr_zero(rest));
    Mask comp = seed, frontier = seed;
    while (frontier) {
      Mask next = 0;
      for (Mask m = frontier; m; m &= m - 1) next |= adj_[std::countr_zero(m)];
      frontier = next & ~comp;
      comp |= next;
    }
    out.push_back(comp);
    rest &= ~comp;
  }
  std::sort(out.begin(), out.end(), mask_less);
  return out;
}

std::vector<Poset> Poset::hasse_components() const {
  std::vector<Poset> out;
  for (Mask c : component_masks()) out.push_back(delete_elements(all() & ~c));
  return out;
}

Poset Poset::delete_elements(Mask removed) const {
  if (removed & ~all()) throw Error(ErrorCode::UnknownElement, "set not within poset");
  Mask keep = all() & ~removed;
  if (!keep) throw Error(ErrorCode::EmptyResult, "all elements removed");
  std::vector<std::string> ids;
  for (Mask m = keep; m; m &= m - 1) ids.push_back(ids_[std::countr_zero(m)]);
  std::vector<std::pair<std::string, std::string>> edges;
  // restrict the order relation itself; from_covers re-reduces
  for (Mask m = keep; m; m &= m - 1) {
    int v = std::countr_zero(m);
    for (Mask w = down_[v] & keep; w; w &= w - 1)
      edges.emplace_back(ids_[std::countr_zero(w)], ids_[v]);
  }
  return from_covers(std::move(ids), edges);
}

Poset Poset::collapse_bundle(int x) const {
  Mask others = bundle(x) & ~bit(x);
  if (!others) return *this;
  return delete_elements(others);
}

std::vector<int> Poset::root_candidates() const {
  std::vector<int> chain_len(n_, 0);
  std::vector<int> order(n_);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [this](int a, int b) { return popcount(down_[a]) < popcount(down_[b]); });
  int best = 0;
  for (int v : order) {
    int m = 0;
    for (Mask w = down_[v]; w; w &= w - 1) m = std::max(m, chain_len[std::countr_zero(w)]);
    chain_len[v] = m + 1;
    best = std::max(best, chain_len[v]);
  }
  std::vector<int> cands;
  for (int i = 0; i < n_; ++i)
    if (chain_len[i] == best) cands.push_back(i);
  return cands;
}

int Poset::pick_truncation_root() const { return root_candidates().front(); }

std::vector<std::string> Poset::set_ids(Mask s) const {
  std::vector<std::string> out;
  for (Mask m = s; m; m &= m - 1) out.push_back(ids_[std::countr_zero(m)]);
  return out;
}

Mask Poset::mask_of_ids(const std::vector<std::string>& members) const {
  Mask out = 0;
  for (const auto& id : members) out |= bit(index(id));
  return out;
}

std::string Poset::set_label(Mask s) const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (Mask m = s; m; m &= m - 1) {
    if (!first) os << ',';
    first = false;
    os << ids_[std::countr_zero(m)];
  }
  os << '}';
  return os.str();
}

Mask transfer_mask(const Poset& from, Mask m, const Poset& to) {
  Mask out = 0;
  for (Mask s = m; s; s &= s - 1) out |= bit(to.index(from.id(std::countr_zero(s))));
  return out;
}

}  // namespace pa
