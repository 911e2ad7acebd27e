#include "pa/tubing.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <sstream>
#include <unordered_map>

namespace pa {

bool is_filled(const Poset& p, Mask s) {
  if (s & ~p.all()) throw Error(ErrorCode::UnknownElement, "set not within poset");
  for (int b = 0; b < p.bundle_count(); ++b) {
    if ((p.bundle_boundary(b) & ~s) == 0 && (p.bundles()[b] & s) == 0) return false;
  }
  return true;
}

bool is_tube(const Poset& p, Mask s) {
  return s != 0 && s != p.all() && p.is_lower_set(s) && p.is_connected_subset(s) &&
         is_filled(p, s);
}

std::vector<Mask> tubes(const Poset& p) {
  // every filled lower set decomposes bundle-by-bundle along a linear
  // extension of bundles: a bundle whose boundary is inside contributes a
  // non-empty subset of its members, any other bundle contributes nothing
  std::vector<Mask> out;
  const auto& order = p.bundle_order();
  std::function<void(std::size_t, Mask)> rec = [&](std::size_t k, Mask cur) {
    if (k == order.size()) {
      if (cur && cur != p.all() && p.is_connected_subset(cur)) out.push_back(cur);
      return;
    }
    int b = order[k];
    if (p.bundle_boundary(b) & ~cur) {
      rec(k + 1, cur);
      return;
    }
    Mask members = p.bundles()[b];
    // iterate the non-empty subsets of the bundle
    std::vector<int> elems;
    for (Mask m = members; m; m &= m - 1) elems.push_back(std::countr_zero(m));
    for (Mask sub = 1; sub < (Mask{1} << elems.size()); ++sub) {
      Mask add = 0;
      for (std::size_t i = 0; i < elems.size(); ++i)
        if (sub >> i & 1) add |= bit(elems[i]);
      rec(k + 1, cur | add);
    }
  };
  rec(0, 0);
  std::sort(out.begin(), out.end(), mask_less);
  return out;
}

bool is_compatible(Mask t1, Mask t2) {
  return (t1 & t2) == 0 || (t1 & ~t2) == 0 || (t2 & ~t1) == 0;
}

namespace {

// Does some pairwise-disjoint subfamily of `family` that includes `seed`
// have an unfilled union?
bool disjoint_subfamily_unfilled(const Poset& p, const std::vector<Mask>& family, Mask seed) {
  std::vector<Mask> cand;
  for (Mask t : family)
    if ((t & seed) == 0) cand.push_back(t);
  std::function<bool(std::size_t, Mask, Mask)> rec = [&](std::size_t i, Mask chosen,
                                                         Mask unionm) {
    if (!is_filled(p, unionm)) return true;
    for (std::size_t j = i; j < cand.size(); ++j) {
      if (cand[j] & chosen) continue;
      if (rec(j + 1, chosen | cand[j], unionm | cand[j])) return true;
    }
    return false;
  };
  return rec(0, seed, seed);
}

}  // namespace

bool is_tubing(const Poset& p, const Tubing& t) {
  Mask unionm = 0;
  for (Mask tube : t) {
    if (!is_tube(p, tube))
      throw Error(ErrorCode::NotATube, "tubing member " + p.set_label(tube) + " is not a tube");
    unionm |= tube;
  }
  if (!t.empty() && unionm == p.all()) return false;
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = i + 1; j < t.size(); ++j)
      if (!is_compatible(t[i], t[j])) return false;
  for (Mask tube : t)
    if (disjoint_subfamily_unfilled(p, t, tube)) return false;
  return true;
}

std::vector<Tubing> tubings(const Poset& p, const EnumOptions& options) {
  std::vector<Mask> ts = tubes(p);
  std::vector<Tubing> out;
  long long count = 0;
  int cap = options.max_size.value_or(p.n());
  Tubing cur;
  std::function<void(std::size_t, Mask)> rec = [&](std::size_t i, Mask unionm) {
    if (++count > options.budget)
      throw Error(ErrorCode::BudgetExceeded, "tubing enumeration budget exceeded");
    out.push_back(cur);
    if (static_cast<int>(cur.size()) >= cap) return;
    for (std::size_t j = i; j < ts.size(); ++j) {
      Mask t = ts[j];
      if ((unionm | t) == p.all()) continue;
      bool ok = true;
      for (Mask s : cur)
        if (!is_compatible(t, s)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      cur.push_back(t);
      if (!disjoint_subfamily_unfilled(p, cur, t)) {
        rec(j + 1, unionm | t);
      }
      cur.pop_back();
    }
  };
  rec(0, 0);
  return out;
}

int dimension(const Poset& p) { return p.n() - p.bundle_count(); }

std::string tubing_label(const Poset& p, const Tubing& t) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) os << ',';
    os << p.set_label(t[i]);
  }
  os << ']';
  return os.str();
}

FaceLattice face_poset(const Poset& p, long long budget) {
  EnumOptions opts;
  opts.budget = budget;
  std::vector<Tubing> all = tubings(p, opts);
  int d = dimension(p);

  // canonical face order: dimension ascending = tubing size descending
  std::sort(all.begin(), all.end(), [](const Tubing& a, const Tubing& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), mask_less);
  });

  FaceLattice l;
  l.top_dim = d;
  l.faces.resize(all.size());
  std::unordered_map<std::string, int> index;
  index.reserve(all.size() * 2);
  auto key = [](const Tubing& t) {
    std::string k;
    for (Mask m : t) {
      k.append(reinterpret_cast<const char*>(&m), sizeof m);
    }
    return k;
  };
  for (std::size_t i = 0; i < all.size(); ++i) {
    l.faces[i].dim = d - static_cast<int>(all[i].size());
    l.faces[i].label = tubing_label(p, all[i]);
    index[key(all[i])] = static_cast<int>(i);
  }
  l.top = index[key(Tubing{})];
  // T' = T minus one tube covers T (reverse containment: more tubes = lower)
  for (std::size_t i = 0; i < all.size(); ++i) {
    const Tubing& t = all[i];
    if (t.empty()) continue;
    for (std::size_t k = 0; k < t.size(); ++k) {
      Tubing up;
      up.reserve(t.size() - 1);
      for (std::size_t j = 0; j < t.size(); ++j)
        if (j != k) up.push_back(t[j]);
      l.faces[index.at(key(up))].covers.push_back(static_cast<int>(i));
    }
  }
  for (auto& f : l.faces) std::sort(f.covers.begin(), f.covers.end());
  return l;
}

std::vector<long long> f_vector(const Poset& p, long long budget) {
  EnumOptions opts;
  opts.budget = budget;
  std::vector<Tubing> all = tubings(p, opts);
  int d = dimension(p);
  std::vector<long long> f(std::max(d, 0), 0);
  for (const auto& t : all)
    if (!t.empty()) ++f[d - static_cast<int>(t.size())];
  return f;
}

std::optional<Mask> x_fill(const Poset& p, int x, const std::vector<Mask>& disjoint_tubes) {
  if (popcount(p.bundle(x)) != 1)
    throw Error(ErrorCode::NotATube, "x_fill requires a trivial bundle at x");
  Mask s = bit(x);
  Mask seen = 0;
  for (Mask t : disjoint_tubes) {
    if (t & seen) throw Error(ErrorCode::NotATube, "x_fill tubes must be pairwise disjoint");
    seen |= t;
    s |= t;
  }
  if (is_tube(p, s)) return s;
  return std::nullopt;
}

std::vector<Mask> tube_components(const Poset& p, int x, Mask u) {
  if (!(u >> x & 1)) throw Error(ErrorCode::UnknownElement, "tube does not contain x");
  Poset rest = p.delete_elements(bit(x));
  Mask rem = transfer_mask(p, u & ~bit(x), rest);
  std::vector<Mask> out;
  Mask left = rem;
  while (left) {
    Mask seed = bit(std::countr_zero(left));
    Mask comp = seed, frontier = seed;
    while (frontier) {
      Mask next = 0;
      for (Mask m = frontier; m; m &= m - 1)
        next |= rest.cover_adjacency(std::countr_zero(m)) & rem;
      frontier = next & ~comp;
      comp |= next;
    }
    if (!is_tube(rest, comp))
      throw Error(ErrorCode::ComponentNotTube,
                  "component " + rest.set_label(comp) + " of " + p.set_label(u) +
                      " minus " + p.id(x) + " is not a tube");
    out.push_back(transfer_mask(rest, comp, p));
    left &= ~comp;
  }
  std::sort(out.begin(), out.end(), mask_less);
  return out;
}

}  // namespace pa
