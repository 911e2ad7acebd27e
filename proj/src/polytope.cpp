#include "pa/polytope.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <set>
#include <sstream>

#include "pa/errors.hpp"

namespace pa {

namespace {

std::uint64_t facet_mask(const std::vector<int>& v) {
  std::uint64_t m = 0;
  for (int f : v) m |= std::uint64_t{1} << f;
  return m;
}

}  // namespace

std::optional<int> SimplePolytope::find_facet(const std::string& label) const {
  for (std::size_t i = 0; i < facets.size(); ++i)
    if (facets[i] == label) return static_cast<int>(i);
  return std::nullopt;
}

int SimplePolytope::facet_index(const std::string& label) const {
  auto r = find_facet(label);
  if (!r) throw Error(ErrorCode::UnknownFacet, "no facet labeled '" + label + "'");
  return *r;
}

std::vector<std::string> SimplePolytope::facet_labels_sorted() const {
  std::vector<std::string> out = facets;
  std::sort(out.begin(), out.end());
  return out;
}

SimplePolytope point() {
  SimplePolytope q;
  q.dim = 0;
  q.vertices.push_back({});
  return q;
}

SimplePolytope simplex(int k, std::vector<std::string> labels) {
  if (k < 0) throw Error(ErrorCode::BadSize, "simplex dimension must be >= 0");
  SimplePolytope q;
  q.dim = k;
  if (labels.empty())
    for (int i = 0; i <= k; ++i) labels.push_back("s" + std::to_string(i));
  if (static_cast<int>(labels.size()) != k + 1)
    throw Error(ErrorCode::BadSize, "simplex(k) needs k+1 facet labels");
  q.facets = std::move(labels);
  if (k == 0) {
    q.vertices.push_back({});
    return q;
  }
  for (int v = 0; v <= k; ++v) {
    std::vector<int> vert;
    for (int f = 0; f <= k; ++f)
      if (f != v) vert.push_back(f);
    q.vertices.push_back(vert);
  }
  return q;
}

SimplePolytope product(const SimplePolytope& a, const SimplePolytope& b) {
  SimplePolytope q;
  q.dim = a.dim + b.dim;
  q.facets = a.facets;
  for (const auto& l : b.facets) {
    if (a.find_facet(l))
      throw Error(ErrorCode::LabelClash, "facet label '" + l + "' on both factors");
    q.facets.push_back(l);
  }
  if (q.facets.size() > 64) throw Error(ErrorCode::BadSize, "more than 64 facets");
  int off = static_cast<int>(a.facets.size());
  for (const auto& va : a.vertices)
    for (const auto& vb : b.vertices) {
      std::vector<int> v = va;
      for (int f : vb) v.push_back(f + off);
      q.vertices.push_back(std::move(v));
    }
  return q;
}

std::optional<std::vector<int>> face_vertices(const SimplePolytope& q,
                                              const std::vector<std::string>& facet_set) {
  std::uint64_t want = 0;
  for (const auto& l : facet_set) want |= std::uint64_t{1} << q.facet_index(l);
  std::vector<int> out;
  for (std::size_t i = 0; i < q.vertices.size(); ++i)
    if ((want & ~facet_mask(q.vertices[i])) == 0) out.push_back(static_cast<int>(i));
  if (out.empty()) return std::nullopt;
  return out;
}

SimplePolytope truncate_face(const SimplePolytope& q, const std::vector<std::string>& facet_set,
                             const std::string& new_label) {
  auto on_face = face_vertices(q, facet_set);
  if (!on_face)
    throw Error(ErrorCode::NoSuchFace, "no face supported by the given facet set");
  if (q.find_facet(new_label))
    throw Error(ErrorCode::LabelClash, "facet label '" + new_label + "' already present");

  if (facet_set.size() == 1) {
    // codimension-1 truncation does not change the polytope; relabel
    SimplePolytope out = q;
    out.facets[q.facet_index(facet_set[0])] = new_label;
    return out;
  }

  SimplePolytope out;
  out.dim = q.dim;
  out.facets = q.facets;
  out.facets.push_back(new_label);
  if (out.facets.size() > 64) throw Error(ErrorCode::BadSize, "more than 64 facets");
  int nf = static_cast<int>(out.facets.size()) - 1;
  std::vector<int> sel;
  for (const auto& l : facet_set) sel.push_back(q.facet_index(l));
  std::uint64_t want = facet_mask(sel);

  std::set<std::vector<int>> verts;
  for (const auto& v : q.vertices) {
    if ((want & ~facet_mask(v)) == 0) {
      for (int s : sel) {
        std::vector<int> nv;
        for (int f : v)
          if (f != s) nv.push_back(f);
        nv.push_back(nf);
        std::sort(nv.begin(), nv.end());
        verts.insert(std::move(nv));
      }
    } else {
      verts.insert(v);
    }
  }
  out.vertices.assign(verts.begin(), verts.end());
  // structural sanity; the builder runs a full validate() at the end
  std::size_t expected = q.vertices.size() + (facet_set.size() - 1) * on_face->size();
  if (out.vertices.size() != expected)
    throw Error(ErrorCode::ValidationFailed, "truncation produced coincident vertices");
  for (const auto& v : out.vertices)
    if (static_cast<int>(v.size()) != out.dim)
      throw Error(ErrorCode::ValidationFailed, "truncation broke vertex degree");
  return out;
}

ValidationReport validate(const SimplePolytope& q) {
  ValidationReport r;
  std::set<std::vector<int>> seen;
  for (const auto& v : q.vertices) {
    if (static_cast<int>(v.size()) != q.dim)
      r.violations.push_back("vertex with " + std::to_string(v.size()) + " facets, expected " +
                             std::to_string(q.dim));
    if (!seen.insert(v).second) r.violations.push_back("duplicate vertex");
  }
  std::set<std::string> labels(q.facets.begin(), q.facets.end());
  if (labels.size() != q.facets.size()) r.violations.push_back("duplicate facet label");
  if (q.dim >= 1) {
    std::vector<char> used(q.facets.size(), 0);
    for (const auto& v : q.vertices)
      for (int f : v) used[f] = 1;
    for (std::size_t f = 0; f < q.facets.size(); ++f)
      if (!used[f]) r.violations.push_back("facet '" + q.facets[f] + "' has no vertex");
  }
  if (!r.ok()) return r;

  int n = static_cast<int>(q.vertices.size());
  std::vector<std::uint64_t> vm(n);
  for (int i = 0; i < n; ++i) vm[i] = facet_mask(q.vertices[i]);

  // vertex graph: adjacent iff sharing exactly dim-1 facets
  if (q.dim >= 1) {
    std::vector<std::vector<int>> adj(n);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (std::popcount(vm[i] & vm[j]) == q.dim - 1) {
          adj[i].push_back(j);
          adj[j].push_back(i);
        }
    for (int i = 0; i < n; ++i)
      if (static_cast<int>(adj[i].size()) != q.dim) {
        r.violations.push_back("vertex graph is not " + std::to_string(q.dim) + "-regular");
        break;
      }
    std::vector<char> vis(n, 0);
    std::vector<int> stack{0};
    vis[0] = 1;
    int cnt = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : adj[v])
        if (!vis[w]) {
          vis[w] = 1;
          ++cnt;
          stack.push_back(w);
        }
    }
    if (cnt != n) r.violations.push_back("vertex graph is disconnected");
  }

  // every non-empty facet intersection supports a face of codim exactly |S|:
  // equivalently, for every vertex v and S subseteq v, the common facets of
  // {w : w >= S} are exactly S
  for (int i = 0; i < n && r.ok(); ++i) {
    std::vector<int> fs = q.vertices[i];
    int d = q.dim;
    for (std::uint64_t sub = 0; sub < (std::uint64_t{1} << d); ++sub) {
      std::uint64_t s = 0;
      for (int k = 0; k < d; ++k)
        if (sub >> k & 1) s |= std::uint64_t{1} << fs[k];
      std::uint64_t common = ~std::uint64_t{0};
      for (int j = 0; j < n; ++j)
        if ((s & ~vm[j]) == 0) common &= vm[j];
      if (common != s) {
        r.violations.push_back("facet set of codim " + std::to_string(std::popcount(s)) +
                               " does not support a face of that codim");
        break;
      }
    }
  }
  return r;
}

FaceLattice face_lattice(const SimplePolytope& q) {
  int n = static_cast<int>(q.vertices.size());
  std::vector<std::uint64_t> vm(n);
  for (int i = 0; i < n; ++i) vm[i] = facet_mask(q.vertices[i]);

  // enumerate faces as vertex sets {w : w >= S} for S a subset of a vertex
  std::map<std::vector<std::uint64_t>, std::uint64_t> face_map;  // vset words -> facet set
  int words = (n + 63) / 64;
  std::uint64_t all_facets = q.facets.size() >= 64 ? ~std::uint64_t{0}
                                                   : (std::uint64_t{1} << q.facets.size()) - 1;
  auto vset_of = [&](std::uint64_t s) {
    std::vector<std::uint64_t> vs(words, 0);
    std::uint64_t common = all_facets;
    for (int j = 0; j < n; ++j)
      if ((s & ~vm[j]) == 0) {
        vs[j >> 6] |= std::uint64_t{1} << (j & 63);
        common &= vm[j];
      }
    return std::make_pair(vs, common);
  };
  for (int i = 0; i < n; ++i) {
    int d = q.dim;
    for (std::uint64_t sub = 0; sub < (std::uint64_t{1} << d); ++sub) {
      std::uint64_t s = 0;
      for (int k = 0; k < d; ++k)
        if (sub >> k & 1) s |= std::uint64_t{1} << q.vertices[i][k];
      auto [vs, common] = vset_of(s);
      face_map[vs] = common;
    }
  }
  if (n == 0) {  // degenerate; not produced by the constructors
    return FaceLattice{};
  }

  struct Rec {
    std::vector<std::uint64_t> vs;
    std::uint64_t facets;
    int dim;
    std::string label;
  };
  std::vector<Rec> recs;
  for (auto& [vs, common] : face_map) {
    Rec rec;
    rec.vs = vs;
    rec.facets = common;
    rec.dim = q.dim - std::popcount(common);
    std::vector<std::string> ls;
    for (int f = 0; f < static_cast<int>(q.facets.size()); ++f)
      if (common >> f & 1) ls.push_back(q.facets[f]);
    std::sort(ls.begin(), ls.end());
    std::ostringstream os;
    for (std::size_t k = 0; k < ls.size(); ++k) os << (k ? "|" : "") << ls[k];
    rec.label = ls.empty() ? "*" : os.str();
    recs.push_back(std::move(rec));
  }
  std::sort(recs.begin(), recs.end(), [](const Rec& a, const Rec& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.label < b.label;
  });

  FaceLattice l;
  l.top_dim = q.dim;
  l.faces.resize(recs.size());
  for (std::size_t i = 0; i < recs.size(); ++i) {
    l.faces[i].dim = recs[i].dim;
    l.faces[i].label = recs[i].label;
    if (recs[i].dim == q.dim) l.top = static_cast<int>(i);
  }
  auto subset = [&](const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
    for (int k = 0; k < words; ++k)
      if (a[k] & ~b[k]) return false;
    return true;
  };
  for (std::size_t i = 0; i < recs.size(); ++i)
    for (std::size_t j = 0; j < recs.size(); ++j)
      if (recs[j].dim == recs[i].dim - 1 && subset(recs[j].vs, recs[i].vs))
        l.faces[i].covers.push_back(static_cast<int>(j));
  return l;
}

}  // namespace pa
