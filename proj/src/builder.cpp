#include "pa/builder.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "pa/errors.hpp"
#include "pa/lattice.hpp"

namespace pa {

std::string simplex_facet_label(const std::string& bundle_member) {
  // tube labels always start with '{', so '^' can never clash
  return "^" + bundle_member;
}

std::string collapsed_facet_label(const std::string& tube_label) {
  // temporary prefix for the collapsed-side base facets: a target tau may
  // coincide as a set with a base tube t (tau = t for B = {x}), so the base
  // labels must stay out of the tube-label namespace until the schedule is done
  return "~" + tube_label;
}

std::vector<TruncationStep> schedule_trivial(const Poset& p, int x) {
  std::vector<TruncationStep> steps;
  for (Mask u : tubes(p)) {
    if (!(u >> x & 1)) continue;
    TruncationStep st;
    for (Mask c : tube_components(p, x, u)) st.face.push_back(p.set_label(c));
    st.new_label = p.set_label(u);
    st.size = popcount(u);
    steps.push_back(std::move(st));
  }
  // largest tubes first: a later relabel u = t + {x} may only retarget a facet
  // no earlier truncation still needs
  std::sort(steps.begin(), steps.end(), [](const TruncationStep& a, const TruncationStep& b) {
    if (a.size != b.size) return a.size > b.size;
    return a.new_label < b.new_label;
  });
  return steps;
}

std::vector<TruncationStep> schedule_nontrivial(const Poset& p, int x) {
  Mask bun = p.bundle(x);
  Poset pc = p.collapse_bundle(x);
  int xc = pc.index(p.id(x));

  std::vector<Mask> ts;
  for (Mask t : tubes(pc))
    if (t >> xc & 1) ts.push_back(t);
  ts.push_back(pc.all());  // the collapsed poset itself (face: simplex side only)

  std::vector<int> zs;  // bundle members, in canonical order
  for (Mask m = bun; m; m &= m - 1) zs.push_back(std::countr_zero(m));
  std::size_t beta = zs.size();

  std::vector<TruncationStep> steps;
  for (Mask t : ts) {
    for (Mask sub = 1; sub < (Mask{1} << beta); ++sub) {
      Mask bm = 0;
      for (std::size_t i = 0; i < beta; ++i)
        if (sub >> i & 1) bm |= bit(zs[i]);
      Mask tau = transfer_mask(pc, t & ~bit(xc), p) | bm;
      if (!is_tube(p, tau)) continue;
      TruncationStep st;
      if (t != pc.all()) st.face.push_back(collapsed_facet_label(pc.set_label(t)));
      for (std::size_t i = 0; i < beta; ++i)
        if (!(sub >> i & 1)) st.face.push_back(simplex_facet_label(p.id(zs[i])));
      st.new_label = p.set_label(tau);
      st.size = popcount(tau);
      steps.push_back(std::move(st));
    }
  }
  // smallest targets first: every facet a later step addresses supports a
  // strictly larger tube, so it has not been cut or relabeled yet
  std::sort(steps.begin(), steps.end(), [](const TruncationStep& a, const TruncationStep& b) {
    if (a.size != b.size) return a.size < b.size;
    return a.new_label < b.new_label;
  });
  return steps;
}

namespace {

SimplePolytope build_impl(const Poset& p, std::optional<int> root,
                          std::vector<TruncationStep>* schedule_out) {
  if (p.n() == 1) return point();

  if (!p.is_connected_subset(p.all())) {
    auto comps = p.hasse_components();
    SimplePolytope q = build_impl(comps[0], std::nullopt, nullptr);
    for (std::size_t i = 1; i < comps.size(); ++i)
      q = product(q, build_impl(comps[i], std::nullopt, nullptr));
    std::vector<std::string> labels;
    for (Mask c : p.component_masks()) labels.push_back(p.set_label(c));
    return product(q, simplex(static_cast<int>(comps.size()) - 1, std::move(labels)));
  }

  int x = root.value_or(p.pick_truncation_root());
  SimplePolytope q;
  std::vector<TruncationStep> steps;
  if (popcount(p.bundle(x)) == 1) {
    q = build_impl(p.delete_elements(bit(x)), std::nullopt, nullptr);
    steps = schedule_trivial(p, x);
  } else {
    Poset pc = p.collapse_bundle(x);
    std::vector<std::string> slabels;
    for (Mask m = p.bundle(x); m; m &= m - 1)
      slabels.push_back(simplex_facet_label(p.id(std::countr_zero(m))));
    int beta = static_cast<int>(slabels.size());
    SimplePolytope kc = build_impl(pc, std::nullopt, nullptr);
    for (auto& l : kc.facets) l = collapsed_facet_label(l);
    q = product(std::move(kc), simplex(beta - 1, std::move(slabels)));
    steps = schedule_nontrivial(p, x);
  }
  for (const auto& st : steps) q = truncate_face(q, st.face, st.new_label);
  // collapsed-side facets not consumed by the schedule are tubes of P as-is
  for (auto& l : q.facets)
    if (l.rfind("~", 0) == 0) l = l.substr(1);
  if (schedule_out) *schedule_out = std::move(steps);
  return q;
}

}  // namespace

SimplePolytope build(const Poset& p, const BuildOptions& options) {
  std::optional<int> root;
  if (options.root) {
    int r = p.index(*options.root);
    auto cands = p.root_candidates();
    if (std::find(cands.begin(), cands.end(), r) == cands.end())
      throw Error(ErrorCode::UnknownElement,
                  "'" + *options.root + "' is not a maximal element of a maximum-length chain");
    root = r;
  }
  SimplePolytope q = build_impl(p, root, options.schedule_out);

  std::vector<std::string> want;
  for (Mask t : tubes(p)) want.push_back(p.set_label(t));
  std::sort(want.begin(), want.end());
  if (q.facet_labels_sorted() != want)
    throw Error(ErrorCode::LabelMismatch, "facet labels do not match the tube set");
  auto report = validate(q);
  if (!report.ok())
    throw Error(ErrorCode::ValidationFailed, "built polytope invalid: " + report.violations[0]);
  return q;
}

OracleReport verify_against_oracle(const Poset& p, long long budget) {
  OracleReport rep;
  FaceLattice lo = face_poset(p, budget);
  SimplePolytope q = build(p);
  FaceLattice lb = face_lattice(q);
  rep.f_oracle = lo.f_vector();
  rep.f_build = lb.f_vector();

  std::vector<std::string> want;
  for (Mask t : tubes(p)) want.push_back(p.set_label(t));
  std::sort(want.begin(), want.end());
  rep.facet_labels_match = q.facet_labels_sorted() == want;
  if (!rep.facet_labels_match) return rep;

  // pin the facet bijection to the identity on tube labels
  std::map<std::string, int> color;
  for (std::size_t i = 0; i < want.size(); ++i) color[want[i]] = static_cast<int>(i) + 1;
  std::vector<int> c1(lo.faces.size(), 0), c2(lb.faces.size(), 0);
  for (std::size_t i = 0; i < lo.faces.size(); ++i)
    if (lo.faces[i].dim == lo.top_dim - 1) {
      const std::string& l = lo.faces[i].label;  // "[{...}]"
      auto it = color.find(l.substr(1, l.size() - 2));
      if (it != color.end()) c1[i] = it->second;
    }
  for (std::size_t i = 0; i < lb.faces.size(); ++i)
    if (lb.faces[i].dim == lb.top_dim - 1) {
      auto it = color.find(lb.faces[i].label);
      if (it != color.end()) c2[i] = it->second;
    }
  rep.isomorphic = lattice_iso(lo, lb, 50'000'000, &c1, &c2).has_value();
  return rep;
}

}  // namespace pa
