#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "pa/generators.hpp"
#include "pa/tubing.hpp"

using namespace pa;

namespace {

Poset z5() {
  return Poset::from_covers({"a", "b", "c", "p", "q"},
                            {{"a", "p"}, {"b", "p"}, {"b", "q"}, {"c", "q"}});
}

}  // namespace

TEST_CASE("tubes of the 5-element zigzag") {
  Poset p = z5();
  std::vector<std::string> labels;
  for (Mask t : tubes(p)) labels.push_back(p.set_label(t));
  CHECK(labels == std::vector<std::string>{"{a}", "{a,b,p}", "{b}", "{b,c,q}", "{c}"});
}

TEST_CASE("filledness: a set containing a full boundary must meet the bundle") {
  Poset p = z5();
  CHECK_FALSE(is_filled(p, p.mask_of_ids({"a", "b"})));      // boundary of p covered
  CHECK(is_filled(p, p.mask_of_ids({"a", "b", "p"})));
  CHECK_FALSE(is_filled(p, 0));                              // minimal bundle unmet
  CHECK_THROWS_AS(is_filled(p, Mask{1} << 60), Error);
}

TEST_CASE("tube enumeration agrees with the naive subset filter") {
  std::mt19937 rng(11);
  for (int it = 0; it < 120; ++it) {
    Poset p = tst::random_poset(rng, 6, 0.3);
    CHECK(tubes(p) == tst::naive_tubes(p));
  }
  for (int it = 0; it < 20; ++it) {
    Poset p = tst::random_poset(rng, 8, 0.25);
    CHECK(tubes(p) == tst::naive_tubes(p));
  }
}

TEST_CASE("tubing predicate matches the exhaustive definition") {
  std::mt19937 rng(13);
  for (int it = 0; it < 40; ++it) {
    Poset p = tst::random_poset(rng, 5, 0.3);
    auto naive = tst::naive_tubings(p);
    auto fast = tubings(p);
    REQUIRE(naive.size() == fast.size());
    for (const auto& t : naive) CHECK(is_tubing(p, t));
  }
}

TEST_CASE("a tubing may not cover every element") {
  Poset p = standard("fan", 3);  // singleton tubes m01..m04 under one top
  Tubing all = {p.mask_of_ids({"m01"}), p.mask_of_ids({"m02"}), p.mask_of_ids({"m03"}),
                p.mask_of_ids({"m04"})};
  CHECK_FALSE(is_tubing(p, all));  // union is the full boundary of t, unfilled
  all.pop_back();
  CHECK(is_tubing(p, all));
}

TEST_CASE("is_tubing rejects non-tubes loudly") {
  Poset p = z5();
  CHECK_THROWS_WITH_AS(is_tubing(p, {p.mask_of_ids({"a", "b"})}),
                       doctest::Contains("NOT_A_TUBE"), Error);
  CHECK(is_tubing(p, {}));
  CHECK_FALSE(is_tubing(p, {p.mask_of_ids({"a"}), p.mask_of_ids({"b"})}));  // unfilled union
}

TEST_CASE("f-vectors of the small figures") {
  CHECK(f_vector(z5()) == std::vector<long long>{5, 5});
  // double edge: two nodes, two parallel edges
  Poset m = graph_face_poset({{"u", "v"}, {{"u", "v"}, {"u", "v"}}, {}});
  CHECK(f_vector(m) == std::vector<long long>{4, 4});
  CHECK(f_vector(standard("bundle_over", 3)) == std::vector<long long>{6, 6});
  CHECK(f_vector(standard("fan", 3)) == std::vector<long long>{4, 6, 4});
  CHECK(f_vector(standard("chain", 4)).empty());  // a point
}

TEST_CASE("face_poset is the tubing lattice under reverse containment") {
  Poset p = z5();
  FaceLattice l = face_poset(p);
  CHECK(l.top_dim == 2);
  CHECK(l.faces.size() == 11);  // 5 vertices + 5 edges + top
  CHECK(l.faces[l.top].label == "[]");
  CHECK(l.f_vector() == std::vector<long long>{5, 5});
  int edges_of_top = static_cast<int>(l.faces[l.top].covers.size());
  CHECK(edges_of_top == 5);
}

TEST_CASE("enumeration options: max size and budget") {
  Poset p = z5();
  EnumOptions opts;
  opts.max_size = 1;
  CHECK(tubings(p, opts).size() == 6);  // empty + 5 singletons
  opts.max_size.reset();
  opts.budget = 3;
  CHECK_THROWS_WITH_AS(tubings(p, opts), doctest::Contains("BUDGET_EXCEEDED"), Error);
}

TEST_CASE("x_fill closes a disjoint family with x") {
  Poset p = z5();
  int x = p.index("p");
  auto filled = x_fill(p, x, {p.mask_of_ids({"a"}), p.mask_of_ids({"b"})});
  REQUIRE(filled.has_value());
  CHECK(p.set_label(*filled) == "{a,b,p}");
  CHECK_FALSE(x_fill(p, x, {p.mask_of_ids({"a"})}).has_value());
  CHECK_THROWS_AS(x_fill(p, p.index("a"), {}), Error);  // nontrivial bundle
}

TEST_CASE("tube_components splits and validates") {
  Poset p = z5();
  int x = p.index("p");
  auto comps = tube_components(p, x, p.mask_of_ids({"a", "b", "p"}));
  REQUIRE(comps.size() == 2);
  CHECK(p.set_label(comps[0]) == "{a}");
  CHECK(p.set_label(comps[1]) == "{b}");
  CHECK_THROWS_AS(tube_components(p, x, p.mask_of_ids({"a", "b"})), Error);
}

TEST_CASE("dimension is n minus the bundle count") {
  CHECK(dimension(z5()) == 2);
  CHECK(dimension(standard("chain", 5)) == 0);
  CHECK(dimension(standard("antichain", 5)) == 4);
}
