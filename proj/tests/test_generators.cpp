#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "pa/census.hpp"
#include "pa/generators.hpp"
#include "pa/tubing.hpp"

using namespace pa;

TEST_CASE("graph face posets") {
  // path on 3 nodes is the 5-element zigzag
  Poset path3 = graph_face_poset({{"1", "2", "3"}, {{"1", "2"}, {"2", "3"}}, {}});
  CHECK(path3.n() == 5);
  CHECK(poset_canonical_key(path3) == poset_canonical_key(standard("zigzag", 5)));

  // double edge: parallel edges share a boundary, hence a bundle
  Poset dbl = graph_face_poset({{"u", "v"}, {{"u", "v"}, {"v", "u"}}, {}});
  CHECK(dbl.n() == 4);
  CHECK(dbl.bundle_count() == 2);
  CHECK(popcount(dbl.bundle(dbl.index("u-v"))) == 2);
  CHECK(dbl.find("u-v#2").has_value());

  CHECK_THROWS_WITH_AS(graph_face_poset({{"a"}, {{"a", "z"}}, {}}),
                       doctest::Contains("UNKNOWN_NODE"), Error);
}

TEST_CASE("loops are always swept in") {
  Poset p = graph_face_poset({{"v", "w"}, {{"v", "w"}}, {"v"}});
  // {v} omits the loop element whose boundary {v} is covered: not a tube
  CHECK_FALSE(is_tube(p, p.mask_of_ids({"v"})));
  CHECK(is_tube(p, p.mask_of_ids({"v", "v-v"})));
}

TEST_CASE("graph associahedra match the independent graph-tube enumerator") {
  std::vector<tst::SimpleGraph> corpus = {
      {2, {{0, 1}}},                            // segment
      {3, {{0, 1}, {1, 2}}},                    // path
      {3, {{0, 1}, {1, 2}, {0, 2}}},            // triangle
      {4, {{0, 1}, {1, 2}, {2, 3}}},            // path
      {4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}},    // cycle
      {4, {{0, 1}, {0, 2}, {0, 3}}},            // star
      {4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}},  // complete
  };
  for (const auto& g : corpus) {
    GraphSpec spec;
    for (int i = 0; i < g.n; ++i) spec.nodes.push_back("n" + std::to_string(i));
    for (auto [a, b] : g.edges) spec.edges.emplace_back(spec.nodes[a], spec.nodes[b]);
    FaceLattice ours = face_poset(graph_face_poset(spec));
    FaceLattice theirs = tst::graph_associahedron(g);
    REQUIRE(ours.faces.size() == theirs.faces.size());
    CHECK(lattice_iso(ours, theirs).has_value());
  }
}

TEST_CASE("zigzags are the path posets") {
  for (int n = 2; n <= 6; ++n) {
    tst::SimpleGraph path;
    path.n = n;
    for (int i = 0; i + 1 < n; ++i) path.edges.emplace_back(i, i + 1);
    CHECK(f_vector(standard("zigzag", 2 * n - 1)) == tst::graph_associahedron(path).f_vector());
  }
}

TEST_CASE("building set validation") {
  BuildingSet ok{{"1", "2"}, {{"1"}, {"2"}, {"1", "2"}}};
  CHECK(building_set_poset(ok).n() == 5);

  BuildingSet no_singleton{{"1", "2"}, {{"1"}, {"1", "2"}}};
  CHECK_THROWS_WITH_AS(building_set_poset(no_singleton),
                       doctest::Contains("NOT_A_BUILDING_SET"), Error);

  BuildingSet not_closed{{"1", "2", "3"}, {{"1"}, {"2"}, {"3"}, {"1", "2"}, {"2", "3"}}};
  CHECK_THROWS_WITH_AS(building_set_poset(not_closed),
                       doctest::Contains("NOT_A_BUILDING_SET"), Error);
  // the same family is fine as a hypergraph
  CHECK(hypergraph_poset(not_closed.ground, not_closed.blocks).n() == 8);
}

TEST_CASE("building set posets have two ranks and trivial maximal bundles") {
  std::mt19937 rng(21);
  for (int it = 0; it < 30; ++it) {
    int n = 2 + static_cast<int>(rng() % 4);
    auto masks = tst::random_building_set(rng, n);
    BuildingSet bs;
    for (int i = 0; i < n; ++i) bs.ground.push_back(std::to_string(i + 1));
    for (unsigned m : masks) {
      std::vector<std::string> blk;
      for (int i = 0; i < n; ++i)
        if (m >> i & 1) blk.push_back(bs.ground[i]);
      bs.blocks.push_back(blk);
    }
    Poset p = building_set_poset(bs);
    for (int x = 0; x < p.n(); ++x) {
      Mask b = p.boundary(x);
      if (b == 0) continue;                       // rank 0
      for (Mask m = b; m; m &= m - 1)             // rank 1: covers only minimals
        CHECK(p.boundary(std::countr_zero(m)) == 0);
      CHECK(popcount(p.bundle(x)) == 1);          // blocks are distinct sets
    }
  }
}

TEST_CASE("complete building set on 3 elements gives the hexagon") {
  BuildingSet bs{{"1", "2", "3"},
                 {{"1"}, {"2"}, {"3"}, {"1", "2"}, {"1", "3"}, {"2", "3"}, {"1", "2", "3"}}};
  CHECK(f_vector(building_set_poset(bs)) == std::vector<long long>{6, 6});
  BuildingSet smallest{{"1", "2", "3", "4"},
                       {{"1"}, {"2"}, {"3"}, {"4"}, {"1", "2", "3", "4"}}};
  CHECK(f_vector(building_set_poset(smallest)) == std::vector<long long>{4, 6, 4});
}

TEST_CASE("standard families: shapes and sizes") {
  CHECK(standard("chain", 3).covers().size() == 2);
  CHECK(standard("antichain", 4).covers().empty());
  Poset z7 = standard("zigzag", 7);
  CHECK(z7.n() == 7);
  CHECK(z7.bundle_count() == 4);
  CHECK(poset_canonical_key(standard("cross_stack", 2)) ==
        poset_canonical_key(graph_face_poset({{"u", "v"}, {{"u", "v"}, {"u", "v"}}, {}})));
  CHECK(standard("fan", 2).n() == 4);
  CHECK(f_vector(standard("fan", 2)) == std::vector<long long>{3, 3});
  CHECK(standard("bundle_over", 5).bundle_count() == 2);

  CHECK_THROWS_WITH_AS(standard("chain", 0), doctest::Contains("BAD_SIZE"), Error);
  CHECK_THROWS_WITH_AS(standard("zigzag", 4), doctest::Contains("BAD_SIZE"), Error);
  CHECK_THROWS_WITH_AS(standard("pyramid", 3), doctest::Contains("PARSE_ERROR"), Error);
}

TEST_CASE("census enumerations") {
  // 3-element posets up to isomorphism: antichain, V, wedge, chain, chain+point
  CHECK(all_posets(3, false).size() == 5);
  CHECK(all_posets(3, true).size() == 3);
  CHECK(all_posets(4, false).size() == 16);
  CHECK(all_posets(5, false).size() == 63);
  CHECK(all_posets(6, false).size() == 318);

  // two-rank census: within bounds and pairwise non-isomorphic
  auto two4 = two_rank_posets(4, false);
  std::set<std::string> keys;
  for (const auto& p : two4) {
    CHECK(p.n() <= 4);
    CHECK(keys.insert(poset_canonical_key(p)).second);
  }

  for (const auto& p : two_rank_posets(5, true)) {
    bool nontrivial = false;
    for (int b = 0; b < p.bundle_count(); ++b)
      if (p.bundle_boundary(b) != 0 && popcount(p.bundles()[b]) >= 2) nontrivial = true;
    CHECK(nontrivial);
  }
}

TEST_CASE("census_compare counts f-vector and lattice matches") {
  FaceLattice pentagon = face_poset(standard("zigzag", 5));
  auto cands = two_rank_posets(5, false);
  CensusReport rep = census_compare(pentagon, cands);
  CHECK(rep.candidates == static_cast<long long>(cands.size()));
  CHECK(rep.fvector_matches > 0);
  CHECK(rep.fvector_matches == rep.iso_matches);  // every pentagon is a pentagon
  CHECK(census_compare(pentagon, {}).candidates == 0);
}
