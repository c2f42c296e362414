#include <catch_amalgamated.hpp>

#include "slatt/construct.hpp"
#include "slatt/poset_props.hpp"

using namespace slatt;

namespace {

Lattice s7() { return apply_recipe({2, 2, {0}, std::nullopt}); }

}  // namespace

TEST_CASE("partition property") {
  SECTION("S7: the two maximal colors share a lower cover and split apart") {
    auto res = partition_property(ji_poset(s7()).poset);
    REQUIRE(res.ok);
    CHECK(res.class0 == std::vector<int>{0});
    CHECK(res.class1 == std::vector<int>{1});
  }
  SECTION("antichain of four maximal elements") {
    auto res = partition_property(ji_poset(grid(3, 3)).poset);
    REQUIRE(res.ok);
    CHECK(res.class0.size() + res.class1.size() == 4);
    CHECK(!res.class0.empty());
    CHECK(!res.class1.empty());
  }
  SECTION("odd triangle of common lower covers fails") {
    // Maximal 0,1,2; each pair shares one of the lower covers 3,4,5.
    FinitePoset P = FinitePoset::from_covers(
        6, {{3, 0}, {3, 1}, {4, 1}, {4, 2}, {5, 0}, {5, 2}});
    CHECK(!partition_property(P).ok);
  }
  SECTION("a single maximal element cannot be split") {
    CHECK(!partition_property(FinitePoset::from_covers(1, {})).ok);
    CHECK(!partition_property(FinitePoset::from_covers(2, {{0, 1}})).ok);
  }
}

TEST_CASE("maximal cover property") {
  CHECK(maximal_cover_property(ji_poset(s7()).poset).ok);
  CHECK(maximal_cover_property(ji_poset(grid(4, 4)).poset).ok);

  // Pendant chain: 0 covered only by the maximal 1.
  auto res = maximal_cover_property(FinitePoset::from_covers(2, {{0, 1}}));
  CHECK(!res.ok);
  CHECK(res.witness_v == 0);

  // Antichains pass vacuously.
  CHECK(maximal_cover_property(FinitePoset::from_covers(3, {})).ok);
}

TEST_CASE("no child property") {
  CHECK(no_child_property(ji_poset(s7()).poset).ok);

  // Diamond with a child below both midpoints.
  FinitePoset P = FinitePoset::from_covers(4, {{1, 0}, {2, 0}, {3, 1}, {3, 2}});
  auto res = no_child_property(P);
  CHECK(!res.ok);
  CHECK(res.witness == std::array<int, 4>{1, 2, 3, 0});
}

TEST_CASE("the four-crown two-pendant poset and its embedding search") {
  const FinitePoset& R = crown_poset_r();
  REQUIRE(R.size() == 10);
  CHECK(R.maximal() == std::vector<int>{0, 1, 2, 3});
  for (int mid : {4, 5, 6, 7}) CHECK(R.upper_covers(mid).size() == 2);
  for (int pendant : {8, 9}) {
    CHECK(R.upper_covers(pendant).size() == 2);
    CHECK(R.lower_covers(pendant).empty());
  }

  SECTION("R embeds into itself") {
    auto res = four_crown_two_pendant(R);
    REQUIRE(!res.ok);
    REQUIRE(res.embedding.size() == 10);
    // The witness is a genuine cover-preserving order embedding.
    for (int x = 0; x < 10; ++x)
      for (int y = 0; y < 10; ++y) {
        CHECK(R.leq(x, y) == R.leq(res.embedding[x], res.embedding[y]));
        if (R.covers(x, y)) CHECK(R.covers(res.embedding[x], res.embedding[y]));
      }
  }
  SECTION("small congruence orders cannot contain R") {
    CHECK(four_crown_two_pendant(ji_poset(s7()).poset).ok);
    CHECK(four_crown_two_pendant(ji_poset(grid(4, 4)).poset).ok);
  }
  SECTION("maximal elements of R must land on maximal elements") {
    // R plus a new top over one crown element: the embedding disappears
    // because 0 is no longer maximal in the host.
    std::vector<std::pair<int, int>> covers = {{4, 0}, {4, 1}, {5, 1}, {5, 2},
                                               {6, 2}, {6, 3}, {7, 3}, {7, 0},
                                               {8, 4}, {8, 6}, {9, 5}, {9, 7},
                                               {0, 10}};
    CHECK(four_crown_two_pendant(FinitePoset::from_covers(11, covers)).ok);
  }
}

TEST_CASE("peak S7 detection") {
  SECTION("S7 is its own single peak") {
    auto peaks = peak_s7_find(s7());
    REQUIRE(peaks.size() == 1);
    CHECK(peaks[0] == PeakS7{0, 1, 2, 3, 4, 5, 6});
    CHECK(peaks[0].middle() == Edge{4, 6});
  }
  SECTION("grids have none") {
    CHECK(peak_s7_find(grid(4, 4)).empty());
  }
  SECTION("the fork into the 3x3 grid hosts exactly one") {
    Lattice K = apply_recipe({3, 3, {4}, std::nullopt});
    auto peaks = peak_s7_find(K);
    REQUIRE(peaks.size() == 1);
    CHECK(peaks[0] == PeakS7{4, 7, 8, 10, 11, 12, 13});
    SwingIndex S(K);
    CHECK(classification_cross_check(S, peaks));
  }
  SECTION("stacked forks: the top peak survives as a sublattice only") {
    Lattice K = apply_recipe({2, 2, {0, 0}, std::nullopt});
    auto peaks = peak_s7_find(K);
    REQUIRE(peaks.size() == 2);
    SwingIndex S(K);
    CHECK(S.steep_edges().size() == 2);
    CHECK(classification_cross_check(S, peaks));
  }
}

TEST_CASE("lemma sweeps on small lattices") {
  for (const Recipe& r : enumerate_corpus(3, 3, 2)) {
    Lattice K = apply_recipe(r);
    SwingIndex S(K);
    JiPoset P = ji_poset(K);
    CHECK(lemma_application_check(S));
    CHECK(lemma_disj_check(S));
    CHECK(lemma_disjoint_check(S, P));
  }
}

TEST_CASE("normal-up edges reach the upper-left boundary or a steep edge") {
  Lattice K = s7();
  SwingIndex S(K);
  // [2,5] climbs to the steep middle edge in one step.
  auto up = S.up_closure(S.index({2, 5}));
  REQUIRE(up.size() == 2);
  CHECK(S.edge(up[1]) == Edge{4, 6});
  CHECK(S.classify(up[1]) == EdgeClass::steep);
  // [0,2] climbs to the upper-left boundary.
  auto up2 = S.up_closure(S.index({0, 2}));
  CHECK(S.edge(up2.back()) == Edge{3, 6});
  CHECK(S.on_upper_left(up2.back()));
}
