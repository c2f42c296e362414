#include <catch_amalgamated.hpp>

#include "slatt/construct.hpp"
#include "slatt/lattice.hpp"

using namespace slatt;

namespace {

// M3: bottom, three atoms, top.
Lattice m3() { return Lattice::from_upper_covers({{1, 2, 3}, {4}, {4}, {4}, {}}); }

// N5: 0 < 1 < 2 < 4 and 0 < 3 < 4.
Lattice n5() { return Lattice::from_upper_covers({{1, 3}, {2}, {4}, {4}, {}}); }

}  // namespace

TEST_CASE("building the four-element square") {
  Lattice K = Lattice::from_upper_covers({{1, 2}, {3}, {3}, {}});
  REQUIRE(K.size() == 4);
  CHECK(K.bottom() == 0);
  CHECK(K.top() == 3);
  CHECK(K.meet(1, 2) == 0);
  CHECK(K.join(1, 2) == 3);
  CHECK(K.leq(0, 3));
  CHECK(!K.leq(1, 2));
  CHECK(K.covers(0, 1));
  CHECK(!K.covers(0, 3));
  CHECK(K.edges() == std::vector<Edge>{{0, 1}, {0, 2}, {1, 3}, {2, 3}});
}

TEST_CASE("building a three-element chain") {
  Lattice K = Lattice::from_upper_covers({{1}, {2}, {}});
  REQUIRE(K.size() == 3);
  CHECK(K.height(2) == 2);
  CHECK(K.meet(0, 2) == 0);
  CHECK(K.join(0, 2) == 2);
}

TEST_CASE("a pair with two minimal upper bounds is rejected") {
  // 0 < 1,2; both 3 and 4 above {1,2}; single top 5.
  try {
    Lattice::from_upper_covers({{1, 2}, {3, 4}, {3, 4}, {5}, {5}, {}});
    FAIL("expected BuildError");
  } catch (const BuildError& e) {
    CHECK(e.kind() == BuildError::Kind::NotALattice);
    CHECK(e.elem_a() == 1);
    CHECK(e.elem_b() == 2);
  }
}

TEST_CASE("multiple maximal elements are rejected") {
  try {
    Lattice::from_upper_covers({{1, 2}, {3, 4}, {3, 4}, {}, {}});
    FAIL("expected BuildError");
  } catch (const BuildError& e) {
    CHECK(e.kind() == BuildError::Kind::MultipleTops);
  }
}

TEST_CASE("cycles and non-cover edges are rejected") {
  CHECK_THROWS_AS(Lattice::from_upper_covers({{1}, {2}, {0}}), BuildError);
  // 0<1<2 plus the transitive 0<2 listed as a cover.
  try {
    Lattice::from_upper_covers({{1, 2}, {2}, {}});
    FAIL("expected BuildError");
  } catch (const BuildError& e) {
    CHECK(e.kind() == BuildError::Kind::BadCovers);
  }
}

TEST_CASE("semimodularity validation") {
  CHECK(!validate_semimodular(grid(3, 3)));
  CHECK(!validate_semimodular(apply_recipe({2, 2, {0}, std::nullopt})));
  auto witness = validate_semimodular(n5());
  REQUIRE(witness.has_value());
  CHECK(*witness == std::make_pair(3, 1));
}

TEST_CASE("slimness validation") {
  CHECK(!validate_slim(apply_recipe({2, 2, {0}, std::nullopt})));
  CHECK(!validate_slim(grid(4, 2)));
  auto witness = validate_slim(m3());
  REQUIRE(witness.has_value());
  CHECK(witness->from_m3_scan);
  CHECK(witness->elems == std::array<int, 3>{1, 2, 3});
}

TEST_CASE("rectangularity validation") {
  auto g = validate_rectangular(grid(3, 3));
  REQUIRE(g.ok());
  CHECK(g.corners->left == 3);
  CHECK(g.corners->right == 5);

  auto s7 = validate_rectangular(apply_recipe({2, 2, {0}, std::nullopt}));
  REQUIRE(s7.ok());
  CHECK(s7.corners->left == 3);
  CHECK(s7.corners->right == 5);

  auto chain = validate_rectangular(Lattice::from_upper_covers({{1}, {2}, {}}));
  CHECK(!chain.ok());
  CHECK(!chain.reason.empty());
}

TEST_CASE("four cells of grids and of S7") {
  CHECK(four_cells(grid(2, 2)).size() == 1);
  CHECK(four_cells(grid(3, 3)).size() == 4);
  CHECK(four_cells(grid(4, 2)).size() == 3);

  Lattice s7 = apply_recipe({2, 2, {0}, std::nullopt});
  auto cells = four_cells(s7);
  REQUIRE(cells.size() == 3);
  CHECK(cells == std::vector<FourCell>{{0, 1, 2, 4}, {1, 3, 4, 6}, {2, 4, 5, 6}});
  // Cell sides are edges, so trajectory adjacency stays inside the edge set.
  for (const auto& c : cells) {
    CHECK(s7.is_edge(c.lower_left()));
    CHECK(s7.is_edge(c.lower_right()));
    CHECK(s7.is_edge(c.upper_left()));
    CHECK(s7.is_edge(c.upper_right()));
  }
}

TEST_CASE("boundary chains") {
  auto b22 = boundary_chains(grid(2, 2));
  CHECK(b22.left == std::vector<int>{0, 1, 3});
  CHECK(b22.right == std::vector<int>{0, 2, 3});

  auto s7 = boundary_chains(apply_recipe({2, 2, {0}, std::nullopt}));
  CHECK(s7.left == std::vector<int>{0, 1, 3, 6});
  CHECK(s7.right == std::vector<int>{0, 2, 5, 6});
  CHECK(s7.lower_left == std::vector<Edge>{{0, 1}, {1, 3}});
  CHECK(s7.upper_left == std::vector<Edge>{{3, 6}});

  // One lower-left boundary edge gets subdivided by the fork leg.
  auto forked = boundary_chains(apply_recipe({3, 3, {4}, std::nullopt}));
  CHECK(forked.left.size() == 6);
  CHECK(forked.lower_left.size() + forked.upper_left.size() == 5);

  // Chains meet only at bottom and top.
  for (size_t i = 1; i + 1 < s7.left.size(); ++i)
    CHECK(std::find(s7.right.begin(), s7.right.end(), s7.left[i]) == s7.right.end());
}

TEST_CASE("cover-degree invariants on constructed lattices") {
  for (const Recipe& r : enumerate_corpus(3, 3, 1)) {
    Lattice K = apply_recipe(r);
    auto cells = enumerate_cells(K);
    for (int e = 0; e < K.size(); ++e) {
      CHECK(K.upper_covers(e).size() <= 2);
      if (e == K.bottom()) continue;
      int with_top = 0;
      for (const auto& c : cells)
        if (c.top == e) ++with_top;
      CHECK(static_cast<int>(K.lower_covers(e).size()) == 1 + with_top);
    }
  }
}

TEST_CASE("meet and join tables satisfy the lattice identities on samples") {
  Lattice K = apply_recipe({3, 3, {4}, std::nullopt});
  for (int a = 0; a < K.size(); ++a)
    for (int b = 0; b < K.size(); ++b) {
      CHECK(K.meet(a, b) == K.meet(b, a));
      CHECK(K.join(a, b) == K.join(b, a));
      CHECK(K.meet(a, K.join(a, b)) == a);  // absorption
      CHECK(K.join(a, K.meet(a, b)) == a);
      for (int c = 0; c < K.size(); c += 3)
        CHECK(K.meet(K.meet(a, b), c) == K.meet(a, K.meet(b, c)));
    }
}
