#include <catch_amalgamated.hpp>

#include "slatt/construct.hpp"

using namespace slatt;

TEST_CASE("grids come out canonically numbered") {
  Lattice g = grid(2, 2);
  CHECK(g.all_upper_covers() ==
        std::vector<std::vector<int>>{{1, 2}, {3}, {3}, {}});
  CHECK(g.lower_covers(3) == std::vector<int>{1, 2});

  Lattice g33 = grid(3, 3);
  CHECK(g33.size() == 9);
  CHECK(g33.all_upper_covers() ==
        std::vector<std::vector<int>>{{1, 2}, {3, 4}, {4, 5}, {6}, {6, 7}, {7}, {8}, {8}, {}});
  CHECK(g33.lower_covers(8) == std::vector<int>{6, 7});

  CHECK(grid(4, 2).size() == 8);
  CHECK_THROWS_AS(grid(1, 3), ConstructError);
}

TEST_CASE("a fork into the square gives S7") {
  Lattice g = grid(2, 2);
  auto cell = cell_with_bottom(g, 0);
  REQUIRE(cell.has_value());
  Lattice s7 = insert_fork(g, *cell);
  REQUIRE(s7.size() == 7);
  CHECK(s7.all_upper_covers() ==
        std::vector<std::vector<int>>{{1, 2}, {3, 4}, {4, 5}, {6}, {6}, {6}, {}});
  CHECK(s7.all_lower_covers() ==
        std::vector<std::vector<int>>{{}, {0}, {0}, {1}, {1, 2}, {2}, {3, 4, 5}});
  CHECK(!validate_semimodular(s7));
  CHECK(!validate_slim(s7));
  CHECK(validate_rectangular(s7).ok());
}

TEST_CASE("fork legs subdivide the staircase below the cell") {
  // Fork at the top cell of the 3x3 grid: legs of length two on both sides.
  Lattice K = apply_recipe({3, 3, {4}, std::nullopt});
  REQUIRE(K.size() == 14);
  CHECK(K.all_upper_covers() ==
        std::vector<std::vector<int>>{{1, 2},
                                      {3, 4},
                                      {4, 5},
                                      {6, 7},
                                      {7, 8},
                                      {8, 9},
                                      {10},
                                      {10, 11},
                                      {11, 12},
                                      {12},
                                      {13},
                                      {13},
                                      {13},
                                      {}});
  CHECK(K.lower_covers(13) == std::vector<int>{10, 11, 12});
  CHECK(K.lower_covers(7) == std::vector<int>{3, 4});
  // Element-count delta: one middle plus two legs of two.
  CHECK(K.size() - grid(3, 3).size() == 5);
}

TEST_CASE("forking an invalid cell reference fails") {
  CHECK(!cell_with_bottom(grid(2, 2), 99).has_value());
  try {
    apply_recipe({2, 2, {99}, std::nullopt});
    FAIL("expected ConstructError");
  } catch (const ConstructError& e) {
    CHECK(e.kind() == ConstructError::Kind::DanglingCellRef);
    CHECK(e.step() == 0);
  }
}

TEST_CASE("repeated forks keep all validators green") {
  // Validators run after every step.
  Lattice K = apply_recipe({2, 2, {0, 0}, std::nullopt}, {.validate_steps = true});
  CHECK(K.size() == 10);
  Lattice K2 = apply_recipe({2, 2, {0, 1}, std::nullopt}, {.validate_steps = true});
  CHECK(validate_rectangular(K2).ok());
}

TEST_CASE("recipes replay deterministically") {
  Recipe r{3, 3, {4, 1}, std::nullopt};
  Lattice a = apply_recipe(r), b = apply_recipe(r);
  CHECK(a.all_upper_covers() == b.all_upper_covers());
  CHECK(a.all_lower_covers() == b.all_lower_covers());
  CHECK(apply_recipe({3, 3, {}, std::nullopt}).all_upper_covers() ==
        grid(3, 3).all_upper_covers());
}

TEST_CASE("corpus enumeration counts") {
  CHECK(enumerate_corpus(2, 2, 0).size() == 1);
  CHECK(enumerate_corpus(2, 2, 1).size() == 2);

  // The 3x3 grid alone contributes 1 + 4 single-fork recipes.
  int for_3x3 = 0;
  for (const Recipe& r : enumerate_corpus(3, 3, 1))
    if (r.grid_m == 3 && r.grid_n == 3) ++for_3x3;
  CHECK(for_3x3 == 5);

  // Deterministic order.
  auto a = enumerate_corpus(3, 3, 2), b = enumerate_corpus(3, 3, 2);
  CHECK(a == b);
}

TEST_CASE("random recipes are reproducible per seed") {
  Recipe a = random_recipe(1, 6, 6, 4), b = random_recipe(1, 6, 6, 4);
  CHECK(a == b);
  Lattice la = apply_recipe(a), lb = apply_recipe(b);
  CHECK(la.all_upper_covers() == lb.all_upper_covers());
  CHECK(random_forks(4, 4, 2, 7) == random_forks(4, 4, 2, 7));
}
