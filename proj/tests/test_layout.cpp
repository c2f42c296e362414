#include <catch_amalgamated.hpp>

#include "slatt/construct.hpp"
#include "slatt/layout.hpp"

using namespace slatt;

namespace {

Lattice s7() { return apply_recipe({2, 2, {0}, std::nullopt}); }

}  // namespace

TEST_CASE("S7 coordinates from the corner projections") {
  Layout lay = coordinates(s7());
  CHECK(lay.x == std::vector<long long>{0, -1, 1, -2, 0, 2, 0});
  CHECK(lay.y == std::vector<long long>{0, 1, 1, 2, 2, 2, 4});
}

TEST_CASE("grid coordinates form the standard diamond") {
  Layout lay = coordinates(grid(3, 3));
  CHECK(lay.x == std::vector<long long>{0, -1, 1, -2, 0, 2, -1, 1, 0});
  CHECK(lay.y == std::vector<long long>{0, 1, 1, 2, 2, 2, 3, 3, 4});
}

TEST_CASE("the C1 validator accepts the computed layouts") {
  for (const Recipe& r : enumerate_corpus(3, 3, 2)) {
    Lattice K = apply_recipe(r);
    CHECK(!validate_c1(K, coordinates(K), peak_s7_find(K)).has_value());
  }
}

TEST_CASE("only the fork middle edge is steep in the drawing") {
  Lattice K = apply_recipe({3, 3, {4}, std::nullopt});
  Layout lay = coordinates(K);
  int steep = 0;
  for (const Edge& e : K.edges()) {
    const long long dx = lay.x[e.top] - lay.x[e.bottom];
    const long long dy = lay.y[e.top] - lay.y[e.bottom];
    REQUIRE(dy > 0);
    if (std::abs(dx) < dy) {
      ++steep;
      CHECK(e == Edge{11, 13});
    } else {
      CHECK(std::abs(dx) == dy);
    }
  }
  CHECK(steep == 1);
}

TEST_CASE("perturbed layouts are rejected with an offending edge") {
  Lattice K = s7();
  auto peaks = peak_s7_find(K);

  SECTION("a fake steep edge") {
    Layout lay = coordinates(K);
    lay.x[1] = 0;  // edge 0-1 becomes vertical without being a peak middle
    auto violation = validate_c1(K, lay, peaks);
    REQUIRE(violation.has_value());
  }
  SECTION("two elements on one spot") {
    Layout lay = coordinates(K);
    lay.x[4] = lay.x[3];
    lay.y[4] = lay.y[3];
    REQUIRE(validate_c1(K, lay, peaks).has_value());
  }
  SECTION("a cover drawn downward") {
    Layout lay = coordinates(K);
    lay.y[6] = 0;
    REQUIRE(validate_c1(K, lay, peaks).has_value());
  }
  SECTION("crossing edges") {
    // Swap the two atoms' positions: covers still go up but edges cross.
    Layout lay = coordinates(K);
    std::swap(lay.x[1], lay.x[2]);
    REQUIRE(validate_c1(K, lay, peaks).has_value());
  }
}

TEST_CASE("cover lists run left to right in the drawing") {
  for (const Recipe& r : enumerate_corpus(3, 3, 1)) {
    Lattice K = apply_recipe(r);
    Layout lay = coordinates(K);
    for (int v = 0; v < K.size(); ++v) {
      const auto& lows = K.lower_covers(v);
      for (size_t i = 0; i + 1 < lows.size(); ++i)
        CHECK(lay.x[lows[i]] < lay.x[lows[i + 1]]);
      const auto& ups = K.upper_covers(v);
      for (size_t i = 0; i + 1 < ups.size(); ++i)
        CHECK(lay.x[ups[i]] < lay.x[ups[i + 1]]);
    }
  }
}

TEST_CASE("planar lower-cover order is recovered from raw upper covers") {
  // S7 with the two atoms' ids swapped, so that id order disagrees with the
  // planar order below the middle element.
  Lattice raw = Lattice::from_upper_covers({{2, 1}, {4, 5}, {3, 4}, {6}, {6}, {6}, {}});
  CHECK(raw.lower_covers(4) == std::vector<int>{1, 2});  // id order, wrong
  Lattice fixed = with_planar_lower_order(raw);
  CHECK(fixed.lower_covers(4) == std::vector<int>{2, 1});
  CHECK(fixed.lower_covers(6) == std::vector<int>{3, 4, 5});
  CHECK(!validate_c1(fixed, coordinates(fixed), peak_s7_find(fixed)).has_value());
}
