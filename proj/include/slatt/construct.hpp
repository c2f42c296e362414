#pragma once

// Construction of slim rectangular lattices: grids (direct products of two
// chains) and fork insertions into 4-cells.  A Recipe records grid dimensions
// plus the ordered fork list and replays deterministically: the lattice is
// canonically renumbered after every step, so a cell is referenced by the id
// of its bottom element in the current numbering.

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "slatt/lattice.hpp"

namespace slatt {

struct Recipe {
  int grid_m = 2;
  int grid_n = 2;
  std::vector<int> forks;        // bottom ids of the forked cells, in order
  std::optional<uint64_t> seed;  // informational, for generated recipes
  friend bool operator==(const Recipe&, const Recipe&) = default;
};

inline std::string recipe_name(const Recipe& r) {
  std::string s = "grid" + std::to_string(r.grid_m) + "x" + std::to_string(r.grid_n);
  for (int f : r.forks) s += "+f" + std::to_string(f);
  if (r.seed) s += "@s" + std::to_string(*r.seed);
  return s;
}

class ConstructError : public std::runtime_error {
 public:
  enum class Kind { BadDims, NotACell, DanglingCellRef };
  ConstructError(Kind kind, std::string msg, int step = -1)
      : std::runtime_error(std::move(msg)), kind_(kind), step_(step) {}
  Kind kind() const { return kind_; }
  int step() const { return step_; }

 private:
  Kind kind_;
  int step_;
};

// Direct product of an m-chain and an n-chain, canonically numbered.
// Element (i,j) covers (i+1,j) to the left and (i,j+1) to the right.
inline Lattice grid(int m, int n) {
  if (m < 2 || n < 2)
    throw ConstructError(ConstructError::Kind::BadDims,
                         "grid dimensions must be at least 2x2, got " +
                             std::to_string(m) + "x" + std::to_string(n));
  auto id = [n](int i, int j) { return i * n + j; };
  std::vector<std::vector<int>> upper(static_cast<size_t>(m) * n);
  std::vector<std::vector<int>> lower(static_cast<size_t>(m) * n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) {
      if (i + 1 < m) upper[id(i, j)].push_back(id(i + 1, j));
      if (j + 1 < n) upper[id(i, j)].push_back(id(i, j + 1));
      if (j > 0) lower[id(i, j)].push_back(id(i, j - 1));
      if (i > 0) lower[id(i, j)].push_back(id(i - 1, j));
    }
  return canonical_renumber(
      Lattice::from_cover_lists(std::move(upper), std::move(lower)));
}

namespace detail {

// Mutable cover lists during a fork insertion.
struct CoverLists {
  std::vector<std::vector<int>> upper, lower;

  static CoverLists of(const Lattice& K) {
    return {K.all_upper_covers(), K.all_lower_covers()};
  }
  int add_element() {
    upper.emplace_back();
    lower.emplace_back();
    return static_cast<int>(upper.size()) - 1;
  }
  static void replace(std::vector<int>& list, int from, int to) {
    for (int& x : list)
      if (x == from) {
        x = to;
        return;
      }
    throw std::logic_error("cover list entry to replace not found");
  }
  // Splits edge (u,v) with the fresh element x: u < x < v in place of u < v.
  void subdivide(Edge e, int x) {
    replace(upper[e.bottom], e.top, x);
    replace(lower[e.top], e.bottom, x);
    upper[x] = {e.top};
    lower[x] = {e.bottom};
  }
};

// The staircase of edges a fork leg subdivides: starting from a lower edge of
// the forked cell, keep crossing to the cell on the far side while one exists.
// left = true walks lower-left edges, mirrored otherwise.
inline std::vector<Edge> leg_staircase(const std::vector<FourCell>& cells, Edge first,
                                       bool left) {
  std::vector<Edge> stairs{first};
  for (;;) {
    const Edge e = stairs.back();
    const FourCell* far = nullptr;
    for (const auto& d : cells) {
      const Edge shared = left ? d.upper_right() : d.upper_left();
      if (shared == e) {
        far = &d;
        break;
      }
    }
    if (!far) break;
    stairs.push_back(left ? far->lower_left() : far->lower_right());
  }
  return stairs;
}

}  // namespace detail

// Inserts a fork into 4-cell C of K: a new middle element under C's top plus
// two legs of new elements subdividing the staircase of lower-left
// (resp. lower-right) edges below C.  The region of C becomes a peak S7.
inline Lattice insert_fork(const Lattice& K, const FourCell& C) {
  const auto cells = enumerate_cells(K);
  if (std::find(cells.begin(), cells.end(), C) == cells.end())
    throw ConstructError(ConstructError::Kind::NotACell,
                         "not a 4-cell: bottom " + std::to_string(C.bottom));

  const auto left_stairs = detail::leg_staircase(cells, C.lower_left(), true);
  const auto right_stairs = detail::leg_staircase(cells, C.lower_right(), false);

  auto lists = detail::CoverLists::of(K);
  const int mid = lists.add_element();
  lists.upper[mid] = {C.top};
  // The middle element sits between the cell's left and right elements in the
  // top's lower-cover order.
  {
    auto& tl = lists.lower[C.top];
    auto it = std::find(tl.begin(), tl.end(), C.left);
    if (it == tl.end()) throw std::logic_error("cell left missing from top lower covers");
    tl.insert(it + 1, mid);
  }

  int prev = mid;
  for (const Edge& e : left_stairs) {
    const int x = lists.add_element();
    lists.subdivide(e, x);
    // Leg parent attaches up-right of x; the next leg element will attach
    // down-left, keeping the left-to-right order of the lists.
    lists.upper[x].push_back(prev);
    if (prev == mid)
      lists.lower[prev].push_back(x);
    else
      lists.lower[prev].insert(lists.lower[prev].begin(), x);
    prev = x;
  }
  prev = mid;
  for (const Edge& e : right_stairs) {
    const int y = lists.add_element();
    lists.subdivide(e, y);
    lists.upper[y].insert(lists.upper[y].begin(), prev);
    lists.lower[prev].push_back(y);
    prev = y;
  }

  return canonical_renumber(
      Lattice::from_cover_lists(std::move(lists.upper), std::move(lists.lower)));
}

// Each element has at most two upper covers, so a bottom id identifies at
// most one 4-cell.
inline std::optional<FourCell> cell_with_bottom(const Lattice& K, int bottom) {
  for (const auto& c : enumerate_cells(K))
    if (c.bottom == bottom) return c;
  return std::nullopt;
}

struct ApplyOptions {
  // Re-runs the validator suite and fork postconditions after every step;
  // used by corpus sweeps.
  bool validate_steps = false;
};

inline Lattice apply_recipe(const Recipe& r, const ApplyOptions& opts = {});

namespace detail {

inline void validate_step(const Lattice& L, const char* what) {
  if (validate_semimodular(L))
    throw std::logic_error(std::string(what) + ": not semimodular");
  if (validate_slim(L)) throw std::logic_error(std::string(what) + ": not slim");
  if (!validate_rectangular(L).ok())
    throw std::logic_error(std::string(what) + ": not rectangular");
  four_cells(L);  // throws on a non-4-cell region
}

}  // namespace detail

inline Lattice apply_recipe(const Recipe& r, const ApplyOptions& opts) {
  Lattice L = grid(r.grid_m, r.grid_n);
  if (opts.validate_steps) detail::validate_step(L, "grid");
  for (size_t step = 0; step < r.forks.size(); ++step) {
    auto cell = cell_with_bottom(L, r.forks[step]);
    if (!cell)
      throw ConstructError(ConstructError::Kind::DanglingCellRef,
                           "fork step " + std::to_string(step) + ": no 4-cell with bottom " +
                               std::to_string(r.forks[step]),
                           static_cast<int>(step));
    const int before = L.size();
    L = insert_fork(L, *cell);
    if (opts.validate_steps) {
      detail::validate_step(L, "fork");
      if (L.size() <= before + 2)
        throw std::logic_error("fork added too few elements");
    }
  }
  return L;
}

// All grids 2..max_m x 2..max_n with every fork sequence of length at most
// max_forks, in deterministic depth-first order.
inline std::vector<Recipe> enumerate_corpus(int max_m = 4, int max_n = 4,
                                            int max_forks = 2) {
  std::vector<Recipe> out;
  for (int m = 2; m <= max_m; ++m)
    for (int n = 2; n <= max_n; ++n) {
      struct Frame {
        Recipe recipe;
        Lattice lattice;
      };
      std::vector<Frame> stack;
      stack.push_back({Recipe{m, n, {}, std::nullopt}, grid(m, n)});
      while (!stack.empty()) {
        Frame f = std::move(stack.back());
        stack.pop_back();
        out.push_back(f.recipe);
        if (static_cast<int>(f.recipe.forks.size()) < max_forks) {
          auto cells = enumerate_cells(f.lattice);
          // Reverse push so the leftmost cell is explored first.
          for (auto it = cells.rbegin(); it != cells.rend(); ++it) {
            Recipe r = f.recipe;
            r.forks.push_back(it->bottom);
            stack.push_back({std::move(r), insert_fork(f.lattice, *it)});
          }
        }
      }
    }
  return out;
}

namespace detail {

// mt19937 with explicit modulo keeps draws identical across platforms.
inline int bounded(std::mt19937& rng, int n) {
  return static_cast<int>(rng() % static_cast<uint32_t>(n));
}

}  // namespace detail

// Seeded random recipe: uniform grid dimensions, fork count, and a uniform
// cell choice at each step.
inline Recipe random_recipe(uint64_t seed, int max_m = 6, int max_n = 6,
                            int max_forks = 4) {
  std::mt19937 rng(static_cast<uint32_t>(seed));
  Recipe r;
  r.seed = seed;
  r.grid_m = 2 + detail::bounded(rng, max_m - 1);
  r.grid_n = 2 + detail::bounded(rng, max_n - 1);
  const int forks = detail::bounded(rng, max_forks + 1);
  Lattice L = grid(r.grid_m, r.grid_n);
  for (int i = 0; i < forks; ++i) {
    auto cells = enumerate_cells(L);
    const auto& cell = cells[detail::bounded(rng, static_cast<int>(cells.size()))];
    r.forks.push_back(cell.bottom);
    L = insert_fork(L, cell);
  }
  return r;
}

// Random forks into a fixed grid, for `gen --forks auto:K`.
inline Recipe random_forks(int m, int n, int count, uint64_t seed) {
  std::mt19937 rng(static_cast<uint32_t>(seed));
  Recipe r;
  r.grid_m = m;
  r.grid_n = n;
  r.seed = seed;
  Lattice L = grid(m, n);
  for (int i = 0; i < count; ++i) {
    auto cells = enumerate_cells(L);
    const auto& cell = cells[detail::bounded(rng, static_cast<int>(cells.size()))];
    r.forks.push_back(cell.bottom);
    L = insert_fork(L, cell);
  }
  return r;
}

}  // namespace slatt
