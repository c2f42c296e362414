#pragma once

// Finite lattices carrying a planar left-to-right cover order, together with
// the validators that certify slim rectangular inputs: semimodularity,
// slimness (M3-free / join-irreducibles form two chains), rectangularity
// (corner detection), 4-cell enumeration and boundary chains.
//
// Element ids are dense integers 0..n-1.  Cover lists are ordered left to
// right as in the planar diagram; the first upper cover is the leftmost.
// A Lattice is immutable after construction and safe to share across threads.

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace slatt {

struct Edge {
  int bottom = -1;
  int top = -1;
  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

inline std::string edge_name(const Edge& e) {
  return std::to_string(e.bottom) + "-" + std::to_string(e.top);
}

// 4-cell: bottom o with consecutive upper covers left, right; top = left v right.
struct FourCell {
  int bottom = -1;
  int left = -1;
  int right = -1;
  int top = -1;
  friend constexpr auto operator<=>(const FourCell&, const FourCell&) = default;
  Edge lower_left() const { return {bottom, left}; }
  Edge lower_right() const { return {bottom, right}; }
  Edge upper_left() const { return {left, top}; }
  Edge upper_right() const { return {right, top}; }
};

class BuildError : public std::runtime_error {
 public:
  enum class Kind {
    NotALattice,
    MultipleBottoms,
    MultipleTops,
    BadCovers,
  };
  BuildError(Kind kind, std::string msg, int a = -1, int b = -1)
      : std::runtime_error(std::move(msg)), kind_(kind), a_(a), b_(b) {}
  Kind kind() const { return kind_; }
  // The offending pair, when the diagnostic names one.
  int elem_a() const { return a_; }
  int elem_b() const { return b_; }

 private:
  Kind kind_;
  int a_;
  int b_;
};

namespace detail {

// Row-major bit matrix used for order relations at desk scale.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(int rows, int cols)
      : words_((cols + 63) / 64), bits_(static_cast<size_t>(rows) * words_, 0) {}
  void set(int r, int c) { row(r)[c >> 6] |= uint64_t{1} << (c & 63); }
  bool get(int r, int c) const { return (row(r)[c >> 6] >> (c & 63)) & 1; }
  uint64_t* row(int r) { return bits_.data() + static_cast<size_t>(r) * words_; }
  const uint64_t* row(int r) const {
    return bits_.data() + static_cast<size_t>(r) * words_;
  }
  void or_row_into(int src, int dst) {
    const uint64_t* s = row(src);
    uint64_t* d = row(dst);
    for (int w = 0; w < words_; ++w) d[w] |= s[w];
  }
  int words() const { return words_; }

 private:
  int words_ = 0;
  std::vector<uint64_t> bits_;
};

}  // namespace detail

class Lattice {
 public:
  // Builds from ordered upper-cover lists; lower covers are collected in
  // element-id order (construction code that knows the planar order uses
  // from_cover_lists, JSON input is reordered from the layout afterwards).
  static Lattice from_upper_covers(std::vector<std::vector<int>> upper);

  // Builds from explicitly ordered upper and lower cover lists.
  static Lattice from_cover_lists(std::vector<std::vector<int>> upper,
                                  std::vector<std::vector<int>> lower);

  int size() const { return n_; }
  int bottom() const { return bottom_; }
  int top() const { return top_; }

  const std::vector<int>& upper_covers(int e) const { return upper_[e]; }
  const std::vector<int>& lower_covers(int e) const { return lower_[e]; }
  const std::vector<std::vector<int>>& all_upper_covers() const { return upper_; }
  const std::vector<std::vector<int>>& all_lower_covers() const { return lower_; }

  bool leq(int a, int b) const { return up_.get(a, b); }
  bool lt(int a, int b) const { return a != b && leq(a, b); }
  bool covers(int lo, int hi) const {
    const auto& ups = upper_[lo];
    return std::find(ups.begin(), ups.end(), hi) != ups.end();
  }
  bool is_edge(const Edge& e) const { return edge_index(e) >= 0; }

  int meet(int a, int b) const { return meet_[static_cast<size_t>(a) * n_ + b]; }
  int join(int a, int b) const { return join_[static_cast<size_t>(a) * n_ + b]; }

  // Length of the longest cover chain from bottom; the rank in graded inputs.
  int height(int e) const { return height_[e]; }

  // All covering pairs, sorted by (bottom, top).
  const std::vector<Edge>& edges() const { return edges_; }
  int edge_index(const Edge& e) const {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || *it != e) return -1;
    return static_cast<int>(it - edges_.begin());
  }

  // Same lattice with lower-cover lists reordered (planar order recovered
  // from a layout); lists must be permutations of the current ones.
  Lattice with_lower_order(std::vector<std::vector<int>> lower) const {
    return from_cover_lists(upper_, std::move(lower));
  }

 private:
  Lattice() = default;

  int n_ = 0;
  int bottom_ = -1;
  int top_ = -1;
  std::vector<std::vector<int>> upper_;
  std::vector<std::vector<int>> lower_;
  detail::BitMatrix up_;    // up_.get(a,b) == (a <= b)
  std::vector<int> meet_;
  std::vector<int> join_;
  std::vector<int> height_;
  std::vector<Edge> edges_;
};

inline Lattice Lattice::from_upper_covers(std::vector<std::vector<int>> upper) {
  const int n = static_cast<int>(upper.size());
  std::vector<std::vector<int>> lower(n);
  for (int u = 0; u < n; ++u) {
    for (int v : upper[u]) {
      if (v < 0 || v >= n)
        throw BuildError(BuildError::Kind::BadCovers,
                         "cover target out of range: " + std::to_string(v), u, v);
      lower[v].push_back(u);
    }
  }
  return from_cover_lists(std::move(upper), std::move(lower));
}

inline Lattice Lattice::from_cover_lists(std::vector<std::vector<int>> upper,
                                         std::vector<std::vector<int>> lower) {
  const int n = static_cast<int>(upper.size());
  if (n == 0)
    throw BuildError(BuildError::Kind::NotALattice, "empty element set");
  if (lower.size() != upper.size())
    throw BuildError(BuildError::Kind::BadCovers, "cover list sizes disagree");

  // Cross-consistency of the two cover lists.
  for (int u = 0; u < n; ++u) {
    for (int v : upper[u]) {
      if (v < 0 || v >= n || v == u)
        throw BuildError(BuildError::Kind::BadCovers,
                         "bad cover " + std::to_string(u) + "->" + std::to_string(v),
                         u, v);
      if (std::count(upper[u].begin(), upper[u].end(), v) != 1 ||
          std::count(lower[v].begin(), lower[v].end(), u) != 1)
        throw BuildError(BuildError::Kind::BadCovers,
                         "cover lists inconsistent at " + edge_name({u, v}), u, v);
    }
    for (int v : lower[u]) {
      if (v < 0 || v >= n ||
          std::count(upper[v].begin(), upper[v].end(), u) != 1)
        throw BuildError(BuildError::Kind::BadCovers,
                         "cover lists inconsistent at " + edge_name({v, u}), v, u);
    }
  }

  Lattice L;
  L.n_ = n;
  L.upper_ = std::move(upper);
  L.lower_ = std::move(lower);

  // Topological order; rejects cycles.
  std::vector<int> indeg(n), topo;
  topo.reserve(n);
  for (int e = 0; e < n; ++e) indeg[e] = static_cast<int>(L.lower_[e].size());
  std::queue<int> q;
  for (int e = 0; e < n; ++e)
    if (indeg[e] == 0) q.push(e);
  while (!q.empty()) {
    int e = q.front();
    q.pop();
    topo.push_back(e);
    for (int v : L.upper_[e])
      if (--indeg[v] == 0) q.push(v);
  }
  if (static_cast<int>(topo.size()) != n)
    throw BuildError(BuildError::Kind::NotALattice, "cover relation has a cycle");

  int bottoms = 0, tops = 0;
  for (int e = 0; e < n; ++e) {
    if (L.lower_[e].empty()) {
      ++bottoms;
      L.bottom_ = e;
    }
    if (L.upper_[e].empty()) {
      ++tops;
      L.top_ = e;
    }
  }
  if (bottoms != 1)
    throw BuildError(BuildError::Kind::MultipleBottoms,
                     std::to_string(bottoms) + " minimal elements");
  if (tops != 1)
    throw BuildError(BuildError::Kind::MultipleTops,
                     std::to_string(tops) + " maximal elements");

  // Reflexive-transitive closure, scanning in reverse topological order.
  L.up_ = detail::BitMatrix(n, n);
  detail::BitMatrix down(n, n);
  for (int i = n - 1; i >= 0; --i) {
    int e = topo[i];
    L.up_.set(e, e);
    for (int v : L.upper_[e]) L.up_.or_row_into(v, e);
  }
  for (int e : topo) {
    down.set(e, e);
    for (int v : L.lower_[e]) down.or_row_into(v, e);
  }

  // Listed covers must actually be covers: the closed interval [u,v] of a
  // covering pair contains exactly u and v.
  const int words = L.up_.words();
  for (int u = 0; u < n; ++u) {
    for (int v : L.upper_[u]) {
      int count = 0;
      for (int w = 0; w < words; ++w)
        count += std::popcount(L.up_.row(u)[w] & down.row(v)[w]);
      if (count != 2)
        throw BuildError(BuildError::Kind::BadCovers,
                         "listed cover " + edge_name({u, v}) + " is not a covering pair",
                         u, v);
    }
  }

  // Positions in topological order, to pick greatest/least bounds directly.
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[topo[i]] = i;

  L.meet_.assign(static_cast<size_t>(n) * n, -1);
  L.join_.assign(static_cast<size_t>(n) * n, -1);
  std::vector<uint64_t> common(words);
  auto scan = [&](const detail::BitMatrix& dir, int a, int b, bool greatest) {
    for (int w = 0; w < words; ++w) common[w] = dir.row(a)[w] & dir.row(b)[w];
    int best = -1;
    for (int w = 0; w < words; ++w) {
      uint64_t bits = common[w];
      while (bits) {
        int c = (w << 6) + std::countr_zero(bits);
        bits &= bits - 1;
        if (best < 0 || (greatest ? pos[c] > pos[best] : pos[c] < pos[best]))
          best = c;
      }
    }
    if (best < 0) return -1;
    // The extremal candidate must bound every other candidate, otherwise the
    // pair has no unique meet/join.
    const uint64_t* dominated = greatest ? down.row(best) : L.up_.row(best);
    for (int w = 0; w < words; ++w)
      if ((common[w] & ~dominated[w]) != 0) return -1;
    return best;
  };
  for (int a = 0; a < n; ++a) {
    for (int b = a; b < n; ++b) {
      int m = scan(down, a, b, /*greatest=*/true);
      if (m < 0)
        throw BuildError(BuildError::Kind::NotALattice,
                         "elements " + std::to_string(a) + " and " +
                             std::to_string(b) + " have no unique meet",
                         a, b);
      int j = scan(L.up_, a, b, /*greatest=*/false);
      if (j < 0)
        throw BuildError(BuildError::Kind::NotALattice,
                         "elements " + std::to_string(a) + " and " +
                             std::to_string(b) + " have no unique join",
                         a, b);
      L.meet_[static_cast<size_t>(a) * n + b] = m;
      L.meet_[static_cast<size_t>(b) * n + a] = m;
      L.join_[static_cast<size_t>(a) * n + b] = j;
      L.join_[static_cast<size_t>(b) * n + a] = j;
    }
  }

  L.height_.assign(n, 0);
  for (int e : topo)
    for (int v : L.upper_[e]) L.height_[v] = std::max(L.height_[v], L.height_[e] + 1);

  for (int u = 0; u < n; ++u)
    for (int v : L.upper_[u]) L.edges_.push_back({u, v});
  std::sort(L.edges_.begin(), L.edges_.end());

  return L;
}

// Renumbers breadth-first from the bottom, enqueueing upper covers left to
// right.  Canonical form: replaying a construction always yields identical
// element ids.  Positional order of cover lists is preserved.
inline Lattice canonical_renumber(const Lattice& L) {
  const int n = L.size();
  std::vector<int> newid(n, -1);
  std::queue<int> q;
  q.push(L.bottom());
  newid[L.bottom()] = 0;
  int next = 1;
  while (!q.empty()) {
    int e = q.front();
    q.pop();
    for (int v : L.upper_covers(e)) {
      if (newid[v] < 0) {
        newid[v] = next++;
        q.push(v);
      }
    }
  }
  std::vector<std::vector<int>> upper(n), lower(n);
  for (int e = 0; e < n; ++e) {
    auto& u = upper[newid[e]];
    for (int v : L.upper_covers(e)) u.push_back(newid[v]);
    auto& l = lower[newid[e]];
    for (int v : L.lower_covers(e)) l.push_back(newid[v]);
  }
  return Lattice::from_cover_lists(std::move(upper), std::move(lower));
}

// ok -> nullopt; otherwise a pair (a,b) with meet(a,b) covered by a but
// a v b not covering b.
inline std::optional<std::pair<int, int>> validate_semimodular(const Lattice& K) {
  const int n = K.size();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (a == b) continue;
      if (K.covers(K.meet(a, b), a) && !K.covers(b, K.join(a, b)))
        return std::make_pair(a, b);
    }
  return std::nullopt;
}

struct SlimWitness {
  std::array<int, 3> elems{-1, -1, -1};
  bool from_m3_scan = false;
};

// Brute-force search is capped; larger inputs fall back to the chain criterion.
inline constexpr int kM3ScanCap = 64;

// Slim means no M3 sublattice; equivalently the join-irreducible elements form
// a union of two chains.  Both routes run (below the scan cap) and must agree.
inline std::optional<SlimWitness> validate_slim(const Lattice& K) {
  const int n = K.size();

  std::optional<SlimWitness> m3;
  bool scanned = false;
  if (n <= kM3ScanCap) {
    scanned = true;
    for (int x = 0; x < n && !m3; ++x)
      for (int y = x + 1; y < n && !m3; ++y) {
        if (K.leq(x, y) || K.leq(y, x)) continue;
        const int o = K.meet(x, y), i = K.join(x, y);
        for (int z = y + 1; z < n && !m3; ++z) {
          if (K.leq(x, z) || K.leq(z, x) || K.leq(y, z) || K.leq(z, y)) continue;
          if (K.meet(x, z) == o && K.meet(y, z) == o && K.join(x, z) == i &&
              K.join(y, z) == i)
            m3 = SlimWitness{{x, y, z}, true};
        }
      }
  }

  // Width of the join-irreducible suborder: a 3-antichain violates "two chains".
  std::vector<int> ji;
  for (int e = 0; e < n; ++e)
    if (K.lower_covers(e).size() == 1) ji.push_back(e);
  std::optional<SlimWitness> anti;
  const int k = static_cast<int>(ji.size());
  for (int x = 0; x < k && !anti; ++x)
    for (int y = x + 1; y < k && !anti; ++y) {
      if (K.leq(ji[x], ji[y]) || K.leq(ji[y], ji[x])) continue;
      for (int z = y + 1; z < k && !anti; ++z) {
        if (K.leq(ji[x], ji[z]) || K.leq(ji[z], ji[x]) || K.leq(ji[y], ji[z]) ||
            K.leq(ji[z], ji[y]))
          continue;
        anti = SlimWitness{{ji[x], ji[y], ji[z]}, false};
      }
    }

  if (scanned && m3.has_value() != anti.has_value())
    throw std::logic_error("slim validators disagree (M3 scan vs two-chain criterion)");
  if (m3) return m3;
  return anti;
}

struct RectCorners {
  int left = -1;
  int right = -1;
};

struct RectangularResult {
  std::optional<RectCorners> corners;
  std::string reason;  // set when not rectangular
  bool ok() const { return corners.has_value(); }
};

// Leftmost maximal chain: always follow the first upper cover.
inline std::vector<int> left_boundary_chain(const Lattice& K) {
  std::vector<int> chain{K.bottom()};
  while (chain.back() != K.top()) chain.push_back(K.upper_covers(chain.back()).front());
  return chain;
}

inline std::vector<int> right_boundary_chain(const Lattice& K) {
  std::vector<int> chain{K.bottom()};
  while (chain.back() != K.top()) chain.push_back(K.upper_covers(chain.back()).back());
  return chain;
}

// A rectangular lattice has exactly one doubly irreducible element on each
// boundary chain, and the two corners are complementary.
inline RectangularResult validate_rectangular(const Lattice& K) {
  auto doubly_irreducible = [&](const std::vector<int>& chain) {
    std::vector<int> found;
    for (int e : chain)
      if (K.upper_covers(e).size() == 1 && K.lower_covers(e).size() == 1)
        found.push_back(e);
    return found;
  };
  const auto left = doubly_irreducible(left_boundary_chain(K));
  const auto right = doubly_irreducible(right_boundary_chain(K));
  if (left.size() != 1 || right.size() != 1)
    return {std::nullopt, "expected one doubly irreducible element per boundary chain, got " +
                              std::to_string(left.size()) + " left / " +
                              std::to_string(right.size()) + " right"};
  RectCorners c{left[0], right[0]};
  if (c.left == c.right)
    return {std::nullopt, "boundary chains share their doubly irreducible element"};
  if (K.meet(c.left, c.right) != K.bottom() || K.join(c.left, c.right) != K.top())
    return {std::nullopt, "corners " + std::to_string(c.left) + ", " +
                              std::to_string(c.right) + " are not complementary"};
  return {c, ""};
}

struct BoundaryChains {
  std::vector<int> left;   // bottom .. top inclusive
  std::vector<int> right;  // bottom .. top inclusive
  RectCorners corners;
  std::vector<Edge> lower_left, upper_left, lower_right, upper_right;

  std::vector<Edge> upper() const {
    std::vector<Edge> all(upper_left);
    all.insert(all.end(), upper_right.begin(), upper_right.end());
    return all;
  }
};

inline BoundaryChains boundary_chains(const Lattice& K) {
  auto rect = validate_rectangular(K);
  if (!rect.ok())
    throw std::runtime_error("boundary chains need a rectangular lattice: " + rect.reason);
  BoundaryChains bc;
  bc.left = left_boundary_chain(K);
  bc.right = right_boundary_chain(K);
  bc.corners = *rect.corners;
  auto split = [](const std::vector<int>& chain, int corner, std::vector<Edge>& lo,
                  std::vector<Edge>& hi) {
    bool above = false;
    for (size_t i = 0; i + 1 < chain.size(); ++i) {
      (above ? hi : lo).push_back({chain[i], chain[i + 1]});
      if (chain[i + 1] == corner) above = true;
    }
  };
  split(bc.left, bc.corners.left, bc.lower_left, bc.upper_left);
  split(bc.right, bc.corners.right, bc.lower_right, bc.upper_right);
  return bc;
}

class CellError : public std::runtime_error {
 public:
  CellError(std::string msg, Edge e) : std::runtime_error(std::move(msg)), edge_(e) {}
  Edge edge() const { return edge_; }

 private:
  Edge edge_;
};

// All 4-cells, one per consecutive upper-cover pair whose join covers both.
// No region validation; see four_cells.
inline std::vector<FourCell> enumerate_cells(const Lattice& K) {
  std::vector<FourCell> cells;
  for (int o = 0; o < K.size(); ++o) {
    const auto& ups = K.upper_covers(o);
    for (size_t i = 0; i + 1 < ups.size(); ++i) {
      const int a = ups[i], b = ups[i + 1];
      const int t = K.join(a, b);
      if (K.covers(a, t) && K.covers(b, t)) cells.push_back({o, a, b, t});
    }
  }
  return cells;
}

// Cells of a slim rectangular lattice; verifies that the cells tile the
// region: boundary edges lie on exactly one cell, interior edges on two.
inline std::vector<FourCell> four_cells(const Lattice& K) {
  auto cells = enumerate_cells(K);
  const auto bc = boundary_chains(K);
  std::vector<int> count(K.edges().size(), 0);
  for (const auto& c : cells)
    for (const Edge& e : {c.lower_left(), c.lower_right(), c.upper_left(), c.upper_right()}) {
      const int idx = K.edge_index(e);
      if (idx < 0) throw CellError("cell side is not an edge: " + edge_name(e), e);
      ++count[idx];
    }
  std::vector<char> on_boundary(K.edges().size(), 0);
  for (const auto& seg : {bc.lower_left, bc.upper_left, bc.lower_right, bc.upper_right})
    for (const Edge& e : seg) on_boundary[K.edge_index(e)] = 1;
  for (size_t i = 0; i < K.edges().size(); ++i) {
    const int expected = on_boundary[i] ? 1 : 2;
    if (count[i] != expected)
      throw CellError("region around edge " + edge_name(K.edges()[i]) +
                          " is not a 4-cell (side count " + std::to_string(count[i]) +
                          ", expected " + std::to_string(expected) + ")",
                      K.edges()[i]);
  }
  return cells;
}

}  // namespace slatt
