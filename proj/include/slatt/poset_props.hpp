#pragma once

// The four congruence-order properties as checkers over an abstract finite
// poset (they never consult the lattice, so testing them against lattice
// machinery is not circular), the four-crown two-pendant embedding search,
// peak S7 detection, and the named lemma sweeps.

#include <array>
#include <optional>
#include <stdexcept>
#include <vector>

#include "slatt/congruence.hpp"
#include "slatt/lattice.hpp"
#include "slatt/swing.hpp"

namespace slatt {

struct PartitionResult {
  bool ok = false;
  // Valid bipartition of Max(P) when ok: no two elements of a class share a
  // lower cover.  Lexicographically least over assignment strings.
  std::vector<int> class0, class1;
};

// Max(P) splits into two nonempty classes such that no two distinct elements
// of a class have a common lower cover.  Equivalent to the common-lower-cover
// graph on Max(P) being bipartite with at least two vertices.
inline PartitionResult partition_property(const FinitePoset& P) {
  const auto& max = P.maximal();
  const int k = static_cast<int>(max.size());
  if (k < 2) return {};

  std::vector<std::vector<int>> adj(k);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      bool common = false;
      for (int z = 0; z < P.size() && !common; ++z)
        if (P.covers(z, max[i]) && P.covers(z, max[j])) common = true;
      if (common) {
        adj[i].push_back(j);
        adj[j].push_back(i);
      }
    }

  // 2-color each component, rooting the component's smallest vertex at 0;
  // that choice is the lex-least orientation.
  std::vector<int> color(k, -1);
  for (int root = 0; root < k; ++root) {
    if (color[root] >= 0) continue;
    color[root] = 0;
    std::vector<int> stack{root};
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int w : adj[v]) {
        if (color[w] < 0) {
          color[w] = 1 - color[v];
          stack.push_back(w);
        } else if (color[w] == color[v]) {
          return {};  // odd cycle
        }
      }
    }
  }
  // Both classes must be nonempty; with no edges at all everything is 0, and
  // flipping the last (isolated) vertex stays lex-least.
  if (std::count(color.begin(), color.end(), 1) == 0) color[k - 1] = 1;

  PartitionResult res;
  res.ok = true;
  for (int i = 0; i < k; ++i) (color[i] == 0 ? res.class0 : res.class1).push_back(max[i]);
  return res;
}

struct MaximalCoverResult {
  bool ok = true;
  int witness_v = -1;  // covered by a maximal element but by nothing else
};

inline MaximalCoverResult maximal_cover_property(const FinitePoset& P) {
  for (int v = 0; v < P.size(); ++v) {
    const auto& ups = P.upper_covers(v);
    if (ups.size() == 1 && P.is_maximal(ups.front())) return {false, v};
  }
  return {};
}

struct NoChildResult {
  bool ok = true;
  std::array<int, 4> witness{-1, -1, -1, -1};  // x, y, z, u
};

inline NoChildResult no_child_property(const FinitePoset& P) {
  for (int u : P.maximal()) {
    const auto& xs = P.lower_covers(u);
    for (size_t i = 0; i < xs.size(); ++i)
      for (size_t j = i + 1; j < xs.size(); ++j)
        for (int z = 0; z < P.size(); ++z)
          if (P.covers(z, xs[i]) && P.covers(z, xs[j]))
            return {false, {xs[i], xs[j], z, u}};
  }
  return {};
}

// The four-crown two-pendant ordered set: maximal a,b,c,d over a crown of
// p,q,r,s, with pendants u under p,r and v under q,s.
inline const FinitePoset& crown_poset_r() {
  static const FinitePoset R = FinitePoset::from_covers(
      10, {{4, 0}, {4, 1},   // p < a, b
           {5, 1}, {5, 2},   // q < b, c
           {6, 2}, {6, 3},   // r < c, d
           {7, 3}, {7, 0},   // s < d, a
           {8, 4}, {8, 6},   // u < p, r
           {9, 5}, {9, 7}}); // v < q, s
  return R;
}

struct FourCrownResult {
  bool ok = true;
  std::vector<int> embedding;  // image of each R element when ok == false
};

// True when no cover-preserving order embedding of R into P maps the maximal
// elements of R to maximal elements of P.  Backtracking: maximal elements
// first, pendants last.
inline FourCrownResult four_crown_two_pendant(const FinitePoset& P,
                                              const FinitePoset& R = crown_poset_r()) {
  const int rk = R.size(), pk = P.size();
  std::vector<int> phi(rk, -1);
  std::vector<char> used(pk, 0);

  // Assignment order: by decreasing constraint from above.
  std::vector<int> order;
  for (int x : R.maximal()) order.push_back(x);
  for (int x = 0; x < rk; ++x)
    if (!R.is_maximal(x) && !R.lower_covers(x).empty()) order.push_back(x);
  for (int x = 0; x < rk; ++x)
    if (!R.is_maximal(x) && R.lower_covers(x).empty()) order.push_back(x);

  auto consistent = [&](int x, int cand) {
    if (used[cand]) return false;
    if (R.is_maximal(x) && !P.is_maximal(cand)) return false;
    for (int y = 0; y < rk; ++y) {
      if (phi[y] < 0) continue;
      if (R.leq(x, y) != P.leq(cand, phi[y])) return false;
      if (R.leq(y, x) != P.leq(phi[y], cand)) return false;
      if (R.covers(x, y) && !P.covers(cand, phi[y])) return false;
      if (R.covers(y, x) && !P.covers(phi[y], cand)) return false;
    }
    return true;
  };

  std::vector<int> found;
  auto search = [&](auto&& self, size_t depth) -> bool {
    if (depth == order.size()) {
      found = phi;
      return true;
    }
    const int x = order[depth];
    for (int cand = 0; cand < pk; ++cand) {
      if (!consistent(x, cand)) continue;
      phi[x] = cand;
      used[cand] = 1;
      if (self(self, depth + 1)) return true;
      phi[x] = -1;
      used[cand] = 0;
    }
    return false;
  };
  if (search(search, 0)) return {false, found};
  return {};
}

// A peak S7: a sublattice isomorphic to S7 whose three top intervals
// [a,t], [m,t], [b,t] are edges of K.  Found by scanning elements with at
// least three lower covers and completing downward by meets.
struct PeakS7 {
  int o = -1, p = -1, q = -1, a = -1, m = -1, b = -1, t = -1;
  Edge middle() const { return {m, t}; }
  friend bool operator==(const PeakS7&, const PeakS7&) = default;
};

inline std::vector<PeakS7> peak_s7_find(const Lattice& K) {
  std::vector<PeakS7> out;
  for (int t = 0; t < K.size(); ++t) {
    const auto& lows = K.lower_covers(t);
    const int d = static_cast<int>(lows.size());
    if (d < 3) continue;
    for (int i = 0; i < d; ++i)
      for (int j = i + 1; j < d; ++j)
        for (int k = j + 1; k < d; ++k) {
          const int a = lows[i], m = lows[j], b = lows[k];
          const int p = K.meet(a, m), q = K.meet(m, b);
          if (p == a || p == m || q == m || q == b) continue;
          if (K.leq(p, q) || K.leq(q, p)) continue;
          if (K.join(p, q) != m) continue;
          const int o = K.meet(p, q);
          if (K.meet(a, b) != o || K.meet(a, q) != o || K.meet(b, p) != o) continue;
          out.push_back({o, p, q, a, m, b, t});
        }
  }
  return out;
}

// Steep edges are exactly the middle edges of peak S7s.
inline bool classification_cross_check(const SwingIndex& S,
                                       const std::vector<PeakS7>& peaks) {
  std::vector<Edge> middles;
  for (const auto& pk : peaks) middles.push_back(pk.middle());
  std::sort(middles.begin(), middles.end());
  middles.erase(std::unique(middles.begin(), middles.end()), middles.end());
  return middles == S.steep_edges();
}

// Every normal-up edge is up-perspective to an upper-left boundary edge or to
// a steep edge.
inline bool lemma_application_check(const SwingIndex& S) {
  for (int e = 0; e < S.edge_count(); ++e) {
    if (S.classify(e) != EdgeClass::normal_up) continue;
    bool reached = false;
    for (int r : S.up_closure(e))
      if (S.on_upper_left(r) || S.classify(r) == EdgeClass::steep) {
        reached = true;
        break;
      }
    if (!reached) return false;
  }
  return true;
}

// Distinct steep edges have disjoint trajectories, i.e. no trajectory
// carries two steep edges.
inline bool lemma_disj_check(const SwingIndex& S) {
  for (const auto& t : S.trajectories()) {
    int steep = 0;
    for (EdgeClass c : t.classes)
      if (c == EdgeClass::steep) ++steep;
    if (steep > 1) return false;
  }
  return true;
}

// For distinct edges X, Y on the upper-left boundary, no element of P is a
// common lower cover of col X and col Y; mirrored on the upper-right.
inline bool lemma_disjoint_check(const SwingIndex& S, const JiPoset& P) {
  const Lattice& K = S.lattice();
  auto segment_ok = [&](const std::vector<Edge>& seg) {
    for (size_t i = 0; i < seg.size(); ++i)
      for (size_t j = i + 1; j < seg.size(); ++j) {
        const int cx = P.color(K, seg[i]), cy = P.color(K, seg[j]);
        for (int z = 0; z < P.poset.size(); ++z)
          if (P.poset.covers(z, cx) && P.poset.covers(z, cy)) return false;
      }
    return true;
  };
  return segment_ok(S.chains().upper_left) && segment_ok(S.chains().upper_right);
}

}  // namespace slatt
