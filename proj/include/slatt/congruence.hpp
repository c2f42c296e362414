#pragma once

// Brute-force congruence machinery, the ground truth everything else is
// checked against: principal congruences by compatibility closure, the
// ordered set P of join-irreducible congruences, and the edge coloring
// col E = con E.

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "slatt/lattice.hpp"

namespace slatt {

// A partition of the lattice elements, stored as normalized block ids
// (blocks numbered by first occurrence).
class Congruence {
 public:
  // Least congruence collapsing the edge: seed the pair, then close under
  // (a,b) -> (a^c, b^c), (avc, bvc) for all c, with union-find providing
  // reflexivity, symmetry and transitivity.
  static Congruence principal(const Lattice& K, Edge e) {
    const int n = K.size();
    std::vector<int> parent(n);
    for (int i = 0; i < n; ++i) parent[i] = i;
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    std::vector<std::pair<int, int>> work{{e.bottom, e.top}};
    while (!work.empty()) {
      auto [a, b] = work.back();
      work.pop_back();
      const int ra = find(a), rb = find(b);
      if (ra == rb) continue;
      parent[rb] = ra;
      for (int c = 0; c < n; ++c) {
        work.emplace_back(K.meet(a, c), K.meet(b, c));
        work.emplace_back(K.join(a, c), K.join(b, c));
      }
    }
    Congruence out;
    out.block_.assign(n, -1);
    int next = 0;
    for (int i = 0; i < n; ++i) {
      const int r = find(i);
      if (out.block_[r] < 0) out.block_[r] = next++;
      out.block_[i] = out.block_[r];
    }
    out.block_count_ = next;
    return out;
  }

  bool same(int a, int b) const { return block_[a] == block_[b]; }
  int block_of(int a) const { return block_[a]; }
  int block_count() const { return block_count_; }
  int size() const { return static_cast<int>(block_.size()); }
  const std::vector<int>& blocks() const { return block_; }

  // this <= coarser as congruences: every block here lies inside a block there.
  bool refines(const Congruence& coarser) const {
    std::vector<int> image(block_count_, -1);
    for (size_t i = 0; i < block_.size(); ++i) {
      int& img = image[block_[i]];
      if (img < 0)
        img = coarser.block_[i];
      else if (img != coarser.block_[i])
        return false;
    }
    return true;
  }

  std::vector<Edge> collapsed_edges(const Lattice& K) const {
    std::vector<Edge> out;
    for (const Edge& e : K.edges())
      if (same(e.bottom, e.top)) out.push_back(e);
    return out;
  }

  friend bool operator==(const Congruence&, const Congruence&) = default;

 private:
  std::vector<int> block_;
  int block_count_ = 0;
};

// con(v) <= con(u): does collapsing u also collapse everything v collapses.
inline bool leq_oracle(const Lattice& K, Edge u, Edge v) {
  return Congruence::principal(K, v).refines(Congruence::principal(K, u));
}

// An abstract finite ordered set: k elements with a reflexive leq relation,
// plus the derived cover relation and maximal elements.
class FinitePoset {
 public:
  FinitePoset() = default;

  static FinitePoset from_leq(std::vector<std::vector<char>> leq) {
    FinitePoset p;
    p.leq_ = std::move(leq);
    const int k = static_cast<int>(p.leq_.size());
    for (int i = 0; i < k; ++i) {
      if (static_cast<int>(p.leq_[i].size()) != k)
        throw std::invalid_argument("leq matrix is not square");
      if (!p.leq_[i][i]) throw std::invalid_argument("leq is not reflexive");
    }
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) {
        if (i != j && p.leq_[i][j] && p.leq_[j][i])
          throw std::invalid_argument("leq is not antisymmetric");
        if (p.leq_[i][j])
          for (int l = 0; l < k; ++l)
            if (p.leq_[j][l] && !p.leq_[i][l])
              throw std::invalid_argument("leq is not transitive");
      }
    p.derive();
    return p;
  }

  static FinitePoset from_covers(int k, const std::vector<std::pair<int, int>>& covers) {
    std::vector<std::vector<char>> leq(k, std::vector<char>(k, 0));
    for (int i = 0; i < k; ++i) leq[i][i] = 1;
    for (auto [lo, hi] : covers) leq[lo][hi] = 1;
    for (int mid = 0; mid < k; ++mid)  // Floyd-Warshall style closure
      for (int i = 0; i < k; ++i)
        if (leq[i][mid])
          for (int j = 0; j < k; ++j)
            if (leq[mid][j]) leq[i][j] = 1;
    return from_leq(std::move(leq));
  }

  int size() const { return static_cast<int>(leq_.size()); }
  bool leq(int a, int b) const { return leq_[a][b]; }
  bool lt(int a, int b) const { return a != b && leq_[a][b]; }
  bool covers(int lo, int hi) const { return covers_[lo][hi]; }
  const std::vector<int>& upper_covers(int a) const { return upper_[a]; }
  const std::vector<int>& lower_covers(int a) const { return lower_[a]; }
  const std::vector<int>& maximal() const { return maximal_; }
  bool is_maximal(int a) const {
    return std::find(maximal_.begin(), maximal_.end(), a) != maximal_.end();
  }

 private:
  void derive() {
    const int k = size();
    covers_.assign(k, std::vector<char>(k, 0));
    upper_.assign(k, {});
    lower_.assign(k, {});
    for (int a = 0; a < k; ++a) {
      bool max = true;
      for (int b = 0; b < k; ++b) {
        if (!lt(a, b)) continue;
        max = false;
        bool cover = true;
        for (int c = 0; c < k && cover; ++c)
          if (lt(a, c) && lt(c, b)) cover = false;
        if (cover) {
          covers_[a][b] = 1;
          upper_[a].push_back(b);
          lower_[b].push_back(a);
        }
      }
      if (max) maximal_.push_back(a);
    }
  }

  std::vector<std::vector<char>> leq_;
  std::vector<std::vector<char>> covers_;
  std::vector<std::vector<int>> upper_, lower_;
  std::vector<int> maximal_;
};

// P = Ji(Con K) together with the coloring of edges by P-elements.  In a
// finite lattice every join-irreducible congruence is the congruence of some
// covering pair, so P is the set of distinct principal edge congruences,
// ordered by refinement.  Elements are canonically ordered by their sorted
// collapsed-edge lists, which keeps reports stable.
struct JiPoset {
  FinitePoset poset;
  std::vector<Congruence> classes;  // by P index
  std::vector<int> edge_color;      // by K.edge_index

  int color(const Lattice& K, Edge e) const {
    const int idx = K.edge_index(e);
    if (idx < 0) throw std::invalid_argument("not an edge: " + edge_name(e));
    return edge_color[idx];
  }
  // col v <= col u, the oracle order.
  bool leq_colors(Edge u, Edge v, const Lattice& K) const {
    return poset.leq(color(K, v), color(K, u));
  }
};

inline JiPoset ji_poset(const Lattice& K) {
  const auto& edges = K.edges();
  std::vector<Congruence> per_edge;
  per_edge.reserve(edges.size());
  for (const Edge& e : edges) per_edge.push_back(Congruence::principal(K, e));

  // Deduplicate; key by collapsed-edge list, which determines the congruence.
  std::map<std::vector<Edge>, int> by_collapsed;
  std::vector<std::vector<Edge>> keys;
  std::vector<Congruence> classes;
  std::vector<int> edge_color(edges.size());
  for (size_t i = 0; i < edges.size(); ++i) {
    auto key = per_edge[i].collapsed_edges(K);
    auto it = by_collapsed.find(key);
    if (it == by_collapsed.end()) {
      it = by_collapsed.emplace(key, static_cast<int>(classes.size())).first;
      classes.push_back(per_edge[i]);
      keys.push_back(std::move(key));
    }
    edge_color[i] = it->second;
  }

  // Canonical order: lexicographic on the sorted collapsed-edge lists.
  const int k = static_cast<int>(classes.size());
  std::vector<int> order(k);
  for (int i = 0; i < k; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return keys[a] < keys[b]; });
  std::vector<int> rank(k);
  for (int i = 0; i < k; ++i) rank[order[i]] = i;

  JiPoset out;
  out.classes.resize(k);
  for (int i = 0; i < k; ++i) out.classes[rank[i]] = classes[i];
  out.edge_color.resize(edges.size());
  for (size_t i = 0; i < edges.size(); ++i) out.edge_color[i] = rank[edge_color[i]];

  std::vector<std::vector<char>> leq(k, std::vector<char>(k, 0));
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      leq[a][b] = out.classes[a].refines(out.classes[b]) ? 1 : 0;
  out.poset = FinitePoset::from_leq(std::move(leq));
  return out;
}

}  // namespace slatt
