// Copyright (c) exactjoin contributors.
// SPDX-License-Identifier: Apache-2.0
//
// Weighted directed graphs over a fixed node set with weights in Q u {+inf}.
// Provides consistency (no negative cycle), shortest-path closure
// (Floyd-Warshall, exact rational arithmetic), shortest-path reduction
// (equivalence-class aware, so zero-weight cycles reduce deterministically),
// and the lattice operations (pointwise max / min).

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "exactjoin/errors.hpp"
#include "exactjoin/rational.hpp"

namespace exactjoin {

class WeightedGraph {
public:
  explicit WeightedGraph(std::size_t node_count)
      : n_(node_count), w_(node_count * node_count, ExtRational::infinity()) {}

  std::size_t node_count() const { return n_; }

  const ExtRational& weight(std::size_t i, std::size_t j) const { return w_[i * n_ + j]; }
  void set_weight(std::size_t i, std::size_t j, ExtRational v) { w_[i * n_ + j] = std::move(v); }

  // Keeps the smaller of the existing and the new weight.
  void add_arc(std::size_t i, std::size_t j, const ExtRational& v) {
    if (v < weight(i, j))
      set_weight(i, j, v);
  }

  bool has_arc(std::size_t i, std::size_t j) const { return weight(i, j).is_finite(); }

  std::size_t finite_arc_count() const {
    std::size_t c = 0;
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        if (i != j && has_arc(i, j))
          ++c;
    return c;
  }

  // Proper finite arcs in lexicographic order.
  std::vector<std::pair<std::size_t, std::size_t>> arcs() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        if (i != j && has_arc(i, j))
          out.emplace_back(i, j);
    return out;
  }

  friend bool operator==(const WeightedGraph& a, const WeightedGraph& b) {
    if (a.n_ != b.n_)
      return false;
    for (std::size_t t = 0; t < a.w_.size(); ++t)
      if (a.w_[t] != b.w_[t])
        return false;
    return true;
  }

  // Pointwise comparison: a <= b on every entry.
  friend bool leq(const WeightedGraph& a, const WeightedGraph& b) {
    require_same_dim(a.n_, b.n_, "WeightedGraph::leq");
    for (std::size_t t = 0; t < a.w_.size(); ++t)
      if (!(a.w_[t] <= b.w_[t]))
        return false;
    return true;
  }

private:
  std::size_t n_;
  std::vector<ExtRational> w_;
};

inline WeightedGraph graph_lub(const WeightedGraph& a, const WeightedGraph& b) {
  require_same_dim(a.node_count(), b.node_count(), "graph_lub");
  WeightedGraph g(a.node_count());
  for (std::size_t i = 0; i < a.node_count(); ++i)
    for (std::size_t j = 0; j < a.node_count(); ++j)
      g.set_weight(i, j, max(a.weight(i, j), b.weight(i, j)));
  return g;
}

inline WeightedGraph graph_glb(const WeightedGraph& a, const WeightedGraph& b) {
  require_same_dim(a.node_count(), b.node_count(), "graph_glb");
  WeightedGraph g(a.node_count());
  for (std::size_t i = 0; i < a.node_count(); ++i)
    for (std::size_t j = 0; j < a.node_count(); ++j)
      g.set_weight(i, j, min(a.weight(i, j), b.weight(i, j)));
  return g;
}

// Bellman-Ford negative-cycle detection (kept independent of closure()).
inline bool is_consistent(const WeightedGraph& g) {
  const std::size_t n = g.node_count();
  for (std::size_t i = 0; i < n; ++i)
    if (g.has_arc(i, i) && g.weight(i, i).value().sign() < 0)
      return false;
  std::vector<Rational> dist(n, Rational(0));
  for (std::size_t pass = 0; pass <= n; ++pass) {
    bool improved = false;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j || !g.has_arc(i, j))
          continue;
        Rational cand = dist[i] + g.weight(i, j).value();
        if (cand < dist[j]) {
          dist[j] = cand;
          improved = true;
        }
      }
    if (!improved)
      return true;
  }
  return false;
}

// All-pairs shortest paths with zero diagonal; nullopt on a negative cycle.
// The result is the greatest closed graph below the input.
inline std::optional<WeightedGraph> closure(const WeightedGraph& g) {
  const std::size_t n = g.node_count();
  std::vector<char> fin(n * n, 0);
  std::vector<mpq_class> q(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const ExtRational& w = g.weight(i, j);
      if (w.is_finite()) {
        fin[i * n + j] = 1;
        q[i * n + j] = w.value().raw();
      }
    }
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t ii = i * n + i;
    if (fin[ii]) {
      if (sgn(q[ii]) < 0)
        return std::nullopt;
    }
    fin[ii] = 1;
    q[ii] = 0;
  }

  mpq_t tmp;
  mpq_init(tmp);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!fin[i * n + k])
        continue;
      const mpq_class& wik = q[i * n + k];
      for (std::size_t j = 0; j < n; ++j) {
        if (!fin[k * n + j])
          continue;
        mpq_add(tmp, wik.get_mpq_t(), q[k * n + j].get_mpq_t());
        std::size_t ij = i * n + j;
        if (!fin[ij] || mpq_cmp(tmp, q[ij].get_mpq_t()) < 0) {
          mpq_swap(q[ij].get_mpq_t(), tmp);
          fin[ij] = 1;
        }
      }
    }
  }
  mpq_clear(tmp);

  for (std::size_t i = 0; i < n; ++i)
    if (sgn(q[i * n + i]) < 0)
      return std::nullopt;

  WeightedGraph out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::size_t ij = i * n + j;
      if (i == j)
        out.set_weight(i, j, ExtRational(Rational(0)));
      else if (fin[ij])
        out.set_weight(i, j, ExtRational(Rational(mpq_class(q[ij]))));
    }
  return out;
}

inline bool is_closed(const WeightedGraph& g) {
  const std::size_t n = g.node_count();
  for (std::size_t i = 0; i < n; ++i)
    if (g.weight(i, i) != ExtRational(Rational(0)))
      return false;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j)
        if (!(g.weight(i, j) <= g.weight(i, k) + g.weight(k, j)))
          return false;
  return true;
}

// Shortest-path reduction of a closed graph: a subgraph with the same
// closure and a minimal arc set. Nodes joined by zero-weight cycles are
// grouped; each group keeps one connecting cycle (sorted order), and only
// irredundant arcs between group leaders survive.
inline WeightedGraph reduction(const WeightedGraph& g) {
  if (!is_closed(g))
    throw Error(Errc::precondition, "reduction: input graph is not closed");
  const std::size_t n = g.node_count();
  const ExtRational zero{Rational(0)};

  std::vector<std::size_t> leader(n);
  for (std::size_t i = 0; i < n; ++i) {
    leader[i] = i;
    for (std::size_t j = 0; j < i; ++j) {
      if (g.has_arc(i, j) && g.has_arc(j, i) && g.weight(i, j) + g.weight(j, i) == zero) {
        leader[i] = leader[j];
        break;
      }
    }
  }

  WeightedGraph r(n);
  // One zero-weight cycle through each non-singleton class.
  for (std::size_t l = 0; l < n; ++l) {
    if (leader[l] != l)
      continue;
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < n; ++i)
      if (leader[i] == l)
        members.push_back(i);
    if (members.size() < 2)
      continue;
    for (std::size_t t = 0; t + 1 < members.size(); ++t)
      r.set_weight(members[t], members[t + 1], g.weight(members[t], members[t + 1]));
    r.set_weight(members.back(), members.front(), g.weight(members.back(), members.front()));
  }
  // Irredundant arcs between leaders.
  for (std::size_t i = 0; i < n; ++i) {
    if (leader[i] != i)
      continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (leader[j] != j || i == j || !g.has_arc(i, j))
        continue;
      bool redundant = false;
      for (std::size_t k = 0; k < n && !redundant; ++k) {
        if (leader[k] != k || k == i || k == j)
          continue;
        if (g.weight(i, k) + g.weight(k, j) <= g.weight(i, j))
          redundant = true;
      }
      if (!redundant)
        r.set_weight(i, j, g.weight(i, j));
    }
  }
  return r;
}

} // namespace exactjoin
