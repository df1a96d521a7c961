// Copyright (c) exactjoin contributors.
// SPDX-License-Identifier: Apache-2.0
//
// Bounded-difference shapes as weighted graphs over nodes {0, ..., n}, node
// 0 standing for a dimension pinned to zero. Arc (i,j) encodes
// x_i - x_j <= w(i,j), with x_0 = 0 folding the unary bounds in. Rational
// and integer variants share the representation; they differ in the weight
// class and in the slack of the exact-join test.

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "exactjoin/decision.hpp"
#include "exactjoin/errors.hpp"
#include "exactjoin/graph.hpp"
#include "exactjoin/linear.hpp"

namespace exactjoin {

struct RationalWeightPolicy {
  static constexpr bool integral = false;
  static const char* bd_keyword() { return "bds"; }
  static const char* oct_keyword() { return "oct"; }
};
struct IntegerWeightPolicy {
  static constexpr bool integral = true;
  static const char* bd_keyword() { return "int_bds"; }
  static const char* oct_keyword() { return "int_oct"; }
};

template <class Policy>
class BdShapeT {
public:
  explicit BdShapeT(std::size_t dim) : dim_(dim) {} // empty shape

  static BdShapeT empty(std::size_t dim) { return BdShapeT(dim); }

  static BdShapeT universe(std::size_t dim) {
    WeightedGraph g(dim + 1);
    return from_graph(dim, g);
  }

  // Builds from a raw (not necessarily closed) graph over dim+1 nodes.
  static BdShapeT from_graph(std::size_t dim, const WeightedGraph& raw) {
    if (raw.node_count() != dim + 1)
      throw Error(Errc::precondition, "BdShape: graph has wrong node count");
    check_weights(raw);
    BdShapeT s(dim);
    auto cl = closure(raw);
    if (!cl)
      return s;
    s.closed_ = std::move(*cl);
    s.reduced_ = reduction(*s.closed_);
    return s;
  }

  static BdShapeT from_constraints(const ConstraintSystem& cs) {
    const std::size_t n = cs.dim();
    WeightedGraph g(n + 1);
    for (const Constraint& c : cs.as_inequalities()) {
      auto [i, j] = bd_arc_of(c);
      g.add_arc(i, j, ExtRational(c.b));
    }
    return from_graph(n, g);
  }

  std::size_t dim() const { return dim_; }
  bool is_empty() const { return !closed_.has_value(); }
  const WeightedGraph& closed_graph() const { return require_nonempty(closed_); }
  const WeightedGraph& reduced_graph() const { return require_nonempty(reduced_); }

  bool contains_point(const PointVec& p) const {
    require_same_dim(p.size(), dim_, "BdShape::contains_point");
    if (is_empty())
      return false;
    const WeightedGraph& g = *closed_;
    auto coord = [&](std::size_t node) { return node == 0 ? Rational(0) : p[node - 1]; };
    for (auto [i, j] : g.arcs())
      if (!(coord(i) - coord(j) <= g.weight(i, j).value()))
        return false;
    return true;
  }

  // Constraint description read off the reduced graph.
  ConstraintSystem constraint_system() const {
    ConstraintSystem cs(dim_);
    if (is_empty()) {
      // x_1 <= -1 and -x_1 <= 0: canonically unsatisfiable
      if (dim_ > 0) {
        cs.add(bd_constraint(1, 0, Rational(-1), dim_));
        cs.add(bd_constraint(0, 1, Rational(0), dim_));
      }
      return cs;
    }
    const WeightedGraph& g = *reduced_;
    for (auto [i, j] : g.arcs())
      cs.add(bd_constraint(i, j, g.weight(i, j).value(), dim_));
    return cs;
  }

  std::string str() const { return constraint_system().str(Policy::bd_keyword()); }

  static Constraint bd_constraint(std::size_t i, std::size_t j, Rational b, std::size_t dim) {
    Constraint c;
    c.a.assign(dim, Rational(0));
    if (i > 0)
      c.a[i - 1] = Rational(1);
    if (j > 0)
      c.a[j - 1] = Rational(-1);
    c.b = std::move(b);
    c.rel = Rel::le;
    c.normalize();
    return c;
  }

  // Arc (i, j) of the node set {0..n} for a BD-form inequality; throws
  // Errc::domain_form otherwise.
  static std::pair<std::size_t, std::size_t> bd_arc_of(const Constraint& c) {
    if (c.rel == Rel::lt)
      throw Error(Errc::domain_form, "BD shapes take non-strict constraints only: " + c.str());
    if (c.rel == Rel::eq)
      throw Error(Errc::domain_form, "BdShape: expand equalities before arc mapping");
    if (Policy::integral && !c.b.is_integer())
      throw Error(Errc::domain_form, "integer BD shape requires integral bounds: " + c.str());
    std::vector<std::pair<std::size_t, Rational>> nz;
    for (std::size_t t = 0; t < c.a.size(); ++t)
      if (!c.a[t].is_zero())
        nz.emplace_back(t, c.a[t]);
    const Rational one(1), minus_one(-1);
    if (nz.size() == 1) {
      if (nz[0].second == one)
        return {nz[0].first + 1, 0};
      if (nz[0].second == minus_one)
        return {0, nz[0].first + 1};
    } else if (nz.size() == 2) {
      if (nz[0].second == one && nz[1].second == minus_one)
        return {nz[0].first + 1, nz[1].first + 1};
      if (nz[0].second == minus_one && nz[1].second == one)
        return {nz[1].first + 1, nz[0].first + 1};
    }
    throw Error(Errc::domain_form, "not a bounded-difference constraint: " + c.str());
  }

private:
  static const WeightedGraph& require_nonempty(const std::optional<WeightedGraph>& g) {
    if (!g)
      throw Error(Errc::precondition, "BdShape: empty shape has no graph");
    return *g;
  }

  static void check_weights(const WeightedGraph& g) {
    if (!Policy::integral)
      return;
    for (auto [i, j] : g.arcs())
      if (!g.weight(i, j).value().is_integer())
        throw Error(Errc::domain_form, "integer BD shape requires integral weights");
  }

  std::size_t dim_;
  std::optional<WeightedGraph> closed_;
  std::optional<WeightedGraph> reduced_;
};

using BdShape = BdShapeT<RationalWeightPolicy>;
using IntBdShape = BdShapeT<IntegerWeightPolicy>;

template <class P>
bool is_empty(const BdShapeT<P>& s) {
  return s.is_empty();
}

template <class P>
bool contains(const BdShapeT<P>& outer, const BdShapeT<P>& inner) {
  require_same_dim(outer.dim(), inner.dim(), "BdShape::contains");
  if (inner.is_empty())
    return true;
  if (outer.is_empty())
    return false;
  return leq(inner.closed_graph(), outer.closed_graph());
}

template <class P>
BdShapeT<P> join(const BdShapeT<P>& a, const BdShapeT<P>& b) {
  require_same_dim(a.dim(), b.dim(), "BdShape::join");
  if (a.is_empty())
    return b;
  if (b.is_empty())
    return a;
  return BdShapeT<P>::from_graph(a.dim(), graph_lub(a.closed_graph(), b.closed_graph()));
}

template <class P>
BdShapeT<P> meet(const BdShapeT<P>& a, const BdShapeT<P>& b) {
  require_same_dim(a.dim(), b.dim(), "BdShape::meet");
  if (a.is_empty() || b.is_empty())
    return BdShapeT<P>::empty(a.dim());
  return BdShapeT<P>::from_graph(a.dim(), graph_glb(a.closed_graph(), b.closed_graph()));
}

template <class P>
bool equals(const BdShapeT<P>& a, const BdShapeT<P>& b) {
  return contains(a, b) && contains(b, a);
}

namespace detail {

// Condition (2) with the integer slack folded in: rational shapes test
// lhs < rhs, integer shapes test lhs + 2 <= rhs.
template <class P>
bool bd_condition2(const ExtRational& lhs, const ExtRational& rhs) {
  if constexpr (P::integral)
    return lhs + ExtRational(Rational(2)) <= rhs;
  else
    return lhs < rhs;
}

} // namespace detail

struct BdPairConditions {
  bool cond1 = false;
  bool cond2 = false;
};

// Evaluates the two theorem conditions for an arbitrary node tuple over the
// closed graphs (no arc-membership requirement); used by diagnostics/tests.
template <class P>
BdPairConditions bd_check_conditions(const BdShapeT<P>& b1, const BdShapeT<P>& b2, std::size_t i,
                                     std::size_t j, std::size_t k, std::size_t l) {
  const WeightedGraph& g1 = b1.closed_graph();
  const WeightedGraph& g2 = b2.closed_graph();
  WeightedGraph g = graph_lub(g1, g2);
  BdPairConditions out;
  out.cond1 = g1.weight(i, j) < g2.weight(i, j) && g2.weight(k, l) < g1.weight(k, l);
  out.cond2 = detail::bd_condition2<P>(g1.weight(i, j) + g2.weight(k, l),
                                       g.weight(i, l) + g.weight(k, j));
  return out;
}

template <class P>
ArcDecision detect_exact_join_bd(const BdShapeT<P>& b1, const BdShapeT<P>& b2) {
  require_same_dim(b1.dim(), b2.dim(), "detect_exact_join_bd");
  if (b1.is_empty() || b2.is_empty())
    return ArcDecision::exact_join();
  const WeightedGraph& g1 = b1.closed_graph();
  const WeightedGraph& g2 = b2.closed_graph();
  if (leq(g1, g2) || leq(g2, g1))
    return ArcDecision::exact_join();

  WeightedGraph g = graph_lub(g1, g2);
  const auto arcs1 = b1.reduced_graph().arcs();
  const auto arcs2 = b2.reduced_graph().arcs();
  for (auto [i, j] : arcs1) {
    if (!(g1.weight(i, j) < g2.weight(i, j)))
      continue;
    for (auto [k, l] : arcs2) {
      if (!(g2.weight(k, l) < g1.weight(k, l)))
        continue;
      if (detail::bd_condition2<P>(g1.weight(i, j) + g2.weight(k, l),
                                   g.weight(i, l) + g.weight(k, j)))
        return ArcDecision::inexact(ArcWitness{i, j, k, l, i == l && j == k});
    }
  }
  return ArcDecision::exact_join();
}

template <class Shape>
struct SeparatingWitness {
  std::optional<Shape> shape; // non-empty, inside the join, disjoint from both inputs
  bool inputs_disjoint = false;
};

// The proof's separating-shape construction for an accepted witness tuple.
template <class P>
SeparatingWitness<BdShapeT<P>> build_separating_witness(const BdShapeT<P>& b1,
                                                        const BdShapeT<P>& b2, std::size_t i,
                                                        std::size_t j, std::size_t k,
                                                        std::size_t l) {
  require_same_dim(b1.dim(), b2.dim(), "build_separating_witness");
  if (b1.is_empty() || b2.is_empty())
    throw Error(Errc::precondition, "build_separating_witness: empty input");
  const WeightedGraph& g1 = b1.closed_graph();
  const WeightedGraph& g2 = b2.closed_graph();
  if (!b1.reduced_graph().has_arc(i, j) || !b2.reduced_graph().has_arc(k, l))
    throw Error(Errc::precondition, "build_separating_witness: indices are not reduction arcs");
  auto cond = bd_check_conditions(b1, b2, i, j, k, l);
  if (!cond.cond1 || !cond.cond2)
    throw Error(Errc::precondition, "build_separating_witness: tuple fails the conditions");

  SeparatingWitness<BdShapeT<P>> out;
  if (i == l && j == k) {
    out.inputs_disjoint = true;
    return out;
  }

  WeightedGraph g = graph_lub(g1, g2);
  const Rational w1ij = g1.weight(i, j).value();
  const Rational w2kl = g2.weight(k, l).value();

  Rational eps(1);
  if constexpr (!P::integral) {
    bool have = false;
    auto feed = [&](const Rational& cand) {
      if (!have || cand < eps) {
        eps = cand;
        have = true;
      }
    };
    if (g.weight(i, j).is_finite())
      feed(g.weight(i, j).value() - w1ij);
    if (g.weight(k, l).is_finite())
      feed(g.weight(k, l).value() - w2kl);
    if (g.weight(i, l).is_finite() && g.weight(k, j).is_finite())
      feed((g.weight(i, l).value() + g.weight(k, j).value() - w1ij - w2kl) / Rational(2));
    if (!have)
      eps = Rational(1);
  }

  WeightedGraph gp = g;
  gp.set_weight(j, i, ExtRational(-w1ij - eps));
  gp.set_weight(l, k, ExtRational(-w2kl - eps));
  out.shape = BdShapeT<P>::from_graph(b1.dim(), gp);
  if (out.shape->is_empty())
    throw Error(Errc::precondition, "build_separating_witness: construction collapsed");
  return out;
}

// Machine check of a separating witness: non-empty, below the join,
// and with empty intersection against both inputs.
template <class P>
bool verify_separating_witness(const BdShapeT<P>& b1, const BdShapeT<P>& b2,
                               const SeparatingWitness<BdShapeT<P>>& w) {
  if (w.inputs_disjoint)
    return meet(b1, b2).is_empty();
  if (!w.shape || w.shape->is_empty())
    return false;
  WeightedGraph g = graph_lub(b1.closed_graph(), b2.closed_graph());
  if (!leq(w.shape->closed_graph(), g))
    return false;
  return meet(*w.shape, b1).is_empty() && meet(*w.shape, b2).is_empty();
}

template <class P>
bool exact_join(const BdShapeT<P>& a, const BdShapeT<P>& b) {
  return detect_exact_join_bd(a, b).exact;
}

template <class P>
std::size_t dim(const BdShapeT<P>& s) {
  return s.dim();
}

template <class P>
std::string to_text(const BdShapeT<P>& s) {
  return s.str();
}

} // namespace exactjoin
