// Copyright (c) exactjoin contributors.
// SPDX-License-Identifier: Apache-2.0
//
// Octagonal shapes over 2n signed nodes: node 2t is the positive form of
// x_{t+1}, node 2t+1 the negative form. Arc (i,j) encodes the potential
// constraint form(i) - form(j) <= w(i,j); unary bounds double (x <= b is
// stored as x+ - x- <= 2b). Coherent twin arcs (i,j) and (bar j, bar i)
// share one cell, so coherence holds by construction.
//
// Rational shapes are canonicalized by strong closure (Floyd-Warshall plus
// one half-sum strengthening pass); integer shapes by tight closure, which
// additionally keeps unary weights even and decides satisfiability over Z
// through the negative unary 2-cycle check after tightening.

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "exactjoin/bd_shape.hpp" // weight policies, SeparatingWitness
#include "exactjoin/decision.hpp"
#include "exactjoin/errors.hpp"
#include "exactjoin/graph.hpp"
#include "exactjoin/linear.hpp"

namespace exactjoin {

class OctGraph {
public:
  explicit OctGraph(std::size_t dim)
      : dim_(dim), w_(4 * dim * dim, ExtRational::infinity()) {}

  std::size_t dim() const { return dim_; }
  std::size_t nodes() const { return 2 * dim_; }

  static std::size_t bar(std::size_t i) { return i ^ 1; }

  const ExtRational& weight(std::size_t i, std::size_t j) const { return w_[canon(i, j)]; }
  void set_weight(std::size_t i, std::size_t j, ExtRational v) { w_[canon(i, j)] = std::move(v); }
  void add_arc(std::size_t i, std::size_t j, const ExtRational& v) {
    if (v < weight(i, j))
      set_weight(i, j, v);
  }
  bool has_arc(std::size_t i, std::size_t j) const { return weight(i, j).is_finite(); }

  // All proper finite arcs, twins included, in lexicographic order.
  std::vector<std::pair<std::size_t, std::size_t>> arcs() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < nodes(); ++i)
      for (std::size_t j = 0; j < nodes(); ++j)
        if (i != j && has_arc(i, j))
          out.emplace_back(i, j);
    return out;
  }

  // One representative per coherent twin pair.
  std::vector<std::pair<std::size_t, std::size_t>> canonical_arcs() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < nodes(); ++i)
      for (std::size_t j = 0; j < nodes(); ++j) {
        if (i == j || !has_arc(i, j))
          continue;
        std::pair<std::size_t, std::size_t> twin{bar(j), bar(i)};
        if (std::pair{i, j} <= twin)
          out.emplace_back(i, j);
      }
    return out;
  }

  WeightedGraph to_weighted() const {
    WeightedGraph g(nodes());
    for (std::size_t i = 0; i < nodes(); ++i)
      for (std::size_t j = 0; j < nodes(); ++j)
        g.set_weight(i, j, weight(i, j));
    return g;
  }

  static OctGraph from_weighted(std::size_t dim, const WeightedGraph& g) {
    OctGraph o(dim);
    for (std::size_t i = 0; i < o.nodes(); ++i)
      for (std::size_t j = 0; j < o.nodes(); ++j) {
        if (g.weight(i, j) != g.weight(bar(j), bar(i)))
          throw Error(Errc::precondition, "OctGraph: incoherent weighted graph");
        o.set_weight(i, j, g.weight(i, j));
      }
    return o;
  }

  friend bool operator==(const OctGraph& a, const OctGraph& b) {
    return a.dim_ == b.dim_ && a.w_ == b.w_;
  }
  friend bool leq(const OctGraph& a, const OctGraph& b) {
    require_same_dim(a.dim_, b.dim_, "OctGraph::leq");
    for (std::size_t i = 0; i < a.nodes(); ++i)
      for (std::size_t j = 0; j < a.nodes(); ++j)
        if (!(a.weight(i, j) <= b.weight(i, j)))
          return false;
    return true;
  }

  bool is_coherent() const {
    for (std::size_t i = 0; i < nodes(); ++i)
      for (std::size_t j = 0; j < nodes(); ++j)
        if (weight(i, j) != weight(bar(j), bar(i)))
          return false;
    return true;
  }

private:
  std::size_t canon(std::size_t i, std::size_t j) const {
    std::size_t ti = bar(j), tj = bar(i);
    if (std::pair{ti, tj} < std::pair{i, j})
      return ti * nodes() + tj;
    return i * nodes() + j;
  }

  std::size_t dim_;
  std::vector<ExtRational> w_;
};

inline OctGraph oct_lub(const OctGraph& a, const OctGraph& b) {
  require_same_dim(a.dim(), b.dim(), "oct_lub");
  OctGraph g(a.dim());
  for (std::size_t i = 0; i < g.nodes(); ++i)
    for (std::size_t j = 0; j < g.nodes(); ++j)
      g.set_weight(i, j, max(a.weight(i, j), b.weight(i, j)));
  return g;
}

inline OctGraph oct_glb(const OctGraph& a, const OctGraph& b) {
  require_same_dim(a.dim(), b.dim(), "oct_glb");
  OctGraph g(a.dim());
  for (std::size_t i = 0; i < g.nodes(); ++i)
    for (std::size_t j = 0; j < g.nodes(); ++j)
      g.set_weight(i, j, min(a.weight(i, j), b.weight(i, j)));
  return g;
}

// Shortest-path closure followed by one strengthening pass
// w(i,j) := min(w(i,j), (w(i,bar i) + w(bar j, j)) / 2).
inline std::optional<OctGraph> strong_closure(const OctGraph& g) {
  auto cl = closure(g.to_weighted());
  if (!cl)
    return std::nullopt;
  OctGraph s = OctGraph::from_weighted(g.dim(), *cl);
  const Rational half(1, 2);
  for (std::size_t i = 0; i < s.nodes(); ++i) {
    const ExtRational& ui = s.weight(i, OctGraph::bar(i));
    if (!ui.is_finite())
      continue;
    for (std::size_t j = 0; j < s.nodes(); ++j) {
      if (i == j)
        continue;
      const ExtRational& uj = s.weight(OctGraph::bar(j), j);
      if (!uj.is_finite())
        continue;
      ExtRational cand{half * (ui.value() + uj.value())};
      if (cand < s.weight(i, j))
        s.set_weight(i, j, cand);
    }
  }
  return s;
}

inline bool is_strongly_closed(const OctGraph& g) {
  if (!is_closed(g.to_weighted()))
    return false;
  for (std::size_t i = 0; i < g.nodes(); ++i)
    for (std::size_t j = 0; j < g.nodes(); ++j) {
      ExtRational lhs = Rational(2) * g.weight(i, j);
      if (!(lhs <= g.weight(i, OctGraph::bar(i)) + g.weight(OctGraph::bar(j), j)))
        return false;
    }
  return true;
}

inline bool has_integral_weights(const OctGraph& g) {
  for (auto [i, j] : g.arcs())
    if (!g.weight(i, j).value().is_integer())
      return false;
  return true;
}

// Tight closure of an integer octagonal graph; nullopt when the constraint
// system has no integer solution. Iterates closure, evenness tightening of
// unary arcs, the negative unary 2-cycle check, and integral strengthening
// until a fixpoint. On satisfiable systems the fixpoint is the tight
// closure; unsatisfiability surfaces as a negative cycle or 2-cycle.
inline std::optional<OctGraph> tight_closure(const OctGraph& g) {
  if (!has_integral_weights(g))
    throw Error(Errc::precondition, "tight_closure: non-integral weights");
  OctGraph cur = g;
  const Rational two(2);
  for (;;) {
    auto cl = closure(cur.to_weighted());
    if (!cl)
      return std::nullopt;
    OctGraph next = OctGraph::from_weighted(g.dim(), *cl);
    bool changed = !(next == cur);
    // Tighten unary arcs to even weights.
    for (std::size_t i = 0; i < next.nodes(); ++i) {
      std::size_t bi = OctGraph::bar(i);
      const ExtRational& u = next.weight(i, bi);
      if (!u.is_finite())
        continue;
      Rational t = two * Rational((u.value() / two).floor());
      if (t < u.value()) {
        next.set_weight(i, bi, ExtRational(t));
        changed = true;
      }
    }
    // Satisfiability over Z: after tightening, a negative unary 2-cycle
    // witnesses an unsatisfiable integer system.
    for (std::size_t i = 0; i < next.nodes(); ++i) {
      std::size_t bi = OctGraph::bar(i);
      if (next.has_arc(i, bi) && next.has_arc(bi, i) &&
          next.weight(i, bi) + next.weight(bi, i) < ExtRational(Rational(0)))
        return std::nullopt;
    }
    // Integral strengthening via halved (now even) unary weights.
    for (std::size_t i = 0; i < next.nodes(); ++i) {
      const ExtRational& ui = next.weight(i, OctGraph::bar(i));
      if (!ui.is_finite())
        continue;
      Rational hi = ui.value() / two;
      for (std::size_t j = 0; j < next.nodes(); ++j) {
        if (i == j)
          continue;
        const ExtRational& uj = next.weight(OctGraph::bar(j), j);
        if (!uj.is_finite())
          continue;
        ExtRational cand{hi + uj.value() / two};
        if (cand < next.weight(i, j)) {
          next.set_weight(i, j, cand);
          changed = true;
        }
      }
    }
    if (!changed)
      return next;
    cur = std::move(next);
  }
}

inline bool is_tightly_closed(const OctGraph& g) {
  if (!has_integral_weights(g) || !is_strongly_closed(g))
    return false;
  for (std::size_t i = 0; i < g.nodes(); ++i) {
    const ExtRational& u = g.weight(i, OctGraph::bar(i));
    if (u.is_finite() && !(u.value() / Rational(2)).is_integer())
      return false;
  }
  return true;
}

namespace detail {

// Greedy arc-pair dropping: removing any coherent pair that the given
// closure regenerates. The survivor has the same closure and no droppable
// arc, i.e. it is reduced.
template <class ClosureFn>
OctGraph oct_reduce_by_drop(const OctGraph& g, ClosureFn&& close) {
  OctGraph r = g;
  for (auto [i, j] : g.canonical_arcs()) {
    ExtRational saved = r.weight(i, j);
    r.set_weight(i, j, ExtRational::infinity());
    auto cl = close(r);
    if (!(cl && *cl == g))
      r.set_weight(i, j, saved);
  }
  return r;
}

} // namespace detail

inline OctGraph strong_reduction(const OctGraph& g) {
  if (!is_strongly_closed(g))
    throw Error(Errc::precondition, "strong_reduction: input not strongly closed");
  return detail::oct_reduce_by_drop(g, [](const OctGraph& x) { return strong_closure(x); });
}

inline OctGraph tight_reduction(const OctGraph& g) {
  if (!is_tightly_closed(g))
    throw Error(Errc::precondition, "tight_reduction: input not tightly closed");
  return detail::oct_reduce_by_drop(g, [](const OctGraph& x) { return tight_closure(x); });
}

template <class Policy>
class OctShapeT {
public:
  explicit OctShapeT(std::size_t dim) : dim_(dim) {} // empty shape

  static OctShapeT empty(std::size_t dim) { return OctShapeT(dim); }

  static OctShapeT universe(std::size_t dim) { return from_graph(dim, OctGraph(dim)); }

  static OctShapeT from_graph(std::size_t dim, const OctGraph& raw) {
    if (raw.dim() != dim)
      throw Error(Errc::precondition, "OctShape: graph has wrong dimension");
    if (Policy::integral && !has_integral_weights(raw))
      throw Error(Errc::domain_form, "integer octagonal shape requires integral weights");
    OctShapeT s(dim);
    auto cl = Policy::integral ? tight_closure(raw) : strong_closure(raw);
    if (!cl)
      return s;
    s.closed_ = std::move(*cl);
    s.reduced_ = Policy::integral ? tight_reduction(*s.closed_) : strong_reduction(*s.closed_);
    return s;
  }

  static OctShapeT from_constraints(const ConstraintSystem& cs) {
    const std::size_t n = cs.dim();
    OctGraph g(n);
    for (const Constraint& c : cs.as_inequalities()) {
      auto [i, j, w] = oct_arc_of(c);
      g.add_arc(i, j, ExtRational(w));
    }
    return from_graph(n, g);
  }

  std::size_t dim() const { return dim_; }
  bool is_empty() const { return !closed_.has_value(); }
  const OctGraph& closed_graph() const { return require_nonempty(closed_); }
  const OctGraph& reduced_graph() const { return require_nonempty(reduced_); }

  bool contains_point(const PointVec& p) const {
    require_same_dim(p.size(), dim_, "OctShape::contains_point");
    if (is_empty())
      return false;
    if (Policy::integral)
      for (const auto& q : p)
        if (!q.is_integer())
          return false;
    const OctGraph& g = *closed_;
    auto proj = [&](std::size_t node) {
      Rational v = p[node / 2];
      return node % 2 == 0 ? v : -v;
    };
    for (auto [i, j] : g.arcs())
      if (!(proj(i) - proj(j) <= g.weight(i, j).value()))
        return false;
    return true;
  }

  ConstraintSystem constraint_system() const {
    ConstraintSystem cs(dim_);
    if (is_empty()) {
      if (dim_ > 0) {
        cs.add(BdShapeT<Policy>::bd_constraint(1, 0, Rational(-1), dim_));
        cs.add(BdShapeT<Policy>::bd_constraint(0, 1, Rational(0), dim_));
      }
      return cs;
    }
    const OctGraph& g = *reduced_;
    for (auto [i, j] : g.canonical_arcs())
      cs.add(oct_constraint(i, j, g.weight(i, j).value(), dim_));
    return cs;
  }

  std::string str() const { return constraint_system().str(Policy::oct_keyword()); }

  // Constraint of arc (i, j): form(i) - form(j) <= w, unary arcs halved.
  static Constraint oct_constraint(std::size_t i, std::size_t j, const Rational& w,
                                   std::size_t dim) {
    Constraint c;
    c.a.assign(dim, Rational(0));
    c.rel = Rel::le;
    std::size_t ti = i / 2, tj = j / 2;
    if (ti == tj) {
      // unary: 2*(+-x) <= w
      c.a[ti] = i % 2 == 0 ? Rational(1) : Rational(-1);
      c.b = w / Rational(2);
    } else {
      c.a[ti] = i % 2 == 0 ? Rational(1) : Rational(-1);
      Rational cj = j % 2 == 0 ? Rational(1) : Rational(-1);
      c.a[tj] = -cj;
      c.b = w;
    }
    c.normalize();
    return c;
  }

  // (from, to, weight) of the octagonal inequality; domain_form otherwise.
  static std::tuple<std::size_t, std::size_t, Rational> oct_arc_of(const Constraint& c) {
    if (c.rel == Rel::lt)
      throw Error(Errc::domain_form,
                  "octagonal shapes take non-strict constraints only: " + c.str());
    if (c.rel == Rel::eq)
      throw Error(Errc::domain_form, "OctShape: expand equalities before arc mapping");
    std::vector<std::pair<std::size_t, Rational>> nz;
    for (std::size_t t = 0; t < c.a.size(); ++t)
      if (!c.a[t].is_zero())
        nz.emplace_back(t, c.a[t]);
    const Rational one(1), minus_one(-1);
    auto pos = [](std::size_t t) { return 2 * t; };
    auto neg = [](std::size_t t) { return 2 * t + 1; };
    if (nz.size() == 1) {
      auto [t, s] = nz[0];
      if (s == one)
        return {pos(t), neg(t), c.b * Rational(2)};
      if (s == minus_one)
        return {neg(t), pos(t), c.b * Rational(2)};
    } else if (nz.size() == 2) {
      auto [t, st] = nz[0];
      auto [u, su] = nz[1];
      if (st == one && su == minus_one)
        return {pos(t), pos(u), c.b};
      if (st == minus_one && su == one)
        return {pos(u), pos(t), c.b};
      if (st == one && su == one)
        return {pos(t), neg(u), c.b};
      if (st == minus_one && su == minus_one)
        return {neg(t), pos(u), c.b};
    }
    throw Error(Errc::domain_form, "not an octagonal constraint: " + c.str());
  }

private:
  static const OctGraph& require_nonempty(const std::optional<OctGraph>& g) {
    if (!g)
      throw Error(Errc::precondition, "OctShape: empty shape has no graph");
    return *g;
  }

  std::size_t dim_;
  std::optional<OctGraph> closed_;
  std::optional<OctGraph> reduced_;
};

using OctShape = OctShapeT<RationalWeightPolicy>;
using IntOctShape = OctShapeT<IntegerWeightPolicy>;

template <class P>
bool is_empty(const OctShapeT<P>& s) {
  return s.is_empty();
}

template <class P>
bool contains(const OctShapeT<P>& outer, const OctShapeT<P>& inner) {
  require_same_dim(outer.dim(), inner.dim(), "OctShape::contains");
  if (inner.is_empty())
    return true;
  if (outer.is_empty())
    return false;
  return leq(inner.closed_graph(), outer.closed_graph());
}

template <class P>
OctShapeT<P> join(const OctShapeT<P>& a, const OctShapeT<P>& b) {
  require_same_dim(a.dim(), b.dim(), "OctShape::join");
  if (a.is_empty())
    return b;
  if (b.is_empty())
    return a;
  return OctShapeT<P>::from_graph(a.dim(), oct_lub(a.closed_graph(), b.closed_graph()));
}

template <class P>
OctShapeT<P> meet(const OctShapeT<P>& a, const OctShapeT<P>& b) {
  require_same_dim(a.dim(), b.dim(), "OctShape::meet");
  if (a.is_empty() || b.is_empty())
    return OctShapeT<P>::empty(a.dim());
  return OctShapeT<P>::from_graph(a.dim(), oct_glb(a.closed_graph(), b.closed_graph()));
}

template <class P>
bool equals(const OctShapeT<P>& a, const OctShapeT<P>& b) {
  return contains(a, b) && contains(b, a);
}

namespace detail {

// lhs + slack <= rhs for integer shapes, lhs < rhs for rational ones
// (slack is 0 there).
template <class P>
bool oct_condition(const ExtRational& lhs, const Rational& slack, const ExtRational& rhs) {
  if constexpr (P::integral)
    return lhs + ExtRational(slack) <= rhs;
  else
    return lhs < rhs;
}

template <class P>
Rational oct_eps(std::size_t from, std::size_t to) {
  if constexpr (P::integral)
    return to == OctGraph::bar(from) ? Rational(2) : Rational(1);
  else
    return Rational(0);
}

} // namespace detail

namespace detail {

// All eight theorem conditions for one arc pair, evaluated over the closed
// input graphs and their least upper bound g.
template <class P>
bool oct_conditions_hold(const OctGraph& g1, const OctGraph& g2, const OctGraph& g,
                         std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
  const Rational two(2);
  auto B = [](std::size_t x) { return OctGraph::bar(x); };
  const Rational eij = oct_eps<P>(i, j);
  const Rational ekl = oct_eps<P>(k, l);
  const ExtRational& w1 = g1.weight(i, j);
  const ExtRational& w2 = g2.weight(k, l);
  if (!w1.is_finite() || !w2.is_finite())
    return false;
  const ExtRational s = w1 + w2;
  const ExtRational s1 = ExtRational(two * w1.value()) + w2;
  const ExtRational s2 = w1 + ExtRational(two * w2.value());
  return oct_condition<P>(w1, eij, g2.weight(i, j)) &&                                   // (1a)
         oct_condition<P>(w2, ekl, g1.weight(k, l)) &&                                   // (1b)
         oct_condition<P>(s, eij + ekl, g.weight(i, l) + g.weight(k, j)) &&              // (2a)
         oct_condition<P>(s, eij + ekl, g.weight(i, B(k)) + g.weight(B(j), l)) &&        // (2b)
         oct_condition<P>(s1, two * eij + ekl,
                          g.weight(i, l) + g.weight(i, B(k)) + g.weight(B(j), j)) &&     // (3a)
         oct_condition<P>(s1, two * eij + ekl,
                          g.weight(k, j) + g.weight(B(j), l) + g.weight(i, B(i))) &&     // (3b)
         oct_condition<P>(s2, eij + two * ekl,
                          g.weight(i, l) + g.weight(B(j), l) + g.weight(k, B(k))) &&     // (4a)
         oct_condition<P>(s2, eij + two * ekl,
                          g.weight(k, j) + g.weight(i, B(k)) + g.weight(B(l), l));       // (4b)
}

} // namespace detail

template <class P>
ArcDecision detect_exact_join_oct(const OctShapeT<P>& o1, const OctShapeT<P>& o2) {
  require_same_dim(o1.dim(), o2.dim(), "detect_exact_join_oct");
  if (o1.is_empty() || o2.is_empty())
    return ArcDecision::exact_join();
  const OctGraph& g1 = o1.closed_graph();
  const OctGraph& g2 = o2.closed_graph();
  if (leq(g1, g2) || leq(g2, g1))
    return ArcDecision::exact_join();

  OctGraph g = oct_lub(g1, g2);
  auto B = [](std::size_t x) { return OctGraph::bar(x); };
  for (auto [i, j] : o1.reduced_graph().arcs()) {
    if (!detail::oct_condition<P>(g1.weight(i, j), detail::oct_eps<P>(i, j),
                                  g2.weight(i, j))) // (1a), cheap first-fail filter
      continue;
    for (auto [k, l] : o2.reduced_graph().arcs()) {
      if (detail::oct_conditions_hold<P>(g1, g2, g, i, j, k, l)) {
        bool disjoint = (i == l && j == k) || (i == B(k) && j == B(l));
        return ArcDecision::inexact(ArcWitness{i, j, k, l, disjoint});
      }
    }
  }
  return ArcDecision::exact_join();
}

// The proof's separating-shape construction for octagons.
template <class P>
SeparatingWitness<OctShapeT<P>> build_separating_witness_oct(const OctShapeT<P>& o1,
                                                             const OctShapeT<P>& o2,
                                                             std::size_t i, std::size_t j,
                                                             std::size_t k, std::size_t l) {
  require_same_dim(o1.dim(), o2.dim(), "build_separating_witness_oct");
  if (o1.is_empty() || o2.is_empty())
    throw Error(Errc::precondition, "build_separating_witness_oct: empty input");
  if (!o1.reduced_graph().has_arc(i, j) || !o2.reduced_graph().has_arc(k, l))
    throw Error(Errc::precondition,
                "build_separating_witness_oct: indices are not reduction arcs");
  const OctGraph& g1 = o1.closed_graph();
  const OctGraph& g2 = o2.closed_graph();
  OctGraph g = oct_lub(g1, g2);
  auto B = [](std::size_t x) { return OctGraph::bar(x); };
  if (!detail::oct_conditions_hold<P>(g1, g2, g, i, j, k, l))
    throw Error(Errc::precondition, "build_separating_witness_oct: tuple fails the conditions");
  const Rational w1 = g1.weight(i, j).value();
  const Rational w2 = g2.weight(k, l).value();
  const Rational two(2);

  SeparatingWitness<OctShapeT<P>> out;
  if ((i == l && j == k) || (i == B(k) && j == B(l))) {
    out.inputs_disjoint = true;
    return out;
  }

  Rational eps_ij(1), eps_kl(1);
  if constexpr (P::integral) {
    eps_ij = detail::oct_eps<P>(i, j);
    eps_kl = detail::oct_eps<P>(k, l);
  } else {
    bool have = false;
    Rational eps(1);
    auto feed = [&](const ExtRational& rhs, const Rational& lhs, long div) {
      if (!rhs.is_finite())
        return;
      Rational cand = (rhs.value() - lhs) / Rational(div);
      if (!have || cand < eps) {
        eps = cand;
        have = true;
      }
    };
    feed(g.weight(i, j), w1, 1);
    feed(g.weight(k, l), w2, 1);
    feed(g.weight(i, l) + g.weight(k, j), w1 + w2, 2);
    feed(g.weight(i, B(k)) + g.weight(B(j), l), w1 + w2, 2);
    feed(g.weight(i, l) + g.weight(i, B(k)) + g.weight(B(j), j), two * w1 + w2, 3);
    feed(g.weight(k, j) + g.weight(B(j), l) + g.weight(i, B(i)), two * w1 + w2, 3);
    feed(g.weight(i, l) + g.weight(B(j), l) + g.weight(k, B(k)), w1 + two * w2, 3);
    feed(g.weight(k, j) + g.weight(i, B(k)) + g.weight(B(l), l), w1 + two * w2, 3);
    eps_ij = eps_kl = eps;
  }

  OctGraph gp = g;
  gp.set_weight(j, i, ExtRational(-w1 - eps_ij)); // twin (bar i, bar j) shares the cell
  gp.set_weight(l, k, ExtRational(-w2 - eps_kl));
  out.shape = OctShapeT<P>::from_graph(o1.dim(), gp);
  if (out.shape->is_empty())
    throw Error(Errc::precondition, "build_separating_witness_oct: construction collapsed");
  return out;
}

template <class P>
bool verify_separating_witness_oct(const OctShapeT<P>& o1, const OctShapeT<P>& o2,
                                   const SeparatingWitness<OctShapeT<P>>& w) {
  if (w.inputs_disjoint)
    return meet(o1, o2).is_empty();
  if (!w.shape || w.shape->is_empty())
    return false;
  OctGraph g = oct_lub(o1.closed_graph(), o2.closed_graph());
  if (!leq(w.shape->closed_graph(), g))
    return false;
  return meet(*w.shape, o1).is_empty() && meet(*w.shape, o2).is_empty();
}

template <class P>
bool exact_join(const OctShapeT<P>& a, const OctShapeT<P>& b) {
  return detect_exact_join_oct(a, b).exact;
}

template <class P>
std::size_t dim(const OctShapeT<P>& s) {
  return s.dim();
}

template <class P>
std::string to_text(const OctShapeT<P>& s) {
  return s.str();
}

} // namespace exactjoin
