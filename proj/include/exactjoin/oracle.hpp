// Copyright (c) exactjoin contributors.
// SPDX-License-Identifier: Apache-2.0
//
// Two independent exact-join oracles, used to validate the detection
// predicates against each other and against the domains' set semantics:
//
//  - grid enumeration: walks grid points of the join inside a bounding box;
//    a point outside both inputs falsifies exactness. Complete for integer
//    domains on bounded shapes with step 1, a falsifier otherwise.
//  - complement inclusion: join \ A = union over constraints beta of A of
//    (join meet not-beta); the join is exact iff every such piece is inside
//    B. Complete for every rational polyhedral domain via the NNC embedding.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "exactjoin/box.hpp"
#include "exactjoin/bd_shape.hpp"
#include "exactjoin/errors.hpp"
#include "exactjoin/interval.hpp"
#include "exactjoin/nnc_polyhedron.hpp"
#include "exactjoin/octagon.hpp"
#include "exactjoin/polyhedron.hpp"

namespace exactjoin {

// ---- embeddings into the NNC polyhedron domain ----

inline NncPolyhedron to_nnc(const NncPolyhedron& p) { return p; }

inline NncPolyhedron to_nnc(const CPolyhedron& p) {
  if (p.is_empty())
    return NncPolyhedron::empty(p.dim());
  return NncPolyhedron::from_constraints(p.constraint_system());
}

template <class P>
NncPolyhedron to_nnc(const BdShapeT<P>& s) {
  if (s.is_empty())
    return NncPolyhedron::empty(s.dim());
  return NncPolyhedron::from_constraints(s.constraint_system());
}

template <class P>
NncPolyhedron to_nnc(const OctShapeT<P>& s) {
  if (s.is_empty())
    return NncPolyhedron::empty(s.dim());
  return NncPolyhedron::from_constraints(s.constraint_system());
}

inline NncPolyhedron to_nnc(const Box<NncInterval>& b) {
  if (b.is_empty())
    return NncPolyhedron::empty(b.dim());
  ConstraintSystem cs(b.dim());
  for (std::size_t i = 0; i < b.dim(); ++i) {
    const NncInterval& iv = b.component(i);
    if (iv.lower().kind == BoundKind::finite) {
      Constraint c;
      c.a.assign(b.dim(), Rational(0));
      c.a[i] = Rational(-1);
      c.b = -iv.lower().value;
      c.rel = iv.lower().open ? Rel::lt : Rel::le;
      cs.add(std::move(c));
    }
    if (iv.upper().kind == BoundKind::finite) {
      Constraint c;
      c.a.assign(b.dim(), Rational(0));
      c.a[i] = Rational(1);
      c.b = iv.upper().value;
      c.rel = iv.upper().open ? Rel::lt : Rel::le;
      cs.add(std::move(c));
    }
  }
  return NncPolyhedron::from_constraints(cs);
}

// ---- complement-inclusion oracle ----

// whole \ (union of parts) == empty, by iterated constraint complementing.
inline bool nnc_union_covers(const std::vector<NncPolyhedron>& parts,
                             const NncPolyhedron& whole) {
  std::vector<NncPolyhedron> regions;
  if (!whole.is_empty())
    regions.push_back(whole);
  for (const NncPolyhedron& part : parts) {
    if (regions.empty())
      return true;
    std::vector<NncPolyhedron> next;
    for (const NncPolyhedron& reg : regions) {
      if (part.is_empty()) {
        next.push_back(reg);
        continue;
      }
      for (const Constraint& beta : part.constraint_system().constraints()) {
        NncPolyhedron out = meet_constraint(reg, beta.complement());
        if (!out.is_empty())
          next.push_back(std::move(out));
      }
    }
    regions = std::move(next);
  }
  return regions.empty();
}

enum class OracleVerdict { exact, inexact };

inline const char* verdict_name(OracleVerdict v) {
  return v == OracleVerdict::exact ? "exact" : "inexact";
}

// Exact for every rational polyhedral domain (boxes, BD, octagons,
// polyhedra embed faithfully).
template <class D>
OracleVerdict oracle_complement_inclusion(const D& a, const D& b) {
  NncPolyhedron pa = to_nnc(a);
  NncPolyhedron pb = to_nnc(b);
  return separating_point(pa, pb) ? OracleVerdict::inexact : OracleVerdict::exact;
}

// ---- grid oracle ----

struct GridBox {
  std::vector<Rational> lo, hi; // inclusive, finite
  std::size_t dim() const { return lo.size(); }
};

// Finite per-dimension extent of a shape's closure, when bounded.
inline std::optional<GridBox> bounding_extent(const Box<NncInterval>& b) {
  if (b.is_empty())
    return GridBox{{}, {}};
  GridBox g;
  for (std::size_t i = 0; i < b.dim(); ++i) {
    const auto& iv = b.component(i);
    if (iv.lower().kind != BoundKind::finite || iv.upper().kind != BoundKind::finite)
      return std::nullopt;
    g.lo.push_back(iv.lower().value);
    g.hi.push_back(iv.upper().value);
  }
  return g;
}

inline std::optional<GridBox> bounding_extent(const Box<IntInterval>& b) {
  if (b.is_empty())
    return GridBox{{}, {}};
  GridBox g;
  for (std::size_t i = 0; i < b.dim(); ++i) {
    const auto& iv = b.component(i);
    if (iv.lower().kind != BoundKind::finite || iv.upper().kind != BoundKind::finite)
      return std::nullopt;
    g.lo.push_back(iv.lower().value);
    g.hi.push_back(iv.upper().value);
  }
  return g;
}

template <class P>
std::optional<GridBox> bounding_extent(const BdShapeT<P>& s) {
  if (s.is_empty())
    return GridBox{{}, {}};
  GridBox g;
  const WeightedGraph& w = s.closed_graph();
  for (std::size_t i = 1; i <= s.dim(); ++i) {
    if (!w.has_arc(i, 0) || !w.has_arc(0, i))
      return std::nullopt;
    g.lo.push_back(-w.weight(0, i).value());
    g.hi.push_back(w.weight(i, 0).value());
  }
  return g;
}

template <class P>
std::optional<GridBox> bounding_extent(const OctShapeT<P>& s) {
  if (s.is_empty())
    return GridBox{{}, {}};
  GridBox g;
  const OctGraph& w = s.closed_graph();
  const Rational two(2);
  for (std::size_t t = 0; t < s.dim(); ++t) {
    std::size_t pos = 2 * t, neg = 2 * t + 1;
    if (!w.has_arc(pos, neg) || !w.has_arc(neg, pos))
      return std::nullopt;
    g.hi.push_back(w.weight(pos, neg).value() / two);
    g.lo.push_back(-(w.weight(neg, pos).value() / two));
  }
  return g;
}

template <class Poly>
std::optional<GridBox> polyhedral_extent(const Poly& p) {
  if (p.is_empty())
    return GridBox{{}, {}};
  if (!p.generator_system().rays.empty())
    return std::nullopt;
  GridBox g;
  auto feed = [&](const PointVec& q, bool first) {
    for (std::size_t i = 0; i < q.size(); ++i) {
      if (first) {
        g.lo.push_back(q[i]);
        g.hi.push_back(q[i]);
      } else {
        if (q[i] < g.lo[i])
          g.lo[i] = q[i];
        if (q[i] > g.hi[i])
          g.hi[i] = q[i];
      }
    }
  };
  bool first = true;
  for (const PointVec& q : p.generator_system().points) {
    feed(q, first);
    first = false;
  }
  return g;
}

inline std::optional<GridBox> bounding_extent(const CPolyhedron& p) {
  return polyhedral_extent(p);
}
inline std::optional<GridBox> bounding_extent(const NncPolyhedron& p) {
  std::optional<GridBox> g = polyhedral_extent(p);
  if (!g || p.is_empty())
    return g;
  bool first = g->lo.empty();
  for (const PointVec& q : p.generator_system().closure_points) {
    for (std::size_t i = 0; i < q.size(); ++i) {
      if (first) {
        g->lo.push_back(q[i]);
        g->hi.push_back(q[i]);
      } else {
        if (q[i] < g->lo[i])
          g->lo[i] = q[i];
        if (q[i] > g->hi[i])
          g->hi[i] = q[i];
      }
    }
    first = false;
  }
  return g;
}

inline GridBox hull_extent(const GridBox& a, const GridBox& b) {
  if (a.dim() == 0)
    return b;
  if (b.dim() == 0)
    return a;
  GridBox g = a;
  for (std::size_t i = 0; i < g.dim(); ++i) {
    if (b.lo[i] < g.lo[i])
      g.lo[i] = b.lo[i];
    if (b.hi[i] > g.hi[i])
      g.hi[i] = b.hi[i];
  }
  return g;
}

// Enumerates grid points (lo + k*step per dimension) of the join of a and b
// inside the box; inexact iff some such point escapes both inputs. Domain
// plugs in through join(a, b) and member(shape, point).
template <class D, class Member>
OracleVerdict oracle_grid_impl(const D& a, const D& b, const D& jn, const Rational& step,
                               const GridBox& box, std::size_t dims, Member member) {
  if (step.sign() <= 0)
    throw Error(Errc::precondition, "oracle_grid: step must be positive");
  std::vector<long> counts(dims);
  for (std::size_t i = 0; i < dims; ++i) {
    Rational span = (box.hi[i] - box.lo[i]) / step;
    counts[i] = static_cast<long>(mpz_class(span.floor()).get_si()) + 1;
    if (counts[i] < 1)
      counts[i] = 1;
  }
  PointVec p(dims);
  std::vector<long> k(dims, 0);
  for (;;) {
    for (std::size_t i = 0; i < dims; ++i)
      p[i] = box.lo[i] + Rational(k[i]) * step;
    if (member(jn, p) && !member(a, p) && !member(b, p))
      return OracleVerdict::inexact;
    std::size_t d = 0;
    while (d < dims && ++k[d] >= counts[d]) {
      k[d] = 0;
      ++d;
    }
    if (d >= dims)
      break;
  }
  return OracleVerdict::exact;
}

template <class D>
OracleVerdict oracle_grid(const D& a, const D& b, const Rational& step,
                          std::optional<GridBox> box = std::nullopt) {
  D jn = join(a, b);
  if (is_empty(jn))
    return OracleVerdict::exact;
  if (!box) {
    auto ea = bounding_extent(a);
    auto eb = bounding_extent(b);
    if (!ea || !eb)
      throw Error(Errc::precondition, "oracle_grid: unbounded shape without a bounding box");
    box = hull_extent(*ea, *eb);
  }
  if (box->dim() == 0 && dim(a) > 0)
    return OracleVerdict::exact; // both inputs empty
  return oracle_grid_impl(a, b, jn, step, *box, dim(a),
                          [](const D& s, const PointVec& q) { return s.contains_point(q); });
}

// Box fast path: membership is componentwise, so one membership profile per
// dimension turns the scan into bit tests.
template <class Ival>
OracleVerdict oracle_grid(const Box<Ival>& a, const Box<Ival>& b, const Rational& step,
                          std::optional<GridBox> box = std::nullopt) {
  if (step.sign() <= 0)
    throw Error(Errc::precondition, "oracle_grid: step must be positive");
  Box<Ival> jn = join(a, b);
  if (jn.is_empty())
    return OracleVerdict::exact;
  if (!box) {
    auto ea = bounding_extent(a);
    auto eb = bounding_extent(b);
    if (!ea || !eb)
      throw Error(Errc::precondition, "oracle_grid: unbounded shape without a bounding box");
    box = hull_extent(*ea, *eb);
  }
  const std::size_t dims = a.dim();
  if (box->dim() == 0 && dims > 0)
    return OracleVerdict::exact;
  std::vector<std::vector<char>> in_a(dims), in_b(dims), in_j(dims);
  for (std::size_t i = 0; i < dims; ++i) {
    Rational v = box->lo[i];
    while (v <= box->hi[i]) {
      in_a[i].push_back(a.is_empty() ? 0 : a.component(i).contains(v));
      in_b[i].push_back(b.is_empty() ? 0 : b.component(i).contains(v));
      in_j[i].push_back(jn.component(i).contains(v));
      v += step;
    }
    if (in_j[i].empty())
      return OracleVerdict::exact;
  }
  // Walk grid points of the join; a point with membership lost in both
  // inputs is a witness.
  auto search = [&](auto&& self, std::size_t d, bool ia, bool ib) -> bool {
    if (d == dims)
      return !ia && !ib;
    for (std::size_t t = 0; t < in_j[d].size(); ++t) {
      if (!in_j[d][t])
        continue;
      if (self(self, d + 1, ia && in_a[d][t], ib && in_b[d][t]))
        return true;
    }
    return false;
  };
  return search(search, 0, true, true) ? OracleVerdict::inexact : OracleVerdict::exact;
}

// ---- k-way union-equality tests for full merging ----

template <class D>
bool exact_union_by_complement(const std::vector<D>& parts, const D& whole) {
  std::vector<NncPolyhedron> nnc_parts;
  nnc_parts.reserve(parts.size());
  for (const D& d : parts)
    nnc_parts.push_back(to_nnc(d));
  return nnc_union_covers(nnc_parts, to_nnc(whole));
}

inline bool exact_union(const std::vector<CPolyhedron>& parts, const CPolyhedron& whole) {
  return exact_union_by_complement(parts, whole);
}
inline bool exact_union(const std::vector<NncPolyhedron>& parts, const NncPolyhedron& whole) {
  return exact_union_by_complement(parts, whole);
}
inline bool exact_union(const std::vector<Box<NncInterval>>& parts,
                        const Box<NncInterval>& whole) {
  return exact_union_by_complement(parts, whole);
}
inline bool exact_union(const std::vector<BdShape>& parts, const BdShape& whole) {
  return exact_union_by_complement(parts, whole);
}
inline bool exact_union(const std::vector<OctShape>& parts, const OctShape& whole) {
  return exact_union_by_complement(parts, whole);
}

// Integer domains: enumerate the whole's integer points.
template <class D>
bool exact_union_by_grid(const std::vector<D>& parts, const D& whole) {
  if (is_empty(whole))
    return true;
  auto box = bounding_extent(whole);
  if (!box)
    throw Error(Errc::precondition, "exact_union: unbounded integer shape");
  const std::size_t dims = dim(whole);
  if (dims == 0)
    return true;
  std::vector<long> base(dims), counts(dims);
  for (std::size_t i = 0; i < dims; ++i) {
    long lo_int = -static_cast<long>(mpz_class((-box->lo[i]).floor()).get_si()); // ceil
    long hi_int = static_cast<long>(mpz_class(box->hi[i].floor()).get_si());
    base[i] = lo_int;
    counts[i] = hi_int - lo_int + 1;
    if (counts[i] < 1)
      return true; // no integer point in the extent
  }
  PointVec p(dims);
  std::vector<long> k(dims, 0);
  for (;;) {
    for (std::size_t i = 0; i < dims; ++i)
      p[i] = Rational(base[i] + k[i]);
    if (whole.contains_point(p)) {
      bool covered = false;
      for (const D& d : parts)
        if (d.contains_point(p)) {
          covered = true;
          break;
        }
      if (!covered)
        return false;
    }
    std::size_t d = 0;
    while (d < dims && ++k[d] >= counts[d]) {
      k[d] = 0;
      ++d;
    }
    if (d >= dims)
      break;
  }
  return true;
}

inline bool exact_union(const std::vector<Box<IntInterval>>& parts,
                        const Box<IntInterval>& whole) {
  return exact_union_by_grid(parts, whole);
}
inline bool exact_union(const std::vector<IntBdShape>& parts, const IntBdShape& whole) {
  return exact_union_by_grid(parts, whole);
}
inline bool exact_union(const std::vector<IntOctShape>& parts, const IntOctShape& whole) {
  return exact_union_by_grid(parts, whole);
}

} // namespace exactjoin
