// Copyright (c) exactjoin contributors.
// SPDX-License-Identifier: Apache-2.0
//
// Topologically closed convex polyhedra kept in double description. The
// constraint side lives in dimension n; conversion homogenizes into a cone
// in dimension n+1 (last coordinate xi >= 0), runs the DD engine, and maps
// cone rays back: xi > 0 rays are points, xi = 0 rays are rays, lines come
// out as ray pairs. Both descriptions are minimized at construction.

#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "exactjoin/dd.hpp"
#include "exactjoin/decision.hpp"
#include "exactjoin/errors.hpp"
#include "exactjoin/linear.hpp"

namespace exactjoin {

// Divide by the absolute value of the first nonzero coordinate, so that two
// vectors with the same direction compare equal.
inline Vec canonical_ray(Vec r) {
  for (const auto& q : r)
    if (!q.is_zero()) {
      Rational scale = q.abs();
      for (auto& x : r)
        x /= scale;
      return r;
    }
  throw Error(Errc::precondition, "canonical_ray: zero vector");
}

struct GeneratorSystem {
  std::vector<PointVec> points;
  std::vector<Vec> rays; // canonicalized, duplicate-free

  bool empty() const { return points.empty(); }

  void add_point(PointVec p) { insert_unique(points, std::move(p)); }
  void add_ray(Vec r) { insert_unique(rays, canonical_ray(std::move(r))); }

  void add_all(const GeneratorSystem& o) {
    for (const auto& p : o.points)
      add_point(p);
    for (const auto& r : o.rays)
      add_ray(r);
  }

  static void insert_unique(std::vector<Vec>& set, Vec v) {
    auto it = std::lower_bound(set.begin(), set.end(), v, [](const Vec& a, const Vec& b) {
      return compare_vec(a, b) < 0;
    });
    if (it == set.end() || compare_vec(*it, v) != 0)
      set.insert(it, std::move(v));
  }

  std::string str() const {
    std::string s = "cpoly_gen {";
    for (const auto& p : points)
      s += " point" + vec_to_text(p) + ";";
    for (const auto& r : rays)
      s += " ray" + vec_to_text(r) + ";";
    return s + " }";
  }
};

struct ConversionResult {
  bool empty = false;
  GeneratorSystem gs;
};

// Constraint system (non-strict, equalities allowed) to minimized
// generator system.
inline ConversionResult convert(const ConstraintSystem& cs) {
  const std::size_t n = cs.dim();
  DDCone cone(n + 1);
  {
    Vec xi(n + 1, Rational(0));
    xi[n] = Rational(-1); // xi >= 0
    cone.add_constraint(xi);
  }
  for (const Constraint& c : cs.as_inequalities()) {
    if (c.rel == Rel::lt)
      throw Error(Errc::domain_form, "closed polyhedron: strict constraint " + c.str());
    Vec h(n + 1);
    for (std::size_t i = 0; i < n; ++i)
      h[i] = c.a[i];
    h[n] = -c.b;
    cone.add_constraint(h);
  }

  ConversionResult out;
  for (const Vec& r : cone.rays()) {
    if (r[n].is_zero()) {
      Vec dir(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(n));
      out.gs.add_ray(std::move(dir));
    } else {
      PointVec p(n);
      for (std::size_t i = 0; i < n; ++i)
        p[i] = r[i] / r[n];
      out.gs.add_point(std::move(p));
    }
  }
  for (const Vec& l : cone.lines()) {
    if (!l[n].is_zero())
      throw Error(Errc::precondition, "convert: line escaping xi >= 0");
    Vec dir(l.begin(), l.begin() + static_cast<std::ptrdiff_t>(n));
    Vec neg(n);
    for (std::size_t i = 0; i < n; ++i)
      neg[i] = -dir[i];
    out.gs.add_ray(std::move(dir));
    out.gs.add_ray(std::move(neg));
  }
  if (out.gs.points.empty()) {
    out.empty = true;
    out.gs = GeneratorSystem{};
  }
  return out;
}

// Non-empty generator system to minimized constraint system (by duality:
// the homogenized generators act as the constraints of the polar cone).
inline ConstraintSystem convert(const GeneratorSystem& gs, std::size_t n) {
  if (gs.empty())
    throw Error(Errc::precondition, "convert: empty generator system");
  DDCone cone(n + 1);
  for (const PointVec& p : gs.points) {
    Vec h(n + 1);
    for (std::size_t i = 0; i < n; ++i)
      h[i] = p[i];
    h[n] = Rational(1);
    cone.add_constraint(h);
  }
  for (const Vec& r : gs.rays) {
    Vec h(n + 1, Rational(0));
    for (std::size_t i = 0; i < n; ++i)
      h[i] = r[i];
    cone.add_constraint(h);
  }

  ConstraintSystem cs(n);
  auto emit = [&](const Vec& y, Rel rel) {
    Constraint c;
    c.a.assign(y.begin(), y.begin() + static_cast<std::ptrdiff_t>(n));
    if (is_zero_vec(c.a))
      return; // trivial 0 <= b
    c.b = -y[n];
    c.rel = rel;
    cs.add(std::move(c));
  };
  for (const Vec& y : cone.rays())
    emit(y, Rel::le);
  for (const Vec& y : cone.lines())
    emit(y, Rel::eq);
  return cs;
}

class CPolyhedron {
public:
  static CPolyhedron empty(std::size_t dim) { return CPolyhedron(dim); }

  static CPolyhedron universe(std::size_t dim) {
    return from_constraints(ConstraintSystem(dim));
  }

  static CPolyhedron from_constraints(const ConstraintSystem& cs) {
    CPolyhedron p(cs.dim());
    ConversionResult conv = convert(cs);
    if (conv.empty)
      return p;
    p.empty_ = false;
    p.gs_ = std::move(conv.gs);
    p.cs_ = convert(p.gs_, p.dim_);
    return p;
  }

  static CPolyhedron from_generators(const GeneratorSystem& gs, std::size_t dim) {
    CPolyhedron p(dim);
    if (gs.empty())
      return p;
    p.empty_ = false;
    p.cs_ = convert(gs, dim);
    ConversionResult conv = convert(p.cs_);
    if (conv.empty)
      throw Error(Errc::precondition, "CPolyhedron: inconsistent double description");
    p.gs_ = std::move(conv.gs);
    return p;
  }

  std::size_t dim() const { return dim_; }
  bool is_empty() const { return empty_; }
  const ConstraintSystem& constraint_system() const { return cs_; }
  const GeneratorSystem& generator_system() const { return gs_; }

  bool contains_point(const PointVec& p) const {
    require_same_dim(p.size(), dim_, "CPolyhedron::contains_point");
    return !empty_ && satisfies_all(p, cs_);
  }

  // r is a ray of the polyhedron.
  bool subsumes_ray(const Vec& r) const {
    if (empty_)
      return false;
    for (const Constraint& c : cs_.as_inequalities())
      if (dot(c.a, r).sign() > 0)
        return false;
    return true;
  }

  std::string str() const {
    if (empty_)
      return "cpoly { dim " + std::to_string(dim_) + "; x1 <= -1; -x1 <= 0; }";
    return cs_.str("cpoly");
  }

private:
  explicit CPolyhedron(std::size_t dim) : dim_(dim), empty_(true), cs_(dim) {}

  std::size_t dim_;
  bool empty_;
  ConstraintSystem cs_;
  GeneratorSystem gs_;
};

inline bool is_empty(const CPolyhedron& p) { return p.is_empty(); }

inline bool contains(const CPolyhedron& outer, const CPolyhedron& inner) {
  require_same_dim(outer.dim(), inner.dim(), "CPolyhedron::contains");
  if (inner.is_empty())
    return true;
  if (outer.is_empty())
    return false;
  for (const PointVec& p : inner.generator_system().points)
    if (!outer.contains_point(p))
      return false;
  for (const Vec& r : inner.generator_system().rays)
    if (!outer.subsumes_ray(r))
      return false;
  return true;
}

inline bool equals(const CPolyhedron& a, const CPolyhedron& b) {
  return contains(a, b) && contains(b, a);
}

inline CPolyhedron join(const CPolyhedron& a, const CPolyhedron& b) {
  require_same_dim(a.dim(), b.dim(), "CPolyhedron::join");
  if (a.is_empty())
    return b;
  if (b.is_empty())
    return a;
  GeneratorSystem gs = a.generator_system();
  gs.add_all(b.generator_system());
  return CPolyhedron::from_generators(gs, a.dim());
}

inline CPolyhedron meet(const CPolyhedron& a, const CPolyhedron& b) {
  require_same_dim(a.dim(), b.dim(), "CPolyhedron::meet");
  if (a.is_empty() || b.is_empty())
    return CPolyhedron::empty(a.dim());
  ConstraintSystem cs = a.constraint_system();
  cs.add_all(b.constraint_system());
  return CPolyhedron::from_constraints(cs);
}

// Whether the polyhedron has an element violating beta (tested on the
// generator description; rays violate when they improve <a, x> upward).
inline bool violates(const CPolyhedron& p, const Constraint& beta) {
  if (p.is_empty())
    return false;
  for (const PointVec& q : p.generator_system().points)
    if (!satisfies(q, beta))
      return true;
  for (const Vec& r : p.generator_system().rays)
    if (dot(beta.a, r).sign() > 0)
      return true;
  return false;
}

struct PolyWitness {
  bool swapped = false; // roles of the inputs exchanged by the size heuristic
  Constraint beta;      // constraint of the first-role polyhedron
  bool generator_is_ray = false;
  Vec generator;

  std::string str() const {
    std::string s = "constraint " + beta.str() + "; ";
    s += generator_is_ray ? "ray " : "point ";
    s += vec_to_text(generator);
    if (swapped)
      s += " [roles swapped]";
    return s;
  }
};

using PolyDecision = Decision<PolyWitness>;

namespace detail {

inline PolyDecision detect_closed_oriented(const CPolyhedron& p1, const CPolyhedron& p2,
                                           bool swapped) {
  for (const Constraint& beta : p1.constraint_system().as_inequalities()) {
    if (!violates(p2, beta))
      continue;
    for (const PointVec& g : p1.generator_system().points) {
      if (!saturates_point(g, beta))
        continue;
      if (!p2.contains_point(g))
        return PolyDecision::inexact(PolyWitness{swapped, beta, false, g});
    }
    for (const Vec& g : p1.generator_system().rays) {
      if (!saturates_ray(g, beta))
        continue;
      if (!p2.subsumes_ray(g))
        return PolyDecision::inexact(PolyWitness{swapped, beta, true, g});
    }
  }
  return PolyDecision::exact_join();
}

} // namespace detail

inline PolyDecision detect_exact_join_closed(const CPolyhedron& p1, const CPolyhedron& p2) {
  require_same_dim(p1.dim(), p2.dim(), "detect_exact_join_closed");
  if (p1.is_empty() || p2.is_empty())
    return PolyDecision::exact_join();
  // The bound is asymmetric in the descriptions' sizes; put the smaller
  // constraint*generator product in the leading role.
  std::size_t lm1 = p1.constraint_system().size() *
                    (p1.generator_system().points.size() + p1.generator_system().rays.size());
  std::size_t lm2 = p2.constraint_system().size() *
                    (p2.generator_system().points.size() + p2.generator_system().rays.size());
  if (lm1 > lm2)
    return detail::detect_closed_oriented(p2, p1, true);
  return detail::detect_closed_oriented(p1, p2, false);
}

// Separating point for an accepted witness: on the segment from the witness
// point into the violating polyhedron, just past the boundary hyperplane of
// both. Lies in the join but in neither input.
inline PointVec certify_closed_witness(const CPolyhedron& p1_in, const CPolyhedron& p2_in,
                                       const PolyWitness& w) {
  const CPolyhedron& p1 = w.swapped ? p2_in : p1_in;
  const CPolyhedron& p2 = w.swapped ? p1_in : p2_in;
  const Constraint& beta = w.beta;

  // A point of p2 violating beta; push a generator point along a violating
  // ray when no generator point violates directly.
  PointVec p2_violator;
  {
    bool found = false;
    for (const PointVec& q : p2.generator_system().points)
      if (!satisfies(q, beta)) {
        p2_violator = q;
        found = true;
        break;
      }
    if (!found) {
      for (const Vec& r : p2.generator_system().rays) {
        if (!(dot(beta.a, r).sign() > 0))
          continue;
        const PointVec& base = p2.generator_system().points.front();
        Rational num = beta.b - dot(beta.a, base);
        Rational rho = num / dot(beta.a, r) + Rational(1);
        if (rho.sign() < 0)
          rho = Rational(1);
        p2_violator.assign(base.begin(), base.end());
        for (std::size_t i = 0; i < p2_violator.size(); ++i)
          p2_violator[i] += rho * r[i];
        found = true;
        break;
      }
    }
    if (!found)
      throw Error(Errc::precondition, "certify_closed_witness: beta not violated");
  }

  // Start of the segment: the witness point itself, or for a ray witness
  // the proof's translated point p' + rho*r pushed out of p2.
  PointVec start;
  Constraint beta_eff = beta;
  if (!w.generator_is_ray) {
    start = w.generator;
  } else {
    const Vec& ray = w.generator;
    // Supporting constraint with the same normal, saturated by an actual
    // generator point of p1 (beta itself may be redundant).
    const auto& pts = p1.generator_system().points;
    std::size_t best = 0;
    Rational best_v = dot(beta.a, pts[0]);
    for (std::size_t t = 1; t < pts.size(); ++t) {
      Rational v = dot(beta.a, pts[t]);
      if (v > best_v) {
        best_v = v;
        best = t;
      }
    }
    beta_eff.b = best_v; // saturated by pts[best] and by the ray
    beta_eff.normalize();
    start = pts[best];
    // Push along the ray until outside p2.
    Rational rho(0);
    for (const Constraint& c2 : p2.constraint_system().as_inequalities()) {
      Rational dr = dot(c2.a, ray);
      if (dr.sign() <= 0)
        continue;
      Rational need = (c2.b - dot(c2.a, start)) / dr + Rational(1);
      if (need > rho)
        rho = need;
    }
    if (rho.is_zero() && p2.contains_point(start))
      throw Error(Errc::precondition, "certify_closed_witness: ray subsumed by p2");
    for (std::size_t i = 0; i < start.size(); ++i)
      start[i] += rho * ray[i];
  }
  if (p2.contains_point(start))
    throw Error(Errc::precondition, "certify_closed_witness: witness inside p2");

  // Constraint of p2 violated by the start point; cut the segment at its
  // hyperplane and take the midpoint of the outside part.
  for (const Constraint& c2 : p2.constraint_system().as_inequalities()) {
    if (satisfies(start, c2))
      continue;
    Rational vs = dot(c2.a, start);
    Rational vv = dot(c2.a, p2_violator);
    Rational t = (c2.b - vs) / (vv - vs); // in (0, 1]
    Rational half_t = t / Rational(2);
    PointVec m(start.size());
    for (std::size_t i = 0; i < m.size(); ++i)
      m[i] = start[i] + half_t * (p2_violator[i] - start[i]);
    return m;
  }
  throw Error(Errc::precondition, "certify_closed_witness: no separating constraint");
}

inline bool exact_join(const CPolyhedron& a, const CPolyhedron& b) {
  return detect_exact_join_closed(a, b).exact;
}

inline std::size_t dim(const CPolyhedron& p) { return p.dim(); }

inline std::string to_text(const CPolyhedron& p) { return p.str(); }

} // namespace exactjoin
