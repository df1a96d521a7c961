// Copyright (c) exactjoin contributors.
// SPDX-License-Identifier: Apache-2.0
//
// Not-necessarily-closed polyhedra. Conversion reuses the closed DD engine
// through the usual slack-dimension encoding: a strict constraint
// <a, x> < b becomes <a, x> + eps <= b over 0 <= eps <= 1. Generator-side,
// a point maps to slack levels 1 and 0 (the 0 copy keeps the encoding
// closed downward, so facets never tilt against the slack axis), a closure
// point to slack level 0 only. Points of the encoded polyhedron with
// positive slack are points, those at slack 0 closure points.

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "exactjoin/decision.hpp"
#include "exactjoin/errors.hpp"
#include "exactjoin/linear.hpp"
#include "exactjoin/polyhedron.hpp"

namespace exactjoin {

struct ExtendedGeneratorSystem {
  std::vector<PointVec> points;
  std::vector<PointVec> closure_points;
  std::vector<Vec> rays;

  bool empty() const { return points.empty(); }

  void add_point(PointVec p) { GeneratorSystem::insert_unique(points, std::move(p)); }
  void add_closure_point(PointVec c) {
    GeneratorSystem::insert_unique(closure_points, std::move(c));
  }
  void add_ray(Vec r) { GeneratorSystem::insert_unique(rays, canonical_ray(std::move(r))); }

  void add_all(const ExtendedGeneratorSystem& o) {
    for (const auto& p : o.points)
      add_point(p);
    for (const auto& c : o.closure_points)
      add_closure_point(c);
    for (const auto& r : o.rays)
      add_ray(r);
  }

  // Closure points that are already points carry no extra information.
  void dedupe() {
    std::vector<PointVec> keep;
    for (auto& c : closure_points) {
      bool is_point = false;
      for (const auto& p : points)
        if (compare_vec(c, p) == 0) {
          is_point = true;
          break;
        }
      if (!is_point)
        keep.push_back(std::move(c));
    }
    closure_points = std::move(keep);
  }

  std::string str() const {
    std::string s = "nncpoly_gen {";
    for (const auto& p : points)
      s += " point" + vec_to_text(p) + ";";
    for (const auto& c : closure_points)
      s += " closure_point" + vec_to_text(c) + ";";
    for (const auto& r : rays)
      s += " ray" + vec_to_text(r) + ";";
    return s + " }";
  }
};

class NncPolyhedron {
public:
  static NncPolyhedron empty(std::size_t dim) { return NncPolyhedron(dim); }

  static NncPolyhedron universe(std::size_t dim) {
    return from_constraints(ConstraintSystem(dim));
  }

  static NncPolyhedron from_constraints(const ConstraintSystem& cs) {
    const std::size_t n = cs.dim();
    NncPolyhedron p(n);
    for (const Constraint& c : cs.as_inequalities())
      p.cs_.add(c);

    ConstraintSystem eps_cs(n + 1);
    for (const Constraint& c : p.cs_.constraints()) {
      Constraint ec;
      ec.a.assign(c.a.begin(), c.a.end());
      ec.a.push_back(c.rel == Rel::lt ? Rational(1) : Rational(0));
      ec.b = c.b;
      ec.rel = Rel::le;
      eps_cs.add(std::move(ec));
    }
    eps_cs.add(slack_bound(n, true));
    eps_cs.add(slack_bound(n, false));

    ConversionResult conv = convert(eps_cs);
    if (conv.empty)
      return p;
    p.extract_generators(conv.gs);
    if (p.egs_.empty()) {
      // only slack-0 points: no element admits positive slack, so the
      // described set is empty
      p.egs_ = ExtendedGeneratorSystem{};
      return p;
    }
    p.empty_ = false;
    return p;
  }

  static NncPolyhedron from_generators(const ExtendedGeneratorSystem& egs, std::size_t dim) {
    NncPolyhedron p(dim);
    if (egs.empty())
      return p;
    p.empty_ = false;
    p.egs_ = egs;
    p.egs_.dedupe();

    GeneratorSystem eps_gs;
    for (const PointVec& q : p.egs_.points) {
      eps_gs.add_point(with_slack(q, Rational(1)));
      eps_gs.add_point(with_slack(q, Rational(0)));
    }
    for (const PointVec& c : p.egs_.closure_points)
      eps_gs.add_point(with_slack(c, Rational(0)));
    for (const Vec& r : p.egs_.rays)
      eps_gs.add_ray(with_slack(r, Rational(0)));

    ConstraintSystem eps_cs = convert(eps_gs, dim + 1);
    for (const Constraint& ec : eps_cs.as_inequalities()) {
      Constraint c;
      c.a.assign(ec.a.begin(), ec.a.end() - 1);
      if (is_zero_vec(c.a))
        continue; // slack-axis bound, no x content
      const Rational& s = ec.a.back();
      if (s.sign() < 0)
        throw Error(Errc::precondition,
                    "NncPolyhedron: slack-negative facet in a downward-closed encoding");
      c.b = ec.b;
      c.rel = s.sign() > 0 ? Rel::lt : Rel::le;
      c.normalize();
      p.cs_.add(std::move(c));
    }
    return p;
  }

  std::size_t dim() const { return dim_; }
  bool is_empty() const { return empty_; }
  const ConstraintSystem& constraint_system() const { return cs_; }
  const ExtendedGeneratorSystem& generator_system() const { return egs_; }

  bool contains_point(const PointVec& p) const {
    require_same_dim(p.size(), dim_, "NncPolyhedron::contains_point");
    return !empty_ && satisfies_all(p, cs_);
  }

  // Membership in the topological closure.
  bool closure_contains_point(const PointVec& p) const {
    require_same_dim(p.size(), dim_, "NncPolyhedron::closure_contains_point");
    if (empty_)
      return false;
    for (const Constraint& c : cs_.constraints())
      if (!satisfies(p, c.weakened()))
        return false;
    return true;
  }

  bool subsumes_ray(const Vec& r) const {
    if (empty_)
      return false;
    for (const Constraint& c : cs_.constraints())
      if (dot(c.a, r).sign() > 0)
        return false;
    return true;
  }

  std::string str() const {
    if (empty_)
      return "nncpoly { dim " + std::to_string(dim_) + "; x1 <= -1; -x1 <= 0; }";
    return cs_.str("nncpoly");
  }

private:
  explicit NncPolyhedron(std::size_t dim) : dim_(dim), empty_(true), cs_(dim) {}

  static Constraint slack_bound(std::size_t n, bool lower) {
    Constraint c;
    c.a.assign(n + 1, Rational(0));
    c.a[n] = lower ? Rational(-1) : Rational(1); // -eps <= 0 resp. eps <= 1
    c.b = lower ? Rational(0) : Rational(1);
    c.rel = Rel::le;
    return c;
  }

  static Vec with_slack(const Vec& v, Rational s) {
    Vec out(v.begin(), v.end());
    out.push_back(std::move(s));
    return out;
  }

  void extract_generators(const GeneratorSystem& eps_gs) {
    for (const PointVec& q : eps_gs.points) {
      PointVec x(q.begin(), q.end() - 1);
      if (q.back().sign() > 0)
        egs_.add_point(std::move(x));
      else
        egs_.add_closure_point(std::move(x));
    }
    for (const Vec& r : eps_gs.rays) {
      if (!r.back().is_zero())
        throw Error(Errc::precondition, "NncPolyhedron: ray with nonzero slack");
      egs_.add_ray(Vec(r.begin(), r.end() - 1));
    }
    egs_.dedupe();
  }

  std::size_t dim_;
  bool empty_;
  ConstraintSystem cs_; // <= and < only, equalities expanded
  ExtendedGeneratorSystem egs_;
};

inline bool is_empty(const NncPolyhedron& p) { return p.is_empty(); }

// P inside the solution set of one constraint, decided on generators.
inline bool inside_halfspace(const NncPolyhedron& p, const Constraint& beta) {
  if (p.is_empty())
    return true;
  const auto& egs = p.generator_system();
  for (const Vec& r : egs.rays)
    if (dot(beta.a, r).sign() > 0)
      return false;
  for (const PointVec& c : egs.closure_points)
    if (dot(beta.a, c) > beta.b)
      return false;
  for (const PointVec& q : egs.points) {
    Rational v = dot(beta.a, q);
    if (v > beta.b || (beta.rel == Rel::lt && v == beta.b))
      return false;
  }
  return true;
}

inline bool violates(const NncPolyhedron& p, const Constraint& beta) {
  return !p.is_empty() && !inside_halfspace(p, beta);
}

inline bool contains(const NncPolyhedron& outer, const NncPolyhedron& inner) {
  require_same_dim(outer.dim(), inner.dim(), "NncPolyhedron::contains");
  if (inner.is_empty())
    return true;
  if (outer.is_empty())
    return false;
  for (const Constraint& beta : outer.constraint_system().constraints())
    if (!inside_halfspace(inner, beta))
      return false;
  return true;
}

inline bool equals(const NncPolyhedron& a, const NncPolyhedron& b) {
  return contains(a, b) && contains(b, a);
}

inline NncPolyhedron join(const NncPolyhedron& a, const NncPolyhedron& b) {
  require_same_dim(a.dim(), b.dim(), "NncPolyhedron::join");
  if (a.is_empty())
    return b;
  if (b.is_empty())
    return a;
  ExtendedGeneratorSystem egs = a.generator_system();
  egs.add_all(b.generator_system());
  return NncPolyhedron::from_generators(egs, a.dim());
}

inline NncPolyhedron meet(const NncPolyhedron& a, const NncPolyhedron& b) {
  require_same_dim(a.dim(), b.dim(), "NncPolyhedron::meet");
  if (a.is_empty() || b.is_empty())
    return NncPolyhedron::empty(a.dim());
  ConstraintSystem cs = a.constraint_system();
  cs.add_all(b.constraint_system());
  return NncPolyhedron::from_constraints(cs);
}

inline NncPolyhedron meet_constraint(const NncPolyhedron& a, const Constraint& beta) {
  ConstraintSystem cs = a.constraint_system();
  cs.add(beta);
  return NncPolyhedron::from_constraints(cs);
}

inline NncPolyhedron topological_closure(const NncPolyhedron& p) {
  if (p.is_empty())
    return p;
  ConstraintSystem cs(p.dim());
  for (const Constraint& c : p.constraint_system().constraints())
    cs.add(c.weakened());
  return NncPolyhedron::from_constraints(cs);
}

enum class NncGeneratorKind { point, closure_point, ray };

struct NncWitness {
  int side = 1;      // which input supplied beta (1 or 2)
  int condition = 0; // 1, 2 or 3
  Constraint beta;
  NncGeneratorKind kind = NncGeneratorKind::point;
  Vec generator; // saturating generator (conditions 1-2) or point (condition 3)

  std::string str() const {
    std::string s = "side " + std::to_string(side) + ", condition " +
                    std::to_string(condition) + ", constraint " + beta.str() + "; ";
    switch (kind) {
    case NncGeneratorKind::point: s += "point "; break;
    case NncGeneratorKind::closure_point: s += "closure_point "; break;
    case NncGeneratorKind::ray: s += "ray "; break;
    }
    return s + vec_to_text(generator);
  }
};

using NncDecision = Decision<NncWitness>;

inline NncDecision detect_exact_join_nnc(const NncPolyhedron& p1, const NncPolyhedron& p2) {
  require_same_dim(p1.dim(), p2.dim(), "detect_exact_join_nnc");
  if (p1.is_empty() || p2.is_empty())
    return NncDecision::exact_join();

  struct StrictCandidate {
    int side;
    Constraint beta;
  };
  std::vector<StrictCandidate> delayed;

  const NncPolyhedron* polys[2] = {&p1, &p2};
  for (int side = 1; side <= 2; ++side) {
    const NncPolyhedron& pi = *polys[side - 1];
    const NncPolyhedron& pj = *polys[2 - side];
    const auto& egs = pi.generator_system();
    for (const Constraint& beta : pi.constraint_system().constraints()) {
      if (!violates(pj, beta))
        continue;
      bool any_saturating = false;
      // Condition (1): an unsubsumed saturating ray or closure point.
      for (const Vec& r : egs.rays) {
        if (!saturates_ray(r, beta))
          continue;
        any_saturating = true;
        if (!pj.subsumes_ray(r))
          return NncDecision::inexact(NncWitness{side, 1, beta, NncGeneratorKind::ray, r});
      }
      for (const PointVec& c : egs.closure_points) {
        if (!saturates_point(c, beta))
          continue;
        any_saturating = true;
        if (!pj.closure_contains_point(c))
          return NncDecision::inexact(
              NncWitness{side, 1, beta, NncGeneratorKind::closure_point, c});
      }
      // Condition (2): a saturating point escaping the closure, beta
      // non-strict.
      for (const PointVec& q : egs.points) {
        if (!saturates_point(q, beta))
          continue;
        any_saturating = true;
        if (beta.rel != Rel::lt && !pj.closure_contains_point(q))
          return NncDecision::inexact(NncWitness{side, 2, beta, NncGeneratorKind::point, q});
      }
      // Condition (3) is the expensive hyperplane check; evaluate last.
      if (beta.rel == Rel::lt && any_saturating)
        delayed.push_back({side, beta});
    }
  }

  if (!delayed.empty()) {
    NncPolyhedron j = join(p1, p2);
    for (const auto& cand : delayed) {
      const NncPolyhedron& pj = *polys[2 - cand.side];
      NncPolyhedron slice = meet_constraint(j, cand.beta.hyperplane());
      if (slice.is_empty() || contains(pj, slice))
        continue;
      // A concrete point of the slice outside pj.
      for (const Constraint& b2 : pj.constraint_system().constraints()) {
        NncPolyhedron gap = meet_constraint(slice, b2.complement());
        if (!gap.is_empty())
          return NncDecision::inexact(NncWitness{cand.side, 3, cand.beta,
                                                 NncGeneratorKind::point,
                                                 gap.generator_system().points.front()});
      }
      throw Error(Errc::precondition, "detect_exact_join_nnc: inconsistent slice test");
    }
  }
  return NncDecision::exact_join();
}

// A point in (p1 join p2) outside both inputs, found by complementing
// constraints of p1 against the join; nullopt when the join is exact.
// Decides inexactness by set algebra alone, independently of the
// theorem-condition path.
inline std::optional<PointVec> separating_point(const NncPolyhedron& p1,
                                                const NncPolyhedron& p2) {
  if (p1.is_empty() || p2.is_empty())
    return std::nullopt;
  NncPolyhedron j = join(p1, p2);
  for (const Constraint& beta : p1.constraint_system().constraints()) {
    NncPolyhedron outside = meet_constraint(j, beta.complement());
    if (outside.is_empty() || contains(p2, outside))
      continue;
    for (const Constraint& b2 : p2.constraint_system().constraints()) {
      NncPolyhedron gap = meet_constraint(outside, b2.complement());
      if (!gap.is_empty())
        return gap.generator_system().points.front();
    }
    throw Error(Errc::precondition, "separating_point: contains/complement disagreement");
  }
  return std::nullopt;
}

inline bool exact_join(const NncPolyhedron& a, const NncPolyhedron& b) {
  return detect_exact_join_nnc(a, b).exact;
}

inline std::size_t dim(const NncPolyhedron& p) { return p.dim(); }

inline std::string to_text(const NncPolyhedron& p) { return p.str(); }

} // namespace exactjoin
