// Copyright (c) exactjoin contributors.
// SPDX-License-Identifier: Apache-2.0
//
// Dense rational vectors, linear constraints over them, and the
// satisfaction/saturation predicates every domain shares.
//
// Constraints are kept in a normal form that identifies positive scalings
// of the same half-space: the whole constraint is divided by the absolute
// value of its first nonzero coefficient (equalities are additionally
// sign-flipped so the leading coefficient is +1). Relations are only
// <=, < and =; parsers rewrite >= and > by negation.

#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "exactjoin/errors.hpp"
#include "exactjoin/rational.hpp"

namespace exactjoin {

using Vec = std::vector<Rational>;
using PointVec = Vec;

inline Rational dot(const Vec& a, const Vec& b) {
  require_same_dim(a.size(), b.size(), "dot");
  Rational s;
  for (std::size_t i = 0; i < a.size(); ++i)
    s += a[i] * b[i];
  return s;
}

inline bool is_zero_vec(const Vec& a) {
  return std::all_of(a.begin(), a.end(), [](const Rational& q) { return q.is_zero(); });
}

inline int compare_vec(const Vec& a, const Vec& b) {
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    if (a[i] < b[i])
      return -1;
    if (a[i] > b[i])
      return 1;
  }
  if (a.size() != b.size())
    return a.size() < b.size() ? -1 : 1;
  return 0;
}

inline std::string vec_to_text(const Vec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i)
      s += ", ";
    s += v[i].str();
  }
  return s + ")";
}

enum class Rel { le, lt, eq };

struct Constraint {
  Vec a;
  Rel rel = Rel::le;
  Rational b;

  std::size_t dim() const { return a.size(); }

  bool is_strict() const { return rel == Rel::lt; }
  bool is_equality() const { return rel == Rel::eq; }

  // Canonical representative of the half-space / hyperplane.
  void normalize() {
    std::size_t lead = a.size();
    for (std::size_t i = 0; i < a.size(); ++i)
      if (!a[i].is_zero()) {
        lead = i;
        break;
      }
    if (lead == a.size()) {
      if (rel != Rel::eq)
        throw Error(Errc::domain_form, "constraint: zero expression in an inequality");
      return; // 0 = b, kept as-is; callers decide feasibility
    }
    Rational scale = a[lead].abs();
    if (rel == Rel::eq && a[lead].sign() < 0)
      scale = -scale;
    if (scale == Rational(1))
      return;
    for (auto& c : a)
      c /= scale;
    b /= scale;
  }

  Constraint normalized() const {
    Constraint c = *this;
    c.normalize();
    return c;
  }

  // Non-strict weakening (topological closure of the half-space).
  Constraint weakened() const {
    Constraint c = *this;
    if (c.rel == Rel::lt)
      c.rel = Rel::le;
    return c;
  }

  // Exact set complement; defined for inequalities only.
  Constraint complement() const {
    if (rel == Rel::eq)
      throw Error(Errc::precondition, "complement: equality has no half-space complement");
    Constraint c;
    c.a.reserve(a.size());
    for (const auto& q : a)
      c.a.push_back(-q);
    c.b = -b;
    c.rel = (rel == Rel::le) ? Rel::lt : Rel::le;
    c.normalize();
    return c;
  }

  // Hyperplane <a, x> = b of this constraint.
  Constraint hyperplane() const {
    Constraint c = *this;
    c.rel = Rel::eq;
    c.normalize();
    return c;
  }

  std::string str() const {
    std::string s;
    bool first = true;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i].is_zero())
        continue;
      Rational c = a[i];
      if (first) {
        if (c.sign() < 0) {
          s += "-";
          c = -c;
        }
        first = false;
      } else {
        s += c.sign() < 0 ? " - " : " + ";
        if (c.sign() < 0)
          c = -c;
      }
      if (c != Rational(1))
        s += c.str() + "*";
      s += "x" + std::to_string(i + 1);
    }
    if (first)
      s += "0";
    switch (rel) {
    case Rel::le: s += " <= "; break;
    case Rel::lt: s += " < "; break;
    case Rel::eq: s += " = "; break;
    }
    return s + b.str();
  }
};

inline int compare_constraint(const Constraint& x, const Constraint& y) {
  if (x.rel != y.rel)
    return static_cast<int>(x.rel) < static_cast<int>(y.rel) ? -1 : 1;
  if (int c = compare_vec(x.a, y.a); c != 0)
    return c;
  if (x.b < y.b)
    return -1;
  return x.b > y.b ? 1 : 0;
}

inline bool operator==(const Constraint& x, const Constraint& y) {
  return compare_constraint(x, y) == 0;
}
inline bool constraint_less(const Constraint& x, const Constraint& y) {
  return compare_constraint(x, y) < 0;
}

// Membership of a point in the constraint's solution set.
inline bool satisfies(const PointVec& p, const Constraint& beta) {
  require_same_dim(p.size(), beta.dim(), "satisfies");
  Rational v = dot(beta.a, p);
  switch (beta.rel) {
  case Rel::le: return v <= beta.b;
  case Rel::lt: return v < beta.b;
  case Rel::eq: return v == beta.b;
  }
  return false;
}

// A (closure) point saturates beta when <a, g> = b; a ray when <a, g> = 0.
inline bool saturates_point(const PointVec& g, const Constraint& beta) {
  require_same_dim(g.size(), beta.dim(), "saturates");
  return dot(beta.a, g) == beta.b;
}
inline bool saturates_ray(const Vec& g, const Constraint& beta) {
  require_same_dim(g.size(), beta.dim(), "saturates");
  return dot(beta.a, g).is_zero();
}

// Duplicate-free set of constraints of one space dimension.
class ConstraintSystem {
public:
  ConstraintSystem() : dim_(0) {}
  explicit ConstraintSystem(std::size_t dim) : dim_(dim) {}

  std::size_t dim() const { return dim_; }
  bool empty() const { return cs_.empty(); }
  std::size_t size() const { return cs_.size(); }
  const std::vector<Constraint>& constraints() const { return cs_; }

  void add(Constraint c) {
    require_same_dim(c.dim(), dim_, "ConstraintSystem::add");
    c.normalize();
    auto it = std::lower_bound(cs_.begin(), cs_.end(), c, constraint_less);
    if (it == cs_.end() || !(*it == c))
      cs_.insert(it, std::move(c));
  }

  void add_all(const ConstraintSystem& o) {
    require_same_dim(o.dim_, dim_, "ConstraintSystem::add_all");
    for (const auto& c : o.cs_)
      add(c);
  }

  // Equalities expressed as the two bounding half-spaces; strictness kept.
  std::vector<Constraint> as_inequalities() const {
    std::vector<Constraint> out;
    out.reserve(cs_.size());
    for (const auto& c : cs_) {
      if (c.rel != Rel::eq) {
        out.push_back(c);
        continue;
      }
      Constraint le = c;
      le.rel = Rel::le;
      le.normalize();
      out.push_back(le);
      Constraint ge;
      ge.a.reserve(c.a.size());
      for (const auto& q : c.a)
        ge.a.push_back(-q);
      ge.b = -c.b;
      ge.rel = Rel::le;
      ge.normalize();
      out.push_back(ge);
    }
    return out;
  }

  std::string str(const std::string& keyword) const {
    std::string s = keyword + " { dim " + std::to_string(dim_) + ";";
    for (const auto& c : cs_)
      s += " " + c.str() + ";";
    return s + " }";
  }

private:
  std::size_t dim_;
  std::vector<Constraint> cs_; // sorted, unique
};

inline bool satisfies_all(const PointVec& p, const ConstraintSystem& cs) {
  for (const auto& c : cs.constraints())
    if (!satisfies(p, c))
      return false;
  return true;
}

} // namespace exactjoin
