// Copyright (c) exactjoin contributors.
// SPDX-License-Identifier: Apache-2.0
//
// Boxes as Cartesian products of a pluggable 1-D domain. The exact-join
// test needs only O(n) 1-D joins and inclusion tests: the join differs from
// the union iff some component join is inexact (condition 1) or two distinct
// dimensions each lose containment in opposite directions (condition 2).

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "exactjoin/decision.hpp"
#include "exactjoin/errors.hpp"
#include "exactjoin/linear.hpp"

namespace exactjoin {

template <class Ival>
class Box {
public:
  Box() = default;
  explicit Box(std::vector<Ival> comps) : comps_(std::move(comps)) { canonicalize(); }

  static Box universe(std::size_t dim) {
    return Box(std::vector<Ival>(dim, Ival::universe()));
  }
  static Box empty(std::size_t dim) {
    return Box(std::vector<Ival>(dim, Ival::empty()));
  }

  std::size_t dim() const { return comps_.size(); }
  bool is_empty() const { return !comps_.empty() && comps_[0].is_empty(); }
  const Ival& component(std::size_t i) const { return comps_[i]; }
  const std::vector<Ival>& components() const { return comps_; }

  bool contains_point(const PointVec& p) const {
    require_same_dim(p.size(), dim(), "Box::contains_point");
    for (std::size_t i = 0; i < comps_.size(); ++i)
      if (!comps_[i].contains(p[i]))
        return false;
    return true;
  }

  friend bool operator==(const Box& a, const Box& b) {
    if (a.dim() != b.dim())
      return false;
    if (a.is_empty() || b.is_empty())
      return a.is_empty() == b.is_empty();
    for (std::size_t i = 0; i < a.dim(); ++i)
      if (!(a.comps_[i] == b.comps_[i]))
        return false;
    return true;
  }

  std::string str(const std::string& keyword) const {
    std::string s = keyword + " { dim " + std::to_string(dim()) + ";";
    for (std::size_t i = 0; i < comps_.size(); ++i)
      s += " x" + std::to_string(i + 1) + " in " + comps_[i].str() + ";";
    return s + " }";
  }

private:
  // A box with any empty component denotes the empty set; normalize so
  // emptiness is visible in every component.
  void canonicalize() {
    for (const auto& c : comps_)
      if (c.is_empty()) {
        for (auto& x : comps_)
          x = Ival::empty();
        return;
      }
  }

  std::vector<Ival> comps_;
};

template <class Ival>
bool contains(const Box<Ival>& outer, const Box<Ival>& inner) {
  require_same_dim(outer.dim(), inner.dim(), "Box::contains");
  if (inner.is_empty())
    return true;
  if (outer.is_empty())
    return false;
  for (std::size_t i = 0; i < outer.dim(); ++i)
    if (!subset_eq(inner.component(i), outer.component(i)))
      return false;
  return true;
}

template <class Ival>
Box<Ival> join(const Box<Ival>& b1, const Box<Ival>& b2) {
  require_same_dim(b1.dim(), b2.dim(), "Box::join");
  if (b1.is_empty())
    return b2;
  if (b2.is_empty())
    return b1;
  std::vector<Ival> comps;
  comps.reserve(b1.dim());
  for (std::size_t i = 0; i < b1.dim(); ++i)
    comps.push_back(interval_join(b1.component(i), b2.component(i)));
  return Box<Ival>(std::move(comps));
}

template <class Ival>
BoxDecision detect_exact_join_box(const Box<Ival>& b1, const Box<Ival>& b2) {
  require_same_dim(b1.dim(), b2.dim(), "detect_exact_join_box");
  if (b1.is_empty() || b2.is_empty())
    return BoxDecision::exact_join();

  const std::size_t n = b1.dim();
  // Condition 1: some component join is itself inexact.
  for (std::size_t i = 0; i < n; ++i)
    if (!interval_join_exact(b1.component(i), b2.component(i)))
      return BoxDecision::inexact(BoxWitness{1, i + 1, 0});

  // Condition 2: projections escape each other on two distinct dimensions.
  std::optional<std::size_t> only_not1, only_not2;
  std::size_t count_not1 = 0, count_not2 = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (!subset_eq(b1.component(i), b2.component(i))) {
      ++count_not1;
      if (!only_not1)
        only_not1 = i;
    }
    if (!subset_eq(b2.component(i), b1.component(i))) {
      ++count_not2;
      if (!only_not2)
        only_not2 = i;
    }
  }
  if (count_not1 > 0 && count_not2 > 0) {
    std::size_t i = *only_not1, j = *only_not2;
    if (i == j) {
      if (count_not2 > 1) {
        for (std::size_t t = 0; t < n; ++t)
          if (t != i && !subset_eq(b2.component(t), b1.component(t))) {
            j = t;
            break;
          }
      } else if (count_not1 > 1) {
        for (std::size_t t = 0; t < n; ++t)
          if (t != j && !subset_eq(b1.component(t), b2.component(t))) {
            i = t;
            break;
          }
      } else {
        return BoxDecision::exact_join();
      }
    }
    return BoxDecision::inexact(BoxWitness{2, i + 1, j + 1});
  }
  return BoxDecision::exact_join();
}

template <class Ival>
bool is_empty(const Box<Ival>& b) {
  return b.is_empty();
}

template <class Ival>
bool exact_join(const Box<Ival>& a, const Box<Ival>& b) {
  return detect_exact_join_box(a, b).exact;
}

template <class Ival>
std::size_t dim(const Box<Ival>& b) {
  return b.dim();
}

template <class Ival>
std::string to_text(const Box<Ival>& b) {
  return b.str(Ival::box_keyword());
}

// Concrete point certifying an Inexact verdict: lies in the join of the two
// boxes but in neither input. Built from the proof's recipe and meant to be
// re-checked by membership tests.
template <class Ival>
std::optional<PointVec> box_witness_point(const Box<Ival>& b1, const Box<Ival>& b2,
                                          const BoxWitness& w) {
  if (b1.is_empty() || b2.is_empty())
    return std::nullopt;
  const std::size_t n = b1.dim();
  PointVec p(n);
  if (w.condition == 1) {
    std::size_t i = w.i - 1;
    auto v = interval_gap_value(b1.component(i), b2.component(i));
    if (!v)
      return std::nullopt;
    for (std::size_t t = 0; t < n; ++t) {
      if (t == i) {
        p[t] = *v;
        continue;
      }
      auto s = interval_sample(b1.component(t));
      if (!s)
        return std::nullopt;
      p[t] = *s;
    }
    return p;
  }
  // Condition 2: coordinates from a point of b1 whose i-th coordinate
  // escapes b2, with the j-th coordinate replaced by a value of b2
  // escaping b1.
  std::size_t i = w.i - 1, j = w.j - 1;
  auto vi = interval_sample_difference(b1.component(i), b2.component(i));
  auto vj = interval_sample_difference(b2.component(j), b1.component(j));
  if (!vi || !vj)
    return std::nullopt;
  for (std::size_t t = 0; t < n; ++t) {
    if (t == i) {
      p[t] = *vi;
    } else if (t == j) {
      p[t] = *vj;
    } else {
      auto s = interval_sample(b1.component(t));
      if (!s)
        return std::nullopt;
      p[t] = *s;
    }
  }
  return p;
}

} // namespace exactjoin
