// Copyright (c) exactjoin contributors.
// SPDX-License-Identifier: Apache-2.0
//
// Seeded random instances for the oracle suites, the fuzzer and the
// benchmarks. All draws go through the engine output directly, so a seed
// pins the instance stream. Bounds are kept small integers so the grid
// oracles terminate quickly.

#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "exactjoin/bd_shape.hpp"
#include "exactjoin/box.hpp"
#include "exactjoin/interval.hpp"
#include "exactjoin/linear.hpp"
#include "exactjoin/octagon.hpp"
#include "exactjoin/polyhedron.hpp"

namespace exactjoin {

class Rng {
public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  long uniform(long lo, long hi) { // inclusive
    return lo + static_cast<long>(eng_() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  bool chance(int percent) { return uniform(0, 99) < percent; }
  std::uint64_t raw() { return eng_(); }

private:
  std::mt19937_64 eng_;
};

inline NncInterval random_nnc_interval(Rng& rng, long bound, bool allow_inf = true) {
  if (rng.chance(5))
    return NncInterval::empty();
  auto bnd = [&](bool lower) {
    if (allow_inf && rng.chance(10))
      return lower ? Bound::minus_inf() : Bound::plus_inf();
    Bound b = Bound::closed(Rational(rng.uniform(-bound, bound)));
    b.open = rng.chance(40);
    return b;
  };
  Bound lo = bnd(true), hi = bnd(false);
  return NncInterval(lo, hi);
}

inline Box<NncInterval> random_box(Rng& rng, std::size_t dims, long bound,
                                   bool allow_inf = true) {
  std::vector<NncInterval> comps;
  comps.reserve(dims);
  for (std::size_t i = 0; i < dims; ++i)
    comps.push_back(random_nnc_interval(rng, bound, allow_inf));
  return Box<NncInterval>(std::move(comps));
}

// Never empty, finite bounds; for benchmarks, where an empty component
// would short-circuit the scan being measured.
inline NncInterval random_nonempty_interval(Rng& rng, long bound) {
  long a = rng.uniform(-bound, bound);
  long b = rng.uniform(-bound, bound);
  if (a > b)
    std::swap(a, b);
  Bound lo = Bound::closed(Rational(a));
  Bound hi = Bound::closed(Rational(b));
  if (a < b) {
    lo.open = rng.chance(40);
    hi.open = rng.chance(40);
  }
  return NncInterval(lo, hi);
}

inline IntInterval random_int_interval(Rng& rng, long bound) {
  if (rng.chance(5))
    return IntInterval::empty();
  long a = rng.uniform(-bound, bound);
  long b = rng.uniform(-bound, bound);
  if (a > b)
    std::swap(a, b);
  return IntInterval::closed(Rational(a), Rational(b));
}

inline Box<IntInterval> random_int_box(Rng& rng, std::size_t dims, long bound) {
  std::vector<IntInterval> comps;
  comps.reserve(dims);
  for (std::size_t i = 0; i < dims; ++i)
    comps.push_back(random_int_interval(rng, bound));
  return Box<IntInterval>(std::move(comps));
}

// Random BD graph over dims variables; `boxed` adds unary bounds on every
// variable so the shape (if consistent) is bounded. Inconsistent draws are
// mostly retried, keeping a small share of empty shapes in the stream.
template <class Policy>
BdShapeT<Policy> random_bd(Rng& rng, std::size_t dims, long bound, bool boxed) {
  bool allow_empty = rng.chance(8);
  BdShapeT<Policy> shape = BdShapeT<Policy>::empty(dims);
  for (int attempt = 0; attempt < 12; ++attempt) {
    WeightedGraph g(dims + 1);
    if (boxed)
      for (std::size_t i = 1; i <= dims; ++i) {
        long hi = rng.uniform(-bound, bound);
        long lo = rng.uniform(-bound, hi);
        g.add_arc(i, 0, ExtRational(Rational(hi)));
        g.add_arc(0, i, ExtRational(Rational(-lo)));
      }
    std::size_t extra = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(2 * dims)));
    for (std::size_t t = 0; t < extra; ++t) {
      std::size_t i = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(dims)));
      std::size_t j = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(dims)));
      if (i == j)
        continue;
      g.add_arc(i, j, ExtRational(Rational(rng.uniform(-bound, bound))));
    }
    shape = BdShapeT<Policy>::from_graph(dims, g);
    if (!shape.is_empty() || allow_empty)
      break;
  }
  return shape;
}

// Random coherent octagonal graph; `boxed` bounds every variable.
template <class Policy>
OctShapeT<Policy> random_oct(Rng& rng, std::size_t dims, long bound, bool boxed) {
  bool allow_empty = rng.chance(8);
  OctShapeT<Policy> shape = OctShapeT<Policy>::empty(dims);
  for (int attempt = 0; attempt < 12; ++attempt) {
    OctGraph g(dims);
    if (boxed)
      for (std::size_t t = 0; t < dims; ++t) {
        long hi = rng.uniform(-bound, bound);
        long lo = rng.uniform(-bound, hi);
        g.add_arc(2 * t, 2 * t + 1, ExtRational(Rational(2 * hi)));
        g.add_arc(2 * t + 1, 2 * t, ExtRational(Rational(-2 * lo)));
      }
    std::size_t extra = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(3 * dims)));
    for (std::size_t t = 0; t < extra; ++t) {
      std::size_t i = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(2 * dims) - 1));
      std::size_t j = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(2 * dims) - 1));
      if (i == j || i == OctGraph::bar(j))
        continue; // unary arcs come from the boxed bounds
      g.add_arc(i, j, ExtRational(Rational(rng.uniform(-bound, bound))));
    }
    shape = OctShapeT<Policy>::from_graph(dims, g);
    if (!shape.is_empty() || allow_empty)
      break;
  }
  return shape;
}

// Random constraint with small integer data; used for polyhedra.
inline Constraint random_constraint(Rng& rng, std::size_t dims, long bound, bool allow_strict) {
  Constraint c;
  for (;;) {
    c.a.assign(dims, Rational(0));
    for (std::size_t i = 0; i < dims; ++i)
      c.a[i] = Rational(rng.uniform(-bound, bound));
    if (!is_zero_vec(c.a))
      break;
  }
  c.b = Rational(rng.uniform(-bound, bound));
  c.rel = allow_strict && rng.chance(35) ? Rel::lt : Rel::le;
  c.normalize();
  return c;
}

inline ConstraintSystem random_polyhedron_cs(Rng& rng, std::size_t dims, std::size_t max_cs,
                                             long bound, bool allow_strict) {
  ConstraintSystem cs(dims);
  std::size_t count = static_cast<std::size_t>(rng.uniform(1, static_cast<long>(max_cs)));
  for (std::size_t t = 0; t < count; ++t)
    cs.add(random_constraint(rng, dims, bound, allow_strict));
  // a box keeps most instances bounded and non-trivial
  if (rng.chance(70))
    for (std::size_t i = 0; i < dims; ++i) {
      Constraint up;
      up.a.assign(dims, Rational(0));
      up.a[i] = Rational(1);
      up.b = Rational(rng.uniform(0, bound + 2));
      up.rel = Rel::le;
      cs.add(up);
      Constraint dn;
      dn.a.assign(dims, Rational(0));
      dn.a[i] = Rational(-1);
      dn.b = Rational(rng.uniform(0, bound + 2));
      dn.rel = Rel::le;
      cs.add(dn);
    }
  return cs;
}

} // namespace exactjoin
