// Copyright (c) exactjoin contributors.
// SPDX-License-Identifier: Apache-2.0
//
// Outcome of an exact-join test: Exact, or Inexact together with a
// domain-specific witness that the matching verifier accepts.

#pragma once

#include <cstddef>
#include <optional>
#include <string>

namespace exactjoin {

template <typename Witness>
struct Decision {
  bool exact = true;
  std::optional<Witness> witness;

  static Decision exact_join() { return Decision{}; }
  static Decision inexact(Witness w) { return Decision{false, std::move(w)}; }

  explicit operator bool() const { return exact; }
};

// Boxes: which of the two theorem conditions fired, and on which dimensions
// (1-based i; j meaningful for condition 2 only).
struct BoxWitness {
  int condition = 0;
  std::size_t i = 0;
  std::size_t j = 0;

  std::string str() const {
    std::string s = "condition " + std::to_string(condition) + ", i = " + std::to_string(i);
    if (condition == 2)
      s += ", j = " + std::to_string(j);
    return s;
  }
};

// BD and octagonal shapes: the witnessing arc pair, (i,j) from the first
// shape's reduction and (k,l) from the second's. `disjoint` marks the
// degenerate case where the two inputs have empty intersection.
struct ArcWitness {
  std::size_t i = 0, j = 0, k = 0, l = 0;
  bool disjoint = false;

  std::string str() const {
    std::string s = "arcs (i, j) = (" + std::to_string(i) + ", " + std::to_string(j) +
                    "), (k, l) = (" + std::to_string(k) + ", " + std::to_string(l) + ")";
    if (disjoint)
      s += " [inputs disjoint]";
    return s;
  }
};

using BoxDecision = Decision<BoxWitness>;
using ArcDecision = Decision<ArcWitness>;

} // namespace exactjoin
