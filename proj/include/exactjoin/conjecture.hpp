// Copyright (c) exactjoin contributors.
// SPDX-License-Identifier: Apache-2.0
//
// Candidate conditions for three-way exact joins of BD shapes. Unproven:
// this predicate is a fuzz target compared against the complement-inclusion
// oracle, never a trusted decision procedure, and nothing else in the
// library calls it.

#pragma once

#include <optional>
#include <vector>

#include "exactjoin/bd_shape.hpp"
#include "exactjoin/graph.hpp"
#include "exactjoin/oracle.hpp"

namespace exactjoin {

struct TripleArcs {
  std::size_t i1, j1, i2, j2, i3, j3;
};

// Evaluates the conjectured inexactness conditions for non-empty rational
// BD shapes; returns the first arc triple passing all of them.
inline std::optional<TripleArcs> conjecture_k3_witness(const BdShape& b1, const BdShape& b2,
                                                       const BdShape& b3) {
  if (b1.is_empty() || b2.is_empty() || b3.is_empty())
    throw Error(Errc::precondition, "conjecture_k3: shapes must be non-empty");
  const WeightedGraph& g1 = b1.closed_graph();
  const WeightedGraph& g2 = b2.closed_graph();
  const WeightedGraph& g3 = b3.closed_graph();
  WeightedGraph g = graph_lub(graph_lub(g1, g2), g3);

  for (auto [i1, j1] : b1.reduced_graph().arcs()) {
    const ExtRational& w1 = g1.weight(i1, j1);
    if (!(w1 < g.weight(i1, j1)))
      continue;
    for (auto [i2, j2] : b2.reduced_graph().arcs()) {
      const ExtRational& w2 = g2.weight(i2, j2);
      if (!(w2 < g.weight(i2, j2)))
        continue;
      if (!(w1 + w2 < g.weight(i1, j2) + g.weight(i2, j1))) // (2a)
        continue;
      for (auto [i3, j3] : b3.reduced_graph().arcs()) {
        const ExtRational& w3 = g3.weight(i3, j3);
        if (!(w3 < g.weight(i3, j3)))
          continue;
        if (!(w2 + w3 < g.weight(i2, j3) + g.weight(i3, j2))) // (2b)
          continue;
        if (!(w3 + w1 < g.weight(i3, j1) + g.weight(i1, j3))) // (2c)
          continue;
        ExtRational lhs = w1 + w2 + w3;
        if (lhs < g.weight(i1, j2) + g.weight(i2, j3) + g.weight(i3, j1) && // (3a)
            lhs < g.weight(i1, j3) + g.weight(i2, j1) + g.weight(i3, j2))   // (3b)
          return TripleArcs{i1, j1, i2, j2, i3, j3};
      }
    }
  }
  return std::nullopt;
}

// Ground truth for the three-way union, by complement inclusion.
inline bool union3_exact(const BdShape& b1, const BdShape& b2, const BdShape& b3) {
  BdShape jn = join(join(b1, b2), b3);
  return nnc_union_covers({to_nnc(b1), to_nnc(b2), to_nnc(b3)}, to_nnc(jn));
}

} // namespace exactjoin
