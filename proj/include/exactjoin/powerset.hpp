// Copyright (c) exactjoin contributors.
// SPDX-License-Identifier: Apache-2.0
//
// Finite non-redundant powersets over any shape domain. A domain plugs in
// through free functions: dim, is_empty, contains, join, exact_join,
// to_text, and (for full merging) exact_union over k >= 3 disjuncts.
// Disjuncts are kept sorted by their text form, so merge scans are
// deterministic; pairwise-merged fixpoints can still depend on that order,
// which is why the order is pinned rather than left to set iteration.

#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "exactjoin/errors.hpp"

namespace exactjoin {

template <class D>
class Powerset {
public:
  Powerset() = default;

  const std::vector<D>& disjuncts() const { return ds_; }
  std::size_t size() const { return ds_.size(); }
  bool is_bottom() const { return ds_.empty(); }

  // Drops empty elements and elements contained in another; sorts.
  static Powerset omega_reduce(std::vector<D> elems) {
    Powerset q;
    std::vector<std::string> keys;
    for (auto& e : elems) {
      if (is_empty(e))
        continue;
      q.ds_.push_back(std::move(e));
    }
    // containment filter
    std::vector<bool> drop(q.ds_.size(), false);
    for (std::size_t i = 0; i < q.ds_.size(); ++i) {
      if (drop[i])
        continue;
      for (std::size_t j = 0; j < q.ds_.size(); ++j) {
        if (i == j || drop[j])
          continue;
        if (contains(q.ds_[j], q.ds_[i]) && !(contains(q.ds_[i], q.ds_[j]) && i < j)) {
          drop[i] = true;
          break;
        }
      }
    }
    std::vector<D> kept;
    for (std::size_t i = 0; i < q.ds_.size(); ++i)
      if (!drop[i])
        kept.push_back(std::move(q.ds_[i]));
    q.ds_ = std::move(kept);
    std::sort(q.ds_.begin(), q.ds_.end(),
              [](const D& a, const D& b) { return to_text(a) < to_text(b); });
    return q;
  }

  std::string str() const {
    std::string s = "powerset {";
    for (const auto& d : ds_)
      s += " " + to_text(d) + ";";
    return s + " }";
  }

private:
  std::vector<D> ds_;
};

template <class D>
bool leq(const Powerset<D>& q1, const Powerset<D>& q2) {
  for (const D& d1 : q1.disjuncts()) {
    bool covered = false;
    for (const D& d2 : q2.disjuncts())
      if (contains(d2, d1)) {
        covered = true;
        break;
      }
    if (!covered)
      return false;
  }
  return true;
}

template <class D>
struct MergeResult {
  Powerset<D> result;
  std::size_t detect_calls = 0;
  bool size_cap_exceeded = false;
};

// Replaces pairs with an exact join until no pair merges.
template <class D>
MergeResult<D> pairwise_merge(const Powerset<D>& q) {
  MergeResult<D> out;
  std::vector<D> ds = q.disjuncts();
  bool changed = true;
  while (changed) {
    changed = false;
    Powerset<D> cur = Powerset<D>::omega_reduce(ds);
    ds = cur.disjuncts();
    for (std::size_t i = 0; i < ds.size() && !changed; ++i)
      for (std::size_t j = i + 1; j < ds.size() && !changed; ++j) {
        ++out.detect_calls;
        if (exact_join(ds[i], ds[j])) {
          D merged = join(ds[i], ds[j]);
          ds.erase(ds.begin() + static_cast<std::ptrdiff_t>(j));
          ds.erase(ds.begin() + static_cast<std::ptrdiff_t>(i));
          ds.push_back(std::move(merged));
          changed = true;
        }
      }
  }
  out.result = Powerset<D>::omega_reduce(ds);
  return out;
}

// Replaces any subset of size 2..cap whose join equals its union. Pairs use
// the pairwise detection predicate; larger subsets the per-domain
// union-equality oracle on the accumulated join.
template <class D>
MergeResult<D> full_merge(const Powerset<D>& q, std::size_t size_cap = 4) {
  MergeResult<D> out;
  std::vector<D> ds = q.disjuncts();
  bool changed = true;
  while (changed) {
    changed = false;
    Powerset<D> cur = Powerset<D>::omega_reduce(ds);
    ds = cur.disjuncts();
    std::size_t max_k = std::min(ds.size(), size_cap);
    auto next_combination = [](std::vector<std::size_t>& idx, std::size_t n) {
      std::size_t k = idx.size();
      for (std::size_t t = k; t-- > 0;) {
        if (idx[t] < n - k + t) {
          ++idx[t];
          for (std::size_t u = t + 1; u < k; ++u)
            idx[u] = idx[u - 1] + 1;
          return true;
        }
      }
      return false;
    };
    for (std::size_t k = 2; k <= max_k && !changed; ++k) {
      std::vector<std::size_t> idx(k);
      for (std::size_t t = 0; t < k; ++t)
        idx[t] = t;
      do {
        std::vector<D> subset;
        subset.reserve(k);
        for (std::size_t t : idx)
          subset.push_back(ds[t]);
        D j = subset[0];
        for (std::size_t t = 1; t < k; ++t)
          j = join(j, subset[t]);
        ++out.detect_calls;
        bool exact = k == 2 ? exact_join(subset[0], subset[1]) : exact_union(subset, j);
        if (exact) {
          for (std::size_t t = k; t-- > 0;)
            ds.erase(ds.begin() + static_cast<std::ptrdiff_t>(idx[t]));
          ds.push_back(std::move(j));
          changed = true;
          break;
        }
      } while (next_combination(idx, ds.size()));
    }
  }
  out.result = Powerset<D>::omega_reduce(ds);
  out.size_cap_exceeded = out.result.size() > size_cap;
  return out;
}

} // namespace exactjoin
