// Copyright (c) exactjoin contributors.
// SPDX-License-Identifier: Apache-2.0
//
// One-dimensional domains pluggable into boxes: rational intervals with
// possibly open bounds, and integer intervals. Each exposes exactly the
// operations the box-level exact-join test needs: emptiness, inclusion,
// equality, join, and the join-equals-union test.

#pragma once

#include <optional>
#include <string>

#include "exactjoin/errors.hpp"
#include "exactjoin/rational.hpp"

namespace exactjoin {

enum class BoundKind { neg_inf, finite, pos_inf };

struct Bound {
  BoundKind kind = BoundKind::finite;
  Rational value;    // meaningful only for finite
  bool open = false; // infinite bounds are always open

  static Bound minus_inf() { return {BoundKind::neg_inf, Rational(), true}; }
  static Bound plus_inf() { return {BoundKind::pos_inf, Rational(), true}; }
  static Bound closed(Rational v) { return {BoundKind::finite, std::move(v), false}; }
  static Bound open_at(Rational v) { return {BoundKind::finite, std::move(v), true}; }
};

// Possibly open rational interval, Empty as a distinguished state.
class NncInterval {
public:
  // Empty interval.
  NncInterval() : empty_(true), lo_(Bound::minus_inf()), hi_(Bound::plus_inf()) {}

  NncInterval(Bound lo, Bound hi) : empty_(false), lo_(lo), hi_(hi) {
    if (lo.kind == BoundKind::pos_inf || hi.kind == BoundKind::neg_inf)
      throw Error(Errc::precondition, "NncInterval: inverted infinite bounds");
    if (lo.kind == BoundKind::finite && hi.kind == BoundKind::finite) {
      if (lo.value > hi.value || (lo.value == hi.value && (lo.open || hi.open)))
        empty_ = true;
    }
    if (empty_) {
      lo_ = Bound::minus_inf();
      hi_ = Bound::plus_inf();
    }
  }

  static NncInterval empty() { return NncInterval(); }
  static NncInterval universe() { return NncInterval(Bound::minus_inf(), Bound::plus_inf()); }
  static NncInterval closed(Rational lo, Rational hi) {
    return NncInterval(Bound::closed(std::move(lo)), Bound::closed(std::move(hi)));
  }
  static NncInterval singleton(Rational v) { return closed(v, v); }
  static const char* box_keyword() { return "box"; }

  bool is_empty() const { return empty_; }
  const Bound& lower() const { return lo_; }
  const Bound& upper() const { return hi_; }

  bool contains(const Rational& x) const {
    if (empty_)
      return false;
    if (lo_.kind == BoundKind::finite && (x < lo_.value || (x == lo_.value && lo_.open)))
      return false;
    if (hi_.kind == BoundKind::finite && (x > hi_.value || (x == hi_.value && hi_.open)))
      return false;
    return true;
  }

  friend bool operator==(const NncInterval& a, const NncInterval& b) {
    if (a.empty_ || b.empty_)
      return a.empty_ == b.empty_;
    return bound_eq(a.lo_, b.lo_) && bound_eq(a.hi_, b.hi_);
  }

  std::string str() const {
    if (empty_)
      return "empty";
    std::string s = lo_.open ? "(" : "[";
    s += lo_.kind == BoundKind::neg_inf ? "-inf" : lo_.value.str();
    s += ", ";
    s += hi_.kind == BoundKind::pos_inf ? "inf" : hi_.value.str();
    s += hi_.open ? ")" : "]";
    return s;
  }

  // a's lower bound admits at least the values b's admits.
  static bool lower_covers(const Bound& a, const Bound& b) {
    if (a.kind == BoundKind::neg_inf)
      return true;
    if (b.kind == BoundKind::neg_inf)
      return false;
    if (a.value != b.value)
      return a.value < b.value;
    return !a.open || b.open;
  }
  static bool upper_covers(const Bound& a, const Bound& b) {
    if (a.kind == BoundKind::pos_inf)
      return true;
    if (b.kind == BoundKind::pos_inf)
      return false;
    if (a.value != b.value)
      return a.value > b.value;
    return !a.open || b.open;
  }

private:
  static bool bound_eq(const Bound& a, const Bound& b) {
    if (a.kind != b.kind)
      return false;
    if (a.kind != BoundKind::finite)
      return true;
    return a.value == b.value && a.open == b.open;
  }

  bool empty_;
  Bound lo_, hi_;
};

inline bool subset_eq(const NncInterval& a, const NncInterval& b) {
  if (a.is_empty())
    return true;
  if (b.is_empty())
    return false;
  return NncInterval::lower_covers(b.lower(), a.lower()) &&
         NncInterval::upper_covers(b.upper(), a.upper());
}

inline NncInterval interval_join(const NncInterval& a, const NncInterval& b) {
  if (a.is_empty())
    return b;
  if (b.is_empty())
    return a;
  Bound lo = NncInterval::lower_covers(a.lower(), b.lower()) ? a.lower() : b.lower();
  Bound hi = NncInterval::upper_covers(a.upper(), b.upper()) ? a.upper() : b.upper();
  return NncInterval(lo, hi);
}

// True iff a (+) b equals a united with b as point sets: the intervals
// overlap or touch with at least one closed endpoint at the seam.
inline bool interval_join_exact(const NncInterval& a, const NncInterval& b) {
  if (a.is_empty() || b.is_empty())
    return true;
  auto separated = [](const NncInterval& left, const NncInterval& right) {
    // Everything in `left` is below everything in `right`, with a gap.
    const Bound& hi = left.upper();
    const Bound& lo = right.lower();
    if (hi.kind == BoundKind::pos_inf || lo.kind == BoundKind::neg_inf)
      return false;
    if (hi.value < lo.value)
      return true;
    if (hi.value > lo.value)
      return false;
    return hi.open && lo.open; // both open at the shared value: that value is missing
  };
  return !separated(a, b) && !separated(b, a);
}

// A value witnessing interval_join_exact(a, b) == false, i.e. a member of
// (a (+) b) \ (a u b). Independent of interval_join_exact's tests: derived
// from bound data and then certified by membership checks.
inline std::optional<Rational> interval_gap_value(const NncInterval& a, const NncInterval& b) {
  if (a.is_empty() || b.is_empty())
    return std::nullopt;
  auto gap = [](const NncInterval& left, const NncInterval& right) -> std::optional<Rational> {
    const Bound& hi = left.upper();
    const Bound& lo = right.lower();
    if (hi.kind == BoundKind::pos_inf || lo.kind == BoundKind::neg_inf)
      return std::nullopt;
    if (hi.value < lo.value)
      return (hi.value + lo.value) / Rational(2);
    if (hi.value == lo.value && hi.open && lo.open)
      return hi.value;
    return std::nullopt;
  };
  if (auto v = gap(a, b))
    return v;
  return gap(b, a);
}

// Some member of the interval (nullopt when empty).
inline std::optional<Rational> interval_sample(const NncInterval& iv) {
  if (iv.is_empty())
    return std::nullopt;
  const Bound& lo = iv.lower();
  const Bound& hi = iv.upper();
  if (lo.kind == BoundKind::finite && !lo.open)
    return lo.value;
  if (hi.kind == BoundKind::finite && !hi.open)
    return hi.value;
  if (lo.kind == BoundKind::finite && hi.kind == BoundKind::finite)
    return (lo.value + hi.value) / Rational(2);
  if (lo.kind == BoundKind::finite)
    return lo.value + Rational(1);
  if (hi.kind == BoundKind::finite)
    return hi.value - Rational(1);
  return Rational(0);
}

// Some member of a \ b (nullopt iff a is a subset of b).
inline std::optional<Rational> interval_sample_difference(const NncInterval& a,
                                                          const NncInterval& b) {
  if (subset_eq(a, b))
    return std::nullopt;
  if (b.is_empty())
    return interval_sample(a);
  // Part of a below b.
  if (NncInterval::lower_covers(a.lower(), b.lower()) &&
      !NncInterval::lower_covers(b.lower(), a.lower())) {
    const Bound& bl = b.lower();
    // values of a strictly below bl.value, or equal when b is open there
    Bound cap = bl.open ? Bound::closed(bl.value) : Bound::open_at(bl.value);
    if (!NncInterval::upper_covers(a.upper(), cap))
      cap = a.upper();
    NncInterval below(a.lower(), cap);
    if (auto v = interval_sample(below))
      return v;
  }
  // Part of a above b.
  if (NncInterval::upper_covers(a.upper(), b.upper()) &&
      !NncInterval::upper_covers(b.upper(), a.upper())) {
    const Bound& bh = b.upper();
    Bound cap = bh.open ? Bound::closed(bh.value) : Bound::open_at(bh.value);
    if (!NncInterval::lower_covers(a.lower(), cap))
      cap = a.lower();
    NncInterval above(cap, a.upper());
    if (auto v = interval_sample(above))
      return v;
  }
  return std::nullopt;
}

// Interval of integers. Canonical form keeps closed finite bounds.
class IntInterval {
public:
  IntInterval() : empty_(true) {}
  IntInterval(Bound lo, Bound hi) : empty_(false), lo_(lo), hi_(hi) {
    if (lo.kind == BoundKind::finite) {
      if (!lo.value.is_integer())
        throw Error(Errc::domain_form, "IntInterval: non-integer lower bound");
      lo_.open = false;
    }
    if (hi.kind == BoundKind::finite) {
      if (!hi.value.is_integer())
        throw Error(Errc::domain_form, "IntInterval: non-integer upper bound");
      hi_.open = false;
    }
    if (lo.kind == BoundKind::finite && hi.kind == BoundKind::finite && lo.value > hi.value)
      empty_ = true;
    if (empty_) {
      lo_ = Bound::minus_inf();
      hi_ = Bound::plus_inf();
    }
  }

  static IntInterval empty() { return IntInterval(); }
  static IntInterval universe() { return IntInterval(Bound::minus_inf(), Bound::plus_inf()); }
  static IntInterval closed(Rational lo, Rational hi) {
    return IntInterval(Bound::closed(std::move(lo)), Bound::closed(std::move(hi)));
  }
  static const char* box_keyword() { return "int_box"; }

  bool is_empty() const { return empty_; }
  const Bound& lower() const { return lo_; }
  const Bound& upper() const { return hi_; }

  bool contains(const Rational& x) const {
    if (empty_ || !x.is_integer())
      return false;
    if (lo_.kind == BoundKind::finite && x < lo_.value)
      return false;
    if (hi_.kind == BoundKind::finite && x > hi_.value)
      return false;
    return true;
  }

  friend bool operator==(const IntInterval& a, const IntInterval& b) {
    if (a.empty_ || b.empty_)
      return a.empty_ == b.empty_;
    auto eq = [](const Bound& x, const Bound& y) {
      if (x.kind != y.kind)
        return false;
      return x.kind != BoundKind::finite || x.value == y.value;
    };
    return eq(a.lo_, b.lo_) && eq(a.hi_, b.hi_);
  }

  std::string str() const {
    if (empty_)
      return "empty";
    std::string s = "[";
    s += lo_.kind == BoundKind::neg_inf ? "-inf" : lo_.value.str();
    s += ", ";
    s += hi_.kind == BoundKind::pos_inf ? "inf" : hi_.value.str();
    return s + "]";
  }

private:
  bool empty_;
  Bound lo_ = Bound::minus_inf(), hi_ = Bound::plus_inf();
};

inline bool subset_eq(const IntInterval& a, const IntInterval& b) {
  if (a.is_empty())
    return true;
  if (b.is_empty())
    return false;
  if (b.lower().kind == BoundKind::finite &&
      (a.lower().kind != BoundKind::finite || a.lower().value < b.lower().value))
    return false;
  if (b.upper().kind == BoundKind::finite &&
      (a.upper().kind != BoundKind::finite || a.upper().value > b.upper().value))
    return false;
  return true;
}

inline IntInterval interval_join(const IntInterval& a, const IntInterval& b) {
  if (a.is_empty())
    return b;
  if (b.is_empty())
    return a;
  Bound lo = (a.lower().kind == BoundKind::neg_inf || b.lower().kind == BoundKind::neg_inf)
                 ? Bound::minus_inf()
                 : Bound::closed(min(a.lower().value, b.lower().value));
  Bound hi = (a.upper().kind == BoundKind::pos_inf || b.upper().kind == BoundKind::pos_inf)
                 ? Bound::plus_inf()
                 : Bound::closed(max(a.upper().value, b.upper().value));
  return IntInterval(lo, hi);
}

// Integer sets: a gap of at least one whole integer breaks exactness.
inline bool interval_join_exact(const IntInterval& a, const IntInterval& b) {
  if (a.is_empty() || b.is_empty())
    return true;
  auto separated = [](const IntInterval& left, const IntInterval& right) {
    const Bound& hi = left.upper();
    const Bound& lo = right.lower();
    if (hi.kind == BoundKind::pos_inf || lo.kind == BoundKind::neg_inf)
      return false;
    return hi.value + Rational(1) < lo.value;
  };
  return !separated(a, b) && !separated(b, a);
}

inline std::optional<Rational> interval_gap_value(const IntInterval& a, const IntInterval& b) {
  if (a.is_empty() || b.is_empty())
    return std::nullopt;
  auto gap = [](const IntInterval& left, const IntInterval& right) -> std::optional<Rational> {
    const Bound& hi = left.upper();
    const Bound& lo = right.lower();
    if (hi.kind == BoundKind::pos_inf || lo.kind == BoundKind::neg_inf)
      return std::nullopt;
    if (hi.value + Rational(1) < lo.value)
      return hi.value + Rational(1);
    return std::nullopt;
  };
  if (auto v = gap(a, b))
    return v;
  return gap(b, a);
}

inline std::optional<Rational> interval_sample(const IntInterval& iv) {
  if (iv.is_empty())
    return std::nullopt;
  if (iv.lower().kind == BoundKind::finite)
    return iv.lower().value;
  if (iv.upper().kind == BoundKind::finite)
    return iv.upper().value;
  return Rational(0);
}

inline std::optional<Rational> interval_sample_difference(const IntInterval& a,
                                                          const IntInterval& b) {
  if (subset_eq(a, b))
    return std::nullopt;
  if (b.is_empty())
    return interval_sample(a);
  if (b.lower().kind == BoundKind::finite &&
      (a.lower().kind != BoundKind::finite || a.lower().value < b.lower().value)) {
    if (a.lower().kind == BoundKind::finite)
      return a.lower().value;
    Rational v = b.lower().value - Rational(1);
    if (a.upper().kind == BoundKind::finite && a.upper().value < v)
      v = a.upper().value;
    return v;
  }
  if (b.upper().kind == BoundKind::finite &&
      (a.upper().kind != BoundKind::finite || a.upper().value > b.upper().value)) {
    if (a.upper().kind == BoundKind::finite)
      return a.upper().value;
    Rational v = b.upper().value + Rational(1);
    if (a.lower().kind == BoundKind::finite && a.lower().value > v)
      v = a.lower().value;
    return v;
  }
  return std::nullopt;
}

} // namespace exactjoin
