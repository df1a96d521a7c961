// Copyright (c) exactjoin contributors.
// SPDX-License-Identifier: Apache-2.0
//
// Exact rational scalar type backed by GMP, plus the one-point extension
// with +infinity used by weighted graphs.

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace exactjoin {

// Always reduced, denominator >= 1. mpq_class by itself does not
// canonicalize num/den constructors, so every entry point goes through
// canonicalize().
class Rational {
public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}
  Rational(int n) : v_(n) {}
  Rational(long num, long den) : v_(num, den) {
    if (den == 0)
      throw std::invalid_argument("Rational: zero denominator");
    v_.canonicalize();
  }
  explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }
  explicit Rational(const mpz_class& z) : v_(z) {}

  static Rational from_mpz(const mpz_class& num, const mpz_class& den) {
    if (den == 0)
      throw std::invalid_argument("Rational: zero denominator");
    Rational r;
    r.v_ = mpq_class(num, den);
    r.v_.canonicalize();
    return r;
  }

  const mpq_class& raw() const { return v_; }
  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational abs() const { return sign() < 0 ? -*this : *this; }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero())
      throw std::invalid_argument("Rational: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) == 0; }
  friend bool operator!=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) != 0; }
  friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) < 0; }
  friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) <= 0; }
  friend bool operator>(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) > 0; }
  friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) >= 0; }

  // Largest integer <= *this.
  mpz_class floor() const {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
    return q;
  }

  std::string str() const {
    if (v_.get_den() == 1)
      return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
  }

private:
  mpq_class v_;
};

inline Rational min(const Rational& a, const Rational& b) { return a <= b ? a : b; }
inline Rational max(const Rational& a, const Rational& b) { return a >= b ? a : b; }

// Q union { +infinity }; +infinity absorbs addition and tops the order.
class ExtRational {
public:
  ExtRational() : finite_(true), q_(0) {}
  ExtRational(Rational q) : finite_(true), q_(std::move(q)) {}
  ExtRational(long n) : finite_(true), q_(n) {}
  ExtRational(int n) : finite_(true), q_(n) {}

  static ExtRational infinity() {
    ExtRational e;
    e.finite_ = false;
    return e;
  }

  bool is_finite() const { return finite_; }
  const Rational& value() const {
    if (!finite_)
      throw std::logic_error("ExtRational: value() on +inf");
    return q_;
  }

  friend ExtRational operator+(const ExtRational& a, const ExtRational& b) {
    if (!a.finite_ || !b.finite_)
      return infinity();
    return ExtRational(a.q_ + b.q_);
  }
  friend ExtRational operator*(const Rational& c, const ExtRational& a) {
    if (!a.finite_) {
      if (c.sign() <= 0)
        throw std::logic_error("ExtRational: non-positive scaling of +inf");
      return infinity();
    }
    return ExtRational(c * a.q_);
  }
  ExtRational operator-() const {
    if (!finite_)
      throw std::logic_error("ExtRational: negation of +inf");
    return ExtRational(-q_);
  }
  friend ExtRational operator-(const ExtRational& a, const Rational& b) {
    if (!a.finite_)
      return infinity();
    return ExtRational(a.q_ - b);
  }

  friend bool operator==(const ExtRational& a, const ExtRational& b) {
    if (a.finite_ != b.finite_)
      return false;
    return !a.finite_ || a.q_ == b.q_;
  }
  friend bool operator!=(const ExtRational& a, const ExtRational& b) { return !(a == b); }
  friend bool operator<(const ExtRational& a, const ExtRational& b) {
    if (!a.finite_)
      return false;
    if (!b.finite_)
      return true;
    return a.q_ < b.q_;
  }
  friend bool operator<=(const ExtRational& a, const ExtRational& b) { return a < b || a == b; }
  friend bool operator>(const ExtRational& a, const ExtRational& b) { return b < a; }
  friend bool operator>=(const ExtRational& a, const ExtRational& b) { return b <= a; }

  std::string str() const { return finite_ ? q_.str() : "inf"; }

private:
  bool finite_;
  Rational q_;
};

inline ExtRational min(const ExtRational& a, const ExtRational& b) { return a <= b ? a : b; }
inline ExtRational max(const ExtRational& a, const ExtRational& b) { return a >= b ? a : b; }

} // namespace exactjoin
