// Copyright (c) exactjoin contributors.
// SPDX-License-Identifier: Apache-2.0
//
// Text formats. Constraints follow
//   term (("+"|"-") term)* REL rational,   term := [rational "*"] "x" index
// with REL one of <=, <, =, >=, >; the >= and > forms normalize away by
// negation. Shape files wrap constraint or interval lists in
// "keyword { ...; ... }" with an optional leading "dim n;". '#' starts a
// comment running to end of line. Errors carry the byte offset.

#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "exactjoin/box.hpp"
#include "exactjoin/errors.hpp"
#include "exactjoin/interval.hpp"
#include "exactjoin/linear.hpp"
#include "exactjoin/nnc_polyhedron.hpp"
#include "exactjoin/polyhedron.hpp"

namespace exactjoin {

class Parser {
public:
  explicit Parser(std::string_view text) : text_(text) {}

  [[noreturn]] void fail(const std::string& msg, std::size_t at) const {
    throw Error(Errc::parse, msg + " (at byte " + std::to_string(at) + ")", at);
  }

  void skip_ws() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n')
          ++pos_;
      } else if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
        ++pos_;
      } else {
        break;
      }
    }
  }

  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }

  std::size_t pos() const { return pos_; }

  bool peek_char(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool accept_char(char c) {
    if (!peek_char(c))
      return false;
    ++pos_;
    return true;
  }

  void expect_char(char c) {
    if (!accept_char(c))
      fail(std::string("expected '") + c + "'", pos_);
  }

  std::string peek_word() {
    skip_ws();
    std::size_t p = pos_;
    std::string w;
    while (p < text_.size() && (std::isalpha(static_cast<unsigned char>(text_[p])) ||
                                text_[p] == '_' ||
                                (!w.empty() && std::isdigit(static_cast<unsigned char>(text_[p])))))
      w += text_[p++];
    return w;
  }

  bool accept_word(const std::string& w) {
    skip_ws();
    if (peek_word() != w)
      return false;
    pos_ += w.size();
    return true;
  }

  void expect_word(const std::string& w) {
    if (!accept_word(w))
      fail("expected '" + w + "'", pos_);
  }

  // ["-"] digits ["/" digits]
  Rational parse_rational() {
    skip_ws();
    std::size_t start = pos_;
    bool neg = accept_char('-');
    mpz_class num = parse_digits("numerator");
    mpz_class den = 1;
    if (pos_ < text_.size() && text_[pos_] == '/') {
      ++pos_;
      den = parse_digits("denominator");
      if (den == 0)
        fail("zero denominator", start);
    }
    if (neg)
      num = -num;
    return Rational::from_mpz(num, den);
  }

  std::size_t parse_index() {
    mpz_class v = parse_digits("index");
    if (v <= 0 || v > 1000000)
      fail("variable index out of range", pos_);
    return static_cast<std::size_t>(v.get_ui());
  }

  // Linear constraint; if want_dim > 0 the coefficient vector is padded or
  // checked to that dimension, otherwise the largest index seen decides.
  Constraint parse_constraint(std::size_t want_dim = 0) {
    skip_ws();
    std::size_t start = pos_;
    std::vector<std::pair<std::size_t, Rational>> terms;
    bool first = true;
    for (;;) {
      skip_ws();
      Rational sign(1);
      if (accept_char('-'))
        sign = Rational(-1);
      else if (accept_char('+')) {
        if (first)
          fail("unexpected '+'", pos_);
      } else if (!first) {
        break; // no sign: end of the sum
      }
      skip_ws();
      Rational coeff(1);
      if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        coeff = parse_rational();
        skip_ws();
        if (!accept_char('*'))
          fail("expected '*' between coefficient and variable", pos_);
      }
      skip_ws();
      if (pos_ >= text_.size() || text_[pos_] != 'x')
        fail("expected variable", pos_);
      ++pos_;
      std::size_t idx = parse_index();
      terms.emplace_back(idx, sign * coeff);
      first = false;
    }

    skip_ws();
    Rel rel;
    bool flip = false;
    if (accept_char('<')) {
      rel = accept_char('=') ? Rel::le : Rel::lt;
    } else if (accept_char('>')) {
      rel = accept_char('=') ? Rel::le : Rel::lt;
      flip = true;
    } else if (accept_char('=')) {
      rel = Rel::eq;
    } else {
      fail("expected relation", pos_);
    }
    Rational bound = parse_rational();

    std::size_t dim = want_dim;
    for (const auto& [idx, c] : terms)
      if (idx > dim)
        dim = idx;
    Constraint out;
    out.a.assign(dim, Rational(0));
    for (const auto& [idx, c] : terms)
      out.a[idx - 1] += c;
    out.b = bound;
    out.rel = rel;
    if (flip) {
      for (auto& q : out.a)
        q = -q;
      out.b = -out.b;
    }
    if (is_zero_vec(out.a) && out.rel != Rel::eq)
      fail("zero expression in an inequality", start);
    out.normalize();
    return out;
  }

  // "keyword { [dim n;] item; item; ... }" driver. The callback parses one
  // item; the optional dim declaration is handled here.
  std::size_t parse_braced(const std::string& keyword,
                           const std::function<void(Parser&, std::size_t)>& item) {
    expect_word(keyword);
    expect_char('{');
    std::size_t declared = 0;
    skip_ws();
    if (peek_word() == "dim") {
      expect_word("dim");
      mpz_class v = parse_digits("dimension");
      declared = static_cast<std::size_t>(v.get_ui());
      expect_char(';');
    }
    while (!peek_char('}')) {
      item(*this, declared);
      if (!accept_char(';')) {
        expect_char('}');
        return declared;
      }
    }
    expect_char('}');
    return declared;
  }

  ConstraintSystem parse_constraint_system(const std::string& keyword) {
    std::vector<Constraint> cs;
    std::size_t declared = parse_braced(keyword, [&cs](Parser& p, std::size_t want) {
      cs.push_back(p.parse_constraint(want));
    });
    std::size_t dim = declared;
    for (const auto& c : cs)
      if (c.dim() > dim)
        dim = c.dim();
    ConstraintSystem out(dim);
    for (auto& c : cs) {
      c.a.resize(dim, Rational(0));
      out.add(std::move(c));
    }
    return out;
  }

  // "[1, 2]", "(0, inf)", "empty"
  template <class Ival>
  Ival parse_interval() {
    skip_ws();
    if (accept_word("empty"))
      return Ival::empty();
    bool lo_open;
    if (accept_char('['))
      lo_open = false;
    else if (accept_char('('))
      lo_open = true;
    else
      fail("expected interval", pos_);
    Bound lo = parse_bound(true, lo_open);
    expect_char(',');
    Bound hi = parse_bound(false, false);
    if (accept_char(']'))
      hi.open = false;
    else if (accept_char(')'))
      hi.open = true;
    else
      fail("expected interval end", pos_);
    if (hi.kind == BoundKind::pos_inf)
      hi.open = true;
    return Ival(lo, hi);
  }

  template <class Ival>
  Box<Ival> parse_box(const std::string& keyword) {
    std::vector<std::pair<std::size_t, Ival>> comps;
    std::size_t declared = parse_braced(keyword, [&comps, this](Parser& p, std::size_t) {
      p.skip_ws();
      if (pos_ >= text_.size() || text_[pos_] != 'x')
        p.fail("expected variable", p.pos());
      ++pos_;
      std::size_t idx = p.parse_index();
      p.expect_word("in");
      comps.emplace_back(idx, p.parse_interval<Ival>());
    });
    std::size_t dim = declared;
    for (const auto& [idx, iv] : comps)
      if (idx > dim)
        dim = idx;
    std::vector<Ival> out(dim, Ival::universe());
    for (const auto& [idx, iv] : comps)
      out[idx - 1] = iv;
    return Box<Ival>(std::move(out));
  }

  PointVec parse_vector(std::size_t want_dim) {
    expect_char('(');
    PointVec v;
    if (!peek_char(')')) {
      v.push_back(parse_rational());
      while (accept_char(','))
        v.push_back(parse_rational());
    }
    expect_char(')');
    if (want_dim && v.size() != want_dim)
      fail("vector of wrong dimension", pos_);
    return v;
  }

  struct RawGenerators {
    std::vector<PointVec> points, closure_points;
    std::vector<Vec> rays;
    std::size_t dim = 0;
  };

  RawGenerators parse_generators(const std::string& keyword, bool allow_closure) {
    RawGenerators out;
    std::size_t declared =
        parse_braced(keyword, [&out, allow_closure](Parser& p, std::size_t want) {
          p.skip_ws();
          std::string w = p.peek_word();
          if (w == "point") {
            p.expect_word("point");
            out.points.push_back(p.parse_vector(want));
          } else if (w == "ray") {
            p.expect_word("ray");
            out.rays.push_back(p.parse_vector(want));
          } else if (allow_closure && w == "closure_point") {
            p.expect_word("closure_point");
            out.closure_points.push_back(p.parse_vector(want));
          } else {
            p.fail("expected generator", p.pos());
          }
        });
    out.dim = declared;
    for (const auto& v : out.points)
      out.dim = std::max(out.dim, v.size());
    for (const auto& v : out.closure_points)
      out.dim = std::max(out.dim, v.size());
    for (const auto& v : out.rays)
      out.dim = std::max(out.dim, v.size());
    auto pad = [&](std::vector<Vec>& vs) {
      for (auto& v : vs)
        if (v.size() != out.dim)
          fail("generators of mixed dimension", pos_);
    };
    pad(out.points);
    pad(out.closure_points);
    pad(out.rays);
    return out;
  }

private:
  mpz_class parse_digits(const char* what) {
    skip_ws();
    std::size_t start = pos_;
    std::string digits;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      digits += text_[pos_++];
    if (digits.empty())
      fail(std::string("expected ") + what, start);
    return mpz_class(digits);
  }

  Bound parse_bound(bool lower, bool open) {
    skip_ws();
    if (accept_word("inf"))
      return Bound::plus_inf();
    if (pos_ + 3 < text_.size() && text_.substr(pos_, 4) == "-inf") {
      pos_ += 4;
      return Bound::minus_inf();
    }
    Bound b;
    b.kind = BoundKind::finite;
    b.value = parse_rational();
    b.open = open;
    (void)lower;
    return b;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

// Whole-string entry points; trailing garbage is an error.

inline Constraint parse_constraint(const std::string& text) {
  Parser p(text);
  Constraint c = p.parse_constraint();
  if (!p.at_end())
    p.fail("trailing input", p.pos());
  return c;
}

namespace detail {
template <class T>
T finish(Parser& p, T value) {
  if (!p.at_end())
    p.fail("trailing input", p.pos());
  return value;
}
} // namespace detail

inline Box<NncInterval> parse_box(const std::string& text) {
  Parser p(text);
  return detail::finish(p, p.parse_box<NncInterval>("box"));
}

inline Box<IntInterval> parse_int_box(const std::string& text) {
  Parser p(text);
  return detail::finish(p, p.parse_box<IntInterval>("int_box"));
}

inline ConstraintSystem parse_system(const std::string& text, const std::string& keyword) {
  Parser p(text);
  return detail::finish(p, p.parse_constraint_system(keyword));
}

// cpoly { ... } or cpoly_gen { ... }
inline CPolyhedron parse_cpoly(const std::string& text) {
  Parser probe(text);
  std::string w = probe.peek_word();
  Parser p(text);
  if (w == "cpoly_gen") {
    auto raw = p.parse_generators("cpoly_gen", false);
    GeneratorSystem gs;
    for (auto& q : raw.points)
      gs.add_point(std::move(q));
    for (auto& r : raw.rays)
      gs.add_ray(std::move(r));
    return detail::finish(p, CPolyhedron::from_generators(gs, raw.dim));
  }
  return detail::finish(p, CPolyhedron::from_constraints(p.parse_constraint_system("cpoly")));
}

// nncpoly { ... } or nncpoly_gen { ... }
inline NncPolyhedron parse_nncpoly(const std::string& text) {
  Parser probe(text);
  std::string w = probe.peek_word();
  Parser p(text);
  if (w == "nncpoly_gen") {
    auto raw = p.parse_generators("nncpoly_gen", true);
    ExtendedGeneratorSystem egs;
    for (auto& q : raw.points)
      egs.add_point(std::move(q));
    for (auto& c : raw.closure_points)
      egs.add_closure_point(std::move(c));
    for (auto& r : raw.rays)
      egs.add_ray(std::move(r));
    return detail::finish(p, NncPolyhedron::from_generators(egs, raw.dim));
  }
  return detail::finish(p, NncPolyhedron::from_constraints(p.parse_constraint_system("nncpoly")));
}

// powerset { <shape>; <shape>; ... } with a per-domain element parser.
template <class D>
std::vector<D> parse_powerset_elements(const std::string& text,
                                       const std::function<D(Parser&)>& element) {
  Parser p(text);
  p.expect_word("powerset");
  p.expect_char('{');
  std::vector<D> out;
  while (!p.peek_char('}')) {
    out.push_back(element(p));
    if (!p.accept_char(';'))
      break;
  }
  p.expect_char('}');
  if (!p.at_end())
    p.fail("trailing input", p.pos());
  return out;
}

} // namespace exactjoin
