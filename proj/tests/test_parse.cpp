// Copyright (c) exactjoin contributors.
// SPDX-License-Identifier: Apache-2.0

#include <catch2/catch_amalgamated.hpp>

#include "exactjoin/bd_shape.hpp"
#include "exactjoin/parse.hpp"

using namespace exactjoin;

TEST_CASE("constraint grammar") {
  Constraint c = parse_constraint("2*x1 <= 4");
  CHECK(c.str() == "x1 <= 2");
  Constraint oct = parse_constraint("x1 + x2 <= 0");
  CHECK(oct.a.size() == 2);
  CHECK(oct.rel == Rel::le);
  Constraint strict = parse_constraint("x1 - x2 < 1/3");
  CHECK(strict.rel == Rel::lt);
  CHECK(strict.b == Rational(1, 3));
  // >= and > normalize by negation
  CHECK(parse_constraint("x1 >= 2").str() == "-x1 <= -2");
  CHECK(parse_constraint("x1 > 2").str() == "-x1 < -2");
  CHECK(parse_constraint("-1/2*x1 + x2 = 0").rel == Rel::eq);
}

TEST_CASE("parse errors carry byte offsets") {
  try {
    parse_constraint("x1 + <= 2");
    FAIL("expected parse error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::parse);
    CHECK(e.has_offset());
  }
  CHECK_THROWS_AS(parse_constraint("x1 ?? 2"), Error);
  CHECK_THROWS_AS(parse_constraint("x1 <= 2 trailing"), Error);
  // zero expression in an inequality
  CHECK_THROWS_AS(parse_constraint("x1 - x1 <= 2"), Error);
  CHECK_THROWS_AS(parse_constraint("x1 <= 1/0"), Error);
}

TEST_CASE("box formats") {
  auto b = parse_box("box { x1 in [0, 1]; x2 in (0, 2] }");
  CHECK(b.dim() == 2);
  CHECK(b.component(0).contains(Rational(0)));
  CHECK_FALSE(b.component(1).contains(Rational(0)));
  CHECK(b.component(1).contains(Rational(2)));

  auto u = parse_box("box { dim 3; x2 in [-inf, 5) }");
  CHECK(u.dim() == 3);
  CHECK(u.component(0).lower().kind == BoundKind::neg_inf);
  CHECK(u.component(1).upper().open);

  auto e = parse_box("box { x1 in empty; x2 in [0, 1] }");
  CHECK(e.is_empty());

  auto ib = parse_int_box("int_box { x1 in [0, 5]; x2 in [-2, 2] }");
  CHECK(ib.component(0).contains(Rational(3)));
  CHECK_FALSE(ib.component(0).contains(Rational(1, 2)));
  CHECK_THROWS_AS(parse_int_box("int_box { x1 in [0, 1/2] }"), Error);
}

TEST_CASE("shape systems and dim declarations") {
  auto cs = parse_system("bds { dim 3; x1 <= 3; -x1 <= 0; x1 - x2 <= 2 }", "bds");
  CHECK(cs.dim() == 3);
  CHECK(cs.size() == 3);
  // comments and whitespace
  auto cs2 = parse_system("oct {\n  # a comment\n  x1 + x2 <= 0;\n}", "oct");
  CHECK(cs2.size() == 1);
  CHECK_THROWS_AS(parse_system("bds { x1 <= 3 ", "bds"), Error);
}

TEST_CASE("generator formats") {
  auto p = parse_cpoly("cpoly_gen { point(0,0); point(2,0); ray(1,1) }");
  CHECK_FALSE(p.is_empty());
  CHECK(p.generator_system().points.size() == 2);
  CHECK(p.generator_system().rays.size() == 1);
  auto q = parse_nncpoly("nncpoly_gen { point(1/2, 1/2); closure_point(0, 0); closure_point(1, 1) }");
  CHECK_FALSE(q.is_empty());
  CHECK(q.contains_point({Rational(1, 2), Rational(1, 2)}));
  CHECK_FALSE(q.contains_point({Rational(0), Rational(0)}));
}

TEST_CASE("round trip through text") {
  auto b = parse_box("box { x1 in [0, 1]; x2 in (-1/2, 2] }");
  auto b2 = parse_box(to_text(b));
  CHECK(b == b2);
  auto cs = parse_system("bds { x1 <= 3; -x1 <= 0; x2 <= 2; -x2 <= 0 }", "bds");
  auto bd = BdShape::from_constraints(cs);
  auto bd2 = BdShape::from_constraints(parse_system(to_text(bd), "bds"));
  CHECK(equals(bd, bd2));
}

TEST_CASE("powerset format") {
  auto elems = parse_powerset_elements<Box<NncInterval>>(
      "powerset { box { x1 in [0, 1] }; box { x1 in [2, 3] } }",
      [](Parser& p) { return p.parse_box<NncInterval>("box"); });
  REQUIRE(elems.size() == 2);
  CHECK(elems[1].component(0).contains(Rational(2)));
}
