// Copyright (c) exactjoin contributors.
// SPDX-License-Identifier: Apache-2.0

#include <catch2/catch_amalgamated.hpp>

#include "exactjoin/instances.hpp"
#include "exactjoin/oracle.hpp"
#include "exactjoin/parse.hpp"
#include "exactjoin/powerset.hpp"

using namespace exactjoin;

namespace {
using RBox = Box<NncInterval>;
using IBox = Box<IntInterval>;

RBox rbox(const std::string& t) { return parse_box(t); }
IBox ibox(const std::string& t) { return parse_int_box(t); }

bool union_member(const std::vector<IBox>& ds, const PointVec& p) {
  for (const auto& d : ds)
    if (d.contains_point(p))
      return true;
  return false;
}
} // namespace

TEST_CASE("omega reduction drops duplicates, empties, contained elements") {
  RBox b = rbox("box { x1 in [0, 1]; x2 in [0, 1] }");
  auto q = Powerset<RBox>::omega_reduce({b, b});
  CHECK(q.size() == 1);

  RBox b1 = rbox("box { x1 in [0, 1]; x2 in [0, 2] }");
  RBox b12 = join(b1, rbox("box { x1 in [3, 4]; x2 in [0, 2] }"));
  auto q2 = Powerset<RBox>::omega_reduce({b1, b12});
  CHECK(q2.size() == 1);
  CHECK(to_text(q2.disjuncts()[0]) == to_text(b12));

  auto q3 = Powerset<RBox>::omega_reduce({b1, RBox::empty(2)});
  CHECK(q3.size() == 1);

  // the worked triple is pairwise incomparable: all three stay
  RBox B1 = rbox("box { x1 in [0, 1]; x2 in [0, 2] }");
  RBox B2 = rbox("box { x1 in [3, 4]; x2 in [0, 2] }");
  RBox B3 = rbox("box { x1 in [0, 4]; x2 in [1, 2] }");
  CHECK(Powerset<RBox>::omega_reduce({B1, B2, B3}).size() == 3);
}

TEST_CASE("powerset order") {
  RBox B1 = rbox("box { x1 in [0, 1]; x2 in [0, 2] }");
  RBox B2 = rbox("box { x1 in [3, 4]; x2 in [0, 2] }");
  RBox B3 = rbox("box { x1 in [0, 4]; x2 in [1, 2] }");
  auto bottom = Powerset<RBox>::omega_reduce({});
  auto q1 = Powerset<RBox>::omega_reduce({B1});
  auto qj = Powerset<RBox>::omega_reduce({join(B1, B2)});
  auto q12 = Powerset<RBox>::omega_reduce({B1, B2});
  auto q3 = Powerset<RBox>::omega_reduce({B3});
  CHECK(leq(bottom, q12));
  CHECK(leq(q1, qj));
  CHECK_FALSE(leq(q12, q3)); // B1's x2 projection escapes B3
  CHECK_THROWS_AS(leq(q12, Powerset<RBox>::omega_reduce({rbox("box { x1 in [0, 1] }")})),
                  Error);
}

TEST_CASE("pairwise merge follows the integral/rational contrast") {
  auto bd3 = parse_system("bds { x1 <= 3; -x1 <= 0; x2 <= 2; -x2 <= 0; x1 - x2 <= 2 }", "bds");
  auto bd4 = parse_system("bds { x1 <= 6; -x1 <= -3; x2 <= 2; -x2 <= 0 }", "bds");
  Powerset<IntBdShape> qz = Powerset<IntBdShape>::omega_reduce(
      {IntBdShape::from_constraints(bd3), IntBdShape::from_constraints(bd4)});
  CHECK(pairwise_merge(qz).result.size() == 1);
  Powerset<BdShape> qq = Powerset<BdShape>::omega_reduce(
      {BdShape::from_constraints(bd3), BdShape::from_constraints(bd4)});
  CHECK(pairwise_merge(qq).result.size() == 2);
}

TEST_CASE("pairwise merge collapses a 1-D chain") {
  using B1 = Box<NncInterval>;
  auto seg = [](long a, long b) { return parse_box("box { x1 in [" + std::to_string(a) + ", " + std::to_string(b) + "] }"); };
  auto q = Powerset<B1>::omega_reduce({seg(0, 1), seg(1, 2), seg(2, 3)});
  auto m = pairwise_merge(q);
  REQUIRE(m.result.size() == 1);
  CHECK(to_text(m.result.disjuncts()[0]) == to_text(seg(0, 3)));
}

TEST_CASE("full merge collapses the three-tile cover of the square") {
  IBox t1 = ibox("int_box { x1 in [0, 1]; x2 in [0, 2] }");
  IBox t2 = ibox("int_box { x1 in [1, 2]; x2 in [0, 1] }");
  IBox t3 = ibox("int_box { x1 in [1, 2]; x2 in [1, 2] }");
  auto q = Powerset<IBox>::omega_reduce({t1, t2, t3});
  REQUIRE(q.size() == 3);
  auto fm = full_merge(q, 4);
  REQUIRE(fm.result.size() == 1);
  CHECK(to_text(fm.result.disjuncts()[0]) ==
        to_text(ibox("int_box { x1 in [0, 2]; x2 in [0, 2] }")));
  CHECK_FALSE(fm.size_cap_exceeded);
}

TEST_CASE("full merge needs the k = 3 test on the L-shaped cover") {
  // pairwise inexact in all three pairs, union exactly the square
  IBox a = ibox("int_box { x1 in [0, 2]; x2 in [0, 1] }");
  IBox b = ibox("int_box { x1 in [0, 1]; x2 in [0, 2] }");
  IBox c = ibox("int_box { x1 in [1, 2]; x2 in [1, 2] }");
  auto q = Powerset<IBox>::omega_reduce({a, b, c});
  REQUIRE(q.size() == 3);
  CHECK_FALSE(exact_join(a, b));
  CHECK_FALSE(exact_join(a, c));
  CHECK_FALSE(exact_join(b, c));
  auto pm = pairwise_merge(q);
  CHECK(pm.result.size() == 3); // already pairwise merged
  auto fm = full_merge(q, 4);
  REQUIRE(fm.result.size() == 1);
  CHECK(to_text(fm.result.disjuncts()[0]) ==
        to_text(ibox("int_box { x1 in [0, 2]; x2 in [0, 2] }")));

  // same shape over the rationals exercises the complement-route test
  RBox ra = rbox("box { x1 in [0, 2]; x2 in [0, 1] }");
  RBox rb = rbox("box { x1 in [0, 1]; x2 in [0, 2] }");
  RBox rc = rbox("box { x1 in [1, 2]; x2 in [1, 2] }");
  auto rq = Powerset<RBox>::omega_reduce({ra, rb, rc});
  auto rfm = full_merge(rq, 4);
  REQUIRE(rfm.result.size() == 1);
  CHECK(to_text(rfm.result.disjuncts()[0]) ==
        to_text(rbox("box { x1 in [0, 2]; x2 in [0, 2] }")));
}

TEST_CASE("pairwise-merged input with no exact subset is a fixpoint") {
  IBox a = ibox("int_box { x1 in [0, 1] }");
  IBox b = ibox("int_box { x1 in [4, 5] }");
  auto q = Powerset<IBox>::omega_reduce({a, b});
  CHECK(pairwise_merge(q).result.str() == q.str());
  CHECK(full_merge(q, 4).result.str() == q.str());
}

TEST_CASE("full merge respects the size cap flag") {
  std::vector<IBox> far;
  for (long v = 0; v < 6; ++v)
    far.push_back(ibox("int_box { x1 in [" + std::to_string(3 * v) + ", " +
                       std::to_string(3 * v + 1) + "] }"));
  auto q = Powerset<IBox>::omega_reduce(far);
  auto fm = full_merge(q, 4);
  CHECK(fm.result.size() == 6);
  CHECK(fm.size_cap_exceeded); // subsets above the cap were never examined
}

TEST_CASE("merges preserve the denotation and reach fixpoints") {
  Rng rng(91);
  for (int t = 0; t < 120; ++t) {
    std::size_t dims = (std::size_t)rng.uniform(1, 2);
    std::vector<IBox> elems;
    std::size_t count = (std::size_t)rng.uniform(1, 4);
    for (std::size_t u = 0; u < count; ++u)
      elems.push_back(random_int_box(rng, dims, 3));
    auto q = Powerset<IBox>::omega_reduce(elems);
    auto pm = pairwise_merge(q);
    auto fm = full_merge(q, 4);

    std::vector<long> k(dims, -4);
    for (;;) {
      PointVec p;
      for (long v : k)
        p.push_back(Rational(v));
      bool before = union_member(elems, p);
      CHECK(union_member(pm.result.disjuncts(), p) == before);
      CHECK(union_member(fm.result.disjuncts(), p) == before);
      std::size_t d = 0;
      while (d < dims && ++k[d] > 4) {
        k[d] = -4;
        ++d;
      }
      if (d >= dims)
        break;
    }
    const auto& ds = pm.result.disjuncts();
    for (std::size_t i = 0; i < ds.size(); ++i)
      for (std::size_t j = i + 1; j < ds.size(); ++j)
        CHECK_FALSE(exact_join(ds[i], ds[j]));
    auto pm2 = pairwise_merge(pm.result);
    CHECK(pm2.result.str() == pm.result.str());
    auto omega2 = Powerset<IBox>::omega_reduce(fm.result.disjuncts());
    CHECK(omega2.str() == fm.result.str());
  }
}

TEST_CASE("leq is a partial order on antichains") {
  Rng rng(92);
  for (int t = 0; t < 80; ++t) {
    std::size_t dims = (std::size_t)rng.uniform(1, 2);
    auto mk = [&] {
      std::vector<IBox> es;
      std::size_t count = (std::size_t)rng.uniform(0, 3);
      for (std::size_t u = 0; u < count; ++u)
        es.push_back(random_int_box(rng, dims, 3));
      return Powerset<IBox>::omega_reduce(es);
    };
    auto a = mk(), b = mk(), c = mk();
    CHECK(leq(a, a));
    if (leq(a, b) && leq(b, c))
      CHECK(leq(a, c));
    if (leq(a, b) && leq(b, a)) {
      // antisymmetric up to set equality of the sorted disjunct texts
      CHECK(a.str() == b.str());
    }
  }
}
