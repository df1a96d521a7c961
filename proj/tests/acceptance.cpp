// Copyright (c) exactjoin contributors.
// SPDX-License-Identifier: Apache-2.0
//
// Acceptance suite. Runs every criterion end to end and prints one PASS or
// FAIL line per criterion; exits nonzero if any hard criterion fails.
// Timing criteria are soft: out-of-budget results print a warning but do
// not fail the run. Pass --cli <path> to also drive the command-line tool.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "exactjoin/exactjoin.hpp"

using namespace exactjoin;

namespace {

int g_failures = 0;

void report(const std::string& id, bool ok, const std::string& detail = "") {
  std::cout << (ok ? "PASS" : "FAIL") << " " << id;
  if (!detail.empty())
    std::cout << " (" << detail << ")";
  std::cout << "\n";
  if (!ok)
    ++g_failures;
}

void report_soft(const std::string& id, bool within, const std::string& detail) {
  std::cout << "PASS " << id << " (" << detail << (within ? "" : "; WARN: outside soft bound")
            << ")\n";
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct WitnessTally {
  long inexact = 0;
  long verified = 0;
};
WitnessTally g_witnesses;

// ---------- criterion 1: worked examples ----------

void criterion1_closed_polyhedra() {
  auto t0 = std::chrono::steady_clock::now();
  auto p1 = parse_cpoly("cpoly { x1 >= 0; x2 >= 0; x1 + x2 <= 2 }");
  auto p2 = parse_cpoly("cpoly { x1 <= 2; x2 >= 0; x1 - x2 >= 0 }");
  auto d = detect_exact_join_closed(p1, p2);
  bool ok = !d.exact && !d.witness->swapped && !d.witness->generator_is_ray &&
            d.witness->beta == parse_constraint("x1 + x2 <= 2") &&
            compare_vec(d.witness->generator, {Rational(0), Rational(2)}) == 0;
  if (ok) {
    PointVec m = certify_closed_witness(p1, p2, *d.witness);
    ok = join(p1, p2).contains_point(m) && !p1.contains_point(m) && !p2.contains_point(m);
  }
  auto expect = parse_cpoly("cpoly { x1 >= 0; x2 >= 0; x1 <= 2; x2 <= 2 }");
  ok = ok && equals(join(p1, p2), expect);
  double dt = seconds_since(t0);
  report("criterion 1.1: closed-polyhedra pair inexact, witness (x1+x2<=2, (0,2)), join pinned",
         ok && dt < 1.0, "elapsed " + std::to_string(dt) + " s");
}

void criterion1_boxes() {
  auto B1 = parse_box("box { x1 in [0, 1]; x2 in [0, 2] }");
  auto B2 = parse_box("box { x1 in [3, 4]; x2 in [0, 2] }");
  auto B3 = parse_box("box { x1 in [0, 4]; x2 in [1, 2] }");
  auto d12 = detect_exact_join_box(B1, B2);
  auto d13 = detect_exact_join_box(B1, B3);
  bool ok = !d12.exact && d12.witness->condition == 1 && d12.witness->i == 1;
  ok = ok && !d13.exact && d13.witness->condition == 2;
  report("criterion 1.2: box triple, condition 1 on dim 1 and condition 2", ok);
}

void criterion1_bd_exact_pair() {
  auto b1 = BdShape::from_constraints(
      parse_system("bds { x1 <= 3; -x1 <= 0; x2 <= 2; -x2 <= 0 }", "bds"));
  auto b2 = BdShape::from_constraints(
      parse_system("bds { x2 <= 2; -x2 <= 0; x1 - x2 <= 3; -x1 + x2 <= 0 }", "bds"));
  bool ok = detect_exact_join_bd(b1, b2).exact;
  auto t1 = bd_check_conditions(b1, b2, 1, 0, 2, 1);
  auto t2 = bd_check_conditions(b1, b2, 1, 1, 0, 2);
  ok = ok && t1.cond1 && !t1.cond2;  // (1,0,2,1): condition (1) holds, (2) fails
  ok = ok && !t2.cond1 && t2.cond2;  // (1,1,0,2): condition (2) holds, (1) fails
  report("criterion 1.3: BD pair exact; tuples (1,0,2,1) and (1,1,0,2) fail as stated", ok);
}

void criterion1_bd_rational_vs_integer() {
  const char* a = "x1 <= 3; -x1 <= 0; x2 <= 2; -x2 <= 0; x1 - x2 <= 2";
  const char* b = "x1 <= 6; -x1 <= -3; x2 <= 2; -x2 <= 0";
  auto q3 = BdShape::from_constraints(parse_system(std::string("bds { ") + a + " }", "bds"));
  auto q4 = BdShape::from_constraints(parse_system(std::string("bds { ") + b + " }", "bds"));
  auto d = detect_exact_join_bd(q3, q4);
  bool ok = !d.exact && d.witness->i == 1 && d.witness->j == 2 && d.witness->k == 0 &&
            d.witness->l == 1;
  auto z3 =
      IntBdShape::from_constraints(parse_system(std::string("int_bds { ") + a + " }", "int_bds"));
  auto z4 =
      IntBdShape::from_constraints(parse_system(std::string("int_bds { ") + b + " }", "int_bds"));
  ok = ok && detect_exact_join_bd(z3, z4).exact;
  // the slack blocks exactly that tuple: 2 - 3 + 2 > 0 + 0
  auto zc = bd_check_conditions(z3, z4, 1, 2, 0, 1);
  ok = ok && zc.cond1 && !zc.cond2;
  // and the rational witness shape holds the half-integral point (5/2, 0)
  auto w = build_separating_witness(q3, q4, 1, 2, 0, 1);
  ok = ok && w.shape && w.shape->contains_point({Rational(5, 2), Rational(0)}) &&
       verify_separating_witness(q3, q4, w);
  report("criterion 1.4: second BD pair rational-inexact via (1,2,0,1), integer-exact", ok);
}

void criterion1_octagons() {
  auto o1 = OctShape::from_constraints(parse_system("oct { dim 2; x1 + x2 <= 0 }", "oct"));
  auto o2 = OctShape::from_constraints(parse_system("oct { dim 2; x1 <= 2 }", "oct"));
  auto d = detect_exact_join_oct(o1, o2);
  bool ok = !d.exact && d.witness->i == 0 && d.witness->j == 3 && d.witness->k == 0 &&
            d.witness->l == 1;
  ok = ok && o1.closed_graph().weight(0, 3) == ExtRational(Rational(0));
  ok = ok && o2.closed_graph().weight(0, 1) == ExtRational(Rational(4));
  report("criterion 1.5: octagon pair inexact with (0,3,0,1), w1(0,3)=0, w2(0,1)=4", ok);
}

void criterion1_nnc() {
  auto q1 = parse_nncpoly("nncpoly { dim 2; x1 >= 2; x1 < 4 }");
  auto q2 = parse_nncpoly("nncpoly { x1 = 4; x2 = 2 }");
  auto d = detect_exact_join_nnc(q1, q2);
  Constraint beta = parse_constraint("x1 < 4");
  beta.a.resize(2, Rational(0));
  bool ok = !d.exact && d.witness->side == 1 && d.witness->condition == 1 &&
            d.witness->kind == NncGeneratorKind::ray && d.witness->beta == beta;
  // the vertical ray is a condition-1 witness as stated
  Vec up{Rational(0), Rational(1)};
  ok = ok && saturates_ray(up, beta) && violates(q2, beta) && !q2.subsumes_ray(up);
  report("criterion 1.6: NNC strip/point inexact via condition 1 on a saturating ray", ok);
}

void criterion1_cli(const std::string& cli) {
  if (cli.empty()) {
    report("criterion 1.7: command-line round trip", true, "skipped: no --cli path given");
    return;
  }
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "exactjoin-acceptance";
  fs::create_directories(dir);
  auto write = [&](const char* name, const std::string& text) {
    std::ofstream out(dir / name);
    out << text;
    return (dir / name).string();
  };
  std::string bd1 = write("bd1.txt", "bds { x1 <= 3; -x1 <= 0; x2 <= 2; -x2 <= 0 }");
  std::string bd2 =
      write("bd2.txt", "bds { x2 <= 2; -x2 <= 0; x1 - x2 <= 3; -x1 + x2 <= 0 }");
  std::string p1 = write("p1.txt", "cpoly { x1 >= 0; x2 >= 0; x1 + x2 <= 2 }");
  std::string p2 = write("p2.txt", "cpoly { x1 <= 2; x2 >= 0; x1 - x2 >= 0 }");
  std::string bad = write("bad.txt", "bds { x1 <+ 3 }");
  std::string onedim = write("onedim.txt", "bds { x1 <= 1; -x1 <= 0 }");
  std::string octform = write("octform.txt", "bds { x1 + x2 <= 1 }");

  auto run = [&](const std::string& args) {
    std::string cmd = cli + " " + args + " > /dev/null 2>&1";
    int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
  };
  bool ok = run("exact-join --domain bds " + bd1 + " " + bd2) == 0;
  ok = ok && run("exact-join --domain cpoly " + p1 + " " + p2) == 1;
  ok = ok && run("exact-join --domain cpoly " + p1 + " " + p1) == 0;
  ok = ok && run("exact-join --domain bds " + bad + " " + bd1) == 3;
  ok = ok && run("exact-join --domain bds " + onedim + " " + bd1) == 4;
  ok = ok && run("exact-join --domain bds " + octform + " " + bd1) == 5;
  ok = ok && run("convert --domain cpoly " + p1) == 0;
  report("criterion 1.7: command-line exit codes (0 exact, 1 inexact, 3/4/5 errors)", ok);
}

// ---------- criterion 2: oracle equivalence ----------

void criterion2_boxes() {
  auto t0 = std::chrono::steady_clock::now();
  Rng rng(20001);
  long disagreements = 0;
  for (int t = 0; t < 2000; ++t) {
    std::size_t dims = (std::size_t)rng.uniform(1, 4);
    auto a = random_box(rng, dims, 5, false);
    auto b = random_box(rng, dims, 5, false);
    auto d = detect_exact_join_box(a, b);
    if ((oracle_grid(a, b, Rational(1, 2)) == OracleVerdict::exact) != d.exact)
      ++disagreements;
    if (!d.exact) {
      ++g_witnesses.inexact;
      auto wp = box_witness_point(a, b, *d.witness);
      if (wp && join(a, b).contains_point(*wp) && !a.contains_point(*wp) &&
          !b.contains_point(*wp))
        ++g_witnesses.verified;
    }
  }
  double dt = seconds_since(t0);
  report("criterion 2.1: boxes, 2000 pairs vs half-step grid oracle",
         disagreements == 0 && dt < 60.0,
         std::to_string(disagreements) + " disagreements, " + std::to_string(dt) + " s");
}

void criterion2_bd() {
  Rng rng(20002);
  long disagreements = 0;
  for (int t = 0; t < 1000; ++t) {
    std::size_t dims = (std::size_t)rng.uniform(1, 3);
    BdShape a = random_bd<RationalWeightPolicy>(rng, dims, 4, true);
    BdShape b = random_bd<RationalWeightPolicy>(rng, dims, 4, true);
    auto d = detect_exact_join_bd(a, b);
    if ((oracle_complement_inclusion(a, b) == OracleVerdict::exact) != d.exact)
      ++disagreements;
    if (!d.exact) {
      ++g_witnesses.inexact;
      if (d.witness->disjoint ? meet(a, b).is_empty()
                              : verify_separating_witness(
                                    a, b,
                                    build_separating_witness(a, b, d.witness->i, d.witness->j,
                                                             d.witness->k, d.witness->l)))
        ++g_witnesses.verified;
    }
  }
  long int_disagreements = 0;
  for (int t = 0; t < 1000; ++t) {
    std::size_t dims = (std::size_t)rng.uniform(1, 3);
    IntBdShape a = random_bd<IntegerWeightPolicy>(rng, dims, 4, true);
    IntBdShape b = random_bd<IntegerWeightPolicy>(rng, dims, 4, true);
    auto d = detect_exact_join_bd(a, b);
    if ((oracle_grid(a, b, Rational(1)) == OracleVerdict::exact) != d.exact)
      ++int_disagreements;
    if (!d.exact) {
      ++g_witnesses.inexact;
      if (d.witness->disjoint ? meet(a, b).is_empty()
                              : verify_separating_witness(
                                    a, b,
                                    build_separating_witness(a, b, d.witness->i, d.witness->j,
                                                             d.witness->k, d.witness->l)))
        ++g_witnesses.verified;
    }
  }
  report("criterion 2.2: BD shapes, 1000 rational vs complement oracle + 1000 integer vs grid",
         disagreements == 0 && int_disagreements == 0,
         std::to_string(disagreements) + " + " + std::to_string(int_disagreements) +
             " disagreements");
}

void criterion2_oct() {
  Rng rng(20003);
  long dq = 0, dz = 0;
  for (int t = 0; t < 500; ++t) {
    std::size_t dims = (std::size_t)rng.uniform(1, 2);
    OctShape a = random_oct<RationalWeightPolicy>(rng, dims, 4, true);
    OctShape b = random_oct<RationalWeightPolicy>(rng, dims, 4, true);
    auto d = detect_exact_join_oct(a, b);
    if ((oracle_complement_inclusion(a, b) == OracleVerdict::exact) != d.exact)
      ++dq;
    if (!d.exact) {
      ++g_witnesses.inexact;
      if (d.witness->disjoint
              ? meet(a, b).is_empty()
              : verify_separating_witness_oct(
                    a, b,
                    build_separating_witness_oct(a, b, d.witness->i, d.witness->j,
                                                 d.witness->k, d.witness->l)))
        ++g_witnesses.verified;
    }
  }
  for (int t = 0; t < 500; ++t) {
    std::size_t dims = (std::size_t)rng.uniform(1, 2);
    IntOctShape a = random_oct<IntegerWeightPolicy>(rng, dims, 4, true);
    IntOctShape b = random_oct<IntegerWeightPolicy>(rng, dims, 4, true);
    auto d = detect_exact_join_oct(a, b);
    if ((oracle_grid(a, b, Rational(1)) == OracleVerdict::exact) != d.exact)
      ++dz;
    if (!d.exact) {
      ++g_witnesses.inexact;
      if (d.witness->disjoint
              ? meet(a, b).is_empty()
              : verify_separating_witness_oct(
                    a, b,
                    build_separating_witness_oct(a, b, d.witness->i, d.witness->j,
                                                 d.witness->k, d.witness->l)))
        ++g_witnesses.verified;
    }
  }
  report("criterion 2.3: octagons, 500 rational + 500 integer vs the two oracles",
         dq == 0 && dz == 0, std::to_string(dq) + " + " + std::to_string(dz) + " disagreements");
}

void criterion2_polyhedra() {
  Rng rng(20004);
  long dc = 0, dn = 0, dcross = 0;
  for (int t = 0; t < 300; ++t) {
    std::size_t dims = (std::size_t)rng.uniform(1, 3);
    auto cs1 = random_polyhedron_cs(rng, dims, 6, 3, false);
    auto cs2 = random_polyhedron_cs(rng, dims, 6, 3, false);
    CPolyhedron p1 = CPolyhedron::from_constraints(cs1);
    CPolyhedron p2 = CPolyhedron::from_constraints(cs2);
    auto d = detect_exact_join_closed(p1, p2);
    if ((oracle_complement_inclusion(p1, p2) == OracleVerdict::exact) != d.exact)
      ++dc;
    // closed instances embedded in the NNC domain agree
    NncPolyhedron n1 = NncPolyhedron::from_constraints(cs1);
    NncPolyhedron n2 = NncPolyhedron::from_constraints(cs2);
    if (detect_exact_join_nnc(n1, n2).exact != d.exact)
      ++dcross;
    if (!d.exact) {
      ++g_witnesses.inexact;
      PointVec m = certify_closed_witness(p1, p2, *d.witness);
      if (join(p1, p2).contains_point(m) && !p1.contains_point(m) && !p2.contains_point(m))
        ++g_witnesses.verified;
    }
  }
  for (int t = 0; t < 300; ++t) {
    std::size_t dims = (std::size_t)rng.uniform(1, 3);
    NncPolyhedron p1 =
        NncPolyhedron::from_constraints(random_polyhedron_cs(rng, dims, 6, 3, true));
    NncPolyhedron p2 =
        NncPolyhedron::from_constraints(random_polyhedron_cs(rng, dims, 6, 3, true));
    auto d = detect_exact_join_nnc(p1, p2);
    auto sp = separating_point(p1, p2);
    if (d.exact != !sp.has_value())
      ++dn;
    if (!d.exact) {
      ++g_witnesses.inexact;
      if (sp && join(p1, p2).contains_point(*sp) && !p1.contains_point(*sp) &&
          !p2.contains_point(*sp))
        ++g_witnesses.verified;
    }
  }
  report("criterion 2.4: polyhedra, 300 closed + 300 NNC vs complement oracle, NNC embedding",
         dc == 0 && dn == 0 && dcross == 0,
         std::to_string(dc) + " + " + std::to_string(dn) + " + " + std::to_string(dcross) +
             " disagreements");
}

// ---------- criterion 4: kernel operators and round trips ----------

void criterion4() {
  Rng rng(40001);
  long bad = 0;
  // plain closure
  for (int t = 0; t < 500; ++t) {
    std::size_t n = (std::size_t)rng.uniform(2, 7);
    WeightedGraph g(n);
    std::size_t arcs = (std::size_t)rng.uniform(0, (long)(n * n));
    for (std::size_t u = 0; u < arcs; ++u) {
      std::size_t i = (std::size_t)rng.uniform(0, (long)n - 1);
      std::size_t j = (std::size_t)rng.uniform(0, (long)n - 1);
      if (i != j)
        g.add_arc(i, j, ExtRational(Rational(rng.uniform(-2, 4))));
    }
    auto c = closure(g);
    if (is_consistent(g) != c.has_value())
      ++bad;
    if (!c)
      continue;
    if (!is_closed(*c) || !leq(*c, g) || !(*closure(*c) == *c))
      ++bad;
    auto r = reduction(*c);
    auto cr = closure(r);
    if (!cr || !(*cr == *c))
      ++bad;
  }
  // strong and tight closure with coherence preservation
  for (int t = 0; t < 500; ++t) {
    std::size_t dims = (std::size_t)rng.uniform(1, 3);
    OctGraph g(dims);
    std::size_t arcs = (std::size_t)rng.uniform(0, (long)(4 * dims * dims));
    for (std::size_t u = 0; u < arcs; ++u) {
      std::size_t i = (std::size_t)rng.uniform(0, (long)(2 * dims) - 1);
      std::size_t j = (std::size_t)rng.uniform(0, (long)(2 * dims) - 1);
      if (i != j)
        g.add_arc(i, j, ExtRational(Rational(rng.uniform(-3, 4))));
    }
    auto s = strong_closure(g);
    if (s) {
      if (!s->is_coherent() || !is_strongly_closed(*s) || !leq(*s, g) ||
          !(*strong_closure(*s) == *s))
        ++bad;
      OctGraph red = strong_reduction(*s);
      if (!red.is_coherent() || !(*strong_closure(red) == *s))
        ++bad;
      // monotone against a pointwise-lower graph
      auto sl = strong_closure(oct_glb(g, OctGraph(dims)));
      if (sl && !leq(*sl, *s))
        ++bad;
    }
    auto tc = tight_closure(g);
    if (tc) {
      if (!tc->is_coherent() || !is_tightly_closed(*tc) || !leq(*tc, g) ||
          !(*tight_closure(*tc) == *tc))
        ++bad;
      OctGraph red = tight_reduction(*tc);
      if (!red.is_coherent() || !(*tight_closure(red) == *tc))
        ++bad;
      if (s && !leq(*tc, *s))
        ++bad;
    }
  }
  // DD round trips
  for (int t = 0; t < 300; ++t) {
    std::size_t dims = (std::size_t)rng.uniform(1, 3);
    CPolyhedron p = CPolyhedron::from_constraints(random_polyhedron_cs(rng, dims, 6, 3, false));
    if (p.is_empty())
      continue;
    CPolyhedron rt = CPolyhedron::from_generators(p.generator_system(), dims);
    if (!equals(p, rt))
      ++bad;
    for (const auto& q : p.generator_system().points)
      if (!satisfies_all(q, p.constraint_system()))
        ++bad;
  }
  report("criterion 4: kernel-operator suites (closure/S-closure/T-closure), coherence, "
         "DD round trips",
         bad == 0, std::to_string(bad) + " violations");
}

// ---------- criterion 5: powerset denotation preservation ----------

void criterion5() {
  Rng rng(50001);
  long bad = 0;
  for (int t = 0; t < 500; ++t) {
    std::size_t dims = (std::size_t)rng.uniform(1, 2);
    std::vector<Box<IntInterval>> elems;
    std::size_t count = (std::size_t)rng.uniform(1, 4);
    for (std::size_t u = 0; u < count; ++u)
      elems.push_back(random_int_box(rng, dims, 3));
    auto q = Powerset<Box<IntInterval>>::omega_reduce(elems);
    auto pm = pairwise_merge(q);
    auto fm = full_merge(q, 4);
    auto member = [](const std::vector<Box<IntInterval>>& ds, const PointVec& p) {
      for (const auto& d : ds)
        if (d.contains_point(p))
          return true;
      return false;
    };
    std::vector<long> k(dims, -4);
    for (;;) {
      PointVec p;
      for (long v : k)
        p.push_back(Rational(v));
      bool before = member(elems, p);
      if (member(pm.result.disjuncts(), p) != before ||
          member(fm.result.disjuncts(), p) != before)
        ++bad;
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
        if (exact_join(ds[i], ds[j]))
          ++bad;
  }
  report("criterion 5: pairwise/full merge preserve the union on 500 integer-box powersets",
         bad == 0, std::to_string(bad) + " violations");
}

// ---------- criterion 6: complexity smoke (soft) ----------

void criterion6() {
  // box detection: log-log slope over n in {100, 1000, 10000}. A single
  // call is sub-microsecond, so each sample times a repetition loop; the
  // inputs are self-joins, which never exit the scan early.
  std::vector<std::size_t> sizes{100, 1000, 10000};
  std::vector<double> medians;
  for (std::size_t n : sizes) {
    Rng rng(60001 + n);
    std::vector<NncInterval> comps;
    for (std::size_t i = 0; i < n; ++i)
      comps.push_back(random_nonempty_interval(rng, 5));
    Box<NncInterval> a(comps);
    const long reps = static_cast<long>(2000000 / n);
    std::vector<double> times;
    for (int t = 0; t < 7; ++t) {
      auto t0 = std::chrono::steady_clock::now();
      for (long r = 0; r < reps; ++r)
        detect_exact_join_box(a, a);
      times.push_back(seconds_since(t0) / static_cast<double>(reps));
    }
    std::sort(times.begin(), times.end());
    medians.push_back(times[times.size() / 2]);
  }
  double slope = std::log(medians[2] / medians[0]) / std::log(10000.0 / 100.0);
  report_soft("criterion 6.1: box detection log-log slope",
              slope > 0.7 && slope < 1.3,
              "slope " + std::to_string(slope) + ", medians " + std::to_string(medians[0]) +
                  "/" + std::to_string(medians[1]) + "/" + std::to_string(medians[2]) + " s");

  // BD detection at n = 200 under 5 s per pair (closure dominating). The
  // instances are consistent by construction: bounds straddle zero and
  // difference arcs are non-negative, so no negative cycle can form.
  auto big_bd = [](std::uint64_t seed, std::size_t n) {
    Rng rng(seed);
    WeightedGraph g(n + 1);
    for (std::size_t i = 1; i <= n; ++i) {
      g.add_arc(i, 0, ExtRational(Rational(rng.uniform(0, 50))));
      g.add_arc(0, i, ExtRational(Rational(rng.uniform(0, 50))));
    }
    for (std::size_t t = 0; t < 2 * n; ++t) {
      std::size_t i = (std::size_t)rng.uniform(1, (long)n);
      std::size_t j = (std::size_t)rng.uniform(1, (long)n);
      if (i != j)
        g.add_arc(i, j, ExtRational(Rational(rng.uniform(0, 50))));
    }
    return BdShape::from_graph(n, g);
  };
  double worst = 0;
  for (int t = 0; t < 3; ++t) {
    auto t0 = std::chrono::steady_clock::now();
    BdShape a = big_bd(60100 + 2 * t, 200);
    BdShape b = big_bd(60101 + 2 * t, 200);
    detect_exact_join_bd(a, b);
    worst = std::max(worst, seconds_since(t0));
  }
  report_soft("criterion 6.2: BD detection at n = 200 within 5 s per pair", worst < 5.0,
              "worst " + std::to_string(worst) + " s");
}

// ---------- criterion 7: conjecture fuzzer ----------

void criterion7() {
  const long trials = 10000;
  std::atomic<long> degenerate{0}, agree{0}, disagree{0};
  std::vector<std::string> dumps;
  std::mutex dump_mutex;
  auto worker = [&](long lo, long hi) {
    for (long t = lo; t < hi; ++t) {
      Rng rng(70001u * 1000003u + (std::uint64_t)t);
      std::size_t dims = (std::size_t)rng.uniform(1, 3);
      BdShape b1 = random_bd<RationalWeightPolicy>(rng, dims, 3, true);
      BdShape b2 = random_bd<RationalWeightPolicy>(rng, dims, 3, true);
      BdShape b3 = random_bd<RationalWeightPolicy>(rng, dims, 3, true);
      if (b1.is_empty() || b2.is_empty() || b3.is_empty()) {
        ++degenerate;
        continue;
      }
      bool conj_inexact = conjecture_k3_witness(b1, b2, b3).has_value();
      bool oracle_inexact = !union3_exact(b1, b2, b3);
      if (conj_inexact == oracle_inexact) {
        ++agree;
      } else {
        ++disagree;
        std::ostringstream d;
        d << "# trial " << t << ": conjecture " << (conj_inexact ? "inexact" : "exact")
          << ", oracle " << (oracle_inexact ? "inexact" : "exact") << "\n"
          << b1.str() << "\n"
          << b2.str() << "\n"
          << b3.str() << "\n\n";
        std::lock_guard<std::mutex> lock(dump_mutex);
        dumps.push_back(d.str());
      }
    }
  };
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
  std::vector<std::thread> pool;
  long chunk = (trials + jobs - 1) / jobs;
  for (unsigned w = 0; w < jobs; ++w) {
    long lo = w * chunk, hi = std::min(trials, lo + chunk);
    if (lo < hi)
      pool.emplace_back(worker, lo, hi);
  }
  for (auto& th : pool)
    th.join();
  if (!dumps.empty()) {
    std::sort(dumps.begin(), dumps.end());
    std::ofstream out("conjecture_counterexamples.txt");
    for (const auto& d : dumps)
      out << d;
  }
  // the criterion asks for a completed report, not a verdict on the
  // conjecture; disagreements are dumped as counterexample candidates
  report("criterion 7: conjecture fuzzer, 10000 triples reported",
         agree + disagree + degenerate == trials,
         std::to_string(agree) + " agree, " + std::to_string(disagree) +
             " counterexample candidates, " + std::to_string(degenerate) + " degenerate");
}

} // namespace

int main(int argc, char** argv) {
  std::string cli;
  for (int i = 1; i + 1 < argc; ++i)
    if (std::string(argv[i]) == "--cli")
      cli = argv[i + 1];

  auto t0 = std::chrono::steady_clock::now();
  criterion1_closed_polyhedra();
  criterion1_boxes();
  criterion1_bd_exact_pair();
  criterion1_bd_rational_vs_integer();
  criterion1_octagons();
  criterion1_nnc();
  criterion1_cli(cli);
  criterion2_boxes();
  criterion2_bd();
  criterion2_oct();
  criterion2_polyhedra();
  report("criterion 3: every inexact verdict machine-verified by its witness",
         g_witnesses.inexact == g_witnesses.verified,
         std::to_string(g_witnesses.verified) + "/" + std::to_string(g_witnesses.inexact) +
             " verified");
  criterion4();
  criterion5();
  criterion6();
  criterion7();

  std::cout << (g_failures == 0 ? "ALL CRITERIA PASSED" : "FAILURES PRESENT") << " ("
            << g_failures << " failures, " << seconds_since(t0) << " s total)\n";
  return g_failures == 0 ? 0 : 1;
}
