// Copyright (c) exactjoin contributors.
// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end. Exit codes are the machine contract:
//   0 exact, 1 inexact, 2 generic error, 3 parse failure,
//   4 dimension mismatch, 5 domain-form violation.
// Stdout is versioned: every command prints "format: v1" first.

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include "exactjoin/exactjoin.hpp"

using namespace exactjoin;

namespace {

constexpr const char* kFormat = "format: v1";

[[noreturn]] void die(int code, const std::string& msg) {
  std::cerr << "error: " << msg << "\n";
  std::exit(code);
}

int error_exit_code(const Error& e) {
  switch (e.code()) {
  case Errc::parse: return 3;
  case Errc::dimension_mismatch: return 4;
  case Errc::domain_form: return 5;
  case Errc::precondition: return 2;
  }
  return 2;
}

void check_format_pin() {
  if (const char* v = std::getenv("EXACTJOIN_FORMAT_VERSION")) {
    if (std::string(v) != "v1")
      die(2, std::string("unsupported EXACTJOIN_FORMAT_VERSION '") + v + "' (this build emits v1)");
  }
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    die(2, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Rational parse_rational_arg(const std::string& text) {
  Parser p(text);
  Rational r = p.parse_rational();
  if (!p.at_end())
    throw Error(Errc::parse, "trailing input in rational '" + text + "'");
  return r;
}

// ---- per-domain dispatch ----

enum class Domain { box, int_box, bds, int_bds, oct, int_oct, cpoly, nncpoly };

Domain domain_from(const std::string& name) {
  if (name == "box") return Domain::box;
  if (name == "int_box") return Domain::int_box;
  if (name == "bds") return Domain::bds;
  if (name == "int_bds") return Domain::int_bds;
  if (name == "oct") return Domain::oct;
  if (name == "int_oct") return Domain::int_oct;
  if (name == "cpoly") return Domain::cpoly;
  if (name == "nncpoly") return Domain::nncpoly;
  die(2, "unknown domain '" + name + "'");
}

template <class D>
D parse_shape(Parser& p);

template <>
Box<NncInterval> parse_shape(Parser& p) { return p.parse_box<NncInterval>("box"); }
template <>
Box<IntInterval> parse_shape(Parser& p) { return p.parse_box<IntInterval>("int_box"); }
template <>
BdShape parse_shape(Parser& p) {
  return BdShape::from_constraints(p.parse_constraint_system("bds"));
}
template <>
IntBdShape parse_shape(Parser& p) {
  return IntBdShape::from_constraints(p.parse_constraint_system("int_bds"));
}
template <>
OctShape parse_shape(Parser& p) {
  return OctShape::from_constraints(p.parse_constraint_system("oct"));
}
template <>
IntOctShape parse_shape(Parser& p) {
  return IntOctShape::from_constraints(p.parse_constraint_system("int_oct"));
}

template <class D>
D parse_shape_text(const std::string& text) {
  Parser p(text);
  D d = parse_shape<D>(p);
  if (!p.at_end())
    p.fail("trailing input", p.pos());
  return d;
}
template <>
CPolyhedron parse_shape_text(const std::string& text) { return parse_cpoly(text); }
template <>
NncPolyhedron parse_shape_text(const std::string& text) { return parse_nncpoly(text); }

// ---- witness verification before printing ----

template <class I>
bool verify_witness(const Box<I>& a, const Box<I>& b, const BoxDecision& d) {
  auto p = box_witness_point(a, b, *d.witness);
  return p && join(a, b).contains_point(*p) && !a.contains_point(*p) && !b.contains_point(*p);
}

template <class P>
bool verify_witness(const BdShapeT<P>& a, const BdShapeT<P>& b, const ArcDecision& d) {
  auto w = build_separating_witness(a, b, d.witness->i, d.witness->j, d.witness->k,
                                    d.witness->l);
  return verify_separating_witness(a, b, w);
}

template <class P>
bool verify_witness(const OctShapeT<P>& a, const OctShapeT<P>& b, const ArcDecision& d) {
  auto w = build_separating_witness_oct(a, b, d.witness->i, d.witness->j, d.witness->k,
                                        d.witness->l);
  return verify_separating_witness_oct(a, b, w);
}

bool verify_witness(const CPolyhedron& a, const CPolyhedron& b, const PolyDecision& d) {
  PointVec m = certify_closed_witness(a, b, *d.witness);
  return join(a, b).contains_point(m) && !a.contains_point(m) && !b.contains_point(m);
}

bool verify_witness(const NncPolyhedron& a, const NncPolyhedron& b, const NncDecision& d) {
  const NncWitness& w = *d.witness;
  const NncPolyhedron& pi = w.side == 1 ? a : b;
  const NncPolyhedron& pj = w.side == 1 ? b : a;
  if (!violates(pj, w.beta))
    return false;
  switch (w.condition) {
  case 1:
    if (w.kind == NncGeneratorKind::ray)
      return saturates_ray(w.generator, w.beta) && !pj.subsumes_ray(w.generator);
    return saturates_point(w.generator, w.beta) && !pj.closure_contains_point(w.generator);
  case 2:
    return !w.beta.is_strict() && saturates_point(w.generator, w.beta) &&
           pi.contains_point(w.generator) && !pj.closure_contains_point(w.generator);
  case 3:
    return w.beta.is_strict() && saturates_point(w.generator, w.beta) &&
           join(a, b).contains_point(w.generator) && !pj.contains_point(w.generator);
  }
  return false;
}

template <class D, class Detect>
int run_exact_join_typed(const std::string& ta, const std::string& tb, Detect detect) {
  D a = parse_shape_text<D>(ta);
  D b = parse_shape_text<D>(tb);
  if (dim(a) != dim(b))
    throw Error(Errc::dimension_mismatch, "inputs have different dimensions (" +
                                              std::to_string(dim(a)) + " vs " +
                                              std::to_string(dim(b)) + ")");
  auto d = detect(a, b);
  if (d.exact) {
    std::cout << "exact\n";
    return 0;
  }
  if (!verify_witness(a, b, d))
    die(2, "internal: witness failed re-verification");
  std::cout << "inexact\n";
  std::cout << "witness: " << d.witness->str() << "\n";
  return 1;
}

int run_exact_join(Domain dom, const std::string& file_a, const std::string& file_b) {
  std::string ta = slurp(file_a), tb = slurp(file_b);
  switch (dom) {
  case Domain::box:
    return run_exact_join_typed<Box<NncInterval>>(ta, tb, [](auto& a, auto& b) {
      return detect_exact_join_box(a, b);
    });
  case Domain::int_box:
    return run_exact_join_typed<Box<IntInterval>>(ta, tb, [](auto& a, auto& b) {
      return detect_exact_join_box(a, b);
    });
  case Domain::bds:
    return run_exact_join_typed<BdShape>(ta, tb, [](auto& a, auto& b) {
      return detect_exact_join_bd(a, b);
    });
  case Domain::int_bds:
    return run_exact_join_typed<IntBdShape>(ta, tb, [](auto& a, auto& b) {
      return detect_exact_join_bd(a, b);
    });
  case Domain::oct:
    return run_exact_join_typed<OctShape>(ta, tb, [](auto& a, auto& b) {
      return detect_exact_join_oct(a, b);
    });
  case Domain::int_oct:
    return run_exact_join_typed<IntOctShape>(ta, tb, [](auto& a, auto& b) {
      return detect_exact_join_oct(a, b);
    });
  case Domain::cpoly:
    return run_exact_join_typed<CPolyhedron>(ta, tb, [](auto& a, auto& b) {
      return detect_exact_join_closed(a, b);
    });
  case Domain::nncpoly:
    return run_exact_join_typed<NncPolyhedron>(ta, tb, [](auto& a, auto& b) {
      return detect_exact_join_nnc(a, b);
    });
  }
  return 2;
}

// ---- oracle command ----

std::optional<GridBox> window_box(const std::string& spec, std::size_t dims) {
  if (spec.empty())
    return std::nullopt;
  auto colon = spec.find(':');
  if (colon == std::string::npos)
    throw Error(Errc::parse, "--bbox expects LO:HI");
  Rational lo = parse_rational_arg(spec.substr(0, colon));
  Rational hi = parse_rational_arg(spec.substr(colon + 1));
  GridBox g;
  for (std::size_t i = 0; i < dims; ++i) {
    g.lo.push_back(lo);
    g.hi.push_back(hi);
  }
  return g;
}

int run_oracle(Domain dom, const std::string& kind, const std::string& file_a,
               const std::string& file_b, const Rational& step, const std::string& bbox) {
  std::string ta = slurp(file_a), tb = slurp(file_b);
  auto run = [&](auto a, auto b) -> int {
    OracleVerdict v;
    if (kind == "grid") {
      v = oracle_grid(a, b, step, window_box(bbox, dim(a)));
    } else if (kind == "complement") {
      if constexpr (requires { to_nnc(a); })
        v = oracle_complement_inclusion(a, b);
      else
        die(2, "the complement oracle covers rational domains only; use --kind grid");
    } else {
      die(2, "unknown oracle kind '" + kind + "'");
    }
    std::cout << verdict_name(v) << "\n";
    return v == OracleVerdict::exact ? 0 : 1;
  };
  switch (dom) {
  case Domain::box:
    return run(parse_shape_text<Box<NncInterval>>(ta), parse_shape_text<Box<NncInterval>>(tb));
  case Domain::int_box:
    return run(parse_shape_text<Box<IntInterval>>(ta), parse_shape_text<Box<IntInterval>>(tb));
  case Domain::bds:
    return run(parse_shape_text<BdShape>(ta), parse_shape_text<BdShape>(tb));
  case Domain::int_bds:
    return run(parse_shape_text<IntBdShape>(ta), parse_shape_text<IntBdShape>(tb));
  case Domain::oct:
    return run(parse_shape_text<OctShape>(ta), parse_shape_text<OctShape>(tb));
  case Domain::int_oct:
    return run(parse_shape_text<IntOctShape>(ta), parse_shape_text<IntOctShape>(tb));
  case Domain::cpoly:
    return run(parse_shape_text<CPolyhedron>(ta), parse_shape_text<CPolyhedron>(tb));
  case Domain::nncpoly:
    return run(parse_shape_text<NncPolyhedron>(ta), parse_shape_text<NncPolyhedron>(tb));
  }
  return 2;
}

// ---- merge command ----

template <class D>
int run_merge_typed(const std::string& text, const char* keyword, const std::string& mode,
                    std::size_t size_cap) {
  std::vector<D> elems = parse_powerset_elements<D>(text, [&](Parser& p) {
    return parse_shape<D>(p);
  });
  auto q = Powerset<D>::omega_reduce(elems);
  MergeResult<D> m = mode == "full" ? full_merge(q, size_cap) : pairwise_merge(q);
  std::cout << m.result.str() << "\n";
  std::cout << "disjuncts: " << elems.size() << " -> " << m.result.size() << "\n";
  std::cout << "detection calls: " << m.detect_calls << "\n";
  if (m.size_cap_exceeded)
    std::cout << "size cap exceeded: result may not be fully merged\n";
  (void)keyword;
  return 0;
}

int run_merge(Domain dom, const std::string& file, const std::string& mode,
              std::size_t size_cap) {
  std::string text = slurp(file);
  switch (dom) {
  case Domain::box: return run_merge_typed<Box<NncInterval>>(text, "box", mode, size_cap);
  case Domain::int_box:
    return run_merge_typed<Box<IntInterval>>(text, "int_box", mode, size_cap);
  case Domain::bds: return run_merge_typed<BdShape>(text, "bds", mode, size_cap);
  case Domain::int_bds: return run_merge_typed<IntBdShape>(text, "int_bds", mode, size_cap);
  case Domain::oct: return run_merge_typed<OctShape>(text, "oct", mode, size_cap);
  case Domain::int_oct: return run_merge_typed<IntOctShape>(text, "int_oct", mode, size_cap);
  default: die(2, "merge supports box-like and weakly relational domains");
  }
}

// ---- fuzz-conjecture command ----

int run_fuzz_conjecture(std::size_t trials, std::size_t max_dim, long bound,
                        std::uint64_t seed, unsigned jobs, const std::string& dump_path) {
  std::atomic<std::size_t> agree{0}, disagree{0}, degenerate{0};
  std::vector<std::string> dumps;
  std::mutex dump_mutex;

  auto worker = [&](std::size_t lo, std::size_t hi) {
    for (std::size_t t = lo; t < hi; ++t) {
      Rng rng(seed * 1000003 + t);
      std::size_t dims = 1 + (std::size_t)(rng.raw() % max_dim);
      BdShape b1 = random_bd<RationalWeightPolicy>(rng, dims, bound, true);
      BdShape b2 = random_bd<RationalWeightPolicy>(rng, dims, bound, true);
      BdShape b3 = random_bd<RationalWeightPolicy>(rng, dims, bound, true);
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
        d << "# trial " << t << " seed " << seed << "\n"
          << "# conjecture: " << (conj_inexact ? "inexact" : "exact")
          << ", oracle: " << (oracle_inexact ? "inexact" : "exact") << "\n"
          << b1.str() << "\n" << b2.str() << "\n" << b3.str() << "\n";
        std::lock_guard<std::mutex> lock(dump_mutex);
        dumps.push_back(d.str());
      }
    }
  };

  if (jobs <= 1) {
    worker(0, trials);
  } else {
    std::vector<std::thread> pool;
    std::size_t chunk = (trials + jobs - 1) / jobs;
    for (unsigned w = 0; w < jobs; ++w) {
      std::size_t lo = w * chunk, hi = std::min(trials, lo + chunk);
      if (lo < hi)
        pool.emplace_back(worker, lo, hi);
    }
    for (auto& th : pool)
      th.join();
  }

  std::cout << "trials: " << trials << "\n";
  std::cout << "degenerate (skipped): " << degenerate.load() << "\n";
  std::cout << "agree: " << agree.load() << "\n";
  std::cout << "counterexample candidates: " << disagree.load() << "\n";
  if (!dumps.empty()) {
    std::ofstream out(dump_path);
    std::sort(dumps.begin(), dumps.end());
    for (const auto& d : dumps)
      out << d << "\n";
    std::cout << "dumped to: " << dump_path << "\n";
  }
  return 0;
}

// ---- bench command ----

double time_one(const std::function<void()>& fn) {
  auto t0 = std::chrono::steady_clock::now();
  fn();
  auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double>(t1 - t0).count();
}

int run_bench(const std::string& domain, const std::string& sizes_csv, std::size_t pairs,
              std::uint64_t seed, unsigned jobs) {
  std::vector<std::size_t> sizes;
  {
    std::stringstream ss(sizes_csv);
    std::string tok;
    while (std::getline(ss, tok, ','))
      sizes.push_back(static_cast<std::size_t>(std::stoul(tok)));
  }
  std::cout << "domain,n,pairs,median_seconds\n";
  for (std::size_t n : sizes) {
    std::vector<double> times(pairs, 0.0);
    auto measure = [&](std::size_t lo, std::size_t hi) {
      for (std::size_t t = lo; t < hi; ++t) {
        Rng rng(seed * 7919 + n * 131 + t);
        if (domain == "box") {
          // a self-join of a non-empty box: the scan cannot exit early, so
          // the timing reflects the full O(n) pass
          std::vector<NncInterval> ca;
          for (std::size_t i = 0; i < n; ++i)
            ca.push_back(random_nonempty_interval(rng, 5));
          Box<NncInterval> a(ca);
          const long reps = std::max<long>(1, 200000 / (long)n);
          times[t] = time_one([&] {
                       for (long r = 0; r < reps; ++r)
                         detect_exact_join_box(a, a);
                     }) /
                     (double)reps;
        } else if (domain == "bds") {
          // consistent by construction (bounds straddle zero, difference
          // arcs non-negative): the timing covers one closure+reduction
          // per shape plus the detection scan, with no resampling
          auto make = [&] {
            WeightedGraph g(n + 1);
            for (std::size_t i = 1; i <= n; ++i) {
              g.add_arc(i, 0, ExtRational(Rational(rng.uniform(0, 50))));
              g.add_arc(0, i, ExtRational(Rational(rng.uniform(0, 50))));
            }
            for (std::size_t u = 0; u < 2 * n; ++u) {
              std::size_t i = (std::size_t)rng.uniform(1, (long)n);
              std::size_t j = (std::size_t)rng.uniform(1, (long)n);
              if (i != j)
                g.add_arc(i, j, ExtRational(Rational(rng.uniform(0, 50))));
            }
            return g;
          };
          WeightedGraph ga = make(), gb = make();
          times[t] = time_one([&] {
            BdShape a = BdShape::from_graph(n, ga);
            BdShape b = BdShape::from_graph(n, gb);
            detect_exact_join_bd(a, b);
          });
        } else {
          die(2, "bench supports domains 'box' and 'bds'");
        }
      }
    };
    if (jobs <= 1) {
      measure(0, pairs);
    } else {
      std::vector<std::thread> pool;
      std::size_t chunk = (pairs + jobs - 1) / jobs;
      for (unsigned w = 0; w < jobs; ++w) {
        std::size_t lo = w * chunk, hi = std::min(pairs, lo + chunk);
        if (lo < hi)
          pool.emplace_back(measure, lo, hi);
      }
      for (auto& th : pool)
        th.join();
    }
    std::sort(times.begin(), times.end());
    double median = times[times.size() / 2];
    std::cout << domain << "," << n << "," << pairs << "," << median << "\n";
  }
  return 0;
}

// ---- convert command ----

int run_convert(Domain dom, const std::string& file) {
  std::string text = slurp(file);
  if (dom == Domain::cpoly) {
    CPolyhedron p = parse_cpoly(text);
    if (p.is_empty()) {
      std::cout << "empty\n";
      return 0;
    }
    std::cout << p.constraint_system().str("cpoly") << "\n";
    std::cout << p.generator_system().str() << "\n";
    return 0;
  }
  if (dom == Domain::nncpoly) {
    NncPolyhedron p = parse_nncpoly(text);
    if (p.is_empty()) {
      std::cout << "empty\n";
      return 0;
    }
    std::cout << p.constraint_system().str("nncpoly") << "\n";
    std::cout << p.generator_system().str() << "\n";
    return 0;
  }
  die(2, "convert supports domains 'cpoly' and 'nncpoly'");
}

} // namespace

int main(int argc, char** argv) {
  check_format_pin();

  CLI::App app{"exact join detection for numerical abstractions"};
  app.require_subcommand(1);

  std::string domain = "box", mode = "pairwise", kind = "complement";
  std::string file_a, file_b, file, bbox, step_text = "1";
  std::string sizes = "10,100,1000", dump_path = "conjecture_counterexamples.txt";
  std::size_t trials = 1000, bench_pairs = 9, size_cap = 4, fuzz_dim = 2;
  std::uint64_t seed = 1;
  unsigned jobs = 1;
  long bound = 3;

  auto* cj = app.add_subcommand("exact-join", "decide whether the join of two shapes is exact");
  cj->add_option("--domain", domain)->required();
  cj->add_option("fileA", file_a)->required();
  cj->add_option("fileB", file_b)->required();

  auto* co = app.add_subcommand("oracle", "independent exactness oracle on two shapes");
  co->add_option("--domain", domain)->required();
  co->add_option("--kind", kind)->check(CLI::IsMember({"grid", "complement"}));
  co->add_option("--step", step_text);
  co->add_option("--bbox", bbox, "uniform window LO:HI for the grid oracle");
  co->add_option("fileA", file_a)->required();
  co->add_option("fileB", file_b)->required();

  auto* cm = app.add_subcommand("merge", "simplify a powerset by exact-join merging");
  cm->add_option("--domain", domain)->required();
  cm->add_option("--mode", mode)->check(CLI::IsMember({"pairwise", "full"}));
  cm->add_option("--size-cap", size_cap);
  cm->add_option("file", file)->required();

  auto* cf = app.add_subcommand("fuzz-conjecture",
                                "search for counterexamples to the k = 3 BD conditions");
  cf->add_option("--trials", trials);
  cf->add_option("--dim", fuzz_dim);
  cf->add_option("--bound", bound);
  cf->add_option("--seed", seed);
  cf->add_option("--jobs", jobs);
  cf->add_option("--out", dump_path);

  auto* cb = app.add_subcommand("bench", "timing sweep over instance sizes");
  cb->add_option("--domain", domain)->required();
  cb->add_option("--sizes", sizes);
  cb->add_option("--pairs", bench_pairs);
  cb->add_option("--seed", seed);
  cb->add_option("--jobs", jobs);

  auto* cc = app.add_subcommand("convert", "print both double description sides");
  cc->add_option("--domain", domain)->required();
  cc->add_option("file", file)->required();

  CLI11_PARSE(app, argc, argv);

  std::cout << kFormat << "\n";
  try {
    if (cj->parsed())
      return run_exact_join(domain_from(domain), file_a, file_b);
    if (co->parsed())
      return run_oracle(domain_from(domain), kind, file_a, file_b,
                        parse_rational_arg(step_text), bbox);
    if (cm->parsed())
      return run_merge(domain_from(domain), file, mode, size_cap);
    if (cf->parsed())
      return run_fuzz_conjecture(trials, fuzz_dim, bound, seed, jobs, dump_path);
    if (cb->parsed())
      return run_bench(domain, sizes, bench_pairs, seed, jobs);
    if (cc->parsed())
      return run_convert(domain_from(domain), file);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return error_exit_code(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
