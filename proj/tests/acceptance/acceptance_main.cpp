#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "oracles.hpp"
#include "pratio/bounds.hpp"
#include "pratio/error.hpp"
#include "pratio/extremal.hpp"
#include "pratio/oracle.hpp"
#include "pratio/perron.hpp"

namespace {

using namespace pratio;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void fail(const std::string& why) {
    if (pass) detail << why;
    else detail << "; " << why;
    pass = false;
  }
};

Rational rq(long p, long q = 1) { return make_rational(p, q); }

std::vector<Rational> normalized(std::vector<Rational> x) {
  Rational s;
  for (const auto& v : x) s += v;
  for (auto& v : x) v /= s;
  return x;
}

std::vector<Rational> as_vector(const RationalDistribution& phi) { return {phi.entries().begin(), phi.entries().end()}; }

Outcome exhaustive_maximum(unsigned jobs) {
  Outcome o;
  const Rational expected[] = {2, 6, 22};
  for (std::size_t n = 3; n <= 5; ++n) {
    auto t0 = std::chrono::steady_clock::now();
    auto r = verify_theorem2(n, {false, jobs});
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    o.detail << "n=" << n << " max=" << format(r.enumeration.max_ratio)
             << " classes=" << r.enumeration.witness_iso_classes() << " (" << secs << "s) ";
    if (r.enumeration.max_ratio != expected[n - 3] || r.formula != expected[n - 3]) o.fail("wrong maximum at n=" + std::to_string(n));
    if (r.enumeration.witness_iso_classes() != 3 || !r.ok()) o.fail("extremal classes differ at n=" + std::to_string(n));
  }
  return o;
}

Outcome closed_form_agreement() {
  Outcome o;
  for (std::size_t n = 3; n <= 12; ++n) {
    auto g = construct_extremal(n, ExtremalVariant::d1);
    auto x = d1_closed_form(n);
    if (normalized(x) != as_vector(solve_exact(g))) o.fail("closed form differs from solver at n=" + std::to_string(n));
    if (!d1_ordering_holds(x)) {
      std::ostringstream s;
      s << "strict ordering fails at n=" << n << " (x =";
      for (const auto& v : x) s << ' ' << format(v);
      s << ')';
      o.fail(s.str());
    }
  }
  if (o.pass) o.detail << "n=3..12";
  return o;
}

Outcome triple_ratio() {
  Outcome o;
  for (std::size_t n = 3; n <= 12; ++n) {
    for (auto v : kExtremalVariants) {
      if (principal_ratio(construct_extremal(n, v)) != gamma_formula(n)) {
        o.fail(std::string(to_string(v)) + " at n=" + std::to_string(n));
      }
    }
  }
  if (o.pass) o.detail << "n=3..12, 3 variants";
  return o;
}

Outcome transform_monotonicity() {
  Outcome o;
  std::mt19937_64 rng(20240601);
  std::size_t plus = 0, minus = 0;
  for (std::size_t n = 6; n <= 10; ++n) {
    for (int i = 0; i < 20; ++i) {
      auto g = sample_family_Dn(n, rng);
      if (!g) {
        o.fail("edge-addition sampler gave up at n=" + std::to_string(n));
        continue;
      }
      if (principal_ratio(add_edge_transform(*g)) > principal_ratio(g->graph())) ++plus;
      else o.fail("edge addition did not raise the ratio at n=" + std::to_string(n));
      auto h = sample_family_DnPrime(n, rng);
      if (!h) {
        o.fail("edge-deletion sampler gave up at n=" + std::to_string(n));
        continue;
      }
      if (principal_ratio(delete_edge_transform(*h)) > principal_ratio(h->graph())) ++minus;
      else o.fail("edge deletion did not raise the ratio at n=" + std::to_string(n));
    }
  }
  if (plus < 100 || minus < 100) o.fail("too few samples");
  o.detail << " addition=" << plus << " deletion=" << minus;
  return o;
}

Outcome degree_counterexample_check() {
  Outcome o;
  for (std::size_t n = 3; n <= 20; ++n) {
    auto ce = degree_counterexample(n);
    long m = static_cast<long>(n);
    std::vector<Rational> x(2 * n + 1);
    for (Vertex v : ce.a_side) x[v] = 1;
    x[ce.b] = rq(m + 1, m);
    for (Vertex v : ce.c_side) x[v] = rq((m + 1) * (m + 1) * (m - 1), m * m);
    x[ce.d] = m + 1;
    x[ce.e] = 2;
    auto phi = solve_exact(ce.graph);
    if (as_vector(phi) != normalized(x)) o.fail("vector differs at n=" + std::to_string(n));
    if (principal_ratio(phi) != m + 1) o.fail("ratio differs at n=" + std::to_string(n));
  }
  if (o.pass) o.detail << "n=3..20";
  return o;
}

Outcome cycle_with_back_edges() {
  Outcome o;
  std::ostringstream observed;
  for (std::size_t m = 3; m <= 20; ++m) {
    Rational target(power(2, m - 1));
    auto h = principal_ratio(construct_h_graph(m));
    if (h != target) {
      if (o.pass) observed << "standalone ratio != 2^(m-1):";
      observed << " m=" << m << "->" << format(h);
      o.pass = false;
    }
    auto composite = principal_ratio(construct_discrepancy_counterexample(m, m));
    if (composite < target) o.detail << "composite below 2^(m-1) at m=" << m << ' ';
    if (composite < target) o.pass = false;
  }
  o.detail << observed.str();
  return o;
}

Outcome bound_soundness() {
  Outcome o;
  std::mt19937_64 rng(11);
  std::size_t conditional = 0;
  auto corpus = testing::strongly_connected_corpus(1000, 10, 2024);
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const auto& g = corpus[i];
    auto n = g.order();
    std::vector<Vertex> walk{std::uniform_int_distribution<Vertex>(0, static_cast<Vertex>(n - 1))(rng)};
    for (std::size_t k = std::uniform_int_distribution<std::size_t>(0, 2 * n)(rng); k-- > 0;) {
      auto out = g.out_neighbors(walk.back());
      walk.push_back(out[std::uniform_int_distribution<std::size_t>(0, out.size() - 1)(rng)]);
    }
    if (!path_product_bound(g, walk).verified) o.fail("path product at graph " + std::to_string(i));
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = 0; v < n; ++v) {
        if (!falling_factorial_bound(g, u, v).verified) o.fail("falling factorial at graph " + std::to_string(i));
      }
    }
    auto r = extremal_structure_report(g);
    if (r.distance_bound == Applicability::violated) o.fail("distance bound at graph " + std::to_string(i));
    if (r.half_factorial_bound == Applicability::violated) o.fail("half factorial at graph " + std::to_string(i));
    if (r.half_factorial_bound == Applicability::holds) ++conditional;
    if (r.ratio > Rational(chung_bound(g))) o.fail("k^d at graph " + std::to_string(i));
    if (r.ratio > Rational(lynn_timlake_bound(n))) o.fail("(n-1)^(n-1) at graph " + std::to_string(i));
  }
  o.detail << " graphs=" << corpus.size() << " conditional_applied=" << conditional;
  return o;
}

Outcome sufficient_condition(unsigned jobs) {
  Outcome o;
  DiscrepancyOptions opts;
  opts.jobs = jobs;
  std::size_t certified = 0;
  auto certify = [&](const Digraph& g, const Theorem3Params& p, const std::string& name) {
    auto r = theorem3_check(g, p, opts);
    if (!r.degree_ok || !r.discrepancy_ok || !r.discrepancy.exhaustive) return false;
    if (!r.bound_holds || !*r.bound_holds) o.fail("ratio exceeds 1/C on " + name);
    else ++certified;
    return true;
  };
  for (std::size_t n = 6; n <= 14; ++n) {
    Rational inv = rq(1, static_cast<long>(n));
    if (!certify(complete_digraph(n), {1, 1, inv, inv, inv}, "K" + std::to_string(n))) {
      o.fail("complete digraph on " + std::to_string(n) + " vertices not certified");
    }
  }
  for (std::size_t n = 4; n <= 6; ++n) {
    long N = static_cast<long>(2 * n + 1), m = static_cast<long>(n);
    Theorem3Params p{rq(2 * m - 1, 2 * N), rq(1, 4), rq(m - 1, N), rq(m - 1, N), rq(1, 2 * N)};
    auto r = theorem3_check(construct_degree_counterexample(n), p, opts);
    if (!r.degree_ok || r.discrepancy_ok) o.fail("degree counterexample misclassified at n=" + std::to_string(n));
  }
  for (std::size_t m = 3; m <= 6; ++m) {
    auto r = theorem3_check(construct_discrepancy_counterexample(m, 6), {rq(1, 2), rq(1, 100), rq(1, 4), rq(1, 4), rq(1, 20)}, opts);
    if (r.degree_ok) o.fail("cycle composite passes the degree condition at m=" + std::to_string(m));
  }
  std::mt19937_64 rng(3);
  for (int i = 0; i < 120; ++i) {
    std::size_t n = 6 + static_cast<std::size_t>(i % 9);
    auto g = testing::random_digraph(n, 0.8, rng);
    if (!is_strongly_connected(g)) continue;
    auto p = infer_theorem3_params(g, rq(1, 4), rq(1, 4));
    if (p.a <= 5 * p.eps || p.b <= 0) continue;
    certify(g, p, "random graph " + std::to_string(i));
  }
  o.detail << " certified=" << certified;
  return o;
}

Outcome solver_cross_validation() {
  Outcome o;
  double worst = 0.0;
  std::size_t eulerian = 0;
  auto check_eulerian = [&](const Digraph& g) {
    auto phi = solve_exact(g);
    for (Vertex v = 0; v < g.order(); ++v) {
      if (phi[v] != rq(static_cast<long>(g.out_degree(v)), static_cast<long>(g.size()))) {
        o.fail("Eulerian closed form differs");
        return;
      }
    }
    ++eulerian;
  };
  for (const auto& g : testing::strongly_connected_corpus(1000, 10, 2024)) {
    auto exact = solve_exact(g);
    auto approx = solve_power(g, 1e-13);
    for (Vertex v = 0; v < g.order(); ++v) worst = std::max(worst, std::abs(approx.entries[v] - exact[v].get_d()));
    if (is_eulerian(g)) check_eulerian(g);
  }
  std::mt19937_64 rng(77);
  for (int i = 0; i < 300; ++i) check_eulerian(testing::random_eulerian(2 + static_cast<std::size_t>(i % 9), rng));
  if (worst > 1e-10) o.fail("float solver deviates");
  o.detail << " max_abs_diff=" << worst << " eulerian=" << eulerian;
  return o;
}

Outcome asymptotic_envelope() {
  Outcome o;
  for (std::size_t n = 5; n <= 30; ++n) {
    Rational q = gamma_formula(n) / Rational(factorial(n - 1));
    if (!(q > rq(2, 3)) || q > rq(2, 3) + rq(2, static_cast<long>(n))) o.fail("outside envelope at n=" + std::to_string(n));
  }
  if (o.pass) o.detail << "n=5..30";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance suite"};
  unsigned jobs = 4;
  app.add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  CLI11_PARSE(app, argc, argv);

  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {"exhaustive maximum ratio for n=3,4,5", [&] { return exhaustive_maximum(jobs); }},
      {"D1 closed form and strict ordering for n=3..12", closed_form_agreement},
      {"D1, D2, D3 share the closed-form ratio for n=3..12", triple_ratio},
      {"edge addition/deletion strictly raise the ratio", transform_monotonicity},
      {"degree counterexample vector and ratio n+1", degree_counterexample_check},
      {"cycle with back edges: ratio 2^(m-1), composite at least 2^(m-1)", cycle_with_back_edges},
      {"path, falling-factorial, distance and prior bounds on 1000 graphs", bound_soundness},
      {"degree + discrepancy certificate implies ratio <= 1/C", [&] { return sufficient_condition(jobs); }},
      {"power iteration vs exact solver, Eulerian closed form", solver_cross_validation},
      {"gamma(n)/(n-1)! within (2/3, 2/3 + 2/n] for n=5..30", asymptotic_envelope},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    if (!o.pass) ++failures;
    auto detail = o.detail.str();
    detail.erase(0, detail.find_first_not_of(' '));
    detail.erase(detail.find_last_not_of(' ') + 1);
    std::printf("%s %2zu  %s  [%s]\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].name, detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - static_cast<std::size_t>(failures), criteria.size());
  return failures == 0 ? 0 : 1;
}
