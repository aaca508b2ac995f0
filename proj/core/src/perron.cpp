#include "pratio/perron.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "pratio/error.hpp"

namespace pratio {

StochasticMatrix::StochasticMatrix(const Digraph& g) : rows_(g.order()) {
  for (Vertex u = 0; u < g.order(); ++u) {
    auto d = g.out_degree(u);
    if (d == 0) throw Error(Errc::sink_vertex, "vertex " + std::to_string(u));
    Rational w(1, static_cast<unsigned long>(d));
    for (Vertex v : g.out_neighbors(u)) rows_[u].push_back({v, w});
  }
}

Rational StochasticMatrix::at(Vertex u, Vertex v) const {
  for (const auto& e : rows_[u]) {
    if (e.column == v) return e.value;
  }
  return Rational(0);
}

std::vector<Rational> StochasticMatrix::left_multiply(std::span<const Rational> x) const {
  std::vector<Rational> y(order());
  for (Vertex u = 0; u < order(); ++u) {
    for (const auto& e : rows_[u]) y[e.column] += x[u] * e.value;
  }
  return y;
}

StochasticMatrix transition_matrix(const Digraph& g) { return StochasticMatrix(g); }

RationalDistribution::RationalDistribution(std::vector<Rational> entries) : entries_(std::move(entries)) {
  Rational total;
  for (auto& q : entries_) {
    q.canonicalize();
    if (sgn(q) <= 0) throw Error(Errc::nonpositive_entry, format(q));
    total += q;
  }
  if (total != 1) throw Error(Errc::invalid_argument, "entries sum to " + format(total));
}

namespace {

// Solves d+(v) y(v) - sum_{u -> v} y(u) = 0 (one row replaced by
// sum_v d+(v) y(v) = 1) by fraction-free elimination. The stationary
// vector is then phi(v) = d+(v) y(v); y is the edge flow phi(v)/d+(v).
std::vector<Rational> solve_flow(const Digraph& g) {
  const std::size_t n = g.order();
  // Augmented matrix, column n is the right-hand side.
  std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n + 1));
  for (Vertex v = 0; v < n; ++v) {
    a[v][v] = static_cast<unsigned long>(g.out_degree(v));
    for (Vertex u : g.in_neighbors(v)) a[v][u] -= 1;
  }
  for (Vertex v = 0; v < n; ++v) a[0][v] = static_cast<unsigned long>(g.out_degree(v));
  a[0][n] = 1;

  Integer prev_pivot = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t best = k;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (mpz_cmpabs(a[i][k].get_mpz_t(), a[best][k].get_mpz_t()) > 0) best = i;
    }
    if (sgn(a[best][k]) == 0) throw Error(Errc::not_strongly_connected, "singular stationary system");
    std::swap(a[k], a[best]);
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j <= n; ++j) {
        a[i][j] = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev_pivot.get_mpz_t());
      }
      a[i][k] = 0;
    }
    prev_pivot = a[k][k];
  }

  std::vector<Rational> y(n);
  for (std::size_t k = n; k-- > 0;) {
    Rational acc(a[k][n]);
    for (std::size_t j = k + 1; j < n; ++j) acc -= Rational(a[k][j]) * y[j];
    y[k] = acc / Rational(a[k][k]);
    y[k].canonicalize();
  }
  return y;
}

void require_solvable(const Digraph& g) {
  if (!is_strongly_connected(g)) throw Error(Errc::not_strongly_connected, std::to_string(g.order()) + " vertices");
}

}  // namespace

RationalDistribution solve_exact(const Digraph& g) {
  require_solvable(g);
  if (g.order() == 1) return RationalDistribution({Rational(1)});
  auto y = solve_flow(g);
  std::vector<Rational> phi(g.order());
  for (Vertex v = 0; v < g.order(); ++v) phi[v] = y[v] * static_cast<unsigned long>(g.out_degree(v));

  auto check = transition_matrix(g).left_multiply(phi);
  if (check != phi) throw Error(Errc::not_stationary, "exact solve failed substitution check");
  return RationalDistribution(std::move(phi));
}

std::vector<Integer> stationary_integers(const Digraph& g) {
  auto phi = solve_exact(g);
  Integer lcm = 1;
  for (const auto& q : phi.entries()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den_mpz_t());
  std::vector<Integer> out;
  out.reserve(phi.size());
  Integer gcd = 0;
  for (const auto& q : phi.entries()) {
    Integer z = q.get_num() * (lcm / q.get_den());
    mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), z.get_mpz_t());
    out.push_back(std::move(z));
  }
  for (auto& z : out) z /= gcd;
  return out;
}

FloatDistribution solve_power(const Digraph& g, double tol, std::size_t max_iter) {
  require_solvable(g);
  if (!(tol > 0.0)) throw Error(Errc::invalid_argument, "tolerance must be positive");
  if (max_iter == 0) throw Error(Errc::invalid_argument, "max_iter must be positive");
  const std::size_t n = g.order();
  std::vector<double> inv_deg(n);
  for (Vertex u = 0; u < n; ++u) {
    if (g.out_degree(u) == 0 && n > 1) throw Error(Errc::sink_vertex, "vertex " + std::to_string(u));
    inv_deg[u] = g.out_degree(u) ? 1.0 / static_cast<double>(g.out_degree(u)) : 0.0;
  }

  FloatDistribution result;
  std::vector<double> x(n, 1.0 / static_cast<double>(n)), next(n);
  auto walk_step = [&](const std::vector<double>& from, std::vector<double>& to) {
    std::fill(to.begin(), to.end(), 0.0);
    for (Vertex u = 0; u < n; ++u) {
      double share = from[u] * inv_deg[u];
      for (Vertex v : g.out_neighbors(u)) to[v] += share;
    }
  };

  if (n == 1) {
    result.entries = {1.0};
    result.converged = true;
    return result;
  }
  for (std::size_t it = 1; it <= max_iter; ++it) {
    walk_step(x, next);
    double change = 0.0;
    for (std::size_t v = 0; v < n; ++v) {
      double lazy = 0.5 * (x[v] + next[v]);
      change += std::abs(lazy - x[v]);
      next[v] = lazy;
    }
    x.swap(next);
    result.iterations = it;
    if (change < tol) {
      result.converged = true;
      break;
    }
  }
  double total = std::accumulate(x.begin(), x.end(), 0.0);
  for (auto& v : x) v /= total;
  walk_step(x, next);
  for (std::size_t v = 0; v < n; ++v) result.residual += std::abs(next[v] - x[v]);
  result.entries = std::move(x);
  return result;
}

Rational principal_ratio(std::span<const Rational> phi) {
  if (phi.empty()) throw Error(Errc::invalid_argument, "empty distribution");
  auto [lo, hi] = std::minmax_element(phi.begin(), phi.end());
  if (sgn(*lo) <= 0) throw Error(Errc::nonpositive_entry, format(*lo));
  Rational r = *hi / *lo;
  r.canonicalize();
  return r;
}

Rational principal_ratio(const RationalDistribution& phi) { return principal_ratio(phi.entries()); }

Rational principal_ratio(std::span<const Integer> phi) {
  if (phi.empty()) throw Error(Errc::invalid_argument, "empty distribution");
  auto [lo, hi] = std::minmax_element(phi.begin(), phi.end());
  if (sgn(*lo) <= 0) throw Error(Errc::nonpositive_entry, lo->get_str());
  Rational r(*hi, *lo);
  r.canonicalize();
  return r;
}

double principal_ratio(const FloatDistribution& phi) {
  if (phi.entries.empty()) throw Error(Errc::invalid_argument, "empty distribution");
  auto [lo, hi] = std::minmax_element(phi.entries.begin(), phi.entries.end());
  if (!(*lo > 0.0)) throw Error(Errc::nonpositive_entry, std::to_string(*lo));
  return *hi / *lo;
}

Rational principal_ratio(const Digraph& g) { return principal_ratio(solve_exact(g)); }

ExtremeSets vmax_vmin(std::span<const Rational> phi) {
  ExtremeSets out;
  if (phi.empty()) return out;
  auto [lo, hi] = std::minmax_element(phi.begin(), phi.end());
  for (Vertex v = 0; v < phi.size(); ++v) {
    if (phi[v] == *hi) out.vmax.push_back(v);
    if (phi[v] == *lo) out.vmin.push_back(v);
  }
  return out;
}

ExtremeSets vmax_vmin(const RationalDistribution& phi) { return vmax_vmin(phi.entries()); }

ExtremeSets vmax_vmin(const FloatDistribution& phi, double rel_tol) {
  ExtremeSets out;
  const auto& x = phi.entries;
  if (x.empty()) return out;
  auto [lo, hi] = std::minmax_element(x.begin(), x.end());
  for (Vertex v = 0; v < x.size(); ++v) {
    if (*hi - x[v] <= rel_tol * std::abs(*hi)) out.vmax.push_back(v);
    if (x[v] - *lo <= rel_tol * std::abs(*lo)) out.vmin.push_back(v);
  }
  return out;
}

const Rational& Circulation::at(Vertex u, Vertex v) const {
  auto it = std::lower_bound(edges.begin(), edges.end(), Edge{u, v});
  if (it == edges.end() || *it != Edge{u, v}) {
    throw Error(Errc::wrong_edge_set, "no flow on (" + std::to_string(u) + "," + std::to_string(v) + ")");
  }
  return flow[static_cast<std::size_t>(it - edges.begin())];
}

Circulation circulation_of(const Digraph& g, const RationalDistribution& phi) {
  if (phi.size() != g.order()) throw Error(Errc::not_stationary, "size mismatch");
  auto check = transition_matrix(g).left_multiply(phi.entries());
  if (!std::equal(check.begin(), check.end(), phi.entries().begin())) {
    throw Error(Errc::not_stationary, "phi P != phi");
  }
  Circulation f;
  f.edges = g.edges();
  f.flow.reserve(f.edges.size());
  for (const auto& [u, v] : f.edges) {
    Rational q = phi[u] / static_cast<unsigned long>(g.out_degree(u));
    q.canonicalize();
    f.flow.push_back(q);
  }
  return f;
}

bool verify_circulation(const Digraph& g, const Circulation& f) {
  if (f.edges != g.edges() || f.flow.size() != f.edges.size()) {
    throw Error(Errc::wrong_edge_set, "flow edges differ from graph edges");
  }
  std::vector<Rational> in(g.order()), out(g.order());
  for (std::size_t i = 0; i < f.edges.size(); ++i) {
    const auto& [u, v] = f.edges[i];
    if (sgn(f.flow[i]) < 0) return false;
    out[u] += f.flow[i];
    in[v] += f.flow[i];
  }
  return in == out;
}

std::vector<double> walk_profile(const Digraph& g, Vertex start, std::size_t steps) {
  if (start >= g.order()) throw Error(Errc::index_out_of_range, "vertex " + std::to_string(start));
  if (!is_aperiodic(g)) throw Error(Errc::periodic_graph, "period " + std::to_string(period(g)));
  auto exact = solve_exact(g);
  const std::size_t n = g.order();
  std::vector<double> phi(n);
  for (Vertex v = 0; v < n; ++v) phi[v] = exact[v].get_d();

  std::vector<double> f(n, 0.0), next(n);
  f[start] = 1.0;
  std::vector<double> tv;
  tv.reserve(steps + 1);
  auto distance_to_phi = [&] {
    double s = 0.0;
    for (std::size_t v = 0; v < n; ++v) s += std::abs(f[v] - phi[v]);
    return std::clamp(0.5 * s, 0.0, 1.0);
  };
  tv.push_back(distance_to_phi());
  for (std::size_t k = 1; k <= steps; ++k) {
    std::fill(next.begin(), next.end(), 0.0);
    for (Vertex u = 0; u < n; ++u) {
      double share = f[u] / static_cast<double>(g.out_degree(u));
      for (Vertex v : g.out_neighbors(u)) next[v] += share;
    }
    f.swap(next);
    tv.push_back(distance_to_phi());
  }
  return tv;
}

}  // namespace pratio
