#include "pratio/extremal.hpp"

#include <algorithm>
#include <numeric>

#include "pratio/error.hpp"
#include "pratio/perron.hpp"

namespace pratio {

std::string_view to_string(ExtremalVariant v) {
  switch (v) {
    case ExtremalVariant::d1: return "d1";
    case ExtremalVariant::d2: return "d2";
    case ExtremalVariant::d3: return "d3";
  }
  return "?";
}

namespace {

void require_at_least(std::size_t value, std::size_t minimum, const char* what) {
  if (value < minimum) {
    throw Error(Errc::invalid_argument, std::string(what) + " must be at least " + std::to_string(minimum));
  }
}

// Path edges plus every back edge (vj, vi) with i < j <= n-1, 0-indexed.
std::vector<Edge> path_with_back_edges(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  for (Vertex j = 1; j + 1 < n; ++j) {
    for (Vertex i = 0; i < j; ++i) e.emplace_back(j, i);
  }
  return e;
}

}  // namespace

Digraph construct_extremal(std::size_t n, ExtremalVariant variant) {
  require_at_least(n, 3, "n");
  auto e = path_with_back_edges(n);
  const auto last = static_cast<Vertex>(n - 1);
  if (variant != ExtremalVariant::d2) e.emplace_back(last, 0);
  if (variant != ExtremalVariant::d1) e.emplace_back(last, 1);
  return Digraph(n, e);
}

Rational gamma_formula(std::size_t n) {
  require_at_least(n, 3, "n");
  // (2/3)(n/(n-1) + S/(n-1)!)(n-1)! = (2/3)(n (n-2)! + S)
  Integer sum = 0;
  for (std::size_t i = 1; i + 3 <= n; ++i) sum += factorial(i);
  Rational r(Integer(static_cast<unsigned long>(n)) * factorial(n - 2) + sum);
  r *= Rational(2, 3);
  r.canonicalize();
  return r;
}

std::vector<Rational> d1_closed_form(std::size_t n) {
  require_at_least(n, 3, "n");
  Integer tail = 0;  // sum_{i=0}^{n-3} i!
  for (std::size_t i = 0; i + 3 <= n; ++i) tail += factorial(i);
  Rational x1 = Rational(Integer(static_cast<unsigned long>(n)) * factorial(n - 2), 2) + Rational(tail, 2);
  x1.canonicalize();

  std::vector<Rational> x(n);
  x[0] = x1;
  x[n - 1] = 1;
  for (std::size_t k = 2; k + 1 <= n; ++k) {
    Integer denom = Integer(static_cast<unsigned long>(k + 1)) * factorial(k - 1);
    Integer s = 0;
    for (std::size_t i = 0; i + 2 <= k; ++i) s += factorial(i);
    Rational a(Integer(static_cast<unsigned long>(2 * k)), denom);
    Rational b(Integer(static_cast<unsigned long>(k)) * s, denom);
    a.canonicalize();
    b.canonicalize();
    x[k - 1] = a * x1 - b;
    x[k - 1].canonicalize();
  }
  return x;
}

bool d1_ordering_holds(std::span<const Rational> x) {
  if (x.size() < 3) return false;
  if (!(x[1] > x[0] && x[0] > x[2])) return false;
  for (std::size_t k = 2; k + 1 < x.size(); ++k) {
    if (!(x[k] > x[k + 1])) return false;
  }
  return true;
}

namespace {

bool is_shortest_hamiltonian_path(const Digraph& g, std::span<const Vertex> labeling) {
  const std::size_t n = g.order();
  if (labeling.size() != n) return false;
  std::vector<bool> seen(n, false);
  for (Vertex v : labeling) {
    if (v >= n || seen[v]) return false;
    seen[v] = true;
  }
  std::vector<std::size_t> position(n);
  for (std::size_t i = 0; i < n; ++i) position[labeling[i]] = i;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (!g.has_edge(labeling[i], labeling[i + 1])) return false;
  }
  // No forward shortcut (v_i, v_j) with j >= i + 2.
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex w : g.out_neighbors(u)) {
      if (position[w] >= position[u] + 2) return false;
    }
  }
  return true;
}

}  // namespace

LabeledPathGraph LabeledPathGraph::from_identity(Digraph g) {
  std::vector<Vertex> id(g.order());
  std::iota(id.begin(), id.end(), Vertex{0});
  if (!is_shortest_hamiltonian_path(g, id)) {
    throw Error(Errc::not_shortest_path, "identity labeling is not a shortest v1 -> vn path");
  }
  return LabeledPathGraph(std::move(g), std::move(id));
}

LabeledPathGraph LabeledPathGraph::with_labeling(const Digraph& g, std::vector<Vertex> labeling) {
  if (!is_shortest_hamiltonian_path(g, labeling)) {
    throw Error(Errc::not_shortest_path, "labeling is not a shortest v1 -> vn path");
  }
  std::vector<Vertex> perm(g.order());
  for (std::size_t i = 0; i < labeling.size(); ++i) perm[labeling[i]] = static_cast<Vertex>(i);
  return LabeledPathGraph(g.permuted(perm), std::move(labeling));
}

std::optional<LabeledPathGraph> LabeledPathGraph::find(const Digraph& g) {
  const std::size_t n = g.order();
  if (n == 0) return std::nullopt;
  for (Vertex s = 0; s < n; ++s) {
    auto dist = distances_from(g, s);
    // A vertex at distance n-1 forces every BFS layer to be a singleton,
    // so the path from s is unique.
    std::vector<Vertex> labeling(n, 0);
    std::vector<bool> filled(n, false);
    bool ok = true;
    for (Vertex v = 0; v < n && ok; ++v) {
      if (!dist[v] || filled[*dist[v]]) {
        ok = false;
      } else {
        labeling[*dist[v]] = v;
        filled[*dist[v]] = true;
      }
    }
    if (ok) return with_labeling(g, std::move(labeling));
  }
  return std::nullopt;
}

FGCoefficients fg_coefficients(const LabeledPathGraph& lg) {
  const auto& g = lg.graph();
  const std::size_t n = g.order();
  auto phi = solve_exact(g);
  FGCoefficients out;
  out.f.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.f[i] = phi[static_cast<Vertex>(i)] / phi[static_cast<Vertex>(n - 1)];
    out.f[i].canonicalize();
  }
  auto deg = [&](std::size_t i) { return static_cast<unsigned long>(g.out_degree(static_cast<Vertex>(i))); };
  for (std::size_t k = 1; k < n; ++k) {
    Rational rhs = out.f[k - 1] / deg(k - 1);
    for (Vertex i : g.in_neighbors(static_cast<Vertex>(k))) {
      if (i >= k + 1) rhs += out.f[i] / deg(i);
    }
    if (rhs != out.f[k]) throw Error(Errc::not_stationary, "f recursion fails at index " + std::to_string(k + 1));
  }
  return out;
}

namespace {

// v2 in Vmax, vn in Vmin, dist(Vmax, Vmin) = dist(v2, vn) = n - 2.
bool extremes_at_path_ends(const Digraph& g) {
  const std::size_t n = g.order();
  auto sets = vmax_vmin(solve_exact(g));
  auto contains = [](const std::vector<Vertex>& s, Vertex v) { return std::find(s.begin(), s.end(), v) != s.end(); };
  if (!contains(sets.vmax, 1) || !contains(sets.vmin, static_cast<Vertex>(n - 1))) return false;
  auto between = set_distance(g, sets.vmax, sets.vmin);
  auto direct = distance(g, 1, static_cast<Vertex>(n - 1));
  return between && direct && *between == *direct && *direct == n - 2;
}

bool path_is_shortest(const Digraph& g) {
  auto d = distance(g, 0, static_cast<Vertex>(g.order() - 1));
  return d && *d == g.order() - 1;
}

}  // namespace

FamilyReport check_family_Dn(const LabeledPathGraph& lg) {
  const auto& g = lg.graph();
  const std::size_t n = g.order();
  FamilyReport r;
  if (n < 3) return r;
  r.properties[0] = path_is_shortest(g);
  r.properties[1] = g.out_degree(1) == 2 && (n < 4 || g.out_degree(2) == 3);
  r.properties[2] = true;
  for (std::size_t i = 4; i + 1 <= n; ++i) {
    if (g.out_degree(static_cast<Vertex>(i - 1)) < (2 * i) / 3) r.properties[2] = false;
  }
  r.properties[3] = is_strongly_connected(g) && extremes_at_path_ends(g);
  for (std::size_t j = 4; j + 1 <= n && !r.properties[4]; ++j) {
    for (std::size_t i = 1; i < j; ++i) {
      if (!g.has_edge(static_cast<Vertex>(j - 1), static_cast<Vertex>(i - 1))) {
        r.properties[4] = true;
        break;
      }
    }
  }
  return r;
}

FamilyReport check_family_DnPrime(const LabeledPathGraph& lg) {
  const auto& g = lg.graph();
  const std::size_t n = g.order();
  FamilyReport r;
  if (n < 3) return r;
  const auto last = static_cast<Vertex>(n - 1);
  r.properties[0] = path_is_shortest(g);
  r.properties[1] = true;
  for (std::size_t i = 2; i + 1 <= n; ++i) {
    if (g.out_degree(static_cast<Vertex>(i - 1)) != i) r.properties[1] = false;
  }
  r.properties[2] = is_strongly_connected(g) && extremes_at_path_ends(g);
  r.properties[3] = g.out_degree(last) >= 2;
  auto out = g.out_neighbors(last);
  r.properties[4] = !(out.size() == 2 && out[0] == 0 && out[1] == 1);
  return r;
}

std::optional<Edge> select_added_edge(const LabeledPathGraph& lg) {
  const auto& g = lg.graph();
  const std::size_t n = g.order();
  for (std::size_t t = 4; t <= n; ++t) {
    for (std::size_t s = t - 1; s >= 1; --s) {
      auto from = static_cast<Vertex>(t - 1);
      auto to = static_cast<Vertex>(s - 1);
      if (!g.has_edge(from, to)) return Edge{from, to};
    }
  }
  return std::nullopt;
}

std::optional<Edge> select_deleted_edge(const LabeledPathGraph& lg) {
  const auto& g = lg.graph();
  const std::size_t n = g.order();
  const auto last = static_cast<Vertex>(n - 1);
  for (std::size_t t = n - 1; t >= 3; --t) {
    if (g.has_edge(last, static_cast<Vertex>(t - 1))) return Edge{last, static_cast<Vertex>(t - 1)};
  }
  return std::nullopt;
}

namespace {

std::string failing_properties(const FamilyReport& r) {
  static constexpr std::array<const char*, 5> names{"(i)", "(ii)", "(iii)", "(iv)", "(v)"};
  std::string s;
  for (std::size_t i = 0; i < r.properties.size(); ++i) {
    if (!r.properties[i]) s += (s.empty() ? "" : " ") + std::string(names[i]);
  }
  return s;
}

}  // namespace

Digraph add_edge_transform(const LabeledPathGraph& g) {
  auto report = check_family_Dn(g);
  if (!report.member()) throw Error(Errc::not_in_family, "Dn properties failing: " + failing_properties(report));
  auto e = select_added_edge(g);
  if (!e) throw Error(Errc::not_in_family, "no missing (vt, vs) edge with t >= 4");
  return g.graph().with_edge(e->first, e->second);
}

Digraph delete_edge_transform(const LabeledPathGraph& g) {
  auto report = check_family_DnPrime(g);
  if (!report.member()) throw Error(Errc::not_in_family, "Dn' properties failing: " + failing_properties(report));
  auto e = select_deleted_edge(g);
  if (!e) throw Error(Errc::not_in_family, "no out-edge (vn, vt) with t >= 3");
  return g.graph().without_edge(e->first, e->second);
}

std::optional<LabeledPathGraph> sample_family_Dn(std::size_t n, std::mt19937_64& rng, std::size_t max_attempts) {
  require_at_least(n, 5, "n");
  const auto last = static_cast<Vertex>(n - 1);
  std::vector<Edge> removable;
  for (Vertex j = 3; j + 1 < n; ++j) {
    for (Vertex i = 0; i < j; ++i) removable.emplace_back(j, i);
  }
  for (std::size_t attempt = 0; attempt < max_attempts; ++attempt) {
    auto edges = path_with_back_edges(n);
    switch (std::uniform_int_distribution<int>(0, 2)(rng)) {
      case 0: edges.emplace_back(last, 0); break;
      case 1: edges.emplace_back(last, 1); break;
      default: {
        std::bernoulli_distribution coin(0.3);
        bool any = false;
        for (Vertex i = 0; i < last; ++i) {
          if (coin(rng)) {
            edges.emplace_back(last, i);
            any = true;
          }
        }
        if (!any) edges.emplace_back(last, 0);
      }
    }
    Digraph dense(n, edges);

    std::vector<std::size_t> degree(n);
    for (Vertex v = 0; v < n; ++v) degree[v] = dense.out_degree(v);
    auto order = removable;
    std::shuffle(order.begin(), order.end(), rng);
    auto budget = std::uniform_int_distribution<std::size_t>(1, order.size())(rng);
    std::vector<Edge> drop;
    for (const auto& [j, i] : order) {
      if (drop.size() == budget) break;
      const std::size_t floor_bound = (2 * (j + 1)) / 3;
      if (degree[j] - 1 < floor_bound) continue;
      --degree[j];
      drop.push_back({j, i});
    }
    if (drop.empty()) continue;
    std::sort(drop.begin(), drop.end());
    std::vector<Edge> kept;
    for (const auto& e : dense.edges()) {
      if (!std::binary_search(drop.begin(), drop.end(), e)) kept.push_back(e);
    }
    Digraph g(n, kept);
    if (!is_strongly_connected(g)) continue;
    auto lg = LabeledPathGraph::from_identity(std::move(g));
    if (check_family_Dn(lg).member()) return lg;
  }
  return std::nullopt;
}

std::optional<LabeledPathGraph> sample_family_DnPrime(std::size_t n, std::mt19937_64& rng,
                                                      std::size_t max_attempts) {
  require_at_least(n, 4, "n");
  const auto last = static_cast<Vertex>(n - 1);
  std::bernoulli_distribution coin(0.5);
  for (std::size_t attempt = 0; attempt < max_attempts; ++attempt) {
    auto edges = path_with_back_edges(n);
    std::vector<Vertex> targets;
    for (Vertex i = 0; i < last; ++i) {
      if (coin(rng)) targets.push_back(i);
    }
    if (targets.size() < 2 || (targets.size() == 2 && targets[0] == 0 && targets[1] == 1)) continue;
    for (Vertex t : targets) edges.emplace_back(last, t);
    auto lg = LabeledPathGraph::from_identity(Digraph(n, edges));
    if (check_family_DnPrime(lg).member()) return lg;
  }
  return std::nullopt;
}

DegreeCounterexample degree_counterexample(std::size_t n) {
  require_at_least(n, 2, "n");
  const auto first = static_cast<Vertex>(0);
  const auto e = static_cast<Vertex>(n - 1);
  const auto b = static_cast<Vertex>(n);
  const auto second = static_cast<Vertex>(n + 1);
  const auto d = static_cast<Vertex>(2 * n);

  std::vector<Edge> edges;
  auto complete_on = [&](Vertex lo, Vertex hi) {
    for (Vertex u = lo; u <= hi; ++u) {
      for (Vertex v = lo; v <= hi; ++v) {
        if (u != v) edges.emplace_back(u, v);
      }
    }
  };
  complete_on(first, e);
  complete_on(second, d);
  for (Vertex u = first; u <= e; ++u) edges.emplace_back(u, b);
  for (Vertex v = second; v <= d; ++v) edges.emplace_back(b, v);
  edges.emplace_back(d, e);

  DegreeCounterexample out{Digraph(2 * n + 1, edges), {}, e, b, {}, d};
  for (Vertex u = first; u < e; ++u) out.a_side.push_back(u);
  for (Vertex u = second; u < d; ++u) out.c_side.push_back(u);
  return out;
}

Digraph construct_degree_counterexample(std::size_t n) { return degree_counterexample(n).graph; }

std::vector<Rational> degree_counterexample_vector(std::size_t n) {
  auto layout = degree_counterexample(n);
  const Rational nn(static_cast<unsigned long>(n));
  std::vector<Rational> x(2 * n + 1);
  for (Vertex a : layout.a_side) x[a] = 1;
  x[layout.b] = (nn + 1) / nn;
  for (Vertex c : layout.c_side) x[c] = (nn + 1) * (nn + 1) * (nn - 1) / (nn * nn);
  x[layout.d] = nn + 1;
  x[layout.e] = 2;
  for (auto& q : x) q.canonicalize();
  return x;
}

Digraph construct_h_graph(std::size_t m) {
  require_at_least(m, 2, "m");
  std::vector<Edge> edges;
  for (Vertex j = 0; j < m; ++j) edges.emplace_back(j, static_cast<Vertex>((j + 1) % m));
  for (Vertex j = 1; j + 1 < m; ++j) edges.emplace_back(j, 0);
  return Digraph(m, edges);
}

Digraph construct_discrepancy_counterexample(std::size_t m, std::size_t k) {
  require_at_least(m, 2, "m");
  require_at_least(k, 2, "k");
  auto edges = construct_h_graph(m).edges();
  const auto hub = static_cast<Vertex>(m);
  for (Vertex u = hub; u < m + k; ++u) {
    for (Vertex v = hub; v < m + k; ++v) {
      if (u != v) edges.emplace_back(u, v);
    }
  }
  edges.emplace_back(0, hub);
  edges.emplace_back(hub, 0);
  return Digraph(m + k, edges);
}

}  // namespace pratio
