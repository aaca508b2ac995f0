#include "pratio/bounds.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <thread>

#include "pratio/error.hpp"
#include "pratio/perron.hpp"

namespace pratio {

CheckedBound path_product_bound(const Digraph& g, std::span<const Vertex> path) {
  if (path.empty()) throw Error(Errc::not_a_walk, "empty path");
  for (Vertex v : path) {
    if (v >= g.order()) throw Error(Errc::index_out_of_range, "vertex " + std::to_string(v));
  }
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    if (!g.has_edge(path[i], path[i + 1])) {
      throw Error(Errc::not_a_walk,
                  "(" + std::to_string(path[i]) + "," + std::to_string(path[i + 1]) + ") is not an edge");
    }
  }
  CheckedBound out;
  out.bound = 1;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) out.bound *= static_cast<unsigned long>(g.out_degree(path[i]));
  auto phi = solve_exact(g);
  out.ratio = phi[path.front()] / phi[path.back()];
  out.ratio.canonicalize();
  out.verified = out.ratio <= Rational(out.bound);
  return out;
}

Integer falling_factorial(std::size_t n, std::size_t k) {
  if (n == 0 || k > n - 1) {
    throw Error(Errc::invalid_argument, "(n-1)_k needs k <= n-1, got n=" + std::to_string(n) + " k=" + std::to_string(k));
  }
  Integer r = 1;
  for (std::size_t i = 1; i <= k; ++i) r *= static_cast<unsigned long>(n - i);
  return r;
}

CheckedBound falling_factorial_bound(const Digraph& g, Vertex u, Vertex v) {
  auto k = distance(g, u, v);
  if (!k) throw Error(Errc::unreachable, std::to_string(v) + " from " + std::to_string(u));
  CheckedBound out;
  out.bound = falling_factorial(g.order(), *k);
  auto phi = solve_exact(g);
  out.ratio = phi[u] / phi[v];
  out.ratio.canonicalize();
  out.verified = out.ratio <= Rational(out.bound);
  return out;
}

Integer chung_bound(const Digraph& g) {
  auto d = diameter(g);
  if (!d) throw Error(Errc::not_strongly_connected, "diameter is infinite");
  std::size_t k = 0;
  for (Vertex v = 0; v < g.order(); ++v) k = std::max(k, g.out_degree(v));
  return power(Integer(static_cast<unsigned long>(k)), *d);
}

Integer lynn_timlake_bound(std::size_t n) {
  if (n < 2) throw Error(Errc::invalid_argument, "n must be at least 2");
  return power(Integer(static_cast<unsigned long>(n - 1)), n - 1);
}

std::string to_string(Applicability a) {
  switch (a) {
    case Applicability::holds: return "holds";
    case Applicability::violated: return "violated";
    case Applicability::not_applicable: return "not applicable";
  }
  return "?";
}

bool StructureReport::all_hold() const noexcept {
  for (auto a : {distance_bound, half_factorial_bound, degree_structure, first_vertex_structure}) {
    if (a == Applicability::violated) return false;
  }
  return true;
}

namespace {

bool contains(const std::vector<Vertex>& s, Vertex v) { return std::find(s.begin(), s.end(), v) != s.end(); }

// Unique vertex sequence of a shortest path of length order-1 starting at s.
std::optional<std::vector<Vertex>> hamiltonian_shortest_path_from(const Digraph& g, Vertex s) {
  auto dist = distances_from(g, s);
  std::vector<Vertex> seq(g.order());
  std::vector<bool> filled(g.order(), false);
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!dist[v] || filled[*dist[v]]) return std::nullopt;
    seq[*dist[v]] = v;
    filled[*dist[v]] = true;
  }
  return seq;
}

std::vector<Vertex> sorted(std::span<const Vertex> s) {
  std::vector<Vertex> v(s.begin(), s.end());
  std::sort(v.begin(), v.end());
  return v;
}

bool degree_conclusions(const Digraph& g, const std::vector<Vertex>& p) {
  const std::size_t n = p.size();
  if (sorted(g.out_neighbors(p[1])) != sorted(std::vector<Vertex>{p[0], p[2]})) return false;
  if (n >= 4 && sorted(g.out_neighbors(p[2])) != sorted(std::vector<Vertex>{p[0], p[1], p[3]})) return false;
  for (std::size_t i = 4; i + 1 <= n; ++i) {
    if (g.out_degree(p[i - 1]) < (2 * i) / 3) return false;
  }
  return true;
}

// Parent pointers of a BFS give one shortest path from s to t.
std::vector<Vertex> shortest_path(const Digraph& g, Vertex s, Vertex t) {
  std::vector<std::optional<Vertex>> parent(g.order());
  std::vector<bool> seen(g.order(), false);
  std::vector<Vertex> frontier{s};
  seen[s] = true;
  for (std::size_t head = 0; head < frontier.size(); ++head) {
    Vertex u = frontier[head];
    for (Vertex w : g.out_neighbors(u)) {
      if (!seen[w]) {
        seen[w] = true;
        parent[w] = u;
        frontier.push_back(w);
      }
    }
  }
  std::vector<Vertex> path{t};
  while (path.back() != s) path.push_back(*parent[path.back()]);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

StructureReport extremal_structure_report(const Digraph& g) {
  if (!is_strongly_connected(g)) throw Error(Errc::not_strongly_connected, std::to_string(g.order()) + " vertices");
  StructureReport r;
  const std::size_t n = g.order();
  r.n = n;
  auto phi = solve_exact(g);
  r.ratio = principal_ratio(phi);
  auto sets = vmax_vmin(phi);
  r.vmax = sets.vmax;
  r.vmin = sets.vmin;
  r.vmax_vmin_distance = *set_distance(g, r.vmax, r.vmin);
  if (n < 2) return r;

  r.distance_bound = r.vmax_vmin_distance + 2 <= n ? Applicability::holds : Applicability::violated;
  if (n >= 3 && r.vmax_vmin_distance + 3 <= n) {
    r.half_factorial_bound =
        r.ratio <= Rational(factorial(n - 1), 2) ? Applicability::holds : Applicability::violated;
  }
  if (n < 3) return r;

  const Rational two_thirds_factorial = Rational(2 * factorial(n - 1), 3);
  if (r.ratio <= two_thirds_factorial) return r;

  for (Vertex s = 0; s < n; ++s) {
    auto p = hamiltonian_shortest_path_from(g, s);
    if (!p || !contains(r.vmax, (*p)[1]) || !contains(r.vmin, p->back())) continue;
    r.labeling = *p;
    r.degree_structure = degree_conclusions(g, *p) ? Applicability::holds : Applicability::violated;
    break;
  }

  if (r.vmax_vmin_distance + 2 == n) {
    bool any = false;
    bool ok = true;
    for (Vertex x : r.vmax) {
      for (Vertex y : r.vmin) {
        auto d = distance(g, x, y);
        if (!d || *d + 2 != n) continue;
        auto path = shortest_path(g, x, y);
        std::vector<bool> on_path(n, false);
        for (Vertex v : path) on_path[v] = true;
        auto first = static_cast<Vertex>(std::find(on_path.begin(), on_path.end(), false) - on_path.begin());
        any = true;
        auto out1 = g.out_neighbors(first);
        ok = ok && g.has_edge(first, x) && g.has_edge(x, first) && out1.size() == 1 && out1[0] == x;
      }
    }
    if (any) r.first_vertex_structure = ok ? Applicability::holds : Applicability::violated;
  }
  return r;
}

Rational theorem3_constant(const Theorem3Params& p) {
  if (p.a <= 5 * p.eps) {
    throw Error(Errc::vacuous_bound, "a = " + format(p.a) + " must exceed 5 eps = " + format(Rational(5 * p.eps)));
  }
  Rational c = p.b * (p.a - 5 * p.eps) * (p.a - p.eps) / (4 * (p.a + p.eps) * (p.a + p.eps));
  c.canonicalize();
  return c;
}

bool check_degree_condition(const Digraph& g, const Rational& a, const Rational& eps) {
  const Rational n(static_cast<unsigned long>(g.order()));
  const Rational lo = (a - eps) * n;
  const Rational hi = (a + eps) * n;
  for (Vertex v = 0; v < g.order(); ++v) {
    for (auto deg : {g.out_degree(v), g.in_degree(v)}) {
      Rational d(static_cast<unsigned long>(deg));
      if (d < lo || d > hi) return false;
    }
  }
  return true;
}

namespace {

__extension__ using Wide = unsigned __int128;

// Integer form of the thresholds: |S| * den >= num * n.
struct SizeThreshold {
  std::size_t minimum = 0;

  SizeThreshold(const Rational& fraction, std::size_t n) {
    Rational need = fraction * static_cast<unsigned long>(n);
    Integer q = need.get_num() / need.get_den();
    if (q * need.get_den() < need.get_num()) q += 1;
    minimum = sgn(q) <= 0 ? 0 : q.get_ui();
  }
};

struct DensityTracker {
  // Smallest edges/(|S||T|) as a reduced fraction of nonnegative integers.
  bool seen = false;
  std::uint64_t num = 0;
  std::uint64_t den = 1;

  void offer(std::uint64_t e, std::uint64_t area) {
    if (!seen || static_cast<Wide>(e) * den < static_cast<Wide>(num) * area) {
      seen = true;
      num = e;
      den = area;
    }
  }
  void merge(const DensityTracker& o) {
    if (o.seen) offer(o.num, o.den);
  }
};

struct PartialResult {
  bool holds = true;
  std::uint64_t pairs = 0;
  DensityTracker density;
  std::uint64_t witness_s = 0;
  std::uint64_t witness_t = 0;
};

std::vector<Vertex> mask_to_vertices(std::uint64_t mask) {
  std::vector<Vertex> out;
  for (Vertex v = 0; mask; ++v, mask >>= 1) {
    if (mask & 1) out.push_back(v);
  }
  return out;
}

class DiscrepancyScan {
 public:
  DiscrepancyScan(const Digraph& g, const Rational& b, std::size_t s_min, std::size_t t_min)
      : n_(g.order()), s_min_(s_min), t_min_(t_min), out_mask_(g.order(), 0) {
    for (Vertex u = 0; u < n_; ++u) {
      for (Vertex v : g.out_neighbors(u)) out_mask_[u] |= std::uint64_t{1} << v;
    }
    if (!b.get_num().fits_ulong_p() || !b.get_den().fits_ulong_p()) {
      throw Error(Errc::invalid_argument, "b must have 64-bit numerator and denominator");
    }
    b_num_ = b.get_num().get_ui();
    b_den_ = b.get_den().get_ui();
  }

  std::uint64_t edges_between(std::uint64_t s, std::uint64_t t) const {
    std::uint64_t e = 0;
    for (std::uint64_t rest = s; rest; rest &= rest - 1) {
      e += static_cast<std::uint64_t>(std::popcount(out_mask_[std::countr_zero(rest)] & t));
    }
    return e;
  }

  void evaluate(std::uint64_t s, std::uint64_t t, std::uint64_t e, PartialResult& acc) const {
    const auto area = static_cast<std::uint64_t>(std::popcount(s)) * static_cast<std::uint64_t>(std::popcount(t));
    ++acc.pairs;
    acc.density.offer(e, area);
    if (acc.holds && static_cast<Wide>(e) * b_den_ < static_cast<Wide>(b_num_) * area) {
      acc.holds = false;
      acc.witness_s = s;
      acc.witness_t = t;
    }
  }

  void scan_s_range(std::uint64_t s_begin, std::uint64_t s_end, PartialResult& acc) const {
    const std::uint64_t full = n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
    std::vector<std::uint64_t> into(n_);
    std::vector<Vertex> free;
    for (std::uint64_t s = s_begin; s < s_end; ++s) {
      if (static_cast<std::size_t>(std::popcount(s)) < s_min_) continue;
      const std::uint64_t comp = full & ~s;
      if (static_cast<std::size_t>(std::popcount(comp)) < t_min_) continue;
      free.clear();
      for (std::uint64_t rest = comp; rest; rest &= rest - 1) {
        auto t = static_cast<Vertex>(std::countr_zero(rest));
        free.push_back(t);
        into[t] = 0;
        for (std::uint64_t src = s; src; src &= src - 1) {
          into[t] += (out_mask_[std::countr_zero(src)] >> t) & 1;
        }
      }
      walk_t(s, free, 0, 0, 0, into, acc);
    }
  }

  std::size_t order() const { return n_; }
  std::size_t s_min() const { return s_min_; }
  std::size_t t_min() const { return t_min_; }

 private:
  void walk_t(std::uint64_t s, const std::vector<Vertex>& free, std::size_t idx, std::uint64_t t, std::uint64_t e,
              const std::vector<std::uint64_t>& into, PartialResult& acc) const {
    const auto chosen = static_cast<std::size_t>(std::popcount(t));
    if (chosen + (free.size() - idx) < t_min_) return;
    if (idx == free.size()) {
      if (chosen >= t_min_ && chosen > 0) evaluate(s, t, e, acc);
      return;
    }
    walk_t(s, free, idx + 1, t, e, into, acc);
    walk_t(s, free, idx + 1, t | (std::uint64_t{1} << free[idx]), e + into[free[idx]], into, acc);
  }

  std::size_t n_;
  std::size_t s_min_;
  std::size_t t_min_;
  std::vector<std::uint64_t> out_mask_;
  std::uint64_t b_num_ = 0;
  std::uint64_t b_den_ = 1;
};

DiscrepancyResult finish(const PartialResult& acc, bool exhaustive) {
  DiscrepancyResult r;
  r.holds = acc.holds;
  r.exhaustive = exhaustive;
  r.pairs_checked = acc.pairs;
  if (acc.density.seen) {
    Rational q(Integer(static_cast<unsigned long>(acc.density.num)), Integer(static_cast<unsigned long>(acc.density.den)));
    q.canonicalize();
    r.worst_density = q;
  }
  if (!acc.holds) {
    r.witness_s = mask_to_vertices(acc.witness_s);
    r.witness_t = mask_to_vertices(acc.witness_t);
  }
  return r;
}

bool exhaustive_affordable(std::size_t n) {
  std::uint64_t states = 1;
  for (std::size_t i = 0; i < n; ++i) {
    states *= 3;
    if (states > kExhaustiveDiscrepancyLimit) return false;
  }
  return true;
}

void require_unit_interval(const Rational& q, const char* name) {
  if (sgn(q) <= 0 || q > 1) throw Error(Errc::invalid_argument, std::string(name) + " must lie in (0, 1]");
}

}  // namespace

DiscrepancyResult check_discrepancy(const Digraph& g, const Rational& b, const Rational& c, const Rational& d,
                                    const DiscrepancyOptions& opts) {
  require_unit_interval(b, "b");
  require_unit_interval(c, "c");
  require_unit_interval(d, "d");
  const std::size_t n = g.order();
  if (n > 64) throw Error(Errc::size_limit, "discrepancy check supports at most 64 vertices");
  DiscrepancyScan scan(g, b, SizeThreshold(c, n).minimum, SizeThreshold(d, n).minimum);

  if (opts.mode == DiscrepancyMode::exhaustive && exhaustive_affordable(n)) {
    const std::uint64_t total = std::uint64_t{1} << n;
    const unsigned jobs = std::max(1u, opts.jobs);
    std::vector<PartialResult> parts(jobs);
    std::vector<std::thread> workers;
    for (unsigned w = 0; w < jobs; ++w) {
      std::uint64_t lo = total * w / jobs;
      std::uint64_t hi = total * (w + 1) / jobs;
      if (jobs == 1) {
        scan.scan_s_range(lo, hi, parts[w]);
      } else {
        workers.emplace_back([&, lo, hi, w] { scan.scan_s_range(lo, hi, parts[w]); });
      }
    }
    for (auto& t : workers) t.join();
    PartialResult merged;
    for (const auto& p : parts) {
      merged.pairs += p.pairs;
      merged.density.merge(p.density);
      if (merged.holds && !p.holds) {
        merged.holds = false;
        merged.witness_s = p.witness_s;
        merged.witness_t = p.witness_t;
      }
    }
    return finish(merged, true);
  }

  // Uniform over qualifying pairs by rejection from uniform S/T/neither labelings.
  std::mt19937_64 rng(opts.seed);
  std::uniform_int_distribution<int> side(0, 2);
  PartialResult acc;
  const std::uint64_t attempt_cap = static_cast<std::uint64_t>(opts.trials) * 1000;
  for (std::uint64_t attempt = 0; attempt < attempt_cap && acc.pairs < opts.trials; ++attempt) {
    std::uint64_t s = 0, t = 0;
    for (std::size_t v = 0; v < n; ++v) {
      switch (side(rng)) {
        case 0: s |= std::uint64_t{1} << v; break;
        case 1: t |= std::uint64_t{1} << v; break;
        default: break;
      }
    }
    auto ss = static_cast<std::size_t>(std::popcount(s));
    auto ts = static_cast<std::size_t>(std::popcount(t));
    if (ss == 0 || ts == 0 || ss < scan.s_min() || ts < scan.t_min()) continue;
    scan.evaluate(s, t, scan.edges_between(s, t), acc);
  }
  return finish(acc, false);
}

Theorem3Report theorem3_check(const Digraph& g, const Theorem3Params& params, const DiscrepancyOptions& opts) {
  for (const auto* q : {&params.a, &params.eps}) {
    if (sgn(*q) <= 0) throw Error(Errc::invalid_argument, "a and eps must be positive");
  }
  Theorem3Report r;
  r.C = theorem3_constant(params);
  r.ratio_bound = 1 / r.C;
  r.ratio_bound.canonicalize();
  if (!is_strongly_connected(g)) throw Error(Errc::not_strongly_connected, std::to_string(g.order()) + " vertices");

  r.degree_ok = check_degree_condition(g, params.a, params.eps);
  r.discrepancy = check_discrepancy(g, params.b, params.c, params.d, opts);
  r.discrepancy_ok = r.discrepancy.holds;
  if (r.degree_ok && r.discrepancy_ok && r.discrepancy.exhaustive) {
    r.ratio = principal_ratio(g);
    r.bound_holds = *r.ratio <= r.ratio_bound;
  }
  return r;
}

Theorem3Params infer_theorem3_params(const Digraph& g, const Rational& c, const Rational& d, const Rational& margin) {
  const std::size_t n = g.order();
  if (n == 0) throw Error(Errc::invalid_argument, "empty graph");
  std::size_t lo = g.out_degree(0), hi = g.out_degree(0);
  for (Vertex v = 0; v < n; ++v) {
    for (auto deg : {g.out_degree(v), g.in_degree(v)}) {
      lo = std::min(lo, deg);
      hi = std::max(hi, deg);
    }
  }
  const Rational two_n(static_cast<unsigned long>(2 * n));
  Theorem3Params p;
  p.a = Rational(static_cast<unsigned long>(lo + hi)) / two_n;
  p.eps = Rational(static_cast<unsigned long>(hi - lo)) / two_n + margin;
  if (sgn(p.eps) <= 0) p.eps = p.a / 10;
  p.c = c;
  p.d = d;
  auto scan = check_discrepancy(g, Rational(1), c, d);
  p.b = scan.worst_density && sgn(*scan.worst_density) > 0 ? *scan.worst_density : Rational(1);
  if (p.b > 1) p.b = 1;
  p.a.canonicalize();
  p.eps.canonicalize();
  return p;
}

}  // namespace pratio
