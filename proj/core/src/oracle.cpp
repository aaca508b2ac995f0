#include "pratio/oracle.hpp"

#include <algorithm>
#include <bit>
#include <thread>

#include "pratio/error.hpp"
#include "pratio/perron.hpp"

namespace pratio {

std::size_t edge_bit(std::size_t n, Vertex u, Vertex v) { return u * (n - 1) + (v < u ? v : v - 1); }

Digraph digraph_from_mask(std::size_t n, EdgeMask mask) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (u != v && ((mask >> edge_bit(n, u, v)) & 1)) edges.emplace_back(u, v);
    }
  }
  return Digraph(n, edges);
}

EdgeMask mask_of(const Digraph& g) {
  const std::size_t n = g.order();
  if (n * (n - 1) > 64) throw Error(Errc::size_limit, "mask encoding needs n(n-1) <= 64");
  EdgeMask m = 0;
  for (const auto& [u, v] : g.edges()) m |= EdgeMask{1} << edge_bit(n, u, v);
  return m;
}

bool mask_is_strongly_connected(std::size_t n, EdgeMask mask) {
  std::uint32_t out[8] = {}, in[8] = {};
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (u != v && ((mask >> edge_bit(n, u, v)) & 1)) {
        out[u] |= 1u << v;
        in[v] |= 1u << u;
      }
    }
  }
  const std::uint32_t full = (1u << n) - 1;
  auto closure = [&](const std::uint32_t* adj) {
    std::uint32_t reached = 1, frontier = 1;
    while (frontier) {
      std::uint32_t next = 0;
      for (std::uint32_t f = frontier; f; f &= f - 1) next |= adj[std::countr_zero(f)];
      frontier = next & ~reached;
      reached |= next;
    }
    return reached;
  };
  return closure(out) == full && closure(in) == full;
}

namespace {

void check_guard(std::size_t n, const EnumerationLimits& limits) {
  const bool in_guard = n >= 3 && n <= 5;
  const bool in_hard = n >= 2 && n <= kMaxEnumerationOrder;
  if (!in_guard && !(limits.allow_beyond_guard && in_hard)) {
    throw Error(Errc::size_limit, "exhaustive enumeration supports 3 <= n <= 5 (n=" + std::to_string(n) +
                                      "; up to " + std::to_string(kMaxEnumerationOrder) + " with override)");
  }
}

std::uint64_t mask_count(std::size_t n) { return std::uint64_t{1} << (n * (n - 1)); }

struct PartitionResult {
  std::uint64_t sc_count = 0;
  Rational best;
  std::vector<EdgeMask> witnesses;
};

void scan_partition(std::size_t n, EdgeMask lo, EdgeMask hi, PartitionResult& out) {
  for (EdgeMask m = lo; m < hi; ++m) {
    if (!mask_is_strongly_connected(n, m)) continue;
    ++out.sc_count;
    auto ratio = principal_ratio(digraph_from_mask(n, m));
    int cmp = out.witnesses.empty() ? 1 : ::cmp(ratio, out.best);
    if (cmp > 0) {
      out.best = ratio;
      out.witnesses.assign(1, m);
    } else if (cmp == 0) {
      out.witnesses.push_back(m);
    }
  }
}

}  // namespace

void for_each_strongly_connected(std::size_t n, const std::function<void(EdgeMask, const Digraph&)>& visit,
                                 const EnumerationLimits& limits) {
  check_guard(n, limits);
  const auto total = mask_count(n);
  for (EdgeMask m = 0; m < total; ++m) {
    if (mask_is_strongly_connected(n, m)) visit(m, digraph_from_mask(n, m));
  }
}

std::vector<Digraph> enumerate_strongly_connected(std::size_t n, const EnumerationLimits& limits) {
  std::vector<Digraph> out;
  for_each_strongly_connected(n, [&](EdgeMask, const Digraph& g) { out.push_back(g); }, limits);
  return out;
}

EnumerationReport max_principal_ratio_brute(std::size_t n, const EnumerationLimits& limits) {
  check_guard(n, limits);
  const auto total = mask_count(n);
  const unsigned jobs = std::max(1u, limits.jobs);
  std::vector<PartitionResult> parts(jobs);
  if (jobs == 1) {
    scan_partition(n, 0, total, parts[0]);
  } else {
    std::vector<std::thread> workers;
    for (unsigned w = 0; w < jobs; ++w) {
      EdgeMask lo = total / jobs * w;
      EdgeMask hi = w + 1 == jobs ? total : total / jobs * (w + 1);
      workers.emplace_back([&, lo, hi, w] { scan_partition(n, lo, hi, parts[w]); });
    }
    for (auto& t : workers) t.join();
  }

  EnumerationReport report;
  report.n = n;
  report.total_digraphs = total;
  bool any = false;
  std::vector<EdgeMask> witnesses;
  for (const auto& p : parts) {
    report.strongly_connected_count += p.sc_count;
    if (p.witnesses.empty()) continue;
    int c = any ? ::cmp(p.best, report.max_ratio) : 1;
    if (c > 0) {
      report.max_ratio = p.best;
      witnesses = p.witnesses;
      any = true;
    } else if (c == 0) {
      witnesses.insert(witnesses.end(), p.witnesses.begin(), p.witnesses.end());
    }
  }
  // Partitions are disjoint increasing ranges, so concatenation is mask order.
  for (EdgeMask m : witnesses) report.witnesses.push_back({m, digraph_from_mask(n, m)});
  for (std::size_t i = 0; i < report.witnesses.size(); ++i) {
    bool fresh = true;
    for (std::size_t rep : report.class_representatives) {
      if (are_isomorphic(report.witnesses[rep].graph, report.witnesses[i].graph)) {
        fresh = false;
        break;
      }
    }
    if (fresh) report.class_representatives.push_back(i);
  }
  return report;
}

namespace {

class IsoSearch {
 public:
  IsoSearch(const Digraph& a, const Digraph& b) : a_(a), b_(b), n_(a.order()), map_(n_), used_(n_, false) {}

  bool run() { return extend(0); }

 private:
  bool compatible(Vertex u, Vertex w) const {
    return a_.out_degree(u) == b_.out_degree(w) && a_.in_degree(u) == b_.in_degree(w);
  }

  bool extend(Vertex u) {
    if (u == n_) return true;
    for (Vertex w = 0; w < n_; ++w) {
      if (used_[w] || !compatible(u, w)) continue;
      bool ok = true;
      for (Vertex x = 0; x < u && ok; ++x) {
        ok = a_.has_edge(u, x) == b_.has_edge(w, map_[x]) && a_.has_edge(x, u) == b_.has_edge(map_[x], w);
      }
      if (!ok) continue;
      map_[u] = w;
      used_[w] = true;
      if (extend(u + 1)) return true;
      used_[w] = false;
    }
    return false;
  }

  const Digraph& a_;
  const Digraph& b_;
  std::size_t n_;
  std::vector<Vertex> map_;
  std::vector<bool> used_;
};

std::vector<std::pair<std::size_t, std::size_t>> degree_profile(const Digraph& g) {
  std::vector<std::pair<std::size_t, std::size_t>> p;
  for (Vertex v = 0; v < g.order(); ++v) p.emplace_back(g.out_degree(v), g.in_degree(v));
  std::sort(p.begin(), p.end());
  return p;
}

}  // namespace

bool are_isomorphic(const Digraph& g1, const Digraph& g2) {
  if (g1.order() > 8 || g2.order() > 8) throw Error(Errc::size_limit, "isomorphism test supports n <= 8");
  if (g1.order() != g2.order() || g1.size() != g2.size()) return false;
  if (degree_profile(g1) != degree_profile(g2)) return false;
  return IsoSearch(g1, g2).run();
}

Theorem2Report verify_theorem2(std::size_t n, const EnumerationLimits& limits) {
  Theorem2Report r;
  r.enumeration = max_principal_ratio_brute(n, limits);
  r.formula = gamma_formula(n);
  r.ratio_matches = r.enumeration.max_ratio == r.formula;

  std::vector<bool> variant_seen(kExtremalVariants.size(), false);
  bool all_matched = true;
  for (std::size_t rep : r.enumeration.class_representatives) {
    std::optional<ExtremalVariant> match;
    for (std::size_t i = 0; i < kExtremalVariants.size(); ++i) {
      if (are_isomorphic(r.enumeration.witnesses[rep].graph, construct_extremal(n, kExtremalVariants[i]))) {
        match = kExtremalVariants[i];
        variant_seen[i] = true;
        break;
      }
    }
    all_matched = all_matched && match.has_value();
    r.class_variants.push_back(match);
  }
  r.classes_match = all_matched && r.enumeration.witness_iso_classes() == kExtremalVariants.size() &&
                    std::all_of(variant_seen.begin(), variant_seen.end(), [](bool b) { return b; });
  return r;
}

}  // namespace pratio
