#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pratio/digraph.hpp"
#include "pratio/rational.hpp"

namespace pratio {

/// A bound value together with whether the exact ratio it controls was
/// confirmed to lie below it.
struct CheckedBound {
  Integer bound;
  Rational ratio;
  bool verified = false;
};

/// prod_{i<k} d+(v_i) along the walk v_1..v_k, checked against
/// phi(v_1)/phi(v_k). Throws not_a_walk.
CheckedBound path_product_bound(const Digraph& g, std::span<const Vertex> path);

/// (n-1)(n-2)...(n-k); 1 when k == 0.
Integer falling_factorial(std::size_t n, std::size_t k);

/// (n-1)_k with k = dist(u, v), checked against phi(u)/phi(v). Throws unreachable.
CheckedBound falling_factorial_bound(const Digraph& g, Vertex u, Vertex v);

/// k^d with k the maximum out-degree and d the diameter.
Integer chung_bound(const Digraph& g);

/// (n-1)^(n-1).
Integer lynn_timlake_bound(std::size_t n);

enum class Applicability { holds, violated, not_applicable };

std::string to_string(Applicability a);

/// Distance structure of Vmax/Vmin and the conditional degree conclusions
/// for graphs close to the maximum ratio.
struct StructureReport {
  std::size_t n = 0;
  Rational ratio;
  std::vector<Vertex> vmax;
  std::vector<Vertex> vmin;
  std::size_t vmax_vmin_distance = 0;
  /// dist(Vmax, Vmin) <= n - 2.
  Applicability distance_bound = Applicability::not_applicable;
  /// dist(Vmax, Vmin) <= n - 3 implies ratio <= (n-1)!/2.
  Applicability half_factorial_bound = Applicability::not_applicable;
  /// Labeled shortest path v1..vn with v2 in Vmax, vn in Vmin and
  /// ratio > (2/3)(n-1)! implies N+(v2) = {v1,v3}, N+(v3) = {v1,v2,v4},
  /// d+(v_i) >= floor(2i/3) for 4 <= i <= n-1.
  Applicability degree_structure = Applicability::not_applicable;
  /// Shortest path v2..vn, v2 in Vmax, vn in Vmin, dist(Vmax,Vmin) = n-2 and
  /// ratio > (2/3)(n-1)! implies (v1,v2),(v2,v1) are edges and N+(v1) = {v2}.
  Applicability first_vertex_structure = Applicability::not_applicable;
  /// Labeling used for the last two checks (original vertex ids), if any.
  std::vector<Vertex> labeling;

  bool all_hold() const noexcept;
};

/// Throws not_strongly_connected.
StructureReport extremal_structure_report(const Digraph& g);

/// Constants a, b, c, d, eps of the degree + discrepancy sufficient
/// condition. Requires a > 5 eps for a positive constant C.
struct Theorem3Params {
  Rational a, b, c, d, eps;
};

/// C = b (a - 5 eps)(a - eps) / (4 (a + eps)^2). Throws vacuous_bound if a <= 5 eps.
Rational theorem3_constant(const Theorem3Params& p);

enum class DiscrepancyMode { exhaustive, sampled };

struct DiscrepancyOptions {
  DiscrepancyMode mode = DiscrepancyMode::exhaustive;
  std::size_t trials = 100'000;
  std::uint64_t seed = 1;
  unsigned jobs = 1;
};

/// 3^n <= 1e8 assignments of vertices to S / T / neither.
inline constexpr std::uint64_t kExhaustiveDiscrepancyLimit = 100'000'000;

struct DiscrepancyResult {
  bool holds = true;
  bool exhaustive = true;
  /// Qualifying (S, T) pairs examined.
  std::uint64_t pairs_checked = 0;
  /// Smallest |E(S,T)| / (|S||T|) seen over qualifying pairs, if any.
  std::optional<Rational> worst_density;
  /// A violating pair, if one was found.
  std::vector<Vertex> witness_s;
  std::vector<Vertex> witness_t;
};

/// |E(S,T)| >= b|S||T| for disjoint S, T with |S| >= c n and |T| >= d n.
/// Exhaustive mode falls back to sampling when 3^n exceeds the limit.
DiscrepancyResult check_discrepancy(const Digraph& g, const Rational& b, const Rational& c, const Rational& d,
                                    const DiscrepancyOptions& opts = {});

/// (a - eps) n <= d+(v), d-(v) <= (a + eps) n for every v.
bool check_degree_condition(const Digraph& g, const Rational& a, const Rational& eps);

struct Theorem3Report {
  bool degree_ok = false;
  bool discrepancy_ok = false;
  DiscrepancyResult discrepancy;
  Rational C;
  Rational ratio_bound;
  /// Set only when both conditions were verified exhaustively.
  std::optional<Rational> ratio;
  std::optional<bool> bound_holds;
};

/// Throws vacuous_bound when a <= 5 eps, not_strongly_connected otherwise.
Theorem3Report theorem3_check(const Digraph& g, const Theorem3Params& params, const DiscrepancyOptions& opts = {});

/// Starting point for (a, eps): the tightest degree envelope with eps widened
/// by `margin` (a regular graph with zero margin gets eps = a/10), and b the
/// worst density over pairs meeting c n and d n.
Theorem3Params infer_theorem3_params(const Digraph& g, const Rational& c, const Rational& d,
                                     const Rational& margin = Rational(0));

}  // namespace pratio
