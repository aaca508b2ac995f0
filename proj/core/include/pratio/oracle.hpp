#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "pratio/digraph.hpp"
#include "pratio/extremal.hpp"
#include "pratio/rational.hpp"

namespace pratio {

/// Each labeled digraph on n vertices is an n(n-1)-bit mask over ordered
/// pairs (u, v), u != v, in row-major order: bit u*(n-1) + (v < u ? v : v-1).
using EdgeMask = std::uint64_t;

std::size_t edge_bit(std::size_t n, Vertex u, Vertex v);
Digraph digraph_from_mask(std::size_t n, EdgeMask mask);
EdgeMask mask_of(const Digraph& g);

/// Strong connectivity straight from the mask (bit-parallel reachability).
bool mask_is_strongly_connected(std::size_t n, EdgeMask mask);

struct EnumerationLimits {
  /// Soft guard 3 <= n <= 5; set to allow 2 <= n <= kMaxEnumerationOrder.
  bool allow_beyond_guard = false;
  unsigned jobs = 1;
};

inline constexpr std::size_t kMaxEnumerationOrder = 7;

/// Calls `visit` for every strongly connected labeled digraph on n vertices,
/// in increasing mask order. Throws size_limit outside the guard.
void for_each_strongly_connected(std::size_t n, const std::function<void(EdgeMask, const Digraph&)>& visit,
                                 const EnumerationLimits& limits = {});

std::vector<Digraph> enumerate_strongly_connected(std::size_t n, const EnumerationLimits& limits = {});

struct Witness {
  EdgeMask mask = 0;
  Digraph graph;
};

struct EnumerationReport {
  std::size_t n = 0;
  /// 2^(n(n-1)).
  std::uint64_t total_digraphs = 0;
  std::uint64_t strongly_connected_count = 0;
  Rational max_ratio;
  /// Every labeled graph attaining max_ratio, in mask order.
  std::vector<Witness> witnesses;
  /// Index of the first witness of each isomorphism class.
  std::vector<std::size_t> class_representatives;

  std::size_t witness_iso_classes() const noexcept { return class_representatives.size(); }
};

/// Exact maximum principal ratio over all strongly connected n-vertex digraphs.
/// Disjoint mask ranges go to `limits.jobs` workers; the result does not
/// depend on the worker count.
EnumerationReport max_principal_ratio_brute(std::size_t n, const EnumerationLimits& limits = {});

/// Brute-force permutation search with in/out-degree pruning. Throws size_limit for n > 8.
bool are_isomorphic(const Digraph& g1, const Digraph& g2);

struct Theorem2Report {
  EnumerationReport enumeration;
  Rational formula;
  bool ratio_matches = false;
  /// For each witness class, the extremal variant it is isomorphic to (if any).
  std::vector<std::optional<ExtremalVariant>> class_variants;
  bool classes_match = false;

  bool ok() const noexcept { return ratio_matches && classes_match; }
};

/// Brute-force max equals the closed form and the maximizers are exactly
/// D1, D2, D3 up to isomorphism.
Theorem2Report verify_theorem2(std::size_t n, const EnumerationLimits& limits = {});

}  // namespace pratio
