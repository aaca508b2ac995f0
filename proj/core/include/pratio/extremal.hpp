#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string_view>
#include <vector>

#include "pratio/digraph.hpp"
#include "pratio/rational.hpp"

namespace pratio {

/// The three graphs attaining the maximum principal ratio. They share the
/// path v1 -> ... -> vn and every back edge (vj, vi) with i < j <= n-1, and
/// differ only in the out-edges of vn: {v1}, {v2} or {v1, v2}.
enum class ExtremalVariant { d1, d2, d3 };

inline constexpr std::array<ExtremalVariant, 3> kExtremalVariants{ExtremalVariant::d1, ExtremalVariant::d2,
                                                                  ExtremalVariant::d3};

std::string_view to_string(ExtremalVariant v);

/// Vertex i is v_{i+1}. Throws invalid_argument for n < 3.
Digraph construct_extremal(std::size_t n, ExtremalVariant variant);

/// Maximum principal ratio over strongly connected n-vertex digraphs:
/// (2/3) (n/(n-1) + (1/(n-1)!) sum_{i=1}^{n-3} i!) (n-1)!.
Rational gamma_formula(std::size_t n);

/// Unscaled stationary vector of D1(n) with x_n = 1:
/// x_1 = n (n-2)!/2 + (1/2) sum_{i=0}^{n-3} i!,  x_k = a_k x_1 - b_k (2 <= k <= n-1),
/// a_k = 2k / ((k+1)(k-1)!),  b_k = k / ((k+1)(k-1)!) sum_{i=0}^{k-2} i!.
std::vector<Rational> d1_closed_form(std::size_t n);

/// True iff x_2 > x_1 > x_3 > x_4 > ... > x_n (strict).
bool d1_ordering_holds(std::span<const Rational> x);

/// A digraph together with a Hamiltonian shortest path v1 -> ... -> vn.
/// graph() is relabeled so that vertex i is v_{i+1}; labeling()[i] is the
/// original vertex that plays v_{i+1}.
class LabeledPathGraph {
 public:
  /// The identity labeling must already be a shortest path of length n-1.
  /// Throws not_shortest_path.
  static LabeledPathGraph from_identity(Digraph g);

  /// labeling[i] is the original vertex playing v_{i+1}. Throws not_shortest_path.
  static LabeledPathGraph with_labeling(const Digraph& g, std::vector<Vertex> labeling);

  /// Lexicographically smallest vertex sequence forming a shortest path of
  /// length n-1, or nullopt if none exists.
  static std::optional<LabeledPathGraph> find(const Digraph& g);

  const Digraph& graph() const noexcept { return graph_; }
  std::span<const Vertex> labeling() const noexcept { return labeling_; }
  std::size_t order() const noexcept { return graph_.order(); }

 private:
  LabeledPathGraph(Digraph g, std::vector<Vertex> labeling) : graph_(std::move(g)), labeling_(std::move(labeling)) {}

  Digraph graph_;
  std::vector<Vertex> labeling_;
};

/// f[i] = phi(v_{i+1}) / phi(v_n); f.back() == 1.
struct FGCoefficients {
  std::vector<Rational> f;
};

/// Rescaled exact stationary vector. Verifies the recursion
/// f_k = f_{k-1}/d+(v_{k-1}) + sum_{i >= k+1, v_i -> v_k} f_i/d+(v_i) for 2 <= k <= n.
FGCoefficients fg_coefficients(const LabeledPathGraph& g);

/// Per-property outcome of a family membership check; properties[0] is (i).
struct FamilyReport {
  std::array<bool, 5> properties{};

  bool member() const noexcept {
    for (bool p : properties) {
      if (!p) return false;
    }
    return true;
  }
};

/// Family of labeled-path graphs on which adding the selected edge raises
/// the principal ratio:
///  (i)   v1..vn is a shortest path of length n-1
///  (ii)  d+(v2) = 2, d+(v3) = 3
///  (iii) d+(vi) >= floor(2i/3) for 4 <= i <= n-1
///  (iv)  v2 in Vmax, vn in Vmin, dist(Vmax, Vmin) = dist(v2, vn) = n-2
///  (v)   some (vj, vi) with 4 <= j <= n-1, i < j is not an edge
FamilyReport check_family_Dn(const LabeledPathGraph& g);

/// Family on which deleting the selected out-edge of vn raises the ratio:
///  (i)   v1..vn is a shortest path of length n-1
///  (ii)  d+(vi) = i for 2 <= i <= n-1
///  (iii) v2 in Vmax, vn in Vmin, dist(Vmax, Vmin) = dist(v2, vn) = n-2
///  (iv)  d+(vn) >= 2
///  (v)   N+(vn) != {v1, v2}
FamilyReport check_family_DnPrime(const LabeledPathGraph& g);

/// (vt, vs) with 4 <= t <= n smallest, then s < t largest, such that the edge
/// is missing. Labeled coordinates (vertex i is v_{i+1}).
std::optional<Edge> select_added_edge(const LabeledPathGraph& g);

/// (vn, vt) with 3 <= t <= n-1 largest such that the edge is present.
std::optional<Edge> select_deleted_edge(const LabeledPathGraph& g);

/// D+ in labeled coordinates. Throws not_in_family unless g is in the Dn family.
Digraph add_edge_transform(const LabeledPathGraph& g);

/// D- in labeled coordinates. Throws not_in_family unless g is in the Dn' family.
Digraph delete_edge_transform(const LabeledPathGraph& g);

/// Rejection samplers for the two families. Return nullopt if no member was
/// found within `max_attempts`.
std::optional<LabeledPathGraph> sample_family_Dn(std::size_t n, std::mt19937_64& rng,
                                                 std::size_t max_attempts = 10'000);
std::optional<LabeledPathGraph> sample_family_DnPrime(std::size_t n, std::mt19937_64& rng,
                                                      std::size_t max_attempts = 10'000);

/// Vertex roles in the degree counterexample on 2n+1 vertices.
struct DegreeCounterexample {
  Digraph graph;
  std::vector<Vertex> a_side;  // first complete copy minus e
  Vertex e;
  Vertex b;
  std::vector<Vertex> c_side;  // second complete copy minus d
  Vertex d;
};

/// Two complete digraphs on n vertices {A, e} and {C, d}, a hub b with
/// edges first-copy -> b -> second-copy, and the edge (d, e). Throws for n < 2.
DegreeCounterexample degree_counterexample(std::size_t n);
Digraph construct_degree_counterexample(std::size_t n);

/// Closed-form unscaled stationary vector of the degree counterexample:
/// 1 on A, (n+1)/n at b, (n+1)^2 (n-1)/n^2 on C, n+1 at d, 2 at e.
std::vector<Rational> degree_counterexample_vector(std::size_t n);

/// Cycle v1 -> ... -> vm -> v1 plus back edges (vj, v1), 2 <= j <= m-1.
/// Vertex i is v_{i+1}. Throws for m < 2.
Digraph construct_h_graph(std::size_t m);

/// H_m on vertices 0..m-1 joined to a complete digraph on k vertices
/// (vertices m..m+k-1, hub u = m) by (v1, u) and (u, v1).
Digraph construct_discrepancy_counterexample(std::size_t m, std::size_t k);

}  // namespace pratio
