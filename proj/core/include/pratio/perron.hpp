#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "pratio/digraph.hpp"
#include "pratio/rational.hpp"

namespace pratio {

/// Row-stochastic transition matrix of the simple random walk,
/// P(u,v) = 1/d+(u) on edges. Rows are stored sparse in adjacency order.
class StochasticMatrix {
 public:
  struct Entry {
    Vertex column;
    Rational value;
  };

  explicit StochasticMatrix(const Digraph& g);

  std::size_t order() const noexcept { return rows_.size(); }
  std::span<const Entry> row(Vertex u) const { return rows_[u]; }

  /// Dense exact value P(u, v).
  Rational at(Vertex u, Vertex v) const;

  /// x P for a row vector x.
  std::vector<Rational> left_multiply(std::span<const Rational> x) const;

 private:
  std::vector<std::vector<Entry>> rows_;
};

/// Throws sink_vertex when some vertex has out-degree zero.
StochasticMatrix transition_matrix(const Digraph& g);

/// Exact stationary distribution: strictly positive, sums to exactly 1.
class RationalDistribution {
 public:
  /// Validates positivity and unit sum; throws nonpositive_entry or invalid_argument.
  explicit RationalDistribution(std::vector<Rational> entries);

  std::size_t size() const noexcept { return entries_.size(); }
  const Rational& operator[](Vertex v) const { return entries_[v]; }
  std::span<const Rational> entries() const noexcept { return entries_; }

  friend bool operator==(const RationalDistribution&, const RationalDistribution&) = default;

 private:
  std::vector<Rational> entries_;
};

struct FloatDistribution {
  std::vector<double> entries;
  /// L1 norm of phi P - phi at termination.
  double residual = 0.0;
  std::size_t iterations = 0;
  bool converged = false;
};

inline constexpr double kDefaultPowerTolerance = 1e-13;
inline constexpr std::size_t kDefaultPowerMaxIter = 1'000'000;
inline constexpr double kDefaultFloatTieTolerance = 1e-9;

/// Unique phi with phi P = phi and sum 1. The result is checked by
/// substitution before it is returned; throws not_strongly_connected.
RationalDistribution solve_exact(const Digraph& g);

/// Unnormalized stationary vector scaled to coprime positive integers.
std::vector<Integer> stationary_integers(const Digraph& g);

/// Lazy-walk power iteration x <- x (P + I) / 2 from the uniform vector.
/// Stops when the L1 step change drops below `tol`; `converged` is false if
/// `max_iter` ran out first.
FloatDistribution solve_power(const Digraph& g, double tol = kDefaultPowerTolerance,
                              std::size_t max_iter = kDefaultPowerMaxIter);

/// max phi / min phi. Works on any positive vector, scaled or not.
Rational principal_ratio(std::span<const Rational> phi);
Rational principal_ratio(const RationalDistribution& phi);
Rational principal_ratio(std::span<const Integer> phi);
double principal_ratio(const FloatDistribution& phi);

/// gamma(g) computed exactly.
Rational principal_ratio(const Digraph& g);

struct ExtremeSets {
  std::vector<Vertex> vmax;
  std::vector<Vertex> vmin;
};

/// Exact argmax/argmin sets (ties only on exact equality).
ExtremeSets vmax_vmin(std::span<const Rational> phi);
ExtremeSets vmax_vmin(const RationalDistribution& phi);

/// Float variant: membership within relative tolerance of the extremum.
ExtremeSets vmax_vmin(const FloatDistribution& phi, double rel_tol = kDefaultFloatTieTolerance);

/// Nonnegative edge flow; flow[i] belongs to edges[i].
struct Circulation {
  std::vector<Edge> edges;
  std::vector<Rational> flow;

  const Rational& at(Vertex u, Vertex v) const;
};

/// F(v,w) = phi(v) / d+(v). Throws not_stationary if phi P != phi.
Circulation circulation_of(const Digraph& g, const RationalDistribution& phi);

/// Exact conservation at every vertex. Throws wrong_edge_set if the flow
/// is not defined on exactly the edges of g.
bool verify_circulation(const Digraph& g, const Circulation& f);

/// Total-variation distance between the walk started at `start` and phi,
/// for k = 0..steps. Throws periodic_graph.
std::vector<double> walk_profile(const Digraph& g, Vertex start, std::size_t steps);

}  // namespace pratio
