#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pratio {

/// Vertex index. The v_1..v_n labels used in the literature map to 0..n-1.
using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Shortest-path edge count; std::nullopt means unreachable.
using Distance = std::optional<std::size_t>;

/// Immutable simple directed graph: no loops, no parallel edges.
/// Adjacency lists are kept sorted so iteration order is deterministic.
class Digraph {
 public:
  /// Validates and builds. Throws Error with loop_edge, duplicate_edge or
  /// index_out_of_range.
  Digraph(std::size_t n, std::span<const Edge> edges);
  Digraph(std::size_t n, std::initializer_list<Edge> edges)
      : Digraph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  std::size_t order() const noexcept { return out_.size(); }
  std::size_t size() const noexcept { return edge_count_; }

  std::span<const Vertex> out_neighbors(Vertex v) const { return out_[v]; }
  std::span<const Vertex> in_neighbors(Vertex v) const { return in_[v]; }
  std::size_t out_degree(Vertex v) const { return out_[v].size(); }
  std::size_t in_degree(Vertex v) const { return in_[v].size(); }

  bool has_edge(Vertex u, Vertex v) const;

  /// All edges in lexicographic order.
  std::vector<Edge> edges() const;

  /// New graph with the extra edge / without the edge. Same validation rules.
  Digraph with_edge(Vertex u, Vertex v) const;
  Digraph without_edge(Vertex u, Vertex v) const;

  /// Relabels vertex v as perm[v].
  Digraph permuted(std::span<const Vertex> perm) const;

  friend bool operator==(const Digraph& a, const Digraph& b) { return a.out_ == b.out_; }

 private:
  std::vector<std::vector<Vertex>> out_;
  std::vector<std::vector<Vertex>> in_;
  std::size_t edge_count_ = 0;
};

bool is_strongly_connected(const Digraph& g);

/// gcd of directed cycle lengths is 1. Throws not_strongly_connected.
bool is_aperiodic(const Digraph& g);

/// Period of a strongly connected graph (gcd of cycle lengths).
std::size_t period(const Digraph& g);

/// BFS distances from `source` to every vertex.
std::vector<Distance> distances_from(const Digraph& g, Vertex source);

Distance distance(const Digraph& g, Vertex u, Vertex v);

/// min over (s, t) in S x T of distance(s, t). Throws empty_set.
Distance set_distance(const Digraph& g, std::span<const Vertex> from, std::span<const Vertex> to);

/// Largest finite distance; nullopt if some pair is unreachable.
Distance diameter(const Digraph& g);

/// d+(v) == d-(v) everywhere. Throws not_strongly_connected.
bool is_eulerian(const Digraph& g);

Digraph complete_digraph(std::size_t n);
Digraph directed_cycle(std::size_t n);

/// Edge-list text: header "n m", then m lines "u v".
Digraph parse_edge_list(std::string_view text);
std::string serialize_edge_list(const Digraph& g);
std::string to_dot(const Digraph& g, std::string_view name = "G");

}  // namespace pratio
