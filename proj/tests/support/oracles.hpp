#pragma once

// Test-only reference computations. Each one takes a different route from
// the library code it is compared against.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <vector>

#include "pratio/digraph.hpp"

namespace pratio::testing {

/// Stationary vector by plain rational Gauss-Jordan on phi (P - I) = 0 with
/// the last equation replaced by sum(phi) = 1. The library instead runs
/// fraction-free elimination on the integer flow system.
inline std::vector<mpq_class> reference_stationary(const Digraph& g) {
  const std::size_t n = g.order();
  // Unknowns phi(0..n-1); row v encodes sum_u phi(u) P(u,v) - phi(v) = 0.
  std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(n + 1));
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v : g.out_neighbors(u)) a[v][u] += mpq_class(1, static_cast<unsigned long>(g.out_degree(u)));
  }
  for (Vertex v = 0; v < n; ++v) a[v][v] -= 1;
  for (Vertex u = 0; u < n; ++u) a[n - 1][u] = 1;
  a[n - 1][n] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    std::swap(a[col], a[pivot]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      mpq_class factor = a[r][col] / a[col][col];
      for (std::size_t c = col; c <= n; ++c) a[r][c] -= factor * a[col][c];
    }
  }
  std::vector<mpq_class> phi(n);
  for (std::size_t i = 0; i < n; ++i) {
    phi[i] = a[i][n] / a[i][i];
    phi[i].canonicalize();
  }
  return phi;
}

/// Transitive closure by Floyd-Warshall on a boolean adjacency matrix.
inline bool reference_strongly_connected(std::size_t n, const std::vector<std::vector<bool>>& adj) {
  auto r = adj;
  for (std::size_t i = 0; i < n; ++i) r[i][i] = true;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) r[i][j] = r[i][j] || (r[i][k] && r[k][j]);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!r[i][j]) return false;
    }
  }
  return true;
}

/// Primitivity: some boolean power A^k, k <= n^2, is all ones.
inline bool reference_primitive(const Digraph& g) {
  const std::size_t n = g.order();
  std::vector<std::vector<bool>> a(n, std::vector<bool>(n, false));
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v : g.out_neighbors(u)) a[u][v] = true;
  }
  auto power = a;
  for (std::size_t k = 1; k <= n * n; ++k) {
    bool all = true;
    for (const auto& row : power) {
      for (bool b : row) all = all && b;
    }
    if (all) return true;
    std::vector<std::vector<bool>> next(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t m = 0; m < n; ++m) {
        if (!power[i][m]) continue;
        for (std::size_t j = 0; j < n; ++j) next[i][j] = next[i][j] || a[m][j];
      }
    }
    power = std::move(next);
  }
  return false;
}

/// All-pairs distances by Floyd-Warshall.
inline std::vector<std::vector<std::optional<std::size_t>>> reference_distances(const Digraph& g) {
  const std::size_t n = g.order();
  std::vector<std::vector<std::optional<std::size_t>>> d(n, std::vector<std::optional<std::size_t>>(n));
  for (Vertex u = 0; u < n; ++u) {
    d[u][u] = 0;
    for (Vertex v : g.out_neighbors(u)) d[u][v] = 1;
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (d[i][k] && d[k][j] && (!d[i][j] || *d[i][k] + *d[k][j] < *d[i][j])) d[i][j] = *d[i][k] + *d[k][j];
      }
    }
  }
  return d;
}

}  // namespace pratio::testing
