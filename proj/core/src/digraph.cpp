#include "pratio/digraph.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <numeric>
#include <sstream>

#include "pratio/error.hpp"

namespace pratio {

Digraph::Digraph(std::size_t n, std::span<const Edge> edges) : out_(n), in_(n) {
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) {
      throw Error(Errc::index_out_of_range,
                  "edge (" + std::to_string(u) + "," + std::to_string(v) + ") with n=" + std::to_string(n));
    }
    if (u == v) throw Error(Errc::loop_edge, "vertex " + std::to_string(u));
    out_[u].push_back(v);
  }
  for (Vertex u = 0; u < n; ++u) {
    auto& adj = out_[u];
    std::sort(adj.begin(), adj.end());
    if (auto it = std::adjacent_find(adj.begin(), adj.end()); it != adj.end()) {
      throw Error(Errc::duplicate_edge, "(" + std::to_string(u) + "," + std::to_string(*it) + ")");
    }
    for (Vertex v : adj) in_[v].push_back(u);
    edge_count_ += adj.size();
  }
  // in_ lists are filled in increasing u, hence already sorted.
}

bool Digraph::has_edge(Vertex u, Vertex v) const {
  if (u >= order() || v >= order()) return false;
  return std::binary_search(out_[u].begin(), out_[u].end(), v);
}

std::vector<Edge> Digraph::edges() const {
  std::vector<Edge> result;
  result.reserve(edge_count_);
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : out_[u]) result.emplace_back(u, v);
  }
  return result;
}

Digraph Digraph::with_edge(Vertex u, Vertex v) const {
  auto e = edges();
  e.emplace_back(u, v);
  return Digraph(order(), e);
}

Digraph Digraph::without_edge(Vertex u, Vertex v) const {
  auto e = edges();
  auto it = std::find(e.begin(), e.end(), Edge{u, v});
  if (it == e.end()) {
    throw Error(Errc::invalid_argument, "edge (" + std::to_string(u) + "," + std::to_string(v) + ") not present");
  }
  e.erase(it);
  return Digraph(order(), e);
}

Digraph Digraph::permuted(std::span<const Vertex> perm) const {
  if (perm.size() != order()) throw Error(Errc::invalid_argument, "permutation size mismatch");
  std::vector<Edge> e;
  e.reserve(edge_count_);
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : out_[u]) e.emplace_back(perm[u], perm[v]);
  }
  return Digraph(order(), e);
}

namespace {

std::vector<bool> reach(const Digraph& g, Vertex s, bool forward) {
  std::vector<bool> seen(g.order(), false);
  std::vector<Vertex> stack{s};
  seen[s] = true;
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    for (Vertex w : forward ? g.out_neighbors(u) : g.in_neighbors(u)) {
      if (!seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
    }
  }
  return seen;
}

void require_strongly_connected(const Digraph& g) {
  if (!is_strongly_connected(g)) throw Error(Errc::not_strongly_connected, std::to_string(g.order()) + " vertices");
}

}  // namespace

bool is_strongly_connected(const Digraph& g) {
  if (g.order() == 0) return false;
  auto all = [](const std::vector<bool>& s) { return std::all_of(s.begin(), s.end(), [](bool b) { return b; }); };
  return all(reach(g, 0, true)) && all(reach(g, 0, false));
}

std::size_t period(const Digraph& g) {
  require_strongly_connected(g);
  auto level = distances_from(g, 0);
  std::size_t d = 0;
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v : g.out_neighbors(u)) {
      auto lu = static_cast<long>(*level[u]);
      auto lv = static_cast<long>(*level[v]);
      d = std::gcd(d, static_cast<std::size_t>(std::labs(lu + 1 - lv)));
    }
  }
  // d == 0 only for the single-vertex graph, which has no cycles.
  return d;
}

bool is_aperiodic(const Digraph& g) { return period(g) == 1; }

std::vector<Distance> distances_from(const Digraph& g, Vertex source) {
  std::vector<Distance> dist(g.order());
  if (source >= g.order()) throw Error(Errc::index_out_of_range, "vertex " + std::to_string(source));
  std::deque<Vertex> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    Vertex u = queue.front();
    queue.pop_front();
    for (Vertex w : g.out_neighbors(u)) {
      if (!dist[w]) {
        dist[w] = *dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

Distance distance(const Digraph& g, Vertex u, Vertex v) {
  if (v >= g.order()) throw Error(Errc::index_out_of_range, "vertex " + std::to_string(v));
  return distances_from(g, u)[v];
}

Distance set_distance(const Digraph& g, std::span<const Vertex> from, std::span<const Vertex> to) {
  if (from.empty() || to.empty()) throw Error(Errc::empty_set, "set_distance");
  Distance best;
  for (Vertex s : from) {
    auto d = distances_from(g, s);
    for (Vertex t : to) {
      if (t >= g.order()) throw Error(Errc::index_out_of_range, "vertex " + std::to_string(t));
      if (d[t] && (!best || *d[t] < *best)) best = d[t];
    }
  }
  return best;
}

Distance diameter(const Digraph& g) {
  std::size_t best = 0;
  for (Vertex s = 0; s < g.order(); ++s) {
    for (const auto& d : distances_from(g, s)) {
      if (!d) return std::nullopt;
      best = std::max(best, *d);
    }
  }
  return best;
}

bool is_eulerian(const Digraph& g) {
  require_strongly_connected(g);
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.out_degree(v) != g.in_degree(v)) return false;
  }
  return true;
}

Digraph complete_digraph(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (u != v) e.emplace_back(u, v);
    }
  }
  return Digraph(n, e);
}

Digraph directed_cycle(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex u = 0; u < n; ++u) e.emplace_back(u, static_cast<Vertex>((u + 1) % n));
  return Digraph(n, e);
}

namespace {

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

std::size_t parse_count(std::string_view token, std::size_t line_no) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw Error(Errc::malformed_input, "line " + std::to_string(line_no) + ": '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

Digraph parse_edge_list(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  // Trailing blank lines are tolerated; interior ones are not.
  while (!lines.empty() && split_tokens(lines.back()).empty()) lines.pop_back();
  if (lines.empty()) throw Error(Errc::malformed_input, "missing header line");

  auto header = split_tokens(lines[0]);
  if (header.size() != 2) throw Error(Errc::malformed_input, "line 1: expected 'n m'");
  std::size_t n = parse_count(header[0], 1);
  std::size_t m = parse_count(header[1], 1);
  if (lines.size() - 1 != m) {
    throw Error(Errc::inconsistent_header,
                "header declares " + std::to_string(m) + " edges, found " + std::to_string(lines.size() - 1));
  }
  std::vector<Edge> edges;
  edges.reserve(m);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto tok = split_tokens(lines[i]);
    if (tok.size() != 2) throw Error(Errc::malformed_input, "line " + std::to_string(i + 1) + ": expected 'u v'");
    auto u = parse_count(tok[0], i + 1);
    auto v = parse_count(tok[1], i + 1);
    if (u >= n || v >= n) {
      throw Error(Errc::index_out_of_range, "line " + std::to_string(i + 1) + " with n=" + std::to_string(n));
    }
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  return Digraph(n, edges);
}

std::string serialize_edge_list(const Digraph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.size() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

std::string to_dot(const Digraph& g, std::string_view name) {
  std::ostringstream out;
  out << "digraph " << name << " {\n";
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.out_degree(v) == 0 && g.in_degree(v) == 0) out << "  " << v << ";\n";
  }
  for (const auto& [u, v] : g.edges()) out << "  " << u << " -> " << v << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace pratio
