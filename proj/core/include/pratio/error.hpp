#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pratio {

/// Distinct failure kinds raised by the library. The CLI maps every kind to
/// exit code 1 (domain error).
enum class Errc {
  loop_edge,
  duplicate_edge,
  index_out_of_range,
  malformed_input,
  inconsistent_header,
  not_strongly_connected,
  sink_vertex,
  periodic_graph,
  nonpositive_entry,
  not_stationary,
  wrong_edge_set,
  not_a_walk,
  unreachable,
  empty_set,
  invalid_argument,
  not_shortest_path,
  not_in_family,
  vacuous_bound,
  size_limit,
};

std::string_view to_string(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace pratio
