#include "pratio/error.hpp"

namespace pratio {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::loop_edge: return "loop edge";
    case Errc::duplicate_edge: return "duplicate edge";
    case Errc::index_out_of_range: return "vertex index out of range";
    case Errc::malformed_input: return "malformed input";
    case Errc::inconsistent_header: return "inconsistent header";
    case Errc::not_strongly_connected: return "graph is not strongly connected";
    case Errc::sink_vertex: return "vertex with out-degree zero";
    case Errc::periodic_graph: return "graph is periodic";
    case Errc::nonpositive_entry: return "nonpositive distribution entry";
    case Errc::not_stationary: return "vector is not stationary";
    case Errc::wrong_edge_set: return "flow defined on the wrong edge set";
    case Errc::not_a_walk: return "vertex sequence is not a directed walk";
    case Errc::unreachable: return "target unreachable";
    case Errc::empty_set: return "empty vertex set";
    case Errc::invalid_argument: return "invalid argument";
    case Errc::not_shortest_path: return "labeling is not a shortest path";
    case Errc::not_in_family: return "graph is not in the required family";
    case Errc::vacuous_bound: return "bound constant is not positive";
    case Errc::size_limit: return "input exceeds size limit";
  }
  return "unknown error";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace pratio
