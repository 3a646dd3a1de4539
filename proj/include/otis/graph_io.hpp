#pragma once

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "otis/multidigraph.hpp"

namespace otis {

/// Malformed edge-list input; `line()` is 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

enum class GraphFormat { kEdgeList, kDot, kJson };

GraphFormat parse_graph_format(std::string_view name);

// Edge list:
//   vertices N
//   u v m        (one line per distinct arc, sorted by (u, v))
// Blank lines and lines starting with '#' are ignored on input. Repeated
// pairs accumulate. A header above `size_bound` vertices is rejected before
// anything is allocated.
void write_edge_list(std::ostream& out, const MultiDigraph& g);
MultiDigraph read_edge_list(std::istream& in, std::size_t size_bound = kDefaultSizeBound);
MultiDigraph read_edge_list_file(const std::string& path, std::size_t size_bound = kDefaultSizeBound);

/// Graphviz digraph; an arc of multiplicity m is emitted as m parallel edges.
void write_dot(std::ostream& out, const MultiDigraph& g, std::string_view name = "G");

/// {"vertices": N, "arcs": [[u, v, m], ...]} in sorted order.
nlohmann::ordered_json to_json(const MultiDigraph& g);
MultiDigraph graph_from_json(const nlohmann::ordered_json& j);

void write_graph(std::ostream& out, const MultiDigraph& g, GraphFormat format);

}  // namespace otis
