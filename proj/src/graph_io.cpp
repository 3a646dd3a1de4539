#include "otis/graph_io.hpp"

#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>

namespace otis {

ParseError::ParseError(std::size_t line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

GraphFormat parse_graph_format(std::string_view name) {
  if (name == "edgelist") return GraphFormat::kEdgeList;
  if (name == "dot") return GraphFormat::kDot;
  if (name == "json") return GraphFormat::kJson;
  throw std::invalid_argument("unknown graph format '" + std::string(name) +
                              "' (expected edgelist, dot or json)");
}

void write_edge_list(std::ostream& out, const MultiDigraph& g) {
  out << "vertices " << g.vertex_count() << '\n';
  for (const Arc& a : g.arcs()) out << a.tail << ' ' << a.head << ' ' << a.multiplicity << '\n';
}

namespace {

bool is_skippable(const std::string& line) {
  const auto first = line.find_first_not_of(" \t\r");
  return first == std::string::npos || line[first] == '#';
}

// Parses exactly `n` unsigned integers from `line` and nothing else.
bool parse_fields(const std::string& line, std::uint64_t* fields, std::size_t n) {
  std::istringstream in(line);
  for (std::size_t i = 0; i < n; ++i) {
    in >> std::ws;
    if (in.peek() == '-' || !(in >> fields[i])) return false;
  }
  in >> std::ws;
  return in.eof();
}

}  // namespace

MultiDigraph read_edge_list(std::istream& in, std::size_t size_bound) {
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  MultiDigraph g;
  while (std::getline(in, line)) {
    ++line_no;
    if (is_skippable(line)) continue;
    if (!have_header) {
      std::istringstream header(line);
      std::string keyword;
      header >> keyword;
      std::string rest;
      std::getline(header, rest);
      std::uint64_t n = 0;
      if (keyword != "vertices" || !parse_fields(rest, &n, 1)) {
        throw ParseError(line_no, "expected header 'vertices N'");
      }
      if (n > std::numeric_limits<Vertex>::max()) throw ParseError(line_no, "vertex count too large");
      check_size_bound(n, size_bound, "edge list graph");
      g = MultiDigraph(n);
      have_header = true;
      continue;
    }
    std::uint64_t f[3] = {0, 0, 0};
    if (!parse_fields(line, f, 3)) throw ParseError(line_no, "expected 'u v m' with nonnegative integers");
    if (f[0] >= g.vertex_count() || f[1] >= g.vertex_count()) {
      throw ParseError(line_no, "vertex index out of range");
    }
    if (f[2] == 0) throw ParseError(line_no, "multiplicity must be positive");
    g.add_arc(static_cast<Vertex>(f[0]), static_cast<Vertex>(f[1]), f[2]);
  }
  if (!have_header) throw ParseError(line_no + 1, "missing header 'vertices N'");
  return g;
}

MultiDigraph read_edge_list_file(const std::string& path, std::size_t size_bound) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return read_edge_list(in, size_bound);
}

void write_dot(std::ostream& out, const MultiDigraph& g, std::string_view name) {
  out << "digraph " << name << " {\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v) out << "  " << v << ";\n";
  for (const Arc& a : g.arcs()) {
    for (Multiplicity k = 0; k < a.multiplicity; ++k) {
      out << "  " << a.tail << " -> " << a.head << ";\n";
    }
  }
  out << "}\n";
}

nlohmann::ordered_json to_json(const MultiDigraph& g) {
  nlohmann::ordered_json arcs = nlohmann::ordered_json::array();
  for (const Arc& a : g.arcs()) arcs.push_back({a.tail, a.head, a.multiplicity});
  return {{"vertices", g.vertex_count()}, {"arcs", std::move(arcs)}};
}

MultiDigraph graph_from_json(const nlohmann::ordered_json& j) {
  MultiDigraph g(j.at("vertices").get<std::size_t>());
  for (const auto& arc : j.at("arcs")) {
    if (!arc.is_array() || arc.size() != 3) throw std::invalid_argument("arc must be [u, v, m]");
    g.add_arc(arc[0].get<Vertex>(), arc[1].get<Vertex>(), arc[2].get<Multiplicity>());
  }
  return g;
}

void write_graph(std::ostream& out, const MultiDigraph& g, GraphFormat format) {
  switch (format) {
    case GraphFormat::kEdgeList:
      write_edge_list(out, g);
      break;
    case GraphFormat::kDot:
      write_dot(out, g);
      break;
    case GraphFormat::kJson:
      out << to_json(g).dump() << '\n';
      break;
  }
}

}  // namespace otis
