#include "otis/debruijn.hpp"

#include <stdexcept>

namespace otis {

DeBruijnParams::DeBruijnParams(std::uint64_t d, std::uint64_t n) : d_(d), n_(n) {
  if (d < 2) throw std::invalid_argument("De Bruijn degree d must be at least 2");
  if (n < 1) throw std::invalid_argument("De Bruijn dimension n must be at least 1");
}

std::uint64_t checked_power(std::uint64_t d, std::uint64_t n, std::size_t bound) {
  std::uint64_t result = 1;
  for (std::uint64_t k = 0; k < n; ++k) {
    if (d != 0 && result > bound / d) {
      throw SizeBoundExceeded("power " + std::to_string(d) + "^" + std::to_string(n) +
                              " exceeds the size bound " + std::to_string(bound));
    }
    result *= d;
  }
  check_size_bound(result, bound, "power");
  return result;
}

MultiDigraph build_kd_plus(std::uint64_t d) {
  if (d < 1) throw std::invalid_argument("K_d^+ needs d >= 1");
  check_size_bound(d, kDefaultSizeBound, "K_d^+");
  MultiDigraph g(d);
  for (Vertex u = 0; u < d; ++u) {
    for (Vertex v = 0; v < d; ++v) g.add_arc(u, v);
  }
  return g;
}

MultiDigraph build_debruijn(const DeBruijnParams& params, std::size_t size_bound) {
  const std::uint64_t d = params.d();
  const std::uint64_t size = checked_power(d, params.n(), size_bound);
  MultiDigraph g(size);
  // Dropping the leading letter is "mod d^(n-1)"; appending y is "* d + y".
  const std::uint64_t suffix_modulus = size / d;
  for (std::uint64_t word = 0; word < size; ++word) {
    const std::uint64_t shifted = (word % suffix_modulus) * d;
    for (std::uint64_t y = 0; y < d; ++y) {
      g.add_arc(static_cast<Vertex>(word), static_cast<Vertex>(shifted + y));
    }
  }
  return g;
}

MultiDigraph line_digraph(const MultiDigraph& g, std::size_t size_bound) {
  check_size_bound(g.total_arcs(), size_bound, "line digraph");
  const std::vector<Arc> arcs = g.arcs();

  // leaving[v] lists (first dense index, multiplicity) of arcs leaving v.
  std::vector<std::vector<std::pair<Vertex, Multiplicity>>> leaving(g.vertex_count());
  Vertex next = 0;
  for (const Arc& a : arcs) {
    leaving[a.tail].emplace_back(next, a.multiplicity);
    next += static_cast<Vertex>(a.multiplicity);
  }

  MultiDigraph out(g.total_arcs());
  Vertex instance = 0;
  for (const Arc& a : arcs) {
    for (Multiplicity copy = 0; copy < a.multiplicity; ++copy, ++instance) {
      for (const auto& [first, count] : leaving[a.head]) {
        for (Multiplicity k = 0; k < count; ++k) out.add_arc(instance, first + static_cast<Vertex>(k));
      }
    }
  }
  return out;
}

MultiDigraph iterate_line(const MultiDigraph& g, std::size_t k, std::size_t size_bound) {
  MultiDigraph current = g;
  for (std::size_t step = 0; step < k; ++step) current = line_digraph(current, size_bound);
  return current;
}

}  // namespace otis
