#pragma once

// Brute-force reference implementations used only by tests. They follow the
// definitions literally and share no code with the library algorithms.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "otis/multidigraph.hpp"

namespace otis::oracle {

inline std::vector<std::vector<Multiplicity>> dense(const MultiDigraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<Multiplicity>> m(n, std::vector<Multiplicity>(n, 0));
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) m[u][v] = g.multiplicity(u, v);
  }
  return m;
}

/// Exact number of length-`len` walks from `from` to `to`, by enumerating
/// every vertex sequence.
inline std::uint64_t count_walks(const std::vector<std::vector<Multiplicity>>& adj, Vertex from, Vertex to,
                                 std::size_t len) {
  if (len == 0) return from == to ? 1 : 0;
  std::uint64_t total = 0;
  for (Vertex next = 0; next < adj.size(); ++next) {
    if (adj[from][next] == 0) continue;
    total += adj[from][next] * count_walks(adj, next, to, len - 1);
  }
  return total;
}

/// n-walk existence relation.
inline std::vector<std::vector<bool>> walk_relation(const MultiDigraph& g, std::size_t n) {
  const auto adj = dense(g);
  const std::size_t size = g.vertex_count();
  std::vector<std::vector<bool>> r(size, std::vector<bool>(size, false));
  for (Vertex u = 0; u < size; ++u) {
    for (Vertex v = 0; v < size; ++v) r[u][v] = count_walks(adj, u, v, n) > 0;
  }
  return r;
}

/// The nth Heuchenne condition, quantifier by quantifier over all 4-tuples.
inline bool heuchenne_literal(const MultiDigraph& g, std::size_t n) {
  const auto r = walk_relation(g, n);
  const std::size_t size = g.vertex_count();
  for (Vertex u = 0; u < size; ++u)
    for (Vertex v = 0; v < size; ++v)
      for (Vertex w = 0; w < size; ++w)
        for (Vertex x = 0; x < size; ++x)
          if (r[u][w] && r[v][w] && r[v][x] && !r[u][x]) return false;
  return true;
}

/// Isomorphism by trying every bijection.
inline bool isomorphic_brute_force(const MultiDigraph& a, const MultiDigraph& b) {
  if (a.vertex_count() != b.vertex_count() || a.total_arcs() != b.total_arcs()) return false;
  const auto ma = dense(a);
  const auto mb = dense(b);
  std::vector<Vertex> perm(a.vertex_count());
  std::iota(perm.begin(), perm.end(), Vertex{0});
  do {
    bool ok = true;
    for (Vertex u = 0; u < perm.size() && ok; ++u) {
      for (Vertex v = 0; v < perm.size() && ok; ++v) ok = ma[u][v] == mb[perm[u]][perm[v]];
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

inline std::vector<Vertex> random_permutation(std::size_t n, std::mt19937_64& rng) {
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), Vertex{0});
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

/// Random multidigraph with `vertices` vertices and exactly `arcs` arc
/// instances (loops and parallel arcs allowed).
inline MultiDigraph random_multidigraph(std::size_t vertices, std::size_t arcs, std::mt19937_64& rng) {
  MultiDigraph g(vertices);
  if (vertices == 0) return g;
  std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(vertices - 1));
  for (std::size_t k = 0; k < arcs; ++k) g.add_arc(pick(rng), pick(rng));
  return g;
}

}  // namespace otis::oracle
