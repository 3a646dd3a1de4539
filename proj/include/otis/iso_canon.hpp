#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "otis/multidigraph.hpp"

namespace otis {

/// Color class id per vertex.
using Coloring = std::vector<std::uint32_t>;

/// Arc list of a graph relabeled by its canonical labeling. Two multidigraphs
/// are isomorphic exactly when their canonical forms are equal.
struct CanonicalForm {
  std::size_t vertex_count = 0;
  std::vector<Arc> canonical_arcs;  // sorted

  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

struct CanonicalLabeling {
  CanonicalForm form;
  /// labeling[v] is the canonical index of input vertex v.
  std::vector<Vertex> labeling;
  /// Search statistics, for diagnostics only.
  std::size_t leaves_visited = 0;
  std::size_t automorphisms_found = 0;
};

/// Refines `initial` to its coarsest equitable refinement: afterwards every
/// vertex of a class sees the same multiset of arc multiplicities to and from
/// every class. Cells are split one splitter class at a time and new classes
/// are ordered by those multisets, so the returned colors are dense, ordered
/// consistently with the input colors, and independent of vertex numbering.
Coloring refine_colors(const MultiDigraph& g, const Coloring& initial);

/// Canonical labeling by color refinement plus individualization
/// backtracking. The search individualizes vertices of the first smallest
/// non-singleton cell in ascending index order, keeps the lexicographically
/// least leaf, and prunes with automorphisms discovered from equal leaves.
CanonicalLabeling canonical_labeling(const MultiDigraph& g, std::size_t size_bound = kDefaultSizeBound);

CanonicalForm canonical_form(const MultiDigraph& g, std::size_t size_bound = kDefaultSizeBound);

bool isomorphic(const MultiDigraph& a, const MultiDigraph& b, std::size_t size_bound = kDefaultSizeBound);

}  // namespace otis
