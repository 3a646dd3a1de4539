#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace otis {

using Vertex = std::uint32_t;
using Multiplicity = std::uint64_t;

/// Largest vertex count any construction or canonical labeling will accept
/// unless the caller passes a different bound.
inline constexpr std::size_t kDefaultSizeBound = 4096;

/// Thrown when a construction would exceed the configured desk-scale bound.
class SizeBoundExceeded : public std::length_error {
 public:
  SizeBoundExceeded(const std::string& what_arg) : std::length_error(what_arg) {}
};

/// Throws SizeBoundExceeded when `vertices > bound`. `what` names the object
/// being built for the error message.
void check_size_bound(std::size_t vertices, std::size_t bound, const std::string& what);

struct Arc {
  Vertex tail = 0;
  Vertex head = 0;
  Multiplicity multiplicity = 0;

  friend bool operator==(const Arc&, const Arc&) = default;
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

/// Directed multigraph on the dense vertex set [0, vertex_count).
///
/// Arcs are stored as (tail, head) -> multiplicity with no zero entries, so
/// iteration is always sorted by (tail, head). Loops and parallel arcs are
/// first-class: H(p,q,d) produces both.
class MultiDigraph {
 public:
  MultiDigraph() = default;
  explicit MultiDigraph(std::size_t vertex_count);

  std::size_t vertex_count() const { return out_degree_.size(); }
  Multiplicity total_arcs() const { return total_arcs_; }
  /// Number of distinct (tail, head) pairs with nonzero multiplicity.
  std::size_t distinct_arcs() const { return arcs_.size(); }

  /// Adds `count` parallel copies of tail -> head.
  MultiDigraph& add_arc(Vertex tail, Vertex head, Multiplicity count = 1);

  Multiplicity multiplicity(Vertex tail, Vertex head) const;
  Multiplicity out_degree(Vertex v) const;
  Multiplicity in_degree(Vertex v) const;

  /// Arcs in ascending (tail, head) order.
  std::vector<Arc> arcs() const;
  /// Out-arcs of `v` in ascending head order.
  std::vector<Arc> out_arcs(Vertex v) const;

  /// Sum of multiplicities recomputed from scratch; matches total_arcs().
  Multiplicity recount_arcs() const;

  friend bool operator==(const MultiDigraph& a, const MultiDigraph& b) {
    return a.out_degree_.size() == b.out_degree_.size() && a.arcs_ == b.arcs_;
  }

 private:
  void check_vertex(Vertex v) const;

  std::map<std::pair<Vertex, Vertex>, Multiplicity> arcs_;
  std::vector<Multiplicity> out_degree_;
  std::vector<Multiplicity> in_degree_;
  Multiplicity total_arcs_ = 0;
};

/// True iff every vertex has in- and out-degree exactly `d`.
bool is_d_regular(const MultiDigraph& g, Multiplicity d);

/// True iff some vertex has in-degree 0 or out-degree 0.
bool has_sink_or_source(const MultiDigraph& g);

/// Reverses every arc, keeping multiplicities.
MultiDigraph dual(const MultiDigraph& g);

/// Vertex v of `g` becomes vertex perm[v] of the result. `perm` must be a
/// permutation of [0, vertex_count).
MultiDigraph relabel(const MultiDigraph& g, std::span<const Vertex> perm);

/// Directed cycle 0 -> 1 -> ... -> n-1 -> 0.
MultiDigraph directed_cycle(std::size_t n);

/// Saturating walk count: 0, 1, or "at least 2".
enum class WalkCount : std::uint8_t { kNone = 0, kOne = 1, kMany = 2 };

/// Number of length-`order` walks between every ordered vertex pair,
/// saturated at kMany. Row-major, dense.
class WalkCountMatrix {
 public:
  WalkCountMatrix(std::size_t vertex_count, std::size_t order);

  std::size_t order() const { return order_; }
  std::size_t vertex_count() const { return n_; }

  WalkCount at(Vertex from, Vertex to) const { return counts_[from * n_ + to]; }
  void set(Vertex from, Vertex to, WalkCount c) { counts_[from * n_ + to] = c; }
  bool reachable(Vertex from, Vertex to) const { return at(from, to) != WalkCount::kNone; }

  std::span<const WalkCount> row(Vertex from) const {
    return {counts_.data() + from * n_, n_};
  }

  friend bool operator==(const WalkCountMatrix&, const WalkCountMatrix&) = default;

 private:
  std::size_t n_;
  std::size_t order_;
  std::vector<WalkCount> counts_;
};

/// Walks of length `n` counted with arc multiplicities, by repeated
/// saturating products with the adjacency matrix. n = 0 gives the identity.
WalkCountMatrix walk_counts(const MultiDigraph& g, std::size_t n);

}  // namespace otis
