#pragma once

#include <cstdint>

#include "otis/multidigraph.hpp"

namespace otis {

/// d >= 2, n >= 1. B(d, n) has d^n vertices; the word (x_1, ..., x_n) over
/// [0, d) is vertex sum x_k * d^(n-k).
class DeBruijnParams {
 public:
  DeBruijnParams(std::uint64_t d, std::uint64_t n);

  std::uint64_t d() const { return d_; }
  std::uint64_t n() const { return n_; }

 private:
  std::uint64_t d_;
  std::uint64_t n_;
};

/// d^n, or SizeBoundExceeded if it exceeds `bound` (or overflows).
std::uint64_t checked_power(std::uint64_t d, std::uint64_t n, std::size_t bound);

/// Complete digraph on d vertices with a loop at every vertex.
MultiDigraph build_kd_plus(std::uint64_t d);

/// Word-shift construction: (x_1..x_n) -> (x_2..x_n y) for every letter y.
/// B(d, 1) = K_d^+, and B(d, n) is the (n-1)th line digraph of K_d^+.
MultiDigraph build_debruijn(const DeBruijnParams& params, std::size_t size_bound = kDefaultSizeBound);

/// L(g): one vertex per arc instance, instances ordered by (tail, head,
/// copy index); instance (u,v,*) -> instance (v,w,*) for every such pair.
MultiDigraph line_digraph(const MultiDigraph& g, std::size_t size_bound = kDefaultSizeBound);

/// k-fold line digraph; k = 0 returns `g` unchanged.
MultiDigraph iterate_line(const MultiDigraph& g, std::size_t k, std::size_t size_bound = kDefaultSizeBound);

}  // namespace otis
