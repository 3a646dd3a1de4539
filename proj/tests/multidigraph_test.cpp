#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "otis/debruijn.hpp"
#include "otis/multidigraph.hpp"
#include "otis/otis_builder.hpp"

using namespace otis;

namespace {

// Evaluated by hand from the transpose link map, processors 0..7.
MultiDigraph h_2_4_2_by_hand() {
  MultiDigraph g(4);
  g.add_arc(0, 3).add_arc(0, 2).add_arc(1, 1).add_arc(1, 0);
  g.add_arc(2, 3).add_arc(2, 2).add_arc(3, 1).add_arc(3, 0);
  return g;
}

}  // namespace

TEST_CASE("new graphs have no arcs") {
  CHECK(MultiDigraph(0).vertex_count() == 0);
  CHECK(MultiDigraph(0).total_arcs() == 0);
  const MultiDigraph three(3);
  CHECK(three.vertex_count() == 3);
  CHECK(three.total_arcs() == 0);
  CHECK(MultiDigraph(1).out_degree(0) == 0);
}

TEST_CASE("add_arc accumulates multiplicities and checks bounds") {
  MultiDigraph g(2);
  g.add_arc(0, 1, 1);
  CHECK(g.multiplicity(0, 1) == 1);
  g.add_arc(0, 1, 1);
  CHECK(g.multiplicity(0, 1) == 2);
  CHECK(g.multiplicity(1, 0) == 0);
  CHECK(g.distinct_arcs() == 1);
  CHECK_THROWS_AS(g.add_arc(0, 2, 1), std::out_of_range);
  CHECK_THROWS_AS(g.add_arc(0, 1, 0), std::invalid_argument);
  CHECK_THROWS_AS(g.out_degree(5), std::out_of_range);
}

TEST_CASE("arcs iterate sorted by (tail, head)") {
  MultiDigraph g(3);
  g.add_arc(2, 0).add_arc(0, 2, 3).add_arc(0, 1).add_arc(1, 1);
  const std::vector<Arc> expected = {{0, 1, 1}, {0, 2, 3}, {1, 1, 1}, {2, 0, 1}};
  CHECK(g.arcs() == expected);
  CHECK(g.out_arcs(0) == std::vector<Arc>{{0, 1, 1}, {0, 2, 3}});
}

TEST_CASE("degrees count multiplicities") {
  const MultiDigraph h = build_h(OtisParams(2, 2, 2));
  for (Vertex v = 0; v < 2; ++v) {
    CHECK(h.out_degree(v) == 2);
    CHECK(h.in_degree(v) == 2);
  }
  const MultiDigraph k2 = build_kd_plus(2);
  CHECK(k2.out_degree(0) == 2);
  CHECK(k2.out_degree(1) == 2);
  MultiDigraph isolated(2);
  isolated.add_arc(1, 1);
  CHECK(isolated.out_degree(0) == 0);
  CHECK(isolated.in_degree(0) == 0);
}

TEST_CASE("is_d_regular") {
  CHECK(is_d_regular(build_h(OtisParams(4, 4, 2)), 2));
  CHECK(is_d_regular(build_debruijn(DeBruijnParams(2, 3)), 2));
  MultiDigraph path(2);
  path.add_arc(0, 1);
  CHECK_FALSE(is_d_regular(path, 1));
  CHECK_FALSE(is_d_regular(build_h(OtisParams(4, 4, 2)), 3));
}

TEST_CASE("has_sink_or_source") {
  CHECK_FALSE(has_sink_or_source(directed_cycle(3)));
  MultiDigraph single(2);
  single.add_arc(0, 1);
  CHECK(has_sink_or_source(single));
  CHECK_FALSE(has_sink_or_source(build_h(OtisParams(2, 4, 2))));
}

TEST_CASE("dual reverses arcs and is an involution") {
  MultiDigraph single(2);
  single.add_arc(0, 1);
  MultiDigraph reversed(2);
  reversed.add_arc(1, 0);
  CHECK(dual(single) == reversed);

  const MultiDigraph h = build_h(OtisParams(3, 4, 2));
  CHECK(dual(dual(h)) == h);

  CHECK(build_h(OtisParams(2, 4, 2)) == h_2_4_2_by_hand());
  CHECK(dual(build_h(OtisParams(2, 4, 2))) == build_h(OtisParams(4, 2, 2)));
}

TEST_CASE("relabel rejects non-permutations") {
  const MultiDigraph c = directed_cycle(3);
  const std::vector<Vertex> bad = {0, 0, 1};
  CHECK_THROWS_AS(relabel(c, bad), std::invalid_argument);
  const std::vector<Vertex> shift = {1, 2, 0};
  CHECK(relabel(c, shift) == c);
}

TEST_CASE("walk_counts on small examples") {
  const MultiDigraph h = build_h(OtisParams(1, 4, 2));
  const WalkCountMatrix zero = walk_counts(h, 0);
  CHECK(zero.at(0, 0) == WalkCount::kOne);
  CHECK(zero.at(0, 1) == WalkCount::kNone);

  const WalkCountMatrix one = walk_counts(h, 1);
  CHECK(one.order() == 1);
  CHECK(one.at(0, 1) == WalkCount::kMany);
  CHECK(one.at(0, 0) == WalkCount::kNone);

  const WalkCountMatrix two = walk_counts(directed_cycle(3), 2);
  for (Vertex u = 0; u < 3; ++u) {
    for (Vertex v = 0; v < 3; ++v) {
      CHECK(two.at(u, v) == (v == (u + 2) % 3 ? WalkCount::kOne : WalkCount::kNone));
    }
  }
}

TEST_CASE("walk_counts agrees with exhaustive walk enumeration") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const MultiDigraph g = oracle::random_multidigraph(1 + trial % 5, trial % 9, rng);
    const auto adj = oracle::dense(g);
    for (std::size_t n = 0; n <= 3; ++n) {
      const WalkCountMatrix w = walk_counts(g, n);
      for (Vertex u = 0; u < g.vertex_count(); ++u) {
        for (Vertex v = 0; v < g.vertex_count(); ++v) {
          const auto exact = oracle::count_walks(adj, u, v, n);
          CHECK(static_cast<std::uint64_t>(w.at(u, v)) == std::min<std::uint64_t>(exact, 2));
        }
      }
    }
  }
}

TEST_CASE("walk relation composes: (m+n)-walks exist iff an intermediate vertex exists") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const MultiDigraph g = oracle::random_multidigraph(2 + trial % 5, 1 + trial % 10, rng);
    for (std::size_t m = 0; m <= 2; ++m) {
      for (std::size_t n = 0; n <= 2; ++n) {
        const auto wm = walk_counts(g, m);
        const auto wn = walk_counts(g, n);
        const auto wmn = walk_counts(g, m + n);
        for (Vertex u = 0; u < g.vertex_count(); ++u) {
          for (Vertex v = 0; v < g.vertex_count(); ++v) {
            bool via = false;
            for (Vertex w = 0; w < g.vertex_count(); ++w) via = via || (wm.reachable(u, w) && wn.reachable(w, v));
            CHECK(wmn.reachable(u, v) == via);
          }
        }
      }
    }
  }
}

TEST_CASE("degree sums equal total arcs") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const MultiDigraph g = oracle::random_multidigraph(1 + trial % 6, trial, rng);
    Multiplicity out = 0, in = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      out += g.out_degree(v);
      in += g.in_degree(v);
    }
    CHECK(out == g.total_arcs());
    CHECK(in == g.total_arcs());
    CHECK(g.recount_arcs() == g.total_arcs());
    CHECK(dual(dual(g)) == g);
  }
}
