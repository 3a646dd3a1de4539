#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "oracles.hpp"
#include "otis/debruijn.hpp"
#include "otis/iso_canon.hpp"
#include "otis/otis_builder.hpp"

using namespace otis;

namespace {

std::size_t distinct(const Coloring& c) { return std::set<std::uint32_t>(c.begin(), c.end()).size(); }

std::vector<Multiplicity> sorted_degrees(const MultiDigraph& g) {
  std::vector<Multiplicity> out;
  for (Vertex v = 0; v < g.vertex_count(); ++v) out.push_back(g.out_degree(v) * 1000 + g.in_degree(v));
  std::sort(out.begin(), out.end());
  return out;
}

std::multiset<int> walk_multiset(const MultiDigraph& g, std::size_t n) {
  const WalkCountMatrix w = walk_counts(g, n);
  std::multiset<int> out;
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    for (Vertex v = 0; v < g.vertex_count(); ++v) out.insert(static_cast<int>(w.at(u, v)));
  }
  return out;
}

}  // namespace

TEST_CASE("refinement of uniform colorings") {
  const MultiDigraph b22 = build_debruijn(DeBruijnParams(2, 2));
  CHECK(distinct(refine_colors(b22, Coloring(4, 0))) == 1);

  MultiDigraph path(3);
  path.add_arc(0, 1).add_arc(1, 2);
  CHECK(distinct(refine_colors(path, Coloring(3, 7))) == 3);

  CHECK_THROWS_AS(refine_colors(path, Coloring(2, 0)), std::invalid_argument);
}

TEST_CASE("refinement is idempotent and keeps the initial order") {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 30; ++trial) {
    const MultiDigraph g = oracle::random_multidigraph(2 + trial % 7, 3 + trial, rng);
    Coloring initial(g.vertex_count());
    for (auto& c : initial) c = static_cast<std::uint32_t>(rng() % 3) * 10;
    const Coloring stable = refine_colors(g, initial);
    CHECK(refine_colors(g, stable) == stable);
    for (Vertex u = 0; u < g.vertex_count(); ++u) {
      for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (initial[u] < initial[v]) CHECK(stable[u] < stable[v]);
      }
    }
  }
}

TEST_CASE("refinement colors do not depend on vertex numbering") {
  std::mt19937_64 rng(8);
  const MultiDigraph g = build_h(OtisParams(3, 8, 4));
  const Coloring base = refine_colors(g, Coloring(g.vertex_count(), 0));
  for (int trial = 0; trial < 10; ++trial) {
    const auto perm = oracle::random_permutation(g.vertex_count(), rng);
    const Coloring moved = refine_colors(relabel(g, perm), Coloring(g.vertex_count(), 0));
    for (Vertex v = 0; v < g.vertex_count(); ++v) CHECK(moved[perm[v]] == base[v]);
  }
}

TEST_CASE("canonical form of the directed 3-cycle") {
  const CanonicalForm c = canonical_form(directed_cycle(3));
  CHECK(c.vertex_count == 3);
  CHECK(c.canonical_arcs == std::vector<Arc>{{0, 1, 1}, {1, 2, 1}, {2, 0, 1}});
}

TEST_CASE("canonical form is invariant under relabeling") {
  std::mt19937_64 rng(2024);
  for (const auto& g : {build_h(OtisParams(4, 4, 2)), build_h(OtisParams(3, 8, 2)),
                        build_debruijn(DeBruijnParams(2, 4)), build_kd_plus(5)}) {
    const CanonicalForm base = canonical_form(g);
    for (int trial = 0; trial < 20; ++trial) {
      const auto perm = oracle::random_permutation(g.vertex_count(), rng);
      CHECK(canonical_form(relabel(g, perm)) == base);
    }
  }
}

TEST_CASE("canonical labeling reproduces the canonical arcs") {
  const MultiDigraph g = build_h(OtisParams(6, 4, 3));
  const CanonicalLabeling lab = canonical_labeling(g);
  CHECK(relabel(g, lab.labeling).arcs() == lab.form.canonical_arcs);
}

TEST_CASE("isomorphism examples") {
  CHECK(canonical_form(build_h(OtisParams(1, 4, 2))) != canonical_form(build_kd_plus(2)));
  CHECK(isomorphic(build_h(OtisParams(2, 4, 2)), build_debruijn(DeBruijnParams(2, 2))));
  CHECK_FALSE(isomorphic(build_h(OtisParams(4, 4, 2)), build_debruijn(DeBruijnParams(2, 3))));
  const MultiDigraph g = build_h(OtisParams(5, 6, 3));
  CHECK(isomorphic(g, g));
  CHECK(isomorphic(MultiDigraph(0), MultiDigraph(0)));
  CHECK_FALSE(isomorphic(MultiDigraph(1), MultiDigraph(2)));
}

TEST_CASE("size bound is enforced") {
  CHECK_THROWS_AS(canonical_form(directed_cycle(50), 49), SizeBoundExceeded);
  CHECK_NOTHROW(canonical_form(directed_cycle(50), 50));
}

TEST_CASE("agreement with the all-permutations oracle") {
  std::mt19937_64 rng(77);
  int agree_positive = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + trial % 6;
    const std::size_t arcs = trial % 10;
    const MultiDigraph a = oracle::random_multidigraph(n, arcs, rng);
    // Half the time compare against a relabeled copy with one arc moved.
    MultiDigraph b = relabel(a, oracle::random_permutation(n, rng));
    if (trial % 2 == 1 && arcs > 0) {
      const auto all = b.arcs();
      MultiDigraph moved(n);
      for (std::size_t k = 0; k + 1 < all.size(); ++k) moved.add_arc(all[k].tail, all[k].head, all[k].multiplicity);
      const Arc& last = all.back();
      if (last.multiplicity > 1) moved.add_arc(last.tail, last.head, last.multiplicity - 1);
      moved.add_arc(static_cast<Vertex>(rng() % n), static_cast<Vertex>(rng() % n));
      b = moved;
    }
    const bool expected = oracle::isomorphic_brute_force(a, b);
    CHECK(isomorphic(a, b) == expected);
    if (expected) ++agree_positive;
  }
  CHECK(agree_positive > 150);
}

TEST_CASE("isomorphic graphs share cheap invariants and isomorphism is an equivalence") {
  std::vector<MultiDigraph> family;
  std::mt19937_64 rng(31);
  for (std::uint64_t p = 1; p <= 8; ++p) {
    for (std::uint64_t q = 1; q <= 8; ++q) {
      if (OtisParams::valid(p, q, 2) && p * q <= 16) family.push_back(build_h(OtisParams(p, q, 2)));
    }
  }
  for (std::uint64_t n = 1; n <= 3; ++n) family.push_back(build_debruijn(DeBruijnParams(2, n)));
  const std::size_t original = family.size();
  for (std::size_t k = 0; k < original; ++k) {
    family.push_back(relabel(family[k], oracle::random_permutation(family[k].vertex_count(), rng)));
  }

  std::vector<std::vector<bool>> iso(family.size(), std::vector<bool>(family.size()));
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = 0; j < family.size(); ++j) {
      iso[i][j] = isomorphic(family[i], family[j]);
      if (iso[i][j]) {
        CHECK(family[i].vertex_count() == family[j].vertex_count());
        CHECK(sorted_degrees(family[i]) == sorted_degrees(family[j]));
        CHECK(walk_multiset(family[i], 1) == walk_multiset(family[j], 1));
        CHECK(walk_multiset(family[i], 2) == walk_multiset(family[j], 2));
      }
    }
  }
  for (std::size_t i = 0; i < family.size(); ++i) {
    CHECK(iso[i][i]);
    for (std::size_t j = 0; j < family.size(); ++j) {
      CHECK(iso[i][j] == iso[j][i]);
      for (std::size_t k = 0; k < family.size(); ++k) {
        if (iso[i][j] && iso[j][k]) CHECK(iso[i][k]);
      }
    }
  }
}

TEST_CASE("highly symmetric inputs finish quickly") {
  // 24 identical components with many automorphisms.
  std::mt19937_64 rng(5);
  const MultiDigraph g = line_digraph(build_h(OtisParams(1, 96, 2)));
  REQUIRE(g.vertex_count() == 96);
  const CanonicalLabeling lab = canonical_labeling(g);
  CHECK(lab.leaves_visited < 200);
  CHECK(canonical_form(relabel(g, oracle::random_permutation(96, rng))) == lab.form);

  const MultiDigraph k = build_kd_plus(96);
  const CanonicalLabeling klab = canonical_labeling(k);
  CHECK(klab.leaves_visited <= 96);
  CHECK(canonical_form(relabel(k, oracle::random_permutation(96, rng))) == klab.form);
}
