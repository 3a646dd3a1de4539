#include "otis/heuchenne.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <sstream>

namespace otis {

namespace {

using Row = std::vector<std::uint64_t>;

// n-out-neighborhoods as bitsets, from the thresholded walk matrix.
std::vector<Row> neighborhoods(const MultiDigraph& g, std::size_t n) {
  const std::size_t size = g.vertex_count();
  const std::size_t words = (size + 63) / 64;
  const WalkCountMatrix walks = walk_counts(g, n);
  std::vector<Row> rows(size, Row(words, 0));
  for (Vertex u = 0; u < size; ++u) {
    for (Vertex x = 0; x < size; ++x) {
      if (walks.reachable(u, x)) rows[u][x / 64] |= std::uint64_t{1} << (x % 64);
    }
  }
  return rows;
}

std::size_t popcount(const Row& row) {
  std::size_t total = 0;
  for (std::uint64_t word : row) total += static_cast<std::size_t>(std::popcount(word));
  return total;
}

// Smallest set bit of (a & b) or (a & ~b), or nullopt.
template <class Combine>
std::optional<Vertex> first_bit(const Row& a, const Row& b, Combine combine) {
  for (std::size_t k = 0; k < a.size(); ++k) {
    const std::uint64_t word = combine(a[k], b[k]);
    if (word != 0) return static_cast<Vertex>(k * 64 + static_cast<std::size_t>(std::countr_zero(word)));
  }
  return std::nullopt;
}

}  // namespace

std::optional<MultipleWalkWitness> find_multiple_n_walks(const MultiDigraph& g, std::size_t n) {
  const WalkCountMatrix walks = walk_counts(g, n);
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      if (walks.at(u, v) == WalkCount::kMany) return MultipleWalkWitness{u, v};
    }
  }
  return std::nullopt;
}

bool has_multiple_n_walks(const MultiDigraph& g, std::size_t n) {
  return find_multiple_n_walks(g, n).has_value();
}

std::optional<HeuchenneWitness> find_heuchenne_violation(const MultiDigraph& g, std::size_t n) {
  if (n == 0) return std::nullopt;
  const std::vector<Row> rows = neighborhoods(g, n);

  // Distinct neighborhoods are pairwise disjoint exactly when their sizes add
  // up to the size of their union.
  const std::set<Row> distinct(rows.begin(), rows.end());
  Row all(rows.empty() ? 0 : rows.front().size(), 0);
  std::size_t summed = 0;
  for (const Row& row : distinct) {
    summed += popcount(row);
    for (std::size_t k = 0; k < row.size(); ++k) all[k] |= row[k];
  }
  if (summed == popcount(all)) return std::nullopt;

  // For fixed (u, v) any w in N(u) & N(v) pairs with any x in N(v) \ N(u), so
  // the smallest of each gives the lexicographically smallest tuple.
  const auto both = [](std::uint64_t a, std::uint64_t b) { return a & b; };
  const auto only_first = [](std::uint64_t a, std::uint64_t b) { return a & ~b; };
  for (Vertex u = 0; u < rows.size(); ++u) {
    for (Vertex v = 0; v < rows.size(); ++v) {
      const auto w = first_bit(rows[u], rows[v], both);
      if (!w) continue;
      const auto x = first_bit(rows[v], rows[u], only_first);
      if (x) return HeuchenneWitness{u, v, *w, *x};
    }
  }
  return std::nullopt;  // unreachable: the size check above found a violation
}

bool heuchenne_condition(const MultiDigraph& g, std::size_t n) {
  return !find_heuchenne_violation(g, n).has_value();
}

std::vector<std::vector<Vertex>> out_neighborhood_classes(const MultiDigraph& g, std::size_t n) {
  const std::vector<Row> rows = neighborhoods(g, n);
  std::map<Row, std::size_t> index;
  std::vector<std::vector<Vertex>> classes;
  for (Vertex v = 0; v < rows.size(); ++v) {
    auto [it, inserted] = index.emplace(rows[v], classes.size());
    if (inserted) classes.emplace_back();
    classes[it->second].push_back(v);
  }
  return classes;
}

std::string to_string(LineFailure failure) {
  switch (failure) {
    case LineFailure::kMultipleWalks:
      return "multiple-walks";
    case LineFailure::kHeuchennePrevious:
      return "heuchenne-previous";
    case LineFailure::kHeuchenneCurrent:
      return "heuchenne-current";
  }
  return "unknown";
}

std::string LineRecognitionVerdict::describe() const {
  std::ostringstream out;
  if (is_nth_line) {
    out << "line digraph of order " << n << ": yes";
    return out.str();
  }
  out << "line digraph of order " << n << ": no (";
  if (failure) out << to_string(*failure);
  if (walk_witness) {
    out << ": at least 2 walks " << walk_witness->from << " -> " << walk_witness->to;
  }
  if (heuchenne_witness) {
    const auto& h = *heuchenne_witness;
    out << ": u=" << h.u << " v=" << h.v << " w=" << h.w << " x=" << h.x;
  }
  out << ")";
  return out.str();
}

LineRecognitionVerdict is_nth_line_digraph(const MultiDigraph& g, std::size_t n) {
  if (n == 0) throw std::invalid_argument("line digraph order must be positive");
  if (has_sink_or_source(g)) {
    throw HypothesisViolation("graph has a sink or a source; line digraph recognition does not apply");
  }
  LineRecognitionVerdict verdict;
  verdict.n = n;
  if (auto w = find_multiple_n_walks(g, n)) {
    verdict.failure = LineFailure::kMultipleWalks;
    verdict.walk_witness = w;
    return verdict;
  }
  if (auto w = find_heuchenne_violation(g, n - 1)) {
    verdict.failure = LineFailure::kHeuchennePrevious;
    verdict.heuchenne_witness = w;
    return verdict;
  }
  if (auto w = find_heuchenne_violation(g, n)) {
    verdict.failure = LineFailure::kHeuchenneCurrent;
    verdict.heuchenne_witness = w;
    return verdict;
  }
  verdict.is_nth_line = true;
  return verdict;
}

}  // namespace otis
