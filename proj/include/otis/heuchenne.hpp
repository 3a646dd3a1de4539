#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "otis/multidigraph.hpp"

namespace otis {

/// A pair (from, to) joined by at least two n-walks.
struct MultipleWalkWitness {
  Vertex from = 0;
  Vertex to = 0;

  friend bool operator==(const MultipleWalkWitness&, const MultipleWalkWitness&) = default;
};

/// n-walks u->w, v->w and v->x exist but u->x does not.
struct HeuchenneWitness {
  Vertex u = 0;
  Vertex v = 0;
  Vertex w = 0;
  Vertex x = 0;

  friend bool operator==(const HeuchenneWitness&, const HeuchenneWitness&) = default;
};

/// Lexicographically smallest pair with >= 2 n-walks, if any.
std::optional<MultipleWalkWitness> find_multiple_n_walks(const MultiDigraph& g, std::size_t n);
bool has_multiple_n_walks(const MultiDigraph& g, std::size_t n);

/// Lexicographically smallest (u, v, w, x) violating the nth Heuchenne
/// condition, if any. The 0th condition always holds (0-walks are the identity).
std::optional<HeuchenneWitness> find_heuchenne_violation(const MultiDigraph& g, std::size_t n);
bool heuchenne_condition(const MultiDigraph& g, std::size_t n);

/// Vertices grouped by identical n-out-neighborhoods, each class ascending,
/// classes ordered by their smallest vertex.
std::vector<std::vector<Vertex>> out_neighborhood_classes(const MultiDigraph& g, std::size_t n);

/// Which requirement of the iterated line digraph characterization failed.
enum class LineFailure {
  kMultipleWalks,    // two or more n-walks between some pair
  kHeuchennePrevious,  // the (n-1)th Heuchenne condition
  kHeuchenneCurrent,   // the nth Heuchenne condition
};

std::string to_string(LineFailure failure);

struct LineRecognitionVerdict {
  bool is_nth_line = false;
  std::size_t n = 0;
  std::optional<LineFailure> failure;
  std::optional<MultipleWalkWitness> walk_witness;
  std::optional<HeuchenneWitness> heuchenne_witness;

  std::string describe() const;
};

/// Thrown when the graph has a sink or a source: the characterization only
/// applies to digraphs without them.
class HypothesisViolation : public std::domain_error {
 public:
  HypothesisViolation(const std::string& what_arg) : std::domain_error(what_arg) {}
};

/// g (with no sinks or sources) is an nth iterated line digraph iff there are
/// no multiple n-walks and the (n-1)th and nth Heuchenne conditions hold.
LineRecognitionVerdict is_nth_line_digraph(const MultiDigraph& g, std::size_t n);

}  // namespace otis
