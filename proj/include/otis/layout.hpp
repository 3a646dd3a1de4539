#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "otis/multidigraph.hpp"

namespace otis {

std::uint64_t gcd(std::uint64_t a, std::uint64_t b);

/// The permutation g_{p',q'} of [0, n) with n = p' + q' - 1:
///   g(i) = i + p'        for i in [0, q'-2]
///   g(q'-1) = p' - 1
///   g(i) = i - q'        for i in [q', n-1]
/// B(d, n) is isomorphic to H(d^p', d^q', d) exactly when g is a single cycle.
class LayoutPermutation {
 public:
  /// Builds g from the three-branch definition. Throws for p' or q' < 1.
  static LayoutPermutation build_g(std::uint64_t p_prime, std::uint64_t q_prime);

  /// Builds the same permutation from the Z_n form f(i) = i + p' on
  /// [0, q'-2], f(q'-1) = p' - 1, f(i) = i + p' - 1 (mod n) otherwise.
  static LayoutPermutation build_f(std::uint64_t p_prime, std::uint64_t q_prime);

  std::uint64_t p_prime() const { return p_prime_; }
  std::uint64_t q_prime() const { return q_prime_; }
  std::uint64_t n() const { return mapping_.size(); }
  std::uint64_t lambda() const { return lambda_; }
  const std::vector<std::uint64_t>& mapping() const { return mapping_; }
  std::uint64_t operator()(std::uint64_t i) const { return mapping_.at(i); }

 private:
  LayoutPermutation(std::uint64_t p_prime, std::uint64_t q_prime, std::vector<std::uint64_t> mapping);

  std::uint64_t p_prime_;
  std::uint64_t q_prime_;
  std::uint64_t lambda_;
  std::vector<std::uint64_t> mapping_;
};

/// Orbit partition of the permutation; each orbit ascending, orbits ordered
/// by smallest element.
std::vector<std::vector<std::uint64_t>> orbits(const LayoutPermutation& perm);

/// Exactly one orbit.
bool is_cyclic(const LayoutPermutation& perm);

/// gcd(p', n + 1) == 1, for p' in [0, n + 1] and n >= 1.
bool gcd_layout_test(std::uint64_t p_prime, std::uint64_t n);

/// Trial-division totient.
std::uint64_t euler_totient(std::uint64_t m);

/// H(p, q, d) is a line digraph exactly when d | gcd(p, q). Throws for
/// invalid OTIS parameters.
bool line_digraph_layout_test(std::uint64_t p, std::uint64_t q, std::uint64_t d);

/// True iff value == d^k for some k >= 0.
bool is_power_of(std::uint64_t value, std::uint64_t d);

/// How a candidate verdict was reached. The canonical-form comparison always
/// runs; the fast paths are cross-checked against it.
enum class Evidence {
  kGcdFastPath,           // both p, q powers of d and the target is B(d, n)
  kLineDigraphExclusion,  // target is a line digraph, H(p, q, d) is not
  kCanonicalForm,         // no fast path applied
};

std::string to_string(Evidence evidence);

struct LayoutCandidate {
  std::uint64_t p = 0;
  std::uint64_t q = 0;
  bool isomorphic = false;
  Evidence evidence = Evidence::kCanonicalForm;
};

struct LayoutReport {
  std::uint64_t d = 0;
  std::size_t vertices = 0;
  std::vector<LayoutCandidate> candidates;  // p ascending
  std::size_t layout_count = 0;
  std::optional<std::pair<std::uint64_t, std::uint64_t>> min_p_plus_q;
  /// Candidates where a fast-path prediction contradicted the canonical-form
  /// verdict. Empty unless something is broken.
  std::vector<std::string> fast_path_disagreements;

  std::vector<std::pair<std::uint64_t, std::uint64_t>> positives() const;
};

nlohmann::ordered_json to_json(const LayoutReport& report);

struct LayoutOptions {
  std::size_t size_bound = kDefaultSizeBound;
  /// Set when the target is known to be B(d, n); enables the gcd fast path.
  std::optional<std::uint64_t> debruijn_dimension;
  /// Worker threads for the candidate checks; 0 picks the hardware count.
  std::size_t threads = 0;
};

/// Every (p, q) with pq = d * |V(target)|, p ascending, each decided by
/// comparing canonical forms of H(p, q, d) and the target. Applicable fast
/// paths are evaluated too and any disagreement is recorded in the report.
/// Throws std::invalid_argument if the target is not d-regular.
LayoutReport enumerate_layouts(const MultiDigraph& target, std::uint64_t d, const LayoutOptions& options = {});

struct ConjectureReport {
  std::uint64_t d = 0;
  std::uint64_t n = 0;
  LayoutReport layouts;
  /// Positive pairs where p or q is not a power of d.
  std::vector<std::pair<std::uint64_t, std::uint64_t>> counterexamples;
  /// Copied from the layout report's fast-path disagreements.
  std::vector<std::string> cross_check_failures;

  bool holds() const { return counterexamples.empty() && cross_check_failures.empty(); }
};

nlohmann::ordered_json to_json(const ConjectureReport& report);

/// Enumerates the layouts of B(d, n) and checks that every positive (p, q)
/// consists of powers of d, cross-checking the gcd and line digraph criteria.
ConjectureReport check_conjecture(std::uint64_t d, std::uint64_t n, const LayoutOptions& options = {});

}  // namespace otis
