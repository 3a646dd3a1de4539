#pragma once

#include <cstdint>

#include "otis/multidigraph.hpp"

namespace otis {

/// A processor coordinate (i, j) with respect to a (p, q) pair, i in [0, p)
/// and j in [0, q).
struct Coord {
  std::uint64_t i = 0;
  std::uint64_t j = 0;

  friend bool operator==(const Coord&, const Coord&) = default;
};

/// Validated OTIS(p, q, d) parameters: p, q >= 1, d > 1 and d | pq.
class OtisParams {
 public:
  /// Throws std::invalid_argument naming the violated constraint.
  OtisParams(std::uint64_t p, std::uint64_t q, std::uint64_t d);

  std::uint64_t p() const { return p_; }
  std::uint64_t q() const { return q_; }
  std::uint64_t d() const { return d_; }
  std::uint64_t processors() const { return p_ * q_; }
  std::uint64_t groups() const { return p_ * q_ / d_; }

  /// Same checks as the constructor without throwing.
  static bool valid(std::uint64_t p, std::uint64_t q, std::uint64_t d);

 private:
  std::uint64_t p_;
  std::uint64_t q_;
  std::uint64_t d_;
};

/// i*q + j.
std::uint64_t encode(std::uint64_t i, std::uint64_t j, std::uint64_t p, std::uint64_t q);
/// (a div q, a mod q).
Coord decode(std::uint64_t a, std::uint64_t p, std::uint64_t q);

/// Receiver reached by the transmitter of processor `a`: (i, j)_{p,q} is
/// linked to (q-1-j, p-1-i)_{q,p}.
std::uint64_t otis_link(std::uint64_t a, std::uint64_t p, std::uint64_t q);

/// Index of the electronic group [kd, kd+d-1] containing processor `a`.
std::uint64_t group_of(std::uint64_t a, std::uint64_t d);

/// H(p, q, d): vertex k is the processor group [kd, kd+d-1]; every optical
/// link contributes one arc between the groups of its endpoints.
MultiDigraph build_h(const OtisParams& params, std::size_t size_bound = kDefaultSizeBound);

}  // namespace otis
