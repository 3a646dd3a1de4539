#include "otis/otis_builder.hpp"

#include <limits>
#include <sstream>
#include <stdexcept>

namespace otis {

namespace {

bool product_overflows(std::uint64_t a, std::uint64_t b) {
  return a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a;
}

}  // namespace

bool OtisParams::valid(std::uint64_t p, std::uint64_t q, std::uint64_t d) {
  return p >= 1 && q >= 1 && d > 1 && !product_overflows(p, q) && (p * q) % d == 0;
}

OtisParams::OtisParams(std::uint64_t p, std::uint64_t q, std::uint64_t d) : p_(p), q_(q), d_(d) {
  if (p == 0 || q == 0) throw std::invalid_argument("p and q must be positive");
  if (d <= 1) throw std::invalid_argument("d must be greater than 1");
  if (product_overflows(p, q)) throw std::invalid_argument("pq overflows");
  if ((p * q) % d != 0) throw std::invalid_argument("d does not divide pq");
}

std::uint64_t encode(std::uint64_t i, std::uint64_t j, std::uint64_t p, std::uint64_t q) {
  if (i >= p || j >= q) {
    std::ostringstream msg;
    msg << "coordinate (" << i << "," << j << ") out of range for (" << p << "," << q << ")";
    throw std::out_of_range(msg.str());
  }
  return i * q + j;
}

Coord decode(std::uint64_t a, std::uint64_t p, std::uint64_t q) {
  if (q == 0 || a >= p * q) {
    std::ostringstream msg;
    msg << "processor " << a << " out of range for (" << p << "," << q << ")";
    throw std::out_of_range(msg.str());
  }
  return {a / q, a % q};
}

std::uint64_t otis_link(std::uint64_t a, std::uint64_t p, std::uint64_t q) {
  const Coord c = decode(a, p, q);
  return encode(q - 1 - c.j, p - 1 - c.i, q, p);
}

std::uint64_t group_of(std::uint64_t a, std::uint64_t d) {
  if (d == 0) throw std::invalid_argument("group size must be positive");
  return a / d;
}

MultiDigraph build_h(const OtisParams& params, std::size_t size_bound) {
  const std::uint64_t p = params.p();
  const std::uint64_t q = params.q();
  const std::uint64_t d = params.d();
  check_size_bound(params.groups(), size_bound, "H(p,q,d)");
  // One arc per processor; keep the arc count within the dense-matrix budget too.
  if (size_bound != 0 && params.processors() / size_bound > size_bound) {
    throw SizeBoundExceeded("H(p,q,d) would have more than size_bound^2 arcs");
  }
  MultiDigraph g(params.groups());
  for (std::uint64_t a = 0; a < p * q; ++a) {
    g.add_arc(static_cast<Vertex>(group_of(a, d)), static_cast<Vertex>(group_of(otis_link(a, p, q), d)));
  }
  return g;
}

}  // namespace otis
