#include "otis/multidigraph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace otis {

void check_size_bound(std::size_t vertices, std::size_t bound, const std::string& what) {
  if (vertices > bound) {
    std::ostringstream msg;
    msg << what << " would have " << vertices << " vertices, above the size bound " << bound;
    throw SizeBoundExceeded(msg.str());
  }
}

MultiDigraph::MultiDigraph(std::size_t vertex_count)
    : out_degree_(vertex_count, 0), in_degree_(vertex_count, 0) {}

void MultiDigraph::check_vertex(Vertex v) const {
  if (v >= vertex_count()) {
    std::ostringstream msg;
    msg << "vertex " << v << " out of range for graph with " << vertex_count() << " vertices";
    throw std::out_of_range(msg.str());
  }
}

MultiDigraph& MultiDigraph::add_arc(Vertex tail, Vertex head, Multiplicity count) {
  check_vertex(tail);
  check_vertex(head);
  if (count == 0) throw std::invalid_argument("arc multiplicity must be positive");
  arcs_[{tail, head}] += count;
  out_degree_[tail] += count;
  in_degree_[head] += count;
  total_arcs_ += count;
  return *this;
}

Multiplicity MultiDigraph::multiplicity(Vertex tail, Vertex head) const {
  check_vertex(tail);
  check_vertex(head);
  auto it = arcs_.find({tail, head});
  return it == arcs_.end() ? 0 : it->second;
}

Multiplicity MultiDigraph::out_degree(Vertex v) const {
  check_vertex(v);
  return out_degree_[v];
}

Multiplicity MultiDigraph::in_degree(Vertex v) const {
  check_vertex(v);
  return in_degree_[v];
}

std::vector<Arc> MultiDigraph::arcs() const {
  std::vector<Arc> out;
  out.reserve(arcs_.size());
  for (const auto& [key, m] : arcs_) out.push_back({key.first, key.second, m});
  return out;
}

std::vector<Arc> MultiDigraph::out_arcs(Vertex v) const {
  check_vertex(v);
  std::vector<Arc> out;
  for (auto it = arcs_.lower_bound({v, 0}); it != arcs_.end() && it->first.first == v; ++it) {
    out.push_back({v, it->first.second, it->second});
  }
  return out;
}

Multiplicity MultiDigraph::recount_arcs() const {
  return std::accumulate(arcs_.begin(), arcs_.end(), Multiplicity{0},
                         [](Multiplicity acc, const auto& kv) { return acc + kv.second; });
}

bool is_d_regular(const MultiDigraph& g, Multiplicity d) {
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.out_degree(v) != d || g.in_degree(v) != d) return false;
  }
  return true;
}

bool has_sink_or_source(const MultiDigraph& g) {
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.out_degree(v) == 0 || g.in_degree(v) == 0) return true;
  }
  return false;
}

MultiDigraph dual(const MultiDigraph& g) {
  MultiDigraph out(g.vertex_count());
  for (const Arc& a : g.arcs()) out.add_arc(a.head, a.tail, a.multiplicity);
  return out;
}

MultiDigraph relabel(const MultiDigraph& g, std::span<const Vertex> perm) {
  const std::size_t n = g.vertex_count();
  if (perm.size() != n) throw std::invalid_argument("relabeling has wrong length");
  std::vector<bool> seen(n, false);
  for (Vertex v : perm) {
    if (v >= n || seen[v]) throw std::invalid_argument("relabeling is not a permutation");
    seen[v] = true;
  }
  MultiDigraph out(n);
  for (const Arc& a : g.arcs()) out.add_arc(perm[a.tail], perm[a.head], a.multiplicity);
  return out;
}

MultiDigraph directed_cycle(std::size_t n) {
  MultiDigraph g(n);
  for (std::size_t v = 0; v < n; ++v) {
    g.add_arc(static_cast<Vertex>(v), static_cast<Vertex>((v + 1) % n));
  }
  return g;
}

WalkCountMatrix::WalkCountMatrix(std::size_t vertex_count, std::size_t order)
    : n_(vertex_count), order_(order), counts_(vertex_count * vertex_count, WalkCount::kNone) {}

namespace {

WalkCount saturate(unsigned value) {
  return value == 0 ? WalkCount::kNone : value == 1 ? WalkCount::kOne : WalkCount::kMany;
}

}  // namespace

WalkCountMatrix walk_counts(const MultiDigraph& g, std::size_t n) {
  const std::size_t size = g.vertex_count();
  WalkCountMatrix current(size, 0);
  for (Vertex v = 0; v < size; ++v) current.set(v, v, WalkCount::kOne);
  if (n == 0) return current;

  std::vector<std::vector<Arc>> out(size);
  for (Vertex v = 0; v < size; ++v) out[v] = g.out_arcs(v);

  // W_{k+1}[u][x] = sum_w W_k[u][w] * A[w][x], saturated at 2.
  std::vector<unsigned> acc(size);
  for (std::size_t step = 1; step <= n; ++step) {
    WalkCountMatrix next(size, step);
    for (Vertex u = 0; u < size; ++u) {
      std::fill(acc.begin(), acc.end(), 0u);
      const auto row = current.row(u);
      for (Vertex w = 0; w < size; ++w) {
        const auto c = static_cast<unsigned>(row[w]);
        if (c == 0) continue;
        for (const Arc& a : out[w]) {
          const auto m = static_cast<unsigned>(std::min<Multiplicity>(a.multiplicity, 2));
          acc[a.head] = std::min(2u, acc[a.head] + c * m);
        }
      }
      for (Vertex x = 0; x < size; ++x) next.set(u, x, saturate(acc[x]));
    }
    current = std::move(next);
  }
  return current;
}

}  // namespace otis
