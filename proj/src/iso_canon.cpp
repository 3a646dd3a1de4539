#include "otis/iso_canon.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>

namespace otis {

namespace {

struct Neighbor {
  Vertex vertex;
  Multiplicity multiplicity;
};

// Adjacency lists in both directions, built once per graph.
struct Adjacency {
  std::vector<std::vector<Neighbor>> out;
  std::vector<std::vector<Neighbor>> in;
  std::vector<Arc> arcs;

  explicit Adjacency(const MultiDigraph& g)
      : out(g.vertex_count()), in(g.vertex_count()), arcs(g.arcs()) {
    for (const Arc& a : arcs) {
      out[a.tail].push_back({a.head, a.multiplicity});
      in[a.head].push_back({a.tail, a.multiplicity});
    }
  }

  std::size_t size() const { return out.size(); }
};

// Ordered partition of the vertices. Cells occupy contiguous ranges of
// `order` and are named by their start position, so a cell's name only
// depends on the sizes of the cells before it.
struct Partition {
  std::vector<Vertex> order;
  std::vector<std::uint32_t> pos;     // position of each vertex in order
  std::vector<std::uint32_t> cell;    // start of the cell holding each vertex
  std::vector<std::uint32_t> end;     // one past the cell, indexed by cell start
  std::size_t cells = 0;

  // Cells ordered by color, vertices inside a cell by index.
  explicit Partition(const Coloring& colors)
      : order(colors.size()), pos(colors.size()), cell(colors.size()), end(colors.size()) {
    std::iota(order.begin(), order.end(), Vertex{0});
    std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return colors[a] < colors[b]; });
    for (std::uint32_t k = 0; k < order.size(); ++k) {
      pos[order[k]] = k;
      if (k == 0 || colors[order[k]] != colors[order[k - 1]]) {
        ++cells;
        cell[order[k]] = k;
      } else {
        cell[order[k]] = cell[order[k - 1]];
      }
      end[cell[order[k]]] = k + 1;
    }
  }

  std::size_t size() const { return order.size(); }
  bool discrete() const { return cells == order.size(); }
  std::vector<std::uint32_t> starts() const {
    std::vector<std::uint32_t> out;
    for (std::uint32_t k = 0; k < order.size(); k = end[k]) out.push_back(k);
    return out;
  }

  // Dense rank of each vertex's cell.
  Coloring ranks() const {
    Coloring out(order.size());
    std::uint32_t rank = 0;
    for (std::uint32_t k = 0; k < order.size(); k = end[k], ++rank) {
      for (std::uint32_t i = k; i < end[k]; ++i) out[order[i]] = rank;
    }
    return out;
  }

  // Splits v off the front of its cell; returns the new singleton's start.
  std::uint32_t individualize(Vertex v) {
    const std::uint32_t s = cell[v];
    const std::uint32_t e = end[s];
    const Vertex front = order[s];
    std::swap(order[s], order[pos[v]]);
    pos[front] = pos[v];
    pos[v] = s;
    end[s] = s + 1;
    end[s + 1] = e;
    for (std::uint32_t i = s + 1; i < e; ++i) cell[order[i]] = s + 1;
    ++cells;
    return s;
  }
};

// Splits cells until every vertex in a cell sees the same multiset of arc
// multiplicities to and from every cell. `queue` holds the cells whose
// influence has not been propagated yet. Everything that decides the order of
// new cells is invariant under relabeling, so the result is too.
class Refiner {
 public:
  explicit Refiner(std::size_t n) : to_(n), from_(n), touched_flag_(n, 0), queued_(n, 0), cell_flag_(n, 0) {}

  void refine(const Adjacency& adj, Partition& p, std::vector<std::uint32_t> queue) {
    for (std::uint32_t s : queue) queued_[s] = 1;
    for (std::size_t head = 0; head < queue.size() && !p.discrete(); ++head) {
      const std::uint32_t s = queue[head];
      queued_[s] = 0;
      collect(adj, p, s);
      for (std::uint32_t c : affected_) split(p, c, queue);
      reset();
    }
    for (std::uint32_t s : queue) queued_[s] = 0;
  }

 private:
  void touch(Vertex v, const Partition& p) {
    if (!touched_flag_[v]) {
      touched_flag_[v] = 1;
      touched_.push_back(v);
    }
    const std::uint32_t c = p.cell[v];
    if (!cell_flag_[c]) {
      cell_flag_[c] = 1;
      affected_.push_back(c);
    }
  }

  void collect(const Adjacency& adj, const Partition& p, std::uint32_t s) {
    for (std::uint32_t k = s; k < p.end[s]; ++k) {
      const Vertex w = p.order[k];
      for (const Neighbor& nb : adj.out[w]) {
        touch(nb.vertex, p);
        from_[nb.vertex].push_back(nb.multiplicity);
      }
      for (const Neighbor& nb : adj.in[w]) {
        touch(nb.vertex, p);
        to_[nb.vertex].push_back(nb.multiplicity);
      }
    }
    for (Vertex v : touched_) {
      std::sort(to_[v].begin(), to_[v].end());
      std::sort(from_[v].begin(), from_[v].end());
    }
    std::sort(affected_.begin(), affected_.end());
  }

  void split(Partition& p, std::uint32_t s, std::vector<std::uint32_t>& queue) {
    const std::uint32_t e = p.end[s];
    if (e - s == 1) return;
    const auto less = [&](Vertex a, Vertex b) {
      if (to_[a] != to_[b]) return to_[a] < to_[b];
      return from_[a] < from_[b];
    };
    const auto first = p.order.begin() + s;
    const auto last = p.order.begin() + e;
    std::sort(first, last, less);
    if (!less(*first, *(last - 1))) {  // one run: nothing to split
      for (std::uint32_t k = s; k < e; ++k) p.pos[p.order[k]] = k;
      return;
    }
    std::uint32_t run = s;
    for (std::uint32_t k = s; k < e; ++k) {
      const Vertex v = p.order[k];
      if (k > s && less(p.order[k - 1], v)) {
        p.end[run] = k;
        run = k;
        ++p.cells;
        if (!queued_[run]) {
          queued_[run] = 1;
          queue.push_back(run);
        }
      }
      p.pos[v] = k;
      p.cell[v] = run;
    }
    p.end[run] = e;
    if (!queued_[s]) {
      queued_[s] = 1;
      queue.push_back(s);
    }
  }

  void reset() {
    for (Vertex v : touched_) {
      touched_flag_[v] = 0;
      to_[v].clear();
      from_[v].clear();
    }
    for (std::uint32_t c : affected_) cell_flag_[c] = 0;
    touched_.clear();
    affected_.clear();
  }

  std::vector<std::vector<Multiplicity>> to_;    // multiplicities of arcs into the splitter
  std::vector<std::vector<Multiplicity>> from_;  // multiplicities of arcs out of the splitter
  std::vector<char> touched_flag_;
  std::vector<char> queued_;
  std::vector<char> cell_flag_;
  std::vector<Vertex> touched_;
  std::vector<std::uint32_t> affected_;
};

std::vector<Arc> certificate(const Adjacency& adj, const Coloring& discrete) {
  std::vector<Arc> arcs;
  arcs.reserve(adj.arcs.size());
  for (const Arc& a : adj.arcs) arcs.push_back({discrete[a.tail], discrete[a.head], a.multiplicity});
  std::sort(arcs.begin(), arcs.end());
  return arcs;
}

struct Leaf {
  std::vector<Vertex> path;
  Coloring labeling;
  std::vector<Vertex> vertex_at;  // inverse of labeling
  std::vector<Arc> cert;
};

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), Vertex{0}); }
  Vertex find(Vertex v) {
    while (parent_[v] != v) v = parent_[v] = parent_[parent_[v]];
    return v;
  }
  void unite(Vertex a, Vertex b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<Vertex> parent_;
};

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const MultiDigraph& g) : adj_(g), refiner_(g.vertex_count()) {}

  CanonicalLabeling run() {
    Partition root(Coloring(adj_.size(), 0));
    refiner_.refine(adj_, root, root.starts());
    std::vector<Vertex> path;
    search(root, path);

    CanonicalLabeling result;
    result.form.vertex_count = adj_.size();
    const Leaf& best = leaves_by_cert_.begin()->second;
    result.form.canonical_arcs = best.cert;
    result.labeling.assign(best.labeling.begin(), best.labeling.end());
    result.leaves_visited = leaves_;
    result.automorphisms_found = automorphisms_.size();
    return result;
  }

 private:
  // Returns the depth the search should unwind to; a value >= the current
  // depth means "carry on".
  std::size_t search(const Partition& part, std::vector<Vertex>& path) {
    const std::size_t depth = path.size();
    if (part.discrete()) return visit_leaf(part.pos, path);

    // Target cell: smallest non-singleton, leftmost on ties.
    std::uint32_t target = 0;
    std::uint32_t target_size = 0;
    for (std::uint32_t k = 0; k < part.size(); k = part.end[k]) {
      const std::uint32_t size = part.end[k] - k;
      if (size > 1 && (target_size == 0 || size < target_size)) {
        target = k;
        target_size = size;
      }
    }

    std::vector<Vertex> explored;
    NodeOrbits node_orbits;
    for (Vertex w = 0; w < adj_.size(); ++w) {
      if (part.cell[w] != target) continue;
      if (equivalent_to_explored(w, explored, path, node_orbits)) continue;
      explored.push_back(w);
      Partition child = part;
      refiner_.refine(adj_, child, {child.individualize(w)});
      path.push_back(w);
      const std::size_t unwind = search(child, path);
      path.pop_back();
      if (unwind < depth) return unwind;
    }
    return depth;
  }

  // Orbits of the automorphisms found so far that fix the node's path
  // pointwise; rebuilt only when new automorphisms have been recorded.
  struct NodeOrbits {
    std::optional<DisjointSets> sets;
    std::size_t seen = 0;
  };

  bool equivalent_to_explored(Vertex w, const std::vector<Vertex>& explored, const std::vector<Vertex>& path,
                              NodeOrbits& node) {
    if (explored.empty() || automorphisms_.empty()) return false;
    if (!node.sets) node.sets.emplace(adj_.size());
    for (; node.seen < automorphisms_.size(); ++node.seen) {
      const auto& gamma = automorphisms_[node.seen];
      const bool fixes_path = std::all_of(path.begin(), path.end(), [&](Vertex v) { return gamma[v] == v; });
      if (!fixes_path) continue;
      for (Vertex v = 0; v < gamma.size(); ++v) node.sets->unite(v, gamma[v]);
    }
    const Vertex root = node.sets->find(w);
    return std::any_of(explored.begin(), explored.end(), [&](Vertex e) { return node.sets->find(e) == root; });
  }

  std::size_t visit_leaf(const Coloring& colors, const std::vector<Vertex>& path) {
    ++leaves_;
    Leaf leaf;
    leaf.path = path;
    leaf.labeling = colors;
    leaf.vertex_at.resize(colors.size());
    for (Vertex v = 0; v < colors.size(); ++v) leaf.vertex_at[colors[v]] = v;
    leaf.cert = certificate(adj_, colors);

    const auto match = leaves_by_cert_.find(leaf.cert);
    if (match != leaves_by_cert_.end()) return record_automorphism(leaf, match->second);
    // The smallest certificate is always kept; others only while there is room.
    if (leaves_by_cert_.size() < kStoredLeaves || leaf.cert < leaves_by_cert_.begin()->first) {
      std::vector<Arc> key = leaf.cert;
      leaves_by_cert_.emplace(std::move(key), std::move(leaf));
    }
    return path.size();
  }

  // Equal certificates mean the map sending each vertex to the vertex holding
  // the same position in `reference` is an automorphism. It carries the
  // current branch onto the reference branch at their first divergence, whose
  // subtree is already explored, so the search unwinds to that depth.
  std::size_t record_automorphism(const Leaf& leaf, const Leaf& reference) {
    std::vector<Vertex> gamma(adj_.size());
    for (Vertex v = 0; v < gamma.size(); ++v) gamma[v] = reference.vertex_at[leaf.labeling[v]];
    automorphisms_.push_back(std::move(gamma));
    std::size_t common = 0;
    while (common < leaf.path.size() && common < reference.path.size() &&
           leaf.path[common] == reference.path[common]) {
      ++common;
    }
    return common;
  }

  Adjacency adj_;
  Refiner refiner_;
  // Earlier leaves by certificate. Any earlier leaf with an equal certificate
  // yields an automorphism, and begin() is the best leaf so far.
  static constexpr std::size_t kStoredLeaves = 256;
  std::map<std::vector<Arc>, Leaf> leaves_by_cert_;
  std::vector<std::vector<Vertex>> automorphisms_;
  std::size_t leaves_ = 0;
};

}  // namespace

Coloring refine_colors(const MultiDigraph& g, const Coloring& initial) {
  if (initial.size() != g.vertex_count()) throw std::invalid_argument("coloring has wrong length");
  const Adjacency adj(g);
  Partition part(initial);
  Refiner(g.vertex_count()).refine(adj, part, part.starts());
  return part.ranks();
}

CanonicalLabeling canonical_labeling(const MultiDigraph& g, std::size_t size_bound) {
  check_size_bound(g.vertex_count(), size_bound, "canonical labeling input");
  return CanonicalSearch(g).run();
}

CanonicalForm canonical_form(const MultiDigraph& g, std::size_t size_bound) {
  return canonical_labeling(g, size_bound).form;
}

bool isomorphic(const MultiDigraph& a, const MultiDigraph& b, std::size_t size_bound) {
  check_size_bound(a.vertex_count(), size_bound, "isomorphism input");
  check_size_bound(b.vertex_count(), size_bound, "isomorphism input");
  if (a.vertex_count() != b.vertex_count() || a.total_arcs() != b.total_arcs() ||
      a.distinct_arcs() != b.distinct_arcs()) {
    return false;
  }
  return canonical_form(a, size_bound) == canonical_form(b, size_bound);
}

}  // namespace otis
