#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <initializer_list>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "semitotal/error.hpp"

namespace semitotal {

using Vertex = std::size_t;

struct Edge {
  Vertex u;
  Vertex v;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Sorted, duplicate-free list of vertex ids.
///
/// Construction normalizes its input, so any container of ids can be passed
/// in. Range checks against a host graph happen at the point of use.
class VertexSet {
 public:
  using const_iterator = std::vector<Vertex>::const_iterator;

  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> ids) : members_(ids) { normalize(); }
  explicit VertexSet(std::vector<Vertex> ids) : members_(std::move(ids)) { normalize(); }

  template <typename It>
  VertexSet(It first, It last) : members_(first, last) {
    normalize();
  }

  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  const_iterator begin() const noexcept { return members_.begin(); }
  const_iterator end() const noexcept { return members_.end(); }
  Vertex operator[](std::size_t i) const { return members_[i]; }
  const std::vector<Vertex>& ids() const noexcept { return members_; }

  bool contains(Vertex v) const { return std::binary_search(members_.begin(), members_.end(), v); }

  void insert(Vertex v) {
    auto it = std::lower_bound(members_.begin(), members_.end(), v);
    if (it == members_.end() || *it != v) members_.insert(it, v);
  }

  void erase(Vertex v) {
    auto it = std::lower_bound(members_.begin(), members_.end(), v);
    if (it != members_.end() && *it == v) members_.erase(it);
  }

  VertexSet united(const VertexSet& other) const {
    std::vector<Vertex> out;
    out.reserve(size() + other.size());
    std::set_union(begin(), end(), other.begin(), other.end(), std::back_inserter(out));
    VertexSet s;
    s.members_ = std::move(out);
    return s;
  }

  VertexSet intersected(const VertexSet& other) const {
    std::vector<Vertex> out;
    std::set_intersection(begin(), end(), other.begin(), other.end(), std::back_inserter(out));
    VertexSet s;
    s.members_ = std::move(out);
    return s;
  }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  friend auto operator<=>(const VertexSet& a, const VertexSet& b) {
    return a.members_ <=> b.members_;
  }

 private:
  void normalize() {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  }

  std::vector<Vertex> members_;
};

/// Undirected simple graph on vertices 0..n-1, immutable once built.
class Graph {
 public:
  Graph() = default;

  explicit Graph(std::size_t n) : adjacency_(n) {}

  /// Edges may be given in either orientation; self-loops, duplicates and
  /// out-of-range endpoints are rejected.
  Graph(std::size_t n, std::span<const Edge> edges) : adjacency_(n) {
    edges_.reserve(edges.size());
    for (const Edge& e : edges) {
      require(e.u < n && e.v < n, Errc::InvalidInput,
              "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") out of range for n=" +
                  std::to_string(n));
      require(e.u != e.v, Errc::InvalidInput, "self-loop at vertex " + std::to_string(e.u));
      edges_.push_back(e.u < e.v ? e : Edge{e.v, e.u});
    }
    std::sort(edges_.begin(), edges_.end());
    auto dup = std::adjacent_find(edges_.begin(), edges_.end());
    require(dup == edges_.end(), Errc::InvalidInput,
            dup == edges_.end() ? std::string{}
                                : "duplicate edge (" + std::to_string(dup->u) + "," +
                                      std::to_string(dup->v) + ")");
    for (const Edge& e : edges_) {
      adjacency_[e.u].push_back(e.v);
      adjacency_[e.v].push_back(e.u);
    }
    for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
  }

  Graph(std::size_t n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  Graph(std::size_t n, const std::vector<Edge>& edges) : Graph(n, std::span<const Edge>(edges)) {}

  std::size_t order() const noexcept { return adjacency_.size(); }
  std::size_t size() const noexcept { return edges_.size(); }

  std::span<const Vertex> neighbors(Vertex v) const {
    check_vertex(v);
    return adjacency_[v];
  }

  std::size_t degree(Vertex v) const { return neighbors(v).size(); }

  std::size_t max_degree() const noexcept {
    std::size_t best = 0;
    for (const auto& nbrs : adjacency_) best = std::max(best, nbrs.size());
    return best;
  }

  bool adjacent(Vertex u, Vertex v) const {
    auto nbrs = neighbors(u);
    check_vertex(v);
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
  }

  /// Edges with u < v in lexicographic order.
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  void check_vertex(Vertex v) const {
    require(v < order(), Errc::InvalidInput,
            "vertex " + std::to_string(v) + " out of range for n=" + std::to_string(order()));
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.order() == b.order() && a.edges_ == b.edges_;
  }

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<Edge> edges_;
};

inline constexpr std::size_t kUnreachable = std::numeric_limits<std::size_t>::max();

/// BFS distances from `source`, stopping once `limit` is exceeded. Vertices
/// beyond the limit (or in another component) get kUnreachable.
inline std::vector<std::size_t> bfs_distances(const Graph& g, Vertex source,
                                              std::size_t limit = kUnreachable) {
  g.check_vertex(source);
  std::vector<std::size_t> dist(g.order(), kUnreachable);
  std::deque<Vertex> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    if (dist[v] == limit) continue;
    for (Vertex w : g.neighbors(v)) {
      if (dist[w] != kUnreachable) continue;
      dist[w] = dist[v] + 1;
      queue.push_back(w);
    }
  }
  return dist;
}

/// Shortest-path length, or kUnreachable across components.
inline std::size_t bfs_distance(const Graph& g, Vertex u, Vertex v) {
  g.check_vertex(v);
  return bfs_distances(g, u)[v];
}

/// The closed r-ball around v.
inline VertexSet neighborhood_within(const Graph& g, Vertex v, std::size_t r) {
  auto dist = bfs_distances(g, v, r);
  std::vector<Vertex> ball;
  for (Vertex u = 0; u < g.order(); ++u)
    if (dist[u] <= r) ball.push_back(u);
  return VertexSet(std::move(ball));
}

/// Component label per vertex, labels numbered by smallest member.
inline std::vector<std::size_t> component_labels(const Graph& g) {
  std::vector<std::size_t> label(g.order(), kUnreachable);
  std::size_t next = 0;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (label[s] != kUnreachable) continue;
    std::vector<Vertex> stack{s};
    label[s] = next;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(v)) {
        if (label[w] == kUnreachable) {
          label[w] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  return label;
}

inline bool is_connected(const Graph& g) {
  if (g.order() <= 1) return true;
  auto label = component_labels(g);
  return std::all_of(label.begin(), label.end(), [](std::size_t c) { return c == 0; });
}

inline bool has_isolated_vertex(const Graph& g) {
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) == 0) return true;
  return false;
}

/// Two-colouring check.
inline bool is_bipartite(const Graph& g) {
  std::vector<int> side(g.order(), -1);
  for (Vertex s = 0; s < g.order(); ++s) {
    if (side[s] != -1) continue;
    side[s] = 0;
    std::vector<Vertex> stack{s};
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(v)) {
        if (side[w] == -1) {
          side[w] = 1 - side[v];
          stack.push_back(w);
        } else if (side[w] == side[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

struct SplitPartition {
  VertexSet clique;
  VertexSet independent;
};

/// Checks that the partition covers V disjointly, the clique side is
/// complete and the independent side has no internal edge.
inline bool is_split_partition(const Graph& g, const SplitPartition& p) {
  if (p.clique.size() + p.independent.size() != g.order()) return false;
  if (!p.clique.intersected(p.independent).empty()) return false;
  for (Vertex v : p.clique.united(p.independent))
    if (v >= g.order()) return false;
  for (std::size_t i = 0; i < p.clique.size(); ++i)
    for (std::size_t j = i + 1; j < p.clique.size(); ++j)
      if (!g.adjacent(p.clique[i], p.clique[j])) return false;
  for (const Edge& e : g.edges())
    if (p.independent.contains(e.u) && p.independent.contains(e.v)) return false;
  return true;
}

}  // namespace semitotal
