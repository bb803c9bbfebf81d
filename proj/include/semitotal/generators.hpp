#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "semitotal/error.hpp"
#include "semitotal/graph.hpp"
#include "semitotal/intervals.hpp"
#include "semitotal/reductions.hpp"

namespace semitotal {

using Seed = std::uint64_t;

/// Seeded generator with platform-independent output.
///
/// The engine is std::mt19937_64, whose output sequence the standard fixes
/// exactly. The standard distributions are not portable, so bounded
/// integers use rejection sampling and reals take the top 53 bits.
class Rng {
 public:
  explicit Rng(Seed seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform in [0, bound).
  std::uint64_t below(std::uint64_t bound) {
    require(bound > 0, Errc::InvalidInput, "Rng::below needs a positive bound");
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do x = next();
    while (x >= limit);
    return x % bound;
  }

  /// Uniform in [0, 1).
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  bool chance(double p) { return unit() < p; }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

 private:
  std::mt19937_64 engine_;
};

namespace detail {

/// Joins components by random edges until the graph is connected.
inline void connect_components(std::size_t n, std::vector<Edge>& edges, Rng& rng) {
  Graph g(n, edges);
  auto label = component_labels(g);
  std::size_t count = 0;
  for (auto l : label) count = std::max(count, l + 1);
  std::vector<std::vector<Vertex>> members(count);
  for (Vertex v = 0; v < n; ++v) members[label[v]].push_back(v);
  for (std::size_t c = 1; c < count; ++c) {
    const auto& here = members[c];
    const auto& there = members[rng.below(c)];
    edges.push_back({here[rng.below(here.size())], there[rng.below(there.size())]});
  }
}

}  // namespace detail

/// G(n, p) followed by random bridging edges between components.
inline Graph gen_connected_graph(std::size_t n, double p, Seed seed) {
  require(n >= 1, Errc::InvalidInput, "graph generator needs n >= 1");
  require(p >= 0.0 && p <= 1.0, Errc::InvalidInput, "edge probability must lie in [0, 1]");
  Rng rng(seed);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (rng.chance(p)) edges.push_back({u, v});
  detail::connect_components(n, edges, rng);
  return Graph(n, edges);
}

/// n intervals whose 2n endpoints are distinct draws from [0, 4n), paired in
/// draw order; returned canonicalized (sorted, endpoints re-ranked).
inline IntervalModel gen_interval_model(std::size_t n, Seed seed) {
  require(n >= 1, Errc::InvalidInput, "interval generator needs n >= 1");
  Rng rng(seed);
  std::vector<std::int64_t> pool(4 * n);
  std::iota(pool.begin(), pool.end(), std::int64_t{0});
  rng.shuffle(pool);
  IntervalModel raw;
  for (std::size_t i = 0; i < n; ++i) {
    auto a = pool[2 * i], b = pool[2 * i + 1];
    if (a > b) std::swap(a, b);
    raw.intervals.push_back({static_cast<double>(a), static_cast<double>(b)});
  }
  return to_model(canonicalize_intervals(raw));
}

/// Variant with short intervals: left endpoint uniform in [0, 4n), length
/// uniform in [1, max_length]. Shared endpoints are allowed before
/// canonicalization, which exercises the tie rule.
inline IntervalModel gen_interval_model(std::size_t n, Seed seed, std::size_t max_length) {
  require(n >= 1, Errc::InvalidInput, "interval generator needs n >= 1");
  require(max_length >= 1, Errc::InvalidInput, "max_length must be positive");
  Rng rng(seed);
  IntervalModel raw;
  for (std::size_t i = 0; i < n; ++i) {
    const auto a = static_cast<double>(rng.below(4 * n));
    const auto len = static_cast<double>(1 + rng.below(max_length));
    raw.intervals.push_back({a, a + len});
  }
  return to_model(canonicalize_intervals(raw));
}

/// Clique 0..p-1, independent set p..p+q-1, random cross edges; every
/// independent vertex left isolated is tied to a random clique vertex.
inline std::pair<Graph, SplitPartition> gen_split_graph(std::size_t clique_size,
                                                        std::size_t independent_size,
                                                        double density, Seed seed) {
  require(clique_size >= 1, Errc::InvalidInput, "split generator needs a nonempty clique");
  require(density >= 0.0 && density <= 1.0, Errc::InvalidInput, "density must lie in [0, 1]");
  Rng rng(seed);
  const std::size_t n = clique_size + independent_size;
  std::vector<Edge> edges;
  for (Vertex u = 0; u < clique_size; ++u)
    for (Vertex v = u + 1; v < clique_size; ++v) edges.push_back({u, v});
  for (Vertex i = clique_size; i < n; ++i) {
    bool attached = false;
    for (Vertex k = 0; k < clique_size; ++k)
      if (rng.chance(density)) {
        edges.push_back({k, i});
        attached = true;
      }
    if (!attached) edges.push_back({rng.below(clique_size), i});
  }
  std::vector<Vertex> k(clique_size), ind(independent_size);
  std::iota(k.begin(), k.end(), Vertex{0});
  std::iota(ind.begin(), ind.end(), Vertex{clique_size});
  return {Graph(n, edges), SplitPartition{VertexSet(std::move(k)), VertexSet(std::move(ind))}};
}

enum class Family { Path, Cycle, Star, Complete, Gp4 };

inline std::optional<Family> parse_family(std::string_view s) {
  if (s == "path") return Family::Path;
  if (s == "cycle") return Family::Cycle;
  if (s == "star") return Family::Star;
  if (s == "complete") return Family::Complete;
  if (s == "gp4") return Family::Gp4;
  return std::nullopt;
}

/// Standard families on `size` vertices (star: centre 0). gp4 attaches
/// pendant paths to a random connected base of `size` vertices.
inline Graph gen_named(Family family, std::size_t size, Seed seed = 0) {
  require(size >= 1, Errc::InvalidInput, "family size must be at least 1");
  std::vector<Edge> edges;
  switch (family) {
    case Family::Path:
      for (Vertex v = 0; v + 1 < size; ++v) edges.push_back({v, v + 1});
      break;
    case Family::Cycle:
      require(size >= 3, Errc::InvalidInput, "cycle needs at least 3 vertices");
      for (Vertex v = 0; v < size; ++v) edges.push_back({v, (v + 1) % size});
      break;
    case Family::Star:
      for (Vertex v = 1; v < size; ++v) edges.push_back({0, v});
      break;
    case Family::Complete:
      for (Vertex u = 0; u < size; ++u)
        for (Vertex v = u + 1; v < size; ++v) edges.push_back({u, v});
      break;
    case Family::Gp4:
      return build_gadget(gen_connected_graph(size, 0.5, seed), GadgetKind::Gp4).h;
  }
  return Graph(size, edges);
}

/// Every connected labelled graph on n vertices (n <= 6), in order of the
/// edge-subset bitmask over lexicographically ordered vertex pairs.
inline std::vector<Graph> all_connected_graphs(std::size_t n) {
  require(n >= 1 && n <= 6, Errc::SizeCapExceeded, "connected-graph enumeration limited to n <= 6");
  std::vector<Edge> pairs;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) pairs.push_back({u, v});
  std::vector<Graph> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    std::vector<Edge> edges;
    for (std::size_t j = 0; j < pairs.size(); ++j)
      if (mask >> j & 1) edges.push_back(pairs[j]);
    Graph g(n, edges);
    if (is_connected(g)) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace semitotal
