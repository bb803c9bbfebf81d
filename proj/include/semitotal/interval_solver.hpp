#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "semitotal/error.hpp"
#include "semitotal/graph.hpp"
#include "semitotal/intervals.hpp"

namespace semitotal {

// Minimum semitotal domination on interval graphs.
//
// On a canonical model without a universal container interval, a minimum
// solution can be chosen among intervals that are not properly contained
// in any other. Such solutions are exactly the 0 -> n+1 paths of the
// overlap digraph that never take two unmarked arcs in a row; splitting
// every digraph vertex into an in/out pair turns that constraint into a
// plain 0/1-weighted shortest path on a DAG.

enum class ArcClass { A1, A2Marked, A2Unmarked };

inline std::string_view to_string(ArcClass c) {
  switch (c) {
    case ArcClass::A1: return "A1";
    case ArcClass::A2Marked: return "A2_MARKED";
    case ArcClass::A2Unmarked: return "A2_UNMARKED";
  }
  return "?";
}

struct OverlapArc {
  std::size_t from;
  std::size_t to;
  ArcClass cls;

  friend bool operator==(const OverlapArc&, const OverlapArc&) = default;
};

/// Digraph on the non-contained intervals of the model extended by two
/// sentinels. Index 0 and index n+1 are the sentinels; index k in 1..n is
/// interval k-1 of the canonical model.
struct OverlapDigraph {
  std::vector<CanonicalInterval> intervals;  // I', size n+2
  std::vector<std::size_t> vertices;         // ascending
  std::vector<OverlapArc> arcs;              // sorted by (from, to)

  std::size_t interval_count() const noexcept { return intervals.size() - 2; }
  std::size_t sink() const noexcept { return intervals.size() - 1; }

  std::optional<ArcClass> arc_class(std::size_t from, std::size_t to) const {
    auto it = std::lower_bound(arcs.begin(), arcs.end(), std::pair{from, to},
                               [](const OverlapArc& a, const std::pair<std::size_t, std::size_t>& key) {
                                 return std::pair{a.from, a.to} < key;
                               });
    if (it != arcs.end() && it->from == from && it->to == to) return it->cls;
    return std::nullopt;
  }
};

enum class Port { Terminal, In, Out };

struct SplitNode {
  std::size_t interval;  // digraph index
  Port port;

  friend bool operator==(const SplitNode&, const SplitNode&) = default;
};

struct SplitArc {
  std::size_t from;  // node ids
  std::size_t to;
  int length;

  friend bool operator==(const SplitArc&, const SplitArc&) = default;
};

/// Node 0 is the source sentinel, the last node the sink sentinel, and each
/// non-sentinel digraph vertex i contributes (i, In) then (i, Out). Node ids
/// are therefore a topological order.
struct SplitDigraph {
  std::vector<SplitNode> nodes;
  std::vector<SplitArc> arcs;
  std::size_t interval_count = 0;  // n of the underlying model

  std::size_t source() const noexcept { return 0; }
  std::size_t sink() const noexcept { return nodes.size() - 1; }
};

struct ConstrainedPath {
  std::vector<std::size_t> nodes;  // split-digraph node ids, source to sink
  std::size_t length = 0;
  VertexSet intervals;  // digraph indices 1..n touched by the path
};

/// Index of the interval properly containing every other one, if any.
inline std::optional<std::size_t> contains_all(const CanonicalModel& m) {
  if (m.size() < 2) return std::nullopt;
  // With distinct endpoints sorted by left, only interval 0 can qualify.
  const auto& first = m.intervals.front();
  for (std::size_t i = 1; i < m.size(); ++i)
    if (!properly_contained(m.intervals[i], first)) return std::nullopt;
  return std::size_t{0};
}

inline OverlapDigraph build_overlap_digraph(const CanonicalModel& m) {
  const std::size_t n = m.size();
  require(n >= 2, Errc::InvalidInput, "overlap digraph needs at least two intervals");
  require(is_canonical(m), Errc::InvalidInput, "overlap digraph needs a canonical model");
  require(!contains_all(m).has_value(), Errc::InvalidInput,
          "model has an interval containing all others");

  OverlapDigraph d;
  auto& iv = d.intervals;
  std::int64_t lo = m.intervals.front().left;
  std::int64_t hi = lo;
  for (const auto& x : m.intervals) {
    lo = std::min(lo, x.left);
    hi = std::max(hi, x.right);
  }
  const std::int64_t b0 = lo - 2;
  const std::int64_t a_last = hi + 1;
  iv.reserve(n + 2);
  iv.push_back({b0 - 1, b0});
  iv.insert(iv.end(), m.intervals.begin(), m.intervals.end());
  iv.push_back({a_last, a_last + 1});
  const std::size_t total = n + 2;

  // Connectivity: sorted by left, a gap appears when a left endpoint passes
  // every right endpoint seen so far.
  std::int64_t reach = m.intervals.front().right;
  for (std::size_t i = 1; i < n; ++i) {
    require(m.intervals[i].left < reach, Errc::InvalidInput,
            "overlap digraph needs a connected interval model");
    reach = std::max(reach, m.intervals[i].right);
  }

  // prefix_max_right[p]: max right endpoint among I'[0..p-1].
  // suffix_min_right[p]: min right endpoint among I'[p..].
  std::vector<std::int64_t> prefix_max_right(total + 1, std::numeric_limits<std::int64_t>::min());
  std::vector<std::int64_t> suffix_min_right(total + 1, std::numeric_limits<std::int64_t>::max());
  for (std::size_t p = 0; p < total; ++p)
    prefix_max_right[p + 1] = std::max(prefix_max_right[p], iv[p].right);
  for (std::size_t p = total; p-- > 0;)
    suffix_min_right[p] = std::min(suffix_min_right[p + 1], iv[p].right);

  // Sorted by left, interval p is properly contained iff an earlier one ends later.
  for (std::size_t p = 0; p < total; ++p)
    if (prefix_max_right[p] < iv[p].right) d.vertices.push_back(p);

  auto first_left_after = [&](std::int64_t x) {
    auto it = std::upper_bound(iv.begin(), iv.end(), x,
                               [](std::int64_t v, const CanonicalInterval& c) { return v < c.left; });
    return static_cast<std::size_t>(it - iv.begin());
  };

  const std::size_t sink = total - 1;
  for (std::size_t a = 0; a < d.vertices.size(); ++a) {
    const std::size_t i = d.vertices[a];
    const auto& left_iv = iv[i];
    // Intervals starting after b_i, and the smallest right end among them.
    const std::size_t after = first_left_after(left_iv.right);
    const std::int64_t nearest_end_after = suffix_min_right[after];
    // Intervals starting before b_i, and the largest right end among them.
    const std::int64_t farthest_end_before = prefix_max_right[after];
    for (std::size_t b = a + 1; b < d.vertices.size(); ++b) {
      const std::size_t j = d.vertices[b];
      const auto& right_iv = iv[j];
      if (right_iv.left < left_iv.right) {
        if (i != 0 && j != sink) d.arcs.push_back({i, j, ArcClass::A1});
        continue;
      }
      // Some interval lies strictly between the two: no arc.
      if (nearest_end_after < right_iv.left) continue;
      const bool sentinel = i == 0 || j == sink;
      const bool marked = !sentinel && farthest_end_before > right_iv.left;
      d.arcs.push_back({i, j, marked ? ArcClass::A2Marked : ArcClass::A2Unmarked});
    }
  }
  return d;
}

inline SplitDigraph build_split_digraph(const OverlapDigraph& d) {
  SplitDigraph s;
  const std::size_t sink = d.sink();
  s.interval_count = d.interval_count();
  constexpr std::size_t none = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> in_node(d.intervals.size(), none);

  s.nodes.push_back({0, Port::Terminal});
  for (std::size_t v : d.vertices) {
    if (v == 0 || v == sink) continue;
    in_node[v] = s.nodes.size();
    s.nodes.push_back({v, Port::In});
    s.nodes.push_back({v, Port::Out});
  }
  const std::size_t sink_node = s.nodes.size();
  s.nodes.push_back({sink, Port::Terminal});

  for (std::size_t v : d.vertices)
    if (in_node[v] != none) s.arcs.push_back({in_node[v], in_node[v] + 1, 0});

  for (const OverlapArc& arc : d.arcs) {
    if (arc.from == 0 && arc.to == sink) continue;  // only possible with no intervals
    if (arc.from == 0) {
      s.arcs.push_back({0, in_node[arc.to] + 1, 0});
    } else if (arc.to == sink) {
      s.arcs.push_back({in_node[arc.from], sink_node, 1});
    } else if (arc.cls == ArcClass::A2Unmarked) {
      s.arcs.push_back({in_node[arc.from], in_node[arc.to] + 1, 1});
    } else {
      s.arcs.push_back({in_node[arc.from] + 1, in_node[arc.to], 1});
    }
  }
  std::sort(s.arcs.begin(), s.arcs.end(), [](const SplitArc& a, const SplitArc& b) {
    return a.to != b.to ? a.to < b.to : a.from < b.from;
  });
  return s;
}

/// Shortest source-to-sink path by relaxation in node-id order. Ties go to
/// the smallest predecessor node.
inline ConstrainedPath shortest_constrained_path(const SplitDigraph& s) {
  constexpr std::size_t inf = std::numeric_limits<std::size_t>::max();
  const std::size_t count = s.nodes.size();
  std::vector<std::size_t> dist(count, inf);
  std::vector<std::size_t> pred(count, inf);
  dist[s.source()] = 0;

  // Arcs are sorted by head, then tail; every tail precedes its head.
  for (const SplitArc& arc : s.arcs) {
    require(arc.from < arc.to, Errc::Internal, "split digraph arc goes backwards");
    if (dist[arc.from] == inf) continue;
    const std::size_t cand = dist[arc.from] + static_cast<std::size_t>(arc.length);
    if (cand < dist[arc.to]) {
      dist[arc.to] = cand;
      pred[arc.to] = arc.from;
    }
  }
  require(dist[s.sink()] != inf, Errc::Internal, "no source-to-sink path in split digraph");

  ConstrainedPath path;
  path.length = dist[s.sink()];
  for (std::size_t v = s.sink(); v != inf; v = pred[v]) path.nodes.push_back(v);
  std::reverse(path.nodes.begin(), path.nodes.end());

  std::vector<Vertex> touched;
  for (std::size_t v : path.nodes)
    if (s.nodes[v].port != Port::Terminal) touched.push_back(s.nodes[v].interval);
  path.intervals = VertexSet(std::move(touched));
  return path;
}

namespace detail {

inline std::vector<CanonicalModel> split_components(const CanonicalModel& m) {
  std::vector<CanonicalModel> parts;
  std::int64_t reach = std::numeric_limits<std::int64_t>::min();
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (parts.empty() || m.intervals[i].left > reach) parts.emplace_back();
    parts.back().intervals.push_back(m.intervals[i]);
    parts.back().original_id.push_back(m.original_id[i]);
    reach = std::max(reach, m.intervals[i].right);
  }
  return parts;
}

/// Solves one connected component; returns original ids.
inline VertexSet solve_component(const CanonicalModel& part) {
  require(part.size() >= 2, Errc::Infeasible,
          "interval " + std::to_string(part.original_id.front()) +
              " intersects no other interval; no semitotal dominating set exists");
  if (auto k = contains_all(part)) {
    Vertex other = kUnreachable;
    for (std::size_t i = 0; i < part.size(); ++i)
      if (i != *k) other = std::min(other, part.original_id[i]);
    return VertexSet{part.original_id[*k], other};
  }
  auto path = shortest_constrained_path(build_split_digraph(build_overlap_digraph(part)));
  std::vector<Vertex> ids;
  for (Vertex idx : path.intervals) ids.push_back(part.original_id[idx - 1]);
  return VertexSet(std::move(ids));
}

}  // namespace detail

/// Minimum semitotal dominating set of the intersection graph, in input ids.
/// Components are solved independently; a singleton component is Infeasible.
inline VertexSet solve_interval(const CanonicalModel& m) {
  require(m.size() >= 1, Errc::InvalidInput, "empty interval model");
  require(is_canonical(m), Errc::InvalidInput, "model is not canonical");
  VertexSet result;
  for (const auto& part : detail::split_components(m))
    result = result.united(detail::solve_component(part));
  return result;
}

inline VertexSet solve_interval(const IntervalModel& m) {
  require(m.size() >= 1, Errc::InvalidInput, "empty interval model");
  return solve_interval(canonicalize_intervals(m));
}

}  // namespace semitotal
