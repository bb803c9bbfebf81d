#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "semitotal/error.hpp"
#include "semitotal/graph.hpp"

namespace semitotal {

/// Closed interval [left, right].
template <typename T>
struct BasicInterval {
  T left;
  T right;

  friend bool operator==(const BasicInterval&, const BasicInterval&) = default;
};

template <typename T>
constexpr bool intersects(const BasicInterval<T>& a, const BasicInterval<T>& b) {
  return a.left <= b.right && b.left <= a.right;
}

/// a lies strictly inside b.
template <typename T>
constexpr bool properly_contained(const BasicInterval<T>& a, const BasicInterval<T>& b) {
  return b.left < a.left && a.right < b.right;
}

using Interval = BasicInterval<double>;
using CanonicalInterval = BasicInterval<std::int64_t>;

/// Raw interval model as read from input; interval i is vertex i.
struct IntervalModel {
  std::vector<Interval> intervals;

  std::size_t size() const noexcept { return intervals.size(); }
};

/// Model with 2n pairwise distinct integer endpoints, sorted by left
/// endpoint. `original_id[k]` is the input vertex of sorted interval k.
struct CanonicalModel {
  std::vector<CanonicalInterval> intervals;
  std::vector<Vertex> original_id;

  std::size_t size() const noexcept { return intervals.size(); }
};

template <typename T>
Graph intersection_graph(const std::vector<BasicInterval<T>>& intervals) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < intervals.size(); ++i)
    for (std::size_t j = i + 1; j < intervals.size(); ++j)
      if (intersects(intervals[i], intervals[j])) edges.push_back({i, j});
  return Graph(intervals.size(), edges);
}

inline Graph intersection_graph(const IntervalModel& m) { return intersection_graph(m.intervals); }

/// Intersection graph in the *original* vertex numbering.
inline Graph intersection_graph(const CanonicalModel& m) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j)
      if (intersects(m.intervals[i], m.intervals[j]))
        edges.push_back({m.original_id[i], m.original_id[j]});
  return Graph(m.size(), edges);
}

/// True when endpoints are distinct integers and intervals are sorted by left.
inline bool is_canonical(const CanonicalModel& m) {
  if (m.original_id.size() != m.size()) return false;
  std::vector<std::int64_t> ends;
  ends.reserve(2 * m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    const auto& iv = m.intervals[i];
    if (iv.left >= iv.right) return false;
    if (i > 0 && m.intervals[i - 1].left >= iv.left) return false;
    ends.push_back(iv.left);
    ends.push_back(iv.right);
  }
  std::sort(ends.begin(), ends.end());
  return std::adjacent_find(ends.begin(), ends.end()) == ends.end();
}

/// Re-ranks all endpoints to 0..2n-1 without changing the intersection graph.
///
/// Endpoint events are ordered by value; at equal value left endpoints come
/// before right endpoints, so intervals touching at a single point still
/// intersect. Remaining ties break by interval index.
inline CanonicalModel canonicalize_intervals(const IntervalModel& m) {
  const std::size_t n = m.size();
  for (std::size_t i = 0; i < n; ++i) {
    const auto& iv = m.intervals[i];
    require(iv.left < iv.right, Errc::InvalidInput,
            "degenerate interval " + std::to_string(i) + ": [" + std::to_string(iv.left) + "," +
                std::to_string(iv.right) + "]");
  }

  struct Event {
    double value;
    int kind;  // 0 = left, 1 = right
    std::size_t index;
  };
  std::vector<Event> events;
  events.reserve(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    events.push_back({m.intervals[i].left, 0, i});
    events.push_back({m.intervals[i].right, 1, i});
  }
  std::sort(events.begin(), events.end(), [](const Event& a, const Event& b) {
    if (a.value != b.value) return a.value < b.value;
    if (a.kind != b.kind) return a.kind < b.kind;
    return a.index < b.index;
  });

  std::vector<CanonicalInterval> ranked(n);
  for (std::size_t r = 0; r < events.size(); ++r) {
    const auto rank = static_cast<std::int64_t>(r);
    if (events[r].kind == 0)
      ranked[events[r].index].left = rank;
    else
      ranked[events[r].index].right = rank;
  }

  CanonicalModel out;
  out.original_id.resize(n);
  std::iota(out.original_id.begin(), out.original_id.end(), Vertex{0});
  std::sort(out.original_id.begin(), out.original_id.end(),
            [&](Vertex a, Vertex b) { return ranked[a].left < ranked[b].left; });
  out.intervals.reserve(n);
  for (Vertex id : out.original_id) out.intervals.push_back(ranked[id]);
  return out;
}

/// Back to a plain model (values as doubles, still sorted and distinct).
inline IntervalModel to_model(const CanonicalModel& m) {
  IntervalModel out;
  out.intervals.reserve(m.size());
  for (const auto& iv : m.intervals)
    out.intervals.push_back({static_cast<double>(iv.left), static_cast<double>(iv.right)});
  return out;
}

}  // namespace semitotal
