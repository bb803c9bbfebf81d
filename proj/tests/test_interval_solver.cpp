#include <gtest/gtest.h>

#include "oracles.hpp"
#include "semitotal/semitotal.hpp"

using namespace semitotal;

namespace {

CanonicalModel p5_model() {
  return canonicalize_intervals(IntervalModel{{{1, 4}, {3, 8}, {5, 12}, {9, 14}, {13, 16}}});
}

CanonicalModel pair_model() { return canonicalize_intervals(IntervalModel{{{1, 4}, {3, 6}}}); }

constexpr auto A1 = ArcClass::A1;
constexpr auto M = ArcClass::A2Marked;
constexpr auto U = ArcClass::A2Unmarked;

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::Internal;
}

// Random connected model without a container interval, or nullopt.
std::optional<CanonicalModel> digraph_ready(Seed seed) {
  const std::size_t n = 2 + seed % 14;
  auto m = canonicalize_intervals(gen_interval_model(n, seed));
  if (!is_connected(intersection_graph(m)) || contains_all(m)) return std::nullopt;
  return m;
}

}  // namespace

TEST(ContainsAllTest, Examples) {
  EXPECT_EQ(contains_all(canonicalize_intervals(IntervalModel{{{0, 10}, {2, 3}, {4, 5}}})),
            std::optional<std::size_t>{0});
  EXPECT_FALSE(contains_all(pair_model()));
  EXPECT_FALSE(contains_all(canonicalize_intervals(IntervalModel{{{1, 8}, {2, 9}}})));
}

TEST(OverlapDigraphTest, P5ArcsAreFrozen) {
  const auto d = build_overlap_digraph(p5_model());
  EXPECT_EQ(d.vertices, (std::vector<std::size_t>{0, 1, 2, 3, 4, 5, 6}));
  const std::vector<OverlapArc> expected{
      {0, 1, U}, {0, 2, U}, {1, 2, A1}, {1, 3, M}, {1, 4, U}, {2, 3, A1}, {2, 4, M},
      {2, 5, U}, {3, 4, A1}, {3, 5, M}, {4, 5, A1}, {4, 6, U}, {5, 6, U}};
  EXPECT_EQ(d.arcs, expected);
  EXPECT_EQ(oracle::brute_arcs(p5_model()), expected);
}

TEST(OverlapDigraphTest, PairArcsAreFrozen) {
  const auto d = build_overlap_digraph(pair_model());
  const std::vector<OverlapArc> expected{{0, 1, U}, {0, 2, U}, {1, 2, A1}, {1, 3, U}, {2, 3, U}};
  EXPECT_EQ(d.arcs, expected);
  EXPECT_EQ(oracle::brute_arcs(pair_model()), expected);
}

TEST(OverlapDigraphTest, RejectsBadPreconditions) {
  EXPECT_EQ(code_of([] { build_overlap_digraph(canonicalize_intervals(IntervalModel{{{0, 1}}})); }),
            Errc::InvalidInput);
  EXPECT_EQ(code_of([] {
              build_overlap_digraph(canonicalize_intervals(IntervalModel{{{0, 10}, {2, 3}, {4, 5}}}));
            }),
            Errc::InvalidInput);
  EXPECT_EQ(code_of([] {
              build_overlap_digraph(canonicalize_intervals(IntervalModel{{{0, 1}, {2, 3}}}));
            }),
            Errc::InvalidInput);
}

TEST(OverlapDigraphTest, MatchesBruteForceAndInvariants) {
  std::size_t checked = 0;
  for (Seed seed = 0; seed < 600; ++seed) {
    auto m = digraph_ready(seed);
    if (!m) continue;
    ++checked;
    const auto d = build_overlap_digraph(*m);
    ASSERT_EQ(d.arcs, oracle::brute_arcs(*m)) << "seed " << seed;
    const auto& iv = d.intervals;
    EXPECT_LT(iv.front().right, m->intervals.front().left);
    for (const auto& arc : d.arcs) {
      const auto& a = iv[arc.from];
      const auto& b = iv[arc.to];
      if (arc.from == 0 || arc.to == d.sink()) {
        EXPECT_EQ(arc.cls, U);
      }
      if (arc.cls == A1) {
        EXPECT_TRUE(a.left < b.left && b.left < a.right && a.right < b.right);
      } else {
        EXPECT_LT(a.right, b.left);
        for (const auto& h : iv) EXPECT_FALSE(a.right < h.left && h.right < b.left);
      }
    }
  }
  EXPECT_GT(checked, 200u);
}

TEST(SplitDigraphTest, SingleVertexExample) {
  OverlapDigraph d;
  d.intervals = {{0, 1}, {2, 3}, {4, 5}};
  d.vertices = {0, 1, 2};
  d.arcs = {{0, 1, U}, {1, 2, U}};
  const auto s = build_split_digraph(d);
  const std::vector<SplitNode> nodes{
      {0, Port::Terminal}, {1, Port::In}, {1, Port::Out}, {2, Port::Terminal}};
  EXPECT_EQ(s.nodes, nodes);
  const std::vector<SplitArc> arcs{{0, 2, 0}, {1, 2, 0}, {1, 3, 1}};
  EXPECT_EQ(s.arcs, arcs);
}

TEST(SplitDigraphTest, CensusAndPathLength) {
  for (Seed seed = 0; seed < 400; ++seed) {
    auto m = digraph_ready(seed);
    if (!m) continue;
    const auto d = build_overlap_digraph(*m);
    const auto s = build_split_digraph(d);
    std::size_t inner = 0;
    for (std::size_t v : d.vertices) inner += (v != 0 && v != d.sink());
    EXPECT_EQ(s.nodes.size(), 2 * inner + 2);

    std::size_t expected_unit = 0;
    for (const auto& arc : d.arcs)
      if (arc.from != 0) ++expected_unit;  // A1, marked, inner unmarked, and arcs into the sink
    std::size_t unit = 0;
    for (const auto& arc : s.arcs) {
      EXPECT_LT(arc.from, arc.to);
      unit += arc.length == 1;
    }
    EXPECT_EQ(unit, expected_unit) << "seed " << seed;

    const auto path = shortest_constrained_path(s);
    EXPECT_EQ(path.length, path.intervals.size()) << "seed " << seed;
    EXPECT_EQ(path.nodes.front(), s.source());
    EXPECT_EQ(path.nodes.back(), s.sink());

    // Collapse the path onto D and check no two consecutive unmarked arcs.
    std::vector<std::size_t> walk;
    for (std::size_t node : path.nodes)
      if (walk.empty() || walk.back() != s.nodes[node].interval) walk.push_back(s.nodes[node].interval);
    std::optional<ArcClass> prev;
    for (std::size_t i = 1; i < walk.size(); ++i) {
      const auto cls = d.arc_class(walk[i - 1], walk[i]);
      ASSERT_TRUE(cls.has_value()) << "path uses a non-arc, seed " << seed;
      EXPECT_FALSE(prev == U && *cls == U) << "seed " << seed;
      prev = cls;
    }
  }
}

TEST(ShortestPathTest, Examples) {
  const auto p5 = shortest_constrained_path(build_split_digraph(build_overlap_digraph(p5_model())));
  EXPECT_EQ(p5.length, 2u);
  EXPECT_EQ(p5.intervals, (VertexSet{2, 4}));
  const auto pair = shortest_constrained_path(build_split_digraph(build_overlap_digraph(pair_model())));
  EXPECT_EQ(pair.intervals, (VertexSet{1, 2}));
}

TEST(SolveIntervalTest, Examples) {
  EXPECT_EQ(solve_interval(IntervalModel{{{0, 10}, {2, 3}, {4, 5}}}), (VertexSet{0, 1}));
  EXPECT_EQ(solve_interval(IntervalModel{{{1, 4}, {3, 8}, {5, 12}, {9, 14}, {13, 16}}}).size(), 2u);
  // Input order is preserved in the returned ids.
  EXPECT_EQ(solve_interval(IntervalModel{{{4, 5}, {2, 3}, {0, 10}}}), (VertexSet{0, 2}));
}

TEST(SolveIntervalTest, SingletonComponentIsInfeasible) {
  EXPECT_EQ(code_of([] { solve_interval(IntervalModel{{{0, 1}}}); }), Errc::Infeasible);
  EXPECT_EQ(code_of([] { solve_interval(IntervalModel{{{0, 2}, {1, 3}, {5, 6}}}); }),
            Errc::Infeasible);
  EXPECT_EQ(code_of([] { solve_interval(IntervalModel{}); }), Errc::InvalidInput);
}

TEST(SolveIntervalTest, DisconnectedComponentsAreSolvedSeparately) {
  const IntervalModel m{{{0, 2}, {1, 3}, {10, 12}, {11, 13}, {12.5, 20}}};
  const auto s = solve_interval(m);
  EXPECT_TRUE(verify(intersection_graph(m), s, DominationKind::Semitotal).valid);
  EXPECT_EQ(s.size(), exact_min(intersection_graph(m), DominationKind::Semitotal).size());
}

TEST(SolveIntervalTest, MatchesExactOracle) {
  std::size_t solved = 0;
  for (Seed seed = 0; seed < 300; ++seed) {
    const std::size_t n = 2 + seed % 11;
    const auto m = seed % 2 ? gen_interval_model(n, seed) : gen_interval_model(n, seed, 3);
    const Graph g = intersection_graph(m);
    if (has_isolated_vertex(g)) {
      EXPECT_EQ(code_of([&] { solve_interval(m); }), Errc::Infeasible);
      EXPECT_EQ(code_of([&] { exact_min(g, DominationKind::Semitotal); }), Errc::Infeasible);
      continue;
    }
    ++solved;
    const auto s = solve_interval(m);
    ASSERT_TRUE(verify(g, s, DominationKind::Semitotal).valid) << "seed " << seed;
    ASSERT_EQ(s.size(), exact_min(g, DominationKind::Semitotal).size()) << "seed " << seed;

    // Outside the container case no chosen interval sits inside another one.
    const auto c = canonicalize_intervals(m);
    for (const auto& part : detail::split_components(c)) {
      if (contains_all(part)) continue;
      for (std::size_t i = 0; i < part.size(); ++i) {
        if (!s.contains(part.original_id[i])) continue;
        for (std::size_t j = 0; j < part.size(); ++j)
          EXPECT_FALSE(properly_contained(part.intervals[i], part.intervals[j])) << "seed " << seed;
      }
    }
  }
  EXPECT_GT(solved, 100u);
}
