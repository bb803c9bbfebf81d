#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "semitotal/semitotal.hpp"

using namespace semitotal;

namespace {

Graph sample_graph(Seed seed) {
  const std::size_t n = 2 + seed % 11;
  const double p = 0.1 + 0.08 * static_cast<double>(seed % 7);
  return gen_connected_graph(n, p, seed);
}

}  // namespace

TEST(GreedyDominationTest, Examples) {
  EXPECT_EQ(greedy_dominating_set(gen_named(Family::Star, 4)), (VertexSet{0}));
  EXPECT_EQ(greedy_dominating_set(gen_named(Family::Path, 5)), (VertexSet{1, 3}));
  EXPECT_EQ(greedy_dominating_set(Graph(1)), (VertexSet{0}));
}

TEST(GreedyDominationTest, RatioAgainstOracle) {
  for (Seed seed = 0; seed < 200; ++seed) {
    const Graph g = sample_graph(seed);
    const auto d = greedy_dominating_set(g);
    ASSERT_TRUE(is_dominating_set(g, d));
    const double bound = 1.0 + std::log(static_cast<double>(g.max_degree()) + 1.0);
    const auto opt = oracle::brute_min(g, DominationKind::Dominating)->size();
    EXPECT_LE(static_cast<double>(d.size()), bound * static_cast<double>(opt)) << "seed " << seed;
  }
}

TEST(SetCoverInstanceTest, StarWithCentre) {
  const auto inst = build_semitotal_setcover(gen_named(Family::Star, 4), VertexSet{0});
  EXPECT_EQ(inst.universe, (VertexSet{0}));
  ASSERT_EQ(inst.family.size(), 3u);
  for (std::size_t j = 0; j < 3; ++j) {
    EXPECT_EQ(inst.family[j].owner, j + 1);
    EXPECT_EQ(inst.family[j].members, (VertexSet{0}));
  }
  EXPECT_EQ(inst.max_set_size, 1u);
}

TEST(SetCoverInstanceTest, AdjacentDominatorsGiveEmptyInstance) {
  const auto inst = build_semitotal_setcover(gen_named(Family::Path, 4), VertexSet{1, 2});
  EXPECT_TRUE(inst.universe.empty());
  EXPECT_TRUE(inst.family.empty());
}

TEST(SetCoverInstanceTest, RejectsNonDominatingInput) {
  EXPECT_THROW(build_semitotal_setcover(gen_named(Family::Path, 5), VertexSet{0}), Error);
}

TEST(SetCoverInstanceTest, StructuralInvariants) {
  for (Seed seed = 0; seed < 200; ++seed) {
    const Graph g = sample_graph(seed + 300);
    const auto d = greedy_dominating_set(g);
    const auto inst = build_semitotal_setcover(g, d);
    const std::size_t delta = g.max_degree();
    VertexSet covered;
    for (const auto& s : inst.family) {
      EXPECT_FALSE(s.members.empty());
      EXPECT_FALSE(d.contains(s.owner));
      EXPECT_EQ(s.members, neighborhood_within(g, s.owner, 2).intersected(inst.universe));
      EXPECT_LE(s.members.size(), delta * delta);
      covered = covered.united(s.members);
    }
    EXPECT_EQ(covered.intersected(inst.universe), inst.universe);
    // X is exactly the dominators with no other dominator within distance 2.
    const auto dist = oracle::all_pairs_distances(g);
    for (Vertex v : d) {
      bool lonely = true;
      for (Vertex w : d)
        if (w != v && dist[v][w] <= 2) lonely = false;
      EXPECT_EQ(inst.universe.contains(v), lonely);
    }
  }
}

TEST(GreedySetCoverTest, TieBreakAndEmpty) {
  SetCoverInstance inst{VertexSet{0}, {{3, VertexSet{0}}, {1, VertexSet{0}}, {2, VertexSet{0}}}, 1};
  EXPECT_EQ(greedy_set_cover(inst), (std::vector<Vertex>{1}));
  EXPECT_TRUE(greedy_set_cover(SetCoverInstance{}).empty());
}

TEST(GreedySetCoverTest, Uncoverable) {
  SetCoverInstance inst{VertexSet{0, 5}, {{1, VertexSet{0}}}, 1};
  try {
    greedy_set_cover(inst);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::Uncoverable);
  }
}

TEST(GreedySetCoverTest, RatioAgainstExhaustiveCover) {
  for (Seed seed = 0; seed < 200; ++seed) {
    Rng rng(seed);
    const std::size_t u = 1 + rng.below(10);
    const std::size_t f = 1 + rng.below(12);
    SetCoverInstance inst;
    std::vector<Vertex> all(u);
    for (Vertex x = 0; x < u; ++x) all[x] = x;
    inst.universe = VertexSet(all);
    for (std::size_t j = 0; j < f; ++j) {
      std::vector<Vertex> members;
      for (Vertex x = 0; x < u; ++x)
        if (rng.chance(0.3)) members.push_back(x);
      if (j == f - 1) {
        // Last set patches whatever is still uncovered, so the instance is feasible.
        VertexSet covered;
        for (const auto& s : inst.family) covered = covered.united(s.members);
        for (Vertex x = 0; x < u; ++x)
          if (!covered.contains(x)) members.push_back(x);
      }
      if (members.empty()) continue;
      VertexSet ms(members);
      inst.max_set_size = std::max(inst.max_set_size, ms.size());
      inst.family.push_back({static_cast<Vertex>(100 + j), ms});
    }
    const auto owners = greedy_set_cover(inst);
    VertexSet covered;
    for (Vertex o : owners)
      for (const auto& s : inst.family)
        if (s.owner == o) covered = covered.united(s.members);
    EXPECT_EQ(covered.intersected(inst.universe), inst.universe);
    const auto opt = oracle::brute_set_cover(inst);
    ASSERT_TRUE(opt.has_value());
    const double bound = 1.0 + std::log(static_cast<double>(inst.max_set_size));
    EXPECT_LE(static_cast<double>(owners.size()), bound * static_cast<double>(*opt))
        << "seed " << seed;
  }
}

TEST(ApproxSemitotalTest, Examples) {
  const auto star = approx_semitotal(gen_named(Family::Star, 5));
  EXPECT_EQ(star.size(), 2u);
  EXPECT_TRUE(star.contains(0));
  EXPECT_EQ(approx_semitotal(gen_named(Family::Path, 4)), (VertexSet{1, 2}));
  EXPECT_THROW(approx_semitotal(Graph(1)), Error);
  EXPECT_THROW(approx_semitotal(Graph(3, {{0, 1}})), Error);
}

TEST(ApproxSemitotalTest, RatioAndValidity) {
  for (Seed seed = 0; seed < 300; ++seed) {
    const Graph g = sample_graph(seed + 900);
    const auto s = approx_semitotal(g);
    ASSERT_TRUE(verify(g, s, DominationKind::Semitotal).valid) << "seed " << seed;
    const auto opt = exact_min(g, DominationKind::Semitotal).size();
    EXPECT_LE(static_cast<double>(s.size()),
              approx_semitotal_ratio(g.max_degree()) * static_cast<double>(opt))
        << "seed " << seed;
    EXPECT_EQ(approx_semitotal(g), s) << "determinism";
  }
}

TEST(AlgoDomSetTest, Examples) {
  EXPECT_EQ(algo_dom_set(gen_named(Family::Cycle, 4), 2).size(), 2u);
  EXPECT_EQ(algo_dom_set(gen_named(Family::Complete, 2), 1), (VertexSet{0}));
  EXPECT_THROW(algo_dom_set(gen_named(Family::Path, 3), 0), Error);
  EXPECT_THROW(algo_dom_set(gen_named(Family::Path, 3), kAlgoDomSetMaxK + 1), Error);
}

TEST(AlgoDomSetTest, AlwaysDominating) {
  for (Seed seed = 0; seed < 100; ++seed) {
    const Graph g = gen_connected_graph(1 + seed % 10, 0.2, seed + 40);
    for (std::size_t k : {1u, 2u}) {
      const auto d = algo_dom_set(g, k);
      EXPECT_TRUE(is_dominating_set(g, d)) << "seed " << seed << " k " << k;
    }
  }
}

TEST(AlgoDomSetTest, GadgetBranchIsTaken) {
  // gamma(P9) = 3 > k = 1, so step one finds nothing.
  const Graph p9 = gen_named(Family::Path, 9);
  const auto d = algo_dom_set(p9, 1);
  EXPECT_TRUE(is_dominating_set(p9, d));
  EXPECT_GE(d.size(), 3u);
}
