#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "semitotal/domination.hpp"
#include "semitotal/error.hpp"
#include "semitotal/graph.hpp"
#include "semitotal/reductions.hpp"

namespace semitotal {

struct CoverSet {
  Vertex owner;
  VertexSet members;
};

struct SetCoverInstance {
  VertexSet universe;
  std::vector<CoverSet> family;
  std::size_t max_set_size = 0;
};

/// Greedy dominating set: take the vertex whose closed neighbourhood holds
/// the most undominated vertices, smallest id on ties.
inline VertexSet greedy_dominating_set(const Graph& g) {
  require(g.order() >= 1, Errc::InvalidInput, "greedy domination needs a nonempty graph");
  const std::size_t n = g.order();
  std::vector<bool> dominated(n, false);
  std::size_t remaining = n;
  std::vector<Vertex> chosen;
  while (remaining > 0) {
    Vertex best = 0;
    std::size_t best_gain = 0;
    for (Vertex v = 0; v < n; ++v) {
      std::size_t gain = dominated[v] ? 0 : 1;
      for (Vertex w : g.neighbors(v)) gain += dominated[w] ? 0 : 1;
      if (gain > best_gain) {
        best = v;
        best_gain = gain;
      }
    }
    chosen.push_back(best);
    auto mark = [&](Vertex v) {
      if (!dominated[v]) {
        dominated[v] = true;
        --remaining;
      }
    };
    mark(best);
    for (Vertex w : g.neighbors(best)) mark(w);
  }
  return VertexSet(std::move(chosen));
}

/// Set-cover instance for the dominators that have no other dominator
/// within distance two. Each non-dominator u offers N_2[u] ∩ X.
inline SetCoverInstance build_semitotal_setcover(const Graph& g, const VertexSet& d) {
  require(g.order() >= 2 && is_connected(g), Errc::InvalidInput,
          "set-cover construction needs a connected graph with n >= 2");
  require(is_dominating_set(g, d), Errc::InvalidInput, "input set is not dominating");

  SetCoverInstance inst;
  std::vector<Vertex> lonely;
  for (Vertex v : d) {
    auto ball = neighborhood_within(g, v, 2);
    if (ball.intersected(d).size() == 1) lonely.push_back(v);
  }
  inst.universe = VertexSet(std::move(lonely));
  if (inst.universe.empty()) return inst;

  for (Vertex u = 0; u < g.order(); ++u) {
    if (d.contains(u)) continue;
    auto members = neighborhood_within(g, u, 2).intersected(inst.universe);
    if (members.empty()) continue;
    inst.max_set_size = std::max(inst.max_set_size, members.size());
    inst.family.push_back({u, std::move(members)});
  }
  return inst;
}

/// Greedy set cover: largest marginal coverage, smallest owner on ties.
/// Owners are returned in selection order.
inline std::vector<Vertex> greedy_set_cover(const SetCoverInstance& inst) {
  VertexSet reachable;
  for (const auto& s : inst.family) reachable = reachable.united(s.members);
  require(inst.universe.intersected(reachable) == inst.universe, Errc::Uncoverable,
          "set family does not cover the universe");

  VertexSet uncovered = inst.universe;
  std::vector<bool> used(inst.family.size(), false);
  std::vector<Vertex> owners;
  while (!uncovered.empty()) {
    std::optional<std::size_t> best;
    std::size_t best_gain = 0;
    for (std::size_t j = 0; j < inst.family.size(); ++j) {
      if (used[j]) continue;
      const std::size_t gain = inst.family[j].members.intersected(uncovered).size();
      if (gain == 0) continue;
      if (!best || gain > best_gain ||
          (gain == best_gain && inst.family[j].owner < inst.family[*best].owner)) {
        best = j;
        best_gain = gain;
      }
    }
    used[*best] = true;
    owners.push_back(inst.family[*best].owner);
    for (Vertex x : inst.family[*best].members) uncovered.erase(x);
  }
  return owners;
}

/// Greedy dominating set, patched with a greedy set cover so that every
/// isolated dominator gains a partner within distance two.
inline VertexSet approx_semitotal(const Graph& g) {
  require(g.order() >= 2 && is_connected(g), Errc::InvalidInput,
          "approximation needs a connected graph with n >= 2");
  VertexSet d = greedy_dominating_set(g);
  auto inst = build_semitotal_setcover(g, d);
  if (inst.universe.empty()) return d;
  auto owners = greedy_set_cover(inst);
  VertexSet result = d.united(VertexSet(std::move(owners)));
  require(verify(g, result, DominationKind::Semitotal).valid, Errc::Internal,
          "approximate solution is not semitotal dominating");
  return result;
}

/// Upper bound (2 + 3 ln(Δ+1)) on |approx_semitotal(g)| / γ_t2(g).
inline double approx_semitotal_ratio(std::size_t max_degree) {
  return 2.0 + 3.0 * std::log(static_cast<double>(max_degree) + 1.0);
}

inline constexpr std::size_t kAlgoDomSetMaxK = 4;

/// Dominating set via the semitotal approximation: exhaustive search over
/// sets of size <= k first, otherwise solve the LN gadget approximately and
/// map the answer back.
inline VertexSet algo_dom_set(const Graph& g, std::size_t k = 2) {
  require(g.order() >= 1 && is_connected(g), Errc::InvalidInput,
          "algo_dom_set needs a connected graph");
  require(k >= 1 && k <= kAlgoDomSetMaxK, Errc::InvalidInput,
          "k must lie in [1, " + std::to_string(kAlgoDomSetMaxK) + "]");

  const std::size_t n = g.order();
  std::vector<Vertex> pick;
  // Lexicographic enumeration of all subsets of size `size`.
  auto search = [&](auto&& self, Vertex from, std::size_t size) -> bool {
    if (pick.size() == size) return is_dominating_set(g, VertexSet(pick.begin(), pick.end()));
    for (Vertex v = from; v + (size - pick.size()) <= n; ++v) {
      pick.push_back(v);
      if (self(self, v + 1, size)) return true;
      pick.pop_back();
    }
    return false;
  };
  for (std::size_t size = 1; size <= std::min(k, n); ++size) {
    pick.clear();
    if (search(search, 0, size)) return VertexSet(pick.begin(), pick.end());
  }

  const GadgetOutput go = build_gadget(g, GadgetKind::Ln);
  const VertexSet st = approx_semitotal(go.h);
  VertexSet d = extract_solution(go, st);
  require(is_dominating_set(g, d), Errc::Internal, "algo_dom_set produced a non-dominating set");
  return d;
}

}  // namespace semitotal
