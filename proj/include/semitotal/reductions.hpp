#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "semitotal/domination.hpp"
#include "semitotal/error.hpp"
#include "semitotal/graph.hpp"

namespace semitotal {

// Gadget constructions that carry a source problem on G to semitotal (or
// total) domination on a derived graph H, with the solution maps in both
// directions.
//
//   GP4        pendant path v-w-x-y-z on every vertex
//   BIPARTITE  path x-y-z-u-w per vertex, joined by v-z
//   SPLIT      split graph on K ∪ Y ∪ {s,w} | X ∪ I ∪ {r,t,z}
//   LN         x_i per vertex, all joined to a hub y with pendant z
//   APX        4-cycle u-x-y-z with pendant w per vertex, subdivided edges
//
// Vertex numbering of H: originals keep 0..n-1, then one block per role in
// the order listed for that kind, each block ordered by source index.

enum class GadgetKind { Gp4, Bipartite, Split, Ln, Apx };

inline std::string_view to_string(GadgetKind k) {
  switch (k) {
    case GadgetKind::Gp4: return "gp4";
    case GadgetKind::Bipartite: return "bipartite";
    case GadgetKind::Split: return "split";
    case GadgetKind::Ln: return "ln";
    case GadgetKind::Apx: return "apx";
  }
  return "?";
}

inline std::optional<GadgetKind> parse_gadget_kind(std::string_view s) {
  for (auto k : {GadgetKind::Gp4, GadgetKind::Bipartite, GadgetKind::Split, GadgetKind::Ln,
                 GadgetKind::Apx})
    if (to_string(k) == s) return k;
  return std::nullopt;
}

enum class RoleTag { Original, U, W, X, Y, Z, R, S, T, EdgeVertex };

struct Role {
  static constexpr std::size_t kSingleton = static_cast<std::size_t>(-1);

  RoleTag tag;
  // Source vertex for per-vertex roles, edge index for EdgeVertex,
  // kSingleton for the shared vertices of SPLIT and LN.
  std::size_t index;

  friend bool operator==(const Role&, const Role&) = default;
  friend auto operator<=>(const Role&, const Role&) = default;
};

inline std::string role_name(const Role& r) {
  std::string base;
  switch (r.tag) {
    case RoleTag::Original: base = "v"; break;
    case RoleTag::U: base = "u"; break;
    case RoleTag::W: base = "w"; break;
    case RoleTag::X: base = "x"; break;
    case RoleTag::Y: base = "y"; break;
    case RoleTag::Z: base = "z"; break;
    case RoleTag::R: base = "r"; break;
    case RoleTag::S: base = "s"; break;
    case RoleTag::T: base = "t"; break;
    case RoleTag::EdgeVertex: base = "e"; break;
  }
  if (r.index == Role::kSingleton) return base;
  return base + "_" + std::to_string(r.index);
}

struct GadgetOutput {
  GadgetOutput(Graph h_graph, GadgetKind gadget_kind, std::vector<Role> role_map, Graph source_graph)
      : h(std::move(h_graph)), kind(gadget_kind), roles(std::move(role_map)),
        source(std::move(source_graph)) {
    for (Vertex v = 0; v < roles.size(); ++v) lookup_.emplace(roles[v], v);
  }

  Graph h;
  GadgetKind kind;
  std::vector<Role> roles;  // one per H-vertex
  Graph source;
  std::optional<SplitPartition> source_partition;  // SPLIT only
  std::optional<SplitPartition> h_partition;       // SPLIT only

  std::size_t source_order() const noexcept { return source.order(); }
  std::size_t source_size() const noexcept { return source.size(); }

  Vertex vertex_of(RoleTag tag, std::size_t index = Role::kSingleton) const {
    auto it = lookup_.find(Role{tag, index});
    require(it != lookup_.end(), Errc::InvalidInput,
            "gadget has no vertex " + role_name(Role{tag, index}));
    return it->second;
  }

 private:
  std::map<Role, Vertex> lookup_;
};

namespace detail {

class GadgetBuilder {
 public:
  explicit GadgetBuilder(const Graph& g) : n_(g.order()), edges_(g.edges()) {
    for (Vertex v = 0; v < n_; ++v) roles_.push_back({RoleTag::Original, v});
  }

  Vertex add(RoleTag tag, std::size_t index = Role::kSingleton) {
    roles_.push_back({tag, index});
    return roles_.size() - 1;
  }

  /// One vertex per source vertex; returns the id of the first.
  Vertex add_block(RoleTag tag) {
    Vertex first = roles_.size();
    for (Vertex v = 0; v < n_; ++v) add(tag, v);
    return first;
  }

  void connect(Vertex a, Vertex b) { edges_.push_back({a, b}); }

  // The source edges are copied in by default; APX replaces them.
  void drop_source_edges() { edges_.clear(); }

  GadgetOutput finish(GadgetKind kind, const Graph& source) {
    Graph h(roles_.size(), edges_);
    return GadgetOutput(std::move(h), kind, std::move(roles_), source);
  }

 private:
  std::size_t n_;
  std::vector<Edge> edges_;
  std::vector<Role> roles_;
};

}  // namespace detail

/// Builds H for the given kind. SPLIT needs a valid split partition of g.
inline GadgetOutput build_gadget(const Graph& g, GadgetKind kind,
                                 const std::optional<SplitPartition>& partition = std::nullopt) {
  const std::size_t n = g.order();
  require(n >= 1, Errc::InvalidInput, "gadget source must have at least one vertex");
  require(is_connected(g), Errc::InvalidInput, "gadget source must be connected");

  detail::GadgetBuilder b(g);
  switch (kind) {
    case GadgetKind::Gp4: {
      const Vertex w = b.add_block(RoleTag::W), x = b.add_block(RoleTag::X),
                   y = b.add_block(RoleTag::Y), z = b.add_block(RoleTag::Z);
      for (Vertex i = 0; i < n; ++i) {
        b.connect(i, w + i);
        b.connect(w + i, x + i);
        b.connect(x + i, y + i);
        b.connect(y + i, z + i);
      }
      return b.finish(kind, g);
    }
    case GadgetKind::Bipartite: {
      require(n >= 2, Errc::InvalidInput, "bipartite gadget needs a non-trivial source (n >= 2)");
      const Vertex x = b.add_block(RoleTag::X), y = b.add_block(RoleTag::Y),
                   z = b.add_block(RoleTag::Z), u = b.add_block(RoleTag::U),
                   w = b.add_block(RoleTag::W);
      for (Vertex i = 0; i < n; ++i) {
        b.connect(x + i, y + i);
        b.connect(y + i, z + i);
        b.connect(z + i, u + i);
        b.connect(u + i, w + i);
        b.connect(i, z + i);
      }
      return b.finish(kind, g);
    }
    case GadgetKind::Split: {
      require(partition.has_value(), Errc::InvalidInput, "split gadget needs a split partition");
      require(is_split_partition(g, *partition), Errc::InvalidInput,
              "invalid split partition for gadget source");
      require(!partition->clique.empty(), Errc::InvalidInput,
              "split partition needs a nonempty clique side");
      const auto& clique = partition->clique;
      const auto& indep = partition->independent;
      std::vector<Vertex> xs, ys;
      for (Vertex v : clique) xs.push_back(b.add(RoleTag::X, v));
      for (Vertex u : indep) ys.push_back(b.add(RoleTag::Y, u));
      const Vertex w = b.add(RoleTag::W), z = b.add(RoleTag::Z), r = b.add(RoleTag::R),
                   s = b.add(RoleTag::S), t = b.add(RoleTag::T);

      std::vector<Vertex> big_clique(clique.begin(), clique.end());
      big_clique.insert(big_clique.end(), ys.begin(), ys.end());
      big_clique.push_back(s);
      big_clique.push_back(w);
      for (std::size_t i = 0; i < big_clique.size(); ++i)
        for (std::size_t j = i + 1; j < big_clique.size(); ++j) {
          Vertex a = big_clique[i], c = big_clique[j];
          if (a < n && c < n) continue;  // already a clique edge of G
          b.connect(a, c);
        }
      for (std::size_t i = 0; i < clique.size(); ++i) {
        b.connect(clique[i], xs[i]);
        b.connect(xs[i], w);
      }
      for (std::size_t j = 0; j < indep.size(); ++j) {
        b.connect(indep[j], ys[j]);
        b.connect(ys[j], t);
      }
      b.connect(r, s);
      b.connect(s, t);
      b.connect(w, z);

      GadgetOutput out = b.finish(kind, g);
      out.source_partition = partition;
      std::vector<Vertex> indep_h(xs.begin(), xs.end());
      indep_h.insert(indep_h.end(), indep.begin(), indep.end());
      indep_h.insert(indep_h.end(), {r, t, z});
      out.h_partition = SplitPartition{VertexSet(big_clique), VertexSet(std::move(indep_h))};
      return out;
    }
    case GadgetKind::Ln: {
      const Vertex x = b.add_block(RoleTag::X);
      const Vertex y = b.add(RoleTag::Y), z = b.add(RoleTag::Z);
      for (Vertex i = 0; i < n; ++i) {
        b.connect(i, x + i);
        b.connect(x + i, y);
      }
      b.connect(y, z);
      return b.finish(kind, g);
    }
    case GadgetKind::Apx: {
      b.drop_source_edges();
      const Vertex u = b.add_block(RoleTag::U), x = b.add_block(RoleTag::X),
                   y = b.add_block(RoleTag::Y), z = b.add_block(RoleTag::Z),
                   w = b.add_block(RoleTag::W);
      for (Vertex i = 0; i < n; ++i) {
        b.connect(i, u + i);
        b.connect(u + i, w + i);
        b.connect(u + i, x + i);
        b.connect(x + i, y + i);
        b.connect(y + i, z + i);
        b.connect(z + i, u + i);
      }
      for (std::size_t j = 0; j < g.size(); ++j) {
        const Vertex e = b.add(RoleTag::EdgeVertex, j);
        b.connect(e, g.edges()[j].u);
        b.connect(e, g.edges()[j].v);
      }
      return b.finish(kind, g);
    }
  }
  fail(Errc::InvalidInput, "unknown gadget kind");
}

/// The domination condition a solution on H is checked against.
inline DominationKind gadget_target(GadgetKind kind) {
  return kind == GadgetKind::Gp4 ? DominationKind::Total : DominationKind::Semitotal;
}

/// Lifts a source solution to H: a TD-set for GP4, a vertex cover for APX,
/// a dominating set otherwise.
inline VertexSet extend_solution(const GadgetOutput& go, const VertexSet& source_solution) {
  const Graph& g = go.source;
  for (Vertex v : source_solution) g.check_vertex(v);
  const std::size_t n = g.order();
  std::vector<Vertex> out(source_solution.begin(), source_solution.end());

  switch (go.kind) {
    case GadgetKind::Gp4:
      require(verify(g, source_solution, DominationKind::Total).valid, Errc::InvalidInput,
              "GP4 extension needs a total dominating set of the base graph");
      // x_i and y_i: y_i needs a neighbour in the set, and only x_i or z_i qualify.
      for (Vertex i = 0; i < n; ++i) {
        out.push_back(go.vertex_of(RoleTag::X, i));
        out.push_back(go.vertex_of(RoleTag::Y, i));
      }
      break;
    case GadgetKind::Bipartite:
      require(is_dominating_set(g, source_solution), Errc::InvalidInput,
              "extension needs a dominating set of the source graph");
      for (Vertex i = 0; i < n; ++i) {
        out.push_back(go.vertex_of(RoleTag::U, i));
        out.push_back(go.vertex_of(RoleTag::Y, i));
      }
      break;
    case GadgetKind::Split:
      require(is_dominating_set(g, source_solution), Errc::InvalidInput,
              "extension needs a dominating set of the source graph");
      out.push_back(go.vertex_of(RoleTag::W));
      out.push_back(go.vertex_of(RoleTag::S));
      break;
    case GadgetKind::Ln:
      require(is_dominating_set(g, source_solution), Errc::InvalidInput,
              "extension needs a dominating set of the source graph");
      out.push_back(go.vertex_of(RoleTag::Y));
      break;
    case GadgetKind::Apx:
      require(is_vertex_cover(g, source_solution), Errc::InvalidInput,
              "APX extension needs a vertex cover of the source graph");
      for (Vertex i = 0; i < n; ++i) {
        out.push_back(go.vertex_of(RoleTag::U, i));
        out.push_back(go.vertex_of(RoleTag::Y, i));
      }
      break;
  }
  VertexSet lifted(std::move(out));
  require(verify(go.h, lifted, gadget_target(go.kind)).valid, Errc::Internal,
          "extended solution does not verify on the gadget graph");
  return lifted;
}

/// Maps a solution on H back to G: a TD-set for GP4, a vertex cover for
/// APX, a dominating set otherwise. Where the replacement rule leaves a
/// choice, the smallest id is taken.
inline VertexSet extract_solution(const GadgetOutput& go, const VertexSet& h_solution) {
  const Graph& g = go.source;
  const std::size_t n = g.order();
  require(verify(go.h, h_solution, gadget_target(go.kind)).valid, Errc::InvalidInput,
          "solution does not verify on the gadget graph");

  std::vector<Vertex> kept;
  switch (go.kind) {
    case GadgetKind::Gp4: {
      require(n >= 2, Errc::InvalidInput, "single-vertex base has no total dominating set");
      for (Vertex v : h_solution) {
        const Role& role = go.roles[v];
        if (role.tag == RoleTag::Original) {
          kept.push_back(v);
        } else if (role.tag == RoleTag::W) {
          kept.push_back(g.neighbors(role.index).front());
        }
      }
      VertexSet result(std::move(kept));
      require(verify(g, result, DominationKind::Total).valid, Errc::Internal,
              "extracted set is not a total dominating set of the base graph");
      return result;
    }
    case GadgetKind::Bipartite:
    case GadgetKind::Ln: {
      const RoleTag carrier = go.kind == GadgetKind::Bipartite ? RoleTag::Z : RoleTag::X;
      for (Vertex v : h_solution) {
        const Role& role = go.roles[v];
        if (role.tag == RoleTag::Original || role.tag == carrier) kept.push_back(role.index);
      }
      break;
    }
    case GadgetKind::Split: {
      for (Vertex v : h_solution) {
        const Role& role = go.roles[v];
        if (role.tag == RoleTag::Original || role.tag == RoleTag::X || role.tag == RoleTag::Y)
          kept.push_back(role.index);
      }
      VertexSet d(std::move(kept));
      const auto& part = *go.source_partition;
      // With no clique vertex left, every independent vertex sits in d; one
      // of them swaps for a clique neighbour to reach clique vertices that
      // have no independent neighbour.
      if (!is_dominating_set(g, d) && d.intersected(part.clique).empty() && !d.empty()) {
        Vertex u = d[0];
        Vertex k = kUnreachable;
        for (Vertex nb : g.neighbors(u))
          if (part.clique.contains(nb)) k = std::min(k, nb);
        if (k != kUnreachable) {
          d.erase(u);
          d.insert(k);
        }
      }
      // Complete source graph with an empty independent side.
      if (d.empty()) d.insert(part.clique[0]);
      require(is_dominating_set(g, d), Errc::Internal,
              "extracted set is not a dominating set of the split source");
      return d;
    }
    case GadgetKind::Apx: {
      for (Vertex v : h_solution) {
        const Role& role = go.roles[v];
        if (role.tag == RoleTag::Original)
          kept.push_back(v);
        else if (role.tag == RoleTag::EdgeVertex)
          kept.push_back(g.edges()[role.index].u);
      }
      VertexSet cover(std::move(kept));
      require(is_vertex_cover(g, cover), Errc::Internal,
              "extracted set is not a vertex cover of the source graph");
      return cover;
    }
  }
  VertexSet result(std::move(kept));
  require(is_dominating_set(g, result), Errc::Internal,
          "extracted set is not a dominating set of the source graph");
  return result;
}

// ---------------------------------------------------------------------------
// Oracle cross-checks

enum class Relation { Equal, AtMost };

struct ReductionCheck {
  std::string identity;
  std::size_t lhs = 0;
  std::size_t rhs = 0;
  Relation relation = Relation::Equal;
  bool holds = false;
};

struct ReductionReport {
  GadgetKind kind{};
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t h_order = 0;
  std::size_t h_size = 0;
  std::vector<ReductionCheck> checks;

  bool holds() const {
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.holds; });
  }
};

struct OracleCaps {
  std::size_t max_n;
  std::size_t max_m;
};

inline OracleCaps oracle_caps(GadgetKind kind) {
  constexpr std::size_t any = static_cast<std::size_t>(-1);
  switch (kind) {
    case GadgetKind::Bipartite: return {4, any};
    case GadgetKind::Apx: return {3, 3};
    case GadgetKind::Split: return {6, any};
    case GadgetKind::Gp4: return {4, any};
    case GadgetKind::Ln: return {6, any};
  }
  return {0, 0};
}

/// Solves both sides of the reduction exactly and compares them.
inline ReductionReport check_reduction(const Graph& g, GadgetKind kind,
                                       const std::optional<SplitPartition>& partition = std::nullopt) {
  const auto caps = oracle_caps(kind);
  require(g.order() <= caps.max_n && g.size() <= caps.max_m, Errc::SizeCapExceeded,
          std::string(to_string(kind)) + " oracle check limited to n <= " +
              std::to_string(caps.max_n) +
              (caps.max_m != static_cast<std::size_t>(-1) ? ", m <= " + std::to_string(caps.max_m)
                                                         : std::string{}));

  const GadgetOutput go = build_gadget(g, kind, partition);
  ReductionReport rep{kind, g.order(), g.size(), go.h.order(), go.h.size(), {}};
  const std::size_t n = g.order();

  auto add = [&](std::string identity, std::size_t lhs, std::size_t rhs, Relation rel,
                 bool extra_ok = true) {
    bool ok = rel == Relation::Equal ? lhs == rhs : lhs <= rhs;
    rep.checks.push_back({std::move(identity), lhs, rhs, rel, ok && extra_ok});
  };

  switch (kind) {
    case GadgetKind::Gp4: {
      const auto st = exact_min(go.h, DominationKind::Semitotal);
      add("gamma_t2(H) = 2n", st.size(), 2 * n, Relation::Equal);
      if (n >= 2) {
        const auto total_h = exact_min(go.h, DominationKind::Total);
        const auto total_g = exact_min(g, DominationKind::Total);
        add("gamma_t(H) = 2n + gamma_t(G)", total_h.size(), 2 * n + total_g.size(),
            Relation::Equal);
        const auto back = extract_solution(go, total_h);
        add("|extract(D_t(H))| <= |D_t(H)| - 2n", back.size(), total_h.size() - 2 * n,
            Relation::AtMost);
      }
      break;
    }
    case GadgetKind::Bipartite:
    case GadgetKind::Split: {
      const auto st = exact_min(go.h, DominationKind::Semitotal);
      const auto dom = exact_min(g, DominationKind::Dominating);
      const std::size_t offset = kind == GadgetKind::Bipartite ? 2 * n : 2;
      const std::string off = kind == GadgetKind::Bipartite ? "2n" : "2";
      add("gamma_t2(H) = gamma(G) + " + off, st.size(), dom.size() + offset, Relation::Equal);
      const auto back = extract_solution(go, st);
      add("|extract(D_t2(H))| <= gamma_t2(H) - " + off, back.size(),
          st.size() >= offset ? st.size() - offset : 0, Relation::AtMost);
      break;
    }
    case GadgetKind::Ln: {
      const auto st = exact_min(go.h, DominationKind::Semitotal);
      const auto dom = exact_min(g, DominationKind::Dominating);
      add("gamma_t2(H) <= gamma(G) + 1", st.size(), dom.size() + 1, Relation::AtMost);
      const auto back = extract_solution(go, st);
      add("extract(D_t2(H)) dominates G, |extract| <= gamma_t2(H)", back.size(), st.size(),
          Relation::AtMost, is_dominating_set(g, back));
      const auto lifted = extend_solution(go, dom);
      const auto round = extract_solution(go, lifted);
      add("extract(extend(D(G))) dominates G", round.size(), lifted.size(), Relation::AtMost,
          is_dominating_set(g, round));
      break;
    }
    case GadgetKind::Apx: {
      const auto st = exact_min(go.h, DominationKind::Semitotal);
      const auto cover = exact_vertex_cover(g);
      add("gamma_t2(H) = tau(G) + 2n", st.size(), cover.size() + 2 * n, Relation::Equal);
      const auto back = extract_solution(go, st);
      add("|extract(D_t2(H))| <= gamma_t2(H) - 2n", back.size(), st.size() - 2 * n,
          Relation::AtMost);
      break;
    }
  }
  return rep;
}

}  // namespace semitotal
