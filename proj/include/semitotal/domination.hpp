#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "semitotal/error.hpp"
#include "semitotal/graph.hpp"

namespace semitotal {

enum class DominationKind { Dominating, Total, Semitotal };

inline std::string_view to_string(DominationKind kind) {
  switch (kind) {
    case DominationKind::Dominating: return "dom";
    case DominationKind::Total: return "total";
    case DominationKind::Semitotal: return "semitotal";
  }
  return "?";
}

enum class ViolationReason { Undominated, NoPartnerWithin2, NotTotallyDominated };

inline std::string_view to_string(ViolationReason reason) {
  switch (reason) {
    case ViolationReason::Undominated: return "UNDOMINATED";
    case ViolationReason::NoPartnerWithin2: return "NO_PARTNER_WITHIN_2";
    case ViolationReason::NotTotallyDominated: return "NOT_TOTALLY_DOMINATED";
  }
  return "?";
}

struct Violation {
  Vertex vertex;
  ViolationReason reason;

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct VerificationReport {
  bool valid = true;
  std::vector<Violation> violations;  // ordered by vertex id
};

/// Checks `s` against the chosen domination condition and lists every
/// failing vertex.
inline VerificationReport verify(const Graph& g, const VertexSet& s, DominationKind kind) {
  for (Vertex v : s) g.check_vertex(v);

  std::vector<bool> in_set(g.order(), false);
  for (Vertex v : s) in_set[v] = true;

  VerificationReport report;
  for (Vertex v = 0; v < g.order(); ++v) {
    bool has_neighbor_in_s = false;
    for (Vertex w : g.neighbors(v)) {
      if (in_set[w]) {
        has_neighbor_in_s = true;
        break;
      }
    }
    switch (kind) {
      case DominationKind::Dominating:
        if (!in_set[v] && !has_neighbor_in_s)
          report.violations.push_back({v, ViolationReason::Undominated});
        break;
      case DominationKind::Total:
        if (!has_neighbor_in_s)
          report.violations.push_back({v, ViolationReason::NotTotallyDominated});
        break;
      case DominationKind::Semitotal: {
        if (!in_set[v] && !has_neighbor_in_s) {
          report.violations.push_back({v, ViolationReason::Undominated});
          break;
        }
        if (!in_set[v]) break;
        bool partner = has_neighbor_in_s;
        if (!partner) {
          auto dist = bfs_distances(g, v, 2);
          for (Vertex w : s)
            if (w != v && dist[w] <= 2) {
              partner = true;
              break;
            }
        }
        if (!partner) report.violations.push_back({v, ViolationReason::NoPartnerWithin2});
        break;
      }
    }
  }
  report.valid = report.violations.empty();
  return report;
}

inline bool is_dominating_set(const Graph& g, const VertexSet& s) {
  return verify(g, s, DominationKind::Dominating).valid;
}

inline bool is_vertex_cover(const Graph& g, const VertexSet& s) {
  for (const Edge& e : g.edges())
    if (!s.contains(e.u) && !s.contains(e.v)) return false;
  return true;
}

namespace detail {

using Mask = std::uint64_t;

inline constexpr std::size_t kOracleMaxVertices = 64;

inline Mask bit(std::size_t i) { return Mask{1} << i; }

/// Exhaustive hitting-set search: find a minimum S ⊆ {0..n-1} such that S
/// meets every requirement mask, optionally also asking every member u of S
/// to share S with `partner[u]`.
///
/// Sets are produced cardinality-first, then lexicographically: members are
/// decided in index order with "include" tried before "exclude", so the
/// first hit at size k is the lexicographically smallest one.
class HittingSearch {
 public:
  HittingSearch(std::size_t n, std::vector<Mask> requirements, std::vector<Mask> partner)
      : n_(n), requirements_(std::move(requirements)), partner_(std::move(partner)) {
    const std::size_t r = requirements_.size();
    all_required_ = r == 64 ? ~Mask{0} : bit(r) - 1;
    hits_.assign(n_, 0);
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t u = 0; u < n_; ++u)
        if (requirements_[j] & bit(u)) hits_[u] |= bit(j);

    // closed_at_[i]: requirements whose candidates all have index < i.
    closed_at_.assign(n_ + 1, 0);
    partner_closed_at_.assign(n_ + 1, 0);
    for (std::size_t i = 0; i <= n_; ++i) {
      Mask below = i == 64 ? ~Mask{0} : bit(i) - 1;
      for (std::size_t j = 0; j < r; ++j)
        if ((requirements_[j] & ~below) == 0) closed_at_[i] |= bit(j);
      if (!partner_.empty())
        for (std::size_t u = 0; u < n_; ++u)
          if ((partner_[u] & ~below) == 0) partner_closed_at_[i] |= bit(u);
    }
    best_gain_from_.assign(n_ + 1, 0);
    for (std::size_t i = n_; i-- > 0;)
      best_gain_from_[i] =
          std::max<std::size_t>(best_gain_from_[i + 1], std::popcount(hits_[i]));
  }

  std::optional<Mask> find(std::size_t k) {
    k_ = k;
    found_.reset();
    descend(0, 0, 0, 0);
    return found_;
  }

 private:
  bool descend(std::size_t i, Mask chosen, std::size_t count, Mask covered) {
    if ((closed_at_[i] & ~covered) != 0) return false;
    if (!partner_.empty()) {
      for (Mask m = chosen & partner_closed_at_[i]; m != 0; m &= m - 1) {
        std::size_t u = static_cast<std::size_t>(std::countr_zero(m));
        if ((partner_[u] & chosen) == 0) return false;
      }
    }
    if (count == k_) {
      if (covered != all_required_) return false;
      if (!partner_.empty()) {
        for (Mask m = chosen; m != 0; m &= m - 1) {
          std::size_t u = static_cast<std::size_t>(std::countr_zero(m));
          if ((partner_[u] & chosen) == 0) return false;
        }
      }
      found_ = chosen;
      return true;
    }
    if (i == n_) return false;
    const std::size_t slots = k_ - count;
    if (n_ - i < slots) return false;
    const std::size_t missing = static_cast<std::size_t>(std::popcount(all_required_ & ~covered));
    if (missing > slots * best_gain_from_[i]) return false;

    if (descend(i + 1, chosen | bit(i), count + 1, covered | hits_[i])) return true;
    return descend(i + 1, chosen, count, covered);
  }

  std::size_t n_;
  std::vector<Mask> requirements_;
  std::vector<Mask> partner_;
  Mask all_required_ = 0;
  std::vector<Mask> hits_;
  std::vector<Mask> closed_at_;
  std::vector<Mask> partner_closed_at_;
  std::vector<std::size_t> best_gain_from_;
  std::size_t k_ = 0;
  std::optional<Mask> found_;
};

inline VertexSet to_vertex_set(Mask m) {
  std::vector<Vertex> ids;
  for (; m != 0; m &= m - 1) ids.push_back(static_cast<Vertex>(std::countr_zero(m)));
  return VertexSet(std::move(ids));
}

inline void check_oracle_size(const Graph& g) {
  require(g.order() <= kOracleMaxVertices, Errc::SizeCapExceeded,
          "exact oracle handles at most " + std::to_string(kOracleMaxVertices) +
              " vertices, got " + std::to_string(g.order()));
}

}  // namespace detail

/// Minimum-cardinality set of the given kind; among optimal sets the
/// lexicographically smallest one is returned.
///
/// Throws Infeasible for TOTAL/SEMITOTAL on graphs with an isolated vertex.
/// Intended for small instances (at most 64 vertices, practical to ~24).
inline VertexSet exact_min(const Graph& g, DominationKind kind) {
  using detail::bit;
  using detail::Mask;
  require(g.order() > 0, Errc::InvalidInput, "exact_min needs a nonempty graph");
  detail::check_oracle_size(g);
  if (kind != DominationKind::Dominating)
    require(!has_isolated_vertex(g), Errc::Infeasible,
            std::string(to_string(kind)) + " domination impossible: graph has an isolated vertex");

  const std::size_t n = g.order();
  std::vector<Mask> requirements(n, 0);
  std::vector<Mask> partner;
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex w : g.neighbors(v)) requirements[v] |= bit(w);
    if (kind != DominationKind::Total) requirements[v] |= bit(v);
  }
  if (kind == DominationKind::Semitotal) {
    partner.assign(n, 0);
    for (Vertex v = 0; v < n; ++v) {
      auto dist = bfs_distances(g, v, 2);
      for (Vertex w = 0; w < n; ++w)
        if (w != v && dist[w] <= 2) partner[v] |= bit(w);
    }
  }

  detail::HittingSearch search(n, std::move(requirements), std::move(partner));
  const std::size_t start = kind == DominationKind::Dominating ? 1 : 2;
  for (std::size_t k = start; k <= n; ++k)
    if (auto hit = search.find(k)) return detail::to_vertex_set(*hit);
  fail(Errc::Infeasible, "no " + std::string(to_string(kind)) + " dominating set exists");
}

/// Minimum vertex cover by the same exhaustive search (lexicographic tie-break).
inline VertexSet exact_vertex_cover(const Graph& g) {
  using detail::bit;
  using detail::Mask;
  detail::check_oracle_size(g);
  require(g.size() <= 64, Errc::SizeCapExceeded, "vertex-cover oracle handles at most 64 edges");
  if (g.size() == 0) return {};
  std::vector<Mask> requirements;
  for (const Edge& e : g.edges()) requirements.push_back(bit(e.u) | bit(e.v));
  detail::HittingSearch search(g.order(), std::move(requirements), {});
  for (std::size_t k = 1; k <= g.order(); ++k)
    if (auto hit = search.find(k)) return detail::to_vertex_set(*hit);
  fail(Errc::Internal, "vertex cover search failed");
}

}  // namespace semitotal
