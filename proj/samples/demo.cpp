// Walks through the main entry points on small instances.

#include <iostream>

#include "semitotal/semitotal.hpp"

using namespace semitotal;

namespace {

void print(const char* label, const VertexSet& s) {
  std::cout << label << " (" << s.size() << "):";
  for (Vertex v : s) std::cout << ' ' << v;
  std::cout << '\n';
}

}  // namespace

int main() {
  IntervalModel p5{{{1, 4}, {3, 8}, {5, 12}, {9, 14}, {13, 16}}};
  print("interval solver, P5 model", solve_interval(p5));

  Graph c4 = gen_named(Family::Cycle, 4);
  print("exact semitotal, C4", exact_min(c4, DominationKind::Semitotal));
  print("approximation, C4", approx_semitotal(c4));

  auto go = build_gadget(c4, GadgetKind::Bipartite);
  std::cout << "bipartite gadget of C4: " << go.h.order() << " vertices, " << go.h.size()
            << " edges\n";
  auto lifted = extend_solution(go, VertexSet{0, 2});
  print("lifted dominating set", lifted);
  print("mapped back", extract_solution(go, lifted));

  auto report = check_reduction(c4, GadgetKind::Bipartite);
  for (const auto& c : report.checks)
    std::cout << "  " << c.identity << ": " << c.lhs << " vs " << c.rhs
              << (c.holds ? "  ok" : "  FAILED") << '\n';
  return report.holds() ? 0 : 1;
}
