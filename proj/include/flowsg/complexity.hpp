#pragma once

#include <string>
#include <vector>

#include "flowsg/structure.hpp"

namespace flowsg {

// Bounds on the Krohn-Rhodes complexity of the flow semigroup, each bound
// tagged with the rule that produced it. Only proved values are reported;
// when lower < upper the exact value is open.
struct ComplexityBounds {
  int lower = 0;
  int upper = 0;
  bool exact = false;
  std::vector<std::string> rules;
};

inline ComplexityBounds complexity_bounds(const Graph& g) {
  if (g.n() < 2) throw std::invalid_argument("need at least 2 vertices");
  require_connected(g);
  int n = g.n();
  ComplexityBounds out;
  out.upper = n - 2;
  out.rules.push_back(
      "upper: cpx <= n-2 = " + std::to_string(n - 2) +
      " (the flow semigroup embeds in that of the complete graph, whose "
      "complexity is n-2)");

  bool two_vertex_connected = biconnected_components(g).blocks.size() == 1;
  if (two_vertex_connected) {
    out.lower = n - 2;
    out.exact = true;
    out.rules.push_back("exact: 2-vertex connected graphs have cpx = n-2 = " +
                        std::to_string(n - 2));
    return out;
  }
  bool two_edge_connected =
      two_edge_connected_components(g).bridge_edges.empty();
  if (two_edge_connected) {
    out.lower = n - 3;
    out.rules.push_back(
        "lower: 2-edge connected graphs have cpx >= n-3 = " +
        std::to_string(n - 3) + "; the exact value is open for this class");
    return out;
  }
  int k = smallest_k_full_symmetric(g);
  out.lower = std::max(0, n - 1 - k);
  out.rules.push_back(
      "lower: the defect " + std::to_string(k) +
      " group is the full symmetric group, so cpx >= n-1-k = " +
      std::to_string(n - 1 - k) + "; the exact value is open");
  return out;
}

struct SccComplexity {
  std::vector<int> vertices;  // of the strongly connected component
  ComplexityBounds bounds;
};

// Each strongly connected component has the flow semigroup of its
// direction-forgotten graph; singleton components are combinatorial.
inline std::vector<SccComplexity> complexity_bounds_digraph(const Digraph& d) {
  auto scc = strongly_connected_components(d);
  std::vector<SccComplexity> out;
  for (const auto& comp : scc.components) {
    SccComplexity entry;
    entry.vertices = comp;
    if (comp.size() == 1) {
      entry.bounds.exact = true;
      entry.bounds.rules.push_back("exact: singleton component, cpx = 0");
    } else {
      std::vector<int> to_sub(d.n(), -1);
      for (std::size_t j = 0; j < comp.size(); ++j)
        to_sub[comp[j]] = static_cast<int>(j);
      std::vector<std::string> labels;
      for (int v : comp) labels.push_back(d.label(v));
      std::vector<std::pair<int, int>> sub_edges;
      for (auto [u, v] : d.edges())
        if (to_sub[u] >= 0 && to_sub[v] >= 0)
          sub_edges.emplace_back(to_sub[u], to_sub[v]);
      entry.bounds = complexity_bounds(forget_directions(
          Digraph(std::move(labels), std::move(sub_edges))));
    }
    out.push_back(std::move(entry));
  }
  return out;
}

inline std::string render_complexity(const ComplexityBounds& b) {
  if (b.exact) return "cpx = " + std::to_string(b.lower) + " (exact)";
  return "cpx in [" + std::to_string(b.lower) + ", " +
         std::to_string(b.upper) + "] (exact value open)";
}

}  // namespace flowsg
