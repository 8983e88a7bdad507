#pragma once

#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "flowsg/decompose.hpp"
#include "flowsg/group.hpp"

namespace flowsg {

// A subgraph whose defect k group is the full symmetric group on its
// non-defect vertices and which is inextensible among such subgraphs.
struct MaximalKSubgraph {
  std::vector<int> vertices;  // sorted
  bool nontrivial = false;    // has a vertex with >= 3 neighbors inside
  int k = 0;
};

struct EvidencePart {
  std::vector<int> vertices;
  std::string rule;
};

// Result of a structural defect analysis: the symbolic group plus the
// per-part provenance. `descriptor.factors[i]` corresponds to
// `evidence[i]`.
struct DefectAnalysis {
  int k = 0;
  GroupDescriptor descriptor;
  std::vector<EvidencePart> evidence;
};

// Defect 1 classification: one factor per 2-vertex connected component.
// Per block of m vertices: single edge -> trivial; cycle -> Z_{m-1};
// the exceptional graph -> PGL2(5); otherwise A_{m-1} if bipartite,
// S_{m-1} if not.
inline DefectAnalysis defect1_structure(const Graph& g) {
  if (g.n() < 2) throw std::invalid_argument("need at least 2 vertices");
  require_connected(g);
  DefectAnalysis out;
  out.k = 1;
  for (const auto& block : biconnected_components(g).blocks) {
    int m = static_cast<int>(block.vertices.size());
    GroupFactor f;
    std::string rule;
    if (m == 2) {
      f = make_trivial(block.vertices);
      rule = "single-edge block: trivial";
    } else if (is_cycle(block.graph)) {
      f = make_cyclic(m - 1, block.vertices);
      rule = "cycle block: Z(m-1)";
    } else if (is_exceptional(block.graph)) {
      f = make_pgl25(block.vertices);
      rule = "exceptional block: PGL2(5) sharply 3-transitive on 6 points";
    } else if (is_bipartite(block.graph).bipartite) {
      f = make_alternating(m - 1, block.vertices);
      rule = "bipartite block: A(m-1)";
    } else {
      f = make_symmetric(m - 1, block.vertices);
      rule = "non-bipartite block: S(m-1)";
    }
    out.descriptor.factors.push_back(std::move(f));
    out.evidence.push_back({block.vertices, rule});
  }
  return out;
}

namespace detail {

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

// All maximal degree-2-interior cut-edge paths. Endpoints have degree 1 or
// degree >= 3; interior vertices have degree exactly 2.
inline std::vector<std::vector<int>> bridge_paths(
    const Graph& g, const std::set<std::pair<int, int>>& cut_edges) {
  std::vector<std::vector<int>> out;
  auto is_cut = [&](int a, int b) {
    return cut_edges.count({std::min(a, b), std::max(a, b)}) > 0;
  };
  for (int t = 0; t < g.n(); ++t) {
    if (g.degree(t) == 2) continue;  // not a terminal
    for (int w : g.neighbors(t)) {
      if (!is_cut(t, w)) continue;
      std::vector<int> path{t, w};
      while (g.degree(path.back()) == 2) {
        int cur = path.back(), prev = path[path.size() - 2];
        for (int x : g.neighbors(cur))
          if (x != prev) {
            path.push_back(x);
            break;
          }
      }
      // each bridge is seen from both terminals; keep one copy
      if (path.front() < path.back()) out.push_back(std::move(path));
    }
  }
  return out;
}

}  // namespace detail

// The coloring algorithm for the maximal k-subgraphs (k >= 2) of a
// connected graph that is neither a cycle nor a path:
//   (i)   color each nontrivial 2-edge connected component,
//   (ii)  give each uncolored vertex of degree >= 3 a fresh color,
//   (iii) merge colors across bridges of length <= k-1 (vertex count),
//         including bridges ending at degree-1 vertices,
//   (iv)  extend each monochromatic component by all vertices at distance
//         <= k-1: these are the nontrivial maximal k-subgraphs,
//   (v)   the trivial maximal k-subgraphs are the (k+1)-vertex paths
//         inside the remaining long bridges (length >= k).
inline std::vector<MaximalKSubgraph> maximal_k_subgraphs(const Graph& g,
                                                         int k) {
  if (k < 2) throw std::invalid_argument("k must be at least 2");
  require_connected(g);
  if (g.n() <= k) throw std::invalid_argument("graph has at most k vertices");
  if (is_cycle(g)) throw std::invalid_argument("graph is a cycle");
  if (is_path(g)) throw std::invalid_argument("graph is a path");

  auto tec = two_edge_connected_components(g);
  std::set<std::pair<int, int>> cut_edges(tec.bridge_edges.begin(),
                                          tec.bridge_edges.end());

  // (i) + (ii)
  std::vector<int> color(g.n(), -1);
  int next_color = 0;
  for (const auto& comp : tec.components) {
    if (comp.size() < 2) continue;
    for (int v : comp) color[v] = next_color;
    ++next_color;
  }
  for (int v = 0; v < g.n(); ++v)
    if (color[v] == -1 && g.degree(v) >= 3) color[v] = next_color++;

  // (iii)
  auto bridges = detail::bridge_paths(g, cut_edges);
  detail::Dsu dsu(next_color);
  std::vector<std::vector<int>> absorbed(next_color);  // recolored vertices
  std::vector<std::vector<int>> long_bridges;
  for (const auto& path : bridges) {
    int len = static_cast<int>(path.size());
    int a = path.front(), b = path.back();
    if (len > k - 1) {
      long_bridges.push_back(path);
      continue;
    }
    if (color[a] >= 0 && color[b] >= 0) {
      dsu.unite(color[a], color[b]);
      for (std::size_t i = 1; i + 1 < path.size(); ++i)
        absorbed[dsu.find(color[a])].push_back(path[i]);
    } else {
      // exactly one endpoint colored; the other has degree 1
      int c = color[a] >= 0 ? color[a] : color[b];
      for (int v : path)
        if (color[v] == -1) absorbed[dsu.find(c)].push_back(v);
    }
  }

  // collect final monochromatic components
  std::map<int, std::vector<int>> classes;
  for (int v = 0; v < g.n(); ++v)
    if (color[v] >= 0) classes[dsu.find(color[v])].push_back(v);
  for (int c = 0; c < next_color; ++c)
    for (int v : absorbed[c]) classes[dsu.find(c)].push_back(v);

  std::vector<MaximalKSubgraph> out;
  // (iv)
  for (auto& [root, verts] : classes) {
    auto dist = bfs_distances(g, verts);
    MaximalKSubgraph sub;
    sub.k = k;
    sub.nontrivial = true;
    for (int v = 0; v < g.n(); ++v)
      if (dist[v] >= 0 && dist[v] <= k - 1) sub.vertices.push_back(v);
    // a monochromatic component always reaches beyond k vertices here
    if (static_cast<int>(sub.vertices.size()) < k + 1)
      throw std::logic_error(
          "extended monochromatic component has at most k vertices");
    out.push_back(std::move(sub));
  }
  // (v)
  for (const auto& path : long_bridges) {
    int len = static_cast<int>(path.size());
    for (int j = 0; j + k < len; ++j) {
      MaximalKSubgraph sub;
      sub.k = k;
      sub.nontrivial = false;
      sub.vertices.assign(path.begin() + j, path.begin() + j + k + 1);
      std::sort(sub.vertices.begin(), sub.vertices.end());
      out.push_back(std::move(sub));
    }
  }
  return out;
}

// Defect k structure, k >= 2: a cycle contributes Z_{n-k}; otherwise the
// product over the maximal k-subgraphs of S_{n_i - k}.
inline DefectAnalysis defectk_structure(const Graph& g, int k) {
  if (k < 2) throw std::invalid_argument("k must be at least 2");
  require_connected(g);
  int n = g.n();
  if (n <= k) throw std::invalid_argument("graph has at most k vertices");

  DefectAnalysis out;
  out.k = k;
  std::vector<int> all(n);
  std::iota(all.begin(), all.end(), 0);

  if (is_cycle(g)) {
    out.descriptor.factors.push_back(make_cyclic(n - k, all));
    out.evidence.push_back({all, "cycle: Z(n-k)"});
    return out;
  }
  if (is_path(g)) {
    // (k+1)-vertex subpaths; each defect k group is trivial
    int end = -1;
    for (int v = 0; v < n; ++v)
      if (g.degree(v) <= 1) {
        end = v;
        break;
      }
    std::vector<int> order{end};
    int prev = -1, cur = end;
    while (static_cast<int>(order.size()) < n) {
      for (int w : g.neighbors(cur))
        if (w != prev) {
          order.push_back(w);
          prev = cur;
          cur = w;
          break;
        }
    }
    for (int j = 0; j + k < n; ++j) {
      std::vector<int> verts(order.begin() + j, order.begin() + j + k + 1);
      std::sort(verts.begin(), verts.end());
      out.descriptor.factors.push_back(make_trivial(verts));
      out.evidence.push_back({std::move(verts), "path segment: trivial"});
    }
    return out;
  }

  for (const auto& sub : maximal_k_subgraphs(g, k)) {
    int ni = static_cast<int>(sub.vertices.size());
    out.descriptor.factors.push_back(make_symmetric(ni - k, sub.vertices));
    out.evidence.push_back(
        {sub.vertices, sub.nontrivial
                           ? "nontrivial maximal k-subgraph: S(n_i-k)"
                           : "trivial maximal k-subgraph: S(1)"});
  }
  return out;
}

// Dispatch on k.
inline DefectAnalysis defect_structure(const Graph& g, int k) {
  return k == 1 ? defect1_structure(g) : defectk_structure(g, k);
}

// Per strongly connected component: forget directions and analyze the
// resulting connected graph with that component's defect size. Components
// absent from `k_by_scc` (and all singleton components) contribute trivial
// factors.
inline DefectAnalysis digraph_structure(const Digraph& d,
                                        const std::map<int, int>& k_by_scc) {
  auto scc = strongly_connected_components(d);
  DefectAnalysis out;
  out.k = 0;
  for (std::size_t i = 0; i < scc.components.size(); ++i) {
    const auto& comp = scc.components[i];
    auto it = k_by_scc.find(static_cast<int>(i));
    if (comp.size() == 1) {
      if (it != k_by_scc.end() && it->second != 0)
        throw std::invalid_argument(
            "singleton component admits no defect group");
      out.descriptor.factors.push_back(make_trivial(comp));
      out.evidence.push_back({comp, "singleton component: trivial"});
      continue;
    }
    if (it == k_by_scc.end())
      throw std::invalid_argument("missing defect size for a component");
    int ki = it->second;
    if (ki < 1 || ki >= static_cast<int>(comp.size()))
      throw std::invalid_argument("defect size out of range for component");
    out.k = std::max(out.k, ki);

    std::vector<std::pair<int, int>> sub_edges;
    std::vector<int> to_sub(d.n(), -1);
    for (std::size_t j = 0; j < comp.size(); ++j)
      to_sub[comp[j]] = static_cast<int>(j);
    std::vector<std::string> labels;
    for (int v : comp) labels.push_back(d.label(v));
    for (auto [u, v] : d.edges())
      if (to_sub[u] >= 0 && to_sub[v] >= 0)
        sub_edges.emplace_back(to_sub[u], to_sub[v]);
    Graph forgotten = forget_directions(
        Digraph(std::move(labels), std::move(sub_edges)));

    auto part = defect_structure(forgotten, ki);
    for (std::size_t j = 0; j < part.descriptor.factors.size(); ++j) {
      auto f = part.descriptor.factors[j];
      for (auto& v : f.support) v = comp[v];  // back to host indices
      std::vector<int> verts;
      for (int v : part.evidence[j].vertices) verts.push_back(comp[v]);
      out.descriptor.factors.push_back(std::move(f));
      out.evidence.push_back({std::move(verts),
                              "component (k=" + std::to_string(ki) +
                                  "): " + part.evidence[j].rule});
    }
  }
  return out;
}

// Least k in [1, n-1] whose structural defect k group is the full symmetric
// group S_{n-k} (as a permutation group; S_{n-k} is trivial for n-k <= 1,
// so k = n-1 always qualifies).
inline int smallest_k_full_symmetric(const Graph& g) {
  if (g.n() < 2) throw std::invalid_argument("need at least 2 vertices");
  require_connected(g);
  int n = g.n();
  for (int k = 1; k < n; ++k) {
    auto keys = descriptor_keys(defect_structure(g, k).descriptor);
    auto target = factor_key(make_symmetric(n - k));
    bool full = target ? (keys.size() == 1 && keys[0] == *target)
                       : keys.empty();
    if (full) return k;
  }
  return n - 1;  // unreachable: k = n-1 always qualifies
}

}  // namespace flowsg
