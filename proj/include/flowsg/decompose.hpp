#pragma once

#include <algorithm>
#include <array>
#include <numeric>
#include <queue>
#include <set>
#include <stack>
#include <vector>

#include "flowsg/graph.hpp"

namespace flowsg {

inline bool is_connected(const Graph& g) {
  if (g.n() == 0) return true;
  std::vector<char> seen(g.n(), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int v : g.neighbors(u))
      if (!seen[v]) {
        seen[v] = 1;
        ++count;
        stack.push_back(v);
      }
  }
  return count == g.n();
}

inline void require_connected(const Graph& g) {
  if (!is_connected(g)) throw std::invalid_argument("graph is disconnected");
}

struct SccDecomposition {
  std::vector<std::vector<int>> components;  // each sorted; reverse topological
  std::vector<int> component_of;
  std::vector<std::pair<int, int>> dag_edges;  // between component ids
};

// Tarjan's algorithm, iterative.
inline SccDecomposition strongly_connected_components(const Digraph& d) {
  int n = d.n();
  std::vector<int> index(n, -1), low(n, 0), comp(n, -1);
  std::vector<char> on_stack(n, 0);
  std::vector<int> stk;
  SccDecomposition out;
  out.component_of.assign(n, -1);
  int next_index = 0;

  struct Frame {
    int v;
    std::size_t child;
  };
  for (int root = 0; root < n; ++root) {
    if (index[root] != -1) continue;
    std::vector<Frame> call{{root, 0}};
    index[root] = low[root] = next_index++;
    stk.push_back(root);
    on_stack[root] = 1;
    while (!call.empty()) {
      auto& [v, child] = call.back();
      if (child < d.out(v).size()) {
        int w = d.out(v)[child++];
        if (index[w] == -1) {
          index[w] = low[w] = next_index++;
          stk.push_back(w);
          on_stack[w] = 1;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
      } else {
        if (low[v] == index[v]) {
          std::vector<int> scc;
          int w;
          do {
            w = stk.back();
            stk.pop_back();
            on_stack[w] = 0;
            comp[w] = static_cast<int>(out.components.size());
            scc.push_back(w);
          } while (w != v);
          std::sort(scc.begin(), scc.end());
          out.components.push_back(std::move(scc));
        }
        call.pop_back();
        if (!call.empty()) {
          int parent = call.back().v;
          low[parent] = std::min(low[parent], low[v]);
        }
      }
    }
  }
  out.component_of = comp;
  std::set<std::pair<int, int>> dag;
  for (auto [u, v] : d.edges())
    if (comp[u] != comp[v]) dag.insert({comp[u], comp[v]});
  out.dag_edges.assign(dag.begin(), dag.end());
  return out;
}

struct Block {
  std::vector<int> vertices;  // parent indices, sorted
  Graph graph;                // induced subgraph
};

struct BlockDecomposition {
  std::vector<Block> blocks;
  std::vector<int> cut_vertices;  // sorted
};

// Standard block decomposition via DFS lowpoints; single edges are blocks.
inline BlockDecomposition biconnected_components(const Graph& g) {
  require_connected(g);
  int n = g.n();
  std::vector<int> num(n, -1), low(n, 0), parent(n, -1);
  std::vector<std::pair<int, int>> edge_stack;
  std::set<int> cuts;
  BlockDecomposition out;
  int counter = 0;

  auto pop_block = [&](std::pair<int, int> until) {
    std::set<int> verts;
    while (true) {
      auto e = edge_stack.back();
      edge_stack.pop_back();
      verts.insert(e.first);
      verts.insert(e.second);
      if (e == until) break;
    }
    std::vector<int> vs(verts.begin(), verts.end());
    out.blocks.push_back({vs, g.induced(vs)});
  };

  struct Frame {
    int v;
    std::size_t child;
  };
  for (int root = 0; root < n; ++root) {
    if (num[root] != -1) continue;
    std::vector<Frame> call{{root, 0}};
    num[root] = low[root] = counter++;
    while (!call.empty()) {
      auto& fr = call.back();
      int v = fr.v;
      if (fr.child < g.neighbors(v).size()) {
        int w = g.neighbors(v)[fr.child++];
        if (num[w] == -1) {
          parent[w] = v;
          num[w] = low[w] = counter++;
          edge_stack.push_back({v, w});
          call.push_back({w, 0});
        } else if (w != parent[v] && num[w] < num[v]) {
          edge_stack.push_back({v, w});
          low[v] = std::min(low[v], num[w]);
        }
      } else {
        call.pop_back();
        if (call.empty()) continue;
        int u = call.back().v;  // parent of v
        low[u] = std::min(low[u], low[v]);
        if (low[v] >= num[u]) pop_block({u, v});
      }
    }
  }
  // cut vertices: vertices present in more than one block
  std::vector<int> block_count(n, 0);
  for (const auto& b : out.blocks)
    for (int v : b.vertices) ++block_count[v];
  for (int v = 0; v < n; ++v)
    if (block_count[v] > 1) cuts.insert(v);
  out.cut_vertices.assign(cuts.begin(), cuts.end());
  return out;
}

struct TwoEdgeDecomposition {
  std::vector<std::vector<int>> components;  // vertex classes, each sorted
  std::vector<int> component_of;
  std::vector<std::pair<int, int>> bridge_edges;  // cut edges, u < v, sorted
  std::vector<std::pair<int, int>> tree_edges;    // between component ids
};

// Cut edges by DFS lowpoint; classes are components of the graph minus them.
inline TwoEdgeDecomposition two_edge_connected_components(const Graph& g) {
  require_connected(g);
  int n = g.n();
  std::vector<int> num(n, -1), low(n, 0);
  std::vector<int> parent_edge(n, -1);
  std::set<std::pair<int, int>> cut_edges;
  int counter = 0;

  // adjacency with edge ids so parallel traversal skips only the tree edge
  std::vector<std::vector<std::pair<int, int>>> adj(n);  // (to, edge id)
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    auto [u, v] = g.edges()[i];
    adj[u].push_back({v, static_cast<int>(i)});
    adj[v].push_back({u, static_cast<int>(i)});
  }
  struct Frame {
    int v;
    std::size_t child;
  };
  for (int root = 0; root < n; ++root) {
    if (num[root] != -1) continue;
    std::vector<Frame> call{{root, 0}};
    num[root] = low[root] = counter++;
    while (!call.empty()) {
      auto& fr = call.back();
      int v = fr.v;
      if (fr.child < adj[v].size()) {
        auto [w, eid] = adj[v][fr.child++];
        if (num[w] == -1) {
          parent_edge[w] = eid;
          num[w] = low[w] = counter++;
          call.push_back({w, 0});
        } else if (eid != parent_edge[v]) {
          low[v] = std::min(low[v], num[w]);
        }
      } else {
        call.pop_back();
        if (call.empty()) continue;
        int u = call.back().v;
        low[u] = std::min(low[u], low[v]);
        if (low[v] > num[u]) {
          auto e = g.edges()[parent_edge[v]];
          cut_edges.insert(e);
        }
      }
    }
  }

  TwoEdgeDecomposition out;
  out.bridge_edges.assign(cut_edges.begin(), cut_edges.end());
  out.component_of.assign(n, -1);
  for (int s = 0; s < n; ++s) {
    if (out.component_of[s] != -1) continue;
    int id = static_cast<int>(out.components.size());
    std::vector<int> comp, stack{s};
    out.component_of[s] = id;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      comp.push_back(u);
      for (int v : g.neighbors(u)) {
        if (out.component_of[v] != -1) continue;
        if (cut_edges.count({std::min(u, v), std::max(u, v)})) continue;
        out.component_of[v] = id;
        stack.push_back(v);
      }
    }
    std::sort(comp.begin(), comp.end());
    out.components.push_back(std::move(comp));
  }
  std::set<std::pair<int, int>> tree;
  for (auto [u, v] : out.bridge_edges)
    tree.insert({std::min(out.component_of[u], out.component_of[v]),
                 std::max(out.component_of[u], out.component_of[v])});
  out.tree_edges.assign(tree.begin(), tree.end());
  return out;
}

// A bridge in the sense used here: a path whose interior vertices have
// degree 2 in the host graph and whose every edge disconnects it.
// Its length is the number of vertices on the path.
struct Bridge {
  std::vector<int> path;
  int length() const { return static_cast<int>(path.size()); }
};

inline bool edge_is_cut(const Graph& g, int u, int v) {
  auto dec = two_edge_connected_components(g);
  std::pair<int, int> e{std::min(u, v), std::max(u, v)};
  return std::binary_search(dec.bridge_edges.begin(), dec.bridge_edges.end(),
                            e);
}

// The unique longest bridge containing the cut edge uv: extend past any
// endpoint of degree 2 (its second edge is then forced to be a cut edge too).
inline Bridge maximal_bridge_through(const Graph& g, int u, int v) {
  if (!g.has_edge(u, v)) throw std::invalid_argument("not an edge");
  if (!edge_is_cut(g, u, v))
    throw std::invalid_argument("edge lies on a cycle");
  std::vector<int> path{u, v};
  auto extend = [&](bool front) {
    while (true) {
      int end = front ? path.front() : path.back();
      int inner = front ? path[1] : path[path.size() - 2];
      if (g.degree(end) != 2) return;
      int next = -1;
      for (int w : g.neighbors(end))
        if (w != inner) next = w;
      if (next == -1) return;
      if (front)
        path.insert(path.begin(), next);
      else
        path.push_back(next);
    }
  };
  extend(false);
  extend(true);
  return Bridge{std::move(path)};
}

inline bool is_cycle(const Graph& g) {
  if (g.n() < 3 || !is_connected(g)) return false;
  for (int v = 0; v < g.n(); ++v)
    if (g.degree(v) != 2) return false;
  return true;
}

inline bool is_path(const Graph& g) {
  if (!is_connected(g)) return false;
  if (g.n() == 1) return true;
  int deg1 = 0;
  for (int v = 0; v < g.n(); ++v) {
    if (g.degree(v) > 2) return false;
    if (g.degree(v) == 1) ++deg1;
  }
  return deg1 == 2;
}

struct Bipartition {
  bool bipartite = false;
  std::vector<int> side;  // 0/1 witness coloring; -1 where not applicable
};

inline Bipartition is_bipartite(const Graph& g) {
  Bipartition out;
  out.side.assign(g.n(), -1);
  for (int s = 0; s < g.n(); ++s) {
    if (out.side[s] != -1) continue;
    out.side[s] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int v : g.neighbors(u)) {
        if (out.side[v] == -1) {
          out.side[v] = 1 - out.side[u];
          q.push(v);
        } else if (out.side[v] == out.side[u]) {
          out.bipartite = false;
          return out;
        }
      }
    }
  }
  out.bipartite = true;
  return out;
}

// BFS distance from the nearest source; -1 for unreachable vertices.
inline std::vector<int> bfs_distances(const Graph& g,
                                      const std::vector<int>& sources) {
  std::vector<int> dist(g.n(), -1);
  std::queue<int> q;
  for (int s : sources) {
    if (dist[s] == -1) {
      dist[s] = 0;
      q.push(s);
    }
  }
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int v : g.neighbors(u))
      if (dist[v] == -1) {
        dist[v] = dist[u] + 1;
        q.push(v);
      }
  }
  return dist;
}

namespace detail {

// The 7-vertex, 8-edge graph whose defect 1 group is PGL2(5):
// cycle a-b-c-d-e-a plus the ear c-f-g-a.
inline const std::vector<std::pair<int, int>>& exceptional_edges() {
  static const std::vector<std::pair<int, int>> edges = {
      {0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {5, 2}, {5, 6}, {6, 0}};
  return edges;
}

}  // namespace detail

// Isomorphism against the fixed exceptional graph: degree-sequence
// prefilter, then exhaustive search over the 7! vertex bijections.
inline bool is_exceptional(const Graph& g) {
  if (g.n() != 7 || g.edge_count() != 8) return false;
  std::vector<int> degs(7);
  for (int v = 0; v < 7; ++v) degs[v] = g.degree(v);
  std::vector<int> sorted_degs = degs;
  std::sort(sorted_degs.begin(), sorted_degs.end(), std::greater<>());
  if (sorted_degs != std::vector<int>{3, 3, 2, 2, 2, 2, 2}) return false;

  const auto& target = detail::exceptional_edges();
  std::array<std::array<char, 7>, 7> tadj{};
  for (auto [u, v] : target) tadj[u][v] = tadj[v][u] = 1;
  std::vector<int> perm(7);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (auto [u, v] : g.edges())
      if (!tadj[perm[u]][perm[v]]) {
        ok = false;
        break;
      }
    if (ok) return true;  // edge counts match, so edge-injective == iso
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

inline Graph exceptional_graph() {
  return Graph({"v", "1", "2", "3", "4", "5", "6"},
               {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {5, 2}, {5, 6},
                {6, 0}});
}

}  // namespace flowsg
