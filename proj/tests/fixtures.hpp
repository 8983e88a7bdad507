#pragma once

// Shared graph fixtures for the test suites.

#include <random>
#include <vector>

#include "flowsg/flowsg.hpp"

namespace fixtures {

using flowsg::Digraph;
using flowsg::Graph;

inline Graph cycle(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
  return Graph::from_edges(n, e);
}

inline Graph path(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  return Graph::from_edges(n, e);
}

inline Graph complete(int n) {
  std::vector<std::pair<int, int>> e;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) e.push_back({a, b});
  return Graph::from_edges(n, e);
}

// star with `leaves` leaves; vertex 0 is the center
inline Graph star(int leaves) {
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i <= leaves; ++i) e.push_back({0, i});
  return Graph::from_edges(leaves + 1, e);
}

inline Graph complete_bipartite(int a, int b) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) e.push_back({i, a + j});
  return Graph::from_edges(a + b, e);
}

// triangles {u,v,w} and {w,x,y} sharing the cut vertex w = 2
inline Graph bowtie() {
  return Graph({"u", "v", "w", "x", "y"},
               {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}});
}

// two triangles joined by a path with `interior` inner vertices:
// {0,1,2} - 2,3,...,  - {t,t+1,t+2}
inline Graph two_triangles(int interior) {
  std::vector<std::pair<int, int>> e{{0, 1}, {1, 2}, {2, 0}};
  int cur = 2;
  for (int i = 0; i < interior + 1; ++i) {
    e.push_back({cur, cur + 1});
    ++cur;
  }
  int a = cur, b = cur + 1, c = cur + 2;
  e.push_back({a, b});
  e.push_back({b, c});
  e.push_back({c, a});
  return Graph::from_edges(c + 1, e);
}

// two vertices of degree 3: 2 and 3, joined by edge; leaves 0,1 on 2 and
// 4,5 on 3
inline Graph h_tree() {
  return Graph::from_edges(6, {{0, 2}, {1, 2}, {2, 3}, {3, 4}, {3, 5}});
}

// triangle {0,1,2} with a tail 2-3-4-...
inline Graph triangle_tail(int tail) {
  std::vector<std::pair<int, int>> e{{0, 1}, {1, 2}, {2, 0}};
  for (int i = 0; i < tail; ++i) e.push_back({2 + i, 3 + i});
  return Graph::from_edges(3 + tail, e);
}

// triangular prism: triangles {0,1,2}, {3,4,5} plus matching i - i+3
inline Graph prism() {
  return Graph::from_edges(
      6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {1, 4},
          {2, 5}});
}

// wheel: cycle 1..n-1 plus hub 0
inline Graph wheel(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i < n; ++i) {
    e.push_back({i, i == n - 1 ? 1 : i + 1});
    e.push_back({0, i});
  }
  return Graph::from_edges(n, e);
}

inline Digraph directed_cycle(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
  return Digraph::from_edges(n, e);
}

// all connected labeled graphs on n vertices, by edge-subset enumeration
inline std::vector<Graph> all_connected_graphs(int n) {
  std::vector<std::pair<int, int>> all_edges;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) all_edges.push_back({a, b});
  std::vector<Graph> out;
  for (unsigned mask = 0; mask < (1u << all_edges.size()); ++mask) {
    std::vector<std::pair<int, int>> e;
    for (std::size_t i = 0; i < all_edges.size(); ++i)
      if (mask >> i & 1) e.push_back(all_edges[i]);
    Graph g = Graph::from_edges(n, e);
    if (flowsg::is_connected(g)) out.push_back(std::move(g));
  }
  return out;
}

inline Graph random_connected_graph(std::mt19937& rng, int n) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  while (true) {
    std::vector<std::pair<int, int>> e;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (coin(rng) < 0.45) e.push_back({a, b});
    Graph g = Graph::from_edges(n, e);
    if (flowsg::is_connected(g)) return g;
  }
}

inline Digraph random_digraph(std::mt19937& rng, int n, double p = 0.45) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::vector<std::pair<int, int>> e;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a != b && coin(rng) < p) e.push_back({a, b});
  return Digraph::from_edges(n, e);
}

}  // namespace fixtures
