#pragma once

#include <algorithm>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "flowsg/errors.hpp"

namespace flowsg {

namespace detail {

inline int find_label(const std::vector<std::string>& labels,
                      const std::string& s) {
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == s) return static_cast<int>(i);
  return -1;
}

}  // namespace detail

// Simple digraph: string-labelled vertices, loop-free directed edge set.
// Vertices are addressed by dense index in declaration order.
class Digraph {
 public:
  Digraph() = default;

  Digraph(std::vector<std::string> labels,
          std::vector<std::pair<int, int>> edges)
      : labels_(std::move(labels)) {
    {
      std::set<std::string> seen(labels_.begin(), labels_.end());
      if (seen.size() != labels_.size())
        throw std::invalid_argument("duplicate vertex label");
    }
    out_.assign(labels_.size(), {});
    in_.assign(labels_.size(), {});
    std::sort(edges.begin(), edges.end());
    for (auto [u, v] : edges) {
      check_vertex(u);
      check_vertex(v);
      if (u == v) throw std::invalid_argument("loop edge");
      if (!edges_.empty() && edges_.back() == std::make_pair(u, v))
        throw std::invalid_argument("duplicate edge");
      edges_.emplace_back(u, v);
      out_[u].push_back(v);
      in_[v].push_back(u);
    }
  }

  // Vertices 0..n-1 labelled by their decimal index.
  static Digraph from_edges(int n, std::vector<std::pair<int, int>> edges) {
    std::vector<std::string> labels(n);
    for (int i = 0; i < n; ++i) labels[i] = std::to_string(i);
    return Digraph(std::move(labels), std::move(edges));
  }

  int n() const { return static_cast<int>(labels_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int v) const { return labels_[v]; }

  int index_of(const std::string& s) const {
    int i = detail::find_label(labels_, s);
    if (i < 0) throw std::invalid_argument("unknown vertex: " + s);
    return i;
  }

  bool has_edge(int u, int v) const {
    return std::binary_search(edges_.begin(), edges_.end(),
                              std::make_pair(u, v));
  }

  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<int>& out(int u) const { return out_[u]; }
  const std::vector<int>& in(int u) const { return in_[u]; }

 private:
  void check_vertex(int v) const {
    if (v < 0 || v >= n()) throw std::invalid_argument("undeclared vertex");
  }

  std::vector<std::string> labels_;
  std::vector<std::pair<int, int>> edges_;  // sorted
  std::vector<std::vector<int>> out_, in_;
};

// Simple undirected graph. Edges are stored as index pairs (u, v) with u < v.
class Graph {
 public:
  Graph() = default;

  Graph(std::vector<std::string> labels,
        std::vector<std::pair<int, int>> edges)
      : labels_(std::move(labels)) {
    {
      std::set<std::string> seen(labels_.begin(), labels_.end());
      if (seen.size() != labels_.size())
        throw std::invalid_argument("duplicate vertex label");
    }
    adj_.assign(labels_.size(), {});
    for (auto& [u, v] : edges) {
      if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    for (auto [u, v] : edges) {
      check_vertex(u);
      check_vertex(v);
      if (u == v) throw std::invalid_argument("loop edge");
      if (!edges_.empty() && edges_.back() == std::make_pair(u, v))
        throw std::invalid_argument("duplicate edge");
      edges_.emplace_back(u, v);
      adj_[u].push_back(v);
      adj_[v].push_back(u);
    }
  }

  static Graph from_edges(int n, std::vector<std::pair<int, int>> edges) {
    std::vector<std::string> labels(n);
    for (int i = 0; i < n; ++i) labels[i] = std::to_string(i);
    return Graph(std::move(labels), std::move(edges));
  }

  int n() const { return static_cast<int>(labels_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int v) const { return labels_[v]; }

  int index_of(const std::string& s) const {
    int i = detail::find_label(labels_, s);
    if (i < 0) throw std::invalid_argument("unknown vertex: " + s);
    return i;
  }

  bool has_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    return std::binary_search(edges_.begin(), edges_.end(),
                              std::make_pair(u, v));
  }

  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int u) const { return adj_[u]; }
  int degree(int u) const { return static_cast<int>(adj_[u].size()); }

  // Induced subgraph on `verts` (parent indices, any order); labels carry over.
  Graph induced(std::vector<int> verts) const {
    std::sort(verts.begin(), verts.end());
    std::vector<int> to_sub(n(), -1);
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < verts.size(); ++i) {
      to_sub[verts[i]] = static_cast<int>(i);
      labels.push_back(labels_[verts[i]]);
    }
    std::vector<std::pair<int, int>> es;
    for (auto [u, v] : edges_)
      if (to_sub[u] >= 0 && to_sub[v] >= 0)
        es.emplace_back(to_sub[u], to_sub[v]);
    return Graph(std::move(labels), std::move(es));
  }

  // Permute labels: vertex i of the result is vertex perm[i] of *this.
  Graph relabeled(const std::vector<int>& perm) const {
    std::vector<int> inv(n());
    for (int i = 0; i < n(); ++i) inv[perm[i]] = i;
    std::vector<std::string> labels(n());
    for (int i = 0; i < n(); ++i) labels[i] = labels_[perm[i]];
    std::vector<std::pair<int, int>> es;
    for (auto [u, v] : edges_) es.emplace_back(inv[u], inv[v]);
    return Graph(std::move(labels), std::move(es));
  }

 private:
  void check_vertex(int v) const {
    if (v < 0 || v >= n()) throw std::invalid_argument("undeclared vertex");
  }

  std::vector<std::string> labels_;
  std::vector<std::pair<int, int>> edges_;  // sorted, u < v
  std::vector<std::vector<int>> adj_;
};

// uv is an edge of the result iff uv or vu is a directed edge of `d`.
inline Graph forget_directions(const Digraph& d) {
  std::set<std::pair<int, int>> es;
  for (auto [u, v] : d.edges())
    es.insert({std::min(u, v), std::max(u, v)});
  return Graph(d.labels(), {es.begin(), es.end()});
}

// Edge-list text format:
//   line 1: "graph" or "digraph"
//   "u v"  declares an edge (and implicitly its endpoints)
//   "vertices: a b c"  declares (possibly isolated) vertices
//   blank lines and lines starting with '#' are ignored
inline std::variant<Graph, Digraph> parse_edge_list(std::string_view text) {
  std::vector<std::string> labels;
  std::vector<std::pair<std::string, std::string>> label_edges;
  auto intern = [&](const std::string& s) {
    int i = detail::find_label(labels, s);
    if (i >= 0) return i;
    labels.push_back(s);
    return static_cast<int>(labels.size()) - 1;
  };

  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  bool directed = false, have_header = false;
  std::vector<std::pair<int, int>> edges;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first) || first[0] == '#') continue;
    if (!have_header) {
      if (first == "graph")
        directed = false;
      else if (first == "digraph")
        directed = true;
      else
        throw parse_error("expected 'graph' or 'digraph' header", lineno);
      std::string rest;
      if (ls >> rest) throw parse_error("trailing tokens after header", lineno);
      have_header = true;
      continue;
    }
    if (first == "vertices:") {
      std::string v;
      while (ls >> v) intern(v);
      continue;
    }
    std::string second, extra;
    if (!(ls >> second) || (ls >> extra))
      throw parse_error("expected 'u v'", lineno);
    int u = intern(first), v = intern(second);
    if (u == v) throw parse_error("loop edge '" + first + "'", lineno);
    std::pair<int, int> e =
        directed ? std::make_pair(u, v)
                 : std::make_pair(std::min(u, v), std::max(u, v));
    if (std::find(edges.begin(), edges.end(), e) != edges.end())
      throw parse_error("duplicate edge '" + first + " " + second + "'",
                        lineno);
    edges.push_back(e);
  }
  if (!have_header) throw parse_error("empty input", lineno);
  if (directed) return Digraph(std::move(labels), std::move(edges));
  return Graph(std::move(labels), std::move(edges));
}

}  // namespace flowsg
