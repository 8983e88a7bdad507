#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <queue>
#include <span>
#include <unordered_set>
#include <vector>

#include "flowsg/decompose.hpp"
#include "flowsg/errors.hpp"
#include "flowsg/transform.hpp"

namespace flowsg {

// Covers 7^7 = 823543, the worst case for n = 7, with headroom.
inline constexpr std::size_t kDefaultClosureCap = 2'000'000;

// Arena-backed set of transformations on a fixed vertex set. Elements are
// addressed by insertion index; the element set itself is order-independent.
class TransformationSet {
 public:
  explicit TransformationSet(int n)
      : n_(n),
        arena_(std::make_unique<std::vector<std::uint8_t>>()),
        table_(16, Hash{arena_.get(), n}, Eq{arena_.get(), n}) {}

  int n() const { return n_; }
  std::size_t size() const { return count_; }

  // Returns true if the element was new.
  bool insert(std::span<const std::uint8_t> img) {
    arena_->insert(arena_->end(), img.begin(), img.end());
    auto [it, fresh] = table_.insert(static_cast<std::uint32_t>(count_));
    if (!fresh) {
      arena_->resize(arena_->size() - n_);
      return false;
    }
    ++count_;
    return true;
  }

  bool insert(const Transformation& t) {
    return insert(std::span<const std::uint8_t>(t.data()));
  }

  bool contains(const Transformation& t) const {
    if (t.size() != n_) return false;
    return table_.find(Probe{t.data().data()}) != table_.end();
  }

  std::span<const std::uint8_t> at(std::size_t i) const {
    return {arena_->data() + i * n_, static_cast<std::size_t>(n_)};
  }

  Transformation get(std::size_t i) const {
    auto s = at(i);
    return Transformation(std::vector<std::uint8_t>(s.begin(), s.end()));
  }

  std::vector<Transformation> to_vector_sorted() const {
    std::vector<Transformation> v;
    v.reserve(count_);
    for (std::size_t i = 0; i < count_; ++i) v.push_back(get(i));
    std::sort(v.begin(), v.end());
    return v;
  }

 private:
  // Hash/Eq read element bytes out of the arena vector, whose heap address
  // is stable across moves of the owning set. Probe keys allow lookups
  // without inserting.
  struct Probe {
    const std::uint8_t* p;
  };
  struct Hash {
    using is_transparent = void;
    const std::vector<std::uint8_t>* arena;
    int n;
    std::size_t bytes(const std::uint8_t* p) const {
      std::uint64_t h = 1469598103934665603ull;
      for (int j = 0; j < n; ++j) {
        h ^= p[j];
        h *= 1099511628211ull;
      }
      return static_cast<std::size_t>(h);
    }
    std::size_t operator()(std::uint32_t i) const {
      return bytes(arena->data() + std::size_t(i) * n);
    }
    std::size_t operator()(const Probe& pr) const { return bytes(pr.p); }
  };
  struct Eq {
    using is_transparent = void;
    const std::vector<std::uint8_t>* arena;
    int n;
    const std::uint8_t* at(std::uint32_t i) const {
      return arena->data() + std::size_t(i) * n;
    }
    bool operator()(std::uint32_t a, std::uint32_t b) const {
      return std::equal(at(a), at(a) + n, at(b));
    }
    bool operator()(const Probe& p, std::uint32_t b) const {
      return std::equal(p.p, p.p + n, at(b));
    }
    bool operator()(std::uint32_t b, const Probe& p) const {
      return std::equal(p.p, p.p + n, at(b));
    }
  };

  int n_;
  std::size_t count_ = 0;
  std::unique_ptr<std::vector<std::uint8_t>> arena_;  // stable across moves
  std::unordered_set<std::uint32_t, Hash, Eq> table_;
};

// Closure of `generators` under composition: worklist breadth-first
// products, right-multiplying by generators only. Throws cap_exceeded if
// the element count would pass `cap`.
inline TransformationSet semigroup_closure(
    const std::vector<Transformation>& generators,
    std::size_t cap = kDefaultClosureCap) {
  if (generators.empty()) return TransformationSet(0);
  int n = generators[0].size();
  for (const auto& g : generators)
    if (g.size() != n)
      throw std::invalid_argument("generators on different vertex sets");
  TransformationSet s(n);
  for (const auto& g : generators) {
    s.insert(g);
    if (s.size() > cap) throw cap_exceeded(cap);
  }
  std::vector<std::uint8_t> scratch(n);
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (const auto& g : generators) {
      auto cur = s.at(i);
      for (int x = 0; x < n; ++x) scratch[x] = g[cur[x]];
      if (s.insert(std::span<const std::uint8_t>(scratch)) && s.size() > cap)
        throw cap_exceeded(cap);
    }
  }
  return s;
}

// One elementary collapsing per directed edge; an undirected edge is
// directed both ways.
inline std::vector<Transformation> flow_generators(const Graph& g) {
  std::vector<Transformation> gens;
  for (auto [u, v] : g.edges()) {
    gens.push_back(detail::collapsing(g.n(), u, v));
    gens.push_back(detail::collapsing(g.n(), v, u));
  }
  return gens;
}

inline std::vector<Transformation> flow_generators(const Digraph& d) {
  std::vector<Transformation> gens;
  for (auto [u, v] : d.edges())
    gens.push_back(detail::collapsing(d.n(), u, v));
  return gens;
}

inline TransformationSet flow_semigroup(const Graph& g,
                                        std::size_t cap = kDefaultClosureCap) {
  return semigroup_closure(flow_generators(g), cap);
}

inline TransformationSet flow_semigroup(const Digraph& d,
                                        std::size_t cap = kDefaultClosureCap) {
  return semigroup_closure(flow_generators(d), cap);
}

// Explicitly enumerated permutation group on a point subset of a host
// vertex set. Elements act on positions 0..points.size()-1.
struct ConcreteGroup {
  std::vector<int> points;  // host vertex indices, ascending
  std::vector<Transformation> elements;    // sorted, contains the identity
  std::vector<Transformation> generators;  // sorted, deduplicated

  std::uint64_t order() const { return elements.size(); }
};

// Close a permutation set under composition (with the identity adjoined).
inline std::vector<Transformation> close_permutations(
    int degree, const std::vector<Transformation>& gens) {
  std::set<Transformation> group{Transformation::identity(degree)};
  std::vector<Transformation> work(group.begin(), group.end());
  for (const auto& g : gens)
    if (group.insert(g).second) work.push_back(g);
  while (!work.empty()) {
    Transformation a = work.back();
    work.pop_back();
    for (const auto& g : gens) {
      Transformation ag = a.then(g);
      if (group.insert(ag).second) work.push_back(ag);
    }
  }
  return {group.begin(), group.end()};
}

// G_{k,V_k}: restrictions to V \ V_k of the semigroup elements that permute
// V \ V_k and push V_k into it, closed under composition.
inline ConcreteGroup defect_group_from_closure(const TransformationSet& s,
                                               const std::vector<int>& defect,
                                               int n) {
  if (defect.empty() || static_cast<int>(defect.size()) >= n)
    throw std::invalid_argument("defect set size must be in [1, n-1]");
  std::vector<char> in_defect(n, 0);
  for (int d : defect) {
    if (d < 0 || d >= n) throw std::invalid_argument("bad defect vertex");
    if (in_defect[d]) throw std::invalid_argument("repeated defect vertex");
    in_defect[d] = 1;
  }
  std::vector<int> points;
  std::vector<int> pos(n, -1);
  for (int v = 0; v < n; ++v)
    if (!in_defect[v]) {
      pos[v] = static_cast<int>(points.size());
      points.push_back(v);
    }
  int p = static_cast<int>(points.size());

  std::set<Transformation> gens;
  std::vector<std::uint8_t> img(p);
  for (std::size_t i = 0; i < s.size(); ++i) {
    auto t = s.at(i);
    bool ok = true;
    std::uint64_t seen = 0;
    for (int j = 0; j < p && ok; ++j) {
      int y = t[points[j]];
      if (in_defect[y] || (seen >> pos[y]) & 1)
        ok = false;
      else {
        seen |= std::uint64_t{1} << pos[y];
        img[j] = static_cast<std::uint8_t>(pos[y]);
      }
    }
    for (int d : defect)
      if (ok && in_defect[t[d]]) ok = false;
    if (ok) gens.insert(Transformation(img));
  }

  ConcreteGroup g;
  g.points = points;
  g.generators.assign(gens.begin(), gens.end());
  g.elements = close_permutations(p, g.generators);
  return g;
}

inline ConcreteGroup defect_group_oracle(const Graph& g,
                                         const std::vector<int>& defect,
                                         std::size_t cap = kDefaultClosureCap) {
  require_connected(g);
  return defect_group_from_closure(flow_semigroup(g, cap), defect, g.n());
}

inline ConcreteGroup defect_group_oracle(const Digraph& d,
                                         const std::vector<int>& defect,
                                         std::size_t cap = kDefaultClosureCap) {
  return defect_group_from_closure(flow_semigroup(d, cap), defect, d.n());
}

struct MembershipResult {
  bool member = false;
  // Set when membership holds via the reversed-edge-on-a-cycle clause:
  // a word evaluating to e_ab built along a directed cycle through b->a.
  std::optional<CollapsingWord> witness;
};

// e_ab lies in the flow semigroup iff a->b is an edge, or b->a is an edge
// lying on a directed cycle (equivalently, b->a is an edge and b is
// reachable from a). In the latter case the witness word is
// (e_ba e_{u_{q-1}b} ... e_{u_1 u_2} e_{a u_1})^q for a shortest directed
// path a -> u_1 -> ... -> u_{q-1} -> b of q edges.
inline MembershipResult collapsing_membership(const Digraph& d, int a, int b) {
  if (a < 0 || a >= d.n() || b < 0 || b >= d.n())
    throw std::invalid_argument("unknown vertex");
  if (a == b) throw std::invalid_argument("vertices must differ");
  if (d.has_edge(a, b)) return {true, std::nullopt};
  if (!d.has_edge(b, a)) return {false, std::nullopt};

  std::vector<int> prev(d.n(), -2);
  std::queue<int> q;
  prev[a] = -1;
  q.push(a);
  while (!q.empty() && prev[b] == -2) {
    int x = q.front();
    q.pop();
    for (int y : d.out(x))
      if (prev[y] == -2) {
        prev[y] = x;
        q.push(y);
      }
  }
  if (prev[b] == -2) return {false, std::nullopt};

  std::vector<int> chain;  // a, u_1, ..., u_{q-1}, b
  for (int x = b; x != -1; x = prev[x]) chain.push_back(x);
  std::reverse(chain.begin(), chain.end());
  int q_edges = static_cast<int>(chain.size()) - 1;

  CollapsingWord w;
  std::vector<std::pair<int, int>> block{{b, a}};
  for (int j = q_edges - 1; j >= 0; --j)
    block.emplace_back(chain[j], chain[j + 1]);
  for (int rep = 0; rep < q_edges; ++rep)
    w.letters.insert(w.letters.end(), block.begin(), block.end());
  return {true, std::move(w)};
}

namespace detail {

// Cycle order of a graph that is a single cycle, starting anywhere.
inline std::vector<int> cycle_order(const Graph& g) {
  std::vector<int> order{0};
  int prev = -1, cur = 0;
  while (static_cast<int>(order.size()) < g.n()) {
    int next = -1;
    for (int w : g.neighbors(cur))
      if (w != prev) next = w;
    order.push_back(next);
    prev = cur;
    cur = next;
  }
  return order;
}

}  // namespace detail

// For the n-cycle with a contiguous defect arc v_1..v_k, the word
//   e_{u_{n-k} v_1} . e_{u_{n-k-1} u_{n-k}} ... e_{u_1 u_2}
//   . e_{v_1 v_2} ... e_{v_{k-1} v_k} . e_{v_k u_1}
// whose evaluation sends every v_i and u_{n-k} to u_1 and each other u_j to
// u_{j+1}; restricted to the permutation set it is a single (n-k)-cycle.
inline CollapsingWord cycle_generator_word(const Graph& g,
                                           const std::vector<int>& defect) {
  if (!is_cycle(g)) throw std::invalid_argument("graph is not a cycle");
  int n = g.n(), k = static_cast<int>(defect.size());
  if (k < 1 || k >= n) throw std::invalid_argument("bad defect size");
  std::vector<char> in_defect(n, 0);
  for (int d : defect) in_defect[d] = 1;

  // rotate the traversal so the defect arc occupies the first k slots
  std::vector<int> order = detail::cycle_order(g);
  auto contiguous_from = [&](int start, int dir) {
    std::vector<int> rot(n);
    for (int i = 0; i < n; ++i) rot[i] = order[(start + dir * i % n + n) % n];
    for (int i = 0; i < n; ++i)
      if (bool(in_defect[rot[i]]) != (i < k)) return std::vector<int>{};
    return rot;
  };
  std::vector<int> arranged;
  for (int s = 0; s < n && arranged.empty(); ++s)
    for (int dir : {1, -1}) {
      auto rot = contiguous_from(s, dir);
      if (!rot.empty()) {
        arranged = rot;
        break;
      }
    }
  if (arranged.empty())
    throw std::invalid_argument("defect set is not a contiguous arc");

  std::vector<int> v(arranged.begin(), arranged.begin() + k);
  std::vector<int> u(arranged.begin() + k, arranged.end());
  int m = n - k;
  CollapsingWord w;
  w.letters.emplace_back(u[m - 1], v[0]);
  for (int j = m - 2; j >= 0; --j) w.letters.emplace_back(u[j], u[j + 1]);
  for (int i = 0; i + 1 < k; ++i) w.letters.emplace_back(v[i], v[i + 1]);
  w.letters.emplace_back(v[k - 1], u[0]);
  w.validate(g);
  return w;
}

// Instance of the branch-off-a-path configuration: edges y-x_1, x_1-u_1,
// x_1-x_2, ..., x_{l-1}-x_l, x_l-v, u_1-u_2, ..., u_{m-1}-u_m.
struct TranspositionConfig {
  int y;
  std::vector<int> xs;  // x_1..x_l
  int v;
  std::vector<int> us;  // u_1..u_m
  int i = 1;            // which u to transpose with v (1-based)
};

// The explicit word r whose evaluation, restricted to the permutation set of
// any defect set containing {y, x_1..x_l} and excluding {v, u_i}, is the
// transposition (u_i, v).
inline CollapsingWord transposition_witness(const Graph& g,
                                            const TranspositionConfig& c) {
  int l = static_cast<int>(c.xs.size());
  int m = static_cast<int>(c.us.size());
  if (l < 1 || m < 1 || m > l)
    throw std::invalid_argument("need 1 <= m <= l");
  if (c.i < 1 || c.i > m) throw std::invalid_argument("index out of range");
  auto x = [&](int j) { return c.xs[j - 1]; };
  auto u = [&](int j) { return c.us[j - 1]; };
  auto need = [&](int a, int b) {
    if (!g.has_edge(a, b))
      throw std::invalid_argument("configuration not present in graph");
  };
  need(c.y, x(1));
  need(x(1), u(1));
  for (int j = 1; j < l; ++j) need(x(j), x(j + 1));
  need(x(l), c.v);
  for (int j = 1; j < m; ++j) need(u(j), u(j + 1));

  using Letters = std::vector<std::pair<int, int>>;
  auto s = [&] {
    Letters w{{c.v, x(l)}};
    for (int j = l; j >= 2; --j) w.emplace_back(x(j), x(j - 1));
    w.emplace_back(x(1), c.y);
    return w;
  };
  auto s1 = [&] {
    Letters w{{u(1), x(1)}};
    for (int j = 1; j < l; ++j) w.emplace_back(x(j), x(j + 1));
    w.emplace_back(x(l), c.v);
    return w;
  };
  auto sj = [&](int j) {
    Letters w;
    for (int a = j; a >= 2; --a) w.emplace_back(u(a), u(a - 1));
    w.emplace_back(u(1), x(1));
    for (int a = 1; a <= l - j + 1 && a + 1 <= l; ++a)
      w.emplace_back(x(a), x(a + 1));
    return w;
  };
  auto p = [&] {
    Letters w{{c.y, x(1)}, {x(1), u(1)}};
    for (int a = 1; a < c.i; ++a) w.emplace_back(u(a), u(a + 1));
    return w;
  };
  auto t = [&] {
    Letters w;
    for (int a = l - c.i + 2; a >= 2; --a) w.emplace_back(x(a), x(a - 1));
    w.emplace_back(x(1), c.y);
    return w;
  };
  auto tj = [&](int j) {
    Letters w;
    for (int a = l - j + 2; a >= 2; --a) w.emplace_back(x(a), x(a - 1));
    w.emplace_back(x(1), u(1));
    for (int a = 1; a < j; ++a) w.emplace_back(u(a), u(a + 1));
    return w;
  };
  auto t1 = [&] {
    Letters w{{c.v, x(l)}};
    for (int j = l; j >= 2; --j) w.emplace_back(x(j), x(j - 1));
    w.emplace_back(x(1), u(1));
    return w;
  };
  auto q = [&] {
    Letters w{{c.y, x(1)}};
    for (int j = 1; j < l; ++j) w.emplace_back(x(j), x(j + 1));
    w.emplace_back(x(l), c.v);
    return w;
  };

  CollapsingWord w;
  auto append = [&](const Letters& part) {
    w.letters.insert(w.letters.end(), part.begin(), part.end());
  };
  append(s());
  append(s1());
  if (c.i == 1) {
    w.letters.emplace_back(c.y, x(1));
    w.letters.emplace_back(x(1), u(1));
  } else {
    for (int j = 2; j <= c.i; ++j) append(sj(j));
    append(p());
    append(t());
    for (int j = c.i - 1; j >= 2; --j) append(tj(j));
    append(t1());
    append(q());
  }
  w.validate(g);
  return w;
}

// Defect 1 permutations of the cycles through `v`: for each simple cycle
// (u_1, ..., u_k, v) the cyclic permutation (u_1 ... u_k) of the points
// V \ {v}. Enumerates cycles by DFS; intended for small graphs only.
inline std::vector<Transformation> defect1_cycle_generators(const Graph& g,
                                                            int v) {
  require_connected(g);
  if (g.n() > 10)
    throw std::invalid_argument(
        "cycle enumeration restricted to graphs with at most 10 vertices");
  int n = g.n();
  std::vector<int> points, pos(n, -1);
  for (int x = 0; x < n; ++x)
    if (x != v) {
      pos[x] = static_cast<int>(points.size());
      points.push_back(x);
    }
  int p = static_cast<int>(points.size());

  std::set<Transformation> gens;
  std::vector<int> path;       // u_1, ..., u_j (excluding v)
  std::vector<char> used(n, 0);
  auto emit = [&] {
    std::vector<std::uint8_t> img(p);
    for (int j = 0; j < p; ++j) img[j] = static_cast<std::uint8_t>(j);
    for (std::size_t j = 0; j < path.size(); ++j)
      img[pos[path[j]]] = static_cast<std::uint8_t>(
          pos[path[(j + 1) % path.size()]]);
    gens.insert(Transformation(std::move(img)));
  };
  // each undirected cycle once: the first step goes to the smaller-indexed
  // of the two cycle neighbors of v
  std::function<void(int)> dfs = [&](int cur) {
    for (int w : g.neighbors(cur)) {
      if (w == v) {
        if (path.size() >= 2 && path.front() < path.back()) emit();
        continue;
      }
      if (used[w]) continue;
      used[w] = 1;
      path.push_back(w);
      dfs(w);
      path.pop_back();
      used[w] = 0;
    }
  };
  for (int w : g.neighbors(v)) {
    used[w] = 1;
    path.push_back(w);
    dfs(w);
    path.pop_back();
    used[w] = 0;
  }
  return {gens.begin(), gens.end()};
}

}  // namespace flowsg
