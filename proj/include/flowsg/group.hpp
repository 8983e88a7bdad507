#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "flowsg/oracle.hpp"

namespace flowsg {

enum class FactorKind { trivial, cyclic, alternating, symmetric, pgl25 };

inline std::string to_string(FactorKind k) {
  switch (k) {
    case FactorKind::trivial: return "trivial";
    case FactorKind::cyclic: return "cyclic";
    case FactorKind::alternating: return "alternating";
    case FactorKind::symmetric: return "symmetric";
    case FactorKind::pgl25: return "pgl25";
  }
  return "?";
}

inline FactorKind factor_kind_from_string(const std::string& s) {
  if (s == "trivial") return FactorKind::trivial;
  if (s == "cyclic") return FactorKind::cyclic;
  if (s == "alternating") return FactorKind::alternating;
  if (s == "symmetric") return FactorKind::symmetric;
  if (s == "pgl25") return FactorKind::pgl25;
  throw std::invalid_argument("unknown factor kind: " + s);
}

// A direct factor: Z_m, A_m, S_m, PGL2(5) on 6 points, or the trivial
// group, annotated with the vertex set it came from (may be empty).
struct GroupFactor {
  FactorKind kind = FactorKind::trivial;
  int degree = 0;  // m; 6 for pgl25; 0 for trivial
  std::vector<int> support;

  std::uint64_t order() const {
    switch (kind) {
      case FactorKind::trivial: return 1;
      case FactorKind::cyclic: return static_cast<std::uint64_t>(degree);
      case FactorKind::alternating: return factorial_checked(degree) / 2;
      case FactorKind::symmetric: return factorial_checked(degree);
      case FactorKind::pgl25: return 120;
    }
    return 1;
  }

  std::string to_string() const {
    switch (kind) {
      case FactorKind::trivial: return "1";
      case FactorKind::cyclic: return "Z" + std::to_string(degree);
      case FactorKind::alternating: return "A" + std::to_string(degree);
      case FactorKind::symmetric: return "S" + std::to_string(degree);
      case FactorKind::pgl25: return "PGL2(5)[6pts]";
    }
    return "?";
  }

  static std::uint64_t factorial_checked(int m) {
    std::uint64_t r = 1;
    for (int i = 2; i <= m; ++i) {
      if (__builtin_mul_overflow(r, static_cast<std::uint64_t>(i), &r))
        throw std::overflow_error("group order overflows 64 bits");
    }
    return r;
  }
};

// Degenerate degrees normalize to the trivial factor; S_2 is kept as
// symmetric (it equals Z_2 as a permutation group, which the canonical
// keys below account for).
inline GroupFactor make_trivial(std::vector<int> support = {}) {
  return {FactorKind::trivial, 0, std::move(support)};
}
inline GroupFactor make_cyclic(int m, std::vector<int> support = {}) {
  if (m <= 1) return make_trivial(std::move(support));
  return {FactorKind::cyclic, m, std::move(support)};
}
inline GroupFactor make_symmetric(int m, std::vector<int> support = {}) {
  if (m <= 1) return make_trivial(std::move(support));
  return {FactorKind::symmetric, m, std::move(support)};
}
inline GroupFactor make_alternating(int m, std::vector<int> support = {}) {
  if (m <= 2) return make_trivial(std::move(support));
  return {FactorKind::alternating, m, std::move(support)};
}
inline GroupFactor make_pgl25(std::vector<int> support = {}) {
  return {FactorKind::pgl25, 6, std::move(support)};
}

// Multiset of direct factors.
struct GroupDescriptor {
  std::vector<GroupFactor> factors;

  std::uint64_t order() const {
    std::uint64_t r = 1;
    for (const auto& f : factors) {
      std::uint64_t fo = f.order();
      if (__builtin_mul_overflow(r, fo, &r))
        throw std::overflow_error("group order overflows 64 bits");
    }
    return r;
  }

  // "S3 x S3 x Z4"; trivial factors are dropped, an all-trivial product
  // renders as "1".
  std::string to_string() const {
    std::vector<std::string> parts;
    for (const auto& f : factors)
      if (f.kind != FactorKind::trivial) parts.push_back(f.to_string());
    if (parts.empty()) return "1";
    std::string s = parts[0];
    for (std::size_t i = 1; i < parts.size(); ++i) s += " x " + parts[i];
    return s;
  }
};

inline std::uint64_t descriptor_order(const GroupDescriptor& d) {
  return d.order();
}

// --- permutation helpers -------------------------------------------------

inline bool permutation_is_even(const Transformation& p) {
  int n = p.size();
  std::vector<char> seen(n, 0);
  int parity = 0;
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    int len = 0, x = i;
    while (!seen[x]) {
      seen[x] = 1;
      x = p[x];
      ++len;
    }
    parity ^= (len - 1) & 1;
  }
  return parity == 0;
}

inline std::uint64_t permutation_order(const Transformation& p) {
  int n = p.size();
  std::vector<char> seen(n, 0);
  std::uint64_t ord = 1;
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    std::uint64_t len = 0;
    int x = i;
    while (!seen[x]) {
      seen[x] = 1;
      x = p[x];
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

// True iff exactly one element maps each ordered triple of distinct points
// to each other: |G| = p(p-1)(p-2) and the orbit of one ordered triple under
// G has that same size.
inline bool sharply_3_transitive(const ConcreteGroup& g) {
  std::uint64_t p = g.points.size();
  if (p < 3) throw std::invalid_argument("need at least 3 points");
  std::uint64_t target = p * (p - 1) * (p - 2);
  if (g.order() != target) return false;
  std::set<std::array<std::uint8_t, 3>> images;
  for (const auto& e : g.elements)
    images.insert({e[0], e[1], e[2]});
  return images.size() == target;
}

// Per-orbit classification of a concrete permutation group.
struct OrbitClass {
  std::vector<int> points;  // host vertex indices
  std::uint64_t order = 1;  // of the induced action on the orbit
  bool symmetric = false;
  bool alternating = false;  // |O|!/2 with every element even
  bool cyclic = false;       // generated by a single element
  bool pgl25_action = false; // 6 points, order 120, sharply 3-transitive
};

struct GroupAnalysis {
  std::uint64_t order = 1;
  std::vector<OrbitClass> orbits;
};

inline GroupAnalysis identify_concrete(const ConcreteGroup& g) {
  int p = static_cast<int>(g.points.size());
  GroupAnalysis out;
  out.order = g.order();

  // orbit partition
  std::vector<int> parent(p);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& e : g.elements)
    for (int x = 0; x < p; ++x) {
      int a = find(x), b = find(e[x]);
      if (a != b) parent[a] = b;
    }
  std::map<int, std::vector<int>> orbit_positions;
  for (int x = 0; x < p; ++x) orbit_positions[find(x)].push_back(x);

  for (auto& [root, positions] : orbit_positions) {
    OrbitClass oc;
    for (int x : positions) oc.points.push_back(g.points[x]);
    int m = static_cast<int>(positions.size());
    std::vector<int> pos_of(p, -1);
    for (int j = 0; j < m; ++j) pos_of[positions[j]] = j;

    std::set<Transformation> induced;
    for (const auto& e : g.elements) {
      std::vector<std::uint8_t> img(m);
      for (int j = 0; j < m; ++j)
        img[j] = static_cast<std::uint8_t>(pos_of[e[positions[j]]]);
      induced.insert(Transformation(std::move(img)));
    }
    oc.order = induced.size();

    if (m >= 2) {
      std::uint64_t full = GroupFactor::factorial_checked(m);
      oc.symmetric = (oc.order == full);
      bool all_even = true;
      for (const auto& e : induced)
        if (!permutation_is_even(e)) {
          all_even = false;
          break;
        }
      oc.alternating = (m >= 3 && all_even && oc.order == full / 2);
      for (const auto& e : induced)
        if (permutation_order(e) == oc.order) {
          oc.cyclic = true;
          break;
        }
      if (m == 6 && oc.order == 120) {
        ConcreteGroup sub;
        sub.points.assign(oc.points.begin(), oc.points.end());
        sub.elements.assign(induced.begin(), induced.end());
        oc.pgl25_action = sharply_3_transitive(sub);
      }
    } else {
      oc.cyclic = true;  // trivial group on one point
    }
    out.orbits.push_back(std::move(oc));
  }
  return out;
}

// --- canonical comparison keys -------------------------------------------
//
// S_2 = Z_2 and A_3 = Z_3 as permutation groups, so both sides of a
// comparison normalize to a shared key space before multiset equality.

struct CanonicalKey {
  char family;  // 'S', 'A', 'C', 'P', 'X'
  std::int64_t a = 0;
  std::int64_t b = 0;
  auto operator<=>(const CanonicalKey&) const = default;

  std::string to_string() const {
    switch (family) {
      case 'S': return "S" + std::to_string(a);
      case 'A': return "A" + std::to_string(a);
      case 'C': return "Z" + std::to_string(a);
      case 'P': return "PGL2(5)";
      default:
        return "other(deg " + std::to_string(a) + ", order " +
               std::to_string(b) + ")";
    }
  }
};

inline std::optional<CanonicalKey> factor_key(const GroupFactor& f) {
  switch (f.kind) {
    case FactorKind::trivial: return std::nullopt;
    case FactorKind::cyclic:
      if (f.degree <= 1) return std::nullopt;
      return CanonicalKey{'C', f.degree};
    case FactorKind::symmetric:
      if (f.degree <= 1) return std::nullopt;
      if (f.degree == 2) return CanonicalKey{'C', 2};
      return CanonicalKey{'S', f.degree};
    case FactorKind::alternating:
      if (f.degree <= 2) return std::nullopt;
      if (f.degree == 3) return CanonicalKey{'C', 3};
      return CanonicalKey{'A', f.degree};
    case FactorKind::pgl25: return CanonicalKey{'P', 6};
  }
  return std::nullopt;
}

inline std::optional<CanonicalKey> orbit_key(const OrbitClass& oc) {
  std::int64_t m = static_cast<std::int64_t>(oc.points.size());
  if (m <= 1) return std::nullopt;
  if (oc.symmetric) return m == 2 ? CanonicalKey{'C', 2} : CanonicalKey{'S', m};
  if (oc.alternating)
    return m == 3 ? CanonicalKey{'C', 3} : CanonicalKey{'A', m};
  if (oc.pgl25_action) return CanonicalKey{'P', 6};
  if (oc.cyclic && oc.order == static_cast<std::uint64_t>(m))
    return CanonicalKey{'C', m};
  return CanonicalKey{'X', m, static_cast<std::int64_t>(oc.order)};
}

inline std::vector<CanonicalKey> descriptor_keys(const GroupDescriptor& d) {
  std::vector<CanonicalKey> keys;
  for (const auto& f : d.factors)
    if (auto k = factor_key(f)) keys.push_back(*k);
  std::sort(keys.begin(), keys.end());
  return keys;
}

inline std::vector<CanonicalKey> orbit_keys(const GroupAnalysis& a) {
  std::vector<CanonicalKey> keys;
  for (const auto& oc : a.orbits)
    if (auto k = orbit_key(oc)) keys.push_back(*k);
  std::sort(keys.begin(), keys.end());
  return keys;
}

// Equivalence of permutation group actions: a point bijection carrying one
// element set onto the other. Exhaustive over bijections; desk scale only.
inline bool actions_equivalent(const ConcreteGroup& a,
                               const ConcreteGroup& b) {
  int p = static_cast<int>(a.points.size());
  if (static_cast<int>(b.points.size()) != p) return false;
  if (a.elements.size() != b.elements.size()) return false;
  if (p > 8)
    throw std::invalid_argument(
        "action equivalence search restricted to at most 8 points");
  std::set<Transformation> bset(b.elements.begin(), b.elements.end());
  std::vector<int> phi(p);
  std::iota(phi.begin(), phi.end(), 0);
  do {
    std::vector<int> inv(p);
    for (int i = 0; i < p; ++i) inv[phi[i]] = i;
    bool ok = true;
    for (const auto& g : a.elements) {
      std::vector<std::uint8_t> img(p);
      for (int i = 0; i < p; ++i)
        img[i] = static_cast<std::uint8_t>(phi[g[inv[i]]]);
      if (!bset.count(Transformation(std::move(img)))) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  } while (std::next_permutation(phi.begin(), phi.end()));
  return false;
}

struct MatchResult {
  bool ok = false;
  std::string report;
  explicit operator bool() const { return ok; }
};

// Descriptor vs concrete group: equal orders, and the multiset of
// nontrivial factors must agree with the per-orbit classification.
inline MatchResult matches(const GroupDescriptor& d, const ConcreteGroup& g) {
  MatchResult r;
  auto analysis = identify_concrete(g);
  std::uint64_t dorder = d.order();
  auto fk = descriptor_keys(d);
  auto ok_keys = orbit_keys(analysis);

  auto key_list = [](const std::vector<CanonicalKey>& ks) {
    if (ks.empty()) return std::string("1");
    std::string s;
    for (const auto& k : ks) {
      if (!s.empty()) s += " x ";
      s += k.to_string();
    }
    return s;
  };
  std::ostringstream rep;
  rep << "descriptor " << d.to_string() << " (order " << dorder
      << ") vs concrete group of order " << analysis.order << " acting as "
      << key_list(ok_keys);
  r.report = rep.str();
  r.ok = (dorder == analysis.order) && (fk == ok_keys);
  return r;
}

}  // namespace flowsg
