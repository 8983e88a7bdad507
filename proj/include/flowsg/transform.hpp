#pragma once

#include <compare>
#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "flowsg/graph.hpp"

namespace flowsg {

// Total self-map of {0,..,n-1}. Functions act on the right: x*(s*t) means
// apply s first, then t.
class Transformation {
 public:
  Transformation() = default;
  explicit Transformation(std::vector<std::uint8_t> img)
      : img_(std::move(img)) {
    for (auto x : img_)
      if (x >= img_.size())
        throw std::invalid_argument("image entry out of range");
  }

  static Transformation identity(int n) {
    std::vector<std::uint8_t> img(n);
    for (int i = 0; i < n; ++i) img[i] = static_cast<std::uint8_t>(i);
    return Transformation(std::move(img));
  }

  int size() const { return static_cast<int>(img_.size()); }
  std::uint8_t operator[](int x) const { return img_[x]; }
  const std::vector<std::uint8_t>& data() const { return img_; }

  // this, then t (product in left-to-right convention).
  Transformation then(const Transformation& t) const {
    std::vector<std::uint8_t> img(img_.size());
    for (std::size_t x = 0; x < img_.size(); ++x) img[x] = t.img_[img_[x]];
    return Transformation(std::move(img));
  }

  // n minus the image size.
  int defect() const {
    std::vector<char> hit(img_.size(), 0);
    for (auto x : img_) hit[x] = 1;
    int img_size = 0;
    for (char h : hit) img_size += h;
    return size() - img_size;
  }

  std::vector<int> image_set() const {
    std::set<int> s(img_.begin(), img_.end());
    return {s.begin(), s.end()};
  }

  bool is_permutation() const { return defect() == 0; }
  bool is_identity() const {
    for (std::size_t x = 0; x < img_.size(); ++x)
      if (img_[x] != x) return false;
    return true;
  }

  auto operator<=>(const Transformation&) const = default;

  std::string to_string() const {
    std::string s = "[";
    for (std::size_t x = 0; x < img_.size(); ++x) {
      if (x) s += ' ';
      s += std::to_string(int(img_[x]));
    }
    return s + "]";
  }

 private:
  std::vector<std::uint8_t> img_;
};

namespace detail {

inline Transformation collapsing(int n, int u, int v) {
  std::vector<std::uint8_t> img(n);
  for (int x = 0; x < n; ++x) img[x] = static_cast<std::uint8_t>(x);
  img[u] = static_cast<std::uint8_t>(v);
  return Transformation(std::move(img));
}

}  // namespace detail

// e_uv: maps u to v, fixes everything else. Requires uv to be an edge
// (either direction of an undirected edge).
inline Transformation elementary_collapsing(const Graph& g, int u, int v) {
  if (!g.has_edge(u, v)) throw std::invalid_argument("not an edge");
  return detail::collapsing(g.n(), u, v);
}

inline Transformation elementary_collapsing(const Digraph& d, int u, int v) {
  if (!d.has_edge(u, v)) throw std::invalid_argument("not a directed edge");
  return detail::collapsing(d.n(), u, v);
}

// A word over elementary collapsings; each letter is a directed edge (u,v)
// standing for e_uv. Multiplies left to right.
struct CollapsingWord {
  std::vector<std::pair<int, int>> letters;

  Transformation evaluate(int n) const {
    std::vector<std::uint8_t> img(n);
    for (int x = 0; x < n; ++x) img[x] = static_cast<std::uint8_t>(x);
    for (auto [u, v] : letters)
      for (int x = 0; x < n; ++x)
        if (img[x] == u) img[x] = static_cast<std::uint8_t>(v);
    return Transformation(std::move(img));
  }

  // Every letter must be an edge of the host (both directions available
  // when the host is undirected).
  void validate(const Graph& g) const {
    for (auto [u, v] : letters)
      if (!g.has_edge(u, v))
        throw std::invalid_argument("word letter is not an edge");
  }
  void validate(const Digraph& d) const {
    for (auto [u, v] : letters)
      if (!d.has_edge(u, v))
        throw std::invalid_argument("word letter is not a directed edge");
  }

  std::string to_string(const std::vector<std::string>& labels) const {
    std::string s;
    for (auto [u, v] : letters) {
      if (!s.empty()) s += ' ';
      s += "e[" + labels[u] + ">" + labels[v] + "]";
    }
    return s;
  }
};

}  // namespace flowsg
