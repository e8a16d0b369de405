#pragma once

#include <algorithm>
#include <compare>
#include <initializer_list>
#include <string>
#include <vector>

#include "pseudoform/error.hpp"

namespace pseudoform {

/// Opaque vertex label. Labels are distinct within one complex.
using Vertex = int;

/// A face is a sorted, duplicate-free set of vertices. The empty face has dimension -1.
class Face {
 public:
  Face() = default;

  /// Sorts the labels; throws DuplicateVertexInFacet if a label repeats.
  explicit Face(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
    std::sort(vertices_.begin(), vertices_.end());
    if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end()) {
      throw Error(ErrorCode::DuplicateVertexInFacet, "repeated label in " + to_string());
    }
  }

  Face(std::initializer_list<Vertex> vertices) : Face(std::vector<Vertex>(vertices)) {}

  /// Trusts the caller: `vertices` must already be sorted and duplicate-free.
  static Face from_sorted(std::vector<Vertex> vertices) {
    Face f;
    f.vertices_ = std::move(vertices);
    return f;
  }

  int dim() const { return static_cast<int>(vertices_.size()) - 1; }
  std::size_t size() const { return vertices_.size(); }
  bool empty() const { return vertices_.empty(); }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  Vertex operator[](std::size_t i) const { return vertices_[i]; }
  auto begin() const { return vertices_.begin(); }
  auto end() const { return vertices_.end(); }
  Vertex front() const { return vertices_.front(); }
  Vertex back() const { return vertices_.back(); }

  bool contains(Vertex v) const { return std::binary_search(vertices_.begin(), vertices_.end(), v); }

  bool contains(const Face& other) const {
    return std::includes(vertices_.begin(), vertices_.end(), other.begin(), other.end());
  }

  bool disjoint(const Face& other) const {
    auto a = vertices_.begin();
    auto b = other.begin();
    while (a != vertices_.end() && b != other.end()) {
      if (*a == *b) return false;
      if (*a < *b) ++a; else ++b;
    }
    return true;
  }

  Face without(Vertex v) const {
    std::vector<Vertex> out;
    out.reserve(vertices_.size());
    for (Vertex w : vertices_) if (w != v) out.push_back(w);
    return from_sorted(std::move(out));
  }

  Face with(Vertex v) const {
    if (contains(v)) return *this;
    std::vector<Vertex> out = vertices_;
    out.insert(std::upper_bound(out.begin(), out.end(), v), v);
    return from_sorted(std::move(out));
  }

  Face unite(const Face& other) const {
    std::vector<Vertex> out;
    std::set_union(vertices_.begin(), vertices_.end(), other.begin(), other.end(), std::back_inserter(out));
    return from_sorted(std::move(out));
  }

  Face intersect(const Face& other) const {
    std::vector<Vertex> out;
    std::set_intersection(vertices_.begin(), vertices_.end(), other.begin(), other.end(),
                          std::back_inserter(out));
    return from_sorted(std::move(out));
  }

  Face minus(const Face& other) const {
    std::vector<Vertex> out;
    std::set_difference(vertices_.begin(), vertices_.end(), other.begin(), other.end(),
                        std::back_inserter(out));
    return from_sorted(std::move(out));
  }

  /// Applies a relabeling; labels absent from `map_fn`'s domain are kept.
  template <typename Fn>
  Face mapped(Fn&& map_fn) const {
    std::vector<Vertex> out;
    out.reserve(vertices_.size());
    for (Vertex v : vertices_) out.push_back(map_fn(v));
    return Face(std::move(out));
  }

  /// All codimension-one faces, in lexicographic order of the removed vertex.
  std::vector<Face> boundary() const {
    std::vector<Face> out;
    out.reserve(vertices_.size());
    for (Vertex v : vertices_) out.push_back(without(v));
    return out;
  }

  std::string to_string() const {
    std::string s = "{";
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(vertices_[i]);
    }
    return s + "}";
  }

  friend bool operator==(const Face&, const Face&) = default;
  friend auto operator<=>(const Face& a, const Face& b) {
    // Shorter faces first, then lexicographic: keeps per-dimension runs contiguous.
    if (a.size() != b.size()) return a.size() <=> b.size();
    return a.vertices_ <=> b.vertices_;
  }

 private:
  std::vector<Vertex> vertices_;
};

/// Subsets of `face` with exactly `k` vertices, lexicographic.
inline std::vector<Face> subfaces_of_size(const Face& face, std::size_t k) {
  std::vector<Face> out;
  const std::size_t n = face.size();
  if (k > n) return out;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    std::vector<Vertex> verts;
    verts.reserve(k);
    for (std::size_t i : idx) verts.push_back(face[i]);
    out.push_back(Face::from_sorted(std::move(verts)));
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

}  // namespace pseudoform
