#pragma once

#include <map>
#include <optional>
#include <vector>

#include "pseudoform/complex.hpp"
#include "pseudoform/face_vectors.hpp"

namespace pseudoform {

struct IsomorphismOptions {
  std::size_t max_vertices = 40;
};

namespace detail {

// Two rounds of colour refinement seeded by (degree, link f-vector).
inline std::map<Vertex, int> vertex_colours(const SimplicialComplex& k,
                                            std::map<std::vector<std::int64_t>, int>& palette) {
  std::map<Vertex, std::vector<std::int64_t>> base;
  for (Vertex v : k.vertices()) {
    std::vector<std::int64_t> key{static_cast<std::int64_t>(k.degree(v))};
    for (auto x : face_vectors(link(k, v)).f) key.push_back(x);
    base[v] = std::move(key);
  }
  std::map<Vertex, int> colour;
  for (Vertex v : k.vertices()) {
    std::vector<std::int64_t> key = base[v];
    key.push_back(-1);
    std::vector<std::vector<std::int64_t>> around;
    for (Vertex w : k.neighbors(v)) around.push_back(base[w]);
    std::sort(around.begin(), around.end());
    for (const auto& a : around) {
      key.insert(key.end(), a.begin(), a.end());
      key.push_back(-2);
    }
    auto [it, inserted] = palette.emplace(std::move(key), static_cast<int>(palette.size()));
    colour[v] = it->second;
  }
  return colour;
}

}  // namespace detail

/// Exact backtracking search for a vertex bijection carrying the facets of
/// `a` onto the facets of `b`. Returns std::nullopt when none exists.
/// Throws SizeLimitExceeded above `opts.max_vertices`.
inline std::optional<std::map<Vertex, Vertex>> is_isomorphic(const SimplicialComplex& a,
                                                             const SimplicialComplex& b,
                                                             IsomorphismOptions opts = {}) {
  if (a.num_vertices() > opts.max_vertices || b.num_vertices() > opts.max_vertices) {
    throw Error(ErrorCode::SizeLimitExceeded,
                "isomorphism search limited to " + std::to_string(opts.max_vertices) + " vertices");
  }
  if (face_vectors(a) != face_vectors(b)) return std::nullopt;
  if (a.is_void()) return std::map<Vertex, Vertex>{};

  std::map<std::vector<std::int64_t>, int> palette;
  const auto colour_a = detail::vertex_colours(a, palette);
  const auto colour_b = detail::vertex_colours(b, palette);
  {
    std::map<int, int> ca, cb;
    for (auto& [v, c] : colour_a) ++ca[c];
    for (auto& [v, c] : colour_b) ++cb[c];
    if (ca != cb) return std::nullopt;
  }
  std::map<int, int> class_size;
  for (auto& [v, c] : colour_a) ++class_size[c];

  // Order a's vertices: BFS per component, each component rooted at its rarest colour.
  std::vector<Vertex> order;
  std::map<Vertex, std::size_t> position;
  {
    std::vector<Vertex> remaining = a.vertices();
    while (order.size() < a.num_vertices()) {
      Vertex root = -1;
      int best = std::numeric_limits<int>::max();
      for (Vertex v : remaining) {
        if (position.count(v)) continue;
        if (class_size[colour_a.at(v)] < best) {
          best = class_size[colour_a.at(v)];
          root = v;
        }
      }
      std::deque<Vertex> queue{root};
      position[root] = order.size();
      order.push_back(root);
      while (!queue.empty()) {
        Vertex x = queue.front();
        queue.pop_front();
        for (Vertex y : a.neighbors(x)) {
          if (position.count(y)) continue;
          position[y] = order.size();
          order.push_back(y);
          queue.push_back(y);
        }
      }
    }
  }

  // Facets of a grouped by the position of their last-ordered vertex.
  std::vector<std::vector<const Face*>> closing(order.size());
  for (const Face& f : a.facets()) {
    std::size_t last = 0;
    for (Vertex v : f) last = std::max(last, position.at(v));
    closing[last].push_back(&f);
  }
  // An earlier-ordered neighbour anchors each vertex's candidate set.
  std::vector<std::optional<Vertex>> anchor(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (Vertex w : a.neighbors(order[i])) {
      if (position.at(w) < i && (!anchor[i] || position.at(w) < position.at(*anchor[i]))) anchor[i] = w;
    }
  }

  std::map<Vertex, Vertex> image;
  std::set<Vertex> used;

  auto consistent = [&](std::size_t i, Vertex target) {
    const Vertex v = order[i];
    if (colour_b.at(target) != colour_a.at(v)) return false;
    for (std::size_t j = 0; j < i; ++j) {
      const Vertex w = order[j];
      if (a.adjacent(v, w) != b.adjacent(target, image.at(w))) return false;
    }
    image[v] = target;
    for (const Face* f : closing[i]) {
      std::vector<Vertex> mapped;
      for (Vertex x : *f) mapped.push_back(image.at(x));
      std::sort(mapped.begin(), mapped.end());
      if (!b.is_facet(Face::from_sorted(std::move(mapped)))) {
        image.erase(v);
        return false;
      }
    }
    image.erase(v);
    return true;
  };

  auto search = [&](auto&& self, std::size_t i) -> bool {
    if (i == order.size()) return true;
    const std::vector<Vertex>& pool = anchor[i] ? b.neighbors(image.at(*anchor[i])) : b.vertices();
    for (Vertex t : pool) {
      if (used.count(t)) continue;
      if (!consistent(i, t)) continue;
      image[order[i]] = t;
      used.insert(t);
      if (self(self, i + 1)) return true;
      used.erase(t);
      image.erase(order[i]);
    }
    return false;
  };

  if (!search(search, 0)) return std::nullopt;
  return image;
}

}  // namespace pseudoform
