#pragma once

#include <concepts>
#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <set>
#include <span>
#include <vector>

#include "pseudoform/face.hpp"

namespace pseudoform {

/// Finite abstract simplicial complex, stored by its facets.
///
/// Values are immutable: every derived table (faces per dimension, vertex
/// list, 1-skeleton adjacency) is computed once at construction, so a complex
/// can be shared across threads without synchronization. Facets are kept in
/// canonical (size, lexicographic) order.
class SimplicialComplex {
 public:
  /// The void complex: no faces at all, not even the empty face.
  SimplicialComplex() = default;

  /// Builds from arbitrary faces, keeping only inclusion-maximal ones.
  static SimplicialComplex from_faces(std::vector<Face> faces) {
    std::sort(faces.begin(), faces.end());
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    SimplicialComplex k;
    if (faces.empty()) return k;
    const bool uniform = faces.front().size() == faces.back().size();
    if (uniform) {
      k.facets_ = std::move(faces);
    } else {
      // Largest first; a face survives if no already-kept face contains it.
      std::vector<Face> kept;
      for (auto it = faces.rbegin(); it != faces.rend(); ++it) {
        bool dominated = false;
        for (const Face& f : kept) {
          if (f.size() > it->size() && f.contains(*it)) {
            dominated = true;
            break;
          }
        }
        if (!dominated) kept.push_back(*it);
      }
      std::sort(kept.begin(), kept.end());
      k.facets_ = std::move(kept);
    }
    k.build_tables();
    return k;
  }

  /// Public entry point for raw facet lists (e.g. parsed JSON).
  /// Throws DuplicateVertexInFacet when a facet repeats a label.
  static SimplicialComplex from_facets(const std::vector<std::vector<Vertex>>& facets) {
    std::vector<Face> faces;
    faces.reserve(facets.size());
    for (const auto& f : facets) faces.emplace_back(f);
    return from_faces(std::move(faces));
  }

  int dim() const { return dim_; }
  bool is_void() const { return facets_.empty(); }
  const std::vector<Face>& facets() const { return facets_; }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  std::size_t num_vertices() const { return vertices_.size(); }

  /// Faces of dimension `d` (-1 <= d <= dim()), sorted.
  const std::vector<Face>& faces(int d) const {
    static const std::vector<Face> none;
    if (d < -1 || d > dim_ || is_void()) return none;
    return faces_by_dim_[static_cast<std::size_t>(d + 1)];
  }

  std::size_t count(int d) const { return faces(d).size(); }

  bool contains(const Face& face) const {
    const auto& bucket = faces(face.dim());
    return std::binary_search(bucket.begin(), bucket.end(), face);
  }

  bool has_vertex(Vertex v) const { return std::binary_search(vertices_.begin(), vertices_.end(), v); }

  bool is_facet(const Face& face) const { return std::binary_search(facets_.begin(), facets_.end(), face); }

  /// Sorted neighbours of `v` in the 1-skeleton.
  const std::vector<Vertex>& neighbors(Vertex v) const {
    static const std::vector<Vertex> none;
    auto it = adjacency_.find(v);
    return it == adjacency_.end() ? none : it->second;
  }

  std::size_t degree(Vertex v) const { return neighbors(v).size(); }

  bool adjacent(Vertex u, Vertex v) const {
    const auto& n = neighbors(u);
    return std::binary_search(n.begin(), n.end(), v);
  }

  Vertex max_vertex() const { return vertices_.empty() ? -1 : vertices_.back(); }

  bool is_pure() const {
    return std::all_of(facets_.begin(), facets_.end(),
                       [&](const Face& f) { return f.dim() == dim_; });
  }

  /// Facets that contain `face`.
  std::vector<Face> facets_containing(const Face& face) const {
    std::vector<Face> out;
    for (const Face& f : facets_) if (f.contains(face)) out.push_back(f);
    return out;
  }

  friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
    return a.facets_ == b.facets_;
  }

 private:
  void build_tables() {
    dim_ = -1;
    for (const Face& f : facets_) dim_ = std::max(dim_, f.dim());
    std::vector<std::set<Face>> buckets(static_cast<std::size_t>(dim_ + 2));
    for (const Face& f : facets_) {
      for (std::size_t k = 0; k <= f.size(); ++k) {
        for (Face& s : subfaces_of_size(f, k)) buckets[k].insert(std::move(s));
      }
    }
    faces_by_dim_.clear();
    for (auto& b : buckets) faces_by_dim_.emplace_back(b.begin(), b.end());
    vertices_.clear();
    if (dim_ >= 0) {
      for (const Face& f : faces_by_dim_[1]) vertices_.push_back(f[0]);
    }
    for (Vertex v : vertices_) adjacency_[v];
    if (dim_ >= 1) {
      for (const Face& e : faces_by_dim_[2]) {
        adjacency_[e[0]].push_back(e[1]);
        adjacency_[e[1]].push_back(e[0]);
      }
    }
    for (auto& [v, n] : adjacency_) std::sort(n.begin(), n.end());
  }

  std::vector<Face> facets_;
  int dim_ = -1;
  std::vector<std::vector<Face>> faces_by_dim_;
  std::vector<Vertex> vertices_;
  std::map<Vertex, std::vector<Vertex>> adjacency_;
};

/// Marker for "no path" in edge_distance.
inline constexpr int kUnreachable = std::numeric_limits<int>::max();

/// Ordered vertex list of a path or circle; a circle is stored without repeating its start.
struct Circle {
  std::vector<Vertex> vertices;
  std::size_t length() const { return vertices.size(); }
  friend bool operator==(const Circle&, const Circle&) = default;
  friend auto operator<=>(const Circle&, const Circle&) = default;
};

inline SimplicialComplex link(const SimplicialComplex& k, const Face& sigma) {
  if (!k.contains(sigma)) throw Error(ErrorCode::FaceNotPresent, sigma.to_string());
  std::vector<Face> out;
  for (const Face& f : k.facets()) {
    if (f.contains(sigma)) out.push_back(f.minus(sigma));
  }
  return SimplicialComplex::from_faces(std::move(out));
}

inline SimplicialComplex link(const SimplicialComplex& k, Vertex v) { return link(k, Face{v}); }

/// Closed star.
inline SimplicialComplex star(const SimplicialComplex& k, const Face& sigma) {
  if (!k.contains(sigma)) throw Error(ErrorCode::FaceNotPresent, sigma.to_string());
  return SimplicialComplex::from_faces(k.facets_containing(sigma));
}

inline SimplicialComplex star(const SimplicialComplex& k, Vertex v) { return star(k, Face{v}); }

/// Faces of `k` that avoid `v`.
inline SimplicialComplex deletion(const SimplicialComplex& k, Vertex v) {
  std::vector<Face> out;
  for (const Face& f : k.facets()) out.push_back(f.without(v));
  return SimplicialComplex::from_faces(std::move(out));
}

inline SimplicialComplex induced_subcomplex(const SimplicialComplex& k, std::span<const Vertex> w) {
  std::vector<Vertex> keep(w.begin(), w.end());
  std::sort(keep.begin(), keep.end());
  const Face wf = Face::from_sorted(std::move(keep));
  std::vector<Face> out;
  for (const Face& f : k.facets()) {
    Face g = f.intersect(wf);
    if (!g.empty()) out.push_back(std::move(g));
  }
  return SimplicialComplex::from_faces(std::move(out));
}

inline SimplicialComplex induced_subcomplex(const SimplicialComplex& k, const std::vector<Vertex>& w) {
  return induced_subcomplex(k, std::span<const Vertex>(w));
}

/// BFS distances from `source` over the 1-skeleton; unreachable vertices are absent.
inline std::map<Vertex, int> bfs_distances(const SimplicialComplex& k, Vertex source,
                                           std::span<const Vertex> blocked = {}) {
  std::map<Vertex, int> dist;
  dist[source] = 0;
  std::deque<Vertex> queue{source};
  while (!queue.empty()) {
    Vertex x = queue.front();
    queue.pop_front();
    for (Vertex y : k.neighbors(x)) {
      if (dist.count(y)) continue;
      if (std::find(blocked.begin(), blocked.end(), y) != blocked.end()) continue;
      dist[y] = dist[x] + 1;
      queue.push_back(y);
    }
  }
  return dist;
}

/// Shortest path length in G(k); kUnreachable across components.
inline int edge_distance(const SimplicialComplex& k, Vertex u, Vertex v) {
  if (!k.has_vertex(u)) throw Error(ErrorCode::VertexNotPresent, std::to_string(u));
  if (!k.has_vertex(v)) throw Error(ErrorCode::VertexNotPresent, std::to_string(v));
  auto dist = bfs_distances(k, u);
  auto it = dist.find(v);
  return it == dist.end() ? kUnreachable : it->second;
}

/// Vertex sets of the connected components, each sorted, ordered by smallest vertex.
inline std::vector<std::vector<Vertex>> connected_components(const SimplicialComplex& k) {
  std::vector<std::vector<Vertex>> out;
  std::set<Vertex> seen;
  for (Vertex v : k.vertices()) {
    if (seen.count(v)) continue;
    std::vector<Vertex> comp;
    for (const auto& [w, d] : bfs_distances(k, v)) {
      comp.push_back(w);
      seen.insert(w);
    }
    out.push_back(std::move(comp));
  }
  return out;
}

inline bool is_connected(const SimplicialComplex& k) { return connected_components(k).size() <= 1; }

/// Vertex sets of size dim+1 that are not faces although their whole boundary is.
inline std::vector<Face> missing_simplices(const SimplicialComplex& k, int dim) {
  std::vector<Face> out;
  if (dim < 1) return out;
  for (const Face& base : k.faces(dim - 1)) {
    for (Vertex w : k.vertices()) {
      if (w <= base.back()) continue;
      Face cand = base.with(w);
      if (k.contains(cand)) continue;
      bool boundary_present = true;
      for (const Face& r : cand.boundary()) {
        if (!k.contains(r)) {
          boundary_present = false;
          break;
        }
      }
      if (boundary_present) out.push_back(std::move(cand));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Vertex sets of size 3..max_len whose induced subcomplex is a circle.
/// Each circle starts at its smallest vertex with second < last.
inline std::vector<Circle> induced_circles(const SimplicialComplex& k, int max_len) {
  std::vector<Circle> out;
  if (max_len < 3) return out;
  const auto& verts = k.vertices();
  std::vector<Vertex> path;

  // Grow chordless paths from `start` through vertices larger than `start`.
  auto extend = [&](auto&& self, Vertex start) -> void {
    const Vertex last = path.back();
    for (Vertex next : k.neighbors(last)) {
      if (next <= start) continue;
      if (std::find(path.begin(), path.end(), next) != path.end()) continue;
      // `next` may touch only `last` among interior path vertices; touching start closes a cycle.
      bool chord = false;
      for (std::size_t i = 1; i + 1 < path.size(); ++i) {
        if (k.adjacent(path[i], next)) {
          chord = true;
          break;
        }
      }
      if (chord) continue;
      path.push_back(next);
      const bool closes = path.size() >= 3 && k.adjacent(start, next);
      if (closes) {
        const std::size_t len = path.size();
        const bool canonical = len >= 3 && path[1] < path.back();
        bool is_face = false;
        if (len == 3) is_face = k.contains(Face(std::vector<Vertex>(path.begin(), path.end())));
        if (canonical && !is_face) out.push_back(Circle{path});
      } else if (static_cast<int>(path.size()) < max_len) {
        self(self, start);
      }
      path.pop_back();
    }
  };

  for (Vertex s : verts) {
    path.assign(1, s);
    extend(extend, s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Vertices adjacent to every other vertex.
inline std::vector<Vertex> graph_cone_points(const SimplicialComplex& k) {
  std::vector<Vertex> out;
  for (Vertex v : k.vertices()) {
    if (k.degree(v) + 1 == k.num_vertices()) out.push_back(v);
  }
  return out;
}

/// Relabels every vertex through `map_fn`.
template <typename Fn>
  requires std::invocable<Fn&, Vertex>
SimplicialComplex relabel(const SimplicialComplex& k, Fn&& map_fn) {
  std::vector<Face> out;
  out.reserve(k.facets().size());
  for (const Face& f : k.facets()) out.push_back(f.mapped(map_fn));
  return SimplicialComplex::from_faces(std::move(out));
}

inline SimplicialComplex relabel(const SimplicialComplex& k, const std::map<Vertex, Vertex>& map) {
  return relabel(k, [&](Vertex v) {
    auto it = map.find(v);
    return it == map.end() ? v : it->second;
  });
}

/// Edges of the 1-skeleton as vertex pairs (u < v), sorted.
inline std::vector<std::pair<Vertex, Vertex>> edge_list(const SimplicialComplex& k) {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (const Face& e : k.faces(1)) out.emplace_back(e[0], e[1]);
  return out;
}

/// Cone over `k` with apex `apex` (which must be a fresh label).
inline SimplicialComplex cone(const SimplicialComplex& k, Vertex apex) {
  if (k.has_vertex(apex)) throw Error(ErrorCode::BadParameters, "cone apex must be fresh");
  std::vector<Face> out;
  for (const Face& f : k.facets()) out.push_back(f.with(apex));
  if (out.empty()) out.push_back(Face{apex});
  return SimplicialComplex::from_faces(std::move(out));
}

}  // namespace pseudoform
