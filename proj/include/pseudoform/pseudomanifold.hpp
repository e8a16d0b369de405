#pragma once

#include <map>
#include <set>
#include <vector>

#include "pseudoform/complex.hpp"
#include "pseudoform/face_vectors.hpp"

namespace pseudoform {

/// Z/2 first Betti number plus orientability of a closed connected surface.
struct SurfaceClass {
  int b1 = 0;
  bool orientable = true;

  bool is_sphere() const { return b1 == 0 && orientable; }
  friend bool operator==(const SurfaceClass&, const SurfaceClass&) = default;
};

/// Canonical order: larger b1 first, and at equal b1 non-orientable first.
inline bool surface_order(const SurfaceClass& a, const SurfaceClass& b) {
  if (a.b1 != b.b1) return a.b1 > b.b1;
  return !a.orientable && b.orientable;
}

inline std::string to_string(const SurfaceClass& c) {
  if (c.is_sphere()) return "S2";
  if (c.orientable) return "orientable(b1=" + std::to_string(c.b1) + ")";
  return "nonorientable(b1=" + std::to_string(c.b1) + ")";
}

/// Multiset of singular vertex-link classes, kept sorted by surface_order.
using SingularityMultiset = std::vector<SurfaceClass>;

inline SingularityMultiset sorted_multiset(SingularityMultiset m) {
  std::sort(m.begin(), m.end(), surface_order);
  return m;
}

/// Ridge -> number of facets containing it.
inline std::map<Face, int> ridge_incidence(const SimplicialComplex& k) {
  std::map<Face, int> count;
  for (const Face& f : k.facets()) {
    for (const Face& r : f.boundary()) ++count[r];
  }
  return count;
}

inline bool is_pseudomanifold(const SimplicialComplex& k) {
  if (k.is_void() || !k.is_pure()) return false;
  for (const auto& [ridge, n] : ridge_incidence(k)) {
    if (n != 2) return false;
  }
  return true;
}

/// Ridges lying in exactly one facet, closed downward. Void for closed pseudomanifolds.
inline SimplicialComplex boundary_complex(const SimplicialComplex& k) {
  if (!k.is_pure()) throw Error(ErrorCode::NotPure, "boundary of a non-pure complex");
  std::vector<Face> out;
  for (const auto& [ridge, n] : ridge_incidence(k)) {
    if (n == 1) out.push_back(ridge);
  }
  return SimplicialComplex::from_faces(std::move(out));
}

inline bool is_pseudomanifold_with_boundary(const SimplicialComplex& k) {
  if (k.is_void() || !k.is_pure()) return false;
  bool has_boundary = false;
  for (const auto& [ridge, n] : ridge_incidence(k)) {
    if (n < 1 || n > 2) return false;
    if (n == 1) has_boundary = true;
  }
  if (!has_boundary) return true;
  return is_pseudomanifold(boundary_complex(k));
}

/// Pseudomanifold whose links of faces of codimension >= 2 (including the
/// empty face) are connected. Circles and S^0 count as normal.
inline bool is_normal(const SimplicialComplex& k) {
  if (!is_pseudomanifold(k)) throw Error(ErrorCode::NotPseudomanifold, "is_normal needs a pseudomanifold");
  const int d = k.dim();
  if (d <= 0) return true;
  for (int i = -1; i <= d - 2; ++i) {
    for (const Face& f : k.faces(i)) {
      if (!is_connected(link(k, f))) return false;
    }
  }
  return true;
}

inline bool is_normal_pseudomanifold(const SimplicialComplex& k) { return is_pseudomanifold(k) && is_normal(k); }

/// Facets as oriented vertex sequences; used for coherent-orientation propagation.
namespace detail {

// +1 if `seq` is an even permutation of its sorted order, -1 otherwise.
inline int permutation_sign(std::vector<Vertex> seq) {
  int sign = 1;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    for (std::size_t j = i + 1; j < seq.size(); ++j) {
      if (seq[i] > seq[j]) sign = -sign;
    }
  }
  return sign;
}

// Orientation a facet induces on one of its ridges (the ridge omitting position `i`).
inline int induced_sign(int facet_sign, std::size_t i) { return (i % 2 == 0) ? facet_sign : -facet_sign; }

}  // namespace detail

/// Greedy coherent orientation over the facet adjacency graph of a pure
/// pseudomanifold. Returns false when propagation hits a contradiction.
inline bool is_orientable(const SimplicialComplex& k) {
  const auto& facets = k.facets();
  std::map<Face, std::vector<std::pair<std::size_t, std::size_t>>> by_ridge;  // ridge -> (facet, slot)
  for (std::size_t f = 0; f < facets.size(); ++f) {
    for (std::size_t i = 0; i < facets[f].size(); ++i) by_ridge[facets[f].without(facets[f][i])].emplace_back(f, i);
  }
  std::vector<int> sign(facets.size(), 0);
  for (std::size_t root = 0; root < facets.size(); ++root) {
    if (sign[root]) continue;
    sign[root] = 1;
    std::deque<std::size_t> queue{root};
    while (!queue.empty()) {
      const std::size_t f = queue.front();
      queue.pop_front();
      for (std::size_t i = 0; i < facets[f].size(); ++i) {
        const auto& users = by_ridge[facets[f].without(facets[f][i])];
        const int mine = detail::induced_sign(sign[f], i);
        for (auto [g, j] : users) {
          if (g == f) continue;
          // Coherent neighbours induce opposite orientations on the shared ridge.
          const int wanted = (j % 2 == 0) ? -mine : mine;
          if (sign[g] == 0) {
            sign[g] = wanted;
            queue.push_back(g);
          } else if (sign[g] != wanted) {
            return false;
          }
        }
      }
    }
  }
  return true;
}

/// True when `k` is a connected closed 2-pseudomanifold whose vertex links are single circles.
inline bool is_closed_surface(const SimplicialComplex& k) {
  if (k.dim() != 2 || !is_pseudomanifold(k) || !is_connected(k)) return false;
  for (Vertex v : k.vertices()) {
    const SimplicialComplex lk = link(k, v);
    if (!is_connected(lk)) return false;
    for (Vertex w : lk.vertices()) {
      if (lk.degree(w) != 2) return false;
    }
  }
  return true;
}

inline SurfaceClass surface_classify(const SimplicialComplex& k) {
  if (!is_closed_surface(k)) throw Error(ErrorCode::NotASurface, "not a connected closed surface");
  const auto chi = face_vectors(k).euler;
  SurfaceClass c;
  c.b1 = static_cast<int>(2 - chi);
  c.orientable = is_orientable(k);
  detail::ensure(!c.orientable || c.b1 % 2 == 0, "orientable surface with odd b1");
  return c;
}

/// Vertices of a 3-dimensional normal pseudomanifold whose links are not 2-spheres.
inline std::vector<Vertex> singular_vertices(const SimplicialComplex& k) {
  if (!is_normal(k)) throw Error(ErrorCode::NotNormal, "singular_vertices needs a normal pseudomanifold");
  std::vector<Vertex> out;
  for (Vertex v : k.vertices()) {
    if (!surface_classify(link(k, v)).is_sphere()) out.push_back(v);
  }
  return out;
}

inline SingularityMultiset singularity_multiset(const SimplicialComplex& k) {
  SingularityMultiset m;
  for (Vertex v : singular_vertices(k)) m.push_back(surface_classify(link(k, v)));
  return sorted_multiset(std::move(m));
}

/// Greedy removal of degree-3 vertices from a 2-sphere, replacing each star by
/// the opposite triangle. Stacked exactly when this ends at the tetrahedron boundary.
inline bool is_stacked_2sphere_by_reduction(const SimplicialComplex& s) {
  SimplicialComplex k = s;
  while (true) {
    if (k.num_vertices() == 4 && k.facets().size() == 4) return true;
    bool reduced = false;
    for (Vertex v : k.vertices()) {
      if (k.degree(v) != 3) continue;
      const auto& n = k.neighbors(v);
      const Face opposite{n[0], n[1], n[2]};
      if (k.contains(opposite)) continue;
      std::vector<Face> faces;
      for (const Face& f : k.facets()) if (!f.contains(v)) faces.push_back(f);
      faces.push_back(opposite);
      k = SimplicialComplex::from_faces(std::move(faces));
      reduced = true;
      break;
    }
    if (!reduced) return false;
  }
}

/// Stacked-sphere test for normal d-pseudomanifolds, d >= 2.
/// d >= 3: g2 == 0. d == 2: sphere class and degree-3 reduction succeeds.
inline bool is_stacked_sphere(const SimplicialComplex& k) {
  if (!is_pseudomanifold(k) || !is_normal(k)) throw Error(ErrorCode::NotNormal, "is_stacked_sphere needs a normal pseudomanifold");
  if (k.dim() >= 3) return g2(k) == 0;
  if (k.dim() == 2) return surface_classify(k).is_sphere() && is_stacked_2sphere_by_reduction(k);
  return k.dim() == 1 && k.num_vertices() == 3;
}

/// Result of cutting a surface along a 3-cycle.
struct SideReport {
  int component_count = 0;
  bool two_sided = false;
  bool separates() const { return component_count == 2; }
  friend bool operator==(const SideReport&, const SideReport&) = default;
};

namespace detail {

// Components of the facet adjacency graph of a pure complex when ridges in
// `cut` may not be crossed. Returns the component id of every facet.
inline std::vector<int> facet_components(const SimplicialComplex& k, const std::set<Face>& cut) {
  const auto& facets = k.facets();
  std::map<Face, std::vector<std::size_t>> by_ridge;
  for (std::size_t f = 0; f < facets.size(); ++f) {
    for (const Face& r : facets[f].boundary()) by_ridge[r].push_back(f);
  }
  std::vector<int> comp(facets.size(), -1);
  int next = 0;
  for (std::size_t root = 0; root < facets.size(); ++root) {
    if (comp[root] >= 0) continue;
    comp[root] = next;
    std::deque<std::size_t> queue{root};
    while (!queue.empty()) {
      const std::size_t f = queue.front();
      queue.pop_front();
      for (const Face& r : facets[f].boundary()) {
        if (cut.count(r)) continue;
        for (std::size_t g : by_ridge[r]) {
          if (comp[g] < 0) {
            comp[g] = next;
            queue.push_back(g);
          }
        }
      }
    }
    ++next;
  }
  return comp;
}

}  // namespace detail

/// Cuts the closed surface `s` along the 3-cycle `circle` (its three edges must
/// be present). component_count counts facet-adjacency components when the
/// circle's edges may not be crossed; two_sided is decided by duplicating each
/// circle vertex once per local side (the two arcs of its link circle) and
/// counting the boundary circles of the cut surface.
inline SideReport cut_along_circle(const SimplicialComplex& s, const Circle& circle) {
  if (circle.length() != 3) throw Error(ErrorCode::NotACircleInSurface, "only 3-cycles are supported");
  if (!is_closed_surface(s)) throw Error(ErrorCode::NotASurface, "cut_along_circle needs a closed surface");
  const auto& c = circle.vertices;
  std::set<Face> cut_edges;
  for (std::size_t i = 0; i < 3; ++i) {
    Face e{c[i], c[(i + 1) % 3]};
    if (!s.contains(e)) throw Error(ErrorCode::NotACircleInSurface, "edge " + e.to_string() + " absent");
    cut_edges.insert(e);
  }

  SideReport report;
  {
    const auto comp = detail::facet_components(s, cut_edges);
    report.component_count = comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
  }

  // side[(circle vertex, triangle)] = which arc of lk(vertex) the triangle sits in.
  std::map<std::pair<Vertex, Face>, int> side;
  for (std::size_t i = 0; i < 3; ++i) {
    const Vertex x = c[i];
    const SimplicialComplex lk = link(s, x);
    const Vertex a = c[(i + 1) % 3];
    const Vertex b = c[(i + 2) % 3];
    // Walk the link circle from a; the arc reached first before hitting b is side 0.
    for (Vertex start_dir : lk.neighbors(a)) {
      const int arc = (start_dir == lk.neighbors(a).front()) ? 0 : 1;
      Vertex prev = a;
      Vertex cur = start_dir;
      side[{x, Face{x, prev, cur}}] = arc;
      while (cur != b) {
        const auto& nb = lk.neighbors(cur);
        const Vertex nxt = (nb[0] == prev) ? nb[1] : nb[0];
        prev = cur;
        cur = nxt;
        side[{x, Face{x, prev, cur}}] = arc;
      }
    }
  }

  // Boundary edges of the cut surface join (x, arc) to (y, arc') through each
  // triangle adjacent to a circle edge xy.
  std::map<std::pair<Vertex, int>, std::vector<std::pair<Vertex, int>>> graph;
  for (const Face& e : cut_edges) {
    for (const Face& t : s.facets_containing(e)) {
      const auto p = std::make_pair(e[0], side.at({e[0], t}));
      const auto q = std::make_pair(e[1], side.at({e[1], t}));
      graph[p].push_back(q);
      graph[q].push_back(p);
    }
  }
  int circles = 0;
  std::set<std::pair<Vertex, int>> seen;
  for (const auto& [node, nbrs] : graph) {
    if (seen.count(node)) continue;
    ++circles;
    std::deque<std::pair<Vertex, int>> queue{node};
    seen.insert(node);
    while (!queue.empty()) {
      auto cur = queue.front();
      queue.pop_front();
      for (auto nxt : graph[cur]) {
        if (seen.insert(nxt).second) queue.push_back(nxt);
      }
    }
  }
  report.two_sided = (circles == 2);
  return report;
}

}  // namespace pseudoform
