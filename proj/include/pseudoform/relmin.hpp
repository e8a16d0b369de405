#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pseudoform/constructions.hpp"
#include "pseudoform/face_vectors.hpp"
#include "pseudoform/pseudomanifold.hpp"

namespace pseudoform {

struct RelMinWitness {
  Face face;
  std::int64_t g2_complex = 0;
  std::int64_t g2_link = 0;
  friend bool operator==(const RelMinWitness&, const RelMinWitness&) = default;
};

namespace detail {

inline void require_normal_3plus(const SimplicialComplex& k, const char* what) {
  if (k.dim() < 3 || !is_normal_pseudomanifold(k)) {
    throw Error(ErrorCode::NotNormal, std::string(what) + " needs a normal pseudomanifold of dimension >= 3");
  }
}

}  // namespace detail

/// Nonempty faces of codimension >= 3 whose link has the same g2 as K.
inline std::vector<RelMinWitness> relatively_minimal_witnesses(const SimplicialComplex& k) {
  detail::require_normal_3plus(k, "relatively_minimal_witnesses");
  const std::int64_t total = g2(k);
  std::vector<RelMinWitness> out;
  for (int dim = 0; dim <= k.dim() - 3; ++dim) {
    for (const Face& f : k.faces(dim)) {
      const std::int64_t gl = g2(link(k, f));
      if (gl == total) out.push_back({f, total, gl});
    }
  }
  return out;
}

inline bool is_relatively_minimal_at(const SimplicialComplex& k, const Face& sigma) {
  detail::require_normal_3plus(k, "is_relatively_minimal_at");
  if (!k.contains(sigma) || sigma.empty() || k.dim() - (static_cast<int>(sigma.size()) - 1) < 3) return false;
  return g2(link(k, sigma)) == g2(k);
}

struct StructureReport {
  bool circles_in_link = true;
  std::optional<Circle> circle_witness;   // induced circle leaving lk sigma
  bool outside_links_stacked = true;
  std::optional<Vertex> vertex_witness;   // vertex outside st sigma with a non-stacked link
  bool ok() const { return circles_in_link && outside_links_stacked; }
};

/// Checks the two consequences of relative minimality at sigma: induced circles
/// up to max_len lie in lk sigma, and vertices outside st sigma have stacked links.
inline StructureReport check_structure_lemmas(const SimplicialComplex& k, const Face& sigma, int max_len = 6) {
  detail::require_normal_3plus(k, "check_structure_lemmas");
  const SimplicialComplex lk = link(k, sigma);
  const SimplicialComplex st = star(k, sigma);
  StructureReport rep;
  for (const Circle& c : induced_circles(k, max_len)) {
    bool inside = true;
    for (std::size_t i = 0; i < c.length() && inside; ++i) {
      inside = lk.contains(Face{c.vertices[i], c.vertices[(i + 1) % c.length()]});
    }
    if (!inside) {
      rep.circles_in_link = false;
      rep.circle_witness = c;
      break;
    }
  }
  for (Vertex v : k.vertices()) {
    if (st.has_vertex(v)) continue;
    if (!is_stacked_sphere(link(k, v))) {
      rep.outside_links_stacked = false;
      rep.vertex_witness = v;
      break;
    }
  }
  return rep;
}

struct PeelResult {
  SimplicialComplex core;
  std::vector<ConstructionRecord> records;  // in replay order: apply front to back on core
  bool reached_simplex_boundary = false;
};

/// Repeated inverse facet subdivisions at unprotected vertices whose link is the
/// boundary of a tetrahedron missing from K.
inline PeelResult peel_facet_subdivisions(const SimplicialComplex& k, const std::vector<Vertex>& protected_vertices) {
  if (k.dim() != 3 || !is_normal_pseudomanifold(k)) throw Error(ErrorCode::NotNormal, "peeling needs a normal 3-pseudomanifold");
  PeelResult res{k, {}, false};
  std::vector<ConstructionRecord> undone;
  while (true) {
    if (res.core.num_vertices() == 5 && res.core.facets().size() == 5) {
      res.reached_simplex_boundary = true;
      break;
    }
    bool peeled = false;
    for (Vertex v : res.core.vertices()) {
      if (res.core.degree(v) != 4) continue;
      if (std::find(protected_vertices.begin(), protected_vertices.end(), v) != protected_vertices.end()) continue;
      const Face sigma(res.core.neighbors(v));
      if (res.core.contains(sigma)) continue;
      if (link(res.core, v) != SimplicialComplex::from_faces(sigma.boundary())) continue;
      std::vector<Face> facets;
      for (const Face& f : res.core.facets()) if (!f.contains(v)) facets.push_back(f);
      facets.push_back(sigma);
      SimplicialComplex smaller = SimplicialComplex::from_faces(std::move(facets));
      ConstructionRecord rec;
      rec.op = "facet_subdivision";
      rec.inputs = {"input"};
      rec.face = sigma;
      rec.fresh = {{"w", v}};
      detail::ensure(facet_subdivide(smaller, sigma, v).complex == res.core, "peeled subdivision replays exactly");
      undone.push_back(std::move(rec));
      res.core = std::move(smaller);
      peeled = true;
      break;
    }
    if (!peeled) break;
  }
  res.records.assign(undone.rbegin(), undone.rend());
  return res;
}

/// h3 - h1 equals the sum over vertices of 2 - chi(lk v), for normal 3-pseudomanifolds.
inline bool verify_h_identity(const SimplicialComplex& k) {
  if (k.dim() != 3 || !is_normal_pseudomanifold(k)) throw Error(ErrorCode::NotNormal, "h identity needs a normal 3-pseudomanifold");
  const auto r = face_vectors(k);
  std::int64_t rhs = 0;
  for (Vertex v : k.vertices()) rhs += 2 - face_vectors(link(k, v)).euler;
  return r.h.at(3) - r.h.at(1) == rhs;
}

}  // namespace pseudoform
