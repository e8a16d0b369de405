#pragma once

#include <bit>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "pseudoform/constructions.hpp"

namespace pseudoform::catalog {

/// Boundary of the n-simplex on vertices 0..n.
inline SimplicialComplex boundary_simplex(int n) {
  if (n < 1) throw Error(ErrorCode::BadParameters, "boundary_simplex needs n >= 1");
  std::vector<Face> facets;
  for (int skip = 0; skip <= n; ++skip) {
    std::vector<Vertex> f;
    for (int v = 0; v <= n; ++v) if (v != skip) f.push_back(v);
    facets.push_back(Face::from_sorted(std::move(f)));
  }
  return SimplicialComplex::from_faces(std::move(facets));
}

/// Random stacked d-sphere on n vertices: seeded facet subdivisions of the
/// boundary of the (d+1)-simplex.
inline SimplicialComplex stacked_sphere(int d, int n, std::uint64_t seed) {
  if (d < 1 || n < d + 2) throw Error(ErrorCode::BadParameters, "stacked_sphere needs n >= d + 2");
  std::mt19937_64 rng(seed);
  SimplicialComplex k = boundary_simplex(d + 1);
  while (static_cast<int>(k.num_vertices()) < n) {
    std::uniform_int_distribution<std::size_t> pick(0, k.facets().size() - 1);
    k = facet_subdivide(k, k.facets()[pick(rng)]).complex;
  }
  return k;
}

/// Stacked d-sphere on n vertices whose subdivisions march along a path: step
/// i subdivides the facet {i+1, ..., i+d+1}, so vertex labels far apart are far
/// apart in the graph.
inline SimplicialComplex stacked_chain(int d, int n) {
  if (d < 1 || n < d + 2) throw Error(ErrorCode::BadParameters, "stacked_chain needs n >= d + 2");
  SimplicialComplex k = boundary_simplex(d + 1);
  for (Vertex w = d + 2; w < n; ++w) {
    std::vector<Vertex> f;
    for (Vertex v = w - d - 1; v < w; ++v) f.push_back(v);
    k = facet_subdivide(k, Face(f), w).complex;
  }
  return k;
}

/// Stacked d-sphere with apex m whose link is stacked_chain(d - 1, m): the
/// boundary of the cone from m over the stacked ball {i, ..., i + d}.
inline SimplicialComplex apex_chain(int d, int m) {
  if (d < 2 || m < d + 1) throw Error(ErrorCode::BadParameters, "apex_chain needs m >= d + 1");
  std::vector<Face> facets;
  const SimplicialComplex link_chain = stacked_chain(d - 1, m);
  for (const Face& f : link_chain.facets()) facets.push_back(f.with(m));
  for (Vertex i = 0; i + d < m; ++i) {
    std::vector<Vertex> f;
    for (Vertex v = i; v <= i + d; ++v) f.push_back(v);
    facets.push_back(Face(f));
  }
  return SimplicialComplex::from_faces(std::move(facets));
}

/// The 6-vertex real projective plane (antipodal quotient of the icosahedron).
inline SimplicialComplex rp2_6() {
  return SimplicialComplex::from_facets({{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5},
                                         {1, 2, 4}, {2, 3, 5}, {1, 3, 4}, {2, 4, 5}, {1, 3, 5}});
}

/// The 7-vertex Moebius torus: triangles {i, i+1, i+3} and {i, i+2, i+3} mod 7.
inline SimplicialComplex torus_7() {
  std::vector<std::vector<Vertex>> f;
  for (int i = 0; i < 7; ++i) {
    f.push_back({i, (i + 1) % 7, (i + 3) % 7});
    f.push_back({i, (i + 2) % 7, (i + 3) % 7});
  }
  return SimplicialComplex::from_facets(f);
}

/// Boundary of the cyclic polytope C(d, n) for even d, by Gale's evenness
/// condition. C(4, 7) is a neighborly 3-sphere with g2 = 3.
inline SimplicialComplex cyclic_polytope_boundary(int d, int n) {
  if (d < 2 || d % 2 != 0 || n < d + 1) throw Error(ErrorCode::BadParameters, "cyclic polytope needs even d and n > d");
  std::vector<Face> facets;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) != d) continue;
    bool even = true;
    for (int i = 0; i < n && even; ++i) {
      for (int j = i + 1; j < n && even; ++j) {
        if ((mask >> i & 1) || (mask >> j & 1)) continue;
        int between = 0;
        for (int t = i + 1; t < j; ++t) between += (mask >> t & 1);
        even = between % 2 == 0;
      }
    }
    if (!even) continue;
    std::vector<Vertex> f;
    for (int i = 0; i < n; ++i) if (mask >> i & 1) f.push_back(i);
    facets.push_back(Face::from_sorted(std::move(f)));
  }
  return SimplicialComplex::from_faces(std::move(facets));
}

/// Triangulated surface of the given class with a graph cone point, built as a
/// connected sum of copies of rp2_6 or torus_7 that always identifies the
/// current cone point with a vertex of the next summand. Every vertex of each
/// summand is a cone point, so the merged vertex stays adjacent to everything.
/// Returns the surface and one of its cone points.
inline std::pair<SimplicialComplex, Vertex> cone_point_surface(int b1, bool orientable) {
  if (b1 < 0 || (orientable && b1 % 2 != 0)) throw Error(ErrorCode::BadParameters, "invalid surface class");
  if (b1 == 0) {
    if (!orientable) throw Error(ErrorCode::BadParameters, "b1 = 0 is the sphere");
    return {boundary_simplex(3), 0};
  }
  const bool use_torus = orientable;
  const int pieces = orientable ? b1 / 2 : b1;
  const SimplicialComplex unit = use_torus ? torus_7() : rp2_6();
  SimplicialComplex s = unit;
  const Vertex cone = 0;
  for (int i = 1; i < pieces; ++i) {
    const Face sigma = s.facets_containing(Face{cone}).front();
    const Face tau = unit.facets_containing(Face{0}).front();
    std::vector<std::pair<Vertex, Vertex>> pairs{{cone, 0}};
    auto rest_s = sigma.without(cone), rest_t = tau.without(0);
    pairs.emplace_back(rest_s[0], rest_t[0]);
    pairs.emplace_back(rest_s[1], rest_t[1]);
    s = connected_sum(s, unit, FacetBijection::make(pairs, FoldKind::Plain)).complex;
  }
  detail::ensure(surface_classify(s) == SurfaceClass{b1, orientable}, "cone-point surface has the wrong class");
  detail::ensure(s.degree(cone) + 1 == s.num_vertices(), "cone point lost");
  return {std::move(s), cone};
}

/// One-vertex suspension of rp2_6 at vertex 0 (suspension points 6 and 7).
inline SimplicialComplex suspended_rp2() { return one_vertex_suspension(rp2_6(), 0).complex; }

/// First edge folding of a stacked 3-sphere (chains on 10..12 vertices, then
/// seeded random ones) whose normality flag matches `normal`. Returns the
/// unfolded sphere with the fold result.
inline std::pair<SimplicialComplex, EdgeFoldResult> edge_folded_sphere(bool normal = true) {
  for (std::uint64_t seed = 0; seed < 64; ++seed) {
    const int n = 10 + static_cast<int>(seed % 3);
    SimplicialComplex k = seed < 3 ? stacked_chain(3, n) : stacked_sphere(3, n, seed);
    for (const auto& psi : admissible_bijections(k, FoldKind::EdgeFolding)) {
      auto r = edge_fold(k, psi);
      if ((r.normality == NormalityFlag::Normal) == normal) return {std::move(k), std::move(r)};
    }
  }
  throw Error(ErrorCode::SearchExhausted, "no edge folding with the requested normality");
}

struct CatalogEntry {
  std::string name;
  SimplicialComplex complex;
  std::vector<std::int64_t> f;         // expected f-vector, f_{-1} first
  SingularityMultiset singularities;   // expected; empty for surfaces
};

/// Fixed complexes with hand-recorded expectations.
inline std::vector<CatalogEntry> standard_entries() {
  const SurfaceClass rp2{1, false}, t2{2, true};
  std::vector<CatalogEntry> out;
  out.push_back({"boundary_simplex_3", boundary_simplex(3), {1, 4, 6, 4}, {}});
  out.push_back({"boundary_simplex_4", boundary_simplex(4), {1, 5, 10, 10, 5}, {}});
  out.push_back({"rp2_6", rp2_6(), {1, 6, 15, 10}, {}});
  out.push_back({"torus_7", torus_7(), {1, 7, 21, 14}, {}});
  out.push_back({"klein_9", cone_point_surface(2, false).first, {1, 9, 27, 18}, {}});
  out.push_back({"stacked_2sphere_8", stacked_sphere(2, 8, 1), {1, 8, 18, 12}, {}});
  out.push_back({"stacked_3sphere_9", stacked_sphere(3, 9, 1), {1, 9, 26, 34, 17}, {}});
  out.push_back({"stacked_3sphere_14", stacked_sphere(3, 14, 2), {1, 14, 46, 64, 32}, {}});
  out.push_back({"cyclic_4_7", cyclic_polytope_boundary(4, 7), {1, 7, 21, 28, 14}, {}});
  out.push_back({"suspended_rp2", suspended_rp2(), {1, 7, 21, 30, 15}, {rp2, rp2}});
  out.push_back({"suspended_torus", one_vertex_suspension(torus_7(), 0).complex, {1, 8, 28, 44, 22}, {t2, t2}});
  return out;
}

}  // namespace pseudoform::catalog
