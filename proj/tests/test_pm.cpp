#include <gtest/gtest.h>

#include <random>

#include "pseudoform/catalog.hpp"
#include "pseudoform/pseudomanifold.hpp"
#include "testing.hpp"

using namespace pseudoform;
using pftest::error_of;

TEST(Pseudomanifold, Examples) {
  EXPECT_TRUE(is_normal_pseudomanifold(catalog::boundary_simplex(4)));
  EXPECT_TRUE(is_normal_pseudomanifold(catalog::suspended_rp2()));
  // two tetrahedra boundaries glued at a vertex: pseudomanifold, not normal
  auto wedge = SimplicialComplex::from_facets({{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3},
                                               {0, 4, 5}, {0, 4, 6}, {0, 5, 6}, {4, 5, 6}});
  EXPECT_TRUE(is_pseudomanifold(wedge));
  EXPECT_FALSE(is_normal(wedge));
  auto fin = SimplicialComplex::from_facets({{0, 1, 2}, {0, 1, 3}, {0, 1, 4}});
  EXPECT_FALSE(is_pseudomanifold(fin));
}

TEST(Surface, ClassesOfCatalogSurfaces) {
  EXPECT_EQ(surface_classify(catalog::boundary_simplex(3)), (SurfaceClass{0, true}));
  EXPECT_EQ(surface_classify(catalog::rp2_6()), (SurfaceClass{1, false}));
  EXPECT_EQ(surface_classify(catalog::torus_7()), (SurfaceClass{2, true}));
  EXPECT_EQ(surface_classify(catalog::cone_point_surface(2, false).first), (SurfaceClass{2, false}));
  EXPECT_EQ(error_of([] { surface_classify(catalog::boundary_simplex(4)); }), ErrorCode::NotASurface);
}

TEST(Surface, ClassAgreesWithEulerAndSignSearch) {
  std::mt19937_64 rng(41);
  std::vector<SimplicialComplex> pool{catalog::rp2_6(), catalog::torus_7(), catalog::cone_point_surface(2, false).first};
  for (int i = 0; i < 10; ++i) pool.push_back(pftest::flipped_sphere(8, 20, rng));
  for (const auto& s : pool) {
    auto f = pftest::brute_f_vector(s);
    const auto chi = f[1] - f[2] + f[3];
    const auto c = surface_classify(s);
    EXPECT_EQ(c.b1, 2 - chi);
    if (s.facets().size() <= 20) EXPECT_EQ(c.orientable, pftest::brute_orientable(s));
  }
}

TEST(Surface, ClassSurvivesSubdivisionAndRelabel) {
  std::mt19937_64 rng(43);
  for (int b1 = 1; b1 <= 4; ++b1) {
    for (bool orientable : {false, true}) {
      if (orientable && b1 % 2) continue;
      auto s = catalog::cone_point_surface(b1, orientable).first;
      const SurfaceClass want{b1, orientable};
      for (int step = 0; step < 5; ++step) {
        std::uniform_int_distribution<std::size_t> pick(0, s.facets().size() - 1);
        s = facet_subdivide(s, s.facets()[pick(rng)]).complex;
        EXPECT_EQ(surface_classify(s), want);
      }
      auto r = relabel(s, [](Vertex v) { return 3 * v + 100; });
      EXPECT_EQ(surface_classify(r), want);
    }
  }
}

TEST(Singularities, SuspensionOfRp2) {
  auto k = catalog::suspended_rp2();
  EXPECT_EQ(singular_vertices(k), (std::vector<Vertex>{6, 7}));
  EXPECT_EQ(singularity_multiset(k), (SingularityMultiset{{1, false}, {1, false}}));
  EXPECT_TRUE(singularity_multiset(catalog::cyclic_polytope_boundary(4, 7)).empty());
}

TEST(Singularities, CatalogExpectations) {
  for (const auto& e : catalog::standard_entries()) {
    SCOPED_TRACE(e.name);
    EXPECT_EQ(pftest::brute_f_vector(e.complex), e.f);
    EXPECT_TRUE(is_normal_pseudomanifold(e.complex));
    if (e.complex.dim() == 3) EXPECT_EQ(singularity_multiset(e.complex), e.singularities);
  }
}

TEST(Stacked, OctahedronIsNotStackedDespiteZeroG2) {
  auto oct = SimplicialComplex::from_facets({{0, 2, 4}, {0, 2, 5}, {0, 3, 4}, {0, 3, 5},
                                             {1, 2, 4}, {1, 2, 5}, {1, 3, 4}, {1, 3, 5}});
  EXPECT_EQ(g2(oct), 0);
  EXPECT_TRUE(surface_classify(oct).is_sphere());
  EXPECT_FALSE(is_stacked_sphere(oct));
}

TEST(Stacked, TwoSpheresMatchChordality) {
  // a triangulated 2-sphere is stacked iff its graph has no induced cycle of length >= 4
  std::mt19937_64 rng(47);
  int stacked = 0, not_stacked = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 6 + trial % 4;
    auto s = pftest::flipped_sphere(n, trial % 3 == 0 ? 0 : 6, rng);
    bool chordal = true;
    for (const auto& c : pftest::brute_induced_circles(s, n)) chordal = chordal && c.size() < 4;
    EXPECT_EQ(is_stacked_sphere(s), chordal);
    (chordal ? stacked : not_stacked)++;
  }
  EXPECT_GT(stacked, 0);
  EXPECT_GT(not_stacked, 0);
}

TEST(Stacked, ThreeDimensional) {
  std::mt19937_64 rng(53);
  for (int n = 5; n < 14; ++n) EXPECT_TRUE(is_stacked_sphere(pftest::stacked(3, n, rng)));
  EXPECT_FALSE(is_stacked_sphere(catalog::cyclic_polytope_boundary(4, 7)));
  EXPECT_FALSE(is_stacked_sphere(catalog::suspended_rp2()));
}

TEST(Cut, Examples) {
  auto tet = catalog::boundary_simplex(3);
  EXPECT_EQ(error_of([&] { cut_along_circle(tet, Circle{{0, 1, 4}}); }), ErrorCode::NotACircleInSurface);
  auto rp = catalog::rp2_6();
  for (const Face& t : missing_simplices(rp, 2)) {
    auto r = cut_along_circle(rp, Circle{t.vertices()});
    EXPECT_EQ(r.component_count, 1);
    EXPECT_FALSE(r.two_sided);
  }
  std::mt19937_64 rng(59);
  auto s = pftest::stacked(2, 9, rng);
  for (const Face& t : missing_simplices(s, 2)) {
    auto r = cut_along_circle(s, Circle{t.vertices()});
    EXPECT_TRUE(r.separates());
    EXPECT_TRUE(r.two_sided);
  }
}

TEST(Cut, AgreesWithOracles) {
  std::mt19937_64 rng(61);
  std::vector<SimplicialComplex> pool{catalog::rp2_6(), catalog::torus_7()};
  for (int b1 = 2; b1 <= 3; ++b1) pool.push_back(catalog::cone_point_surface(b1, false).first);
  pool.push_back(catalog::cone_point_surface(4, true).first);
  for (int i = 0; i < 6; ++i) pool.push_back(pftest::flipped_sphere(9, 10, rng));
  for (std::size_t i = 0, n = pool.size(); i < n; ++i) {
    auto s = pool[i];
    for (int step = 0; step < 3; ++step) {
      std::uniform_int_distribution<std::size_t> pick(0, s.facets().size() - 1);
      s = facet_subdivide(s, s.facets()[pick(rng)]).complex;
    }
    pool.push_back(s);
  }
  int one_sided = 0, nonsep_two_sided = 0;
  for (const auto& s : pool) {
    for (const Face& t : missing_simplices(s, 2)) {
      auto r = cut_along_circle(s, Circle{t.vertices()});
      EXPECT_EQ(r.component_count, pftest::brute_cut_components(s, t.vertices()));
      EXPECT_EQ(!r.two_sided, pftest::brute_one_sided(s, t.vertices()));
      one_sided += !r.two_sided;
      nonsep_two_sided += r.two_sided && !r.separates();
    }
  }
  EXPECT_GT(one_sided, 0);
  EXPECT_GT(nonsep_two_sided, 0);
}

TEST(Stacked, CatalogChains) {
  for (int n = 6; n < 14; ++n) {
    auto c = catalog::stacked_chain(3, n);
    EXPECT_EQ(c.num_vertices(), static_cast<std::size_t>(n));
    EXPECT_TRUE(is_stacked_sphere(c));
    auto a = catalog::apex_chain(3, n);
    EXPECT_EQ(pftest::brute_f_vector(a)[1], n + 1);
    EXPECT_TRUE(is_normal_pseudomanifold(a));
    EXPECT_TRUE(is_stacked_sphere(a));
    EXPECT_EQ(link(a, n), catalog::stacked_chain(2, n));
  }
}
