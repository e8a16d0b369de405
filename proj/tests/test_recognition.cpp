#include <gtest/gtest.h>

#include <random>

#include "pseudoform/catalog.hpp"
#include "pseudoform/isomorphism.hpp"
#include "pseudoform/recognition.hpp"
#include "testing.hpp"

using namespace pseudoform;
using pftest::error_of;

namespace {

template <typename T>
const T& pick(const std::vector<T>& v, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> d(0, v.size() - 1);
  return v[d(rng)];
}

// Planted edge folds of stacked 3-spheres on at most 12 vertices.
std::vector<std::pair<SimplicialComplex, FacetBijection>> planted_edge_folds(int want, bool normal) {
  std::vector<std::pair<SimplicialComplex, FacetBijection>> out;
  for (std::uint64_t seed = 0; seed < 400 && static_cast<int>(out.size()) < want; ++seed) {
    auto k = seed % 2 ? catalog::stacked_sphere(3, 10 + static_cast<int>(seed % 3), seed) : catalog::stacked_chain(3, 10 + static_cast<int>(seed % 3));
    auto found = admissible_bijections(k, FoldKind::EdgeFolding);
    std::mt19937_64 rng(seed);
    std::shuffle(found.begin(), found.end(), rng);
    for (const auto& psi : found) {
      if ((edge_fold(k, psi).normality == NormalityFlag::Normal) == normal) {
        out.emplace_back(k, psi);
        break;
      }
    }
  }
  return out;
}

}  // namespace

TEST(Classify, SubdividedSimplexBoundary) {
  auto k = facet_subdivide(catalog::boundary_simplex(4), Face{1, 2, 3, 4}).complex;
  auto c = classify_missing_tetrahedron(k, Face{1, 2, 3, 4});
  EXPECT_EQ(c.verdict, Verdict::SumOrHandle);
  for (const auto& s : c.sides) EXPECT_TRUE(s.side.separates() && s.side.two_sided);
  EXPECT_EQ(error_of([&] { classify_missing_tetrahedron(k, Face{0, 1, 2, 3}); }), ErrorCode::NotMissing);
  EXPECT_EQ(error_of([&] { classify_missing_tetrahedron(k, Face{0, 1, 2, 9}); }), ErrorCode::NotMissing);
}

TEST(Classify, SuspendedRp2IsAnEdgeFold) {
  auto r = one_vertex_suspension(catalog::rp2_6(), 0);
  const Face xy{r.record.fresh.at("x"), r.record.fresh.at("y")};
  int seen = 0;
  for (const Face& tau : missing_simplices(r.complex, 3)) {
    auto c = classify_missing_tetrahedron(r.complex, tau);
    if (!tau.contains(xy)) continue;
    ++seen;
    EXPECT_EQ(c.verdict, Verdict::EdgeFoldAt);
    EXPECT_EQ(c.edge, xy);
    auto u = edge_unfold(r.complex, tau, xy);
    EXPECT_EQ(g2(u.complex), 0);
    EXPECT_TRUE(is_stacked_sphere(u.complex));
  }
  EXPECT_GT(seen, 0);
}

TEST(Classify, SuspendedTorusIsTheAnnulusCase) {
  auto r = one_vertex_suspension(catalog::torus_7(), 0);
  const Face xy{r.record.fresh.at("x"), r.record.fresh.at("y")};
  int seen = 0;
  for (const Face& tau : missing_simplices(r.complex, 3)) {
    if (!tau.contains(xy)) continue;
    ++seen;
    auto c = classify_missing_tetrahedron(r.complex, tau);
    EXPECT_EQ(c.verdict, Verdict::EdgeFoldAnnulusNonSeparating);
    EXPECT_EQ(error_of([&] { edge_unfold(r.complex, tau, xy); }), ErrorCode::AnnulusCaseUnsupported);
  }
  EXPECT_GT(seen, 0);
}

TEST(Classify, ParityHoldsOnNormalPseudomanifolds) {
  std::mt19937_64 rng(109);
  std::vector<SimplicialComplex> pool{catalog::suspended_rp2(), one_vertex_suspension(catalog::torus_7(), 0).complex,
                                      catalog::cyclic_polytope_boundary(4, 7), catalog::cyclic_polytope_boundary(4, 8)};
  for (int i = 0; i < 8; ++i) {
    auto k = pftest::stacked(3, 11, rng);
    auto e = admissible_bijections(k, FoldKind::EdgeFolding, std::nullopt, 10);
    for (const auto& psi : e) {
      auto r = edge_fold(k, psi);
      if (r.normality == NormalityFlag::Normal) {
        pool.push_back(r.complex);
        break;
      }
    }
    pool.push_back(one_vertex_suspension(pftest::flipped_sphere(8, 6, rng), 0).complex);
  }
  for (const auto& k : pool) {
    ASSERT_TRUE(is_normal_pseudomanifold(k));
    for (const Face& tau : missing_simplices(k, 3)) {
      EXPECT_TRUE(parity_violations(side_profile(k, tau)).empty());
      EXPECT_NO_THROW(classify_missing_tetrahedron(k, tau));
    }
  }
}

TEST(Roundtrip, PlantedVertexFolds) {
  std::mt19937_64 rng(113);
  int planted = 0;
  for (int m = 9; m <= 11; ++m) {
    auto k = catalog::apex_chain(3, m);  // m + 1 <= 12 vertices
    for (const auto& psi : admissible_bijections(k, FoldKind::VertexFolding)) {
      auto folded = vertex_fold(k, psi);
      auto c = classify_missing_tetrahedron(folded.complex, psi.source());
      ASSERT_EQ(c.verdict, Verdict::VertexFoldAt);
      ASSERT_EQ(c.apex, psi.apex());
      auto u = vertex_unfold(folded.complex, psi.source(), psi.apex());
      EXPECT_TRUE(is_isomorphic(u.complex, k));
      EXPECT_EQ(vertex_fold(u.complex, u.psi).complex, folded.complex);
      ++planted;
    }
  }
  EXPECT_GT(planted, 10);
}

TEST(Roundtrip, PlantedEdgeFolds) {
  auto planted = planted_edge_folds(25, true);
  ASSERT_GE(planted.size(), 10u);
  for (const auto& [k, psi] : planted) {
    ASSERT_LE(k.num_vertices(), 12u);
    auto folded = edge_fold(k, psi);
    auto c = classify_missing_tetrahedron(folded.complex, psi.source());
    ASSERT_EQ(c.verdict, Verdict::EdgeFoldAt);
    ASSERT_EQ(c.edge, psi.fold_edge());
    auto u = edge_unfold(folded.complex, psi.source(), psi.fold_edge());
    EXPECT_TRUE(is_isomorphic(u.complex, k));
    auto again = edge_fold(u.complex, u.psi);
    EXPECT_EQ(again.complex, folded.complex);
    EXPECT_EQ(again.normality, NormalityFlag::Normal);
  }
}

TEST(Roundtrip, TwoDimensionalVertexUnfold) {
  // the projective plane unfolds to an 8-vertex stacked 2-sphere
  auto rp = catalog::rp2_6();
  for (const Face& tau : missing_simplices(rp, 2)) {
    for (Vertex apex : tau) {
      auto u = vertex_unfold(rp, tau, apex);
      EXPECT_EQ(u.complex.num_vertices(), 8u);
      EXPECT_TRUE(is_stacked_sphere(u.complex));
      EXPECT_EQ(vertex_fold(u.complex, u.psi).complex, rp);
    }
  }
}

TEST(Split, ConnectedSumsResum) {
  std::mt19937_64 rng(127);
  std::vector<SimplicialComplex> pool{catalog::suspended_rp2(), catalog::cyclic_polytope_boundary(4, 7), pftest::stacked(3, 8, rng)};
  int checked = 0;
  for (const auto& a : pool) {
    for (const auto& b : pool) {
      const Face& s = pick(a.facets(), rng);
      auto t = pick(b.facets(), rng).vertices();
      std::shuffle(t.begin(), t.end(), rng);
      std::vector<std::pair<Vertex, Vertex>> pairs;
      for (std::size_t i = 0; i < 4; ++i) pairs.emplace_back(s[i], t[i]);
      auto sum = connected_sum(a, b, FacetBijection::make(pairs, FoldKind::Plain));
      auto split = split_connected_sum(sum.complex, s);
      ASSERT_TRUE(std::holds_alternative<SplitResult>(split));
      const auto& parts = std::get<SplitResult>(split);
      const bool direct = is_isomorphic(parts.first, a) && is_isomorphic(parts.second, b);
      const bool swapped = is_isomorphic(parts.first, b) && is_isomorphic(parts.second, a);
      EXPECT_TRUE(direct || swapped);
      EXPECT_EQ(connected_sum(parts.first, parts.second, parts.psi).complex, sum.complex);
      ++checked;
    }
  }
  EXPECT_EQ(checked, 9);
}

TEST(Split, HandleGivesWitness) {
  auto k = catalog::stacked_chain(3, 16);
  auto psi = admissible_bijections(k, FoldKind::Plain, std::nullopt, 1).at(0);
  auto h = handle_addition(k, psi);
  auto c = classify_missing_tetrahedron(h.complex, psi.source());
  EXPECT_EQ(c.verdict, Verdict::SumOrHandle);
  auto split = split_connected_sum(h.complex, psi.source());
  ASSERT_TRUE(std::holds_alternative<HandleWitness>(split));
  EXPECT_EQ(std::get<HandleWitness>(split).tetra, psi.source());
}

TEST(Errors, VerdictMismatches) {
  auto k = catalog::apex_chain(3, 10);
  auto psi = admissible_bijections(k, FoldKind::VertexFolding, std::nullopt, 1).at(0);
  auto folded = vertex_fold(k, psi).complex;
  const Face tau = psi.source();
  Vertex other = tau[0] == psi.apex() ? tau[1] : tau[0];
  EXPECT_EQ(error_of([&] { vertex_unfold(folded, tau, other); }), ErrorCode::VerdictMismatch);
  EXPECT_EQ(error_of([&] { split_connected_sum(folded, tau); }), ErrorCode::VerdictMismatch);
  EXPECT_EQ(error_of([&] { edge_unfold(folded, tau, Face{tau[0], tau[1]}); }), ErrorCode::VerdictMismatch);
}
