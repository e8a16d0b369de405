#include <gtest/gtest.h>

#include <fstream>
#include <random>

#include "pseudoform.hpp"
#include "testing.hpp"

using namespace pseudoform;
using pftest::error_of;
using io::json;

namespace {

std::string golden_path(const std::string& name) { return std::string(PSEUDOFORM_GOLDEN_DIR) + "/" + name + ".json"; }

std::int64_t brute_g2(const SimplicialComplex& k) {
  const auto f = pftest::brute_f_vector(k);
  const std::int64_t d = k.dim();
  return f[2] - (d + 1) * f[1] + (d + 2) * (d + 1) / 2;
}

// Links of vertices that are not 2-spheres, as (b1, orientable) from the Euler
// characteristic and an exhaustive orientation search.
std::multiset<std::pair<int, bool>> brute_singularities(const SimplicialComplex& k) {
  std::multiset<std::pair<int, bool>> out;
  for (Vertex v : k.vertices()) {
    const auto lk = link(k, v);
    const auto f = pftest::brute_f_vector(lk);
    const std::int64_t chi = f[1] - f[2] + f[3];
    if (chi == 2) continue;
    out.insert({static_cast<int>(2 - chi), pftest::brute_orientable(lk)});
  }
  return out;
}

}  // namespace

TEST(Json, ComplexRoundtrip) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 20; ++i) {
    const auto k = pftest::random_complex(rng, 9, 4, 7);
    const auto j = io::to_json(k, "r");
    EXPECT_EQ(j["name"], "r");
    EXPECT_EQ(io::complex_from_json(json::parse(j.dump())), k);
  }
}

TEST(Json, RecordAndTraceRoundtrip) {
  const auto base = catalog::suspended_rp2();
  const auto k = facet_subdivide(base, base.facets().front()).complex;
  const auto t = decompose_relmin(k, 6);
  const auto back = io::trace_from_json(json::parse(io::to_json(t).dump()));
  EXPECT_EQ(replay(back), k);
  EXPECT_EQ(trace_ops(back), trace_ops(t));
  auto [sphere, fold] = catalog::edge_folded_sphere();
  EXPECT_EQ(io::record_from_json(io::to_json(fold.record)), fold.record);
}

TEST(Json, MalformedInput) {
  EXPECT_EQ(error_of([] { io::complex_from_json(json::parse(R"({"dim":2})")); }), ErrorCode::ParseError);
  EXPECT_EQ(error_of([] { io::complex_from_json(json::parse(R"({"facets":[[0,"a"]]})")); }), ErrorCode::ParseError);
  EXPECT_EQ(error_of([] { io::complex_from_json(json::parse(R"({"dim":3,"facets":[[0,1,2]]})")); }), ErrorCode::ParseError);
  EXPECT_EQ(error_of([] { io::complex_from_json(json::parse(R"({"facets":[[0,1,1]]})")); }), ErrorCode::DuplicateVertexInFacet);
  EXPECT_EQ(error_of([] { io::record_from_json(json::parse(R"({"inputs":[]})")); }), ErrorCode::ParseError);
  EXPECT_EQ(error_of([] { io::read_file("/nonexistent/x.json"); }), ErrorCode::ParseError);
  EXPECT_EQ(error_of([] { io::multiset_from_json(json::parse(R"(["Q"])")); }), ErrorCode::ParseError);
}

TEST(Json, MultisetNames) {
  const auto m = io::multiset_from_json(json::parse(R"(["RP2", "T2", {"b1": 3, "orientable": false}])"));
  EXPECT_EQ(m, (SingularityMultiset{{1, false}, {2, true}, {3, false}}));
}

TEST(Golden, FilesMatchGenerators) {
  for (const auto& g : catalog::golden_instances()) {
    SCOPED_TRACE(g.name);
    const auto stored = io::read_file(golden_path(g.name));
    EXPECT_EQ(io::complex_from_json(stored), g.complex);
    EXPECT_EQ(io::complex_from_json(stored["base"]), g.base);
    if (g.record) {
      const auto rec = io::record_from_json(stored["record"]);
      EXPECT_EQ(rec, *g.record);
      EXPECT_EQ(apply_record(rec, {g.base}), g.complex);
    } else {
      EXPECT_TRUE(stored["record"].is_null());
    }
  }
  EXPECT_EQ(io::complex_from_json(io::read_file(golden_path("rp2_6"))), catalog::rp2_6());
  EXPECT_EQ(io::complex_from_json(io::read_file(golden_path("suspended_rp2"))), catalog::suspended_rp2());
  EXPECT_EQ(io::complex_from_json(io::read_file(golden_path("boundary_simplex_4"))), catalog::boundary_simplex(4));
}

TEST(Golden, ConstructionEquations) {
  auto load = [](const std::string& n) {
    const auto j = io::read_file(golden_path(n));
    return std::pair{io::complex_from_json(j["base"]), io::complex_from_json(j)};
  };
  {
    const auto [base, k] = load("edge_folded_sphere");
    EXPECT_EQ(brute_g2(base), 0);
    EXPECT_EQ(brute_g2(k), 3);  // +C(3,2)
    EXPECT_EQ(brute_singularities(k), (std::multiset<std::pair<int, bool>>{{1, false}, {1, false}}));
    EXPECT_TRUE(is_normal_pseudomanifold(k));
    EXPECT_FALSE(is_normal_pseudomanifold(load("edge_folded_sphere_nonnormal").second));
  }
  {
    const auto [base, k] = load("vertex_folded_suspension");
    EXPECT_EQ(brute_g2(base), 3);
    EXPECT_EQ(brute_g2(k), 9);  // +C(4,2)
    EXPECT_EQ(brute_singularities(k), (std::multiset<std::pair<int, bool>>{{1, false}, {3, false}}));
  }
  {
    const auto [base, k] = load("handle_addition");
    EXPECT_EQ(brute_g2(k), 10);  // +C(5,2)
    EXPECT_TRUE(brute_singularities(k).empty());
    EXPECT_TRUE(relatively_minimal_witnesses(k).empty());
  }
  {
    const auto [base, k] = load("distance3_stacked_sphere");
    EXPECT_EQ(brute_g2(k), 0);
    EXPECT_FALSE(admissible_bijections(k, FoldKind::Plain, std::nullopt, 1).empty());
  }
  {
    const auto [base, k] = load("klein_cone_point");
    EXPECT_EQ(pftest::brute_f_vector(k), (std::vector<std::int64_t>{1, 9, 27, 18}));
    EXPECT_FALSE(pftest::brute_orientable(k));
    EXPECT_FALSE(graph_cone_points(k).empty());
  }
}

TEST(Golden, DecomposeReplayIsomorphic) {
  for (const auto& name : {"edge_folded_sphere", "vertex_folded_suspension", "suspended_rp2", "suspended_klein",
                           "boundary_simplex_4", "distance3_stacked_sphere"}) {
    SCOPED_TRACE(name);
    const auto k = io::complex_from_json(io::read_file(golden_path(name)));
    const auto w = relatively_minimal_witnesses(k);
    ASSERT_FALSE(w.empty());
    const auto t = io::trace_from_json(io::to_json(decompose_relmin(k, w.front().face.front())));
    EXPECT_TRUE(is_isomorphic(replay(t), k).has_value());
  }
}
