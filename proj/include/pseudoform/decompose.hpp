#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "pseudoform/recognition.hpp"
#include "pseudoform/relmin.hpp"
#include "pseudoform/trace.hpp"

namespace pseudoform {

/// True when every vertex and edge of K already lies in the closed star of u.
inline bool graph_is_star_graph(const SimplicialComplex& k, Vertex u) {
  const auto& nb = k.neighbors(u);
  if (nb.size() + 1 != k.num_vertices()) return false;
  for (const Face& e : k.faces(1)) {
    if (e.contains(u)) continue;
    if (!k.contains(e.with(u))) return false;
  }
  return true;
}

/// Checks whether K is the one-vertex suspension of lk(u) with suspension
/// points u and v2. Returns the suspended surface, with v2 renamed to `cone`.
inline std::optional<SimplicialComplex> suspension_base(const SimplicialComplex& k, Vertex u, Vertex v2, Vertex cone) {
  if (!k.contains(Face{u, v2})) return std::nullopt;
  SimplicialComplex base = relabel(link(k, u), std::map<Vertex, Vertex>{{v2, cone}});
  if (one_vertex_suspension(base, cone, u, v2).complex != k) return std::nullopt;
  return base;
}

namespace detail {

inline TraceNode wrap_records(TraceNode base, const std::vector<ConstructionRecord>& records) {
  for (const auto& r : records) base = TraceNode::make_node(r, {std::move(base)});
  return base;
}

inline Vertex pick_witness(const SimplicialComplex& k, Vertex preferred) {
  if (k.has_vertex(preferred) && is_relatively_minimal_at(k, Face{preferred})) return preferred;
  for (const auto& w : relatively_minimal_witnesses(k)) {
    if (w.face.size() == 1) return w.face.front();
  }
  throw Error(ErrorCode::DecompositionStuck, "piece with " + std::to_string(k.num_vertices()) +
                                                 " vertices and g2 " + std::to_string(g2(k)) + " has no vertex witness");
}

inline TraceNode decompose_at(const SimplicialComplex& k, Vertex u, int depth) {
  if (depth > 64) throw Error(ErrorCode::DecompositionStuck, "recursion too deep");
  const PeelResult peel = peel_facet_subdivisions(k, {u});
  const SimplicialComplex& core = peel.core;
  if (peel.reached_simplex_boundary) return wrap_records(TraceNode::make_leaf("boundary_simplex_4", core), peel.records);
  if (!graph_is_star_graph(core, u)) {
    throw Error(ErrorCode::DecompositionStuck, "core graph is not the graph of st(" + std::to_string(u) + "), " +
                                                   std::to_string(core.num_vertices()) + " vertices");
  }

  const Vertex cone = core.max_vertex() + 1;
  for (Vertex v2 : core.neighbors(u)) {
    if (auto base = suspension_base(core, u, v2, cone)) {
      auto rec = one_vertex_suspension(*base, cone, u, v2).record;
      TraceNode node = TraceNode::make_node(std::move(rec), {TraceNode::make_leaf("surface", std::move(*base))});
      return wrap_records(std::move(node), peel.records);
    }
  }

  std::vector<Face> tetras;
  for (const Face& t : missing_simplices(core, 3)) if (t.contains(u)) tetras.push_back(t);
  for (const Face& t : missing_simplices(core, 3)) if (!t.contains(u)) tetras.push_back(t);

  std::vector<MissingTetraClassification> cls;
  for (const Face& t : tetras) cls.push_back(classify_missing_tetrahedron(core, t));

  for (const auto& c : cls) {
    if (c.verdict != Verdict::SumOrHandle) continue;
    auto split = split_connected_sum(core, c.tetra);
    if (!std::holds_alternative<SplitResult>(split)) continue;
    auto& s = std::get<SplitResult>(split);
    auto rec = connected_sum(s.first, s.second, s.psi).record;
    std::vector<TraceNode> kids;
    for (const SimplicialComplex* piece : {&s.first, &s.second}) {
      kids.push_back(decompose_at(*piece, pick_witness(*piece, u), depth + 1));
    }
    return wrap_records(TraceNode::make_node(std::move(rec), std::move(kids)), peel.records);
  }
  for (const auto& c : cls) {
    if (c.verdict != Verdict::VertexFoldAt) continue;
    auto un = vertex_unfold(core, c.tetra, *c.apex);
    auto rec = vertex_fold(un.complex, un.psi).record;
    TraceNode child = decompose_at(un.complex, pick_witness(un.complex, u), depth + 1);
    return wrap_records(TraceNode::make_node(std::move(rec), {std::move(child)}), peel.records);
  }
  for (const auto& c : cls) {
    if (c.verdict != Verdict::EdgeFoldAt) continue;
    auto un = edge_unfold(core, c.tetra, *c.edge);
    auto rec = edge_fold(un.complex, un.psi).record;
    TraceNode child = decompose_at(un.complex, pick_witness(un.complex, u), depth + 1);
    return wrap_records(TraceNode::make_node(std::move(rec), {std::move(child)}), peel.records);
  }
  std::string why = "no usable missing tetrahedron in a core with " + std::to_string(core.num_vertices()) +
                    " vertices, g2 " + std::to_string(g2(core)) + ", verdicts:";
  for (const auto& c : cls) why += " " + c.tetra.to_string() + "=" + std::string(to_string(c.verdict));
  throw Error(ErrorCode::DecompositionStuck, why);
}

}  // namespace detail

/// Trace of constructions that rebuilds K exactly from ∂Δ⁴ or surface seeds,
/// for K relatively minimal at the vertex u.
inline OperationTrace decompose_relmin(const SimplicialComplex& k, Vertex u) {
  if (k.dim() != 3 || !is_normal_pseudomanifold(k)) throw Error(ErrorCode::NotNormal, "decomposition needs a normal 3-pseudomanifold");
  if (!k.has_vertex(u)) throw Error(ErrorCode::VertexNotPresent, std::to_string(u));
  if (!is_relatively_minimal_at(k, Face{u})) {
    throw Error(ErrorCode::HypothesisNotMet, "not relatively minimal at " + std::to_string(u));
  }
  TraceNode t = detail::decompose_at(k, u, 0);
  detail::ensure(replay(t) == k, "decomposition replays to the input");
  return t;
}

enum class G2ThreeKind { NoSingularities, SuspendedProjectivePlane };

struct G2ThreeVerdict {
  G2ThreeKind kind = G2ThreeKind::NoSingularities;
  std::optional<SimplicialComplex> psi;  // the suspended RP2 triangulation
  std::optional<Vertex> cone;            // graph cone point of psi that was suspended
  std::vector<Vertex> suspension_points;
  std::vector<ConstructionRecord> records;  // subdivisions applied to the suspension, in order
};

inline G2ThreeVerdict classify_g2_3(const SimplicialComplex& k) {
  if (k.dim() != 3 || !is_normal_pseudomanifold(k)) throw Error(ErrorCode::NotNormal, "classification needs a normal 3-pseudomanifold");
  if (const auto g = g2(k); g != 3) throw Error(ErrorCode::G2Mismatch, "g2 is " + std::to_string(g));
  G2ThreeVerdict out;
  const auto sing = singular_vertices(k);
  if (sing.empty()) return out;
  if (sing.size() != 2) throw Error(ErrorCode::StructureViolation, std::to_string(sing.size()) + " singular vertices");
  for (Vertex s : sing) {
    const auto c = surface_classify(link(k, s));
    if (c.b1 != 1 || c.orientable) {
      throw Error(ErrorCode::StructureViolation, "singular vertex " + std::to_string(s) + " has link " + to_string(c));
    }
  }
  const PeelResult peel = peel_facet_subdivisions(k, sing);
  const Vertex cone = peel.core.max_vertex() + 1;
  auto base = suspension_base(peel.core, sing[0], sing[1], cone);
  if (!base) {
    throw Error(ErrorCode::StructureViolation, "core with " + std::to_string(peel.core.num_vertices()) +
                                                   " vertices is not a suspension at " + std::to_string(sing[0]) + "," +
                                                   std::to_string(sing[1]));
  }
  if (base->degree(cone) + 1 != base->num_vertices()) {
    throw Error(ErrorCode::StructureViolation, "suspended vertex is not a graph cone point");
  }
  out.kind = G2ThreeKind::SuspendedProjectivePlane;
  out.psi = std::move(*base);
  out.cone = cone;
  out.suspension_points = sing;
  out.records = peel.records;
  return out;
}

}  // namespace pseudoform
