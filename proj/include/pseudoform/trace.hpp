#pragma once

#include <string>
#include <vector>

#include "pseudoform/constructions.hpp"

namespace pseudoform {

/// A node either holds a construction record applied to its children's
/// complexes, or is a leaf carrying a named seed complex verbatim.
struct TraceNode {
  std::optional<ConstructionRecord> record;
  std::string seed;
  SimplicialComplex leaf;
  std::vector<TraceNode> children;

  static TraceNode make_leaf(std::string name, SimplicialComplex k) {
    TraceNode n;
    n.seed = std::move(name);
    n.leaf = std::move(k);
    return n;
  }
  static TraceNode make_node(ConstructionRecord rec, std::vector<TraceNode> children) {
    TraceNode n;
    n.record = std::move(rec);
    n.children = std::move(children);
    return n;
  }
  bool is_leaf() const { return !record.has_value(); }
};

using OperationTrace = TraceNode;

namespace detail {

inline std::optional<Vertex> fresh_label(const ConstructionRecord& rec, const std::string& key) {
  auto it = rec.fresh.find(key);
  if (it == rec.fresh.end()) return std::nullopt;
  return it->second;
}

inline void require_inputs(const ConstructionRecord& rec, std::size_t n, std::size_t got) {
  if (got != n) {
    throw Error(ErrorCode::BadParameters, rec.op + " takes " + std::to_string(n) + " input(s), got " + std::to_string(got));
  }
}

}  // namespace detail

/// Applies one record to its input complexes, reproducing the recorded labels.
inline SimplicialComplex apply_record(const ConstructionRecord& rec, const std::vector<SimplicialComplex>& in) {
  if (rec.op == "suspension") {
    detail::require_inputs(rec, 1, in.size());
    if (!rec.vertex) throw Error(ErrorCode::BadParameters, "suspension record lacks a vertex");
    return one_vertex_suspension(in[0], *rec.vertex, detail::fresh_label(rec, "x"), detail::fresh_label(rec, "y")).complex;
  }
  if (rec.op == "facet_subdivision") {
    detail::require_inputs(rec, 1, in.size());
    if (!rec.face) throw Error(ErrorCode::BadParameters, "facet_subdivision record lacks a face");
    return facet_subdivide(in[0], *rec.face, detail::fresh_label(rec, "w")).complex;
  }
  if (rec.op == "handle_addition") {
    detail::require_inputs(rec, 1, in.size());
    return handle_addition(in[0], FacetBijection::make(rec.bijection, FoldKind::Plain)).complex;
  }
  if (rec.op == "connected_sum") {
    detail::require_inputs(rec, 2, in.size());
    auto r = connected_sum(in[0], in[1], FacetBijection::make(rec.bijection, FoldKind::Plain));
    if (r.record.fresh != rec.fresh) throw Error(ErrorCode::BadParameters, "connected_sum relabeling differs from the record");
    return std::move(r.complex);
  }
  if (rec.op == "vertex_fold") {
    detail::require_inputs(rec, 1, in.size());
    return vertex_fold(in[0], FacetBijection::make(rec.bijection, FoldKind::VertexFolding)).complex;
  }
  if (rec.op == "edge_fold") {
    detail::require_inputs(rec, 1, in.size());
    return edge_fold(in[0], FacetBijection::make(rec.bijection, FoldKind::EdgeFolding)).complex;
  }
  throw Error(ErrorCode::BadParameters, "unknown operation " + rec.op);
}

inline SimplicialComplex replay(const TraceNode& t) {
  if (t.is_leaf()) return t.leaf;
  std::vector<SimplicialComplex> in;
  for (const auto& c : t.children) in.push_back(replay(c));
  return apply_record(*t.record, in);
}

inline std::size_t trace_size(const TraceNode& t) {
  std::size_t n = t.is_leaf() ? 0 : 1;
  for (const auto& c : t.children) n += trace_size(c);
  return n;
}

/// Operation names in post-order, i.e. the order a replay applies them.
inline std::vector<std::string> trace_ops(const TraceNode& t) {
  std::vector<std::string> out;
  for (const auto& c : t.children) {
    auto sub = trace_ops(c);
    out.insert(out.end(), sub.begin(), sub.end());
  }
  if (!t.is_leaf()) out.push_back(t.record->op);
  return out;
}

namespace detail {

inline void explain_into(const TraceNode& t, int depth, std::string& out) {
  out += std::string(static_cast<std::size_t>(2 * depth), ' ');
  if (t.is_leaf()) {
    out += "seed " + t.seed + " (" + std::to_string(t.leaf.num_vertices()) + " vertices, " +
           std::to_string(t.leaf.facets().size()) + " facets)\n";
    return;
  }
  const auto& r = *t.record;
  out += r.op;
  if (r.vertex) out += " at " + std::to_string(*r.vertex);
  if (r.face) out += " on " + r.face->to_string();
  if (!r.bijection.empty()) {
    out += " psi";
    for (auto [a, b] : r.bijection) out += " " + std::to_string(a) + "->" + std::to_string(b);
  }
  out += "\n";
  for (const auto& c : t.children) explain_into(c, depth + 1, out);
}

}  // namespace detail

/// Indented, human-readable rendering of a trace.
inline std::string explain(const TraceNode& t) {
  std::string out;
  detail::explain_into(t, 0, out);
  return out;
}

}  // namespace pseudoform
