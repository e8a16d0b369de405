#pragma once

#include <algorithm>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "pseudoform/catalog.hpp"
#include "pseudoform/relmin.hpp"
#include "pseudoform/trace.hpp"

namespace pseudoform {

struct PCBMultisetVerdict {
  bool admissible = false;
  std::optional<std::string> failed_condition;  // parity, orientability-closure, dominance, nonorientable-strict
};

namespace detail {

inline void require_surface_classes(const SingularityMultiset& m) {
  if (m.empty()) throw Error(ErrorCode::EmptyMultiset, "multiset of singularities is empty");
  for (const auto& c : m) {
    if (c.b1 <= 0) throw Error(ErrorCode::BadParameters, "singularities have b1 >= 1");
    if (c.orientable && c.b1 % 2 != 0) throw Error(ErrorCode::BadParameters, "orientable surfaces have even b1");
  }
}

}  // namespace detail

/// Whether M is the multiset of vertex-link singularities of some
/// pseudocompression body. Conditions are tested in order; the first failure is named.
inline PCBMultisetVerdict pcb_multiset_admissible(const SingularityMultiset& input) {
  detail::require_surface_classes(input);
  const SingularityMultiset m = sorted_multiset(input);
  const SurfaceClass& top = m.front();
  int total = 0, rest = 0, orientable_sum = 0;
  bool all_orientable = true;
  for (std::size_t i = 0; i < m.size(); ++i) {
    total += m[i].b1;
    if (i > 0) rest += m[i].b1;
    if (m[i].orientable) orientable_sum += m[i].b1;
    all_orientable = all_orientable && m[i].orientable;
  }
  if (total % 2 != 0) return {false, "parity"};
  if (top.orientable && !all_orientable) return {false, "orientability-closure"};
  if (top.b1 < rest) return {false, "dominance"};
  if (!top.orientable && top.b1 <= orientable_sum) return {false, "nonorientable-strict"};
  return {true, std::nullopt};
}

struct GammaBounds {
  std::int64_t lower = 0;  // 3 max b1, from the relative lower bound
  std::int64_t upper = 0;  // g2 of a constructed triangulation
};

struct PCBBuild {
  SimplicialComplex complex;
  OperationTrace trace;
  Vertex top = 0;           // cone point of the top boundary
  int subdivisions = 0;     // facet subdivisions spent on making folds possible
  GammaBounds gamma;
};

struct PCBOptions {
  std::uint64_t seed = 0x5eed;
  int subdivision_budget = 20;
};

namespace detail {

struct PCBState {
  SimplicialComplex k;
  TraceNode trace;
  Vertex top = 0;
  int spent = 0;
  std::vector<Face> pockets;   // vertex sets already used for pockets around `top`
  std::vector<Vertex> fresh;   // vertices created by pockets, sorted
};

inline void record_step(PCBState& s, ConstructionResult r) {
  s.k = std::move(r.complex);
  s.trace = TraceNode::make_node(std::move(r.record), {std::move(s.trace)});
}

/// Vertex folds at `top` avoiding other singular vertices whose new link at
/// `top` has the wanted class.
inline bool try_fold(PCBState& s, const SurfaceClass& want) {
  const auto sing = singular_vertices(s.k);
  auto involves_singular = [&](const Face& f) {
    return std::any_of(f.begin(), f.end(), [&](Vertex v) {
      return v != s.top && std::binary_search(sing.begin(), sing.end(), v);
    });
  };
  for (const auto& psi : admissible_bijections(s.k, FoldKind::VertexFolding, Face{s.top})) {
    if (involves_singular(psi.source()) || involves_singular(psi.target())) continue;
    auto r = vertex_fold(s.k, psi);
    if (surface_classify(link(r.complex, s.top)) != want) continue;
    record_step(s, std::move(r));
    return true;
  }
  return false;
}

/// Nested subdivisions at a facet through `top`: each step subdivides
/// {top, q1, q2, q3} and slides the window to {top, q2, q3, w}. Three steps
/// suffice when the facet meets earlier pockets only in `top`; otherwise six
/// steps leave a final triple that sees nothing but its own pocket and `top`.
/// Final triples of two pockets then carry an admissible vertex folding.
inline bool dig_pocket(PCBState& s, std::mt19937_64& rng, int budget) {
  const auto sing = singular_vertices(s.k);
  std::vector<Face> disjoint, loose;
  for (const Face& f : s.k.facets_containing(Face{s.top})) {
    bool clean = true, touches = false;
    for (Vertex v : f) {
      if (v == s.top) continue;
      if (std::binary_search(sing.begin(), sing.end(), v)) clean = false;
      for (const Face& p : s.pockets) {
        if (!p.contains(Face{v})) continue;
        touches = true;
        if (std::binary_search(s.fresh.begin(), s.fresh.end(), v)) clean = false;
      }
    }
    if (!clean) continue;
    (touches ? loose : disjoint).push_back(f);
  }
  const bool shallow = !disjoint.empty();
  const auto& choices = shallow ? disjoint : loose;
  const int depth = shallow ? 3 : 6;
  if (choices.empty() || s.spent + depth > budget) return false;
  std::uniform_int_distribution<std::size_t> pick(0, choices.size() - 1);
  const Face base = choices[pick(rng)];
  std::vector<Vertex> window(base.begin(), base.end());
  window.erase(std::find(window.begin(), window.end(), s.top));
  std::vector<Vertex> used(base.begin(), base.end());
  for (int step = 0; step < depth; ++step) {
    auto r = facet_subdivide(s.k, Face{s.top, window[0], window[1], window[2]});
    const Vertex w = r.record.fresh.at("w");
    record_step(s, std::move(r));
    ++s.spent;
    used.push_back(w);
    s.fresh.insert(std::upper_bound(s.fresh.begin(), s.fresh.end(), w), w);
    window = {window[1], window[2], w};
  }
  s.pockets.push_back(Face(used));
  return true;
}

inline void fold_to(PCBState& s, const SurfaceClass& want, std::mt19937_64& rng, int budget) {
  while (!try_fold(s, want)) {
    if (!dig_pocket(s, rng, budget)) {
      throw Error(ErrorCode::SearchExhausted, "no admissible vertex folding at " + std::to_string(s.top) + " towards " +
                                                  to_string(want) + " after " + std::to_string(s.spent) + " subdivisions");
    }
  }
  s.pockets.clear();
  s.fresh.clear();
}

}  // namespace detail

/// Relatively minimal triangulation of a pseudocompression body whose vertex
/// singularities are M: suspensions of cone-point surfaces for the bottom
/// components, connected sums at the top cone points, then vertex foldings at
/// the top cone point for the remaining 1-handles.
inline PCBBuild build_pseudocompression(const SingularityMultiset& input, const PCBOptions& opt = {}) {
  const auto verdict = pcb_multiset_admissible(input);
  if (!verdict.admissible) {
    throw Error(ErrorCode::HypothesisNotMet, "multiset fails the " + *verdict.failed_condition + " condition");
  }
  const SingularityMultiset m = sorted_multiset(input);
  std::mt19937_64 rng(opt.seed);
  detail::PCBState s;

  if (m.size() == 1) {
    s.k = catalog::boundary_simplex(4);
    s.trace = TraceNode::make_leaf("boundary_simplex_4", s.k);
    s.top = 0;
  }
  for (std::size_t i = 1; i < m.size(); ++i) {
    auto [surface, cone] = catalog::cone_point_surface(m[i].b1, m[i].orientable);
    auto susp = one_vertex_suspension(surface, cone);
    const Vertex x = susp.record.fresh.at("x"), y = susp.record.fresh.at("y");
    TraceNode piece = TraceNode::make_node(susp.record, {TraceNode::make_leaf("surface", surface)});
    if (i == 1) {
      s.k = std::move(susp.complex);
      s.trace = std::move(piece);
      s.top = x;
      continue;
    }
    // identify the two top cone points; the other facet vertices are nonsingular
    const auto sing = singular_vertices(s.k);
    auto clean = [](const SimplicialComplex& c, Vertex at, const std::vector<Vertex>& avoid) {
      for (const Face& f : c.facets_containing(Face{at})) {
        if (std::none_of(f.begin(), f.end(), [&](Vertex v) { return v != at && std::binary_search(avoid.begin(), avoid.end(), v); })) return f;
      }
      throw Error(ErrorCode::SearchExhausted, "no facet at the cone point avoids the singular vertices");
    };
    const Face sigma = clean(s.k, s.top, sing);
    const Face tau = clean(susp.complex, x, {y});
    std::vector<std::pair<Vertex, Vertex>> pairs{{s.top, x}};
    const auto ra = sigma.without(s.top), rb = tau.without(x);
    for (std::size_t j = 0; j < ra.size(); ++j) pairs.emplace_back(ra[j], rb[j]);
    auto r = connected_sum(s.k, susp.complex, FacetBijection::make(pairs, FoldKind::Plain));
    s.k = std::move(r.complex);
    s.trace = TraceNode::make_node(std::move(r.record), {std::move(s.trace), std::move(piece)});
  }

  SurfaceClass current = surface_classify(link(s.k, s.top));
  while (current.b1 < m.front().b1) {
    const SurfaceClass want{current.b1 + 2, m.front().orientable};
    detail::fold_to(s, want, rng, opt.subdivision_budget);
    current = want;
  }

  detail::ensure(is_normal_pseudomanifold(s.k), "built complex is normal");
  detail::ensure(singularity_multiset(s.k) == m, "built complex has the requested singularities");
  detail::ensure(is_relatively_minimal_at(s.k, Face{s.top}), "built complex is relatively minimal at the top cone point");
  detail::ensure(replay(s.trace) == s.k, "build trace replays");

  PCBBuild out{s.k, std::move(s.trace), s.top, s.spent, {}};
  out.gamma.lower = 3 * static_cast<std::int64_t>(m.front().b1);
  out.gamma.upper = g2(out.complex);
  return out;
}

}  // namespace pseudoform
