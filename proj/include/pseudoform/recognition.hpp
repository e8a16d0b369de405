#pragma once

#include <array>
#include <variant>

#include "pseudoform/constructions.hpp"

namespace pseudoform {

enum class Verdict { SumOrHandle, VertexFoldAt, EdgeFoldAt, EdgeFoldAnnulusNonSeparating, Unclassified };

inline std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::SumOrHandle: return "sum_or_handle";
    case Verdict::VertexFoldAt: return "vertex_fold_at";
    case Verdict::EdgeFoldAt: return "edge_fold_at";
    case Verdict::EdgeFoldAnnulusNonSeparating: return "edge_fold_annulus_non_separating";
    case Verdict::Unclassified: return "unclassified";
  }
  return "?";
}

struct VertexSide {
  Vertex vertex = 0;
  SideReport side;  // missing triangle tau - vertex, cut out of lk(vertex)
};

struct MissingTetraClassification {
  Face tetra;
  std::array<VertexSide, 4> sides{};
  Verdict verdict = Verdict::Unclassified;
  std::optional<Vertex> apex;  // VertexFoldAt
  std::optional<Face> edge;    // EdgeFoldAt / EdgeFoldAnnulusNonSeparating
};

/// Side reports of the four induced missing triangles, without any verdict logic.
inline std::array<VertexSide, 4> side_profile(const SimplicialComplex& k, const Face& tau) {
  if (tau.size() != 4 || k.contains(tau)) throw Error(ErrorCode::NotMissing, tau.to_string() + " is not missing");
  for (const Face& t : tau.boundary()) {
    if (!k.contains(t)) throw Error(ErrorCode::NotMissing, "boundary triangle " + t.to_string() + " absent");
  }
  std::array<VertexSide, 4> out{};
  for (std::size_t i = 0; i < 4; ++i) {
    const Vertex x = tau[i];
    out[i].vertex = x;
    out[i].side = cut_along_circle(link(k, x), Circle{tau.without(x).vertices()});
  }
  return out;
}

/// Pairs {a,b} | {u,v} of the tetrahedron where a and b both separate but u and
/// v disagree on two-sidedness. Empty for every normal 3-pseudomanifold.
inline std::vector<Face> parity_violations(const std::array<VertexSide, 4>& sides) {
  std::vector<Face> out;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      if (!sides[i].side.separates() || !sides[j].side.separates()) continue;
      std::vector<std::size_t> rest;
      for (std::size_t t = 0; t < 4; ++t) if (t != i && t != j) rest.push_back(t);
      if (sides[rest[0]].side.two_sided != sides[rest[1]].side.two_sided) {
        out.push_back(Face{sides[rest[0]].vertex, sides[rest[1]].vertex});
      }
    }
  }
  return out;
}

inline MissingTetraClassification classify_missing_tetrahedron(const SimplicialComplex& k, const Face& tau) {
  if (k.dim() != 3) throw Error(ErrorCode::BadParameters, "classification is three-dimensional");
  MissingTetraClassification c;
  c.tetra = tau;
  c.sides = side_profile(k, tau);
  const auto bad = parity_violations(c.sides);
  detail::ensure(bad.empty(), "annulus/Moebius parity fails on " + (bad.empty() ? std::string() : bad[0].to_string()));

  std::vector<Vertex> failing;
  for (const auto& s : c.sides) if (!s.side.separates()) failing.push_back(s.vertex);
  if (failing.empty()) {
    c.verdict = Verdict::SumOrHandle;
  } else if (failing.size() == 1) {
    c.verdict = Verdict::VertexFoldAt;
    c.apex = failing[0];
  } else if (failing.size() == 2) {
    const Face uv(failing);
    c.edge = uv;
    bool moebius = true;
    for (const auto& s : c.sides) if (uv.contains(s.vertex)) moebius = moebius && !s.side.two_sided;
    c.verdict = moebius ? Verdict::EdgeFoldAt : Verdict::EdgeFoldAnnulusNonSeparating;
  }
  return c;
}

struct SplitResult {
  SimplicialComplex first;   // side containing the lowest-ordered facet
  SimplicialComplex second;
  FacetBijection psi;        // identity on tau; connected_sum(first, second, psi) == K
};

struct HandleWitness {
  Face tetra;
};

namespace detail {

inline std::set<Face> boundary_set(const Face& f) {
  auto b = f.boundary();
  return {b.begin(), b.end()};
}

}  // namespace detail

/// Cuts K along the 2-sphere boundary of tau. Two sides give the summands,
/// each closed up with tau; one side means K came from a handle addition.
inline std::variant<SplitResult, HandleWitness> split_connected_sum(const SimplicialComplex& k, const Face& tau) {
  const auto cls = classify_missing_tetrahedron(k, tau);
  if (cls.verdict != Verdict::SumOrHandle) {
    throw Error(ErrorCode::VerdictMismatch, "split needs all four triangles to separate; got " + std::string(to_string(cls.verdict)));
  }
  const auto comp = detail::facet_components(k, detail::boundary_set(tau));
  const int n = *std::max_element(comp.begin(), comp.end()) + 1;
  if (n == 1) return HandleWitness{tau};
  detail::ensure(n == 2, "boundary of a missing tetrahedron cuts off more than two pieces");

  std::vector<Face> side[2];
  for (std::size_t f = 0; f < comp.size(); ++f) side[comp[f]].push_back(k.facets()[f]);
  for (auto& s : side) s.push_back(tau);
  std::vector<std::pair<Vertex, Vertex>> id;
  for (Vertex x : tau) id.emplace_back(x, x);
  SplitResult out{SimplicialComplex::from_faces(std::move(side[0])), SimplicialComplex::from_faces(std::move(side[1])),
                  FacetBijection::make(id, FoldKind::Plain)};
  detail::ensure(g2(k) == g2(out.first) + g2(out.second), "split g2 additivity");
  detail::ensure(connected_sum(out.first, out.second, out.psi).complex == k, "re-summing the split reproduces the complex");
  return out;
}

struct UnfoldResult {
  SimplicialComplex complex;
  FacetBijection psi;  // folding psi in `complex` gives back the input exactly
};

namespace detail {

// Component id (within the cut link) of every facet of lk(x); cut = ridges of
// the link lying inside `wall`.
struct LinkSides {
  SimplicialComplex lk;
  std::map<Face, int> side;
  int count = 0;
};

inline LinkSides link_sides(const SimplicialComplex& k, Vertex x, const Face& wall) {
  LinkSides s{link(k, x), {}, 0};
  std::set<Face> cut;
  for (const Face& f : s.lk.facets()) {
    for (const Face& r : f.boundary()) if (wall.contains(r)) cut.insert(r);
  }
  const auto comp = facet_components(s.lk, cut);
  for (std::size_t i = 0; i < comp.size(); ++i) {
    s.side[s.lk.facets()[i]] = comp[i];
    s.count = std::max(s.count, comp[i] + 1);
  }
  return s;
}

inline void ensure_unfolded(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::NormalityViolation, what);
}

}  // namespace detail

/// Inverse of a vertex folding at `apex`, for d = 2 or d = 3. The missing simplex
/// tau becomes the image of the removed facet.
inline UnfoldResult vertex_unfold(const SimplicialComplex& k, const Face& tau, Vertex apex) {
  const int d = k.dim();
  if (d != 2 && d != 3) throw Error(ErrorCode::BadParameters, "vertex unfolding needs d = 2 or 3");
  if (tau.size() != static_cast<std::size_t>(d + 1) || k.contains(tau) || !tau.contains(apex)) {
    throw Error(ErrorCode::NotMissing, tau.to_string());
  }
  if (d == 3) {
    const auto cls = classify_missing_tetrahedron(k, tau);
    if (cls.verdict != Verdict::VertexFoldAt || cls.apex != apex) {
      throw Error(ErrorCode::VerdictMismatch, "no vertex folding at " + std::to_string(apex) + " (verdict " +
                                                  std::string(to_string(cls.verdict)) + ")");
    }
  }
  const Face ridge = tau.without(apex);
  const SimplicialComplex lk_ridge = link(k, ridge);
  if (lk_ridge.num_vertices() != 2) throw Error(ErrorCode::NotPseudomanifold, "ridge " + ridge.to_string());
  const Vertex p = lk_ridge.vertices()[0];
  const Vertex n = lk_ridge.vertices()[1];

  // Side of every facet around each ridge vertex, oriented so p's side is 0.
  std::map<Vertex, detail::LinkSides> sides;
  std::map<Vertex, int> plus;
  for (Vertex x : ridge) {
    auto s = detail::link_sides(k, x, tau.without(x));
    if (s.count != 2) {
      throw Error(ErrorCode::VerdictMismatch, "missing face " + tau.without(x).to_string() + " does not separate lk(" +
                                                  std::to_string(x) + ")");
    }
    plus[x] = s.side.at(ridge.without(x).with(p));
    sides.emplace(x, std::move(s));
  }

  Vertex next = k.max_vertex() + 1;
  std::map<Vertex, Vertex> prime;
  for (Vertex x : ridge) prime[x] = next++;
  const Face ridge_prime = ridge.mapped([&](Vertex x) { return prime.at(x); });

  std::vector<Face> facets;
  for (const Face& f : k.facets()) {
    if (f.contains(apex)) continue;
    const Face meet = f.intersect(ridge);
    if (meet.empty()) {
      facets.push_back(f);
      continue;
    }
    std::optional<bool> minus;
    for (Vertex x : meet) {
      const bool m = sides.at(x).side.at(f.without(x)) != plus.at(x);
      detail::ensure_unfolded(!minus || *minus == m, "facet " + f.to_string() + " straddles both sides");
      minus = m;
    }
    facets.push_back(*minus ? f.mapped([&](Vertex v) { return prime.count(v) ? prime.at(v) : v; }) : f);
  }
  facets.push_back(ridge_prime.with(n));
  const SimplicialComplex tilde = SimplicialComplex::from_faces(facets);
  const SimplicialComplex rim = boundary_complex(tilde);
  for (const Face& b : rim.facets()) facets.push_back(b.with(apex));
  SimplicialComplex out = SimplicialComplex::from_faces(std::move(facets));

  std::vector<std::pair<Vertex, Vertex>> pairs{{apex, apex}};
  for (Vertex x : ridge) pairs.emplace_back(x, prime.at(x));
  // Folding identifies the target into the source, so the source must carry
  // the labels of K: source = tau, target = apex + primed ridge.
  FacetBijection psi = FacetBijection::make(pairs, FoldKind::VertexFolding);

  detail::ensure_unfolded(is_normal_pseudomanifold(out), "vertex unfolding is not a normal pseudomanifold");
  detail::ensure_unfolded(g2(out) == g2(k) - binomial(d + 1, 2), "vertex unfolding g2 drop");
  try {
    detail::ensure_unfolded(vertex_fold(out, psi).complex == k, "refolding does not reproduce the input");
  } catch (const Error& e) {
    if (e.code() == ErrorCode::NormalityViolation) throw;
    throw Error(ErrorCode::NormalityViolation, std::string("refold failed: ") + e.what());
  }
  return {std::move(out), std::move(psi)};
}

/// Inverse of an edge folding at `uv` (Moebius case).
inline UnfoldResult edge_unfold(const SimplicialComplex& k, const Face& tau, const Face& uv) {
  if (k.dim() != 3) throw Error(ErrorCode::BadParameters, "edge unfolding is three-dimensional");
  const auto cls = classify_missing_tetrahedron(k, tau);
  if (cls.verdict == Verdict::EdgeFoldAnnulusNonSeparating && cls.edge == uv) {
    throw Error(ErrorCode::AnnulusCaseUnsupported,
                "sides of " + uv.to_string() + " are annuli; the unfolding would not be a normal pseudomanifold");
  }
  if (cls.verdict != Verdict::EdgeFoldAt || cls.edge != uv) {
    throw Error(ErrorCode::VerdictMismatch, "no edge folding at " + uv.to_string() + " (verdict " +
                                                std::string(to_string(cls.verdict)) + ")");
  }
  const Face ab = tau.minus(uv);
  const Vertex a = ab[0], b = ab[1], u = uv[0], v = uv[1];

  auto sa = detail::link_sides(k, a, tau.without(a));
  auto sb = detail::link_sides(k, b, tau.without(b));
  detail::ensure(sa.count == 2 && sb.count == 2, "a and b must separate");
  // plus side of lk(a): contains the smaller vertex p1 of lk(auv)
  const Vertex p1 = link(k, Face{a, u, v}).vertices()[0];
  const int plus_a = sa.side.at(Face{u, v, p1});
  // p2: the vertex of lk(abu) on a's plus side; b's plus side is the one containing it
  Vertex p2 = -1;
  const SimplicialComplex lk_abu = link(k, Face{a, b, u});
  for (Vertex w : lk_abu.vertices()) {
    if (sa.side.at(Face{b, u, w}) == plus_a) p2 = w;
  }
  detail::ensure(p2 >= 0, "no plus vertex around abu");
  const int plus_b = sb.side.at(Face{a, u, p2});

  const Vertex a_minus = k.max_vertex() + 1;
  const Vertex b_minus = k.max_vertex() + 2;
  std::vector<Face> facets;
  for (const Face& f : k.facets()) {
    const bool has_a = f.contains(a), has_b = f.contains(b);
    std::optional<bool> minus;
    if (has_a) minus = sa.side.at(f.without(a)) != plus_a;
    if (has_b) {
      const bool m = sb.side.at(f.without(b)) != plus_b;
      detail::ensure_unfolded(!minus || *minus == m, "facet " + f.to_string() + " gets mixed signs");
      minus = m;
    }
    if (!minus || !*minus) {
      facets.push_back(f);
    } else {
      facets.push_back(f.mapped([&](Vertex w) { return w == a ? a_minus : w == b ? b_minus : w; }));
    }
  }
  facets.push_back(Face{a, b, u, v});
  facets.push_back(Face{a_minus, b_minus, u, v});
  SimplicialComplex out = SimplicialComplex::from_faces(std::move(facets));
  FacetBijection psi = FacetBijection::make({{a, a_minus}, {b, b_minus}, {u, u}, {v, v}}, FoldKind::EdgeFolding);

  detail::ensure_unfolded(is_normal_pseudomanifold(out), "edge unfolding is not a normal pseudomanifold");
  detail::ensure_unfolded(g2(out) == g2(k) - 3, "edge unfolding g2 drop");
  for (Vertex e : {u, v}) {
    detail::ensure_unfolded(surface_classify(link(out, e)).b1 + 1 == surface_classify(link(k, e)).b1,
                            "b1 of lk(" + std::to_string(e) + ") must drop by one");
  }
  try {
    const auto refold = edge_fold(out, psi);
    detail::ensure_unfolded(refold.complex == k && refold.normality == NormalityFlag::Normal,
                            "refolding does not reproduce the input");
  } catch (const Error& e) {
    if (e.code() == ErrorCode::NormalityViolation) throw;
    throw Error(ErrorCode::NormalityViolation, std::string("refold failed: ") + e.what());
  }
  return {std::move(out), std::move(psi)};
}

}  // namespace pseudoform
