#pragma once

#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pseudoform/complex.hpp"
#include "pseudoform/face_vectors.hpp"
#include "pseudoform/pseudomanifold.hpp"

namespace pseudoform {

enum class FoldKind { Plain, VertexFolding, EdgeFolding };

inline std::string_view to_string(FoldKind k) {
  switch (k) {
    case FoldKind::Plain: return "plain";
    case FoldKind::VertexFolding: return "vertex_folding";
    case FoldKind::EdgeFolding: return "edge_folding";
  }
  return "?";
}

/// A bijection between two facets, source -> target.
/// VertexFolding fixes exactly the apex; EdgeFolding fixes exactly the fold edge.
class FacetBijection {
 public:
  static FacetBijection make(std::vector<std::pair<Vertex, Vertex>> pairs, FoldKind kind) {
    std::sort(pairs.begin(), pairs.end());
    FacetBijection psi;
    std::vector<Vertex> src, dst;
    for (auto [a, b] : pairs) {
      src.push_back(a);
      dst.push_back(b);
    }
    psi.source_ = Face(src);  // throws on repeated labels
    psi.target_ = Face(dst);
    psi.pairs_ = std::move(pairs);
    psi.kind_ = kind;
    const auto fixed = psi.fixed_points();
    const std::size_t want = kind == FoldKind::VertexFolding ? 1 : kind == FoldKind::EdgeFolding ? 2 : 0;
    if (kind != FoldKind::Plain) {
      if (fixed.size() != want) {
        throw Error(ErrorCode::BadParameters, std::string(to_string(kind)) + " needs " + std::to_string(want) + " fixed points");
      }
      if (psi.source_.intersect(psi.target_) != Face(fixed)) {
        throw Error(ErrorCode::BadParameters, "facets must meet exactly in the fixed points");
      }
    }
    return psi;
  }

  /// Kind inferred from the number of fixed points (0, 1 or 2).
  static FacetBijection infer(std::vector<std::pair<Vertex, Vertex>> pairs) {
    std::size_t fixed = 0;
    for (auto [a, b] : pairs) fixed += (a == b);
    if (fixed > 2) throw Error(ErrorCode::BadParameters, "more than two fixed points");
    const FoldKind kind = fixed == 0 ? FoldKind::Plain : fixed == 1 ? FoldKind::VertexFolding : FoldKind::EdgeFolding;
    return make(std::move(pairs), kind);
  }

  const Face& source() const { return source_; }
  const Face& target() const { return target_; }
  const std::vector<std::pair<Vertex, Vertex>>& pairs() const { return pairs_; }
  FoldKind kind() const { return kind_; }

  Vertex operator()(Vertex x) const {
    for (auto [a, b] : pairs_) if (a == x) return b;
    throw Error(ErrorCode::BadParameters, std::to_string(x) + " outside the bijection's domain");
  }

  std::vector<Vertex> fixed_points() const {
    std::vector<Vertex> out;
    for (auto [a, b] : pairs_) if (a == b) out.push_back(a);
    return out;
  }

  Vertex apex() const { return fixed_points().at(0); }
  Face fold_edge() const { return Face(fixed_points()); }

  /// Restriction to source minus `x`, mapping onto target minus psi(x).
  std::vector<std::pair<Vertex, Vertex>> pairs_without(Vertex x) const {
    std::vector<std::pair<Vertex, Vertex>> out;
    for (auto p : pairs_) if (p.first != x) out.push_back(p);
    return out;
  }

 private:
  Face source_, target_;
  std::vector<std::pair<Vertex, Vertex>> pairs_;
  FoldKind kind_ = FoldKind::Plain;
};

struct AdmissibilityReport {
  bool admissible = true;
  std::string reason;
  std::optional<std::pair<Vertex, Vertex>> violating_pair;
  std::vector<Vertex> witness_path;
};

/// Replayable description of one construction step.
struct ConstructionRecord {
  std::string op;
  std::vector<std::string> inputs;
  std::vector<std::pair<Vertex, Vertex>> bijection;
  std::optional<Face> face;
  std::optional<Vertex> vertex;
  std::map<std::string, Vertex> fresh;   // named fresh labels; "relabel:<old>" for collisions
  std::vector<Vertex> retired;           // labels merged away by an identification
  friend bool operator==(const ConstructionRecord&, const ConstructionRecord&) = default;
};

struct ConstructionResult {
  SimplicialComplex complex;
  ConstructionRecord record;
};

enum class NormalityFlag { Normal, NonNormal, NotAnalyzed };

struct EdgeFoldResult {
  SimplicialComplex complex;
  ConstructionRecord record;
  NormalityFlag normality = NormalityFlag::NotAnalyzed;
};

namespace detail {

inline std::vector<Vertex> shortest_path(const SimplicialComplex& k, Vertex from, Vertex to) {
  std::map<Vertex, Vertex> parent;
  parent[from] = from;
  std::deque<Vertex> queue{from};
  while (!queue.empty()) {
    Vertex x = queue.front();
    queue.pop_front();
    if (x == to) break;
    for (Vertex y : k.neighbors(x)) {
      if (parent.emplace(y, x).second) queue.push_back(y);
    }
  }
  if (!parent.count(to)) return {};
  std::vector<Vertex> path{to};
  while (path.back() != from) path.push_back(parent[path.back()]);
  std::reverse(path.begin(), path.end());
  return path;
}

inline std::vector<Vertex> common_neighbors(const SimplicialComplex& k, Vertex a, Vertex b) {
  std::vector<Vertex> out;
  const auto& na = k.neighbors(a);
  const auto& nb = k.neighbors(b);
  std::set_intersection(na.begin(), na.end(), nb.begin(), nb.end(), std::back_inserter(out));
  return out;
}

// Identifies target into source (merged vertices keep source labels) and
// drops the merged facet. Throws NotAdmissible if the identification would
// collapse a face or merge two distinct facets.
inline SimplicialComplex identify_facets(const SimplicialComplex& k, const Face& source,
                                         const std::vector<std::pair<Vertex, Vertex>>& pairs) {
  std::map<Vertex, Vertex> to_source;
  for (auto [a, b] : pairs) if (a != b) to_source[b] = a;
  auto m = [&](Vertex v) {
    auto it = to_source.find(v);
    return it == to_source.end() ? v : it->second;
  };
  std::vector<Face> out;
  std::size_t merged = 0;
  for (const Face& f : k.facets()) {
    Face g;
    try {
      g = f.mapped(m);
    } catch (const Error&) {
      throw Error(ErrorCode::NotAdmissible, "identification collapses face " + f.to_string());
    }
    if (g == source) {
      ++merged;
      continue;
    }
    out.push_back(std::move(g));
  }
  if (merged != 2) throw Error(ErrorCode::NotAdmissible, "source and target must both be facets");
  const std::size_t before = out.size();
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  if (out.size() != before) throw Error(ErrorCode::NotAdmissible, "identification merges distinct facets");
  return SimplicialComplex::from_faces(std::move(out));
}

// lk1 #_pairs lk2 where the two links may share labels: shared labels of lk2
// are renamed to fresh ones first so that only the bijection merges vertices.
inline SimplicialComplex link_sum(const SimplicialComplex& lk1, const SimplicialComplex& lk2,
                                  const std::vector<std::pair<Vertex, Vertex>>& pairs, Vertex fresh_base) {
  std::map<Vertex, Vertex> rename;
  Vertex next = fresh_base;
  for (Vertex v : lk2.vertices()) if (lk1.has_vertex(v)) rename[v] = next++;
  const SimplicialComplex lk2r = relabel(lk2, rename);
  std::vector<std::pair<Vertex, Vertex>> renamed;
  std::vector<Vertex> src;
  for (auto [a, b] : pairs) {
    auto it = rename.find(b);
    renamed.emplace_back(a, it == rename.end() ? b : it->second);
    src.push_back(a);
  }
  std::vector<Face> all = lk1.facets();
  all.insert(all.end(), lk2r.facets().begin(), lk2r.facets().end());
  return identify_facets(SimplicialComplex::from_faces(std::move(all)), Face(src), renamed);
}

inline std::vector<std::string> single_input() { return {"input"}; }

}  // namespace detail

/// Checks the distance conditions that make `psi` a legal identification in `k`.
inline AdmissibilityReport check_admissible(const SimplicialComplex& k, const FacetBijection& psi) {
  if (!k.is_facet(psi.source())) throw Error(ErrorCode::NotAFacet, psi.source().to_string());
  if (!k.is_facet(psi.target())) throw Error(ErrorCode::NotAFacet, psi.target().to_string());
  AdmissibilityReport rep;
  auto fail = [&](Vertex x, Vertex y, std::vector<Vertex> path, std::string why) {
    rep.admissible = false;
    rep.violating_pair = std::make_pair(x, y);
    rep.witness_path = std::move(path);
    rep.reason = std::move(why);
    return rep;
  };

  if (psi.kind() == FoldKind::Plain) {
    for (auto [x, y] : psi.pairs()) {
      const int d = edge_distance(k, x, y);
      if (d < 3) return fail(x, y, detail::shortest_path(k, x, y), "edge distance " + std::to_string(d) + " < 3");
    }
    return rep;
  }

  const Face fixed(psi.fixed_points());
  if (psi.source().intersect(psi.target()) != fixed) {
    rep.admissible = false;
    rep.reason = "facets must intersect exactly in " + fixed.to_string();
    return rep;
  }
  for (auto [x, y] : psi.pairs()) {
    if (x == y) continue;
    if (k.adjacent(x, y)) return fail(x, y, {x, y}, "identified vertices are adjacent");
    for (Vertex w : detail::common_neighbors(k, x, y)) {
      if (!fixed.contains(w)) return fail(x, y, {x, w, y}, "length-two path avoids the fixed vertices");
    }
  }
  return rep;
}

/// Admissible bijections of one kind between facets of `k`, over facet pairs
/// sigma1 < sigma2 in canonical order and all matchings of their non-fixed
/// vertices. `at` pins the apex (vertex folding) or fold edge (edge folding).
inline std::vector<FacetBijection> admissible_bijections(const SimplicialComplex& k, FoldKind kind,
                                                         std::optional<Face> at = std::nullopt,
                                                         std::size_t limit = std::numeric_limits<std::size_t>::max()) {
  const std::size_t shared = kind == FoldKind::Plain ? 0 : kind == FoldKind::VertexFolding ? 1 : 2;
  if (at && at->size() != shared) throw Error(ErrorCode::BadParameters, "pinned face has the wrong size");
  std::map<Vertex, std::map<Vertex, int>> dist;
  auto far_enough = [&](Vertex x, Vertex y, const Face& fixed) {
    if (kind == FoldKind::Plain) {
      if (!dist.count(x)) dist[x] = bfs_distances(k, x);
      auto it = dist[x].find(y);
      return it == dist[x].end() || it->second >= 3;
    }
    if (k.adjacent(x, y)) return false;
    for (Vertex w : detail::common_neighbors(k, x, y)) if (!fixed.contains(w)) return false;
    return true;
  };
  std::vector<Face> candidates;
  if (at) {
    candidates = k.facets_containing(*at);
  } else {
    candidates = k.facets();
  }
  std::vector<FacetBijection> out;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    for (std::size_t j = i + 1; j < candidates.size(); ++j) {
      const Face& s1 = candidates[i];
      const Face& s2 = candidates[j];
      const Face fixed = s1.intersect(s2);
      if (fixed.size() != shared || (at && fixed != *at)) continue;
      const auto a = s1.minus(fixed).vertices();
      auto b = s2.minus(fixed).vertices();
      do {
        bool ok = true;
        for (std::size_t t = 0; t < a.size() && ok; ++t) ok = far_enough(a[t], b[t], fixed);
        if (!ok) continue;
        std::vector<std::pair<Vertex, Vertex>> pairs;
        for (Vertex f : fixed) pairs.emplace_back(f, f);
        for (std::size_t t = 0; t < a.size(); ++t) pairs.emplace_back(a[t], b[t]);
        out.push_back(FacetBijection::make(std::move(pairs), kind));
        if (out.size() >= limit) return out;
      } while (std::next_permutation(b.begin(), b.end()));
    }
  }
  return out;
}

/// One-vertex suspension: removes v, adds fresh x, y with lk(xy) = lk(v) and
/// cones x and y over every face outside st(v).
inline ConstructionResult one_vertex_suspension(const SimplicialComplex& k, Vertex v,
                                                std::optional<Vertex> x_label = std::nullopt,
                                                std::optional<Vertex> y_label = std::nullopt) {
  if (!k.has_vertex(v)) throw Error(ErrorCode::VertexNotPresent, std::to_string(v));
  const Vertex x = x_label.value_or(k.max_vertex() + 1);
  const Vertex y = y_label.value_or(std::max(k.max_vertex(), x) + 1);
  for (Vertex lab : {x, y}) {
    if (lab != v && k.has_vertex(lab)) throw Error(ErrorCode::BadParameters, "suspension label collides");
  }
  if (x == y) throw Error(ErrorCode::BadParameters, "suspension points need distinct labels");

  std::vector<Face> out;
  for (const Face& f : k.facets()) {
    if (f.contains(v)) {
      out.push_back(f.without(v).with(x).with(y));
    } else {
      out.push_back(f.with(x));
      out.push_back(f.with(y));
    }
  }
  SimplicialComplex s = SimplicialComplex::from_faces(std::move(out));

  const auto non_neighbors = static_cast<std::int64_t>(k.num_vertices() - 1 - k.degree(v));
  detail::ensure(g2(s) == g2(k) + non_neighbors, "suspension g2 equation");
  detail::ensure(link(s, Face{x, y}) == link(k, v), "lk(xy) equals lk(v)");
  detail::ensure(link(s, x) == relabel(k, std::map<Vertex, Vertex>{{v, y}}), "lk(x) is a copy of the base");
  detail::ensure(link(s, y) == relabel(k, std::map<Vertex, Vertex>{{v, x}}), "lk(y) is a copy of the base");

  ConstructionRecord rec;
  rec.op = "suspension";
  rec.inputs = detail::single_input();
  rec.vertex = v;
  rec.fresh = {{"x", x}, {"y", y}};
  return {std::move(s), std::move(rec)};
}

/// Replaces facet sigma by the cone over its boundary with a fresh vertex.
inline ConstructionResult facet_subdivide(const SimplicialComplex& k, const Face& sigma,
                                          std::optional<Vertex> w_label = std::nullopt) {
  if (!k.is_facet(sigma)) throw Error(ErrorCode::NotAFacet, sigma.to_string());
  const Vertex w = w_label.value_or(k.max_vertex() + 1);
  if (k.has_vertex(w)) throw Error(ErrorCode::BadParameters, "subdivision label collides");
  std::vector<Face> out;
  for (const Face& f : k.facets()) if (f != sigma) out.push_back(f);
  for (const Face& r : sigma.boundary()) out.push_back(r.with(w));
  SimplicialComplex s = SimplicialComplex::from_faces(std::move(out));
  if (k.dim() >= 2) detail::ensure(g2(s) == g2(k), "facet subdivision keeps g2");

  ConstructionRecord rec;
  rec.op = "facet_subdivision";
  rec.inputs = detail::single_input();
  rec.face = sigma;
  rec.fresh = {{"w", w}};
  return {std::move(s), std::move(rec)};
}

namespace detail {

inline void require_admissible(const SimplicialComplex& k, const FacetBijection& psi) {
  const auto rep = check_admissible(k, psi);
  if (!rep.admissible) {
    std::string path;
    for (Vertex v : rep.witness_path) path += (path.empty() ? "" : "-") + std::to_string(v);
    throw Error(ErrorCode::NotAdmissible, rep.reason + (path.empty() ? "" : " (path " + path + ")"));
  }
}

// lk(x_bar) = lk(x) #_psi lk(psi(x)) for each identified pair, in the identified complex.
inline void ensure_identified_links(const SimplicialComplex& before, const SimplicialComplex& after,
                                    const FacetBijection& psi, const std::vector<Vertex>& skip) {
  const Vertex base = std::max(before.max_vertex(), after.max_vertex()) + 1;
  for (auto [x, y] : psi.pairs()) {
    if (x == y || std::find(skip.begin(), skip.end(), x) != skip.end()) continue;
    const SimplicialComplex expected =
        link_sum(link(before, x), link(before, y), psi.pairs_without(x), base);
    ensure(link(after, x) == expected, "identified-vertex link equation at " + std::to_string(x));
  }
}

}  // namespace detail

/// Handle addition: identifies two far-apart facets of one connected component.
inline ConstructionResult handle_addition(const SimplicialComplex& k, const FacetBijection& psi) {
  if (psi.kind() != FoldKind::Plain) throw Error(ErrorCode::BadParameters, "handle addition needs a plain bijection");
  detail::require_admissible(k, psi);
  if (edge_distance(k, psi.source()[0], psi.target()[0]) == kUnreachable) {
    throw Error(ErrorCode::BadParameters, "facets lie in different components; use connected_sum");
  }
  SimplicialComplex out = detail::identify_facets(k, psi.source(), psi.pairs());
  const int d = k.dim();
  detail::ensure(g2(out) == g2(k) + binomial(d + 2, 2), "handle addition g2 equation");
  detail::ensure_identified_links(k, out, psi, {});

  ConstructionRecord rec;
  rec.op = "handle_addition";
  rec.inputs = detail::single_input();
  rec.bijection = psi.pairs();
  for (auto [a, b] : psi.pairs()) rec.retired.push_back(b);
  return {std::move(out), std::move(rec)};
}

/// Connected sum of two complexes along psi: source facet in `a`, target facet
/// in `b` (in b's own labels). Labels of b that collide with a are renamed to
/// fresh labels before identifying; the renaming is kept in the record.
inline ConstructionResult connected_sum(const SimplicialComplex& a, const SimplicialComplex& b,
                                        const FacetBijection& psi) {
  if (psi.kind() != FoldKind::Plain) throw Error(ErrorCode::BadParameters, "connected sum needs a plain bijection");
  if (!a.is_facet(psi.source())) throw Error(ErrorCode::NotAFacet, psi.source().to_string());
  if (!b.is_facet(psi.target())) throw Error(ErrorCode::NotAFacet, psi.target().to_string());
  if (a.dim() != b.dim()) throw Error(ErrorCode::BadParameters, "connected sum needs equal dimensions");

  std::map<Vertex, Vertex> rename;
  Vertex next = std::max(a.max_vertex(), b.max_vertex()) + 1;
  for (Vertex v : b.vertices()) if (a.has_vertex(v)) rename[v] = next++;
  const SimplicialComplex br = relabel(b, rename);
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (auto [x, y] : psi.pairs()) {
    auto it = rename.find(y);
    pairs.emplace_back(x, it == rename.end() ? y : it->second);
  }
  const FacetBijection psi_r = FacetBijection::make(pairs, FoldKind::Plain);

  std::vector<Face> all = a.facets();
  all.insert(all.end(), br.facets().begin(), br.facets().end());
  const SimplicialComplex disjoint = SimplicialComplex::from_faces(std::move(all));
  SimplicialComplex out = detail::identify_facets(disjoint, psi_r.source(), psi_r.pairs());

  detail::ensure(g2(out) == g2(a) + g2(b), "connected sum g2 additivity");
  detail::ensure_identified_links(disjoint, out, psi_r, {});

  ConstructionRecord rec;
  rec.op = "connected_sum";
  rec.inputs = {"first", "second"};
  rec.bijection = psi.pairs();
  for (auto [old_label, new_label] : rename) rec.fresh["relabel:" + std::to_string(old_label)] = new_label;
  for (auto [x, y] : psi_r.pairs()) rec.retired.push_back(y);
  return {std::move(out), std::move(rec)};
}

/// Vertex folding at the apex of psi.
inline ConstructionResult vertex_fold(const SimplicialComplex& k, const FacetBijection& psi) {
  if (psi.kind() != FoldKind::VertexFolding) throw Error(ErrorCode::BadParameters, "vertex_fold needs a vertex-folding bijection");
  detail::require_admissible(k, psi);
  const Vertex x = psi.apex();
  SimplicialComplex out = detail::identify_facets(k, psi.source(), psi.pairs());
  const int d = k.dim();
  detail::ensure(g2(out) == g2(k) + binomial(d + 1, 2), "vertex folding g2 equation");
  const SimplicialComplex lkx = link(k, x);
  detail::ensure(link(out, x) == detail::identify_facets(lkx, psi.source().without(x), psi.pairs_without(x)),
                 "apex link is a handle addition");
  detail::ensure_identified_links(k, out, psi, {x});

  ConstructionRecord rec;
  rec.op = "vertex_fold";
  rec.inputs = detail::single_input();
  rec.bijection = psi.pairs();
  rec.vertex = x;
  for (auto [a, b] : psi.pairs()) if (a != b) rec.retired.push_back(b);
  return {std::move(out), std::move(rec)};
}

/// Edge folding along the fixed edge uv of psi. For 3-dimensional input the
/// result is flagged Normal exactly when lk(uv) stays a single circle.
inline EdgeFoldResult edge_fold(const SimplicialComplex& k, const FacetBijection& psi) {
  if (psi.kind() != FoldKind::EdgeFolding) throw Error(ErrorCode::BadParameters, "edge_fold needs an edge-folding bijection");
  if (k.dim() < 3) throw Error(ErrorCode::BadParameters, "edge folding needs dimension >= 3");
  detail::require_admissible(k, psi);
  const Face uv = psi.fold_edge();
  SimplicialComplex out = detail::identify_facets(k, psi.source(), psi.pairs());
  const int d = k.dim();
  detail::ensure(g2(out) == g2(k) + binomial(d, 2), "edge folding g2 equation");
  for (Vertex e : uv) {
    const SimplicialComplex lk = link(k, e);
    detail::ensure(link(out, e) == detail::identify_facets(lk, psi.source().without(e), psi.pairs_without(e)),
                   "endpoint link is a vertex folding");
  }
  detail::ensure_identified_links(k, out, psi, {uv[0], uv[1]});

  EdgeFoldResult res;
  if (d == 3) res.normality = is_connected(link(out, uv)) ? NormalityFlag::Normal : NormalityFlag::NonNormal;
  res.record.op = "edge_fold";
  res.record.inputs = detail::single_input();
  res.record.bijection = psi.pairs();
  res.record.face = uv;
  for (auto [a, b] : psi.pairs()) if (a != b) res.record.retired.push_back(b);
  res.complex = std::move(out);
  return res;
}

namespace detail {

// Stellar subdivision of an edge: st(e) is replaced by the cone from a fresh
// vertex over (boundary of e) * lk(e).
inline SimplicialComplex stellar_subdivide_edge(const SimplicialComplex& k, const Face& e, Vertex w) {
  if (e.size() != 2 || !k.contains(e)) throw Error(ErrorCode::FaceNotPresent, e.to_string());
  std::vector<Face> out;
  for (const Face& f : k.facets()) {
    if (f.contains(e)) {
      out.push_back(f.without(e[0]).with(w));
      out.push_back(f.without(e[1]).with(w));
    } else {
      out.push_back(f);
    }
  }
  return SimplicialComplex::from_faces(std::move(out));
}

}  // namespace detail
}  // namespace pseudoform
