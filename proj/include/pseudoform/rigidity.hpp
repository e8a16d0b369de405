#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "pseudoform/complex.hpp"
#include "pseudoform/face_vectors.hpp"
#include "pseudoform/pseudomanifold.hpp"

namespace pseudoform {

inline constexpr std::uint64_t kDefaultSeed = 0x5eed;

struct Graph {
  std::vector<Vertex> vertices;                   // sorted
  std::vector<std::pair<Vertex, Vertex>> edges;   // sorted, first < second
};

inline Graph graph_of(const SimplicialComplex& k) {
  Graph g{k.vertices(), {}};
  for (const Face& e : k.faces(1)) g.edges.emplace_back(e[0], e[1]);
  return g;
}

inline Graph graph_union(const Graph& a, const Graph& b) {
  Graph g;
  std::set_union(a.vertices.begin(), a.vertices.end(), b.vertices.begin(), b.vertices.end(), std::back_inserter(g.vertices));
  std::set_union(a.edges.begin(), a.edges.end(), b.edges.begin(), b.edges.end(), std::back_inserter(g.edges));
  return g;
}

inline Graph with_edge(Graph g, Vertex u, Vertex v) {
  auto e = std::minmax(u, v);
  auto it = std::lower_bound(g.edges.begin(), g.edges.end(), std::pair<Vertex, Vertex>(e.first, e.second));
  if (it == g.edges.end() || *it != std::pair<Vertex, Vertex>(e.first, e.second)) g.edges.insert(it, {e.first, e.second});
  return g;
}

struct Configuration {
  int dim = 0;
  std::map<Vertex, std::vector<mpq_class>> points;
  std::uint64_t seed = 0;
};

/// Integer coordinates uniform in [-bound, bound].
inline Configuration random_configuration(const Graph& g, int dim, std::uint64_t seed, std::int64_t bound = 1'000'000) {
  Configuration cfg{dim, {}, seed};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> coord(-bound, bound);
  for (Vertex v : g.vertices) {
    auto& p = cfg.points[v];
    for (int i = 0; i < dim; ++i) p.emplace_back(static_cast<long>(coord(rng)));
  }
  return cfg;
}

using Matrix = std::vector<std::vector<mpq_class>>;

/// Rows are edges in g.edges order; column block i*dim.. belongs to g.vertices[i].
inline Matrix rigidity_matrix(const Graph& g, const Configuration& cfg) {
  std::map<Vertex, std::size_t> col;
  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    const auto it = cfg.points.find(g.vertices[i]);
    if (it == cfg.points.end() || static_cast<int>(it->second.size()) != cfg.dim) {
      throw Error(ErrorCode::MissingCoordinate, "no point for vertex " + std::to_string(g.vertices[i]));
    }
    col[g.vertices[i]] = i * static_cast<std::size_t>(cfg.dim);
  }
  const auto d = static_cast<std::size_t>(cfg.dim);
  Matrix m(g.edges.size(), std::vector<mpq_class>(g.vertices.size() * d));
  for (std::size_t r = 0; r < g.edges.size(); ++r) {
    const auto [u, v] = g.edges[r];
    const auto& pu = cfg.points.at(u);
    const auto& pv = cfg.points.at(v);
    for (std::size_t t = 0; t < d; ++t) {
      m[r][col.at(u) + t] = pu[t] - pv[t];
      m[r][col.at(v) + t] = pv[t] - pu[t];
    }
  }
  return m;
}

/// Exact rank by fraction-free (Bareiss) elimination after clearing denominators row-wise.
inline std::size_t exact_rank(const Matrix& m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    mpz_class l = 1;
    for (const auto& x : m[r]) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    for (std::size_t c = 0; c < cols; ++c) a[r][c] = m[r][c].get_num() * (l / m[r][c].get_den());
  }
  mpz_class prev = 1;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        a[r][j] = (a[rank][c] * a[r][j] - a[r][c] * a[rank][j]);
        mpz_divexact(a[r][j].get_mpz_t(), a[r][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[r][c] = 0;
    }
    prev = a[rank][c];
    ++rank;
  }
  return rank;
}

/// Basis of {w : w^T m = 0} over Q, in reduced form.
inline std::vector<std::vector<mpq_class>> left_null_space(const Matrix& m) {
  const std::size_t rows = m.size();
  if (rows == 0) return {};
  const std::size_t cols = m[0].size();
  // Row-reduce the transpose; free columns of m^T index the null vectors.
  Matrix t(cols, std::vector<mpq_class>(rows));
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) t[c][r] = m[r][c];
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < rows && lead < cols; ++c) {
    std::size_t piv = lead;
    while (piv < cols && t[piv][c] == 0) ++piv;
    if (piv == cols) continue;
    std::swap(t[piv], t[lead]);
    const mpq_class inv = 1 / t[lead][c];
    for (auto& x : t[lead]) x *= inv;
    for (std::size_t r = 0; r < cols; ++r) {
      if (r == lead || t[r][c] == 0) continue;
      const mpq_class f = t[r][c];
      for (std::size_t j = c; j < rows; ++j) t[r][j] -= f * t[lead][j];
    }
    pivots.push_back(c);
    ++lead;
  }
  std::vector<std::vector<mpq_class>> basis;
  std::vector<bool> is_pivot(rows, false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  for (std::size_t free = 0; free < rows; ++free) {
    if (is_pivot[free]) continue;
    std::vector<mpq_class> w(rows);
    w[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) w[pivots[i]] = -t[i][free];
    basis.push_back(std::move(w));
  }
  return basis;
}

/// True iff w is an equilibrium stress: zero net weighted force at every vertex.
inline bool is_stress(const Graph& g, const Configuration& cfg, const std::vector<mpq_class>& w) {
  if (w.size() != g.edges.size()) return false;
  std::map<Vertex, std::vector<mpq_class>> force;
  for (Vertex v : g.vertices) force[v].assign(static_cast<std::size_t>(cfg.dim), 0);
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    const auto [u, v] = g.edges[e];
    for (std::size_t t = 0; t < static_cast<std::size_t>(cfg.dim); ++t) {
      const mpq_class diff = cfg.points.at(u)[t] - cfg.points.at(v)[t];
      force[u][t] += w[e] * diff;
      force[v][t] -= w[e] * diff;
    }
  }
  for (const auto& [v, f] : force)
    for (const auto& x : f) if (x != 0) return false;
  return true;
}

struct StressOptions {
  int trials = 3;
  std::uint64_t seed = kDefaultSeed;
  std::int64_t bound = 1'000'000;
};

struct StressSpaceReport {
  int ambient_d = 0;
  std::size_t edge_count = 0;
  std::size_t matrix_rank = 0;
  std::size_t stress_dim = 0;
  int trials = 0;
  bool is_generically_rigid = false;
  std::vector<std::size_t> trial_ranks;
  bool trials_agree() const {
    return std::adjacent_find(trial_ranks.begin(), trial_ranks.end(), std::not_equal_to<>()) == trial_ranks.end();
  }
};

/// Rank of a generically rigid framework on n vertices in R^d.
inline std::size_t rigid_rank(std::size_t n, int d) {
  const auto dd = static_cast<std::size_t>(d);
  if (n >= dd + 1) return dd * n - dd * (dd + 1) / 2;
  return n * (n - 1) / 2;
}

// Independent per-trial seeds derived from one user seed.
inline std::uint64_t trial_seed(std::uint64_t seed, int trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), static_cast<std::uint32_t>(trial)};
  std::uint32_t w[2];
  seq.generate(w, w + 2);
  return (static_cast<std::uint64_t>(w[0]) << 32) | w[1];
}

/// Maximum exact rank over random integer configurations.
inline StressSpaceReport stress_dimension(const Graph& g, int ambient_d, const StressOptions& opt = {}) {
  if (ambient_d < 1) throw Error(ErrorCode::BadParameters, "ambient dimension must be positive");
  if (opt.trials < 1) throw Error(ErrorCode::BadParameters, "need at least one trial");
  StressSpaceReport rep;
  rep.ambient_d = ambient_d;
  rep.edge_count = g.edges.size();
  rep.trials = opt.trials;
  for (int t = 0; t < opt.trials; ++t) {
    const auto cfg = random_configuration(g, ambient_d, trial_seed(opt.seed, t), opt.bound);
    rep.trial_ranks.push_back(exact_rank(rigidity_matrix(g, cfg)));
  }
  rep.matrix_rank = *std::max_element(rep.trial_ranks.begin(), rep.trial_ranks.end());
  rep.stress_dim = rep.edge_count - rep.matrix_rank;
  rep.is_generically_rigid = rep.matrix_rank == rigid_rank(g.vertices.size(), ambient_d);
  return rep;
}

inline StressSpaceReport stress_dimension(const SimplicialComplex& k, int ambient_d, const StressOptions& opt = {}) {
  return stress_dimension(graph_of(k), ambient_d, opt);
}

struct StressBasis {
  Configuration cfg;
  std::vector<std::vector<mpq_class>> basis;  // indexed like Graph::edges
};

/// Exact stress basis at the first trial configuration of `seed`.
inline StressBasis stress_basis(const Graph& g, int ambient_d, std::uint64_t seed = kDefaultSeed, std::int64_t bound = 1'000'000) {
  StressBasis out{random_configuration(g, ambient_d, trial_seed(seed, 0), bound), {}};
  out.basis = left_null_space(rigidity_matrix(g, out.cfg));
  return out;
}

/// dim of the generic stress space in R^{d+1} equals g2, and G(K) is (d+1)-rigid.
inline bool verify_g2_stress(const SimplicialComplex& k, const StressOptions& opt = {}) {
  if (!is_normal_pseudomanifold(k)) throw Error(ErrorCode::NotNormal, "verify_g2_stress needs a normal pseudomanifold");
  const auto rep = stress_dimension(k, k.dim() + 1, opt);
  return static_cast<std::int64_t>(rep.stress_dim) == g2(k) && rep.is_generically_rigid;
}

/// Gluing two generically d-rigid graphs along a common K_d gives a rigid graph.
inline bool check_union_lemma(const Graph& a, const Graph& b, int d, const StressOptions& opt = {}) {
  if (!stress_dimension(a, d, opt).is_generically_rigid) throw Error(ErrorCode::HypothesisNotMet, "first graph is not generically rigid");
  if (!stress_dimension(b, d, opt).is_generically_rigid) throw Error(ErrorCode::HypothesisNotMet, "second graph is not generically rigid");
  std::vector<Vertex> common;
  std::set_intersection(a.vertices.begin(), a.vertices.end(), b.vertices.begin(), b.vertices.end(), std::back_inserter(common));
  std::vector<std::pair<Vertex, Vertex>> shared;
  std::set_intersection(a.edges.begin(), a.edges.end(), b.edges.begin(), b.edges.end(), std::back_inserter(shared));
  // look for d common vertices pairwise joined by shared edges
  const std::set<std::pair<Vertex, Vertex>> shared_set(shared.begin(), shared.end());
  std::vector<Vertex> clique;
  std::function<bool(std::size_t)> grow = [&](std::size_t from) {
    if (static_cast<int>(clique.size()) == d) return true;
    for (std::size_t i = from; i < common.size(); ++i) {
      bool ok = true;
      for (Vertex c : clique) ok = ok && shared_set.count({std::min(c, common[i]), std::max(c, common[i])});
      if (!ok) continue;
      clique.push_back(common[i]);
      if (grow(i + 1)) return true;
      clique.pop_back();
    }
    return false;
  };
  if (!grow(0)) throw Error(ErrorCode::HypothesisNotMet, "intersection contains no K_" + std::to_string(d));
  return stress_dimension(graph_union(a, b), d, opt).is_generically_rigid;
}

/// Cone from a fresh apex over a d-rigid complex: (d+1)-rigid, and when it has
/// stresses, some basis stress is non-zero on an apex edge.
inline bool check_cone_lemma(const SimplicialComplex& k, int d, const StressOptions& opt = {}) {
  if (!stress_dimension(k, d, opt).is_generically_rigid) throw Error(ErrorCode::HypothesisNotMet, "base is not generically " + std::to_string(d) + "-rigid");
  const Vertex apex = k.max_vertex() + 1;
  const Graph g = graph_of(cone(k, apex));
  const auto rep = stress_dimension(g, d + 1, opt);
  if (!rep.is_generically_rigid) return false;
  if (rep.stress_dim == 0) return true;
  const auto sb = stress_basis(g, d + 1, opt.seed, opt.bound);
  for (const auto& w : sb.basis) {
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
      if (w[e] != 0 && (g.edges[e].first == apex || g.edges[e].second == apex)) return true;
    }
  }
  return false;
}

/// g2(K) >= g2(lk sigma) and g2(st sigma) == g2(lk sigma), for faces of codimension >= 3.
inline bool lower_bound_check(const SimplicialComplex& k, const Face& sigma) {
  if (!is_normal_pseudomanifold(k) || k.dim() < 3) throw Error(ErrorCode::NotNormal, "lower_bound_check needs a normal pseudomanifold of dimension >= 3");
  if (!k.contains(sigma)) throw Error(ErrorCode::FaceNotPresent, sigma.to_string());
  const int codim = k.dim() - (static_cast<int>(sigma.size()) - 1);
  if (codim < 3) throw Error(ErrorCode::CodimTooSmall, sigma.to_string() + " has codimension " + std::to_string(codim));
  const auto lk = link(k, sigma);
  const auto st = star(k, sigma);
  const auto g_lk = g2(lk);
  detail::ensure(g2(st) == g_lk, "g2 of star and link agree");
  return g2(k) >= g_lk;
}

}  // namespace pseudoform
