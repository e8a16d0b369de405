#pragma once

// Test-only fixtures and independent brute-force oracles. Nothing here calls
// into the routines it is used to check.

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <tuple>
#include <vector>

#include "pseudoform/complex.hpp"

using pseudoform::SimplicialComplex;
using pseudoform::Vertex;
using pseudoform::Face;

namespace pftest {

inline SimplicialComplex rp2() {
  return SimplicialComplex::from_facets({{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5},
                                         {1, 2, 4}, {2, 3, 5}, {1, 3, 4}, {2, 4, 5}, {1, 3, 5}});
}

inline SimplicialComplex torus() {
  std::vector<std::vector<Vertex>> f;
  for (int i = 0; i < 7; ++i) {
    f.push_back({i, (i + 1) % 7, (i + 3) % 7});
    f.push_back({i, (i + 2) % 7, (i + 3) % 7});
  }
  return SimplicialComplex::from_facets(f);
}

// Stacked d-sphere on n vertices by repeated random facet subdivision,
// written without the library's construction routines.
inline SimplicialComplex stacked(int d, int n, std::mt19937_64& rng) {
  std::vector<std::vector<Vertex>> facets;
  for (int skip = 0; skip <= d + 1; ++skip) {
    std::vector<Vertex> f;
    for (int v = 0; v <= d + 1; ++v) if (v != skip) f.push_back(v);
    facets.push_back(f);
  }
  for (int w = d + 2; w < n; ++w) {
    std::uniform_int_distribution<std::size_t> pick(0, facets.size() - 1);
    const auto sigma = facets[pick(rng)];
    facets.erase(std::find(facets.begin(), facets.end(), sigma));
    for (std::size_t i = 0; i < sigma.size(); ++i) {
      auto g = sigma;
      g[i] = w;
      facets.push_back(g);
    }
  }
  return SimplicialComplex::from_facets(facets);
}

inline SimplicialComplex random_complex(std::mt19937_64& rng, int n, int max_size, int count) {
  std::uniform_int_distribution<int> vert(0, n - 1), size(1, max_size);
  std::vector<std::vector<Vertex>> facets;
  for (int i = 0; i < count; ++i) {
    std::set<Vertex> s;
    const int want = size(rng);
    while (static_cast<int>(s.size()) < want) s.insert(vert(rng));
    facets.emplace_back(s.begin(), s.end());
  }
  return SimplicialComplex::from_facets(facets);
}

inline bool brute_has_face(const SimplicialComplex& k, const std::vector<Vertex>& s) {
  for (const Face& f : k.facets()) {
    if (std::includes(f.begin(), f.end(), s.begin(), s.end())) return true;
  }
  return false;
}

inline std::vector<std::vector<Vertex>> all_subsets(const std::vector<Vertex>& verts, std::size_t k) {
  std::vector<std::vector<Vertex>> out;
  const std::size_t n = verts.size();
  if (k > n) return out;
  std::vector<bool> mask(n, false);
  std::fill(mask.end() - static_cast<long>(k), mask.end(), true);
  do {
    std::vector<Vertex> s;
    for (std::size_t i = 0; i < n; ++i) if (mask[i]) s.push_back(verts[i]);
    out.push_back(s);
  } while (std::next_permutation(mask.begin(), mask.end()));
  return out;
}

inline std::vector<std::int64_t> brute_f_vector(const SimplicialComplex& k) {
  std::set<std::vector<Vertex>> faces;
  for (const Face& f : k.facets()) {
    const auto& v = f.vertices();
    for (std::uint32_t mask = 0; mask < (1u << v.size()); ++mask) {
      std::vector<Vertex> s;
      for (std::size_t i = 0; i < v.size(); ++i) if (mask >> i & 1) s.push_back(v[i]);
      faces.insert(s);
    }
  }
  std::vector<std::int64_t> f(static_cast<std::size_t>(k.dim() + 2), 0);
  for (const auto& s : faces) ++f[s.size()];
  return f;
}

inline std::vector<Face> brute_missing(const SimplicialComplex& k, int dim) {
  std::vector<Face> out;
  for (const auto& s : all_subsets(k.vertices(), static_cast<std::size_t>(dim + 1))) {
    if (brute_has_face(k, s)) continue;
    bool all = true;
    for (std::size_t i = 0; i < s.size() && all; ++i) {
      auto t = s;
      t.erase(t.begin() + static_cast<long>(i));
      all = brute_has_face(k, t);
    }
    if (all) out.push_back(Face(s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Vertex sets of size 3..max_len whose induced subcomplex is a circle.
inline std::set<std::vector<Vertex>> brute_induced_circles(const SimplicialComplex& k, int max_len) {
  std::set<std::vector<Vertex>> out;
  for (int len = 3; len <= max_len; ++len) {
    for (const auto& s : all_subsets(k.vertices(), static_cast<std::size_t>(len))) {
      if (len == 3 && brute_has_face(k, s)) continue;
      bool ok = true;
      std::map<Vertex, int> deg;
      for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
          if (brute_has_face(k, {s[i], s[j]})) ++deg[s[i]], ++deg[s[j]];
      for (Vertex v : s) ok = ok && deg[v] == 2;
      if (!ok) continue;
      // degree two everywhere: connected iff a single cycle
      std::set<Vertex> seen{s[0]};
      std::vector<Vertex> stack{s[0]};
      while (!stack.empty()) {
        Vertex x = stack.back();
        stack.pop_back();
        for (Vertex y : s)
          if (!seen.count(y) && brute_has_face(k, {std::min(x, y), std::max(x, y)})) seen.insert(y), stack.push_back(y);
      }
      if (seen.size() == s.size()) out.insert(s);
    }
  }
  return out;
}

inline bool brute_isomorphic(const SimplicialComplex& a, const SimplicialComplex& b) {
  if (a.num_vertices() != b.num_vertices() || a.facets().size() != b.facets().size()) return false;
  auto perm = b.vertices();
  std::sort(perm.begin(), perm.end());
  const auto& va = a.vertices();
  do {
    std::map<Vertex, Vertex> m;
    for (std::size_t i = 0; i < va.size(); ++i) m[va[i]] = perm[i];
    std::set<std::vector<Vertex>> img;
    for (const Face& f : a.facets()) {
      std::vector<Vertex> g;
      for (Vertex v : f) g.push_back(m[v]);
      std::sort(g.begin(), g.end());
      img.insert(g);
    }
    std::set<std::vector<Vertex>> fb;
    for (const Face& f : b.facets()) fb.insert(f.vertices());
    if (img == fb) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// Random triangulated 2-sphere: a stacked sphere followed by random edge flips.
inline SimplicialComplex flipped_sphere(int n, int flips, std::mt19937_64& rng) {
  auto base = stacked(2, n, rng);
  std::vector<std::vector<Vertex>> tri;
  for (const Face& f : base.facets()) tri.push_back(f.vertices());
  auto has_edge = [&](Vertex a, Vertex b) {
    for (const auto& t : tri)
      if (std::find(t.begin(), t.end(), a) != t.end() && std::find(t.begin(), t.end(), b) != t.end()) return true;
    return false;
  };
  for (int i = 0; i < flips; ++i) {
    std::uniform_int_distribution<std::size_t> pick(0, tri.size() - 1);
    const auto t = tri[pick(rng)];
    std::uniform_int_distribution<int> which(0, 2);
    const int skip = which(rng);
    Vertex a = t[(skip + 1) % 3], b = t[(skip + 2) % 3], c = t[skip];
    std::size_t other = tri.size();
    for (std::size_t j = 0; j < tri.size(); ++j) {
      const auto& u = tri[j];
      if (u != t && std::find(u.begin(), u.end(), a) != u.end() && std::find(u.begin(), u.end(), b) != u.end()) other = j;
    }
    Vertex d = 0;
    for (Vertex v : tri[other]) if (v != a && v != b) d = v;
    if (has_edge(c, d)) continue;
    int da = 0, db = 0;
    for (const auto& u : tri) {
      da += std::find(u.begin(), u.end(), a) != u.end();
      db += std::find(u.begin(), u.end(), b) != u.end();
    }
    if (da <= 3 || db <= 3) continue;  // would leave a degree-2 vertex
    std::vector<Vertex> n1{a, c, d}, n2{b, c, d};
    std::sort(n1.begin(), n1.end());
    std::sort(n2.begin(), n2.end());
    const std::size_t self = static_cast<std::size_t>(std::find(tri.begin(), tri.end(), t) - tri.begin());
    tri.erase(tri.begin() + static_cast<long>(std::max(self, other)));
    tri.erase(tri.begin() + static_cast<long>(std::min(self, other)));
    tri.push_back(n1);
    tri.push_back(n2);
  }
  return SimplicialComplex::from_facets(tri);
}

// Triangle components of a surface when the three edges of the 3-cycle c may
// not be crossed; plain union-find over pairs of triangles sharing an edge.
inline int brute_cut_components(const SimplicialComplex& s, const std::vector<Vertex>& c) {
  const auto& t = s.facets();
  std::vector<std::size_t> parent(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) parent[i] = i;
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto on_cycle = [&](Vertex v) { return std::find(c.begin(), c.end(), v) != c.end(); };
  for (std::size_t i = 0; i < t.size(); ++i) {
    for (std::size_t j = i + 1; j < t.size(); ++j) {
      std::vector<Vertex> shared;
      std::set_intersection(t[i].begin(), t[i].end(), t[j].begin(), t[j].end(), std::back_inserter(shared));
      if (shared.size() != 2 || (on_cycle(shared[0]) && on_cycle(shared[1]))) continue;
      parent[find(i)] = find(j);
    }
  }
  std::set<std::size_t> roots;
  for (std::size_t i = 0; i < t.size(); ++i) roots.insert(find(i));
  return static_cast<int>(roots.size());
}

// Orientation character of the 3-cycle c: pushes c off itself into a loop of
// triangles (fans around each cycle vertex) and sums the incoherence of every
// crossed edge, with each triangle oriented by its sorted vertex order. The
// cycle is one-sided iff the sum is odd.
inline bool brute_one_sided(const SimplicialComplex& s, const std::vector<Vertex>& c) {
  auto tri_with = [&](Vertex a, Vertex b) {
    std::vector<Face> out;
    for (const Face& f : s.facets()) if (f.contains(a) && f.contains(b)) out.push_back(f);
    return out;
  };
  auto edge_sign = [](const Face& t, Vertex a, Vertex b) {
    for (std::size_t i = 0; i < 3; ++i)
      if (t[i] != a && t[i] != b) return i % 2 == 0 ? 1 : -1;
    return 0;
  };
  int parity = 0;
  auto cross = [&](const Face& from, Vertex a, Vertex b) {
    auto both = tri_with(a, b);
    const Face to = both[0] == from ? both[1] : both[0];
    if (edge_sign(from, a, b) == edge_sign(to, a, b)) parity ^= 1;
    return to;
  };
  const Face start = tri_with(c[0], c[1])[0];
  Face cur = start;
  Vertex came = c[0];
  for (std::size_t i = 1; i <= 3; ++i) {
    const Vertex pivot = c[i % 3];
    const Vertex target = c[(i + 1) % 3];
    while (!cur.contains(target)) {
      Vertex q = 0;
      for (Vertex v : cur) if (v != pivot && v != came) q = v;
      cur = cross(cur, pivot, q);
      came = q;
    }
    came = pivot;
  }
  // back at a triangle on edge c0 c1; close the loop across that edge if needed
  if (cur != start) cross(cur, c[0], c[1]);
  return parity == 1;
}

// Orientability by exhaustive sign search over the triangles (keep to <= 20).
inline bool brute_orientable(const SimplicialComplex& s) {
  const auto& t = s.facets();
  auto sign = [](const Face& f, Vertex a, Vertex b) {
    for (std::size_t i = 0; i < 3; ++i)
      if (f[i] != a && f[i] != b) return i % 2 == 0 ? 1 : -1;
    return 0;
  };
  std::vector<std::tuple<std::size_t, std::size_t, int>> adj;
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = i + 1; j < t.size(); ++j) {
      std::vector<Vertex> e;
      std::set_intersection(t[i].begin(), t[i].end(), t[j].begin(), t[j].end(), std::back_inserter(e));
      if (e.size() == 2) adj.emplace_back(i, j, sign(t[i], e[0], e[1]) * sign(t[j], e[0], e[1]));
    }
  for (std::uint32_t mask = 0; mask < (1u << t.size()); mask += 2) {
    bool ok = true;
    for (auto [i, j, prod] : adj) {
      const int si = mask >> i & 1 ? -1 : 1, sj = mask >> j & 1 ? -1 : 1;
      if (si * sj * prod != -1) { ok = false; break; }
    }
    if (ok) return true;
  }
  return false;
}

template <typename Fn>
inline pseudoform::ErrorCode error_of(Fn&& fn) {
  try {
    fn();
  } catch (const pseudoform::Error& e) {
    return e.code();
  }
  return pseudoform::ErrorCode::ParseError;  // sentinel: nothing thrown
}

}  // namespace pftest
