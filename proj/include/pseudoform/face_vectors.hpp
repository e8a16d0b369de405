#pragma once

#include <cstdint>
#include <vector>

#include "pseudoform/complex.hpp"

namespace pseudoform {

inline std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// f-, h-, g-vectors of a d-dimensional complex.
/// f[i] counts faces of dimension i-1, so f[0] = f_{-1} = 1.
struct FaceVectorReport {
  int dim = -1;
  std::vector<std::int64_t> f;  // f_{-1} .. f_d
  std::vector<std::int64_t> h;  // h_0 .. h_{d+1}
  std::vector<std::int64_t> g;  // g_0 = h_0, g_i = h_i - h_{i-1}
  std::int64_t g2 = 0;
  std::int64_t euler = 0;       // sum_{i>=0} (-1)^i f_i

  std::int64_t f_at(int i) const {  // f_i for i >= -1
    auto idx = static_cast<std::size_t>(i + 1);
    return idx < f.size() ? f[idx] : 0;
  }
  friend bool operator==(const FaceVectorReport&, const FaceVectorReport&) = default;
};

/// h_i = sum_{j<=i} (-1)^{i-j} C(d+1-j, i-j) f_{j-1}.
inline std::vector<std::int64_t> h_from_f(int d, const std::vector<std::int64_t>& f) {
  std::vector<std::int64_t> h(static_cast<std::size_t>(d + 2), 0);
  for (int i = 0; i <= d + 1; ++i) {
    std::int64_t s = 0;
    for (int j = 0; j <= i; ++j) {
      const std::int64_t sign = ((i - j) % 2 == 0) ? 1 : -1;
      const std::int64_t fj = static_cast<std::size_t>(j) < f.size() ? f[static_cast<std::size_t>(j)] : 0;
      s += sign * binomial(d + 1 - j, i - j) * fj;
    }
    h[static_cast<std::size_t>(i)] = s;
  }
  return h;
}

/// Inverse transform: f_{j-1} = sum_{i<=j} C(d+1-i, j-i) h_i.
inline std::vector<std::int64_t> f_from_h(int d, const std::vector<std::int64_t>& h) {
  std::vector<std::int64_t> f(static_cast<std::size_t>(d + 2), 0);
  for (int j = 0; j <= d + 1; ++j) {
    std::int64_t s = 0;
    for (int i = 0; i <= j; ++i) s += binomial(d + 1 - i, j - i) * h[static_cast<std::size_t>(i)];
    f[static_cast<std::size_t>(j)] = s;
  }
  return f;
}

/// g_2 from the closed form f_1 - (d+1) f_0 + C(d+2, 2).
inline std::int64_t g2_closed_form(int d, std::int64_t f0, std::int64_t f1) {
  return f1 - (d + 1) * f0 + binomial(d + 2, 2);
}

inline FaceVectorReport face_vectors(const SimplicialComplex& k) {
  FaceVectorReport r;
  r.dim = k.dim();
  const int d = k.dim();
  for (int i = -1; i <= d; ++i) r.f.push_back(static_cast<std::int64_t>(k.count(i)));
  if (r.f.empty()) r.f.push_back(0);  // void complex
  r.h = h_from_f(d, r.f);
  r.g.push_back(r.h.empty() ? 0 : r.h[0]);
  for (std::size_t i = 1; i < r.h.size(); ++i) r.g.push_back(r.h[i] - r.h[i - 1]);
  r.g2 = g2_closed_form(d, r.f_at(0), r.f_at(1));
  if (d >= 1) detail::ensure(r.g2 == r.g[2], "g2 closed form disagrees with h-vector");
  for (int i = 0; i <= d; ++i) r.euler += (i % 2 == 0 ? 1 : -1) * r.f_at(i);
  return r;
}

inline std::int64_t g2(const SimplicialComplex& k) {
  return g2_closed_form(k.dim(), static_cast<std::int64_t>(k.count(0)), static_cast<std::int64_t>(k.count(1)));
}

inline std::int64_t euler_characteristic(const SimplicialComplex& k) { return face_vectors(k).euler; }

}  // namespace pseudoform
