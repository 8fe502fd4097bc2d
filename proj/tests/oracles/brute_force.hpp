#pragma once

// Independent reference constructions: everything here is written with plain
// loops over matrices and parities, sharing nothing with the flattening code
// except the public ordering conventions (Hom flat index = source * dim target
// + target, Lambda^2 basis = non-decreasing pairs in lexicographic order).

#include <string>
#include <utility>
#include <vector>

#include "sgtc/exact/elimination.hpp"
#include "sgtc/exact/matrix.hpp"
#include "sgtc/models/models.hpp"

namespace oracle {

using sgtc::exact::Matrix;
using sgtc::exact::Scalar;

inline std::vector<bool> odd_flags(const sgtc::superlin::SuperVectorSpace& W) {
  std::vector<bool> odd;
  for (std::size_t i = 0; i < W.dim(); ++i) odd.push_back(sgtc::superlin::is_odd(W.parity(i)));
  return odd;
}

inline std::vector<std::pair<std::size_t, std::size_t>> wedge_pairs(const std::vector<bool>& odd) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < odd.size(); ++i)
    for (std::size_t j = i; j < odd.size(); ++j)
      if (i < j || odd[i]) out.emplace_back(i, j);
  return out;
}

// delta(phi)(u_i, u_j) = phi(u_i) u_j - (-1)^{|u_i||u_j|} phi(u_j) u_i, column (w, x) is phi(u_w) = X_x.
inline Matrix brute_force_delta(const sgtc::superlin::SuperVectorSpace& W, const std::vector<Matrix>& g) {
  const std::vector<bool> odd = odd_flags(W);
  const std::size_t n = odd.size(), m = g.size();
  const auto pairs = wedge_pairs(odd);
  Matrix D(pairs.size() * n, n * m);
  for (std::size_t w = 0; w < n; ++w)
    for (std::size_t x = 0; x < m; ++x)
      for (std::size_t P = 0; P < pairs.size(); ++P) {
        const auto [i, j] = pairs[P];
        const int sign = odd[i] && odd[j] ? -1 : 1;
        for (std::size_t c = 0; c < n; ++c) {
          Scalar v = 0;
          if (i == w) v += g[x](c, j);
          if (j == w) v -= sign * g[x](c, i);
          D(P * n + c, w * m + x) = v;
        }
      }
  return D;
}

// dim of { T : W^{k+1} -> W super-symmetric in its inputs, T(a_1..a_k, .) in g }.
inline std::size_t brute_force_prolongation_dim(const sgtc::superlin::SuperVectorSpace& W,
                                                const std::vector<Matrix>& g, std::size_t k) {
  const std::vector<bool> odd = odd_flags(W);
  const std::size_t n = odd.size();
  // Annihilator of g inside gl(W), as functionals on X(d, b).
  Matrix gm(g.size(), n * n);
  for (std::size_t r = 0; r < g.size(); ++r)
    for (std::size_t d = 0; d < n; ++d)
      for (std::size_t b = 0; b < n; ++b) gm(r, d * n + b) = g[r](d, b);
  const auto annihilator = sgtc::exact::reference::kernel(gm);

  std::size_t vars = n;
  for (std::size_t s = 0; s <= k; ++s) vars *= n;
  std::vector<std::size_t> pow(k + 2, 1);
  for (std::size_t s = k + 1; s-- > 0;) pow[s] = pow[s + 1] * n;
  auto digits = [&](std::size_t v) {
    std::vector<std::size_t> t(k + 2);
    for (std::size_t s = 0; s < k + 2; ++s) t[s] = v / pow[s] % n;
    return t;
  };
  auto index = [&](const std::vector<std::size_t>& t) {
    std::size_t v = 0;
    for (std::size_t s = 0; s < k + 2; ++s) v += t[s] * pow[s];
    return v;
  };

  std::vector<std::vector<Scalar>> rows;
  for (std::size_t v = 0; v < vars; ++v) {
    const auto t = digits(v);
    for (std::size_t s = 0; s < k; ++s) {
      auto u = t;
      std::swap(u[s], u[s + 1]);
      std::vector<Scalar> r(vars);
      r[v] += 1;
      r[index(u)] -= odd[t[s]] && odd[t[s + 1]] ? -1 : 1;
      rows.push_back(std::move(r));
    }
  }
  for (std::size_t prefix = 0; prefix < vars / (n * n); ++prefix)
    for (const auto& a : annihilator) {
      std::vector<Scalar> r(vars);
      for (std::size_t d = 0; d < n; ++d)
        for (std::size_t b = 0; b < n; ++b) r[prefix * n * n + b * n + d] = a[d * n + b];
      rows.push_back(std::move(r));
    }
  Matrix M(rows.size(), vars);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < vars; ++j) M(i, j) = rows[i][j];
  return vars - sgtc::exact::rank(M);
}

// Every model with dim W <= 6 the engine can build.
inline std::vector<sgtc::models::GStructureModel> small_models() {
  std::vector<sgtc::models::GStructureModel> out;
  for (const auto& name : sgtc::models::builtin_names()) {
    if (name == "on" || name == "un") continue;
    auto m = sgtc::models::builtin_model(name);
    if (m && m->W.dim() <= 6) out.push_back(std::move(*m));
  }
  for (std::size_t n = 2; n <= 6; ++n) out.push_back(sgtc::models::classical_models(n).orthogonal);
  for (std::size_t n = 1; n <= 3; ++n) out.push_back(sgtc::models::classical_models(n).unitary);
  return out;
}

}  // namespace oracle
