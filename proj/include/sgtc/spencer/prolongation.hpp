#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "sgtc/exact/subspace.hpp"
#include "sgtc/spencer/cochains.hpp"
#include "sgtc/superlie/embedded.hpp"

namespace sgtc::spencer {

using superlie::EmbeddedAlgebra;

// g^(-1) = W, g^(0) = g and g^(k) = ker(delta : Hom(W, g^(k-1)) -> Hom(Lambda^2 W, g^(k-2))).
// Elements of g^(k) are stored as flattened multilinear maps W^{k+1} -> W,
// component (a_1, .., a_{k+1}, d) with a_1 slowest; g^(0) holds y[b][d] = X[d][b].
class ProlongationTower {
 public:
  // Computes g^(0) .. g^(max_degree) eagerly (stops early once a level vanishes).
  ProlongationTower(const EmbeddedAlgebra& g, int max_degree);

  const SuperVectorSpace& W() const { return W_; }
  int max_degree() const { return max_degree_; }

  // k in [-1, max_degree]; DimensionError beyond that.
  std::size_t dim(int k) const;
  std::size_t tensor_size(int k) const;
  const std::vector<SparseVector>& basis(int k) const;
  Parity parity(int k, std::size_t b) const;

  // Hom(Lambda^j W, g^(k))
  CochainSpace cochains(std::size_t j, int k) const;

  // delta on C^{j,k} with values written as full components: row J * tensor_size(k-1) + c.
  //   dF(u_0..u_j) = sum_i (-1)^{j-i} (-1)^{|u_i|(|u_{i+1}|+..+|u_j|)} F(u_0..^u_i..u_j)(u_i, ..)
  SparseMatrix delta_components(std::size_t j, int k) const;
  // The same map in C^{j+1,k-1} coordinates. Throws ConsistencyError when the
  // image leaves g^(k-1).
  SparseMatrix delta(std::size_t j, int k) const;

  // g^(k) as the kernel subspace of Hom(W, g^(k-1)) coordinates, k >= 1.
  exact::Subspace prolongation_subspace(int k) const;

  // Every element of g^(k) is super-symmetric in its k+1 inputs.
  bool is_supersymmetric(int k) const;

 private:
  struct Level {
    std::vector<SparseVector> basis;
    std::vector<Parity> parity;
    exact::Subspace kernel;  // in C^{1,k-1} coordinates, k >= 1
  };
  const Level& level(int k) const;

  SuperVectorSpace W_;
  int max_degree_ = 0;
  std::vector<Level> levels_;  // levels_[k + 1]
  Level empty_;
};

struct Cohomology {
  int i = 0;
  std::size_t dim = 0;
  std::size_t cochain_dim = 0;  // dim Hom(Lambda^2 W, g^(i-1))
  std::size_t rank_out = 0;     // rank of delta on Hom(Lambda^2 W, g^(i-1))
  std::size_t rank_in = 0;      // rank of delta on Hom(W, g^(i))
  // Representatives in Hom(Lambda^2 W, g^(i-1)) coordinates, only when requested.
  std::optional<std::vector<SparseVector>> basis;
};

// H^{i,2} at Hom(Lambda^2 W, g^(i-1)) in g^(i) (x) W* -> g^(i-1) (x) Lambda^2 -> g^(i-2) (x) Lambda^3.
// Needs tower.max_degree() >= i unless a lower level already vanishes.
Cohomology spencer_cohomology(const ProlongationTower& tower, int i, bool with_basis = false);

}  // namespace sgtc::spencer
