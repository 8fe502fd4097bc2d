#pragma once

#include <cstddef>
#include <vector>

#include "sgtc/exact/matrix.hpp"
#include "sgtc/exact/sparse.hpp"
#include "sgtc/superlin/power.hpp"
#include "sgtc/superlin/space.hpp"

namespace sgtc::spencer {

using exact::Matrix;
using exact::Scalar;
using exact::SparseMatrix;
using exact::SparseVector;
using superlin::Parity;
using superlin::PowerBasis;
using superlin::SuperVectorSpace;

// Hom(Lambda^j W, M) for a graded target M given by the parities of its
// basis. Basis element (I, m) has flat index I * dim M + m, with I running
// over the super exterior power basis of W.
class CochainSpace {
 public:
  CochainSpace(const SuperVectorSpace& W, std::size_t degree, std::vector<Parity> target_parities);

  const SuperVectorSpace& W() const { return wedge_.base(); }
  const PowerBasis& wedge() const { return wedge_; }
  std::size_t degree() const { return wedge_.degree(); }
  std::size_t target_dim() const { return target_.size(); }
  std::size_t dim() const { return wedge_.size() * target_.size(); }
  std::size_t index(std::size_t I, std::size_t m) const { return I * target_.size() + m; }
  Parity target_parity(std::size_t m) const { return target_[m]; }
  Parity parity(std::size_t flat) const;

 private:
  PowerBasis wedge_;
  std::vector<Parity> target_;
};

// Matrix of x on the cochains: X is x acting on W, rho is x acting on M.
//   (x.F)(u_1..u_j) = rho(x) F(u_1..u_j)
//     - (-1)^{|x||F|} sum_i (-1)^{|x|(|u_1|+..+|u_{i-1}|)} F(u_1.. x u_i ..u_j)
SparseMatrix cochain_action(const CochainSpace& C, const Matrix& X, Parity px, const Matrix& rho);

}  // namespace sgtc::spencer
