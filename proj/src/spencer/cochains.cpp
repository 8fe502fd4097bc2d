#include "sgtc/spencer/cochains.hpp"

#include "sgtc/error.hpp"
#include "sgtc/superlin/conventions.hpp"

namespace sgtc::spencer {

using superlin::is_odd;
using superlin::PowerKind;

CochainSpace::CochainSpace(const SuperVectorSpace& W, std::size_t degree, std::vector<Parity> target_parities)
    : wedge_(W, degree, PowerKind::Exterior), target_(std::move(target_parities)) {}

Parity CochainSpace::parity(std::size_t flat) const {
  return wedge_.parity(flat / target_.size()) + target_[flat % target_.size()];
}

SparseMatrix cochain_action(const CochainSpace& C, const Matrix& X, Parity px, const Matrix& rho) {
  const std::size_t n = C.W().dim();
  const std::size_t m = C.target_dim();
  if (X.rows() != n || X.cols() != n) throw DimensionError("cochain_action: X has the wrong shape");
  if (rho.rows() != m || rho.cols() != m) throw DimensionError("cochain_action: rho has the wrong shape");
  const PowerBasis& wedge = C.wedge();
  const std::size_t j = C.degree();
  const bool ox = is_odd(px);
  exact::SparseBuilder out(C.dim(), C.dim());

  for (std::size_t I = 0; I < wedge.size(); ++I)
    for (std::size_t t = 0; t < m; ++t)
      for (std::size_t r = 0; r < m; ++r)
        if (sgn(rho(r, t)) != 0) out.add(C.index(I, r), C.index(I, t), rho(r, t));

  // Row (J, t) collects F(J with slot i replaced by E) weighted by X[E][J_i].
  for (std::size_t J = 0; J < wedge.size(); ++J) {
    const std::vector<std::size_t> tuple = wedge.tuple_vector(J);
    bool prefix_odd = false;
    for (std::size_t i = 0; i < j; ++i) {
      for (std::size_t E = 0; E < n; ++E) {
        const Scalar& coeff = X(E, tuple[i]);
        if (sgn(coeff) == 0) continue;
        std::vector<std::size_t> replaced = tuple;
        replaced[i] = E;
        const auto canon = wedge.canonical(replaced);
        if (canon.sign == 0) continue;
        for (std::size_t t = 0; t < m; ++t) {
          const bool odd_F = is_odd(wedge.parity(canon.index) + C.target_parity(t));
          int s = -canon.sign;
          if (ox && odd_F) s = -s;
          if (ox && prefix_odd) s = -s;
          out.add(C.index(J, t), C.index(canon.index, t), s * coeff);
        }
      }
      if (is_odd(C.W().parity(tuple[i]))) prefix_odd = !prefix_odd;
    }
  }
  return out.build();
}

}  // namespace sgtc::spencer
