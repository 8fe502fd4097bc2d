#pragma once

#include <cstddef>

#include "sgtc/exact/sparse.hpp"
#include "sgtc/superlie/graded.hpp"

namespace sgtc::spencer {

// A : Hom(W, g[1/2] + g[1]) -> Hom(Lambda^2 W, g[-1/2] + g[0]) with W = g[-1] + g[-1/2],
//   A(phi)(v, w) = proj([v, phi(w)] - (-1)^{|v||w|} [w, phi(v)]).
// Domain coordinates (w, y) -> w * dim + y; codomain (J, z) likewise over the Lambda^2 W basis.
struct CartanMap {
  exact::SparseMatrix A;
  std::size_t domain_dim = 0;
  std::size_t codomain_dim = 0;
  std::size_t rank = 0;
  std::size_t kernel_dim = 0;
};

// Throws ValidationError when the grading is invalid or a required degree is empty.
CartanMap cartan_adjustment_map(const superlie::GradedAlgebra& ga);

}  // namespace sgtc::spencer
