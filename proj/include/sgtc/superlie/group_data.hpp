#pragma once

#include <string>
#include <vector>

#include "sgtc/clifford/clifford.hpp"
#include "sgtc/superlie/embedded.hpp"

namespace sgtc::superlie {

// The finite data of a super Lie group: an even Lie algebra acting on an odd
// module V, and an equivariant symmetric map d : V x V -> even algebra.
struct GroupData {
  std::string name;
  SuperLieAlgebra even;               // purely even
  std::vector<Matrix> action;         // dim V x dim V, one per even basis element
  std::size_t v_dim = 0;
  std::vector<exact::Vector> d;       // d[i * v_dim + j] in even coordinates

  const exact::Vector& d_of(std::size_t i, std::size_t j) const { return d[i * v_dim + j]; }
};

// Symmetry of d, equivariance x.d(v,w) = d(xv,w) + d(v,xw), the cyclic
// identity d(v1,v2)v3 + d(v2,v3)v1 + d(v3,v1)v2 = 0, Jacobi of the even part
// and the action being a representation.
ValidationReport validate_group_data(const GroupData& gd);

// Even part acts by commutator on the odd part; d is the anticommutator.
GroupData group_data_from(const EmbeddedAlgebra& g, const std::string& name);

// gl(p|q): all of gl(R^{p|q}).
EmbeddedAlgebra gl_superalgebra(std::size_t p, std::size_t q);
// osp(p|2m): X with B(Xu, v) + (-1)^{|X||u|} B(u, Xv) = 0 for B = Id_p + Omega_2m.
EmbeddedAlgebra osp_superalgebra(std::size_t p, std::size_t m);

GroupData gl_group_data(std::size_t p, std::size_t q);
GroupData osp_group_data(std::size_t p, std::size_t q);
// Translations + spin acting on the spinor module; d(s_a, s_b) = sum_c pairing[c]_ab P_c.
GroupData super_poincare_group_data(const clifford::SpinorModule& module, const std::string& name);

}  // namespace sgtc::superlie
