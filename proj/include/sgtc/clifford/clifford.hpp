#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "sgtc/exact/matrix.hpp"
#include "sgtc/superlin/space.hpp"
#include "sgtc/superlin/tensor.hpp"

namespace sgtc::clifford {

using exact::Matrix;

struct CliffordData {
  std::size_t p_plus = 0;
  std::size_t p_minus = 0;
  std::size_t q = 0;
  Matrix eta;                  // diag(+..+, -..-)
  std::vector<Matrix> gammas;  // q x q, {g_a, g_b} = 2 eta_ab
  Matrix C;                    // C g_a C^-1 = alpha g_a^T, C^T = alpha C
  int alpha = 1;

  std::size_t p() const { return p_plus + p_minus; }
  // g^c = eta^{cd} g_d
  Matrix gamma_upper(std::size_t c) const;
};

// Real module of size q for Cl(p_plus, p_minus). Supported: every signature
// reachable from (0,0), (1,0), (2,0), (2,1), (4,0) by (r,s) -> (r+1, s+1),
// with q any multiple of the minimal module size. Throws UnsupportedSignature.
CliffordData build_clifford(std::size_t p_plus, std::size_t p_minus, std::size_t q);
// Minimal module.
CliffordData build_clifford(std::size_t p_plus, std::size_t p_minus);
std::size_t minimal_module_dim(std::size_t p_plus, std::size_t p_minus);

// Search for (C, alpha), alpha tried in the order +1, -1. Returns false when no
// invertible solution exists.
bool find_charge_conjugation(const std::vector<Matrix>& gammas, Matrix& C, int& alpha);

struct CliffordCheck {
  bool clifford_relations = false;
  bool charge_conjugation = false;
  bool c_transpose = false;
  bool ok() const { return clifford_relations && charge_conjugation && c_transpose; }
};
CliffordCheck verify(const CliffordData& cd);

// Generators of spin(p_plus, p_minus) indexed by pairs a < b.
struct SpinRepPair {
  std::vector<std::pair<std::size_t, std::size_t>> labels;
  std::vector<Matrix> sigma;    // q x q, sigma_ab = [g_a, g_b] / 4
  std::vector<Matrix> vector;   // p x p, rho1(x_ab)^c_d = delta^c_a eta_bd - delta^c_b eta_ad
  std::vector<Matrix> spinor;   // -sigma^T: the action on the odd part of W

  std::size_t size() const { return labels.size(); }
  std::string label(std::size_t k) const;
};
SpinRepPair spin_generators(const CliffordData& cd);

// [sigma_ab, g_c] = eta_bc g_a - eta_ac g_b for all a, b, c.
bool verify_intertwining(const CliffordData& cd, const SpinRepPair& spin);

// Product g_0 g_1 ... g_{p-1} and the scalar s with Gamma^2 = s Id.
Matrix chirality_operator(const CliffordData& cd);
int chirality_square(const CliffordData& cd);

enum class Chirality { Plus, Minus };

// A spin-invariant module carrying the odd part of W together with the flat
// torsion pairing (T0)^c_{ab}.
struct SpinorModule {
  CliffordData clifford;
  std::size_t dim = 0;
  std::vector<Matrix> generators;  // aligned with spin_generators(clifford)
  std::vector<Matrix> pairing;     // one symmetric dim x dim matrix per vector index
  std::string description;
};

SpinorModule full_module(const CliffordData& cd);
// Eigenspace of Gamma^T for +1 (Plus) or -1 (Minus); needs Gamma^2 = Id.
SpinorModule chiral_module(const CliffordData& cd, Chirality chirality);
// Block direct sum; all summands must share the Clifford data.
SpinorModule module_sum(const std::vector<SpinorModule>& parts);

// T0 in Hom(Lambda^2 W, W): T0(s_a, s_b) = sum_c pairing[c]_ab e_c.
superlin::GradedTensor t0_tensor(const SpinorModule& module, const superlin::SuperVectorSpace& W);
superlin::GradedTensor t0_tensor(const CliffordData& cd, const superlin::SuperVectorSpace& W);

}  // namespace sgtc::clifford
