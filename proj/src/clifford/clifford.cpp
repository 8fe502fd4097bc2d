#include "sgtc/clifford/clifford.hpp"

#include <map>

#include "sgtc/error.hpp"
#include "sgtc/exact/subspace.hpp"
#include "sgtc/superlin/hom.hpp"

namespace sgtc::clifford {

using exact::Scalar;
using exact::Vector;

namespace {

const Matrix kX{{0, 1}, {1, 0}};
const Matrix kZ{{1, 0}, {0, -1}};
const Matrix kE{{0, 1}, {-1, 0}};

using Signature = std::pair<std::size_t, std::size_t>;

// Gammas of the minimal module, positive-norm generators first.
bool minimal_gammas(std::size_t r, std::size_t s, std::vector<Matrix>& out) {
  const Matrix I2 = Matrix::identity(2);
  if (s == 0) {
    switch (r) {
      case 0:
        out = {};
        return true;
      case 1:
        out = {Matrix{{1}}};
        return true;
      case 2:
        out = {kX, kZ};
        return true;
      case 4: {
        const Matrix I4 = Matrix::identity(4);
        out = {kron(kron(kE, I2), kE), kron(kron(kX, kE), kE), kron(kron(kZ, kE), kE), kron(I4, kX)};
        return true;
      }
      default:
        return false;
    }
  }
  if (r == 2 && s == 1) {
    out = {kX, kZ, kE};
    return true;
  }
  if (r == 0) return false;
  std::vector<Matrix> base;
  if (!minimal_gammas(r - 1, s - 1, base)) return false;
  const std::size_t n = base.empty() ? 1 : base.front().rows();
  const Matrix In = Matrix::identity(n);
  out.clear();
  // base positive generators, then the new positive one, then negatives
  const std::size_t base_plus = r - 1;
  for (std::size_t i = 0; i < base_plus; ++i) out.push_back(kron(base[i], kZ));
  out.push_back(kron(In, kX));
  for (std::size_t i = base_plus; i < base.size(); ++i) out.push_back(kron(base[i], kZ));
  out.push_back(kron(In, kE));
  return true;
}

bool is_invertible(const Matrix& m) { return inverse(m).has_value(); }

}  // namespace

Matrix CliffordData::gamma_upper(std::size_t c) const {
  Matrix g(q, q);
  for (std::size_t d = 0; d < p(); ++d)
    if (sgn(eta(c, d)) != 0) g += (1 / eta(c, d)) * gammas[d];
  return g;
}

std::size_t minimal_module_dim(std::size_t p_plus, std::size_t p_minus) {
  std::vector<Matrix> g;
  if (!minimal_gammas(p_plus, p_minus, g))
    throw UnsupportedSignature("no Clifford module construction for signature (" + std::to_string(p_plus) + "," +
                               std::to_string(p_minus) + ")");
  return g.empty() ? 1 : g.front().rows();
}

bool find_charge_conjugation(const std::vector<Matrix>& gammas, Matrix& C, int& alpha) {
  const std::size_t q = gammas.empty() ? 1 : gammas.front().rows();
  const std::size_t unknowns = q * q;
  for (int a : {1, -1}) {
    // Rows: entries of C g - a g^T C for each gamma, and C^T - a C.
    std::vector<exact::SparseVector> rows;
    for (const auto& g : gammas)
      for (std::size_t i = 0; i < q; ++i)
        for (std::size_t j = 0; j < q; ++j) {
          Vector row(unknowns);
          for (std::size_t k = 0; k < q; ++k) {
            row[i * q + k] += g(k, j);
            row[k * q + j] -= a * g(k, i);
          }
          rows.push_back(exact::to_sparse(row));
        }
    for (std::size_t i = 0; i < q; ++i)
      for (std::size_t j = 0; j < q; ++j) {
        Vector row(unknowns);
        row[j * q + i] += 1;
        row[i * q + j] -= a;
        rows.push_back(exact::to_sparse(row));
      }
    const exact::Subspace ker = exact::kernel_basis(exact::SparseMatrix::from_columns(unknowns, rows).transpose());
    const auto& basis = ker.basis_vectors();
    auto as_matrix = [&](const Vector& v) {
      Matrix m(q, q);
      for (std::size_t k = 0; k < unknowns; ++k) m(k / q, k % q) = v[k];
      return m;
    };
    std::vector<Vector> candidates;
    for (const auto& b : basis) candidates.push_back(exact::to_dense(b, unknowns));
    for (int power = 1; power <= 3 && !basis.empty(); ++power) {
      Vector v(unknowns);
      for (std::size_t k = 0; k < basis.size(); ++k) {
        Scalar c = 1;
        for (int e = 0; e < power; ++e) c *= static_cast<long>(k + 1);
        for (const auto& entry : basis[k]) v[entry.index] += c * entry.value;
      }
      candidates.push_back(v);
    }
    for (const auto& v : candidates) {
      Matrix m = as_matrix(v);
      if (is_invertible(m)) {
        C = std::move(m);
        alpha = a;
        return true;
      }
    }
  }
  return false;
}

CliffordData build_clifford(std::size_t p_plus, std::size_t p_minus, std::size_t q) {
  std::vector<Matrix> g;
  if (!minimal_gammas(p_plus, p_minus, g))
    throw UnsupportedSignature("no Clifford module construction for signature (" + std::to_string(p_plus) + "," +
                               std::to_string(p_minus) + ")");
  const std::size_t qmin = g.empty() ? 1 : g.front().rows();
  if (q == 0 || q % qmin != 0)
    throw UnsupportedSignature("signature (" + std::to_string(p_plus) + "," + std::to_string(p_minus) +
                               ") has no real Clifford module of dimension " + std::to_string(q) +
                               " (multiples of " + std::to_string(qmin) + " only)");
  CliffordData cd;
  cd.p_plus = p_plus;
  cd.p_minus = p_minus;
  cd.q = q;
  Vector diag(p_plus + p_minus, Scalar(1));
  for (std::size_t i = p_plus; i < diag.size(); ++i) diag[i] = -1;
  cd.eta = Matrix::diagonal(diag);
  const Matrix copies = Matrix::identity(q / qmin);
  for (const auto& m : g) cd.gammas.push_back(kron(copies, m));
  Matrix Cmin;
  if (!find_charge_conjugation(g, Cmin, cd.alpha))
    throw UnsupportedSignature("no charge conjugation for signature (" + std::to_string(p_plus) + "," +
                               std::to_string(p_minus) + ")");
  cd.C = kron(copies, Cmin);
  return cd;
}

CliffordData build_clifford(std::size_t p_plus, std::size_t p_minus) {
  return build_clifford(p_plus, p_minus, minimal_module_dim(p_plus, p_minus));
}

CliffordCheck verify(const CliffordData& cd) {
  CliffordCheck r;
  const Matrix I = Matrix::identity(cd.q);
  r.clifford_relations = cd.gammas.size() == cd.p();
  for (std::size_t a = 0; a < cd.gammas.size(); ++a)
    for (std::size_t b = 0; b < cd.gammas.size(); ++b)
      if (!(anticommutator(cd.gammas[a], cd.gammas[b]) == (2 * cd.eta(a, b)) * I)) r.clifford_relations = false;
  const auto Cinv = inverse(cd.C);
  r.charge_conjugation = Cinv.has_value();
  if (Cinv)
    for (const auto& g : cd.gammas)
      if (!(cd.C * g * *Cinv == Scalar(cd.alpha) * g.transpose())) r.charge_conjugation = false;
  r.c_transpose = cd.C.transpose() == Scalar(cd.alpha) * cd.C;
  return r;
}

std::string SpinRepPair::label(std::size_t k) const {
  return "sigma" + std::to_string(labels[k].first + 1) + std::to_string(labels[k].second + 1);
}

SpinRepPair spin_generators(const CliffordData& cd) {
  SpinRepPair s;
  const std::size_t p = cd.p();
  for (std::size_t a = 0; a < p; ++a)
    for (std::size_t b = a + 1; b < p; ++b) {
      s.labels.emplace_back(a, b);
      Matrix sig = Scalar(1, 4) * commutator(cd.gammas[a], cd.gammas[b]);
      Matrix vec(p, p);
      for (std::size_t d = 0; d < p; ++d) {
        vec(a, d) += cd.eta(b, d);
        vec(b, d) -= cd.eta(a, d);
      }
      s.spinor.push_back(-sig.transpose());
      s.sigma.push_back(std::move(sig));
      s.vector.push_back(std::move(vec));
    }
  return s;
}

bool verify_intertwining(const CliffordData& cd, const SpinRepPair& spin) {
  for (std::size_t k = 0; k < spin.size(); ++k) {
    const auto [a, b] = spin.labels[k];
    for (std::size_t c = 0; c < cd.p(); ++c) {
      const Matrix rhs = cd.eta(b, c) * cd.gammas[a] - cd.eta(a, c) * cd.gammas[b];
      if (!(commutator(spin.sigma[k], cd.gammas[c]) == rhs)) return false;
    }
  }
  return true;
}

Matrix chirality_operator(const CliffordData& cd) {
  Matrix g = Matrix::identity(cd.q);
  for (const auto& m : cd.gammas) g = g * m;
  return g;
}

int chirality_square(const CliffordData& cd) {
  const Matrix g = chirality_operator(cd);
  const Matrix sq = g * g;
  if (sq == Matrix::identity(cd.q)) return 1;
  if (sq == -Matrix::identity(cd.q)) return -1;
  throw ConsistencyError("chirality operator does not square to +-1");
}

SpinorModule full_module(const CliffordData& cd) {
  SpinorModule m;
  m.clifford = cd;
  m.dim = cd.q;
  m.generators = spin_generators(cd).spinor;
  const Matrix Cinv = *inverse(cd.C);
  for (std::size_t c = 0; c < cd.p(); ++c) m.pairing.push_back(cd.gamma_upper(c) * Cinv);
  m.description = "full(" + std::to_string(cd.q) + ")";
  return m;
}

SpinorModule chiral_module(const CliffordData& cd, Chirality chirality) {
  if (cd.p() == 0 || chirality_square(cd) != 1)
    throw UnsupportedSignature("signature (" + std::to_string(cd.p_plus) + "," + std::to_string(cd.p_minus) +
                               ") has no real chiral decomposition");
  const SpinorModule full = full_module(cd);
  const Scalar lambda = chirality == Chirality::Plus ? 1 : -1;
  const Matrix shifted = chirality_operator(cd).transpose() - lambda * Matrix::identity(cd.q);
  const exact::Subspace eig = exact::kernel_basis(shifted);
  const Matrix P = eig.basis();
  const exact::LinearSolver solver(cd.q, eig.basis_vectors());

  SpinorModule m;
  m.clifford = cd;
  m.dim = eig.dim();
  for (const auto& gen : full.generators) {
    const Matrix image = gen * P;
    Matrix R(m.dim, m.dim);
    for (std::size_t j = 0; j < m.dim; ++j) {
      const auto coeff = solver.solve(image.column(j));
      if (!coeff) throw ConsistencyError("chiral subspace is not spin invariant");
      for (std::size_t i = 0; i < m.dim; ++i) R(i, j) = (*coeff)[i];
    }
    m.generators.push_back(std::move(R));
  }
  for (const auto& pc : full.pairing) m.pairing.push_back(P.transpose() * pc * P);
  m.description = chirality == Chirality::Plus ? "S+" : "S-";
  return m;
}

SpinorModule module_sum(const std::vector<SpinorModule>& parts) {
  if (parts.empty()) throw DimensionError("module_sum of nothing");
  SpinorModule m;
  m.clifford = parts.front().clifford;
  m.generators.assign(parts.front().generators.size(), Matrix());
  m.pairing.assign(parts.front().pairing.size(), Matrix());
  for (std::size_t k = 0; k < parts.size(); ++k) {
    const auto& part = parts[k];
    if (part.generators.size() != m.generators.size() || part.pairing.size() != m.pairing.size() ||
        part.clifford.p_plus != m.clifford.p_plus || part.clifford.p_minus != m.clifford.p_minus)
      throw DimensionError("module_sum: summands built from different Clifford data");
    m.dim += part.dim;
    for (std::size_t g = 0; g < m.generators.size(); ++g) m.generators[g] = direct_sum(m.generators[g], part.generators[g]);
    for (std::size_t c = 0; c < m.pairing.size(); ++c) m.pairing[c] = direct_sum(m.pairing[c], part.pairing[c]);
    m.description += (k ? " + " : "") + part.description;
  }
  return m;
}

superlin::GradedTensor t0_tensor(const SpinorModule& module, const superlin::SuperVectorSpace& W) {
  const std::size_t p = module.clifford.p();
  if (W.even_dim() != p || W.odd_dim() != module.dim || !W.is_canonical())
    throw DimensionError("t0_tensor: W must be R^{" + std::to_string(p) + "|" + std::to_string(module.dim) + "}");
  superlin::GradedTensor T = superlin::HomSpace::from_wedge2(W, W).make_tensor();
  for (std::size_t c = 0; c < p; ++c)
    for (std::size_t a = 0; a < module.dim; ++a)
      for (std::size_t b = 0; b < module.dim; ++b) T({p + a, p + b, c}) = module.pairing[c](a, b);
  return T;
}

superlin::GradedTensor t0_tensor(const CliffordData& cd, const superlin::SuperVectorSpace& W) {
  return t0_tensor(full_module(cd), W);
}

}  // namespace sgtc::clifford
