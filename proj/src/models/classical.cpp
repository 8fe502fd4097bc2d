#include "sgtc/error.hpp"
#include "sgtc/models/models.hpp"
#include "sgtc/superlin/hom.hpp"

namespace sgtc::models {

using exact::Scalar;
using exact::SparseVector;
using exact::Subspace;

namespace {

GradedTensor zero_torsion(const SuperVectorSpace& W) { return superlin::HomSpace::from_wedge2(W, W).make_tensor(); }

GStructureModel classical(const std::string& name, const SuperVectorSpace& W, std::vector<Matrix> basis,
                          std::vector<std::string> labels) {
  GStructureModel m;
  m.name = name;
  m.W = W;
  m.g = EmbeddedAlgebra::from_matrices(W, std::move(basis), std::move(labels));
  m.T0 = zero_torsion(W);
  m.spin_dim = m.g.dim();
  return m;
}

// Kernel of X -> (XA - AX, X + X^T) on gl(m), as matrices.
std::vector<Matrix> antisymmetric_commutant(std::size_t m, const std::vector<Matrix>& commute_with) {
  exact::SparseBuilder b(m * m * (commute_with.size() + 1), m * m);
  std::size_t row = 0;
  for (const auto& A : commute_with)
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j, ++row)
        for (std::size_t k = 0; k < m; ++k) {
          if (sgn(A(k, j)) != 0) b.add(row, i * m + k, A(k, j));
          if (sgn(A(i, k)) != 0) b.add(row, k * m + j, -A(i, k));
        }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j, ++row) {
      b.add(row, i * m + j, Scalar(1));
      b.add(row, j * m + i, Scalar(1));
    }
  std::vector<Matrix> out;
  const exact::Subspace ker = exact::kernel_basis(b.build());
  for (const auto& v : ker.basis_vectors()) {
    Matrix X(m, m);
    for (const auto& e : v) X(e.index / m, e.index % m) = e.value;
    out.push_back(std::move(X));
  }
  return out;
}

Matrix rotation() { return Matrix{{0, -1}, {1, 0}}; }

}  // namespace

ClassicalModels classical_models(std::size_t n) {
  if (n == 0) throw DimensionError("classical_models: n must be >= 1");
  std::vector<Matrix> o;
  std::vector<std::string> ol;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      Matrix X(n, n);
      X(a, b) = -1;
      X(b, a) = 1;
      o.push_back(std::move(X));
      ol.push_back("L" + std::to_string(a + 1) + "_" + std::to_string(b + 1));
    }

  Matrix J(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    J(i, n + i) = -1;
    J(n + i, i) = 1;
  }
  std::vector<Matrix> u = antisymmetric_commutant(2 * n, {J});
  std::vector<std::string> ul;
  for (std::size_t k = 0; k < u.size(); ++k) ul.push_back("U" + std::to_string(k + 1));

  return {classical("O(" + std::to_string(n) + ")", SuperVectorSpace::even(n), std::move(o), std::move(ol)),
          classical("U(" + std::to_string(n) + ")", SuperVectorSpace::even(2 * n), std::move(u), std::move(ul)), J};
}

GStructureModel superkahler_model_n1(SuperKahlerS s) {
  constexpr std::size_t p = 2, q = 4, n = p + q;
  const Matrix J = rotation();
  const Matrix I2 = Matrix::identity(2);
  const Matrix Z2(2, 2);
  const Matrix JS = exact::direct_sum(J, J);

  auto even = [&](const Matrix& A, const Matrix& B) { return exact::direct_sum(A, B); };
  std::vector<Matrix> basis = {
      even(J, exact::direct_sum(Scalar(-1, 2) * J, Scalar(1, 2) * J)),
      even(Z2, exact::direct_sum(I2, -I2)),
      even(Z2, JS),
  };
  std::vector<std::string> labels = {"u1", "chiral_D", "chiral_R"};
  const std::size_t n_even = basis.size();

  std::vector<Matrix> S;
  if (s == SuperKahlerS::Full) {
    S = superlie::full_odd_block(p, q);
  } else {
    // M J = JS M
    exact::SparseBuilder b(q * p, q * p);
    for (std::size_t i = 0; i < q; ++i)
      for (std::size_t j = 0; j < p; ++j)
        for (std::size_t k = 0; k < q; ++k) {
          if (k < p && sgn(J(k, j)) != 0) b.add(i * p + j, i * p + k, J(k, j));
          if (sgn(JS(i, k)) != 0) b.add(i * p + j, k * p + j, -JS(i, k));
        }
    const exact::Subspace ker = exact::kernel_basis(b.build());
    for (const auto& v : ker.basis_vectors()) {
      Matrix M(q, p);
      for (const auto& e : v) M(e.index / p, e.index % p) = e.value;
      S.push_back(std::move(M));
    }
  }
  const Subspace s_span = matrix_span(S, q, p);
  for (std::size_t k = 0; k < n_even; ++k) {
    const Matrix A = basis[k].block(0, 0, p, p), B = basis[k].block(p, p, q, q);
    for (const auto& M : S)
      if (!s_span.contains(exact::to_sparse((B * M - M * A).data())))
        throw InvarianceError("S is not invariant under " + labels[k], labels[k]);
  }
  for (std::size_t j = 0; j < S.size(); ++j) {
    Matrix m(n, n);
    m.set_block(p, 0, S[j]);
    basis.push_back(std::move(m));
    labels.push_back("S" + std::to_string(j + 1));
  }

  GStructureModel m;
  m.name = s == SuperKahlerS::Full ? "sk1-full" : "sk1-complex";
  m.W = SuperVectorSpace::standard(p, q);
  m.s_choice = s == SuperKahlerS::Full ? SChoice::Full : SChoice::Custom;
  m.S = S;
  m.g = EmbeddedAlgebra::from_matrices(m.W, std::move(basis), std::move(labels));
  // T0(u, v) = conj(u0) v1 + conj(v0) u1 in C = R e1 + R e2; u0 on s1, s2 and u1 on s3, s4.
  m.T0 = zero_torsion(m.W);
  auto set = [&](std::size_t a, std::size_t b, std::size_t c, long v) {
    m.T0({a, b, c}) = v;
    m.T0({b, a, c}) = v;
  };
  set(2, 4, 0, 1);
  set(3, 5, 0, 1);
  set(2, 5, 1, 1);
  set(3, 4, 1, -1);
  m.spin_dim = n_even;
  return m;
}

}  // namespace sgtc::models
