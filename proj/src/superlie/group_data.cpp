#include "sgtc/superlie/group_data.hpp"

#include "sgtc/error.hpp"

namespace sgtc::superlie {

using exact::Vector;
using superlin::koszul;

namespace {

std::string idx_label(const char* prefix, std::size_t i, std::size_t j) {
  return std::string(prefix) + std::to_string(i + 1) + "_" + std::to_string(j + 1);
}

Vector apply_sum(const std::vector<Matrix>& action, const Vector& coeffs, const Vector& v) {
  Vector out(v.size());
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (sgn(coeffs[k]) == 0) continue;
    const Vector av = action[k] * v;
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += coeffs[k] * av[i];
  }
  return out;
}

}  // namespace

ValidationReport validate_group_data(const GroupData& gd) {
  ValidationReport r;
  r.merge(validate(gd.even), "even");
  const std::size_t n = gd.even.dim(), m = gd.v_dim;
  for (std::size_t k = 0; k < n; ++k)
    if (gd.even.parity(k) != Parity::Even) r.violations.push_back({"even_part_parity", {k}, ""});
  if (gd.action.size() != n || gd.d.size() != m * m) {
    r.violations.push_back({"shape", {}, "action or d has the wrong size"});
    return r;
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      Matrix lhs = commutator(gd.action[a], gd.action[b]);
      for (const auto& e : gd.even.bracket(a, b)) lhs -= e.value * gd.action[e.index];
      if (!lhs.is_zero()) r.violations.push_back({"representation", {a, b}, ""});
    }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (gd.d_of(i, j) != gd.d_of(j, i)) r.violations.push_back({"symmetry", {i, j}, ""});
  // x.d(v_i, v_j) = d(x v_i, v_j) + d(v_i, x v_j) on basis vectors
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) {
        const exact::SparseVector ad = gd.even.bracket(exact::SparseVector{{x, Scalar(1)}}, exact::to_sparse(gd.d_of(i, j)));
        Vector diff = exact::to_dense(ad, n);
        for (std::size_t k = 0; k < m; ++k) {
          const Scalar& xi = gd.action[x](k, i);
          const Scalar& xj = gd.action[x](k, j);
          for (std::size_t c = 0; c < n; ++c) {
            if (sgn(xi) != 0) diff[c] -= xi * gd.d_of(k, j)[c];
            if (sgn(xj) != 0) diff[c] -= xj * gd.d_of(i, k)[c];
          }
        }
        if (!exact::is_zero(diff)) r.violations.push_back({"equivariance", {x, i, j}, ""});
      }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k) {
        const Vector e_i = exact::unit_vector(m, i), e_j = exact::unit_vector(m, j), e_k = exact::unit_vector(m, k);
        Vector s = apply_sum(gd.action, gd.d_of(i, j), e_k);
        const Vector t = apply_sum(gd.action, gd.d_of(j, k), e_i);
        const Vector u = apply_sum(gd.action, gd.d_of(k, i), e_j);
        for (std::size_t c = 0; c < m; ++c) s[c] += t[c] + u[c];
        if (!exact::is_zero(s)) r.violations.push_back({"cyclic", {i, j, k}, ""});
      }
  return r;
}

GroupData group_data_from(const EmbeddedAlgebra& g, const std::string& name) {
  std::vector<std::size_t> even, odd;
  for (std::size_t k = 0; k < g.dim(); ++k) (g.parity(k) == Parity::Even ? even : odd).push_back(k);
  std::vector<long> position(g.dim(), -1);
  for (std::size_t i = 0; i < even.size(); ++i) position[even[i]] = static_cast<long>(i);
  for (std::size_t i = 0; i < odd.size(); ++i) position[odd[i]] = static_cast<long>(i);

  GroupData gd;
  gd.name = name;
  gd.v_dim = odd.size();
  std::vector<std::string> labels;
  for (std::size_t k : even) labels.push_back(g.label(k));
  gd.even = SuperLieAlgebra(SuperVectorSpace(labels, std::vector<Parity>(even.size(), Parity::Even)));
  for (std::size_t a = 0; a < even.size(); ++a)
    for (std::size_t b = 0; b < even.size(); ++b) {
      exact::SparseVector v;
      for (const auto& e : g.algebra().bracket(even[a], even[b])) {
        if (g.parity(e.index) != Parity::Even) throw ConsistencyError("even bracket has an odd component");
        v.push_back({static_cast<std::size_t>(position[e.index]), e.value});
      }
      gd.even.set_bracket(a, b, std::move(v));
    }
  for (std::size_t a = 0; a < even.size(); ++a) {
    Matrix act(gd.v_dim, gd.v_dim);
    for (std::size_t j = 0; j < odd.size(); ++j)
      for (const auto& e : g.algebra().bracket(even[a], odd[j])) act(static_cast<std::size_t>(position[e.index]), j) = e.value;
    gd.action.push_back(std::move(act));
  }
  gd.d.assign(gd.v_dim * gd.v_dim, Vector(even.size()));
  for (std::size_t i = 0; i < odd.size(); ++i)
    for (std::size_t j = 0; j < odd.size(); ++j)
      for (const auto& e : g.algebra().bracket(odd[i], odd[j]))
        gd.d[i * gd.v_dim + j][static_cast<std::size_t>(position[e.index])] = e.value;
  return gd;
}

EmbeddedAlgebra gl_superalgebra(std::size_t p, std::size_t q) {
  const auto W = SuperVectorSpace::standard(p, q);
  const std::size_t n = p + q;
  std::vector<Matrix> even, odd;
  std::vector<std::string> le, lo;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const bool is_even = W.parity(i) == W.parity(j);
      (is_even ? even : odd).push_back(Matrix::elementary(n, n, i, j));
      (is_even ? le : lo).push_back(idx_label("E", i, j));
    }
  even.insert(even.end(), odd.begin(), odd.end());
  le.insert(le.end(), lo.begin(), lo.end());
  return EmbeddedAlgebra::from_matrices(W, std::move(even), std::move(le));
}

EmbeddedAlgebra osp_superalgebra(std::size_t p, std::size_t m) {
  const auto W = SuperVectorSpace::standard(p, 2 * m);
  const std::size_t n = p + 2 * m;
  Matrix B(n, n);
  for (std::size_t i = 0; i < p; ++i) B(i, i) = 1;
  for (std::size_t i = 0; i < m; ++i) {
    B(p + i, p + m + i) = 1;
    B(p + m + i, p + i) = -1;
  }
  std::vector<Matrix> basis;
  std::vector<std::string> labels;
  for (Parity xp : {Parity::Even, Parity::Odd}) {
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if ((W.parity(i) + W.parity(j)) == xp) slots.emplace_back(i, j);
    // Unknown k is the entry X(slots[k]); one equation per (u, v).
    std::vector<exact::SparseVector> eqs;
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = 0; v < n; ++v) {
        Vector row(slots.size());
        const int s = koszul(xp, W.parity(u));
        for (std::size_t k = 0; k < slots.size(); ++k) {
          const auto [i, j] = slots[k];
          // B(X e_u, e_v) = sum_i X(i,u) B(i,v);  B(e_u, X e_v) = sum_j B(u,j) X(j,v)
          if (j == u) row[k] += B(i, v);
          if (j == v) row[k] += s * B(u, i);
        }
        eqs.push_back(exact::to_sparse(row));
      }
    const auto ker = exact::kernel_basis(exact::SparseMatrix::from_columns(slots.size(), eqs).transpose());
    for (const auto& kv : ker.basis_vectors()) {
      Matrix X(n, n);
      for (const auto& e : kv) X(slots[e.index].first, slots[e.index].second) = e.value;
      basis.push_back(std::move(X));
      labels.push_back((xp == Parity::Even ? "b" : "f") + std::to_string(labels.size() + 1));
    }
  }
  return EmbeddedAlgebra::from_matrices(W, std::move(basis), std::move(labels));
}

GroupData gl_group_data(std::size_t p, std::size_t q) {
  return group_data_from(gl_superalgebra(p, q), "GL(" + std::to_string(p) + "|" + std::to_string(q) + ")");
}

GroupData osp_group_data(std::size_t p, std::size_t q) {
  return group_data_from(osp_superalgebra(p, q), "OSp(" + std::to_string(p) + "|" + std::to_string(q) + ")");
}

GroupData super_poincare_group_data(const clifford::SpinorModule& module, const std::string& name) {
  const std::size_t p = module.clifford.p();
  const clifford::SpinRepPair spin = clifford::spin_generators(module.clifford);
  const std::size_t ns = spin.size();
  GroupData gd;
  gd.name = name;
  gd.v_dim = module.dim;
  std::vector<std::string> labels;
  for (std::size_t c = 0; c < p; ++c) labels.push_back("P" + std::to_string(c + 1));
  for (std::size_t k = 0; k < ns; ++k) labels.push_back(spin.label(k));
  gd.even = SuperLieAlgebra(SuperVectorSpace(labels, std::vector<Parity>(p + ns, Parity::Even)));
  // [M_k, P_c] = rho1(M_k) P_c, [M_k, M_l] from the vector representation.
  std::vector<exact::SparseVector> flat;
  for (const auto& m : spin.vector) flat.push_back(exact::to_sparse(m.data()));
  const exact::LinearSolver solver(p * p, flat);
  for (std::size_t k = 0; k < ns; ++k) {
    for (std::size_t c = 0; c < p; ++c) {
      exact::SparseVector v, w;
      for (std::size_t d = 0; d < p; ++d)
        if (sgn(spin.vector[k](d, c)) != 0) v.push_back({d, spin.vector[k](d, c)});
      for (const auto& e : v) w.push_back({e.index, -e.value});
      gd.even.set_bracket(p + k, c, v);
      gd.even.set_bracket(c, p + k, w);
    }
    for (std::size_t l = 0; l < ns; ++l) {
      const auto coeff = solver.solve(exact::to_sparse(commutator(spin.vector[k], spin.vector[l]).data()));
      if (!coeff) throw ConsistencyError("so(p+,p-) not closed");
      exact::SparseVector v;
      for (std::size_t t = 0; t < ns; ++t)
        if (sgn((*coeff)[t]) != 0) v.push_back({p + t, (*coeff)[t]});
      gd.even.set_bracket(p + k, p + l, v);
    }
  }
  for (std::size_t c = 0; c < p; ++c) gd.action.push_back(Matrix(module.dim, module.dim));
  for (std::size_t k = 0; k < ns; ++k) gd.action.push_back(module.generators[k]);
  gd.d.assign(module.dim * module.dim, Vector(p + ns));
  for (std::size_t a = 0; a < module.dim; ++a)
    for (std::size_t b = 0; b < module.dim; ++b)
      for (std::size_t c = 0; c < p; ++c) gd.d[a * module.dim + b][c] = module.pairing[c](a, b);
  return gd;
}

}  // namespace sgtc::superlie
