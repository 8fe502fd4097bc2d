#include <algorithm>

#include "sgtc/error.hpp"
#include "sgtc/models/models.hpp"

namespace sgtc::models {

using clifford::Chirality;
using clifford::SpinorModule;
using exact::Scalar;
using exact::SparseVector;
using exact::Subspace;

const std::vector<TheoryRow>& catalog() {
  static const std::vector<TheoryRow> rows = {
      {1, 1, 0, 1, "1"},     {2, 1, 1, 1, "(1,0)"}, {2, 1, 1, 2, "(1,1)"}, {2, 1, 1, 2, "(2,0)"},
      {2, 1, 1, 3, "(2,1)"}, {2, 2, 0, 4, "(2,2)"}, {3, 2, 1, 2, "1"},     {4, 3, 1, 4, "1"},
      {4, 4, 0, 8, "2"},     {6, 5, 1, 8, "1"},
  };
  return rows;
}

std::string row_name(const TheoryRow& row) {
  std::string digits;
  for (char c : row.N)
    if (c >= '0' && c <= '9') digits += c;
  return "d" + std::to_string(row.p) + "n" + digits;
}

bool is_extended(const TheoryRow& row) { return row.N != "1"; }

std::string to_string(SChoice s) {
  switch (s) {
    case SChoice::Full: return "full";
    case SChoice::ZType: return "z_type";
    case SChoice::Traceless: return "traceless";
    case SChoice::Zero: return "zero";
    case SChoice::Custom: return "custom";
  }
  return "custom";
}

std::optional<SChoice> parse_s_choice(const std::string& tag) {
  for (SChoice s : {SChoice::Full, SChoice::ZType, SChoice::Traceless, SChoice::Zero})
    if (to_string(s) == tag) return s;
  return std::nullopt;
}

Subspace GStructureModel::spin_subspace() const {
  std::vector<SparseVector> gens;
  for (std::size_t k = 0; k < spin_dim; ++k) gens.push_back({{k, Scalar(1)}});
  return Subspace::span(g.dim(), std::move(gens));
}

SpinorModule row_module(const TheoryRow& row) {
  if (row.p == 2 && row.p_plus == 1) {
    // N = (a,b)
    const auto comma = row.N.find(',');
    if (row.N.size() < 5 || comma == std::string::npos) throw ValidationError("2d rows need N = (a,b)");
    const std::size_t a = std::stoul(row.N.substr(1, comma - 1));
    const std::size_t b = std::stoul(row.N.substr(comma + 1));
    const auto cd = clifford::build_clifford(1, 1);
    std::vector<SpinorModule> parts;
    for (std::size_t k = 0; k < a; ++k) parts.push_back(clifford::chiral_module(cd, Chirality::Plus));
    for (std::size_t k = 0; k < b; ++k) parts.push_back(clifford::chiral_module(cd, Chirality::Minus));
    SpinorModule m = clifford::module_sum(parts);
    if (m.dim != row.q) throw ValidationError("chiral copies do not add up to q");
    return m;
  }
  if (row.p == 6) {
    SpinorModule m = clifford::chiral_module(clifford::build_clifford(row.p_plus, row.p_minus), Chirality::Plus);
    if (m.dim != row.q) throw ValidationError("chiral half does not have dimension q");
    return m;
  }
  return clifford::full_module(clifford::build_clifford(row.p_plus, row.p_minus, row.q));
}

InternalSymmetry k_preset(const SpinorModule& module) {
  const std::size_t q = module.dim;
  std::size_t eq = 0;
  std::vector<std::vector<std::pair<std::size_t, Scalar>>> rows;
  auto var = [q](std::size_t i, std::size_t j) { return i * q + j; };
  // k G - G k = 0
  for (const auto& G : module.generators)
    for (std::size_t a = 0; a < q; ++a)
      for (std::size_t b = 0; b < q; ++b) {
        auto& r = rows.emplace_back();
        for (std::size_t j = 0; j < q; ++j) {
          if (sgn(G(j, b)) != 0) r.push_back({var(a, j), G(j, b)});
          if (sgn(G(a, j)) != 0) r.push_back({var(j, b), -G(a, j)});
        }
      }
  // k^T P + P k = 0
  for (const auto& P : module.pairing)
    for (std::size_t a = 0; a < q; ++a)
      for (std::size_t b = 0; b < q; ++b) {
        auto& r = rows.emplace_back();
        for (std::size_t j = 0; j < q; ++j) {
          if (sgn(P(j, b)) != 0) r.push_back({var(j, a), P(j, b)});
          if (sgn(P(a, j)) != 0) r.push_back({var(j, b), P(a, j)});
        }
      }
  exact::SparseBuilder builder(rows.size(), q * q);
  for (const auto& r : rows) {
    for (const auto& [c, v] : r) builder.add(eq, c, v);
    ++eq;
  }
  const Subspace ker = exact::kernel_basis(builder.build());
  InternalSymmetry K;
  for (const auto& v : ker.basis_vectors()) {
    Matrix k(q, q);
    for (const auto& e : v) k(e.index / q, e.index % q) = e.value;
    K.action.push_back(std::move(k));
    K.labels.push_back("K" + std::to_string(K.action.size()));
  }
  return K;
}

GStructureModel build_model(const std::string& name, const SpinorModule& module, SChoice s, std::vector<Matrix> S,
                            const std::optional<InternalSymmetry>& K) {
  GStructureModel m;
  m.name = name;
  m.W = SuperVectorSpace::standard(module.clifford.p(), module.dim);
  m.module = module;
  m.s_choice = s;
  m.S = std::move(S);
  m.K = K;
  m.g = superlie::build_structure_algebra(module, m.S, K.value_or(InternalSymmetry{}));
  m.T0 = clifford::t0_tensor(module, m.W);
  m.spin_dim = module.generators.size();
  return m;
}

GStructureModel build_model(const TheoryRow& row, SChoice s, const std::optional<InternalSymmetry>& K,
                            const std::vector<Matrix>& custom_S) {
  if (is_extended(row) && !K) throw ValidationError("row " + row_name(row) + " needs internal symmetry data K");
  const bool is_3d = row == catalog()[6];
  std::vector<Matrix> S;
  switch (s) {
    case SChoice::Full: S = superlie::full_odd_block(row.p, row.q); break;
    case SChoice::Zero: break;
    case SChoice::ZType:
    case SChoice::Traceless:
      if (!is_3d) throw ValidationError("S choice " + to_string(s) + " is only defined for the 3d row");
      S = s == SChoice::ZType ? s_variants_3d().z_type : s_variants_3d().traceless;
      break;
    case SChoice::Custom:
      if (custom_S.empty()) throw ValidationError("custom S choice needs basis matrices");
      S = custom_S;
      break;
  }
  std::string name = row_name(row);
  if (s != SChoice::Full) name += "-" + to_string(s);
  return build_model(name, row_module(row), s, std::move(S), K);
}

GStructureModel build_row_model(const TheoryRow& row, SChoice s) {
  if (!is_extended(row)) return build_model(row, s);
  const SpinorModule module = row_module(row);
  GStructureModel m = build_model(row, s, k_preset(module));
  m.K_note = kPresetNote;
  return m;
}

Subspace matrix_span(const std::vector<Matrix>& ms, std::size_t rows, std::size_t cols) {
  std::vector<SparseVector> gens;
  for (const auto& m : ms) {
    if (m.rows() != rows || m.cols() != cols) throw DimensionError("matrix_span: shape mismatch");
    gens.push_back(exact::to_sparse(m.data()));
  }
  return Subspace::span(rows * cols, std::move(gens));
}

SVariants s_variants_3d() {
  const SpinorModule module = clifford::full_module(clifford::build_clifford(2, 1, 2));
  constexpr std::size_t p = 3, q = 2;
  // symmetric spinor pairs (0,0), (0,1), (1,1) and T(c, P) = T0(s_P0, s_P1)^c
  const std::size_t pair[p][2] = {{0, 0}, {0, 1}, {1, 1}};
  Matrix T(p, p);
  for (std::size_t P = 0; P < p; ++P)
    for (std::size_t c = 0; c < p; ++c) T(c, P) = module.pairing[c](pair[P][0], pair[P][1]);
  const Matrix Tinv = exact::inverse(T).value();
  auto pair_index = [&](std::size_t a, std::size_t b) {
    if (a > b) std::swap(a, b);
    for (std::size_t P = 0; P < p; ++P)
      if (pair[P][0] == a && pair[P][1] == b) return P;
    return p;
  };
  // N in Hom(S^2 R^2, R^2) as a q x 3 matrix over the pair basis; M = N T^{-1}.
  auto to_vector = [&](const Matrix& N) { return N * Tinv; };

  SVariants v;
  v.full = superlie::full_odd_block(p, q);
  for (std::size_t d = 0; d < q; ++d) {
    // M(v, w) = z(v) w + z(w) v with z = e^d
    Matrix N(q, p);
    for (std::size_t P = 0; P < p; ++P) {
      const std::size_t a = pair[P][0], b = pair[P][1];
      if (a == d) N(b, P) += 1;
      if (b == d) N(a, P) += 1;
    }
    v.z_type.push_back(to_vector(N));
  }
  // Tr M_v = sum_b M(v, e_b)^b = 0 for v = e_0, e_1
  exact::SparseBuilder tr(q, q * p);
  for (std::size_t a = 0; a < q; ++a)
    for (std::size_t b = 0; b < q; ++b) tr.add(a, b * p + pair_index(a, b), Scalar(1));
  const exact::Subspace ker = exact::kernel_basis(tr.build());
  for (const auto& k : ker.basis_vectors()) {
    Matrix N(q, p);
    for (const auto& e : k) N(e.index / p, e.index % p) = e.value;
    v.traceless.push_back(to_vector(N));
  }
  return v;
}

std::vector<std::string> builtin_names() {
  std::vector<std::string> names = {"d3n1", "d3n1-z", "d3n1-traceless", "d3n1-zero", "on", "un"};
  for (const auto& row : catalog()) {
    const std::string n = row_name(row);
    if (std::find(names.begin(), names.end(), n) == names.end()) names.push_back(n);
  }
  names.push_back("sk1-full");
  names.push_back("sk1-complex");
  return names;
}

std::optional<GStructureModel> builtin_model(const std::string& name, std::size_t n) {
  const TheoryRow& d3 = catalog()[6];
  if (name == "d3n1-z") return build_model(d3, SChoice::ZType);
  if (name == "d3n1-traceless") return build_model(d3, SChoice::Traceless);
  if (name == "d3n1-zero") return build_model(d3, SChoice::Zero);
  if (name == "on") return classical_models(n).orthogonal;
  if (name == "un") return classical_models(n).unitary;
  if (name == "sk1-full") return superkahler_model_n1(SuperKahlerS::Full);
  if (name == "sk1-complex") return superkahler_model_n1(SuperKahlerS::ComplexLinear);
  for (const auto& row : catalog())
    if (row_name(row) == name) return build_row_model(row);
  return std::nullopt;
}

}  // namespace sgtc::models
