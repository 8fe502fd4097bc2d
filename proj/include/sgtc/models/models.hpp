#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "sgtc/clifford/clifford.hpp"
#include "sgtc/exact/subspace.hpp"
#include "sgtc/superlie/embedded.hpp"
#include "sgtc/superlie/structure.hpp"
#include "sgtc/superlin/tensor.hpp"

namespace sgtc::models {

using exact::Matrix;
using superlie::EmbeddedAlgebra;
using superlie::InternalSymmetry;
using superlin::GradedTensor;
using superlin::SuperVectorSpace;

struct TheoryRow {
  std::size_t p, p_plus, p_minus, q;
  std::string N;
  friend bool operator==(const TheoryRow&, const TheoryRow&) = default;
};

// The ten rows (p, p+, p-, q, N) in table order.
const std::vector<TheoryRow>& catalog();
// Builtin name of a row: "d<p>n<N digits>", e.g. d3n1, d2n21.
std::string row_name(const TheoryRow& row);
bool is_extended(const TheoryRow& row);

enum class SChoice { Full, ZType, Traceless, Zero, Custom };
std::string to_string(SChoice s);
std::optional<SChoice> parse_s_choice(const std::string& tag);

struct GStructureModel {
  std::string name;
  SuperVectorSpace W;
  std::optional<clifford::SpinorModule> module;  // absent for classical models
  SChoice s_choice = SChoice::Zero;
  std::vector<Matrix> S;                          // q x p
  std::optional<InternalSymmetry> K;
  std::string K_note;
  EmbeddedAlgebra g;
  GradedTensor T0;
  std::size_t spin_dim = 0;  // leading basis elements of g forming the spin (or structure) algebra

  const clifford::CliffordData* clifford() const { return module ? &module->clifford : nullptr; }
  // Span of the first spin_dim basis vectors, in g coordinates.
  exact::Subspace spin_subspace() const;
};

// Odd module of a row: 2d rows N = (a, b) take a copies of S+ and b of S-
// from Cl(1,1); (2,2,0,4) takes two copies of the Cl(2,0) module; (6,5,1,8)
// the S+ half of Cl(5,1); every other row the full module of size q.
clifford::SpinorModule row_module(const TheoryRow& row);

// Commutant of spin in gl(q) that preserves T0. Shipped for N > 1 rows as a
// preset, not paper-specified.
InternalSymmetry k_preset(const clifford::SpinorModule& module);
inline constexpr const char* kPresetNote = "preset, not paper-specified";

// Throws ValidationError when an N > 1 row has no K, when ZType / Traceless
// is asked for outside the 3d row, or a custom S is missing; InvarianceError
// for a non-invariant S; UnsupportedSignature from clifford.
GStructureModel build_model(const TheoryRow& row, SChoice s, const std::optional<InternalSymmetry>& K = {},
                            const std::vector<Matrix>& custom_S = {});
GStructureModel build_model(const std::string& name, const clifford::SpinorModule& module, SChoice s,
                            std::vector<Matrix> S, const std::optional<InternalSymmetry>& K = {});

// The rows with the preset K applied when needed.
GStructureModel build_row_model(const TheoryRow& row, SChoice s = SChoice::Full);

// Subspaces of Hom(R^3, R^2) as q x p matrices, with R^3 = S^2 R^2 through T0.
struct SVariants {
  std::vector<Matrix> full, z_type, traceless, zero;
};
SVariants s_variants_3d();
// Row-major flattening of a q x p list, for span computations.
exact::Subspace matrix_span(const std::vector<Matrix>& ms, std::size_t rows, std::size_t cols);

struct ClassicalModels {
  GStructureModel orthogonal;  // o(n) in gl(n)
  GStructureModel unitary;     // u(n) in gl(2n)
  Matrix J;                    // [[0, -I], [I, 0]]
};
ClassicalModels classical_models(std::size_t n);

// W = R^{2|4}: C on the even side, Lambda^0 + Lambda^1 of C on the odd side.
// Even generators: U(1) (weights 1 on C, -1/2 and +1/2 on the forms) and the
// chiral C* pair (D = diag(1, -1), R = diag(J, J) on the forms).
enum class SuperKahlerS { Full, ComplexLinear };
GStructureModel superkahler_model_n1(SuperKahlerS s);

// Model config document; throws SchemaError with a JSON pointer.
//   {"name"?, "signature": [p+, p-], "q", "module"?: "full" | ["+", "-", ..],
//    "S_choice": tag | [q x p rational matrices], "K"?: {"labels"?, "action", "structure_constants"?}}
GStructureModel model_from_json(const nlohmann::json& config);

// A builtin model by CLI name; nullopt when unknown.
std::optional<GStructureModel> builtin_model(const std::string& name, std::size_t n = 3);
std::vector<std::string> builtin_names();

}  // namespace sgtc::models
