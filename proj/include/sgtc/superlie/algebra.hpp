#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "json.hpp"
#include "sgtc/exact/matrix.hpp"
#include "sgtc/exact/sparse.hpp"
#include "sgtc/superlin/space.hpp"

namespace sgtc::superlie {

using exact::Scalar;
using exact::SparseVector;
using superlin::Parity;
using superlin::SuperVectorSpace;

// c_{AB}^C: [e_A, e_B] = sum_C c_{AB}^C e_C
struct StructureConstant {
  std::size_t a, b, c;
  Scalar value;
};

class SuperLieAlgebra {
 public:
  SuperLieAlgebra() = default;
  explicit SuperLieAlgebra(SuperVectorSpace carrier);
  SuperLieAlgebra(SuperVectorSpace carrier, const std::vector<StructureConstant>& constants);

  const SuperVectorSpace& carrier() const { return carrier_; }
  std::size_t dim() const { return carrier_.dim(); }
  Parity parity(std::size_t a) const { return carrier_.parity(a); }

  const SparseVector& bracket(std::size_t a, std::size_t b) const { return table_[a * dim() + b]; }
  void set_bracket(std::size_t a, std::size_t b, SparseVector value);
  SparseVector bracket(const SparseVector& x, const SparseVector& y) const;
  // Matrix of ad(e_a) in the carrier basis.
  exact::Matrix ad(std::size_t a) const;

  // Nonzero constants ordered by (a, b, c).
  std::vector<StructureConstant> constants() const;

 private:
  SuperVectorSpace carrier_;
  std::vector<SparseVector> table_;
};

struct Violation {
  std::string kind;  // "parity", "antisymmetry", "jacobi", ...
  std::vector<std::size_t> indices;
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  void merge(const ValidationReport& other, const std::string& prefix = "");
  std::string summary() const;
};

// Parity of each constant, super antisymmetry on all pairs and super Jacobi on
// all basis triples (on a < b < c style sorted triples once antisymmetry holds).
ValidationReport validate(const SuperLieAlgebra& g);

// [[a, b, c, "p/q"], ...]
nlohmann::json constants_to_json(const SuperLieAlgebra& g);
// Throws SchemaError (with a JSON pointer relative to `pointer`) on malformed input.
SuperLieAlgebra constants_from_json(const SuperVectorSpace& carrier, const nlohmann::json& j,
                                    const std::string& pointer = "");

}  // namespace sgtc::superlie
