#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

#include "sgtc/exact/scalar.hpp"
#include "sgtc/superlin/space.hpp"

namespace sgtc::superlin {

enum class Variance { Lower, Upper };

struct Slot {
  SuperVectorSpace space;
  Variance variance = Variance::Lower;

  friend bool operator==(const Slot&, const Slot&) = default;
};

// Declared symmetry of the leading slots.
//   SuperAntisymmetricPair: T(a,b,..) = -(-1)^{|a||b|} T(b,a,..)
//   SuperSymmetricPair:     T(a,b,..) =  (-1)^{|a||b|} T(b,a,..)
//   PairExchangeSymmetric:  T(a,b,c,d,..) = (-1)^{|ab||cd|} T(c,d,a,b,..)
enum class Symmetry { None, SuperAntisymmetricPair, SuperSymmetricPair, PairExchangeSymmetric };

// Dense exact multi-index array; the last index varies fastest.
class GradedTensor {
 public:
  using Index = std::vector<std::size_t>;

  GradedTensor() = default;
  explicit GradedTensor(std::vector<Slot> slots, Symmetry symmetry = Symmetry::None);

  const std::vector<Slot>& slots() const { return slots_; }
  std::size_t order() const { return slots_.size(); }
  Symmetry symmetry() const { return symmetry_; }
  std::size_t size() const { return data_.size(); }

  std::size_t offset(const Index& index) const;
  Index unravel(std::size_t offset) const;
  exact::Scalar& operator()(const Index& index) { return data_[offset(index)]; }
  const exact::Scalar& operator()(const Index& index) const { return data_[offset(index)]; }
  const exact::Vector& data() const { return data_; }
  exact::Vector& data() { return data_; }

  Parity component_parity(const Index& index) const;
  // Parity shared by all nonzero components; nullopt for the zero tensor.
  // Throws ValidationError when components of both parities are present.
  std::optional<Parity> parity() const;
  bool is_zero() const;

  bool respects_symmetry() const;
  // Average over the declared symmetry group; idempotent.
  GradedTensor projected(Symmetry symmetry) const;

  GradedTensor& operator+=(const GradedTensor& other);
  GradedTensor& operator-=(const GradedTensor& other);
  GradedTensor& operator*=(const exact::Scalar& s);

  friend bool operator==(const GradedTensor& a, const GradedTensor& b) {
    return a.slots_ == b.slots_ && a.data_ == b.data_;
  }

 private:
  std::vector<Slot> slots_;
  Symmetry symmetry_ = Symmetry::None;
  std::vector<std::size_t> strides_;
  exact::Vector data_;
};

GradedTensor operator+(GradedTensor a, const GradedTensor& b);
GradedTensor operator-(GradedTensor a, const GradedTensor& b);
GradedTensor operator*(const exact::Scalar& s, GradedTensor a);

}  // namespace sgtc::superlin
