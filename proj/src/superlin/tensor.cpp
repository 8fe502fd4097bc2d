#include "sgtc/superlin/tensor.hpp"

#include "sgtc/error.hpp"

namespace sgtc::superlin {

using exact::Scalar;

GradedTensor::GradedTensor(std::vector<Slot> slots, Symmetry symmetry)
    : slots_(std::move(slots)), symmetry_(symmetry), strides_(slots_.size()) {
  std::size_t total = 1;
  for (std::size_t k = slots_.size(); k-- > 0;) {
    strides_[k] = total;
    total *= slots_[k].space.dim();
  }
  data_.assign(total, Scalar(0));
  const bool pair = symmetry_ == Symmetry::SuperAntisymmetricPair || symmetry_ == Symmetry::SuperSymmetricPair;
  if (pair && (slots_.size() < 2 || !(slots_[0] == slots_[1])))
    throw DimensionError("pair symmetry needs two matching leading slots");
  if (symmetry_ == Symmetry::PairExchangeSymmetric &&
      (slots_.size() < 4 || !(slots_[0] == slots_[2]) || !(slots_[1] == slots_[3])))
    throw DimensionError("pair exchange needs slots (a,b,a,b,...)");
}

std::size_t GradedTensor::offset(const Index& index) const {
  if (index.size() != slots_.size()) throw DimensionError("tensor index has wrong order");
  std::size_t off = 0;
  for (std::size_t k = 0; k < index.size(); ++k) {
    if (index[k] >= slots_[k].space.dim()) throw DimensionError("tensor index out of range");
    off += index[k] * strides_[k];
  }
  return off;
}

GradedTensor::Index GradedTensor::unravel(std::size_t off) const {
  Index index(slots_.size());
  for (std::size_t k = 0; k < slots_.size(); ++k) {
    index[k] = off / strides_[k];
    off %= strides_[k];
  }
  return index;
}

Parity GradedTensor::component_parity(const Index& index) const {
  Parity p = Parity::Even;
  for (std::size_t k = 0; k < index.size(); ++k) p += slots_[k].space.parity(index[k]);
  return p;
}

std::optional<Parity> GradedTensor::parity() const {
  std::optional<Parity> p;
  for (std::size_t off = 0; off < data_.size(); ++off) {
    if (sgn(data_[off]) == 0) continue;
    const Parity c = component_parity(unravel(off));
    if (p && *p != c) throw ValidationError("tensor is not homogeneous");
    p = c;
  }
  return p;
}

bool GradedTensor::is_zero() const { return exact::is_zero(data_); }

GradedTensor GradedTensor::projected(Symmetry symmetry) const {
  GradedTensor out(slots_, symmetry);
  if (symmetry == Symmetry::None) {
    out.data_ = data_;
    return out;
  }
  for (std::size_t off = 0; off < data_.size(); ++off) {
    const Index idx = unravel(off);
    Index swapped = idx;
    int sign = 1;
    if (symmetry == Symmetry::PairExchangeSymmetric) {
      std::swap(swapped[0], swapped[2]);
      std::swap(swapped[1], swapped[3]);
      const Parity first = slots_[0].space.parity(idx[0]) + slots_[1].space.parity(idx[1]);
      const Parity second = slots_[2].space.parity(idx[2]) + slots_[3].space.parity(idx[3]);
      sign = koszul(first, second);
    } else {
      std::swap(swapped[0], swapped[1]);
      const Parity a = slots_[0].space.parity(idx[0]), b = slots_[1].space.parity(idx[1]);
      sign = symmetry == Symmetry::SuperAntisymmetricPair ? wedge_swap_sign(a, b) : symmetric_swap_sign(a, b);
    }
    out.data_[off] = (data_[off] + sign * data_[offset(swapped)]) / 2;
  }
  return out;
}

bool GradedTensor::respects_symmetry() const { return projected(symmetry_).data_ == data_; }

GradedTensor& GradedTensor::operator+=(const GradedTensor& other) {
  if (!(slots_ == other.slots_)) throw DimensionError("tensor slot mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
  return *this;
}

GradedTensor& GradedTensor::operator-=(const GradedTensor& other) {
  if (!(slots_ == other.slots_)) throw DimensionError("tensor slot mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= other.data_[k];
  return *this;
}

GradedTensor& GradedTensor::operator*=(const Scalar& s) {
  for (auto& x : data_) x *= s;
  return *this;
}

GradedTensor operator+(GradedTensor a, const GradedTensor& b) { return a += b; }
GradedTensor operator-(GradedTensor a, const GradedTensor& b) { return a -= b; }
GradedTensor operator*(const Scalar& s, GradedTensor a) { return a *= s; }

}  // namespace sgtc::superlin
