#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "sgtc/superlin/conventions.hpp"

namespace sgtc::superlin {

// Finite-dimensional super vector space with a labeled homogeneous basis.
class SuperVectorSpace {
 public:
  SuperVectorSpace() = default;
  // Throws DimensionError on size mismatch or duplicate labels.
  SuperVectorSpace(std::vector<std::string> labels, std::vector<Parity> parities);

  // R^{p|q}: even e1..ep followed by odd s1..sq.
  static SuperVectorSpace standard(std::size_t p, std::size_t q);
  static SuperVectorSpace even(std::size_t n, const std::string& prefix = "e");

  std::size_t dim() const { return labels_.size(); }
  std::size_t even_dim() const;
  std::size_t odd_dim() const { return dim() - even_dim(); }
  // Even basis vectors precede odd ones.
  bool is_canonical() const;

  Parity parity(std::size_t i) const { return parities_[i]; }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  const std::vector<Parity>& parities() const { return parities_; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<std::size_t> index_of(const std::string& label) const;

  friend bool operator==(const SuperVectorSpace&, const SuperVectorSpace&) = default;

 private:
  std::vector<std::string> labels_;
  std::vector<Parity> parities_;
};

}  // namespace sgtc::superlin
