#include "sgtc/superlin/space.hpp"

#include <algorithm>
#include <set>

#include "sgtc/error.hpp"

namespace sgtc::superlin {

SuperVectorSpace::SuperVectorSpace(std::vector<std::string> labels, std::vector<Parity> parities)
    : labels_(std::move(labels)), parities_(std::move(parities)) {
  if (labels_.size() != parities_.size()) throw DimensionError("labels and parities differ in length");
  std::set<std::string> seen;
  for (const auto& l : labels_)
    if (!seen.insert(l).second) throw DimensionError("duplicate basis label '" + l + "'");
}

SuperVectorSpace SuperVectorSpace::standard(std::size_t p, std::size_t q) {
  std::vector<std::string> labels;
  std::vector<Parity> parities;
  for (std::size_t a = 0; a < p; ++a) {
    labels.push_back("e" + std::to_string(a + 1));
    parities.push_back(Parity::Even);
  }
  for (std::size_t a = 0; a < q; ++a) {
    labels.push_back("s" + std::to_string(a + 1));
    parities.push_back(Parity::Odd);
  }
  return SuperVectorSpace(std::move(labels), std::move(parities));
}

SuperVectorSpace SuperVectorSpace::even(std::size_t n, const std::string& prefix) {
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < n; ++a) labels.push_back(prefix + std::to_string(a + 1));
  return SuperVectorSpace(std::move(labels), std::vector<Parity>(n, Parity::Even));
}

std::size_t SuperVectorSpace::even_dim() const {
  return static_cast<std::size_t>(std::count(parities_.begin(), parities_.end(), Parity::Even));
}

bool SuperVectorSpace::is_canonical() const {
  return std::is_partitioned(parities_.begin(), parities_.end(), [](Parity p) { return !is_odd(p); });
}

std::optional<std::size_t> SuperVectorSpace::index_of(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

}  // namespace sgtc::superlin
