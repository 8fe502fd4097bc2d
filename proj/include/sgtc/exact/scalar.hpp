#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace sgtc::exact {

// Arbitrary-precision rational, always kept in canonical form (gcd = 1, den > 0).
using Scalar = mpq_class;

using Vector = std::vector<Scalar>;

// Accepts "7", "-3/4", " 2/6 " (canonicalized). Throws std::invalid_argument.
Scalar parse_scalar(std::string_view text);

std::string to_string(const Scalar& value);

inline bool is_zero(const Scalar& value) { return sgn(value) == 0; }

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);
bool is_zero(const Vector& v);

}  // namespace sgtc::exact
