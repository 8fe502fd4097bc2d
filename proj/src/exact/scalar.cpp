#include "sgtc/exact/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace sgtc::exact {

Scalar parse_scalar(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }),
          s.end());
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  Scalar value;
  if (value.set_str(s, 10) != 0) throw std::invalid_argument("malformed rational literal '" + s + "'");
  if (sgn(value.get_den()) == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
  value.canonicalize();
  return value;
}

std::string to_string(const Scalar& value) { return value.get_str(10); }

Vector zero_vector(std::size_t n) { return Vector(n); }

Vector unit_vector(std::size_t n, std::size_t i) {
  Vector v(n);
  v.at(i) = 1;
  return v;
}

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& x) { return sgn(x) == 0; });
}

}  // namespace sgtc::exact
