#pragma once

#include <cstddef>
#include <vector>

// Sign conventions for graded objects. Every Koszul factor in the engine is
// produced by the helpers below.
//
//   wedge:      u ^ v = -(-1)^{|u||v|} v ^ u        (odd-odd wedge is symmetric)
//   symmetric:  u . v =  (-1)^{|u||v|} v . u
//   Spencer:    (d phi)(v, w) = phi(v) w - (-1)^{|v||w|} phi(w) v
//   action of a homogeneous x on a multilinear F with values in a module M:
//     (x.F)(v_1..v_j) = x.F(v_1..v_j)
//                       - (-1)^{|x||F|} sum_i (-1)^{|x|(|v_1|+..+|v_{i-1}|)} F(v_1.. x v_i ..v_j)
//   bracket in gl(W):  [X, Y] = XY - (-1)^{|X||Y|} YX
namespace sgtc::superlin {

enum class Parity : unsigned char { Even = 0, Odd = 1 };

constexpr Parity operator+(Parity a, Parity b) {
  return static_cast<Parity>(static_cast<unsigned char>(a) ^ static_cast<unsigned char>(b));
}
constexpr Parity& operator+=(Parity& a, Parity b) { return a = a + b; }

constexpr bool is_odd(Parity p) { return p == Parity::Odd; }
constexpr Parity parity_of(bool odd) { return odd ? Parity::Odd : Parity::Even; }

// (-1)^{|a||b|}
constexpr int koszul(Parity a, Parity b) { return is_odd(a) && is_odd(b) ? -1 : 1; }

// Sign picked up when two adjacent factors are exchanged.
constexpr int wedge_swap_sign(Parity a, Parity b) { return -koszul(a, b); }
constexpr int symmetric_swap_sign(Parity a, Parity b) { return koszul(a, b); }

// Sign of (v_{perm[0]}, ..., v_{perm[n-1]}) relative to (v_0, ..., v_{n-1}) in a
// graded-commutative product: one factor -1 per inverted odd-odd pair.
int koszul_sign(const std::vector<std::size_t>& perm, const std::vector<Parity>& parities);

const char* to_string(Parity p);

}  // namespace sgtc::superlin
