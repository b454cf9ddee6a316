#pragma once

#include <cstdint>
#include <vector>

#include "eisen/types.hpp"

namespace eisen {

// Element of SL2(Z). Construction through make() enforces ad - bc = 1.
struct SL2Matrix {
  std::int64_t a = 1, b = 0, c = 0, d = 1;

  static SL2Matrix make(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d);
  static SL2Matrix identity() { return {}; }
  static SL2Matrix S() { return {0, -1, 1, 0}; }
  static SL2Matrix T(std::int64_t n = 1) { return {1, n, 0, 1}; }
  static SL2Matrix minus_identity() { return {-1, 0, 0, -1}; }

  SL2Matrix inverse() const { return {d, -b, -c, a}; }
  SL2Matrix operator-() const { return {-a, -b, -c, -d}; }

  // Mobius action on the upper half-plane.
  cplx act(cplx tau) const;
  // c*tau + d
  cplx automorphy(cplx tau) const { return static_cast<double>(c) * tau + static_cast<double>(d); }

  friend bool operator==(const SL2Matrix&, const SL2Matrix&) = default;
};

// Throws std::overflow_error if an entry leaves the int64 range.
SL2Matrix operator*(const SL2Matrix& x, const SL2Matrix& y);

enum class Generator : std::uint8_t { S, T };

struct Token {
  Generator gen = Generator::S;
  std::int64_t power = 1;  // exponent of T; always 1 for S

  static Token s() { return {Generator::S, 1}; }
  static Token t(std::int64_t n) { return {Generator::T, n}; }
  friend bool operator==(const Token&, const Token&) = default;
};

// sign * tokens[0] * tokens[1] * ... ; S^2 = -I is folded into sign.
struct GeneratorWord {
  std::vector<Token> tokens;
  int sign = 1;

  SL2Matrix product() const;
  GeneratorWord concat(const GeneratorWord& other) const;
};

struct CosetLabel {
  std::int64_t c = 0;
  std::int64_t d = 1;
  bool is_identity() const { return c == 0; }
  friend bool operator==(const CosetLabel&, const CosetLabel&) = default;
};

// Canonical determinant-one matrix with bottom row (c, d): |a| minimal, ties
// resolved toward a >= 0.
SL2Matrix lift_bottom_row(std::int64_t c, std::int64_t d);

// Euclidean decomposition on the bottom row; length O(log(|a|+|b|+|c|+|d|)).
GeneratorWord decompose_word(const SL2Matrix& g);

// Identity coset, then (c, d) for 1 <= c <= c_max, |d| <= d_window,
// gcd(c, d) = 1, ordered by c then d.
std::vector<CosetLabel> enumerate_cosets(std::int64_t c_max, std::int64_t d_window);

template <class F>
void for_each_coset(std::int64_t c_max, std::int64_t d_window, F&& visit);

std::int64_t gcd64(std::int64_t x, std::int64_t y);

// x^{-1} mod m for gcd(x, m) = 1, m >= 1; result in [0, m).
std::int64_t inverse_mod(std::int64_t x, std::int64_t m);

template <class F>
void for_each_coset(std::int64_t c_max, std::int64_t d_window, F&& visit) {
  visit(CosetLabel{0, 1});
  for (std::int64_t c = 1; c <= c_max; ++c) {
    for (std::int64_t d = -d_window; d <= d_window; ++d) {
      if (gcd64(c, d) == 1) visit(CosetLabel{c, d});
    }
  }
}

}  // namespace eisen
