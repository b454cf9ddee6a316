#include "eisen/sl2z.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "eisen/errors.hpp"

namespace eisen {

namespace {

std::int64_t checked_mul(std::int64_t x, std::int64_t y) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(x, y, &r)) throw std::overflow_error("SL2 entry overflow");
  return r;
}

std::int64_t checked_add(std::int64_t x, std::int64_t y) {
  std::int64_t r = 0;
  if (__builtin_add_overflow(x, y, &r)) throw std::overflow_error("SL2 entry overflow");
  return r;
}

SL2Matrix token_matrix(const Token& t) {
  return t.gen == Generator::S ? SL2Matrix::S() : SL2Matrix::T(t.power);
}

}  // namespace

SL2Matrix SL2Matrix::make(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
  const __int128 det = static_cast<__int128>(a) * d - static_cast<__int128>(b) * c;
  if (det != 1) throw DomainError("matrix does not have determinant 1");
  return {a, b, c, d};
}

cplx SL2Matrix::act(cplx tau) const {
  return (static_cast<double>(a) * tau + static_cast<double>(b)) / automorphy(tau);
}

SL2Matrix operator*(const SL2Matrix& x, const SL2Matrix& y) {
  return {checked_add(checked_mul(x.a, y.a), checked_mul(x.b, y.c)),
          checked_add(checked_mul(x.a, y.b), checked_mul(x.b, y.d)),
          checked_add(checked_mul(x.c, y.a), checked_mul(x.d, y.c)),
          checked_add(checked_mul(x.c, y.b), checked_mul(x.d, y.d))};
}

SL2Matrix GeneratorWord::product() const {
  SL2Matrix m = sign > 0 ? SL2Matrix::identity() : SL2Matrix::minus_identity();
  for (const auto& t : tokens) m = m * token_matrix(t);
  return m;
}

GeneratorWord GeneratorWord::concat(const GeneratorWord& other) const {
  GeneratorWord w = *this;
  w.tokens.insert(w.tokens.end(), other.tokens.begin(), other.tokens.end());
  w.sign *= other.sign;
  return w;
}

std::int64_t gcd64(std::int64_t x, std::int64_t y) { return std::gcd(x, y); }

std::int64_t inverse_mod(std::int64_t x, std::int64_t m) {
  if (m == 1) return 0;
  std::int64_t r0 = m, r1 = ((x % m) + m) % m;
  std::int64_t s0 = 0, s1 = 1;
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    std::tie(r0, r1) = std::make_pair(r1, r0 - q * r1);
    std::tie(s0, s1) = std::make_pair(s1, s0 - q * s1);
  }
  if (r0 != 1) throw DomainError("element is not invertible modulo " + std::to_string(m));
  return ((s0 % m) + m) % m;
}

SL2Matrix lift_bottom_row(std::int64_t c, std::int64_t d) {
  if (c < 1) throw DomainError("lift_bottom_row requires c >= 1");
  if (gcd64(c, d) != 1) {
    throw DomainError("bottom row (" + std::to_string(c) + ", " + std::to_string(d) +
                      ") is not coprime");
  }
  std::int64_t a = inverse_mod(d, c);
  if (2 * a > c) a -= c;
  const __int128 num = static_cast<__int128>(a) * d - 1;
  const __int128 b = num / c;
  if (b * c != num) throw std::logic_error("lift_bottom_row: inexact division");
  if (b > INT64_MAX || b < INT64_MIN) throw std::overflow_error("lift_bottom_row: b overflow");
  return {a, static_cast<std::int64_t>(b), c, d};
}

GeneratorWord decompose_word(const SL2Matrix& g) {
  // Right-multiply by T^q and S until the bottom-left entry vanishes; the
  // tokens applied (in order) form W with g*W = +-T^m.
  std::vector<Token> applied;
  SL2Matrix cur = g;
  while (cur.c != 0) {
    const std::int64_t ac = cur.c < 0 ? -cur.c : cur.c;
    std::int64_t rem = ((cur.d % ac) + ac) % ac;
    if (2 * rem > ac) rem -= ac;
    const std::int64_t q = (rem - cur.d) / cur.c;
    if (q != 0) {
      cur = cur * SL2Matrix::T(q);
      applied.push_back(Token::t(q));
    }
    cur = cur * SL2Matrix::S();
    applied.push_back(Token::s());
  }
  // cur = delta * T^(delta * b), delta = +-1.
  const std::int64_t delta = cur.a;
  GeneratorWord w;
  w.sign = static_cast<int>(delta);
  const std::int64_t m = delta * cur.b;
  if (m != 0) w.tokens.push_back(Token::t(m));
  for (auto it = applied.rbegin(); it != applied.rend(); ++it) {
    if (it->gen == Generator::S) {
      // S^{-1} = -S
      w.tokens.push_back(Token::s());
      w.sign = -w.sign;
    } else {
      w.tokens.push_back(Token::t(-it->power));
    }
  }
  return w;
}

std::vector<CosetLabel> enumerate_cosets(std::int64_t c_max, std::int64_t d_window) {
  if (c_max < 0) throw DomainError("enumerate_cosets requires c_max >= 0");
  if (d_window < 0) throw DomainError("enumerate_cosets requires d_window >= 0");
  std::vector<CosetLabel> out;
  for_each_coset(c_max, d_window, [&](const CosetLabel& l) { out.push_back(l); });
  return out;
}

}  // namespace eisen
