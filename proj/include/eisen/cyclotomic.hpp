#pragma once

#include <cstdint>
#include <ostream>

#include "eisen/types.hpp"

namespace eisen {

// x + y*zeta, zeta = exp(2 pi i / 6), reduced with zeta^2 = zeta - 1.
struct CyclotomicInt {
  std::int64_t x = 0;
  std::int64_t y = 0;

  static CyclotomicInt zeta() { return {0, 1}; }
  // zeta^k for any integer k.
  static CyclotomicInt unit(int k);

  CyclotomicInt conj() const { return {x + y, -y}; }
  // |x + y zeta|^2 = x^2 + xy + y^2
  std::int64_t norm() const { return x * x + x * y + y * y; }
  cplx to_complex() const;

  CyclotomicInt operator+(const CyclotomicInt& o) const { return {x + o.x, y + o.y}; }
  CyclotomicInt operator-(const CyclotomicInt& o) const { return {x - o.x, y - o.y}; }
  CyclotomicInt operator-() const { return {-x, -y}; }
  CyclotomicInt operator*(const CyclotomicInt& o) const {
    return {x * o.x - y * o.y, x * o.y + y * o.x + y * o.y};
  }
  CyclotomicInt& operator+=(const CyclotomicInt& o) { return *this = *this + o; }

  friend bool operator==(const CyclotomicInt&, const CyclotomicInt&) = default;
  friend std::ostream& operator<<(std::ostream& os, const CyclotomicInt& z) {
    return os << z.x << (z.y < 0 ? "-" : "+") << (z.y < 0 ? -z.y : z.y) << "z6";
  }
};

}  // namespace eisen
