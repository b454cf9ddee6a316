#include "eisen/cyclotomic.hpp"

namespace eisen {

CyclotomicInt CyclotomicInt::unit(int k) {
  static constexpr CyclotomicInt kPowers[6] = {{1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}};
  return kPowers[((k % 6) + 6) % 6];
}

cplx CyclotomicInt::to_complex() const {
  return static_cast<double>(x) + static_cast<double>(y) * std::polar(1.0, kPi / 3.0);
}

}  // namespace eisen
