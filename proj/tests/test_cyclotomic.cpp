#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "eisen/cyclotomic.hpp"

using namespace eisen;

TEST_CASE("zeta6 basics") {
  const CyclotomicInt z = CyclotomicInt::zeta();
  CHECK(z * z == z - CyclotomicInt{1, 0});
  CHECK(CyclotomicInt::unit(6) == CyclotomicInt{1, 0});
  CHECK(CyclotomicInt::unit(3) == CyclotomicInt{-1, 0});
  CHECK(CyclotomicInt::unit(-1) == z.conj());
  CHECK(z * (CyclotomicInt{1, 0} - z) == CyclotomicInt{1, 0});
  CHECK(std::abs(z.to_complex() - std::polar(1.0, kPi / 3)) < 1e-15);
}

TEST_CASE("ring laws and norm against complex arithmetic") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::int64_t> u(-1000, 1000);
  for (int i = 0; i < 300; ++i) {
    const CyclotomicInt p{u(rng), u(rng)}, q{u(rng), u(rng)}, r{u(rng), u(rng)};
    CHECK(p * (q + r) == p * q + p * r);
    CHECK((p * q) * r == p * (q * r));
    CHECK((p * q).norm() == p.norm() * q.norm());
    CHECK(std::abs((p * q).to_complex() - p.to_complex() * q.to_complex()) < 1e-6);
    CHECK(std::abs(p.conj().to_complex() - std::conj(p.to_complex())) < 1e-9);
    CHECK(std::abs(static_cast<double>(p.norm()) - std::norm(p.to_complex())) < 1e-6);
  }
}

TEST_CASE("units cycle with period 6") {
  for (int k = -12; k <= 12; ++k) {
    CHECK(CyclotomicInt::unit(k) * CyclotomicInt::unit(1) == CyclotomicInt::unit(k + 1));
    CHECK(CyclotomicInt::unit(k).norm() == 1);
  }
}
