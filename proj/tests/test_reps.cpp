#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <boost/math/special_functions/gamma.hpp>
#include <random>

#include "eisen/errors.hpp"
#include "eisen/reps.hpp"

using namespace eisen;

namespace {

const cplx kZeta6 = std::polar(1.0, kPi / 3);

SL2Matrix random_short(std::mt19937_64& rng, int len) {
  std::uniform_int_distribution<int> coin(0, 1), pw(-3, 3);
  SL2Matrix g;
  for (int i = 0; i < len; ++i) g = g * (coin(rng) ? SL2Matrix::S() : SL2Matrix::T(pw(rng)));
  return g;
}

std::vector<Representation> sample_reps() {
  CMatrix g(2, 2);
  g << 1.0, cplx(0.5, 0.2), 0.0, 2.0;
  return {make_trivial(),
          make_inclusion(0),
          make_inclusion(3),
          make_unitary_diagonal({1, 5, 7}),
          make_family_u({-0.7, 0.4}),
          make_family_u(-1.0),
          make_eta_family({0.3, -1.1}),
          conjugate_rep(make_inclusion(0), g)};
}

double rel(const CMatrix& a, const CMatrix& b) { return (a - b).norm() / std::max(1.0, b.norm()); }

}  // namespace

TEST_CASE("defining relations and exponent matrix") {
  for (const auto& r : sample_reps()) {
    INFO(r.tag());
    const CMatrix I = identity(r.dim());
    const CMatrix S = r.rho_S(), T = r.rho_T();
    CHECK(rel(S * S * S * S, I) < 1e-12);
    CHECK(rel(S * T * S * T * S * T, S * S) < 1e-12);
    CHECK(rel(r.exponent_map()(1.0), T) < 1e-12);
    CHECK(rel(expm(cplx(0, kTwoPi) * r.exponents()), T) < 1e-12);
    CHECK(rel(T * r.rho_T_inverse(), I) < 1e-12);
  }
}

TEST_CASE("evaluate is a homomorphism and matches the word fold") {
  std::mt19937_64 rng(5);
  for (const auto& r : sample_reps()) {
    INFO(r.tag());
    for (int i = 0; i < 40; ++i) {
      const SL2Matrix g = random_short(rng, 8), h = random_short(rng, 8);
      CHECK(rel(r.evaluate(g * h), r.evaluate(g) * r.evaluate(h)) < 1e-9);
      CHECK(rel(r.evaluate(g), r.evaluate_word(decompose_word(g))) < 1e-9);
    }
  }
}

TEST_CASE("rho_T_power") {
  const Representation r = make_family_u({-0.2, 0.9});
  CMatrix p = identity(2);
  for (int n = 0; n < 9; ++n) {
    CHECK(rel(r.rho_T_power(n), p) < 1e-12);
    CHECK(rel(r.rho_T_power(-n) * p, identity(2)) < 1e-10);
    p = p * r.rho_T();
  }
}

TEST_CASE("u-family parameter domain") {
  CHECK_THROWS_AS(make_family_u(0.0), DomainError);
  CHECK_THROWS_AS(make_family_u(2.0), DomainError);
  CHECK_THROWS_AS(make_family_u({std::nan(""), 1.0}), DomainError);
  CHECK_NOTHROW(make_family_u({2.0, 1e-3}));
  // u = -1 is the removable point of the upper-right exponent
  const Representation a = make_family_u(-1.0), b = make_family_u({-1.0, 1e-9});
  CHECK(rel(a.exponents(), b.exponents()) < 1e-7);
}

TEST_CASE("unitary diagonal characters") {
  const Representation r = make_unitary_diagonal({1, 13, -1});
  CHECK(r.rho_T_unitary());
  CHECK(r.exponents_real_diagonal());
  CHECK(std::abs(r.exponents()(1, 1) - 1.0 / 12) < 1e-15);
  CHECK(std::abs(r.exponents()(2, 2) - 11.0 / 12) < 1e-15);
  CHECK_THROWS_AS(make_unitary_diagonal({}), DomainError);
  CHECK_THROWS_AS(make_unitary_diagonal({0, 1, 2, 3, 4}), DomainError);
}

TEST_CASE("Pos membership") {
  CMatrix h = identity(2);
  CHECK(check_pos(make_inclusion(0), h));
  h(1, 1) = 3.0;
  CHECK(check_pos(make_eta_family({1.0, 0.5}), h));
  CMatrix bad(2, 2);
  bad << 1.0, 2.0, 2.0, 1.0;
  CHECK_FALSE(check_pos(make_inclusion(0), bad));
  // T-invariance is enforced when rho(T) is unitary
  CMatrix mixed(2, 2);
  mixed << 1.0, 0.3, 0.3, 1.0;
  CHECK_FALSE(check_pos(make_unitary_diagonal({1, 5}), mixed));
  CHECK(check_pos(make_unitary_diagonal({1, 5}), identity(2)));
}

TEST_CASE("eta cocycle on generators") {
  const EtaCocycleValue s = eta_cocycle(SL2Matrix::S()), t = eta_cocycle(SL2Matrix::T());
  CHECK(s.a == CyclotomicInt{1, -1});
  CHECK(s.chi_power == 3);
  CHECK(t.a == CyclotomicInt{});
  CHECK(t.chi_power == 1);
  CHECK(eta_cocycle(SL2Matrix::minus_identity()) == EtaCocycleValue{});
}

TEST_CASE("eta^4 at i and its transformation laws") {
  // eta(i) = Gamma(1/4) / (2 pi^{3/4})
  const double eta_i = boost::math::tgamma(0.25) / (2.0 * std::pow(kPi, 0.75));
  CHECK(std::abs(eta_fourth(cplx(0, 1)) - std::pow(eta_i, 4)) < 1e-13);
  for (cplx tau : {cplx(0.1, 0.9), cplx(-0.4, 1.7), cplx(0.3, 0.35)}) {
    const cplx e = eta_fourth_series(tau);
    CHECK(std::abs(eta_fourth(tau) - e) < 1e-12 * std::abs(e));
    CHECK(std::abs(eta_fourth_series(tau + 1.0) - kZeta6 * e) < 1e-12 * std::abs(e));
    CHECK(std::abs(eta_fourth_series(-1.0 / tau) + tau * tau * e) < 1e-10 * std::abs(tau * tau * e));
  }
  CHECK_THROWS_AS(eta_fourth(cplx(0.5, -1)), DomainError);
}

TEST_CASE("period integrals reproduce the exact cocycle") {
  // psi(g) lower-left = (1 - zeta) kappa(g) + (chi(g) - 1) kappa(T) = lambda a(g)
  const cplx alpha(0.7, -0.4), z(0.15, 1.05);
  const cplx kS = kappa_numeric(SL2Matrix::S(), alpha, z), kT = kappa_numeric(SL2Matrix::T(), alpha, z);
  const cplx lambda = kS - 2.0 * kZeta6 * kT;
  CHECK(std::abs((1.0 - kZeta6) * kS - 2.0 * kT - lambda * (1.0 - kZeta6)) < 1e-13);
  std::mt19937_64 rng(9);
  for (int i = 0; i < 12; ++i) {
    const SL2Matrix g = random_short(rng, 5);
    const EtaCocycleValue v = eta_cocycle(g);
    const cplx lhs = (1.0 - kZeta6) * kappa_numeric(g, alpha, z) + (v.chi().to_complex() - 1.0) * kT;
    CHECK(std::abs(lhs - lambda * v.a.to_complex()) < 1e-8 * std::max(1.0, std::abs(lhs)));
  }
}

TEST_CASE("period integrals satisfy the crossed-homomorphism law") {
  const cplx alpha(1.0, 0.0), z(0.0, 1.2);
  const SL2Matrix g{2, 1, 1, 1}, h{1, 0, 2, 1};
  const cplx chi_g = eta_cocycle(g).chi().to_complex();
  const cplx lhs = kappa_numeric(g * h, alpha, z);
  const cplx rhs = chi_g * kappa_numeric(h, alpha, z) + kappa_numeric(g, alpha, z);
  CHECK(std::abs(lhs - rhs) < 1e-9);
}
