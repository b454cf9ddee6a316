#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/zeta.hpp>
#include <numeric>

#include "eisen/eisenstein.hpp"
#include "eisen/errors.hpp"
#include "eisen/harmonic.hpp"
#include "eisen/specfun.hpp"

using namespace eisen;

namespace {

double rel(const CMatrix& a, const CMatrix& b) { return (a - b).norm() / b.norm(); }

// brute-force E(tau, s) = sum over coprime (c, d) / +-1 of y^s / |c tau + d|^{2s}
double brute_E(cplx tau, double s, int N) {
  double sum = std::pow(tau.imag(), s);
  for (int c = 1; c <= N; ++c)
    for (int d = -N * 8; d <= N * 8; ++d) {
      if (std::gcd(c, d) != 1) continue;
      sum += std::pow(tau.imag() / std::norm(static_cast<double>(c) * tau + static_cast<double>(d)), s);
    }
  return sum;
}

}  // namespace

TEST_CASE("classical E against a brute-force lattice sum") {
  for (cplx tau : {cplx(0, 1), cplx(0.3, 0.8), cplx(-0.45, 2.0)}) {
    const double b = brute_E(tau, 6.0, 300);
    CHECK(std::abs(classical_E(tau, 6.0).real() - b) < 1e-9 * b);
  }
}

TEST_CASE("classical E is S-invariant and real") {
  for (cplx s : {cplx(2.5, 0), cplx(1.7, 3.0)}) {
    const cplx tau(0.2, 1.1);
    const cplx a = classical_E(tau, s), b = classical_E(-1.0 / tau, s);
    CHECK(std::abs(a - b) < 1e-10 * std::abs(a));
  }
  CHECK(std::abs(classical_E({0.1, 1.3}, 3.0).imag()) < 1e-13);
}

TEST_CASE("scattering coefficient: both forms agree off the integers") {
  for (cplx s : {cplx(1.3, 0), cplx(2.7, 0), cplx(0.6, 4.0), cplx(3.2, -1.5)})
    CHECK(std::abs(scattering_literal(s) - scattering_stable(s)) < 1e-11 * std::abs(scattering_stable(s)));
  // stable form at s = 1: sqrt(pi) Gamma(3/2) zeta(3) / (Gamma(2) zeta(4))
  const double expect = std::sqrt(kPi) * 0.5 * std::sqrt(kPi) * boost::math::zeta(3.0) / boost::math::zeta(4.0);
  CHECK(std::abs(scattering_stable(1.0) - expect) < 1e-13);
}

TEST_CASE("g_fourier against numerical integration") {
  boost::math::quadrature::exp_sinh<double> q;
  using gk = boost::math::quadrature::gauss_kronrod<double, 31>;
  for (std::int64_t m : {0, 1, -2})
    for (double y : {0.6, 1.5})
      for (double s : {2.5, 4.0}) {
        const CMatrix g = g_fourier(m, y, s);
        // integrand entries over r in R, folded onto r >= 0 with cos / sin
        auto entry = [&](int i, int j) {
          auto f = [&](double r, double sign) {
            const cplx rr = sign * r;
            const cplx M[2][2] = {{1.0, rr - cplx(0, y)}, {rr + cplx(0, y), rr * rr + y * y}};
            return M[i][j] * std::exp(cplx(0, -kTwoPi * m) * rr) / std::pow(r * r + y * y, s);
          };
          auto folded = [&](double r) { return f(r, 1) + f(r, -1); };
          if (m == 0) {
            const double re = q.integrate([&](double r) { return folded(r).real(); });
            const double im = q.integrate([&](double r) { return folded(r).imag(); });
            return std::pow(y, s) * cplx(re, im);
          }
          // oscillatory: whole periods on [0, 4000], the rest is below 1e-11
          cplx acc = 0.0;
          for (int k = 0; k < 4000; ++k) {
            acc += cplx(gk::integrate([&](double r) { return folded(r).real(); }, k, k + 1),
                        gk::integrate([&](double r) { return folded(r).imag(); }, k, k + 1));
          }
          return std::pow(y, s) * acc;
        };
        for (int i = 0; i < 2; ++i)
          for (int j = 0; j < 2; ++j) {
            INFO(m << " " << y << " " << s << " " << i << j);
            const cplx ref = entry(i, j);
            CHECK(std::abs(g(i, j) - ref) < 1e-8 * std::max(1e-3, g.norm()));
          }
      }
}

TEST_CASE("direct sum for the trivial representation matches classical E") {
  const Representation t = make_trivial();
  const TruncationSpec tr = TruncationSpec::for_c_max(300);
  for (cplx tau : {cplx(0, 1), cplx(0.25, 1.0)}) {
    const MetricSample ms = direct_sum(t, identity(1), tau, 5.0, tr);
    CHECK(std::abs(ms.value(0, 0) - classical_E(tau, 5.0)) < 1e-10);
    CHECK(ms.method == Method::Direct);
    CHECK(ms.error_estimate < 1e-9);
  }
}

TEST_CASE("inclusion: direct vs Fourier, and invariance") {
  const Representation inc = make_inclusion(0);
  TruncationSpec tr = TruncationSpec::for_c_max(300);
  const cplx tau(0.1, 1.2);
  const CMatrix d = direct_sum(inc, identity(2), tau, 3.5, tr).value;
  const CMatrix f = inclusion_fourier(tau, 3.5, 0, tr).value;
  CHECK(rel(d, f) < 1e-6);
  CHECK(hermitian_defect(f) < 1e-12 * f.norm());
  // rho(g)^t H(g tau) conj(rho(g)) = H(tau)
  const SL2Matrix g{2, 1, 1, 1};
  const CMatrix r = inc.evaluate(g);
  const CMatrix back = r.transpose() * inclusion_fourier(g.act(tau), 3.5, 0, tr).value * r.conjugate();
  CHECK(rel(back, f) < 1e-9);
}

TEST_CASE("inclusion with shifted exponent") {
  TruncationSpec tr = TruncationSpec::for_c_max(300);
  const cplx tau(-0.2, 1.4);
  const CMatrix d = direct_sum(make_inclusion(1), identity(2), tau, 4.0, tr).value;
  const CMatrix f = inclusion_fourier(tau, 4.0, 1, tr).value;
  CHECK(rel(d, f) < 1e-6);
}

TEST_CASE("inclusion domain and pole") {
  TruncationSpec tr;
  CHECK_THROWS_AS(inclusion_fourier({0, 1}, 2.0, 0, tr), PoleError);
  CHECK_THROWS_AS(inclusion_fourier({0, 1}, 1.4, 0, tr), DomainError);
  CHECK_THROWS_AS(inclusion_fourier({0, -1}, 3.0, 0, tr), DomainError);
  const CMatrix R = inclusion_residue({0, 1});
  CHECK(std::abs(R(0, 0) - 3.0 / kTwoPi) < 1e-15);
  CHECK(std::abs(R(1, 1) - 3.0 / kTwoPi) < 1e-15);
}

TEST_CASE("pole residue by extrapolation") {
  TruncationSpec tr;
  const cplx tau(0.5, 1.0);
  const CMatrix R = inclusion_residue(tau);
  const double e1 = 1e-2, e2 = 1e-3;
  const CMatrix f1 = e1 * inclusion_fourier(tau, 2.0 + e1, 0, tr).value;
  const CMatrix f2 = e2 * inclusion_fourier(tau, 2.0 + e2, 0, tr).value;
  CHECK(rel((e1 * f2 - e2 * f1) / (e1 - e2), R) < 5 * e2);
}

TEST_CASE("u-family direct sum is invariant") {
  // |u| = 1 keeps rho(g) polynomially bounded; u = -1 is the Jordan-block case
  const TruncationSpec tr = TruncationSpec::for_c_max(200);
  const cplx tau(0.15, 1.1);
  for (cplx uu : {std::polar(1.0, kTwoPi * 0.3), cplx(-1.0, 0.0)}) {
    const Representation u = make_family_u(uu);
    const CMatrix H = direct_sum(u, identity(2), tau, 6.0, tr).value;
    CHECK(hermitian_defect(H) < 1e-10 * H.norm());
    CHECK(is_positive_definite(H));
    for (const SL2Matrix& g : {SL2Matrix::S(), SL2Matrix::T()}) {
      const CMatrix r = u.evaluate(g);
      const CMatrix back = r.transpose() * direct_sum(u, identity(2), g.act(tau), 6.0, tr).value * r.conjugate();
      CHECK(rel(back, H) < 1e-7);
    }
  }
}

TEST_CASE("u-family off the unit circle is reported, not returned") {
  const TruncationSpec tr = TruncationSpec::for_c_max(200);
  CHECK_THROWS_AS(direct_sum(make_family_u({-0.6, 0.5}), identity(2), {0.15, 1.1}, 4.0, tr), ConvergenceError);
}

TEST_CASE("unitary Fourier expansion") {
  const Representation rep = make_unitary_diagonal({1, 5});
  const TruncationSpec tr = TruncationSpec::for_c_max(300);
  for (cplx tau : {cplx(0.1, 1.2), cplx(-0.35, 0.95)}) {
    const CMatrix d = direct_sum(rep, identity(2), tau, 3.0, tr).value;
    const CMatrix f = unitary_fourier(rep, identity(2), tau, 3.0, tr).value;
    CHECK(rel(f, d) < 1e-8);
  }
  // equal exponents: off-diagonal differences are integral
  CHECK_THROWS_AS(unitary_fourier(make_unitary_diagonal({1, 1}), identity(2), {0, 1}, 3.0, tr), DomainError);
  CHECK_NOTHROW(unitary_fourier(make_unitary_diagonal({1, 1}), identity(2), {0, 1}, 3.0, tr, true));
  CHECK_THROWS_AS(unitary_fourier(make_inclusion(0), identity(2), {0, 1}, 3.0, tr), DomainError);
}

TEST_CASE("unitary constant term for characters") {
  const Representation rep = make_unitary_diagonal({1, 5});
  for (double s : {2.0, 3.0})
    for (double y : {1.0, 2.0}) {
      const ConstantTerm ct = unitary_constant_term(rep, identity(2), {0.0, y}, s, 1000);
      const double closed = std::sqrt(kPi) * std::pow(y, 1 - s) * std::tgamma(s - 0.5) *
                            boost::math::zeta(2 * s - 1) / (std::tgamma(s) * boost::math::zeta(2 * s));
      CHECK(std::abs(ct.C0(0, 0) - closed) < 1e-5 * closed);
      CHECK(std::abs(ct.C0(0, 1)) < 1e-12);
      // the 1F1 factor exceeds 1 for positive exponents
      CHECK(ct.C(1, 1).real() > ct.C0(1, 1).real());
    }
}

TEST_CASE("direct sum refuses a non-convergent truncation") {
  // below Re s = 1 the coset sum diverges
  const TruncationSpec tr = TruncationSpec::for_c_max(64);
  CHECK_THROWS_AS(direct_sum(make_trivial(), identity(1), {0, 1}, 0.8, tr), ConvergenceError);
}
