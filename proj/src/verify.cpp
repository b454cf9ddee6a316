#include "eisen/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <random>

#include "eisen/eisenstein.hpp"
#include "eisen/errors.hpp"
#include "eisen/harmonic.hpp"
#include "eisen/kloosterman.hpp"
#include "eisen/reference_values.hpp"
#include "eisen/reps.hpp"
#include "eisen/sl2z.hpp"
#include "eisen/specfun.hpp"

namespace eisen {

namespace {

using Checks = std::vector<CheckResult>;

void add(Checks& out, const std::string& suite, const std::string& name, double measured,
         double threshold) {
  out.push_back({suite, name, measured, threshold, measured <= threshold});
}

GeneratorWord random_word(std::mt19937_64& rng, int max_len) {
  std::uniform_int_distribution<int> len(1, max_len), pw(-3, 3), coin(0, 1);
  GeneratorWord w;
  const int n = len(rng);
  for (int i = 0; i < n; ++i) {
    if (coin(rng)) {
      w.tokens.push_back(Token::s());
    } else {
      int p = 0;
      while (p == 0) p = pw(rng);
      w.tokens.push_back(Token::t(p));
    }
  }
  w.sign = coin(rng) ? 1 : -1;
  return w;
}

SL2Matrix random_element(std::mt19937_64& rng, int max_len) {
  for (;;) {
    try {
      return random_word(rng, max_len).product();
    } catch (const std::overflow_error&) {
    }
  }
}

Checks suite_table(std::int64_t c_max) {
  Checks out;
  const std::int64_t n = std::clamp<std::int64_t>(c_max, 1, 120);
  const auto rows = ab_scan(1, n);
  double a_mismatch = 0, b_err = 0;
  for (std::int64_t c = 1; c <= n; ++c) {
    const TableRow& ref = table_one()[c - 1];
    a_mismatch += rows[c - 1].a != ref.a_c;
    b_err = std::max(b_err, std::abs(std::abs(rows[c - 1].b) - ref.abs_b_c));
  }
  add(out, "table", "a_c exact mismatches, c <= " + std::to_string(n), a_mismatch, 0.0);
  add(out, "table", "max | |b_c| - table |, c <= " + std::to_string(n), b_err, 1e-9);
  return out;
}

Checks suite_residue() {
  Checks out;
  const std::vector<cplx> taus = {{0, 1}, {0.5, 1}, {-1.0 / 3.0, 2}};
  double closed = 0, extrap = 0;
  TruncationSpec t;
  t.m_max = 20;
  for (cplx tau : taus) {
    const CMatrix R = inclusion_residue(tau);
    closed = std::max(closed, (R - 3.0 / kTwoPi * geodesic_metric(tau)).norm());
    const double e1 = 1e-2, e2 = 1e-3;
    const CMatrix f1 = e1 * inclusion_fourier(tau, 2.0 + e1, 0, t).value;
    const CMatrix f2 = e2 * inclusion_fourier(tau, 2.0 + e2, 0, t).value;
    const CMatrix lim = (e1 * f2 - e2 * f1) / (e1 - e2);
    extrap = std::max(extrap, (lim - R).norm() / (5.0 * e2 * R.norm()));
  }
  add(out, "residue", "residue equals (3/2pi) K", closed, 1e-12);
  add(out, "residue", "extrapolated (s-2)H vs residue, in units of 5 eps |R|", extrap, 1.0);

  const MetricFunction res = residue_metric_function();
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> ux(-0.5, 0.5), uy(std::sqrt(3.0) / 2, 2.0);
  double harm = 0, ratio_dev = 0;
  for (int i = 0; i < 10; ++i) {
    cplx tau(ux(rng), uy(rng));
    while (std::abs(tau) < 1.0) tau = {ux(rng), uy(rng)};  // standard fundamental domain
    harm = std::max(harm, harmonicity_residual(res, tau, 1e-3));
    const double r1 = harmonicity_residual(res, tau, 4e-2), r2 = harmonicity_residual(res, tau, 2e-2);
    ratio_dev = std::max(ratio_dev, std::abs(r1 / r2 - 4.0));
  }
  add(out, "residue", "harmonicity residual of residue metric, step 1e-3", harm, 1e-5);
  add(out, "residue", "step-halving ratio deviation |r(h)/r(h/2) - 4|", ratio_dev, 0.5);

  const Representation inc = make_inclusion(0);
  double inv = 0;
  const std::vector<SL2Matrix> gens = {SL2Matrix::S(), SL2Matrix::T(),
                                       SL2Matrix::T() * SL2Matrix::S().inverse() * SL2Matrix::T()};
  for (const auto& g : gens)
    for (cplx tau : taus) inv = std::max(inv, invariance_residual(res, inc, g, tau));
  add(out, "residue", "invariance residual of residue metric", inv, 1e-9);
  return out;
}

Checks suite_specfun() {
  Checks out;
  double rs = 0;
  for (std::int64_t c = 1; c <= 200; ++c)
    for (std::int64_t m = -50; m <= 50; ++m) {
      cplx direct = 0.0;
      for (std::int64_t d = 1; d <= c; ++d)
        if (gcd64(c, d) == 1) direct += e_of(static_cast<double>(m * d) / static_cast<double>(c));
      const double rounded = std::round(direct.real());
      const bool exact = std::abs(direct - rounded) < 1e-6 &&
                         static_cast<std::int64_t>(rounded) == ramanujan_sum(c, m);
      rs += !exact;
    }
  add(out, "specfun", "Ramanujan sum formula vs rounded direct sum, mismatches", rs, 0.0);

  double bk = 0;
  for (double x : {0.1, 1.0, 10.0}) {
    const double k12 = std::sqrt(kPi / (2 * x)) * std::exp(-x);
    const double k32 = k12 * (1 + 1 / x);
    const double k52 = k12 * (1 + 3 / x + 3 / (x * x));
    bk = std::max({bk, std::abs(bessel_k(0.5, x) - k12) / k12, std::abs(bessel_k(1.5, x) - k32) / k32,
                   std::abs(bessel_k(2.5, x) - k52) / k52});
  }
  add(out, "specfun", "Bessel K half-integer closed forms (relative)", bk, 1e-8);
  double rec = 0;
  for (double x : {0.3, 2.0, 7.0})
    for (cplx nu : {cplx(0.3, 0), cplx(1.2, 2.5)}) {
      const cplx km = bessel_k(nu - 1.0, x), k0 = bessel_k(nu, x), kp = bessel_k(nu + 1.0, x);
      rec = std::max(rec, std::abs(kp - km - 2.0 * nu / x * k0) / std::abs(kp));
    }
  add(out, "specfun", "Bessel K three-term recurrence (relative)", rec, 1e-8);

  double fe = 0;
  for (double re = -3.3; re <= 4.0; re += 1.75)
    for (double im = -20.0; im <= 20.0; im += 5.0) {
      const cplx s(re, im);
      if (std::abs(s - 1.0) < 0.5 || std::abs(s) < 0.5) continue;
      const cplx lhs = zeta_c(s);
      const cplx rhs = std::pow(cplx(2.0), s) * std::pow(cplx(kPi), s - 1.0) * std::sin(kPi * s / 2.0) *
                       gamma_c(1.0 - s) * zeta_c(1.0 - s);
      fe = std::max(fe, std::abs(lhs - rhs) / std::max(1e-300, std::abs(lhs)));
    }
  add(out, "specfun", "zeta functional equation (relative)", fe, 1e-9);
  return out;
}

Checks suite_sl2z() {
  Checks out;
  std::mt19937_64 rng(11);
  double bad = 0;
  for (int i = 0; i < 1000; ++i) {
    const SL2Matrix g = random_element(rng, 30);
    bad += !(decompose_word(g).product() == g);
  }
  add(out, "sl2z", "word reconstruction failures (1000 words)", bad, 0.0);
  std::uniform_int_distribution<std::int64_t> uc(1, 10000), ud(-100000, 100000);
  double lift_bad = 0;
  for (int i = 0; i < 1000;) {
    const std::int64_t c = uc(rng), d = ud(rng);
    if (gcd64(c, d) != 1) continue;
    ++i;
    const SL2Matrix g = lift_bottom_row(c, d);
    lift_bad += !(g.c == c && g.d == d && g.a * g.d - g.b * g.c == 1);
  }
  add(out, "sl2z", "bottom-row lift failures (1000 pairs)", lift_bad, 0.0);
  return out;
}

Checks suite_cocycle() {
  Checks out;
  std::mt19937_64 rng(13);
  double bad = 0;
  for (int i = 0; i < 500; ++i) {
    SL2Matrix g1, g2, g12;
    for (;;) {
      g1 = random_element(rng, 12);
      g2 = random_element(rng, 12);
      try {
        g12 = g1 * g2;
        break;
      } catch (const std::overflow_error&) {
      }
    }
    const EtaCocycleValue v1 = eta_cocycle(g1), v2 = eta_cocycle(g2), v12 = eta_cocycle(g12);
    const bool ok = v12.a == v1.a + v1.chi() * v2.a && v12.chi() == v1.chi() * v2.chi();
    bad += !ok;
  }
  add(out, "cocycle", "eta cocycle law failures in Z[zeta6] (500 pairs)", bad, 0.0);
  add(out, "cocycle", "zeta6 (1 - zeta6) - 1 in Z[zeta6]",
      static_cast<double>((CyclotomicInt::zeta() * CyclotomicInt{1, -1} - CyclotomicInt{1, 0}).norm()), 0.0);
  return out;
}

Checks suite_kloosterman() {
  Checks out;
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> ul(-2.0, 2.0), ua(0.2, 3.0);
  double lift = 0, recon = 0;
  for (int trial = 0; trial < 10; ++trial) {
    const cplx lambda(ul(rng), ul(rng));
    const double A = ua(rng);
    const Representation eta = make_eta_family(lambda);
    CMatrix h = CMatrix::Zero(2, 2);
    h(0, 0) = 1.0;
    h(1, 1) = A;
    for (std::int64_t c = 1; c <= 60; ++c) {
      const CMatrix kl = kl_matrix(eta, h, c);
      recon = std::max(recon, (kl - kl_from_ab(ab_sequence(c), lambda, A)).norm() / kl.norm());
      if (c <= 30)
        for (std::int64_t shift : {1, -2, 5})
          lift = std::max(lift, (kl - kl_matrix(eta, h, c, shift)).norm() / kl.norm());
    }
  }
  add(out, "kloosterman", "Kl(c) rebuilt from (a_c, b_c), c <= 60 (relative)", recon, 1e-9);
  add(out, "kloosterman", "lift independence of Kl(c) (relative)", lift, 1e-10);
  return out;
}

Checks suite_unitary() {
  Checks out;
  const Representation rep = make_unitary_diagonal({1, 5});
  const CMatrix I = identity(2);
  double worst = 0;
  for (double s : {2.0, 3.0})
    for (double y : {1.0, 2.0}) {
      const ConstantTerm ct = unitary_constant_term(rep, I, {0.0, y}, s, 2000);
      const double closed = std::pow(y, s) + std::sqrt(kPi) * std::pow(y, 1 - s) * std::tgamma(s - 0.5) *
                                                 zeta_c(2 * s - 1).real() / (std::tgamma(s) * zeta_c(2 * s).real());
      for (int i = 0; i < 2; ++i) {
        const double v = std::pow(y, s) + ct.C0(i, i).real();
        worst = std::max(worst, std::abs(v - closed) / closed);
      }
    }
  add(out, "unitary", "constant term vs zeta-ratio closed form (relative)", worst, 1e-6);
  const TruncationSpec t = TruncationSpec::for_c_max(400);
  double fe = 0;
  for (cplx tau : {cplx(0.1, 1.2), cplx(-0.3, 0.9)}) {
    const CMatrix d = direct_sum(rep, I, tau, 3.0, t).value;
    const CMatrix f = unitary_fourier(rep, I, tau, 3.0, t).value;
    fe = std::max(fe, (d - f).norm() / d.norm());
  }
  add(out, "unitary", "Fourier expansion vs direct sum, s = 3 (relative)", fe, 1e-8);
  return out;
}

Checks suite_cross() {
  Checks out;
  TruncationSpec t = TruncationSpec::for_c_max(400);
  const Representation inc = make_inclusion(0), triv = make_trivial();
  double inc_err = 0, triv_err = 0;
  for (cplx tau : {cplx(0, 1), cplx(0.25, 1)}) {
    const CMatrix d = direct_sum(inc, identity(2), tau, 4.0, t).value;
    const CMatrix f = inclusion_fourier(tau, 4.0, 0, t).value;
    inc_err = std::max(inc_err, (d - f).norm() / f.norm());
    const cplx dt = direct_sum(triv, identity(1), tau, 4.0, t).value(0, 0);
    const cplx e = classical_E(tau, 4.0);
    triv_err = std::max(triv_err, std::abs(dt - e) / std::abs(e));
  }
  add(out, "cross", "direct vs inclusion Fourier, s = 4 (relative)", inc_err, 1e-5);
  add(out, "cross", "direct (trivial) vs classical E, s = 4 (relative)", triv_err, 1e-6);
  return out;
}

Checks suite_harmonic() {
  Checks out;
  const MetricFunction K = geodesic_metric_function();
  add(out, "harmonic", "geodesic metric harmonicity at i, step 1e-3", harmonicity_residual(K, {0, 1}, 1e-3), 1e-5);
  const double r1 = harmonicity_residual(K, {0.2, 0.9}, 1e-2), r2 = harmonicity_residual(K, {0.2, 0.9}, 5e-3);
  add(out, "harmonic", "O(step^2) ratio deviation |r(h)/r(h/2) - 4|", std::abs(r1 / r2 - 4.0), 0.5);
  const Representation inc = make_inclusion(0);
  double inv = 0;
  std::mt19937_64 rng(19);
  for (int i = 0; i < 20; ++i) {
    const SL2Matrix g = random_element(rng, 6);
    inv = std::max(inv, invariance_residual(K, inc, g, {0.1 * i - 1.0, 0.5 + 0.1 * i}));
  }
  add(out, "harmonic", "geodesic metric invariance, words of length <= 6", inv, 1e-9);
  return out;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"table",       "residue", "specfun", "sl2z", "cocycle",
                                                 "kloosterman", "unitary", "cross",   "harmonic"};
  return names;
}

std::vector<CheckResult> run_verification(const VerifyOptions& opts) {
  const std::map<std::string, std::function<Checks()>> suites = {
      {"table", [&] { return suite_table(opts.table_c_max); }},
      {"residue", suite_residue},
      {"specfun", suite_specfun},
      {"sl2z", suite_sl2z},
      {"cocycle", suite_cocycle},
      {"kloosterman", suite_kloosterman},
      {"unitary", suite_unitary},
      {"cross", suite_cross},
      {"harmonic", suite_harmonic},
  };
  Checks out;
  if (opts.suite == "all") {
    for (const auto& name : suite_names()) {
      const Checks c = suites.at(name)();
      out.insert(out.end(), c.begin(), c.end());
    }
    return out;
  }
  const auto it = suites.find(opts.suite);
  if (it == suites.end()) throw DomainError("unknown verification suite: " + opts.suite);
  return it->second();
}

}  // namespace eisen
