#include "eisen/eisenstein.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include "eisen/errors.hpp"
#include "eisen/linalg.hpp"
#include "eisen/parallel.hpp"
#include "eisen/sl2z.hpp"
#include "eisen/specfun.hpp"

namespace eisen {

namespace {

const double kSqrtPi = std::sqrt(kPi);

void require_upper(cplx tau) {
  if (!(tau.imag() > 0.0) || !is_finite(tau)) throw DomainError("tau must lie in the upper half-plane");
}

void require_finite_s(cplx s) {
  if (!is_finite(s)) throw DomainError("s must be finite");
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

cplx cpow(double base, cplx s) {
  if (s.imag() == 0.0) return std::pow(base, s.real());
  return std::exp(s * std::log(base));
}

CMatrix mat2(cplx a, cplx b, cplx c, cplx d) {
  CMatrix m(2, 2);
  m << a, b, c, d;
  return m;
}

// Per-c contributions of the direct sum. `outer` collects |d| > W/2 and `mid`
// collects W/4 < |d| <= W/2; they feed the truncation diagnostics in d.
struct CBlock {
  CMatrix total, outer, mid;
};

template <class M>
CBlock sum_for_c(const Representation& rep, const CMatrix& h_in, cplx tau, cplx s, std::int64_t c,
                 std::int64_t W) {
  const int D = rep.dim();
  const M h = h_in;
  const M rho_T = rep.rho_T();
  const ExponentMap& E = rep.exponent_map();
  const bool real_s = s.imag() == 0.0;
  const double y = tau.imag();
  const double cd = static_cast<double>(c);
  M total = M::Zero(D, D), outer = M::Zero(D, D), mid = M::Zero(D, D);
  for (std::int64_t r = 0; r < c; ++r) {
    if (gcd64(c, r) != 1) continue;
    // d = r + c k with |d| <= W; g0 T^k has bottom row (c, d) and the same a.
    const std::int64_t kmin = -floor_div(W + r, c);
    const std::int64_t kmax = floor_div(W - r, c);
    if (kmin > kmax) continue;
    const SL2Matrix g0 = lift_bottom_row(c, r);
    M P = rep.evaluate(g0) * rep.rho_T_power(kmin);
    const double a_over_c = static_cast<double>(g0.a) / cd;
    for (std::int64_t k = kmin; k <= kmax; ++k, P = P * rho_T) {
      const std::int64_t d = r + c * k;
      const cplx j = cd * tau + static_cast<double>(d);
      const double nj = std::norm(j);
      const cplx w = a_over_c - 1.0 / (cd * j);
      const double im = y / nj;
      const cplx weight = real_s ? cplx(std::pow(im, s.real())) : std::exp(s * std::log(im));
      const M Ew = E(-w);
      const M X = Ew * P;
      const M term = (X.transpose() * h * X.conjugate()) * weight;
      total += term;
      const std::int64_t ad = d < 0 ? -d : d;
      if (2 * ad > W) {
        outer += term;
      } else if (4 * ad > W) {
        mid += term;
      }
    }
  }
  return {total, outer, mid};
}

CBlock dispatch_c(const Representation& rep, const CMatrix& h, cplx tau, cplx s, std::int64_t c,
                  std::int64_t W) {
  switch (rep.dim()) {
    case 1:
      return sum_for_c<Eigen::Matrix<cplx, 1, 1>>(rep, h, tau, s, c, W);
    case 2:
      return sum_for_c<Eigen::Matrix<cplx, 2, 2>>(rep, h, tau, s, c, W);
    default:
      return sum_for_c<CMatrix>(rep, h, tau, s, c, W);
  }
}

// Relative-geometric tail estimate from two successive doubling increments.
double doubling_tail(double earlier, double later) {
  if (later == 0.0) return 0.0;
  if (earlier <= 0.0) return later;
  const double r = later / earlier;
  return r < 1.0 ? later * r / (1.0 - r) : later;
}

}  // namespace

std::string method_name(Method m) {
  switch (m) {
    case Method::Direct:
      return "direct";
    case Method::FourierInclusion:
      return "fourier-inclusion";
    case Method::FourierUnitary:
      return "fourier-unitary";
    case Method::Classical:
      return "classical";
    case Method::Residue:
      return "residue";
  }
  return "unknown";
}

CMatrix h_of_tau(const Representation& rep, const CMatrix& h, cplx tau) {
  const CMatrix E = rep.exponent_map()(-tau);
  return E.transpose() * h * E.conjugate();
}

MetricSample direct_sum(const Representation& rep, const CMatrix& h, cplx tau, cplx s,
                        const TruncationSpec& trunc) {
  require_upper(tau);
  require_finite_s(s);
  if (trunc.c_max < 0 || trunc.d_window < 0) throw DomainError("truncation cutoffs must be >= 0");
  if (!check_pos(rep, h)) throw DomainError("h is not in Pos(rho) for " + rep.tag());

  const std::int64_t C = trunc.c_max, W = trunc.d_window;
  std::vector<CBlock> blocks(static_cast<std::size_t>(C));
  parallel_for(C, [&](std::int64_t i) { blocks[i] = dispatch_c(rep, h, tau, s, i + 1, W); });

  const int D = rep.dim();
  CMatrix sum = cpow(tau.imag(), s) * h_of_tau(rep, h, tau);
  CMatrix band_lo = CMatrix::Zero(D, D), band_hi = CMatrix::Zero(D, D);
  CMatrix outer = CMatrix::Zero(D, D), mid = CMatrix::Zero(D, D);
  for (std::int64_t c = 1; c <= C; ++c) {
    const CBlock& b = blocks[c - 1];
    sum += b.total;
    outer += b.outer;
    mid += b.mid;
    if (4 * c > C && 2 * c <= C) band_lo += b.total;
    if (2 * c > C) band_hi += b.total;
  }

  MetricSample out;
  out.tau = tau;
  out.s = s;
  out.value = sum;
  out.method = Method::Direct;
  out.trunc = trunc;
  if (!std::isfinite(sum.norm())) {
    throw ConvergenceError("direct sum overflowed; rho(g) grows too fast for this s", HUGE_VAL, HUGE_VAL);
  }
  const double scale = std::max(sum.norm(), std::numeric_limits<double>::min());
  double err = 0.0;
  if (C >= 8) {
    const double d1 = band_lo.norm(), d2 = band_hi.norm();
    if (d2 > 0.9 * d1 && d2 > trunc.tol * scale) {
      throw ConvergenceError("direct sum is not Cauchy in c at s = " + std::to_string(s.real()) +
                                 (s.imag() ? "+" + std::to_string(s.imag()) + "i" : ""),
                             d2, d1);
    }
    err += doubling_tail(d1, d2);
  } else if (C >= 1) {
    err += blocks.back().total.norm();
  }
  if (W >= 8 && C >= 1) {
    const double d1 = mid.norm(), d2 = outer.norm();
    if (d2 > 0.9 * d1 && d2 > trunc.tol * scale) {
      throw ConvergenceError("direct sum is not Cauchy in d", d2, d1);
    }
    err += doubling_tail(d1, d2);
  }
  out.error_estimate = err;
  return out;
}

CMatrix g_fourier(std::int64_t m, double y, cplx s) {
  if (!(y > 0.0)) throw DomainError("g_fourier requires y > 0");
  require_finite_s(s);
  const cplx rg = rgamma_c(s);
  if (m == 0) {
    if (std::abs(2.0 * s - 3.0) == 0.0) throw PoleError("g(0, y, s) has a pole at s = 3/2");
    const cplx pref = kSqrtPi * cpow(y, 1.0 - s) * gamma_c(s - 0.5) * rg;
    return pref * mat2(1.0, cplx(0, -y), cplx(0, y), (2.0 * s - 2.0) / (2.0 * s - 3.0) * y * y);
  }
  const double am = static_cast<double>(m < 0 ? -m : m);
  const double x = kTwoPi * am * y;
  const cplx k_lo = bessel_k(s - 1.5, x), k_mid = bessel_k(s - 0.5, x), k_hi = bessel_k(s + 0.5, x);
  const cplx two_pi_i_m = cplx(0.0, kTwoPi * static_cast<double>(m));
  const cplx off = (1.0 - 2.0 * s) / two_pi_i_m;
  const cplx p1 = 2.0 * std::pow(kPi, s) * rg * cpow(am, s - 0.5) * std::sqrt(y) * k_mid;
  const cplx p2 = 2.0 * std::pow(kPi, s + 1.0) * rg * cpow(am, s + 0.5) / std::sqrt(y) * k_hi;
  const cplx p3 = 2.0 * std::pow(kPi, s - 1.0) * (s - 1.0) * rg * cpow(am, s - 1.5) * std::pow(y, 1.5) * k_lo;
  const cplx q = 2.0 * y * y / two_pi_i_m;
  return mat2(p1, (off - cplx(0, y)) * p1 + q * p2, (off + cplx(0, y)) * p1 + q * p2, p3);
}

cplx scattering_literal(cplx s) {
  return std::pow(kPi, 2.0 * s + 1.0) * gamma_c(-s) * zeta_c(-2.0 * s) /
         (gamma_c(s + 1.0) * zeta_c(2.0 * s + 2.0));
}

cplx scattering_stable(cplx s) {
  return kSqrtPi * gamma_c(s + 0.5) * zeta_c(2.0 * s + 1.0) / (gamma_c(s + 1.0) * zeta_c(2.0 * s + 2.0));
}

MetricSample inclusion_fourier(cplx tau, cplx s, std::int64_t n, const TruncationSpec& trunc) {
  require_upper(tau);
  require_finite_s(s);
  if (std::abs(s - 2.0) < 1e-14) {
    throw PoleError("inclusion metric has a simple pole at s = 2; use inclusion_residue");
  }
  if (!(s.real() > 1.5)) throw DomainError("inclusion Fourier expansion needs Re s > 3/2");
  const double x = tau.real(), y = tau.imag();
  // With h(tau) = e(-L tau)^t conj(e(-L tau)) the scalar part of the exponent
  // contributes e^{+4 pi n y}; the expansion below is written for e^{-4 pi nn y}.
  const double nn = -static_cast<double>(n);
  const cplx iy(0.0, y);
  const int K = n == 0 ? 1 : std::max(1, trunc.k_max);
  double err = 0.0;

  // Constant term.
  CMatrix Ht = cplx(cpow(y, s) * std::exp(-4.0 * kPi * nn * y)) * identity(2);
  {
    CMatrix acc = CMatrix::Zero(2, 2);
    double coef = 1.0;  // (-4 pi n)^k / k!
    int quiet = 0;
    bool converged = n == 0;
    for (int k = 0; k < K; ++k) {
      if (k > 0) coef *= -4.0 * kPi * nn / k;
      const cplx sk = s + static_cast<double>(k);
      const cplx scat = scattering_stable(sk) * cpow(y, -sk - 1.0);
      const cplx lead = kSqrtPi * cpow(y, 1.0 - sk) * gamma_c(sk - 0.5) * zeta_c(2.0 * sk - 3.0) /
                        (gamma_c(sk) * zeta_c(2.0 * sk - 2.0));
      CMatrix term = mat2(scat + lead, -iy * lead, iy * lead,
                          (2.0 * sk - 2.0) / (2.0 * sk - 3.0) * y * y * lead);
      term *= coef;
      acc += term;
      if (n != 0 && std::abs(coef) < 1.0 && term.norm() <= trunc.tol * acc.norm()) {
        if (++quiet >= 2) {
          converged = true;
          break;
        }
      } else {
        quiet = 0;
      }
    }
    if (!converged) throw ConvergenceError("k-series of the constant term did not converge", 0, 0);
    Ht += acc;
  }

  // Higher modes.
  for (int m = 1; m <= trunc.m_max; ++m) {
    const double md = m;
    const double X = kTwoPi * md * y;
    const double z = 4.0 * kPi * std::abs(nn) / (md * y);
    const int Km = n == 0 ? 1 : std::min(K, static_cast<int>(std::ceil(2.0 * std::exp(1.0) * z)) + 24);
    const std::vector<cplx> kb = bessel_k_ladder(s - 1.5, X, Km + 2);
    const double cs = std::cos(kTwoPi * md * x), sn = std::sin(kTwoPi * md * x);
    CMatrix Hm = CMatrix::Zero(2, 2);
    double coef = 1.0;  // (-4 pi^2 n)^k / k!
    for (int k = 0; k < Km; ++k) {
      if (k > 0) coef *= -4.0 * kPi * kPi * nn / k;
      if (coef == 0.0) break;
      const cplx sk = s + static_cast<double>(k);
      const cplx Klo = kb[k], Kmid = kb[k + 1], Khi = kb[k + 2];
      if (!is_finite(Klo) || !is_finite(Khi)) {
        throw ConvergenceError("Bessel ladder overflowed before the k-series converged", 0, 0);
      }
      const cplx t1 = kPi * sigma_w(m, 2.0 * sk + 1.0) * cs * Khi /
                      (cpow(md, sk + 0.5) * gamma_c(sk + 1.0) * zeta_c(2.0 * sk + 2.0) * std::sqrt(y));
      const cplx pre = std::sqrt(y) * cpow(md, sk - 0.5) * sigma_w(m, 3.0 - 2.0 * sk) /
                       (gamma_c(sk) * zeta_c(2.0 * sk - 2.0));
      const cplx anti = pre * sn * ((1.0 - 2.0 * sk) / (kTwoPi * md) * Kmid + y * Khi);
      CMatrix term = mat2(t1 + pre * cs * Kmid, -iy * pre * cs * Kmid + anti, iy * pre * cs * Kmid + anti,
                          pre * cs * (sk - 1.0) * y / (kPi * md) * Klo);
      term *= coef;
      Hm += term;
    }
    Hm *= 4.0 * std::pow(kPi, s);
    Ht += Hm;
    if (m == trunc.m_max) err += Hm.norm();
  }

  const cplx tb = std::conj(tau);
  MetricSample out;
  out.tau = tau;
  out.s = s;
  out.value = mat2(1.0, 0.0, -tau, 1.0) * Ht * mat2(1.0, -tb, 0.0, 1.0);
  out.method = Method::FourierInclusion;
  out.trunc = trunc;
  out.error_estimate = err;
  return out;
}

CMatrix inclusion_residue(cplx tau) {
  require_upper(tau);
  const double x = tau.real(), y = tau.imag();
  return (3.0 / (kTwoPi * y)) * mat2(1.0, -x, -x, x * x + y * y);
}

cplx classical_E(cplx tau, cplx s, double tol) {
  require_upper(tau);
  require_finite_s(s);
  if (s == cplx(1.0)) throw PoleError("E(tau, s) has a pole at s = 1");
  if (!(s.real() > 0.5)) throw DomainError("classical_E is implemented for Re s > 1/2");
  const double x = tau.real(), y = tau.imag();
  const cplx scat = scattering_stable(s - 1.0);
  cplx E = cpow(y, s) + scat * cpow(y, 1.0 - s);
  const cplx pref = 4.0 * std::pow(kPi, s) * std::sqrt(y) * rgamma_c(s) / zeta_c(2.0 * s);
  const double s_abs = std::abs(s);
  cplx tail = 0.0;
  for (int m = 1; m < 1000000; ++m) {
    const double X = kTwoPi * m * y;
    const cplx term = pref * cpow(m, s - 0.5) * sigma_w(m, 1.0 - 2.0 * s) * std::cos(kTwoPi * m * x) *
                      bessel_k(s - 0.5, X);
    tail += term;
    if (X > s_abs + 10.0 && std::abs(term) < tol * std::abs(E + tail) &&
        std::abs(pref) * std::pow(static_cast<double>(m), s.real()) * 2.0 * std::exp(-X) <
            tol * std::abs(E + tail)) {
      break;
    }
  }
  return E + tail;
}

namespace {

struct UnitaryContext {
  std::vector<double> e;  // diagonal exponents
  int D = 0;
};

UnitaryContext unitary_context(const Representation& rep, const CMatrix& h) {
  if (!rep.exponents_real_diagonal()) throw DomainError("unitary expansion needs real diagonal L");
  if (!rep.rho_T_unitary()) throw DomainError("unitary expansion needs rho(T) unitary");
  if (!check_pos(rep, h)) throw DomainError("h is not in Pos(rho) for " + rep.tag());
  UnitaryContext u;
  u.D = rep.dim();
  for (int i = 0; i < u.D; ++i) u.e.push_back(rep.exponents()(i, i).real());
  return u;
}

bool integral(double v) { return std::abs(v - std::round(v)) < 1e-12; }

// rho(g)^t and h conj(rho(g)) for each coprime residue d in 1..c.
struct CosetData {
  std::vector<std::int64_t> d;
  std::vector<CMatrix> P, Q;
};

CosetData coset_data(const Representation& rep, const CMatrix& h, std::int64_t c) {
  CosetData out;
  for (std::int64_t d = 1; d <= c; ++d) {
    if (gcd64(c, d) != 1) continue;
    const CMatrix r = rep.evaluate(lift_bottom_row(c, d));
    out.d.push_back(d);
    out.P.push_back(r.transpose());
    out.Q.push_back(h * r.conjugate());
  }
  return out;
}

}  // namespace

ConstantTerm unitary_constant_term(const Representation& rep, const CMatrix& h, cplx tau, cplx s,
                                   std::int64_t c_max) {
  require_upper(tau);
  require_finite_s(s);
  if (c_max < 1) throw DomainError("constant term needs c_max >= 1");
  const UnitaryContext ctx = unitary_context(rep, h);
  const int D = ctx.D;
  const double y = tau.imag();
  std::vector<ConstantTerm> per_c(static_cast<std::size_t>(c_max));
  parallel_for(c_max, [&](std::int64_t i) {
    const std::int64_t c = i + 1;
    const double cd = static_cast<double>(c);
    std::vector<cplx> F(D);
    for (int l = 0; l < D; ++l) F[l] = kummer_1f1(s - 0.5, s, 4.0 * kPi * ctx.e[l] / (cd * cd * y));
    const CosetData cs = coset_data(rep, h, c);
    CMatrix C = CMatrix::Zero(D, D), C0 = CMatrix::Zero(D, D);
    for (std::size_t k = 0; k < cs.d.size(); ++k) {
      const double t = static_cast<double>(cs.d[k]) / cd;
      for (int a = 0; a < D; ++a)
        for (int b = 0; b < D; ++b) {
          const cplx tw = e_of((ctx.e[b] - ctx.e[a]) * t);
          cplx with = 0.0, without = 0.0;
          for (int l = 0; l < D; ++l) {
            const cplx pq = cs.P[k](a, l) * cs.Q[k](l, b);
            with += F[l] * pq;
            without += pq;
          }
          C(a, b) += tw * with;
          C0(a, b) += tw * without;
        }
    }
    const cplx w = cpow(cd, -2.0 * s);
    per_c[i] = {C * w, C0 * w};
  });
  const cplx pref = kSqrtPi * cpow(y, 1.0 - s) * gamma_c(s - 0.5) * rgamma_c(s);
  ConstantTerm out{CMatrix::Zero(D, D), CMatrix::Zero(D, D)};
  for (const auto& t : per_c) {
    out.C += t.C;
    out.C0 += t.C0;
  }
  out.C *= pref;
  out.C0 *= pref;
  return out;
}

MetricSample unitary_fourier(const Representation& rep, const CMatrix& h, cplx tau, cplx s,
                             const TruncationSpec& trunc, bool allow_integral_differences) {
  require_upper(tau);
  require_finite_s(s);
  if (!(s.real() > 1.0)) throw DomainError("unitary Fourier expansion needs Re s > 1");
  const UnitaryContext ctx = unitary_context(rep, h);
  const int D = ctx.D;
  std::vector<std::vector<bool>> z(D, std::vector<bool>(D));
  for (int i = 0; i < D; ++i)
    for (int j = 0; j < D; ++j) {
      z[i][j] = integral(ctx.e[i] - ctx.e[j]);
      if (i != j && z[i][j] && !allow_integral_differences) {
        throw DomainError("exponent differences e_i - e_j are integral; pass the flag to allow them");
      }
    }
  const double x = tau.real(), y = tau.imag();
  const std::int64_t C = std::max<std::int64_t>(1, trunc.c_max);
  const int M = trunc.m_max;

  CMatrix H = cpow(y, s) * h_of_tau(rep, h, tau);
  const ConstantTerm ct = unitary_constant_term(rep, h, tau, s, C);
  for (int i = 0; i < D; ++i)
    for (int j = 0; j < D; ++j)
      if (z[i][j]) H(i, j) += ct.C(i, j);

  // Bessel data per (i, j, u): v = u + e_j - e_i, ladder K_{s + k - 1/2}(2 pi |v| y).
  struct Mode {
    int i, j;
    double v;
    std::vector<cplx> ladder;
    std::vector<cplx> kcoef;  // 1 / (k! Gamma(s + k))
  };
  std::vector<Mode> modes;
  double emax = 0.0;
  for (double e : ctx.e) emax = std::max(emax, std::abs(e));
  const double zc1 = 4.0 * kPi * emax / y;  // series argument at c = 1
  // For |v| large against k the Bessel ratio tends to 1 and the series looks
  // like sum a^k / (k!)^2 with a = 4 pi^2 |v| e at c = 1.
  const double a1 = 4.0 * kPi * kPi * (M + 1.0) * emax;
  const int K = std::min(trunc.k_max, static_cast<int>(std::ceil(std::max(2.0 * std::exp(1.0) * zc1,
                                                                         1.6 * std::exp(1.0) * std::sqrt(a1)))) +
                                          24);
  for (int i = 0; i < D; ++i)
    for (int j = 0; j < D; ++j)
      for (int u = -M; u <= M; ++u) {
        const double v = u + ctx.e[j] - ctx.e[i];
        if (std::abs(v) < 1e-12) continue;
        Mode md{i, j, v, bessel_k_ladder(s - 0.5, kTwoPi * std::abs(v) * y, K), {}};
        cplx c = rgamma_c(s);
        for (int k = 0; k < K; ++k) {
          if (k > 0) c /= static_cast<double>(k) * (s + static_cast<double>(k - 1));
          md.kcoef.push_back(c);
        }
        modes.push_back(std::move(md));
      }

  std::vector<CMatrix> per_c(static_cast<std::size_t>(C));
  std::vector<double> unconverged(static_cast<std::size_t>(C), 0.0);
  parallel_for(C, [&](std::int64_t ci) {
    const std::int64_t c = ci + 1;
    const double cd = static_cast<double>(c);
    const CosetData cs = coset_data(rep, h, c);
    CMatrix acc = CMatrix::Zero(D, D);
    std::vector<cplx> f(D);
    for (const Mode& md : modes) {
      const double av = std::abs(md.v);
      for (int l = 0; l < D; ++l) {
        const double arg = 4.0 * kPi * kPi * av * ctx.e[l] / (cd * cd);
        cplx sum = 0.0, last = 0.0;
        double p = 1.0;
        for (int k = 0; k < K; ++k) {
          last = md.ladder[k] * p * md.kcoef[k];
          sum += last;
          if (arg == 0.0) break;
          p *= arg;
        }
        if (arg != 0.0 && std::abs(last) > 1e-13 * std::abs(sum)) {
          unconverged[ci] = std::max(unconverged[ci], std::abs(last) / std::abs(sum));
        }
        f[l] = sum;
      }
      cplx total = 0.0;
      for (std::size_t k = 0; k < cs.d.size(); ++k) {
        cplx entry = 0.0;
        for (int l = 0; l < D; ++l) entry += cs.P[k](md.i, l) * f[l] * cs.Q[k](l, md.j);
        total += e_of(md.v * static_cast<double>(cs.d[k]) / cd) * entry;
      }
      acc(md.i, md.j) += total * cpow(av, s - 0.5) * e_of(md.v * x);
    }
    per_c[ci] = acc * cpow(cd, -2.0 * s);
  });
  for (double r : unconverged) {
    if (r > 0.0) throw ConvergenceError("Bessel k-series did not converge within k_max", r, 0);
  }
  CMatrix bessel = CMatrix::Zero(D, D);
  for (const auto& m : per_c) bessel += m;
  H += 2.0 * std::sqrt(y) * std::pow(kPi, s) * bessel;

  MetricSample out;
  out.tau = tau;
  out.s = s;
  out.value = H;
  out.method = Method::FourierUnitary;
  out.trunc = trunc;
  out.error_estimate = per_c.back().norm();
  return out;
}

}  // namespace eisen
