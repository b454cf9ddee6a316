#include "eisen/specfun.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>

#include "eisen/errors.hpp"
#include "eisen/quadrature.hpp"

namespace eisen {

namespace {

void require_finite(cplx s, const char* who) {
  if (!is_finite(s)) throw DomainError(std::string(who) + ": non-finite argument");
}

bool is_nonpositive_integer(cplx s) {
  return s.imag() == 0.0 && s.real() <= 0.0 && s.real() == std::round(s.real());
}

// Godfrey's coefficients, g = 607/128, n = 15.
constexpr double kLanczosG = 607.0 / 128.0;
constexpr std::array<double, 15> kLanczos = {
    0.99999999999999709182,     57.156235665862923517,      -59.597960355475491248,
    14.136097974741747174,      -0.49191381609762019978,    0.33994649984811888699e-4,
    0.46523628927048575665e-4,  -0.98374475304879564677e-4, 0.15808870322491248884e-3,
    -0.21026444172410488319e-3, 0.21743961811521264320e-3,  -0.16431810653676389022e-3,
    0.84418223983852743293e-4,  -0.26190838401581408670e-4, 0.36899182659531622704e-5};

cplx lanczos_lgamma(cplx z) {
  // valid for Re z >= 1/2
  z -= 1.0;
  cplx sum = kLanczos[0];
  for (int k = 1; k < 15; ++k) sum += kLanczos[k] / (z + static_cast<double>(k));
  const cplx t = z + kLanczosG + 0.5;
  return 0.5 * std::log(kTwoPi) + (z + 0.5) * std::log(t) - t + std::log(sum);
}

}  // namespace

cplx lgamma_c(cplx s) {
  require_finite(s, "lgamma");
  if (is_nonpositive_integer(s)) throw PoleError("Gamma has a pole at a nonpositive integer");
  if (s.real() < 0.5) {
    // log Gamma(s) = log pi - log sin(pi s) - log Gamma(1 - s)
    return std::log(kPi) - std::log(std::sin(kPi * s)) - lanczos_lgamma(1.0 - s);
  }
  return lanczos_lgamma(s);
}

cplx gamma_c(cplx s) {
  require_finite(s, "gamma");
  if (is_nonpositive_integer(s)) throw PoleError("Gamma has a pole at a nonpositive integer");
  if (s.imag() == 0.0) return std::tgamma(s.real());
  if (s.real() < 0.5) return kPi / (std::sin(kPi * s) * gamma_c(1.0 - s));
  return std::exp(lanczos_lgamma(s));
}

cplx rgamma_c(cplx s) {
  if (is_nonpositive_integer(s)) return 0.0;
  return 1.0 / gamma_c(s);
}

cplx zeta_c(cplx s) {
  require_finite(s, "zeta");
  if (s == cplx(1.0, 0.0)) throw PoleError("zeta has a pole at s = 1");
  if (s.real() < 0.0) {
    // trivial zeros
    if (s.imag() == 0.0 && std::fmod(s.real(), 2.0) == 0.0) return 0.0;
    // zeta(s) = 2^s pi^(s-1) sin(pi s / 2) Gamma(1-s) zeta(1-s), with the
    // magnitude assembled in log space.
    const cplx lg = s * std::log(2.0) + (s - 1.0) * std::log(kPi) + lgamma_c(1.0 - s);
    return std::exp(lg) * std::sin(0.5 * kPi * s) * zeta_c(1.0 - s);
  }
  if (s.real() > 60.0) return 1.0 + std::pow(2.0, -s) + std::pow(3.0, -s);
  // Borwein, algorithm 2.
  const double t = std::abs(s.imag());
  const int n = std::min(220, 24 + static_cast<int>(std::ceil(1.4 * t)));
  std::vector<double> d(n + 1);
  double term = 1.0 / n;  // (n+i-1)! 4^i / ((n-i)! (2i)!) at i = 0, times 1/n
  double acc = term;
  d[0] = n * acc;
  for (int i = 1; i <= n; ++i) {
    term *= 4.0 * (n + i - 1) * (n - i + 1) / ((2.0 * i - 1) * (2.0 * i));
    acc += term;
    d[i] = n * acc;
  }
  cplx sum = 0.0;
  for (int k = 0; k < n; ++k) {
    const cplx v = (d[k] - d[n]) * std::exp(-s * std::log(static_cast<double>(k + 1)));
    sum += (k % 2 == 0) ? v : -v;
  }
  return -sum / (d[n] * (1.0 - std::exp((1.0 - s) * std::log(2.0))));
}

cplx bessel_k(cplx nu, double x) {
  require_finite(nu, "bessel_k");
  if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("bessel_k requires x > 0");
  if (nu.real() < 0.0) nu = -nu;  // K_{-nu} = K_nu
  if (nu.imag() == 0.0 && nu.real() == 0.5) return std::sqrt(kPi / (2.0 * x)) * std::exp(-x);

  const double vr = nu.real();
  // The log-integrand -x cosh t + vr t peaks at t* = asinh(vr / x).
  const double tstar = std::asinh(vr / x);
  const auto logmag = [&](double t) { return -x * std::cosh(t) + vr * t; };
  const double peak = logmag(tstar);
  // Past t*, the log-integrand is concave; stop once it has dropped by 40.
  double tmax = tstar + 1.0;
  while (logmag(tmax) > peak - 40.0) tmax = tstar + 2.0 * (tmax - tstar);

  const auto f = [&](double t) {
    const double c = -x * std::cosh(t) - peak;
    return 0.5 * (std::exp(nu * t + c) + std::exp(-nu * t + c));
  };
  cplx v = 0.0;
  // Oscillation from Im nu needs enough panels: split at t* and into chunks
  // no wider than about one period.
  const double width = nu.imag() != 0.0 ? std::max(0.25, std::min(2.0, 3.0 / std::abs(nu.imag()))) : 2.0;
  auto run = [&](double a, double b) {
    const int pieces = std::max(1, static_cast<int>(std::ceil((b - a) / width)));
    for (int i = 0; i < pieces; ++i) {
      const double lo = a + (b - a) * i / pieces, hi = a + (b - a) * (i + 1) / pieces;
      v += integrate(f, lo, hi, 1e-14, 1e-17);
    }
  };
  if (tstar > 0.0) run(0.0, tstar);
  run(tstar, tmax);
  return v * std::exp(peak);
}

std::vector<cplx> bessel_k_ladder(cplx nu, double x, int count) {
  std::vector<cplx> out;
  if (count <= 0) return out;
  out.reserve(count);
  out.push_back(bessel_k(nu, x));
  if (count == 1) return out;
  out.push_back(bessel_k(nu + 1.0, x));
  for (int k = 2; k < count; ++k) {
    const cplx v = nu + static_cast<double>(k - 1);
    out.push_back(out[k - 2] + (2.0 * v / x) * out[k - 1]);
  }
  return out;
}

cplx kummer_1f1(cplx a, cplx b, cplx z) {
  require_finite(a, "kummer_1f1");
  require_finite(b, "kummer_1f1");
  require_finite(z, "kummer_1f1");
  if (is_nonpositive_integer(b)) throw DomainError("1F1: b is a nonpositive integer");
  if (std::abs(z) > 100.0) throw DomainError("1F1: |z| > 100 is outside the supported range");
  if (z.real() < 0.0) return std::exp(z) * kummer_1f1(b - a, b, -z);
  cplx term = 1.0, sum = 1.0;
  for (int k = 0; k < 100000; ++k) {
    term *= (a + static_cast<double>(k)) / (b + static_cast<double>(k)) * z / static_cast<double>(k + 1);
    sum += term;
    if (term == cplx(0.0)) break;
    if (k > std::abs(z) && std::abs(term) < 1e-16 * std::abs(sum)) break;
  }
  return sum;
}

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
  if (n < 1) throw DomainError("factorize requires n >= 1");
  std::vector<std::pair<std::int64_t, int>> out;
  for (std::int64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p) continue;
    int e = 0;
    while (n % p == 0) n /= p, ++e;
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::int64_t euler_phi(std::int64_t n) {
  std::int64_t r = n;
  for (auto [p, e] : factorize(n)) r = r / p * (p - 1);
  return r;
}

int mobius(std::int64_t n) {
  int r = 1;
  for (auto [p, e] : factorize(n)) {
    if (e > 1) return 0;
    r = -r;
  }
  return r;
}

std::vector<std::int64_t> phi_table(std::int64_t n) {
  std::vector<std::int64_t> phi(static_cast<std::size_t>(std::max<std::int64_t>(n, 0) + 1));
  std::iota(phi.begin(), phi.end(), std::int64_t{0});
  for (std::int64_t p = 2; p <= n; ++p) {
    if (phi[p] != p) continue;  // composite, already touched
    for (std::int64_t k = p; k <= n; k += p) phi[k] -= phi[k] / p;
  }
  return phi;
}

cplx sigma_w(std::int64_t m, cplx w) {
  if (m < 1) throw DomainError("sigma_w requires m >= 1");
  cplx sum = 0.0;
  for (std::int64_t d = 1; d * d <= m; ++d) {
    if (m % d) continue;
    sum += std::exp(w * std::log(static_cast<double>(d)));
    const std::int64_t e = m / d;
    if (e != d) sum += std::exp(w * std::log(static_cast<double>(e)));
  }
  return sum;
}

std::int64_t ramanujan_sum(std::int64_t c, std::int64_t m) {
  if (c < 1) throw DomainError("ramanujan_sum requires c >= 1");
  if (m == 0) return euler_phi(c);
  const std::int64_t g = std::gcd(c, m < 0 ? -m : m);
  std::int64_t sum = 0;
  for (std::int64_t e = 1; e * e <= g; ++e) {
    if (g % e) continue;
    sum += mobius(c / e) * e;
    if (e * e != g) sum += mobius(c / (g / e)) * (g / e);
  }
  return sum;
}

}  // namespace eisen
