#pragma once

#include <array>
#include <cmath>
#include <complex>

namespace eisen {

namespace gk15 {
inline constexpr std::array<double, 8> xk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> wk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
// Gauss weights for the odd-indexed Kronrod nodes xk[1], xk[3], xk[5], xk[7].
inline constexpr std::array<double, 4> wg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};
}  // namespace gk15

inline double magnitude(double v) { return std::abs(v); }
inline double magnitude(const std::complex<double>& v) { return std::abs(v); }

template <class F>
auto gk15_rule(F& f, double a, double b, double& err) -> decltype(f(a)) {
  using R = decltype(f(a));
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  const R fc = f(c);
  R kron = fc * gk15::wk[7];
  R gauss = fc * gk15::wg[3];
  for (int j = 0; j < 7; ++j) {
    const double dx = h * gk15::xk[j];
    const R s = f(c - dx) + f(c + dx);
    kron += s * gk15::wk[j];
    if (j % 2 == 1) gauss += s * gk15::wg[j / 2];
  }
  err = magnitude((kron - gauss) * h);
  return kron * h;
}

namespace detail {
template <class F, class R>
R gk_adapt(F& f, double a, double b, R whole, double err, double abs_tol, int depth, int& evals) {
  if (err <= abs_tol || depth <= 0 || evals > 200000) return whole;
  const double m = 0.5 * (a + b);
  double el = 0, er = 0;
  const R left = gk15_rule(f, a, m, el);
  const R right = gk15_rule(f, m, b, er);
  evals += 30;
  if (el + er <= abs_tol) return left + right;
  return gk_adapt(f, a, m, left, el, 0.5 * abs_tol, depth - 1, evals) +
         gk_adapt(f, m, b, right, er, 0.5 * abs_tol, depth - 1, evals);
}
}  // namespace detail

// Adaptive Gauss-Kronrod (7/15) on [a, b]. The local acceptance threshold is
// max(abs_tol, rel_tol * |first estimate|), halved on each bisection.
template <class F>
auto integrate(F&& f, double a, double b, double rel_tol, double abs_tol = 0.0,
               int max_depth = 40) -> decltype(f(a)) {
  double err = 0;
  const auto whole = gk15_rule(f, a, b, err);
  const double tol = std::max(abs_tol, rel_tol * magnitude(whole));
  int evals = 15;
  return detail::gk_adapt(f, a, b, whole, err, tol, max_depth, evals);
}

}  // namespace eisen
