#include <cmath>

#include "eisen/errors.hpp"
#include "eisen/quadrature.hpp"
#include "eisen/reps.hpp"

namespace eisen {

cplx eta_fourth_series(cplx tau) {
  if (!(tau.imag() > 0.0)) throw DomainError("eta: tau must lie in the upper half-plane");
  const cplx q = e_of(tau);
  const double aq = std::abs(q);
  cplx prod = 1.0, qn = q;
  // Stop once |q^n| no longer changes the product at double precision.
  for (int n = 1; n < 100000 && std::pow(aq, n) > 1e-18; ++n) {
    const cplx f = 1.0 - qn;
    prod *= (f * f) * (f * f);
    qn *= q;
  }
  return e_of(tau / 6.0) * prod;
}

cplx eta_fourth(cplx tau) {
  if (!(tau.imag() > 0.0)) throw DomainError("eta: tau must lie in the upper half-plane");
  // Move tau into the standard fundamental domain, tracking g with tau' = g tau,
  // then undo with eta^4(g tau) = chi(g) (c tau + d)^2 eta^4(tau).
  SL2Matrix g = SL2Matrix::identity();
  cplx t = tau;
  for (int iter = 0; iter < 10000; ++iter) {
    const double shift = std::round(t.real());
    if (shift != 0.0) {
      t -= shift;
      g = SL2Matrix::T(-static_cast<std::int64_t>(shift)) * g;
    }
    if (std::norm(t) >= 1.0 - 1e-15) break;
    t = -1.0 / t;
    g = SL2Matrix::S() * g;
  }
  const EtaCocycleValue v = eta_cocycle(g);
  const cplx j = g.automorphy(tau);
  return eta_fourth_series(t) / (v.chi().to_complex() * j * j);
}

cplx kappa_numeric(const SL2Matrix& g, cplx alpha, cplx z) {
  if (!(z.imag() > 0.0)) throw DomainError("kappa: z must lie in the upper half-plane");
  const cplx w = g.act(z);
  const cplx dir = w - z;
  if (std::abs(dir) < 1e-15 * std::max(1.0, std::abs(z))) return 0.0;
  const auto f = [&](double t) { return eta_fourth(z + t * dir); };
  return alpha * dir * integrate(f, 0.0, 1.0, 1e-12, 1e-14);
}

}  // namespace eisen
