#pragma once

#include <functional>
#include <string>
#include <vector>

#include "eisen/reps.hpp"
#include "eisen/sl2z.hpp"
#include "eisen/types.hpp"

namespace eisen {

// A metric tau -> H(tau). Providers must be safe to call concurrently.
struct MetricFunction {
  std::function<CMatrix(cplx)> eval;
  int dim = 0;
  std::string tag;  // closed-form | truncated-series | residue

  CMatrix operator()(cplx tau) const { return eval(tau); }
};

// K(tau) = (1/y) [[1, -x], [-x, x^2 + y^2]]
CMatrix geodesic_metric(cplx tau);
MetricFunction geodesic_metric_function();
MetricFunction residue_metric_function();
MetricFunction constant_metric_function(const CMatrix& m);

// || rho(g)^t H(g tau) conj(rho(g)) - H(tau) ||_F
double invariance_residual(const MetricFunction& metric, const Representation& rep,
                           const SL2Matrix& g, cplx tau);

// || d(H^{-1} dbar H) - (1/2) [H^{-1} dbar H, H^{-1} d H] ||_F with Wirtinger
// derivatives taken by central differences of width `step`.
double harmonicity_residual(const MetricFunction& metric, cplx tau, double step = 1e-3);

// tau -> g^t H(tau) conj(g)
MetricFunction conjugate_metric(const MetricFunction& metric, const CMatrix& g);

struct TamenessFit {
  double C = 0.0;  // exp(intercept)
  double N = 0.0;  // slope in log y
  double residual = 0.0;
};

// Least squares of log ||e(L^t tau) H(tau) conj(e(L tau))|| against log y at
// tau = x + i y for y in y_grid.
TamenessFit tameness_fit(const MetricFunction& metric, const CMatrix& L,
                         const std::vector<double>& y_grid, double x);

}  // namespace eisen
