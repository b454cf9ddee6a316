#include "eisen/harmonic.hpp"

#include <cmath>

#include "eisen/eisenstein.hpp"
#include "eisen/errors.hpp"
#include "eisen/linalg.hpp"

namespace eisen {

CMatrix geodesic_metric(cplx tau) {
  if (!(tau.imag() > 0.0)) throw DomainError("tau must lie in the upper half-plane");
  const double x = tau.real(), y = tau.imag();
  CMatrix m(2, 2);
  m << 1.0, -x, -x, x * x + y * y;
  return m / y;
}

MetricFunction geodesic_metric_function() { return {geodesic_metric, 2, "closed-form"}; }

MetricFunction residue_metric_function() { return {inclusion_residue, 2, "residue"}; }

MetricFunction constant_metric_function(const CMatrix& m) {
  return {[m](cplx) { return m; }, static_cast<int>(m.rows()), "closed-form"};
}

double invariance_residual(const MetricFunction& metric, const Representation& rep,
                           const SL2Matrix& g, cplx tau) {
  const CMatrix r = rep.evaluate(g);
  return (r.transpose() * metric(g.act(tau)) * r.conjugate() - metric(tau)).norm();
}

namespace {

struct Wirtinger {
  CMatrix d, dbar;
};

// Central-difference Wirtinger derivatives d = (dx - i dy)/2, dbar = (dx + i dy)/2.
template <class F>
Wirtinger wirtinger(F&& f, cplx tau, double h) {
  const CMatrix fx = (f(tau + h) - f(tau - h)) / (2.0 * h);
  const CMatrix fy = (f(tau + cplx(0, h)) - f(tau - cplx(0, h))) / (2.0 * h);
  return {0.5 * (fx - kI * fy), 0.5 * (fx + kI * fy)};
}

}  // namespace

double harmonicity_residual(const MetricFunction& metric, cplx tau, double step) {
  if (!(step > 0.0)) throw DomainError("step must be positive");
  if (!(tau.imag() - 2.0 * step > 0.0)) throw DomainError("stencil leaves the upper half-plane");
  const auto H = [&](cplx t) {
    const CMatrix m = metric(t);
    const Eigen::MatrixXcd dense = m;
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(dense);
    const auto& sv = svd.singularValues();
    if (sv.size() == 0 || !(sv(sv.size() - 1) > 1e-12 * sv(0))) {
      throw ConditioningError("metric is numerically singular at a stencil point");
    }
    return m;
  };
  const auto B = [&](cplx t) {
    const Wirtinger w = wirtinger(H, t, step);
    return CMatrix(H(t).inverse() * w.dbar);
  };
  const Wirtinger wh = wirtinger(H, tau, step);
  const CMatrix Hinv = H(tau).inverse();
  const CMatrix A = Hinv * wh.d, Bt = Hinv * wh.dbar;
  const CMatrix dB = wirtinger(B, tau, step).d;
  return (dB - 0.5 * (Bt * A - A * Bt)).norm();
}

MetricFunction conjugate_metric(const MetricFunction& metric, const CMatrix& g) {
  auto inner = metric.eval;
  return {[inner, g](cplx t) { return CMatrix(g.transpose() * inner(t) * g.conjugate()); }, metric.dim,
          metric.tag};
}

TamenessFit tameness_fit(const MetricFunction& metric, const CMatrix& L,
                         const std::vector<double>& y_grid, double x) {
  if (y_grid.size() < 5) throw DomainError("tameness_fit needs at least 5 grid points");
  for (std::size_t i = 1; i < y_grid.size(); ++i) {
    if (!(y_grid[i] > y_grid[i - 1])) throw DomainError("y_grid must be ascending");
  }
  if (!(y_grid.front() > 0.0)) throw DomainError("y_grid must be positive");
  const ExponentMap E(L);
  const ExponentMap Et(L.transpose());
  std::vector<double> lx, ly;
  for (double y : y_grid) {
    const cplx tau(x, y);
    const CMatrix v = Et(tau) * metric(tau) * E(tau).conjugate();
    lx.push_back(std::log(y));
    ly.push_back(std::log(v.norm()));
  }
  const double n = static_cast<double>(lx.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    sx += lx[i], sy += ly[i], sxx += lx[i] * lx[i], sxy += lx[i] * ly[i];
  }
  TamenessFit f;
  f.N = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  const double icpt = (sy - f.N * sx) / n;
  f.C = std::exp(icpt);
  double rss = 0;
  for (std::size_t i = 0; i < lx.size(); ++i) {
    const double r = ly[i] - f.N * lx[i] - icpt;
    rss += r * r;
  }
  f.residual = std::sqrt(rss / n);
  return f;
}

}  // namespace eisen
