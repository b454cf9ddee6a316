#include "eisen/linalg.hpp"

#include <unsupported/Eigen/MatrixFunctions>

namespace eisen {

CMatrix expm(const CMatrix& m) {
  const Eigen::MatrixXcd full = m;
  const Eigen::MatrixXcd r = full.exp();
  return r;
}

cplx exprel(cplx x) {
  if (std::abs(x) < 1e-4) {
    return 1.0 + x / 2.0 + x * x / 6.0 + x * x * x / 24.0;
  }
  return (std::exp(x) - 1.0) / x;
}

ExponentMap::ExponentMap(const CMatrix& L) : L_(L) {
  const int d = static_cast<int>(L.rows());
  bool diag = true;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      if (i != j && L(i, j) != cplx(0.0)) diag = false;
  if (diag) {
    kind_ = Kind::Diagonal;
  } else if (d == 2 && L(1, 0) == cplx(0.0)) {
    kind_ = Kind::UpperTriangular2;
  } else {
    kind_ = Kind::General;
  }
}

CMatrix ExponentMap::operator()(cplx z) const {
  const int d = dim();
  const cplx f = cplx(0.0, kTwoPi) * z;
  switch (kind_) {
    case Kind::Diagonal: {
      CMatrix r = CMatrix::Zero(d, d);
      for (int i = 0; i < d; ++i) r(i, i) = std::exp(f * L_(i, i));
      return r;
    }
    case Kind::UpperTriangular2: {
      const cplx al = f * L_(0, 0), de = f * L_(1, 1), be = f * L_(0, 1);
      const cplx ed = std::exp(de);
      CMatrix r(2, 2);
      r(0, 0) = std::exp(al);
      r(0, 1) = be * ed * exprel(al - de);
      r(1, 0) = 0.0;
      r(1, 1) = ed;
      return r;
    }
    case Kind::General:
      break;
  }
  return expm(f * L_);
}

double min_eigenvalue(const CMatrix& m) {
  const Eigen::MatrixXcd herm = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(herm, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

bool is_positive_definite(const CMatrix& m, double tol) {
  if (m.rows() != m.cols() || m.rows() == 0) return false;
  const double scale = std::max(1.0, m.norm());
  if (hermitian_defect(m) > tol * scale) return false;
  return min_eigenvalue(m) > tol * scale;
}

}  // namespace eisen
