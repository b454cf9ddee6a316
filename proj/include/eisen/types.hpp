#pragma once

#include <complex>
#include <numbers>

#include <Eigen/Dense>

namespace eisen {

using cplx = std::complex<double>;

// Representations handled here have dimension at most kMaxDim; the bound keeps
// every matrix on the stack.
inline constexpr int kMaxDim = 4;
using CMatrix = Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::ColMajor, kMaxDim, kMaxDim>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;
inline constexpr cplx kI{0.0, 1.0};

// e(z) = exp(2 pi i z)
inline cplx e_of(cplx z) { return std::exp(cplx(0.0, kTwoPi) * z); }
inline cplx e_of(double t) { return std::polar(1.0, kTwoPi * t); }

inline bool is_finite(cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

inline double frobenius(const CMatrix& m) { return m.norm(); }

inline double hermitian_defect(const CMatrix& m) { return (m - m.adjoint()).norm(); }

inline CMatrix identity(int d) { return CMatrix::Identity(d, d); }

}  // namespace eisen
