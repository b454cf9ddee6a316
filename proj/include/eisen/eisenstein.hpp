#pragma once

#include <cstdint>
#include <string>

#include "eisen/reps.hpp"
#include "eisen/types.hpp"

namespace eisen {

struct TruncationSpec {
  std::int64_t c_max = 2000;
  std::int64_t d_window = 10000;  // |d| bound for direct sums
  int m_max = 20;                 // Fourier modes
  int k_max = 128;                // cap on the k-series; it exits early once converged
  double tol = 1e-12;             // relative stopping tolerance for adaptive series

  static TruncationSpec for_c_max(std::int64_t c_max) {
    TruncationSpec t;
    t.c_max = c_max;
    t.d_window = 5 * c_max;
    return t;
  }
};

enum class Method { Direct, FourierInclusion, FourierUnitary, Classical, Residue };
std::string method_name(Method m);

struct MetricSample {
  cplx tau;
  cplx s;
  CMatrix value;
  Method method = Method::Direct;
  TruncationSpec trunc;
  double error_estimate = 0.0;
};

// h(tau) = e(-L tau)^t h conj(e(-L tau))
CMatrix h_of_tau(const Representation& rep, const CMatrix& h, cplx tau);

// Truncated coset sum of rho(g)^t h(g tau) conj(rho(g)) Im(g tau)^s over the
// identity coset and 1 <= c <= c_max, |d| <= d_window. Throws
// ConvergenceError when the last doubling in c (or in |d|) does not shrink.
MetricSample direct_sum(const Representation& rep, const CMatrix& h, cplx tau, cplx s,
                        const TruncationSpec& trunc);

// g(m, y, s) = y^s int [[1, r - iy], [r + iy, r^2 + y^2]] e(-m r) / (r^2 + y^2)^s dr
CMatrix g_fourier(std::int64_t m, double y, cplx s);

// Scattering coefficient of E(tau, s + 1) in the form
// pi^(2s+1) Gamma(-s) zeta(-2s) / (Gamma(s+1) zeta(2s+2)); undefined at integers.
cplx scattering_literal(cplx s);
// The same coefficient after the functional equation:
// sqrt(pi) Gamma(s + 1/2) zeta(2s + 1) / (Gamma(s + 1) zeta(2s + 2)).
cplx scattering_stable(cplx s);

// Fourier expansion of the inclusion-representation metric with exponent
// L = n + (2 pi i)^{-1} N and h = I, in the same convention as
// direct_sum(make_inclusion(n), I, ...). Valid for Re s > 3/2 with a simple
// pole at s = 2.
MetricSample inclusion_fourier(cplx tau, cplx s, std::int64_t n, const TruncationSpec& trunc);

// (3 / (2 pi y)) [[1, -x], [-x, x^2 + y^2]]
CMatrix inclusion_residue(cplx tau);

// Real-analytic Eisenstein series y^s + sum over coprime (c, d), c >= 1.
cplx classical_E(cplx tau, cplx s, double tol = 1e-13);

struct ConstantTerm {
  CMatrix C;   // with the 1F1(s - 1/2, s, 4 pi L / (c^2 y)) factor
  CMatrix C0;  // 1F1 replaced by 1
};

// Constant-term c-sums for diagonal real L, built from the twisted
// Kloosterman sums e(-L d/c) rho^t X h conj(rho) e(L d/c).
ConstantTerm unitary_constant_term(const Representation& rep, const CMatrix& h, cplx tau, cplx s,
                                   std::int64_t c_max);

// Fourier expansion for reps with rho(T) unitary and L real diagonal. Entries
// with e_i - e_j a nonzero integer are rejected unless allow_integral_differences.
MetricSample unitary_fourier(const Representation& rep, const CMatrix& h, cplx tau, cplx s,
                             const TruncationSpec& trunc, bool allow_integral_differences = false);

}  // namespace eisen
