#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "eisen/reps.hpp"
#include "eisen/types.hpp"

namespace eisen {

// Kl(rho, L, c) = sum over 1 <= d <= c, gcd(c, d) = 1 of
//   e(-L d/c) rho(g)^t h conj(rho(g)) e(L d/c),  g = lift_bottom_row(c, d).
// lift_shift replaces g by T^lift_shift g; the sum does not depend on it when
// h is invariant under rho(T).
CMatrix kl_matrix(const Representation& rep, const CMatrix& h, std::int64_t c,
                  std::int64_t lift_shift = 0);

// Same sum with an extra factor e(u d/c) on each term (the twist carried by
// the non-constant Fourier modes). u = 0 reproduces kl_matrix.
CMatrix kl_matrix_twisted(const Representation& rep, const CMatrix& h, std::int64_t c, double u);

// sum over d of e(-L a/c) rho(g) e(-L d/c)
CMatrix km_twisted_sum(const Representation& rep, std::int64_t c);

// Exact a_c and floating b_c for the eta family.
struct ABValue {
  std::int64_t c = 0;
  std::int64_t a = 0;
  cplx b;
  std::int64_t phi = 0;
  double b_error = 0.0;  // bound on the rounding error of b
};

ABValue ab_sequence(std::int64_t c);
std::vector<ABValue> ab_scan(std::int64_t c_min, std::int64_t c_max);

// Kl(c) rebuilt from (a_c, b_c): diag(lambda, 1) [[a, b], [conj b, 0]]
// diag(conj lambda, 1) A + phi(c) diag(1, A).
CMatrix kl_from_ab(const ABValue& v, cplx lambda, double A);

struct DirichletPartial {
  cplx s;
  std::int64_t c_max = 0;
  CMatrix value;
  double tail_estimate = 0.0;
};

// sum_{c <= c_max} Kl(c) / c^s, summed in ascending c. The tail estimate
// extrapolates the last decade's term sizes as a power law; it is +inf when
// the fitted exponent is above -1.1.
DirichletPartial dirichlet_partial(const Representation& rep, const CMatrix& h, cplx s,
                                   std::int64_t c_max);

struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  double residual = 0.0;  // root-mean-square residual
};

// Two models for log(a_c / phi(c)): eps * log c + const, and
// log(log c) + const (for the log model the reported slope multiplies log log c).
struct GrowthFit {
  std::size_t samples = 0;
  LinearFit power;  // slope = eps
  LinearFit log;    // slope ~ 1 when a_c ~ C phi(c) log c
  double log_constant = 0.0;  // exp(log.intercept)
};

GrowthFit growth_fit(const std::vector<std::pair<std::int64_t, std::int64_t>>& c_and_a);

// Checkpoint CSV with header c,a_c,b_re,b_im,abs_b,phi_c (plus
// a_over_phi,absb_over_phi when normalized).
std::string checkpoint_header(bool normalized);
std::string checkpoint_row(const ABValue& v, bool normalized);
// Rows already present in an existing checkpoint, keyed by c. A truncated
// final line is ignored. Throws DomainError on a foreign header.
std::vector<ABValue> read_checkpoint(const std::string& path, bool normalized);

}  // namespace eisen
