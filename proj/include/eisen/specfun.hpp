#pragma once

#include <cstdint>
#include <vector>

#include "eisen/types.hpp"

namespace eisen {

// Complex Gamma. Real arguments go through std::tgamma; complex ones use a
// Lanczos sum with reflection for Re s < 1/2.
cplx gamma_c(cplx s);
// 1 / Gamma(s); zero at the poles instead of throwing.
cplx rgamma_c(cplx s);
// log Gamma on any branch; only its real part and exp() are meaningful.
cplx lgamma_c(cplx s);

// Riemann zeta. Borwein's accelerated alternating series for Re s >= 0, the
// functional equation otherwise.
cplx zeta_c(cplx s);

// K_nu(x) = int_0^inf exp(-x cosh t) cosh(nu t) dt for x > 0.
cplx bessel_k(cplx nu, double x);
// K_{nu}, K_{nu+1}, ..., K_{nu+count-1} at x: two quadratures, then the
// upward recurrence K_{v+1} = K_{v-1} + (2v/x) K_v.
std::vector<cplx> bessel_k_ladder(cplx nu, double x, int count);

// Confluent hypergeometric 1F1(a; b; z), |z| <= 100.
cplx kummer_1f1(cplx a, cplx b, cplx z);

// sum over d | m of d^w
cplx sigma_w(std::int64_t m, cplx w);

std::int64_t ramanujan_sum(std::int64_t c, std::int64_t m);
std::int64_t euler_phi(std::int64_t n);
int mobius(std::int64_t n);

// Prime factorization by trial division: (p, e) pairs in increasing p.
std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n);

// Sieve of phi(1..n); index 0 unused.
std::vector<std::int64_t> phi_table(std::int64_t n);

}  // namespace eisen
