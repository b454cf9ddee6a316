#pragma once

#include <optional>
#include <string>
#include <vector>

#include "eisen/cyclotomic.hpp"
#include "eisen/linalg.hpp"
#include "eisen/sl2z.hpp"
#include "eisen/types.hpp"

namespace eisen {

enum class RepKind { Trivial, Inclusion, UnitaryDiagonal, FamilyU, Eta, Custom };

// A representation of SL2(Z) given by the images of T and S, together with an
// exponent matrix L satisfying exp(2 pi i L) = rho(T).
class Representation {
 public:
  Representation(RepKind kind, CMatrix rho_T, CMatrix rho_S, CMatrix L, std::string tag);

  RepKind kind() const { return kind_; }
  int dim() const { return static_cast<int>(rho_T_.rows()); }
  const CMatrix& rho_T() const { return rho_T_; }
  const CMatrix& rho_S() const { return rho_S_; }
  const CMatrix& rho_T_inverse() const { return rho_T_inv_; }
  const CMatrix& exponents() const { return L_; }
  const std::string& tag() const { return tag_; }
  const ExponentMap& exponent_map() const { return exp_map_; }

  CMatrix rho_T_power(std::int64_t n) const;
  CMatrix rho_minus_identity() const { return rho_S_ * rho_S_; }
  bool rho_T_unitary(double tol = 1e-12) const;
  bool exponents_real_diagonal(double tol = 1e-14) const;

  // rho(g). Inclusion, trivial and eta-family representations use closed
  // forms, characters reduce to a phase count; every other kind folds the
  // generator word of g.
  CMatrix evaluate(const SL2Matrix& g) const;
  CMatrix evaluate_word(const GeneratorWord& w) const;

  // Parameter of the eta family (lower-left of psi(S) is lambda * (1 - zeta6)).
  std::optional<cplx> eta_lambda() const { return eta_lambda_; }

 private:
  RepKind kind_;
  CMatrix rho_T_, rho_S_, rho_T_inv_, L_;
  std::string tag_;
  ExponentMap exp_map_;
  std::optional<cplx> eta_lambda_;

  friend Representation make_eta_family(cplx lambda);
};

Representation make_trivial();
// Inclusion SL2(Z) -> GL2(C) with L = [[n, 1/(2 pi i)], [0, n]].
Representation make_inclusion(std::int64_t n);
// rho(T) = [[u, u], [0, 1/u]], rho(S) = [[0, -u], [1/u, 0]]; log branch with
// imaginary part in [0, 2 pi). u must not lie on [0, inf).
Representation make_family_u(cplx u);
// psi(T) = diag(1, zeta6), psi(S) = [[1, 0], [lambda (1 - zeta6), -1]], L = diag(0, 1/6).
Representation make_eta_family(cplx lambda);
// Direct sum of the characters chi_k: T -> e(k/12), S -> (-i)^k.
Representation make_unitary_diagonal(const std::vector<int>& twelfths);
// g rho g^{-1} with exponents g L g^{-1}.
Representation conjugate_rep(const Representation& rep, const CMatrix& g);

// Pos(rho): positive definite, invariant under rho(-I); when rho(T) is unitary
// the cusp condition rho(T)^t h conj(rho(T)) = h is also required.
bool check_pos(const Representation& rep, const CMatrix& h, double tol = 1e-10);

// psi(gamma) = [[1, 0], [lambda a(gamma), chi(gamma)]] for the eta family.
struct EtaCocycleValue {
  CyclotomicInt a;
  int chi_power = 0;  // chi = zeta6^chi_power, 0 <= chi_power < 6

  CyclotomicInt chi() const { return CyclotomicInt::unit(chi_power); }
  friend bool operator==(const EtaCocycleValue&, const EtaCocycleValue&) = default;
};

EtaCocycleValue eta_cocycle(const SL2Matrix& g);
EtaCocycleValue eta_cocycle_word(const GeneratorWord& w);

// eta(tau)^4, reduced to the fundamental domain first and then summed as a
// q-product.
cplx eta_fourth(cplx tau);
// Unreduced q-product q^{1/6} prod (1 - q^n)^4.
cplx eta_fourth_series(cplx tau);

// integral of alpha * eta^4 along the segment from z to g z.
cplx kappa_numeric(const SL2Matrix& g, cplx alpha, cplx z);

}  // namespace eisen
