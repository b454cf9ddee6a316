#include "eisen/reps.hpp"

#include <cmath>

#include "eisen/errors.hpp"

namespace eisen {

namespace {

const cplx kZeta6 = std::polar(1.0, kPi / 3.0);

CMatrix mat2(cplx a, cplx b, cplx c, cplx d) {
  CMatrix m(2, 2);
  m << a, b, c, d;
  return m;
}

// log with imaginary part in [0, 2 pi)
cplx log_branch(cplx z) {
  double arg = std::arg(z);
  if (arg < 0.0) arg += kTwoPi;
  return {std::log(std::abs(z)), arg};
}

}  // namespace

Representation::Representation(RepKind kind, CMatrix rho_T, CMatrix rho_S, CMatrix L,
                               std::string tag)
    : kind_(kind),
      rho_T_(std::move(rho_T)),
      rho_S_(std::move(rho_S)),
      L_(std::move(L)),
      tag_(std::move(tag)),
      exp_map_(L_) {
  const auto d = rho_T_.rows();
  if (d < 1 || d > kMaxDim || rho_T_.cols() != d || rho_S_.rows() != d || rho_S_.cols() != d ||
      L_.rows() != d || L_.cols() != d) {
    throw DomainError("representation matrices must be square of equal size <= 4");
  }
  rho_T_inv_ = rho_T_.inverse();
}

CMatrix Representation::rho_T_power(std::int64_t n) const {
  CMatrix base = n >= 0 ? rho_T_ : rho_T_inv_;
  std::uint64_t k = n >= 0 ? static_cast<std::uint64_t>(n) : static_cast<std::uint64_t>(-n);
  CMatrix result = identity(dim());
  while (k) {
    if (k & 1u) result = result * base;
    k >>= 1u;
    if (k) base = base * base;
  }
  return result;
}

bool Representation::rho_T_unitary(double tol) const {
  return (rho_T_ * rho_T_.adjoint() - identity(dim())).norm() < tol;
}

bool Representation::exponents_real_diagonal(double tol) const {
  for (int i = 0; i < dim(); ++i)
    for (int j = 0; j < dim(); ++j) {
      if (i != j && std::abs(L_(i, j)) > tol) return false;
      if (i == j && std::abs(L_(i, j).imag()) > tol) return false;
    }
  return true;
}

CMatrix Representation::evaluate_word(const GeneratorWord& w) const {
  CMatrix m = w.sign > 0 ? identity(dim()) : rho_minus_identity();
  for (const auto& t : w.tokens) {
    if (t.gen == Generator::S) {
      m = m * rho_S_;
    } else {
      m = m * rho_T_power(t.power);
    }
  }
  return m;
}

CMatrix Representation::evaluate(const SL2Matrix& g) const {
  switch (kind_) {
    case RepKind::Trivial:
      return identity(1);
    case RepKind::Inclusion:
      return mat2(static_cast<double>(g.a), static_cast<double>(g.b), static_cast<double>(g.c),
                  static_cast<double>(g.d));
    case RepKind::Eta: {
      const EtaCocycleValue v = eta_cocycle(g);
      return mat2(1.0, 0.0, *eta_lambda_ * v.a.to_complex(), v.chi().to_complex());
    }
    case RepKind::UnitaryDiagonal: {
      // characters of SL2(Z): T -> e(k/12), S -> e(-3k/12), -I -> e(6k/12)
      const GeneratorWord w = decompose_word(g);
      std::int64_t m = w.sign > 0 ? 0 : 6;
      for (const auto& t : w.tokens) m += t.gen == Generator::S ? -3 : t.power % 12;
      m = ((m % 12) + 12) % 12;
      CMatrix out = CMatrix::Zero(dim(), dim());
      for (int i = 0; i < dim(); ++i) {
        const auto k = static_cast<std::int64_t>(std::lround(12.0 * L_(i, i).real()));
        out(i, i) = e_of(static_cast<double>((k * m) % 12) / 12.0);
      }
      return out;
    }
    default:
      return evaluate_word(decompose_word(g));
  }
}

Representation make_trivial() {
  return {RepKind::Trivial, identity(1), identity(1), CMatrix::Zero(1, 1), "trivial"};
}

Representation make_inclusion(std::int64_t n) {
  const cplx nn = static_cast<double>(n);
  return {RepKind::Inclusion, mat2(1.0, 1.0, 0.0, 1.0), mat2(0.0, -1.0, 1.0, 0.0),
          mat2(nn, 1.0 / cplx(0.0, kTwoPi), 0.0, nn), "inclusion(n=" + std::to_string(n) + ")"};
}

Representation make_family_u(cplx u) {
  if (!is_finite(u) || u == cplx(0.0)) throw DomainError("u-family requires finite nonzero u");
  if (u.imag() == 0.0 && u.real() >= 0.0) {
    throw DomainError("u-family exponents are undefined on the branch cut u >= 0");
  }
  const cplx alpha = log_branch(u);
  const cplx delta = log_branch(1.0 / u);
  // With this branch u^2 = exp(alpha - delta), so the upper-right entry
  // (alpha - delta) u^2 / (u^2 - 1) is exp(x) / exprel(x), removable at u = -1.
  const cplx x = alpha - delta;
  const cplx beta = std::exp(x) / exprel(x);
  const cplx k = 1.0 / cplx(0.0, kTwoPi);
  return {RepKind::FamilyU, mat2(u, u, 0.0, 1.0 / u), mat2(0.0, -u, 1.0 / u, 0.0),
          mat2(k * alpha, k * beta, 0.0, k * delta),
          "ufam(u=" + std::to_string(u.real()) + "+" + std::to_string(u.imag()) + "i)"};
}

Representation make_eta_family(cplx lambda) {
  Representation r(RepKind::Eta, mat2(1.0, 0.0, 0.0, kZeta6),
                   mat2(1.0, 0.0, lambda * (1.0 - kZeta6), -1.0), mat2(0.0, 0.0, 0.0, 1.0 / 6.0),
                   "eta");
  r.eta_lambda_ = lambda;
  return r;
}

Representation make_unitary_diagonal(const std::vector<int>& twelfths) {
  const int d = static_cast<int>(twelfths.size());
  if (d < 1 || d > kMaxDim) throw DomainError("unitary diagonal rep needs 1..4 characters");
  CMatrix t = CMatrix::Zero(d, d), s = CMatrix::Zero(d, d), L = CMatrix::Zero(d, d);
  std::string tag = "unitary(";
  for (int i = 0; i < d; ++i) {
    const int k = ((twelfths[i] % 12) + 12) % 12;
    L(i, i) = k / 12.0;
    t(i, i) = e_of(k / 12.0);
    s(i, i) = std::pow(cplx(0.0, -1.0), k);
    tag += (i ? "," : "") + std::to_string(k);
  }
  return {RepKind::UnitaryDiagonal, t, s, L, tag + ")"};
}

Representation conjugate_rep(const Representation& rep, const CMatrix& g) {
  const CMatrix gi = g.inverse();
  return {RepKind::Custom, g * rep.rho_T() * gi, g * rep.rho_S() * gi, g * rep.exponents() * gi,
          "conj(" + rep.tag() + ")"};
}

bool check_pos(const Representation& rep, const CMatrix& h, double tol) {
  if (h.rows() != rep.dim() || h.cols() != rep.dim()) return false;
  if (!is_positive_definite(h, tol)) return false;
  const double scale = std::max(1.0, h.norm());
  const CMatrix m = rep.rho_minus_identity();
  if ((m.transpose() * h * m.conjugate() - h).norm() > tol * scale) return false;
  if (rep.rho_T_unitary()) {
    const CMatrix& t = rep.rho_T();
    if ((t.transpose() * h * t.conjugate() - h).norm() > tol * scale) return false;
  }
  return true;
}

EtaCocycleValue eta_cocycle_word(const GeneratorWord& w) {
  // a(g1 g2) = a(g1) + chi(g1) a(g2); a(T) = 0, chi(T) = zeta6, a(S) = 1 - zeta6,
  // chi(S) = -1; -I contributes nothing.
  static const CyclotomicInt a_S{1, -1};
  EtaCocycleValue v;
  for (const auto& t : w.tokens) {
    if (t.gen == Generator::S) {
      v.a += CyclotomicInt::unit(v.chi_power) * a_S;
      v.chi_power = (v.chi_power + 3) % 6;
    } else {
      v.chi_power = static_cast<int>((((v.chi_power + t.power) % 6) + 6) % 6);
    }
  }
  return v;
}

EtaCocycleValue eta_cocycle(const SL2Matrix& g) { return eta_cocycle_word(decompose_word(g)); }

}  // namespace eisen
