#pragma once

#include "eisen/types.hpp"

namespace eisen {

// Matrix exponential (Pade scaling and squaring).
CMatrix expm(const CMatrix& m);

// Evaluates z -> e(z L) = exp(2 pi i z L) for a fixed exponent matrix L.
// Diagonal and 2x2 upper-triangular L use closed forms; anything else goes
// through expm.
class ExponentMap {
 public:
  ExponentMap() = default;
  explicit ExponentMap(const CMatrix& L);

  CMatrix operator()(cplx z) const;
  int dim() const { return static_cast<int>(L_.rows()); }
  bool diagonal() const { return kind_ == Kind::Diagonal; }

 private:
  enum class Kind { Diagonal, UpperTriangular2, General };
  CMatrix L_;
  Kind kind_ = Kind::General;
};

// True iff m is Hermitian to tol and all eigenvalues exceed tol * ||m||.
bool is_positive_definite(const CMatrix& m, double tol = 1e-12);

// Smallest eigenvalue of a Hermitian matrix.
double min_eigenvalue(const CMatrix& m);

// (exp(x) - 1) / x, stable near 0.
cplx exprel(cplx x);

}  // namespace eisen
