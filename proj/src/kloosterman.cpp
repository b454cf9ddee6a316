#include "eisen/kloosterman.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>

#include "eisen/errors.hpp"
#include "eisen/parallel.hpp"
#include "eisen/sl2z.hpp"
#include "eisen/specfun.hpp"

namespace eisen {

namespace {

// Neumaier-compensated complex accumulator.
struct CompensatedSum {
  double re = 0, im = 0, cre = 0, cim = 0;
  static void add(double& s, double& c, double x) {
    const double t = s + x;
    c += std::abs(s) >= std::abs(x) ? (s - t) + x : (x - t) + s;
    s = t;
  }
  void operator+=(cplx z) {
    add(re, cre, z.real());
    add(im, cim, z.imag());
  }
  cplx value() const { return {re + cre, im + cim}; }
};

void require_pos(const Representation& rep, const CMatrix& h) {
  if (!check_pos(rep, h)) throw DomainError("h is not in Pos(rho) for " + rep.tag());
}

// e(-L t) conjugation factors for the Kloosterman twist.
struct Twist {
  CMatrix left, right;  // e(-L t), e(L t)
};

Twist twist(const Representation& rep, double t) {
  return {rep.exponent_map()(cplx(-t)), rep.exponent_map()(cplx(t))};
}

}  // namespace

CMatrix kl_matrix_twisted(const Representation& rep, const CMatrix& h, std::int64_t c, double u) {
  if (c < 1) throw DomainError("Kloosterman sums need c >= 1");
  require_pos(rep, h);
  CMatrix sum = CMatrix::Zero(rep.dim(), rep.dim());
  for (std::int64_t d = 1; d <= c; ++d) {
    if (gcd64(c, d) != 1) continue;
    const double t = static_cast<double>(d) / static_cast<double>(c);
    const CMatrix r = rep.evaluate(lift_bottom_row(c, d));
    const Twist tw = twist(rep, t);
    CMatrix term = tw.left * r.transpose() * h * r.conjugate() * tw.right;
    if (u != 0.0) term *= e_of(u * t);
    sum += term;
  }
  return sum;
}

CMatrix kl_matrix(const Representation& rep, const CMatrix& h, std::int64_t c,
                  std::int64_t lift_shift) {
  if (c < 1) throw DomainError("Kloosterman sums need c >= 1");
  require_pos(rep, h);
  CMatrix sum = CMatrix::Zero(rep.dim(), rep.dim());
  const SL2Matrix shift = SL2Matrix::T(lift_shift);
  for (std::int64_t d = 1; d <= c; ++d) {
    if (gcd64(c, d) != 1) continue;
    const SL2Matrix g = shift * lift_bottom_row(c, d);
    const CMatrix r = rep.evaluate(g);
    const Twist tw = twist(rep, static_cast<double>(d) / static_cast<double>(c));
    sum += tw.left * r.transpose() * h * r.conjugate() * tw.right;
  }
  return sum;
}

CMatrix km_twisted_sum(const Representation& rep, std::int64_t c) {
  if (c < 1) throw DomainError("Kloosterman sums need c >= 1");
  CMatrix sum = CMatrix::Zero(rep.dim(), rep.dim());
  for (std::int64_t d = 1; d <= c; ++d) {
    if (gcd64(c, d) != 1) continue;
    const SL2Matrix g = lift_bottom_row(c, d);
    const double cc = static_cast<double>(c);
    sum += rep.exponent_map()(cplx(-static_cast<double>(g.a) / cc)) * rep.evaluate(g) *
           rep.exponent_map()(cplx(-static_cast<double>(d) / cc));
  }
  return sum;
}

ABValue ab_sequence(std::int64_t c) {
  if (c < 1) throw DomainError("ab_sequence needs c >= 1");
  ABValue v;
  v.c = c;
  CompensatedSum b;
  double max_term = 0.0;
  for (std::int64_t d = 1; d <= c; ++d) {
    if (gcd64(c, d) != 1) continue;
    ++v.phi;
    const EtaCocycleValue e = eta_cocycle(lift_bottom_row(c, d));
    v.a += e.a.norm();
    // a(g) conj(chi(g)) is exact in Z[zeta6]; only the omega^d factor rounds.
    const CyclotomicInt exact = e.a * CyclotomicInt::unit(6 - e.chi_power);
    if (exact.x == 0 && exact.y == 0) continue;
    const cplx term = exact.to_complex() * e_of(static_cast<double>(d) / (6.0 * c));
    max_term = std::max(max_term, std::abs(term));
    b += term;
  }
  v.b = b.value();
  v.b_error = 8.0 * std::numeric_limits<double>::epsilon() * max_term * static_cast<double>(v.phi);
  return v;
}

std::vector<ABValue> ab_scan(std::int64_t c_min, std::int64_t c_max) {
  if (c_min < 1 || c_max < c_min) throw DomainError("ab_scan needs 1 <= c_min <= c_max");
  std::vector<ABValue> out(static_cast<std::size_t>(c_max - c_min + 1));
  // Largest c first so the long rows do not end up alone at the tail.
  const std::int64_t n = c_max - c_min + 1;
  parallel_for(n, [&](std::int64_t i) {
    const std::int64_t c = c_max - i;
    out[static_cast<std::size_t>(c - c_min)] = ab_sequence(c);
  });
  return out;
}

CMatrix kl_from_ab(const ABValue& v, cplx lambda, double A) {
  CMatrix m(2, 2);
  m << std::norm(lambda) * static_cast<double>(v.a), lambda * v.b, std::conj(lambda * v.b), 0.0;
  m *= A;
  m(0, 0) += static_cast<double>(v.phi);
  m(1, 1) += static_cast<double>(v.phi) * A;
  return m;
}

DirichletPartial dirichlet_partial(const Representation& rep, const CMatrix& h, cplx s,
                                   std::int64_t c_max) {
  if (c_max < 1) throw DomainError("dirichlet_partial needs c_max >= 1");
  require_pos(rep, h);
  std::vector<CMatrix> terms(static_cast<std::size_t>(c_max));
  parallel_for(c_max, [&](std::int64_t i) {
    const std::int64_t c = i + 1;
    terms[i] = kl_matrix(rep, h, c) * std::exp(-s * std::log(static_cast<double>(c)));
  });
  DirichletPartial out;
  out.s = s;
  out.c_max = c_max;
  out.value = CMatrix::Zero(rep.dim(), rep.dim());
  for (const auto& t : terms) out.value += t;

  // Power-law fit of the term norms over the last decade (c > c_max / 10).
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int n = 0;
  for (std::int64_t c = std::max<std::int64_t>(1, c_max / 10 + 1); c <= c_max; ++c) {
    const double norm = terms[c - 1].norm();
    if (norm <= 0.0) continue;
    const double lx = std::log(static_cast<double>(c)), ly = std::log(norm);
    sx += lx, sy += ly, sxx += lx * lx, sxy += lx * ly, ++n;
  }
  if (n >= 3 && sxx * n - sx * sx > 0) {
    const double p = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    const double a = (sy - p * sx) / n;
    const double C = static_cast<double>(c_max);
    // a fitted exponent this close to -1 cannot tell a convergent tail from a
    // divergent one
    out.tail_estimate = p < -1.1 ? std::exp(a) * std::pow(C, p + 1.0) / (-p - 1.0)
                                 : std::numeric_limits<double>::infinity();
  } else {
    out.tail_estimate = std::numeric_limits<double>::quiet_NaN();
  }
  return out;
}

namespace {

LinearFit least_squares(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i], sy += y[i], sxx += x[i] * x[i], sxy += x[i] * y[i];
  }
  LinearFit f;
  const double den = n * sxx - sx * sx;
  f.slope = den != 0.0 ? (n * sxy - sx * sy) / den : 0.0;
  f.intercept = (sy - f.slope * sx) / n;
  double rss = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double r = y[i] - f.slope * x[i] - f.intercept;
    rss += r * r;
  }
  f.residual = std::sqrt(rss / n);
  return f;
}

}  // namespace

GrowthFit growth_fit(const std::vector<std::pair<std::int64_t, std::int64_t>>& c_and_a) {
  if (c_and_a.size() < 20) throw DomainError("growth_fit needs at least 20 samples");
  std::vector<double> logc, loglogc, y;
  for (auto [c, a] : c_and_a) {
    if (a <= 0 || c < 3) continue;  // log log c needs c > e
    logc.push_back(std::log(static_cast<double>(c)));
    loglogc.push_back(std::log(logc.back()));
    y.push_back(std::log(static_cast<double>(a) / static_cast<double>(euler_phi(c))));
  }
  if (y.size() < 2) throw DomainError("growth_fit: no usable nonzero samples");
  GrowthFit g;
  g.samples = y.size();
  g.power = least_squares(logc, y);
  g.log = least_squares(loglogc, y);
  g.log_constant = std::exp(g.log.intercept);
  return g;
}

std::string checkpoint_header(bool normalized) {
  return normalized ? "c,a_c,b_re,b_im,abs_b,phi_c,a_over_phi,absb_over_phi"
                    : "c,a_c,b_re,b_im,abs_b,phi_c";
}

namespace {

// Shortest round-trip decimal, with ".0" on integral values so every float
// column reads as a float.
std::string shortest(double x) {
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof buf, x);
  std::string s(buf, r.ptr);
  if (std::isfinite(x) && s.find_first_of(".en") == std::string::npos) s += ".0";
  return s;
}

}  // namespace

std::string checkpoint_row(const ABValue& v, bool normalized) {
  std::ostringstream os;
  os << v.c << ',' << v.a << ',' << shortest(v.b.real()) << ',' << shortest(v.b.imag()) << ','
     << shortest(std::abs(v.b)) << ',' << v.phi;
  if (normalized) {
    os << ',' << shortest(static_cast<double>(v.a) / static_cast<double>(v.phi)) << ','
       << shortest(std::abs(v.b) / static_cast<double>(v.phi));
  }
  return os.str();
}

std::vector<ABValue> read_checkpoint(const std::string& path, bool normalized) {
  std::vector<ABValue> rows;
  std::ifstream in(path);
  if (!in) return rows;
  std::string line;
  if (!std::getline(in, line)) return rows;
  if (line != checkpoint_header(normalized)) {
    throw DomainError("checkpoint " + path + " has an unexpected header: " + line);
  }
  const std::size_t fields = normalized ? 8 : 6;
  while (std::getline(in, line)) {
    if (in.eof() && !line.empty()) break;  // no trailing newline: partial write
    std::vector<std::string> cells;
    std::stringstream ss(line);
    for (std::string cell; std::getline(ss, cell, ',');) cells.push_back(cell);
    if (cells.size() != fields) break;
    try {
      ABValue v;
      v.c = std::stoll(cells[0]);
      v.a = std::stoll(cells[1]);
      v.b = {std::stod(cells[2]), std::stod(cells[3])};
      v.phi = std::stoll(cells[5]);
      rows.push_back(v);
    } catch (const std::exception&) {
      break;
    }
  }
  return rows;
}

}  // namespace eisen
