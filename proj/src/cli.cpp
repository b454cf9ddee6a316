#include "eisen/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <regex>

#include <CLI11.hpp>
#include <json.hpp>

#include "eisen/eisenstein.hpp"
#include "eisen/errors.hpp"
#include "eisen/harmonic.hpp"
#include "eisen/kloosterman.hpp"
#include "eisen/reps.hpp"
#include "eisen/verify.hpp"

namespace eisen {

using nlohmann::json;

cplx parse_complex(const std::string& raw) {
  std::string t;
  for (char ch : raw)
    if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
  if (t.empty()) throw DomainError("empty complex literal");
  const auto number = [&](const std::string& s) {
    std::size_t pos = 0;
    double v = 0;
    try {
      v = std::stod(s, &pos);
    } catch (const std::exception&) {
      throw DomainError("malformed complex literal: " + raw);
    }
    if (pos != s.size()) throw DomainError("malformed complex literal: " + raw);
    return v;
  };
  const auto imag_part = [&](std::string s) {
    s.pop_back();  // the i
    if (s.empty() || s == "+") return 1.0;
    if (s == "-") return -1.0;
    return number(s);
  };
  if (t.back() != 'i' && t.back() != 'j') return {number(t), 0.0};
  // split at the last sign that does not belong to an exponent
  std::size_t split = std::string::npos;
  for (std::size_t k = t.size() - 1; k > 0; --k) {
    if ((t[k] == '+' || t[k] == '-') && t[k - 1] != 'e' && t[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  if (split == std::string::npos) return {0.0, imag_part(t)};
  return {number(t.substr(0, split)), imag_part(t.substr(split))};
}

namespace {

json cjson(cplx z) { return {{"re", z.real()}, {"im", z.imag()}}; }

json matrix_json(const CMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(cjson(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

json trunc_json(const TruncationSpec& t) {
  return {{"c_max", t.c_max}, {"d_window", t.d_window}, {"m_max", t.m_max}, {"k_max", t.k_max}, {"tol", t.tol}};
}

json fit_json(const GrowthFit& f) {
  return {{"samples", f.samples},
          {"power_law", {{"epsilon", f.power.slope}, {"intercept", f.power.intercept}, {"rms", f.power.residual}}},
          {"log_law",
           {{"slope", f.log.slope}, {"constant", f.log_constant}, {"rms", f.log.residual}}}};
}

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int report_error(std::ostream& out, const std::string& code, const std::string& message, int exit_code,
                 json extra = json::object()) {
  json e = {{"code", code}, {"message", message}};
  e.update(extra);
  out << json{{"error", e}}.dump() << '\n';
  return exit_code;
}

struct KloostermanArgs {
  std::int64_t c_min = 1, c_max = 120;
  std::string out_path, format = "csv";
  bool normalized = false, resume = false;
  std::int64_t chunk = 256;
};

void write_rows(std::ostream& os, const std::vector<ABValue>& rows, bool normalized) {
  for (const auto& r : rows) os << checkpoint_row(r, normalized) << '\n';
}

int cmd_kloosterman(const KloostermanArgs& a, std::ostream& out) {
  if (a.c_min < 1 || a.c_max < a.c_min) throw UsageError("need 1 <= c-min <= c-max");
  if (a.format != "csv" && a.format != "json") throw UsageError("format must be csv or json");

  if (a.out_path.empty()) {
    const auto rows = ab_scan(a.c_min, a.c_max);
    if (a.format == "csv") {
      out << checkpoint_header(a.normalized) << '\n';
      write_rows(out, rows, a.normalized);
    } else {
      json arr = json::array();
      for (const auto& r : rows) {
        json row = {{"c", r.c}, {"a_c", r.a}, {"b_c", cjson(r.b)}, {"abs_b", std::abs(r.b)}, {"phi_c", r.phi}};
        if (a.normalized) {
          row["a_over_phi"] = static_cast<double>(r.a) / static_cast<double>(r.phi);
          row["absb_over_phi"] = std::abs(r.b) / static_cast<double>(r.phi);
        }
        arr.push_back(row);
      }
      out << arr.dump() << '\n';
    }
    return kExitOk;
  }

  std::map<std::int64_t, ABValue> have;
  if (a.resume)
    for (const auto& r : read_checkpoint(a.out_path, a.normalized)) have[r.c] = r;

  // Start from a clean file holding exactly the parsed rows; this also drops
  // a torn final line from an interrupted run.
  {
    const std::string tmp = a.out_path + ".tmp";
    std::ofstream f(tmp, std::ios::trunc);
    if (!f) throw IoError("cannot write " + tmp);
    f << checkpoint_header(a.normalized) << '\n';
    for (const auto& [c, r] : have) f << checkpoint_row(r, a.normalized) << '\n';
    f.close();
    if (!f) throw IoError("write failed: " + tmp);
    std::error_code ec;
    std::filesystem::rename(tmp, a.out_path, ec);
    if (ec) throw IoError("cannot replace " + a.out_path + ": " + ec.message());
  }

  std::vector<std::int64_t> missing;
  for (std::int64_t c = a.c_min; c <= a.c_max; ++c)
    if (!have.count(c)) missing.push_back(c);
  const std::int64_t reused = (a.c_max - a.c_min + 1) - static_cast<std::int64_t>(missing.size());

  bool out_of_order = false;
  std::int64_t last = have.empty() ? 0 : have.rbegin()->first;
  {
    std::ofstream f(a.out_path, std::ios::app);
    if (!f) throw IoError("cannot append to " + a.out_path);
    std::size_t i = 0;
    while (i < missing.size()) {
      // contiguous run of missing c, cut into chunks
      std::size_t j = i;
      while (j + 1 < missing.size() && missing[j + 1] == missing[j] + 1 &&
             static_cast<std::int64_t>(j + 1 - i) < a.chunk)
        ++j;
      const auto rows = ab_scan(missing[i], missing[j]);
      if (missing[i] < last) out_of_order = true;
      write_rows(f, rows, a.normalized);
      f.flush();
      if (!f) throw IoError("write failed: " + a.out_path);
      for (const auto& r : rows) have[r.c] = r;
      last = std::max(last, missing[j]);
      i = j + 1;
    }
  }
  if (out_of_order) {
    std::ofstream f(a.out_path, std::ios::trunc);
    if (!f) throw IoError("cannot rewrite " + a.out_path);
    f << checkpoint_header(a.normalized) << '\n';
    for (const auto& [c, r] : have) f << checkpoint_row(r, a.normalized) << '\n';
    if (!f) throw IoError("write failed: " + a.out_path);
  }

  std::vector<std::pair<std::int64_t, std::int64_t>> ca;
  for (const auto& [c, r] : have)
    if (c >= a.c_min && c <= a.c_max) ca.emplace_back(c, r.a);
  json summary = {{"out", a.out_path},
                  {"computed", missing.size()},
                  {"reused", reused},
                  {"rows", have.size()}};
  try {
    summary["growth_fit"] = fit_json(growth_fit(ca));
  } catch (const DomainError&) {
    summary["growth_fit"] = nullptr;  // too few samples
  }
  out << summary.dump() << '\n';
  return kExitOk;
}

int cmd_verify(const VerifyOptions& opts, std::ostream& out) {
  const auto results = run_verification(opts);
  json checks = json::array();
  bool all = true;
  for (const auto& r : results) {
    all = all && r.pass;
    checks.push_back({{"suite", r.suite},
                      {"name", r.name},
                      {"measured", r.measured},
                      {"threshold", r.threshold},
                      {"pass", r.pass}});
  }
  out << json{{"suite", opts.suite}, {"pass", all}, {"checks", checks}}.dump(2) << '\n';
  return all ? kExitOk : kExitVerifyFailed;
}

struct EvalArgs {
  std::string method;
  std::string rep = "inclusion";
  std::int64_t n = 0;
  std::string u = "-1", lambda = "1", tau = "0+1i", s = "4";
  double A = 1.0;
  std::vector<int> chars = {1, 5};
  std::int64_t c_trunc = 2000;
  int m_max = 20, k_max = 128;
  double tol = 1e-12;
  std::string metric = "geodesic";
  double step = 1e-3;
};

std::pair<Representation, CMatrix> build_rep(const EvalArgs& a) {
  if (a.rep == "trivial") return {make_trivial(), identity(1)};
  if (a.rep == "inclusion") return {make_inclusion(a.n), identity(2)};
  if (a.rep == "unitary") {
    const Representation r = make_unitary_diagonal(a.chars);
    return {r, identity(r.dim())};
  }
  if (a.rep == "eta") {
    if (!(a.A > 0)) throw DomainError("A must be positive");
    CMatrix h = identity(2);
    h(1, 1) = a.A;
    return {make_eta_family(parse_complex(a.lambda)), h};
  }
  if (a.rep == "ufam") return {make_family_u(parse_complex(a.u)), identity(2)};
  throw UsageError("unknown representation: " + a.rep);
}

int cmd_eval(const EvalArgs& a, std::ostream& out) {
  const cplx tau = parse_complex(a.tau);
  if (!(tau.imag() > 0)) throw DomainError("tau must lie in the upper half-plane");
  TruncationSpec t = TruncationSpec::for_c_max(a.c_trunc);
  t.m_max = a.m_max;
  t.k_max = a.k_max;
  t.tol = a.tol;
  if (t.c_max < 1 || t.m_max < 1 || t.k_max < 1 || !(t.tol > 0)) throw UsageError("truncation must be positive");
  TruncationSpec half = t;
  half.c_max = std::max<std::int64_t>(1, t.c_max / 2);
  half.d_window = 5 * half.c_max;
  half.m_max = std::max(1, t.m_max / 2);

  json j = {{"method", a.method}, {"tau", cjson(tau)}};
  if (a.method == "residue") {
    j["value"] = matrix_json(inclusion_residue(tau));
    j["error_estimate"] = 0.0;
  } else if (a.method == "harmonic") {
    MetricFunction m;
    if (a.metric == "geodesic") {
      m = geodesic_metric_function();
    } else if (a.metric == "residue") {
      m = residue_metric_function();
    } else {
      throw UsageError("unknown metric: " + a.metric);
    }
    const double r = harmonicity_residual(m, tau, a.step);
    const double r2 = harmonicity_residual(m, tau, 2 * a.step);
    const double threshold = 1e-5;
    j["metric"] = a.metric;
    j["step"] = a.step;
    j["residual"] = r;
    j["residual_double_step"] = r2;
    j["threshold"] = threshold;
    j["pass"] = r < threshold;
  } else if (a.method == "classical") {
    const cplx s = parse_complex(a.s);
    j["s"] = cjson(s);
    j["value"] = matrix_json(CMatrix::Constant(1, 1, classical_E(tau, s, a.tol)));
  } else {
    const cplx s = parse_complex(a.s);
    j["s"] = cjson(s);
    MetricSample full, coarse;
    if (a.method == "direct") {
      const auto [rep, h] = build_rep(a);
      full = direct_sum(rep, h, tau, s, t);
      coarse = full;
      j["rep"] = a.rep;
    } else if (a.method == "inclusion") {
      full = inclusion_fourier(tau, s, a.n, t);
      coarse = inclusion_fourier(tau, s, a.n, half);
      j["rep"] = "inclusion";
    } else if (a.method == "unitary") {
      const auto [rep, h] = build_rep(a);
      full = unitary_fourier(rep, h, tau, s, t);
      coarse = unitary_fourier(rep, h, tau, s, half);
      j["rep"] = a.rep;
    } else {
      throw UsageError("unknown method: " + a.method);
    }
    j["method"] = method_name(full.method);
    j["value"] = matrix_json(full.value);
    j["truncation"] = trunc_json(t);
    j["error_estimate"] = a.method == "direct" ? full.error_estimate
                                               : std::max(full.error_estimate, (full.value - coarse.value).norm());
  }
  out << j.dump() << '\n';
  return kExitOk;
}

}  // namespace

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Eisenstein metrics and Kloosterman sums for vector-valued SL2(Z) representations"};
  app.require_subcommand(1);

  KloostermanArgs ka;
  auto* kl = app.add_subcommand("kloosterman", "scan a_c, b_c for the eta family");
  kl->add_option("--c-min", ka.c_min, "first c");
  kl->add_option("--c-max", ka.c_max, "last c");
  kl->add_option("--out", ka.out_path, "checkpoint CSV; omitted means stdout");
  kl->add_option("--format", ka.format, "stdout format: csv or json");
  kl->add_flag("--normalized", ka.normalized, "add a_over_phi, absb_over_phi columns");
  kl->add_flag("--resume", ka.resume, "keep rows already in --out");
  kl->add_option("--chunk", ka.chunk, "rows per flushed chunk");

  VerifyOptions vo;
  auto* ver = app.add_subcommand("verify", "run invariant suites");
  ver->add_option("--suite", vo.suite, "all or one suite name");
  ver->add_option("--c-max", vo.table_c_max, "table comparison bound");

  EvalArgs ea;
  auto* ev = app.add_subcommand("eval", "evaluate a metric or a check");
  ev->add_option("method", ea.method, "direct | inclusion | unitary | classical | residue | harmonic")->required();
  ev->add_option("--rep", ea.rep, "trivial | inclusion | unitary | eta | ufam");
  ev->add_option("--n", ea.n, "inclusion exponent shift");
  ev->add_option("--u", ea.u, "u-family parameter");
  ev->add_option("--lambda", ea.lambda, "eta-family lambda");
  ev->add_option("--A", ea.A, "eta-family h = diag(1, A)");
  ev->add_option("--chars", ea.chars, "unitary characters in twelfths")->delimiter(',');
  ev->add_option("--tau", ea.tau, "point, a+bi");
  ev->add_option("--s", ea.s, "spectral parameter, a+bi");
  ev->add_option("--c-trunc", ea.c_trunc, "c cutoff");
  ev->add_option("--m-max", ea.m_max, "Fourier modes");
  ev->add_option("--k-max", ea.k_max, "k-series cap");
  ev->add_option("--tol", ea.tol, "series tolerance");
  ev->add_option("--metric", ea.metric, "geodesic | residue");
  ev->add_option("--step", ea.step, "finite-difference step");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return report_error(out, "usage", e.what(), kExitUsage);
  }

  try {
    if (kl->parsed()) return cmd_kloosterman(ka, out);
    if (ver->parsed()) return cmd_verify(vo, out);
    return cmd_eval(ea, out);
  } catch (const UsageError& e) {
    return report_error(out, "usage", e.what(), kExitUsage);
  } catch (const ConvergenceError& e) {
    return report_error(out, e.code(), e.what(), kExitConvergence,
                        {{"last_increment", e.last_increment()}, {"previous_increment", e.previous_increment()}});
  } catch (const DomainError& e) {
    return report_error(out, e.code(), e.what(), kExitDomain);
  } catch (const PoleError& e) {
    return report_error(out, e.code(), e.what(), kExitPole);
  } catch (const ConditioningError& e) {
    return report_error(out, e.code(), e.what(), kExitConditioning);
  } catch (const IoError& e) {
    return report_error(out, e.code(), e.what(), kExitIo);
  } catch (const std::exception& e) {
    return report_error(out, "internal", e.what(), kExitInternal);
  }
}

}  // namespace eisen
