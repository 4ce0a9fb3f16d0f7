#include "fw/cli_app.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <cmath>
#include <complex>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "fw/contour_quadrature.hpp"
#include "fw/diagnostics.hpp"
#include "fw/fw_recursion.hpp"
#include "fw/two_interval_map.hpp"

namespace fw::cli {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitNumeric = 3;
constexpr int kExitSingular = 4;
constexpr int kExitBadZ0 = 5;

constexpr int kSoftDegreeCap = 40;
constexpr int kHardDegreeCap = 60;

struct RunConfig {
  std::optional<double> alpha, beta, a, mu;
  std::string seq = "plus";
  int n = 40;
  double r = 0.7;
  double tol = 1e-12;
  double mesh = 0.01;
  std::string format = "csv";
  std::string out;
  std::string function = "inv_z";
  std::vector<double> num{1.0};
  std::vector<double> den{1.0};
  double z0_re = 0.0;
  double z0_im = 0.0;
};

// Shortest decimal that parses back to the same double (up to 17 significant
// digits), so emitted tables round-trip exactly and runs are byte identical.
std::string fmt(double v) {
  char buf[40];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

TwoIntervalSet resolve_set(const RunConfig& cfg) {
  const bool endpoints = cfg.alpha.has_value() || cfg.beta.has_value();
  const bool canonical = cfg.a.has_value() || cfg.mu.has_value();
  if (endpoints == canonical)
    throw CLI::ValidationError("set", "give exactly one of (--alpha,--beta) or (--a,--mu)");
  if (endpoints) {
    if (!cfg.alpha || !cfg.beta)
      throw CLI::ValidationError("set", "--alpha and --beta go together");
    return TwoIntervalSet(*cfg.alpha, *cfg.beta);
  }
  if (!cfg.a || !cfg.mu) throw CLI::ValidationError("set", "--a and --mu go together");
  return TwoIntervalSet::from_focus_capacity(*cfg.a, *cfg.mu);
}

AlphaSequence resolve_sequence(const RunConfig& cfg, const TwoIntervalSet& set) {
  if (cfg.seq == "plus") return AlphaSequence::plus_first(set.focus());
  if (cfg.seq == "minus") return AlphaSequence::minus_first(set.focus());
  throw CLI::ValidationError("--seq", "must be plus or minus");
}

void validate_common(const RunConfig& cfg, const TwoIntervalSet& set) {
  if (cfg.n < 0 || cfg.n > kHardDegreeCap)
    throw CLI::ValidationError("--n", "degree must lie in [0, 60]");
  if (cfg.n > kSoftDegreeCap)
    std::cerr << "warning: degrees above " << kSoftDegreeCap
              << " are strongly affected by double-precision round-off\n";
  if (!(cfg.r > 0.0) || !(cfg.r < set.focus()))
    throw CLI::ValidationError("--r", "polygon radius must satisfy 0 < r < a");
  if (!(cfg.tol > 0.0)) throw CLI::ValidationError("--tol", "must be positive");
  if (!(cfg.mesh > 0.0)) throw CLI::ValidationError("--mesh", "must be positive");
  if (cfg.format != "csv" && cfg.format != "json")
    throw CLI::ValidationError("--format", "must be csv or json");
}

LaurentMap make_map(const TwoIntervalSet& set, int n) {
  return LaurentMap(set, std::max(40, (n + 1) / 2));
}

std::string set_comment(const TwoIntervalSet& set, const RunConfig& cfg) {
  std::ostringstream os;
  os << "# alpha=" << fmt(set.alpha) << " beta=" << fmt(set.beta) << " a=" << fmt(set.focus())
     << " mu=" << fmt(set.capacity()) << " seq=" << cfg.seq << " n=" << cfg.n
     << " r=" << fmt(cfg.r) << " tol=" << fmt(cfg.tol) << " mesh=" << fmt(cfg.mesh) << "\n";
  return os.str();
}

void deliver(const RunConfig& cfg, const std::string& payload) {
  if (cfg.out.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream file(cfg.out, std::ios::binary | std::ios::trunc);
  if (!file) throw std::runtime_error("cannot open output file: " + cfg.out);
  file << payload;
}

nlohmann::json set_json(const TwoIntervalSet& set) {
  return {{"alpha", set.alpha},
          {"beta", set.beta},
          {"a", set.focus()},
          {"mu", set.capacity()}};
}

std::vector<ComplexPolynomial> compute_polys(const RunConfig& cfg, const TwoIntervalSet& set,
                                             const AlphaSequence& seq) {
  if (cfg.n == 0) return {ComplexPolynomial::constant(1.0)};
  const LaurentMap m = make_map(set, cfg.n);
  const BetaScheme scheme = build_scheme(m.c(), seq, cfg.n);
  if (cfg.n > kSoftDegreeCap)
    std::cerr << "warning: scheme condition estimate " << fmt(scheme.condition_estimate())
              << "\n";
  return scheme.polynomials();
}

std::vector<double> real_coeffs(const ComplexPolynomial& p) {
  std::vector<double> out;
  out.reserve(p.coeffs().size());
  for (const Complex& c : p.coeffs()) {
    if (std::imag(c) != 0.0)
      throw std::runtime_error("polynomial has a nonreal coefficient; expected a real family");
    if (!std::isfinite(std::real(c))) throw std::runtime_error("non-finite coefficient");
    out.push_back(std::real(c));
  }
  return out;
}

int cmd_polys(const RunConfig& cfg) {
  const TwoIntervalSet set = resolve_set(cfg);
  validate_common(cfg, set);
  const AlphaSequence seq = resolve_sequence(cfg, set);
  const auto polys = compute_polys(cfg, set, seq);

  std::string payload;
  if (cfg.format == "csv") {
    std::ostringstream os;
    os << set_comment(set, cfg) << "degree, coefficients (ascending)\n";
    for (int d = 0; d <= cfg.n; ++d) {
      os << d;
      for (const double c : real_coeffs(polys[static_cast<std::size_t>(d)])) os << ", " << fmt(c);
      os << "\n";
    }
    payload = os.str();
  } else {
    nlohmann::json j;
    j["set"] = set_json(set);
    j["seq"] = cfg.seq;
    j["polynomials"] = nlohmann::json::array();
    for (int d = 0; d <= cfg.n; ++d)
      j["polynomials"].push_back(
          {{"degree", d}, {"coefficients", real_coeffs(polys[static_cast<std::size_t>(d)])}});
    payload = j.dump(2) + "\n";
  }
  deliver(cfg, payload);
  return kExitOk;
}

// Roots by the Durand-Kerner iteration; only used to keep poles of the
// user-supplied rational function away from E.
std::vector<Complex> polynomial_roots(const std::vector<double>& ascending) {
  std::vector<Complex> c(ascending.begin(), ascending.end());
  while (!c.empty() && c.back() == Complex(0.0)) c.pop_back();
  if (c.size() <= 1) return {};
  const std::size_t deg = c.size() - 1;
  const Complex lead = c[deg];
  for (auto& v : c) v /= lead;
  std::vector<Complex> roots(deg);
  const Complex seed(0.4, 0.9);
  Complex p = 1.0;
  for (auto& root : roots) {
    p *= seed;
    root = p;
  }
  for (int iter = 0; iter < 500; ++iter) {
    double shift = 0.0;
    for (std::size_t i = 0; i < deg; ++i) {
      Complex value = 0.0;
      for (auto it = c.rbegin(); it != c.rend(); ++it) value = value * roots[i] + *it;
      Complex denom = 1.0;
      for (std::size_t j = 0; j < deg; ++j)
        if (j != i) denom *= roots[i] - roots[j];
      const Complex delta = value / denom;
      roots[i] -= delta;
      shift = std::max(shift, std::abs(delta));
    }
    if (shift < 1e-14) break;
  }
  return roots;
}

Integrand resolve_function(const RunConfig& cfg, const TwoIntervalSet& set) {
  if (cfg.function == "inv_z") {
    if (distance_to_E(set, 0.0) < 1e-6)
      throw std::domain_error("function pole on E");
    return [](Complex z) { return 1.0 / z; };
  }
  if (cfg.function != "rational")
    throw CLI::ValidationError("--f", "must be inv_z or rational");
  for (const Complex& pole : polynomial_roots(cfg.den))
    if (distance_to_E(set, pole) < 1e-6) throw std::domain_error("function pole on E");
  const ComplexPolynomial p(std::vector<Complex>(cfg.num.begin(), cfg.num.end()));
  const ComplexPolynomial q(std::vector<Complex>(cfg.den.begin(), cfg.den.end()));
  if (q.is_zero()) throw CLI::ValidationError("--den", "denominator is identically zero");
  return [p, q](Complex z) { return p.eval(z) / q.eval(z); };
}

int cmd_series(const RunConfig& cfg) {
  const TwoIntervalSet set = resolve_set(cfg);
  validate_common(cfg, set);
  const AlphaSequence seq = resolve_sequence(cfg, set);
  const Integrand f = resolve_function(cfg, set);
  const LaurentMap m = make_map(set, cfg.n);
  const SeriesApproximation s = truncated_series(m, seq, f, cfg.n, cfg.r, cfg.tol);

  std::string payload;
  if (cfg.format == "csv") {
    std::ostringstream os;
    os << set_comment(set, cfg) << "k, re_a, im_a\n";
    for (int k = 0; k <= cfg.n; ++k)
      os << k << ", " << fmt(std::real(s.a[static_cast<std::size_t>(k)])) << ", "
         << fmt(std::imag(s.a[static_cast<std::size_t>(k)])) << "\n";
    os << "# assembled s_n coefficients (ascending)\n"
       << "j, re_c, im_c\n";
    for (int j = 0; j <= s.assembled.degree(); ++j)
      os << j << ", " << fmt(std::real(s.assembled.coeff(j))) << ", "
         << fmt(std::imag(s.assembled.coeff(j))) << "\n";
    payload = os.str();
  } else {
    nlohmann::json j;
    j["set"] = set_json(set);
    j["seq"] = cfg.seq;
    j["n"] = cfg.n;
    j["r"] = cfg.r;
    auto& coeffs = j["a"] = nlohmann::json::array();
    for (const Complex& v : s.a) coeffs.push_back({std::real(v), std::imag(v)});
    auto& asm_c = j["assembled"] = nlohmann::json::array();
    for (int d = 0; d <= s.assembled.degree(); ++d)
      asm_c.push_back({std::real(s.assembled.coeff(d)), std::imag(s.assembled.coeff(d))});
    payload = j.dump(2) + "\n";
  }
  deliver(cfg, payload);
  return kExitOk;
}

int cmd_error_curve(const RunConfig& cfg) {
  const TwoIntervalSet set = resolve_set(cfg);
  validate_common(cfg, set);
  const AlphaSequence seq = resolve_sequence(cfg, set);
  const Integrand f = resolve_function(cfg, set);
  const LaurentMap m = make_map(set, cfg.n);
  const std::vector<double> errors = error_curve(m, seq, f, cfg.n, cfg.r, cfg.mesh, cfg.tol);

  const double rate = set.capacity() / set.focus();  // 1/rho
  std::string payload;
  if (cfg.format == "csv") {
    std::ostringstream os;
    os << set_comment(set, cfg) << "n, error, bound, within_bound\n";
    for (int n = 0; n <= cfg.n; ++n) {
      const double bound = 4.4 * std::pow(rate, n);
      os << n << ", " << fmt(errors[static_cast<std::size_t>(n)]) << ", " << fmt(bound) << ", ";
      if (n <= 33)
        os << (errors[static_cast<std::size_t>(n)] <= bound ? "pass" : "fail");
      else
        os << "-";
      os << "\n";
    }
    payload = os.str();
  } else {
    nlohmann::json j;
    j["set"] = set_json(set);
    j["errors"] = errors;
    nlohmann::json bounds = nlohmann::json::array();
    for (int n = 0; n <= cfg.n; ++n) bounds.push_back(4.4 * std::pow(rate, n));
    j["bounds"] = bounds;
    payload = j.dump(2) + "\n";
  }
  deliver(cfg, payload);
  return kExitOk;
}

int cmd_diagnostics(const RunConfig& cfg) {
  const TwoIntervalSet set = resolve_set(cfg);
  validate_common(cfg, set);
  if (cfg.format != "json")
    throw CLI::ValidationError("--format", "diagnostics reports are JSON");
  const Complex z0(cfg.z0_re, cfg.z0_im);
  if (set.contains(z0)) return kExitBadZ0;
  const AlphaSequence seq = resolve_sequence(cfg, set);
  const Integrand f = resolve_function(cfg, set);
  const LaurentMap m = make_map(set, cfg.n);
  const int n_max = std::max(2, cfg.n);
  const DiagnosticsReport rep =
      run_diagnostics(m, seq, f, z0, n_max, cfg.r, cfg.mesh, cfg.tol);

  nlohmann::json j;
  j["set"] = set_json(set);
  j["z0"] = {cfg.z0_re, cfg.z0_im};
  j["convergence_factor"] = rep.convergence_factor_z0;
  j["degrees"] = rep.degrees;
  j["error_curve"] = rep.error_curve;
  j["quotient_error"] = rep.quotient_error;
  j["quotient_skipped"] = rep.quotient_skipped;
  j["norm_roots_from_degree_1"] = rep.norm_roots;
  j["normalized_norm_roots_from_degree_1"] = rep.normalized_norm_roots;
  j["empirical_bounds"] = {{"c1", rep.c1_hat},
                           {"c2", rep.c2_hat},
                           {"n0", rep.two_sided_onset},
                           {"violations", rep.two_sided_violations}};
  j["roundoff_flag"] = rep.roundoff_flag;
  j["stagnation_onset"] = rep.stagnation_onset;
  deliver(cfg, j.dump(2) + "\n");
  return kExitOk;
}

void add_common_options(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--alpha", cfg.alpha, "inner endpoint of E");
  cmd->add_option("--beta", cfg.beta, "outer endpoint of E");
  cmd->add_option("--a", cfg.a, "focus of the lemniscatic domain");
  cmd->add_option("--mu", cfg.mu, "logarithmic capacity");
  cmd->add_option("--seq", cfg.seq, "node sequence: plus | minus");
  cmd->add_option("--n", cfg.n, "maximum degree");
  cmd->add_option("--r", cfg.r, "polygon radius (default 0.7)");
  cmd->add_option("--tol", cfg.tol, "quadrature tolerance (default 1e-12)");
  cmd->add_option("--mesh", cfg.mesh, "sup-norm meshwidth (default 0.01)");
  cmd->add_option("--format", cfg.format, "csv | json");
  cmd->add_option("--out", cfg.out, "output path (default stdout)");
}

void add_function_options(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--f", cfg.function, "function: inv_z | rational");
  cmd->add_option("--num", cfg.num, "rational numerator coefficients, ascending")
      ->delimiter(',');
  cmd->add_option("--den", cfg.den, "rational denominator coefficients, ascending")
      ->delimiter(',');
}

}  // namespace

int run(int argc, const char* const* argv) {
  CLI::App app{"Faber-Walsh polynomials on two symmetric real intervals"};
  app.require_subcommand(1);
  RunConfig cfg;

  CLI::App* polys = app.add_subcommand("polys", "emit b_0..b_n coefficient rows");
  add_common_options(polys, cfg);
  CLI::App* series = app.add_subcommand("series", "expand a function in the b_k basis");
  add_common_options(series, cfg);
  add_function_options(series, cfg);
  CLI::App* curve = app.add_subcommand("error-curve", "sup-norm error of s_n per degree");
  add_common_options(curve, cfg);
  add_function_options(curve, cfg);
  CLI::App* diag = app.add_subcommand("diagnostics", "asymptotic diagnostics report (JSON)");
  add_common_options(diag, cfg);
  add_function_options(diag, cfg);
  diag->add_option("--z0-re", cfg.z0_re, "normalisation point, real part");
  diag->add_option("--z0-im", cfg.z0_im, "normalisation point, imaginary part");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (polys->parsed()) return cmd_polys(cfg);
    if (series->parsed()) return cmd_series(cfg);
    if (curve->parsed()) return cmd_error_curve(cfg);
    if (diag->parsed()) {
      if (diag->count("--format") == 0) cfg.format = "json";
      return cmd_diagnostics(cfg);
    }
    return kExitConfig;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return std::string(e.what()).find("pole on E") != std::string::npos ? kExitSingular
                                                                        : kExitNumeric;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumeric;
  }
}

}  // namespace fw::cli
