#include "fw/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace fw {

namespace {

// Largest |g| over the grid.
template <typename F>
double grid_max(const std::vector<Complex>& grid, F&& g) {
  double worst = 0.0;
  for (const Complex& z : grid) worst = std::max(worst, std::abs(g(z)));
  return worst;
}

double bisect_ray(const std::function<double(double)>& u, double level, double lo, double hi) {
  // u is continuous with u(lo) < level <= u(hi) and a single crossing.
  for (int i = 0; i < 100; ++i) {
    const double mid = 0.5 * (lo + hi);
    (u(mid) < level ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

std::vector<Complex> grid_on_E(const TwoIntervalSet& set, double meshwidth) {
  if (!(meshwidth > 0.0)) throw std::invalid_argument("grid_on_E: meshwidth must be positive");
  const long steps = std::max<long>(1, std::lround((set.beta - set.alpha) / meshwidth));
  const double step = (set.beta - set.alpha) / double(steps);
  std::vector<Complex> grid;
  grid.reserve(2 * (static_cast<std::size_t>(steps) + 1));
  for (long j = 0; j <= steps; ++j)
    grid.emplace_back(j == steps ? -set.alpha : -set.beta + double(j) * step, 0.0);
  for (long j = 0; j <= steps; ++j)
    grid.emplace_back(j == steps ? set.beta : set.alpha + double(j) * step, 0.0);
  return grid;
}

GridNorm sup_norm_on_E(const TwoIntervalSet& set, const ComplexPolynomial& p, double meshwidth) {
  GridNorm g{meshwidth, grid_on_E(set, meshwidth), 0.0};
  g.value = grid_max(g.samples, [&](Complex z) { return p.eval(z); });
  return g;
}

GridNorm sup_norm_on_E(const TwoIntervalSet& set, const std::function<Complex(Complex)>& f,
                       double meshwidth) {
  GridNorm g{meshwidth, grid_on_E(set, meshwidth), 0.0};
  g.value = grid_max(g.samples, f);
  return g;
}

std::vector<Complex> trace_level_curve(const LaurentMap& m, double sigma,
                                       int samples_per_component) {
  if (!(sigma >= 1.0)) throw std::invalid_argument("trace_level_curve: sigma must be >= 1");
  if (samples_per_component < 1)
    throw std::invalid_argument("trace_level_curve: need at least one sample");
  const double a = m.focus();
  const double level = sigma * m.capacity();
  std::vector<Complex> pts;

  if (level <= a) {
    // Two ovals; each is star shaped about its focus, and |U| is strictly
    // increasing along every ray from the focus up to radius a.
    pts.reserve(2 * static_cast<std::size_t>(samples_per_component));
    for (const double focus : {a, -a}) {
      for (int i = 0; i < samples_per_component; ++i) {
        const double theta = 2.0 * std::numbers::pi * i / samples_per_component;
        const Complex dir(std::cos(theta), std::sin(theta));
        const double rho = bisect_ray(
            [&](double t) { return lemniscate_u(m.set(), focus + t * dir); }, level, 0.0, a);
        pts.push_back(focus + rho * dir);
      }
    }
  } else {
    // One closed curve around both foci; rays from the origin cross it once.
    pts.reserve(static_cast<std::size_t>(samples_per_component));
    const double reach = a + std::sqrt(a * a + level * level);
    for (int i = 0; i < samples_per_component; ++i) {
      const double theta = 2.0 * std::numbers::pi * i / samples_per_component;
      const Complex dir(std::cos(theta), std::sin(theta));
      const double rho = bisect_ray(
          [&](double t) { return lemniscate_u(m.set(), t * dir); }, level, 0.0, reach);
      pts.push_back(rho * dir);
    }
  }
  return pts;
}

std::vector<double> error_curve(const LaurentMap& m, const AlphaSequence& seq,
                                const std::function<Complex(Complex)>& f, int n_max, double r,
                                double meshwidth, double tol) {
  if (n_max < 0) throw std::invalid_argument("error_curve: n_max must be >= 0");
  const std::vector<Complex> a = fw_coefficients(m, seq, f, n_max, r, tol);
  std::vector<ComplexPolynomial> b;
  if (n_max == 0)
    b = {ComplexPolynomial::constant(1.0)};
  else
    b = build_scheme(m.c(), seq, n_max).polynomials();

  const std::vector<Complex> grid = grid_on_E(m.set(), meshwidth);
  std::vector<Complex> partial(grid.size(), Complex(0.0));
  std::vector<Complex> target(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) target[i] = f(grid[i]);

  std::vector<double> errors;
  errors.reserve(static_cast<std::size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) {
    double worst = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
      partial[i] += a[static_cast<std::size_t>(n)] * b[static_cast<std::size_t>(n)].eval(grid[i]);
      worst = std::max(worst, std::abs(target[i] - partial[i]));
    }
    errors.push_back(worst);
  }
  return errors;
}

QuotientConvergence quotient_convergence(std::span<const ComplexPolynomial> b,
                                         const AlphaSequence& seq, const LaurentMap& m,
                                         std::span<const Complex> test_points) {
  if (b.size() < 2)
    throw std::invalid_argument("quotient_convergence: need at least b_0 and b_1");
  std::vector<Complex> phi_values;
  phi_values.reserve(test_points.size());
  for (const Complex& z : test_points) phi_values.push_back(m.phi(z));

  QuotientConvergence out{{}, 0};
  out.error.reserve(b.size() - 1);
  for (std::size_t n = 0; n + 1 < b.size(); ++n) {
    double worst = 0.0;
    for (std::size_t i = 0; i < test_points.size(); ++i) {
      const Complex denom = b[n].eval(test_points[i]);
      if (std::abs(denom) < 1e-12) {
        ++out.skipped;
        continue;
      }
      const Complex quotient =
          b[n + 1].eval(test_points[i]) / denom + seq.alpha(static_cast<int>(n) + 1);
      worst = std::max(worst, std::abs(quotient - phi_values[i]));
    }
    out.error.push_back(worst);
  }
  return out;
}

namespace {

OptimalityCurve normalized_norm_roots(std::span<const ComplexPolynomial> b, Complex z0,
                                      const std::vector<Complex>& samples) {
  OptimalityCurve out;
  out.values.reserve(b.size() > 0 ? b.size() - 1 : 0);
  for (std::size_t n = 1; n < b.size(); ++n) {
    const Complex at_z0 = b[n].eval(z0);
    if (at_z0 == Complex(0.0)) {
      out.skipped_degrees.push_back(static_cast<int>(n));
      out.values.push_back(0.0);
      continue;
    }
    double worst = 0.0;
    for (const Complex& z : samples) worst = std::max(worst, std::abs(b[n].eval(z)));
    out.values.push_back(std::pow(worst / std::abs(at_z0), 1.0 / double(n)));
  }
  return out;
}

}  // namespace

OptimalityCurve optimality_curve(std::span<const ComplexPolynomial> b, const LaurentMap& m,
                                 Complex z0, const TwoIntervalSet& set, double meshwidth) {
  if (m.set().contains(z0)) throw std::domain_error("optimality_curve: z0 lies on E");
  return normalized_norm_roots(b, z0, grid_on_E(set, meshwidth));
}

OptimalityCurve optimality_curve_on_level(std::span<const ComplexPolynomial> b,
                                          const LaurentMap& m, Complex z0, double sigma,
                                          int samples_per_component) {
  if (m.set().contains(z0)) throw std::domain_error("optimality_curve_on_level: z0 lies on E");
  const std::vector<Complex> lambda = trace_level_curve(m, sigma, samples_per_component);
  std::vector<Complex> gamma;
  gamma.reserve(lambda.size());
  for (const Complex& t : lambda) gamma.push_back(m.psi_continued(t));
  return normalized_norm_roots(b, z0, gamma);
}

TwoSidedCheck two_sided_check(std::span<const ComplexPolynomial> b, const LaurentMap& m,
                              const AlphaSequence& seq, double sigma, int n_lo, int n_hi,
                              int samples_per_component) {
  if (!(sigma > 1.0)) throw std::invalid_argument("two_sided_check: sigma must be > 1");
  if (n_lo < 1 || n_hi < n_lo || n_hi >= static_cast<int>(b.size()))
    throw std::invalid_argument("two_sided_check: bad degree range");

  const std::vector<Complex> curve = trace_level_curve(m, sigma, samples_per_component);
  std::vector<Complex> mapped;
  mapped.reserve(curve.size());
  for (const Complex& t : curve) mapped.push_back(m.psi_continued(t));

  TwoSidedCheck out;
  out.n_lo = n_lo;
  for (int n = n_lo; n <= n_hi; ++n) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = 0.0;
    for (std::size_t i = 0; i < curve.size(); ++i) {
      const double ratio = std::abs(b[static_cast<std::size_t>(n)].eval(mapped[i])) /
                           std::abs(u_value(seq, n, curve[i]));
      lo = std::min(lo, ratio);
      hi = std::max(hi, ratio);
    }
    out.ratio_min.push_back(lo);
    out.ratio_max.push_back(hi);
  }

  out.c2_hat = *std::max_element(out.ratio_max.begin(), out.ratio_max.end());
  // Onset: first degree from which the min ratio never again drops below
  // half of its final value.
  const double floor_ref = 0.5 * out.ratio_min.back();
  std::size_t onset = out.ratio_min.size() - 1;
  double tail_min = out.ratio_min.back();
  for (std::size_t i = out.ratio_min.size(); i-- > 0;) {
    tail_min = std::min(tail_min, out.ratio_min[i]);
    if (tail_min >= floor_ref) onset = i;
  }
  out.n0 = n_lo + static_cast<int>(onset);
  out.c1_hat = *std::min_element(out.ratio_min.begin() + static_cast<long>(onset),
                                 out.ratio_min.end());
  out.violations = 0;
  for (std::size_t i = 0; i < onset; ++i)
    if (out.ratio_min[i] < out.c1_hat) ++out.violations;
  return out;
}

DiagnosticsReport run_diagnostics(const LaurentMap& m, const AlphaSequence& seq,
                                  const std::function<Complex(Complex)>& f, Complex z0, int n_max,
                                  double r, double meshwidth, double tol, double two_sided_sigma) {
  if (n_max < 2) throw std::invalid_argument("run_diagnostics: n_max must be >= 2");
  DiagnosticsReport rep;
  rep.convergence_factor_z0 = m.convergence_factor(z0);

  for (int n = 0; n <= n_max; ++n) rep.degrees.push_back(n);
  rep.error_curve = error_curve(m, seq, f, n_max, r, meshwidth, tol);

  const BetaScheme scheme = build_scheme(m.c(), seq, n_max);
  const auto& b = scheme.polynomials();

  // Test ring well clear of E for the quotient check.
  std::vector<Complex> ring;
  const double radius = 2.0 * m.set().beta;
  for (int i = 0; i < 8; ++i) {
    const double theta = std::numbers::pi * (2.0 * i + 1.0) / 8.0;
    ring.emplace_back(radius * std::cos(theta), radius * std::sin(theta));
  }
  const QuotientConvergence q = quotient_convergence(b, seq, m, ring);
  rep.quotient_error = q.error;
  rep.quotient_skipped = q.skipped;

  const std::vector<Complex> grid = grid_on_E(m.set(), meshwidth);
  for (std::size_t n = 1; n < b.size(); ++n) {
    double worst = 0.0;
    for (const Complex& z : grid) worst = std::max(worst, std::abs(b[n].eval(z)));
    rep.norm_roots.push_back(std::pow(worst, 1.0 / double(n)));
  }
  rep.normalized_norm_roots = optimality_curve(b, m, z0, m.set(), meshwidth).values;

  const TwoSidedCheck ts = two_sided_check(b, m, seq, two_sided_sigma, 1, n_max);
  rep.c1_hat = ts.c1_hat;
  rep.c2_hat = ts.c2_hat;
  rep.two_sided_onset = ts.n0;
  rep.two_sided_violations = ts.violations;

  const auto min_it = std::min_element(rep.error_curve.begin(), rep.error_curve.end());
  const int argmin = static_cast<int>(min_it - rep.error_curve.begin());
  rep.roundoff_flag = argmin < n_max && rep.error_curve.back() > 10.0 * *min_it;
  rep.stagnation_onset = rep.roundoff_flag ? argmin + 1 : -1;
  return rep;
}

}  // namespace fw
