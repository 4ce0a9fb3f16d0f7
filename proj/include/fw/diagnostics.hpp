#pragma once

#include <functional>
#include <span>
#include <vector>

#include "fw/complex_poly.hpp"
#include "fw/contour_quadrature.hpp"
#include "fw/fw_recursion.hpp"
#include "fw/two_interval_map.hpp"

// Measurement helpers: sup norms on E, the truncated-series error curve, and
// finite-degree views of the asymptotic statements.  Everything here is a
// pure function of its inputs, assembled single-threaded in a fixed order.

namespace fw {

// Sup-norm estimate over a uniform grid on both intervals of E.  The grid
// always contains the four endpoints exactly; refining the mesh never
// decreases the estimate (nested grids).
struct GridNorm {
  double meshwidth;
  std::vector<Complex> samples;
  double value;
};

std::vector<Complex> grid_on_E(const TwoIntervalSet& set, double meshwidth);
GridNorm sup_norm_on_E(const TwoIntervalSet& set, const ComplexPolynomial& p,
                       double meshwidth = 0.01);
GridNorm sup_norm_on_E(const TwoIntervalSet& set, const std::function<Complex(Complex)>& f,
                       double meshwidth = 0.01);

// Points on the level curve |U(w)| = sigma*mu, traced by 1-D root finding
// along rays (from each focus while the curve has two ovals, i.e.
// sigma*mu <= a, from the origin otherwise).  samples_per_component points
// per oval / per curve.  Accepts sigma >= 1.
std::vector<Complex> trace_level_curve(const LaurentMap& m, double sigma,
                                       int samples_per_component = 256);

// ||f - s_n||_E for n = 0..n_max, with s_n the truncated series of f built
// from polygon-contour coefficients at radius r.
std::vector<double> error_curve(const LaurentMap& m, const AlphaSequence& seq,
                                const std::function<Complex(Complex)>& f, int n_max, double r,
                                double meshwidth = 0.01, double tol = 1e-12);

// e_n = max over test points of |b_{n+1}(z)/b_n(z) + alpha_{n+1} - phi(z)|,
// n = 0..N-1.  Points where |b_n(z)| < 1e-12 are skipped and counted.
struct QuotientConvergence {
  std::vector<double> error;
  int skipped;
};
QuotientConvergence quotient_convergence(std::span<const ComplexPolynomial> b,
                                         const AlphaSequence& seq, const LaurentMap& m,
                                         std::span<const Complex> test_points);

// ||b_n / b_n(z0)||_E^{1/n} for n = 1..N (index 0 of the result is n = 1).
// Degrees with b_n(z0) = 0 are reported as 0 and counted by the caller via
// the paired skip vector.
struct OptimalityCurve {
  std::vector<double> values;
  std::vector<int> skipped_degrees;
};
OptimalityCurve optimality_curve(std::span<const ComplexPolynomial> b, const LaurentMap& m,
                                 Complex z0, const TwoIntervalSet& set, double meshwidth = 0.01);
// Same normalisation measured on the traced level curve Gamma_sigma = psi(Lambda_sigma).
OptimalityCurve optimality_curve_on_level(std::span<const ComplexPolynomial> b,
                                          const LaurentMap& m, Complex z0, double sigma,
                                          int samples_per_component = 256);

// Ratios |b_n(psi(t))| / |u_n(t)| over t on Lambda_sigma for n in
// [n_lo, n_hi].  c2_hat bounds the ratio from above over the whole range;
// the lower constant c1_hat holds from the reported onset degree n0 on.
struct TwoSidedCheck {
  int n_lo;
  std::vector<double> ratio_min;  // per n
  std::vector<double> ratio_max;  // per n
  double c1_hat;
  double c2_hat;
  int n0;
  int violations;  // degrees before n0 whose min ratio falls below c1_hat
};
TwoSidedCheck two_sided_check(std::span<const ComplexPolynomial> b, const LaurentMap& m,
                              const AlphaSequence& seq, double sigma, int n_lo, int n_hi,
                              int samples_per_component = 256);

// Aggregate view used by the CLI.  norm_roots / normalized_norm_roots are
// aligned with degrees 1..n_max.
struct DiagnosticsReport {
  std::vector<int> degrees;  // 0..n_max
  std::vector<double> error_curve;
  std::vector<double> quotient_error;  // degrees 0..n_max-1
  std::vector<double> norm_roots;
  std::vector<double> normalized_norm_roots;
  double c1_hat;
  double c2_hat;
  int two_sided_onset;
  int two_sided_violations;
  double convergence_factor_z0;
  int quotient_skipped;
  bool roundoff_flag;    // error curve stagnates/grows past its minimum
  int stagnation_onset;  // first degree past the minimum, -1 when not flagged
};

DiagnosticsReport run_diagnostics(const LaurentMap& m, const AlphaSequence& seq,
                                  const std::function<Complex(Complex)>& f, Complex z0, int n_max,
                                  double r, double meshwidth = 0.01, double tol = 1e-12,
                                  double two_sided_sigma = 2.0);

}  // namespace fw
