#pragma once

#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

#include "fw/complex_poly.hpp"
#include "fw/fw_recursion.hpp"
#include "fw/two_interval_map.hpp"

namespace fw {

struct QuadratureError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Closed polygonal integration path, positively (counterclockwise) oriented
// by construction of the vertex order.
class PolygonContour {
public:
  explicit PolygonContour(std::vector<Complex> vertices, bool closed = true);

  // The square with vertices center+r, center+ir, center-r, center-ir,
  // starting (and ending) at center+r.
  static PolygonContour square(Complex center, double r);
  static PolygonContour regular_polygon(Complex center, double circumradius, int sides,
                                        double phase = 0.0);

  const std::vector<Complex>& vertices() const { return vertices_; }
  bool closed() const { return closed_; }
  std::size_t segment_count() const;
  std::pair<Complex, Complex> segment(std::size_t i) const;

  // (1/2*pi*i) * contour integral of dz/(z - p); +-1e-6-accurate, so callers
  // can round and compare against the expected winding.
  double winding_number(Complex p) const;

private:
  std::vector<Complex> vertices_;
  bool closed_;
};

using Integrand = std::function<Complex(Complex)>;

// Contour integral of f along the path, adaptive Gauss-Kronrod (G7,K15) per
// segment with bisection; tol is the absolute error budget per polygon edge,
// halved at each subdivision.  Throws QuadratureError when a subdivision
// exceeds depth 30 without meeting its budget.  Summation order is fixed, so
// results are bit-stable across runs.
Complex integrate(const PolygonContour& path, const Integrand& f, double tol = 1e-12);

// Series coefficient a_k = (1/2*pi*i) [int_{P+} + int_{P-}] f(psi(tau)) / u_{k+1}(tau) dtau
// where P+- are the squares with vertices +-a + r, +-a + ir, +-a - r, +-a - ir.
// f must be analytic on the image psi(P+-) and the region swept when the
// polygons deform to the level curves.  Requires 0 < r < a (0 stays
// exterior) and r > a - w0 (the branch segment of psi stays inside);
// otherwise throws std::domain_error.
Complex fw_coefficient_a(const LaurentMap& m, const AlphaSequence& seq, const Integrand& f,
                         int k, double r, double tol = 1e-12);

// a_0..a_n in one sweep over the same pair of polygons; additionally checks
// the winding numbers (+1 around the enclosed focus, 0 around the origin).
std::vector<Complex> fw_coefficients(const LaurentMap& m, const AlphaSequence& seq,
                                     const Integrand& f, int n, double r, double tol = 1e-12);

// Faber-Walsh coefficient alpha_{n,k} = (1/2*pi*i) int u_{k-1}(tau) G_n(tau) dtau
// with G_n(tau) = b_n(psi(tau)) - u_n(tau); lambda_path must enclose both
// branch segments of psi.  alpha_{n,0} = 0 by construction.
Complex fw_coefficient_alpha_nk(const LaurentMap& m, const AlphaSequence& seq,
                                std::span<const ComplexPolynomial> b, int n, int k,
                                const PolygonContour& lambda_path, double tol = 1e-12);

// b_n(0) two ways: by quadrature of u_n(tau) psi'(tau)/psi(tau) over a single
// contour enclosing 0 and both foci (the integrand is rational, poles at 0
// and +-w0 once u_n cancels the foci), and by the closed forms
//   b_{2k}(0)   = (-1)^k     (a^{2k} + (mu^2/a)^{2k}),
//   b_{2k+1}(0) = (-1)^{k-1} a (a^{2k} + (mu^2/a)^{2k}),   k >= 1,
// for the plus-first node sequence.  Requires n >= 2.
struct ResidueCheck {
  Complex quadrature;
  double closed_form;
};
ResidueCheck residue_b_n_at_zero(const LaurentMap& m, int n, double tol = 1e-12);
double b_n_at_zero_closed_form(const TwoIntervalSet& set, int n);

// Truncated series s_n = sum_{k<=n} a_k b_k.
struct SeriesApproximation {
  int n;
  std::vector<Complex> a;
  std::vector<ComplexPolynomial> b;
  ComplexPolynomial assembled;

  Complex eval(Complex z) const { return assembled.eval(z); }
};

SeriesApproximation truncated_series(const LaurentMap& m, const AlphaSequence& seq,
                                     const Integrand& f, int n, double r, double tol = 1e-12);

}  // namespace fw
