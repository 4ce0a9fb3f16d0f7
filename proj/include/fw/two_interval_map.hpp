#pragma once

#include <complex>
#include <span>
#include <vector>

namespace fw {

using Complex = std::complex<double>;

bool is_infinite(Complex z);
Complex complex_infinity();

// The compact set E = [-beta, -alpha] U [alpha, beta] with 0 < alpha < beta.
// Derived quantities: focus a = (beta+alpha)/2 and logarithmic capacity
// mu = sqrt((beta-alpha)/2 * (beta+alpha)/2).  They satisfy 0 < mu < a.
struct TwoIntervalSet {
  TwoIntervalSet(double alpha_in, double beta_in);
  static TwoIntervalSet from_focus_capacity(double a, double mu);

  double alpha;
  double beta;

  double focus() const { return 0.5 * (beta + alpha); }
  double capacity() const;

  // True if z lies on E up to the endpoint tolerance.
  bool contains(Complex z, double tol = 1e-14) const;
};

// |U(w)| = |w - a|^{1/2} |w + a|^{1/2}, the modulus of the canonical
// two-focus lemniscate function of E.
double lemniscate_u(const TwoIntervalSet& set, Complex w);

// General form |U(w)| = prod_j |w - foci[j]|^{exponents[j]} with the
// exponents summing to 1.  Only the modulus is provided; no exterior map is
// constructed for more than two foci.
double lemniscate_modulus(std::span<const Complex> foci, std::span<const double> exponents,
                          Complex w);

// Euclidean distance from z to E.
double distance_to_E(const TwoIntervalSet& set, Complex z);

// Exterior conformal map machinery for E.
//
//   psi(w) = w * sqrt(1 + (mu^4/a^2) / (w^2 - a^2)),   sqrt(1) = +1,
//
// maps {w : |U(w)| > mu} bijectively onto the complement of E with
// psi(inf) = inf and psi'(inf) = 1; phi is the inverse map.  The closed form
// extends analytically beyond the lemniscate, off the two branch segments
// [w0, a] and [-a, -w0], where w0 = sqrt(a^2 - mu^4/a^2) is the zero of the
// extended map in the right half plane.
//
// The Laurent series of psi at infinity is
//   psi(w) = w + sum_{n>=1} d_n a^{2n} w^{1-2n},
//   d_0 = 1,  d_n = mu^4/(2 a^4) - (1/2) sum_{k=1}^{n-1} d_k d_{n-k},
// equivalently psi(w) = w + c_0 + sum_{k>=1} c_k w^{-k} with c_0 = 0,
// c_{2k} = 0 and c_{2k-1} = d_k a^{2k}.  The series converges for |w| > a.
//
// Immutable after construction; all evaluators are pure.
class LaurentMap {
public:
  explicit LaurentMap(const TwoIntervalSet& set, int truncation = 40);

  const TwoIntervalSet& set() const { return set_; }
  int truncation() const { return truncation_; }
  double focus() const { return a_; }
  double capacity() const { return mu_; }
  // w0 above: inner endpoint of the branch segment, psi_continued(w0) = 0.
  double inner_branch_point() const { return w0_; }

  const std::vector<double>& d() const { return d_; }  // d_0 .. d_N
  const std::vector<double>& c() const { return c_; }  // c_0 .. c_{2N-1}

  // Closed-form map; throws std::domain_error for |U(w)| <= mu.
  Complex psi(Complex w) const;
  // Closed-form analytic continuation, valid off the branch segments.
  // No domain check; this is what contour integrands evaluate.
  Complex psi_continued(Complex w) const;
  Complex psi_derivative(Complex w) const;
  // psi'/psi = 1/w + w/(w^2 - w0^2) - w/(w^2 - a^2), a rational function.
  Complex psi_log_derivative(Complex w) const;
  // Partial sum of the Laurent series (only meaningful for |w| > a).
  Complex psi_truncated(Complex w) const { return psi_truncated(w, truncation_); }
  Complex psi_truncated(Complex w, int terms) const;

  // Inverse map; throws std::domain_error for z on E.  The branch is picked
  // per point: the quadratic for w^2 has exactly one root with |U(w)| > mu,
  // the sign of w is fixed by quadrant consistency with z, and the result is
  // polished by Newton iteration on psi(w) = z to 1e-13.
  Complex phi(Complex z) const;

  // R_{z0}(E) = mu / |U(phi(z0))|, in (0, 1); throws for z0 on E.
  double convergence_factor(Complex z0) const;

private:
  TwoIntervalSet set_;
  int truncation_;
  double a_;
  double mu_;
  double q_;     // mu^4 / a^2
  double w0sq_;  // a^2 - mu^4/a^2
  double w0_;
  std::vector<double> d_;
  std::vector<double> c_;
};

// Runs the d-recursion and the induced c sequence up to index 2N-1.
LaurentMap laurent_coeffs(const TwoIntervalSet& set, int truncation);

// Image of the construction under T(z) = A z + B: foci T(+-a), capacity
// |A| mu, and the transplanted exterior map T o psi o T^{-1}, which again
// fixes infinity with derivative 1.
class MobiusImage {
public:
  MobiusImage(LaurentMap base, Complex A, Complex B);

  Complex focus_plus() const { return A_ * base_.focus() + B_; }
  Complex focus_minus() const { return -A_ * base_.focus() + B_; }
  double capacity() const;
  const LaurentMap& base() const { return base_; }

  Complex psi(Complex w) const;            // checked like LaurentMap::psi
  Complex psi_continued(Complex w) const;

private:
  LaurentMap base_;
  Complex A_;
  Complex B_;
};

MobiusImage mobius_image(const LaurentMap& m, Complex A, Complex B);

}  // namespace fw
