#pragma once

#include <span>
#include <vector>

#include "fw/complex_poly.hpp"
#include "fw/two_interval_map.hpp"

namespace fw {

// Interpolation-node sequence (alpha_j)_{j>=1} drawn from the foci of the
// lemniscatic domain.  For the two-focus family the two canonical choices
// alternate starting with +a or -a; an explicit list (cycled) is accepted so
// other domains can plug in their own construction.
class AlphaSequence {
public:
  static AlphaSequence plus_first(double a);   // a, -a, a, -a, ...
  static AlphaSequence minus_first(double a);  // -a, a, -a, a, ...
  static AlphaSequence cycle(std::vector<Complex> values);

  // 1-based: alpha(1) is the first interpolation node.
  Complex alpha(int j) const;

private:
  explicit AlphaSequence(std::vector<Complex> values);
  std::vector<Complex> cycle_;
};

// Nodal polynomial u_n(w) = prod_{j=1..n} (w - alpha_j); u_0 = 1.
ComplexPolynomial u_poly(const AlphaSequence& seq, int n);

// Pointwise product evaluation of u_n (cheaper and better conditioned than
// expanding coefficients first).
Complex u_value(const AlphaSequence& seq, int n, Complex w);

// Triangular recursion producing the Faber-Walsh polynomials b_0..b_N from
// the Laurent coefficients c_0..c_{N-1} of psi and the node sequence:
//
//   beta_0^(0) = (z - c_0) b_0 - alpha_1
//   beta_k^(0) = -c_k b_0 - k c_k + (k-1) c_{k-1} alpha_1          (k >= 1)
//   beta_0^(n) = (z - c_0) b_n + beta_1^(n-1) - alpha_{n+1} beta_0^(n-1)
//   beta_k^(n) = -c_k b_n + beta_{k+1}^(n-1) - alpha_{n+1} beta_k^(n-1)
//   b_0 = 1,  b_{n+1} = beta_0^(n).
//
// Row n keeps columns k = 0..N-1-n; the whole triangle is retained because
// extending the computation later needs all of it.  Everything is plain
// double-precision complex arithmetic; past degree ~33 the polynomials are
// visibly affected by round-off (see condition_estimate()).
//
// Construction is inherently sequential (each row feeds the next); the
// finished scheme is immutable and safe to share across threads.
class BetaScheme {
public:
  BetaScheme(std::span<const double> c, const AlphaSequence& seq, int target_degree);

  int target_degree() const { return target_; }
  const std::vector<ComplexPolynomial>& polynomials() const { return b_; }  // b_0..b_N
  const ComplexPolynomial& b(int n) const { return b_[static_cast<std::size_t>(n)]; }
  const ComplexPolynomial& beta(int n, int k) const;
  int row_length(int n) const { return target_ - n; }
  // Largest coefficient magnitude seen anywhere in the triangle; a cheap
  // conditioning surrogate for the round-off warning at high degree.
  double condition_estimate() const { return condition_; }

private:
  int target_;
  std::vector<std::vector<ComplexPolynomial>> rows_;
  std::vector<ComplexPolynomial> b_;
  double condition_ = 0.0;
};

BetaScheme build_scheme(std::span<const double> c, const AlphaSequence& seq, int target_degree);

// Classical single-focus recursion:
//   F_0 = 1, F_{n+1} = (z - c_0) F_n - sum_{j=1..n} c_j F_{n-j} - n c_n.
std::vector<ComplexPolynomial> faber_recursion(std::span<const double> c, int target_degree);

// Both node choices for the two-interval family, with the parity deviations
//   even degrees:  b+_n == b-_n,
//   odd degrees:   b+_n(-z) == -b-_n(z)
// measured coefficientwise.
struct ParityPair {
  std::vector<ComplexPolynomial> plus;
  std::vector<ComplexPolynomial> minus;
  double max_even_deviation;
  double max_odd_deviation;
};

ParityPair fw_parity_pair(const LaurentMap& m, int target_degree);

}  // namespace fw
