#pragma once

#include <complex>
#include <vector>

namespace fw {

using Complex = std::complex<double>;

// Dense polynomial with complex coefficients stored in ascending powers:
// coeffs()[j] multiplies z^j.  The stored form is trimmed so that the
// leading coefficient is nonzero unless the polynomial is identically zero;
// the zero polynomial has an empty coefficient vector and degree -1.
//
// Trimming removes exact zeros only.  Rounding residue in low-order places
// is kept on purpose, so parity statements about computed polynomials stay
// checkable instead of being manufactured by the container.
//
// Immutable value semantics; every operation returns a new polynomial.
class ComplexPolynomial {
public:
  ComplexPolynomial() = default;
  explicit ComplexPolynomial(std::vector<Complex> coeffs);

  static ComplexPolynomial constant(Complex value);
  static ComplexPolynomial monomial(int degree, Complex coefficient = 1.0);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Complex>& coeffs() const { return coeffs_; }
  Complex coeff(int j) const;     // 0 outside the stored range
  Complex leading_coeff() const;  // 0 for the zero polynomial

  // Nested (Horner) evaluation.
  Complex eval(Complex z) const;

  bool is_monic(double tol) const;

  ComplexPolynomial scaled(Complex factor) const;

  // Multiplication by the linear factor (z - c); raises the degree by one.
  ComplexPolynomial mul_linear(Complex c) const;

  friend ComplexPolynomial operator+(const ComplexPolynomial& p, const ComplexPolynomial& q);
  friend ComplexPolynomial operator-(const ComplexPolynomial& p, const ComplexPolynomial& q);

private:
  void trim();
  std::vector<Complex> coeffs_;
};

// p(-z): coefficient j picks up the factor (-1)^j.
ComplexPolynomial reflected(const ComplexPolynomial& p);

// max_j |p_j - q_j| over the union of the stored coefficient ranges.
double max_coefficient_difference(const ComplexPolynomial& p, const ComplexPolynomial& q);

}  // namespace fw
