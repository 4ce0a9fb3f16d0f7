#include "fw/complex_poly.hpp"

#include <algorithm>
#include <cmath>

namespace fw {

ComplexPolynomial::ComplexPolynomial(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
  trim();
}

ComplexPolynomial ComplexPolynomial::constant(Complex value) {
  return ComplexPolynomial(std::vector<Complex>{value});
}

ComplexPolynomial ComplexPolynomial::monomial(int degree, Complex coefficient) {
  std::vector<Complex> c(static_cast<std::size_t>(degree) + 1, Complex(0.0));
  c.back() = coefficient;
  return ComplexPolynomial(std::move(c));
}

void ComplexPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == Complex(0.0)) coeffs_.pop_back();
}

Complex ComplexPolynomial::coeff(int j) const {
  if (j < 0 || j >= static_cast<int>(coeffs_.size())) return 0.0;
  return coeffs_[static_cast<std::size_t>(j)];
}

Complex ComplexPolynomial::leading_coeff() const {
  return coeffs_.empty() ? Complex(0.0) : coeffs_.back();
}

Complex ComplexPolynomial::eval(Complex z) const {
  Complex acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

bool ComplexPolynomial::is_monic(double tol) const {
  if (coeffs_.empty()) return false;
  return std::abs(coeffs_.back() - 1.0) <= tol;
}

ComplexPolynomial ComplexPolynomial::scaled(Complex factor) const {
  std::vector<Complex> out(coeffs_);
  for (auto& c : out) c *= factor;
  return ComplexPolynomial(std::move(out));
}

ComplexPolynomial ComplexPolynomial::mul_linear(Complex c) const {
  if (is_zero()) return {};
  std::vector<Complex> out(coeffs_.size() + 1, Complex(0.0));
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    out[j + 1] += coeffs_[j];
    out[j] -= c * coeffs_[j];
  }
  return ComplexPolynomial(std::move(out));
}

ComplexPolynomial operator+(const ComplexPolynomial& p, const ComplexPolynomial& q) {
  std::vector<Complex> out(std::max(p.coeffs_.size(), q.coeffs_.size()), Complex(0.0));
  for (std::size_t j = 0; j < p.coeffs_.size(); ++j) out[j] += p.coeffs_[j];
  for (std::size_t j = 0; j < q.coeffs_.size(); ++j) out[j] += q.coeffs_[j];
  return ComplexPolynomial(std::move(out));
}

ComplexPolynomial operator-(const ComplexPolynomial& p, const ComplexPolynomial& q) {
  std::vector<Complex> out(std::max(p.coeffs_.size(), q.coeffs_.size()), Complex(0.0));
  for (std::size_t j = 0; j < p.coeffs_.size(); ++j) out[j] += p.coeffs_[j];
  for (std::size_t j = 0; j < q.coeffs_.size(); ++j) out[j] -= q.coeffs_[j];
  return ComplexPolynomial(std::move(out));
}

ComplexPolynomial reflected(const ComplexPolynomial& p) {
  std::vector<Complex> out(p.coeffs());
  for (std::size_t j = 1; j < out.size(); j += 2) out[j] = -out[j];
  return ComplexPolynomial(std::move(out));
}

double max_coefficient_difference(const ComplexPolynomial& p, const ComplexPolynomial& q) {
  const int top = std::max(p.degree(), q.degree());
  double worst = 0.0;
  for (int j = 0; j <= top; ++j) worst = std::max(worst, std::abs(p.coeff(j) - q.coeff(j)));
  return worst;
}

}  // namespace fw
