#include <doctest.h>

#include <cmath>
#include <random>

#include "fw/complex_poly.hpp"

using fw::Complex;
using fw::ComplexPolynomial;

namespace {

// Independent evaluation oracle: plain power sums.
Complex naive_eval(const ComplexPolynomial& p, Complex z) {
  Complex acc = 0.0;
  for (int j = 0; j <= p.degree(); ++j) acc += p.coeff(j) * std::pow(z, j);
  return acc;
}

ComplexPolynomial random_poly(std::mt19937& rng, int degree, double scale) {
  std::uniform_real_distribution<double> uni(-scale, scale);
  std::vector<Complex> c;
  for (int j = 0; j <= degree; ++j) c.emplace_back(uni(rng), uni(rng));
  if (c.back() == Complex(0.0)) c.back() = 1.0;
  return ComplexPolynomial(c);
}

}  // namespace

TEST_CASE("eval: constants and fixed values") {
  const ComplexPolynomial one = ComplexPolynomial::constant(1.0);
  CHECK(one.eval(Complex(7.0, 2.0)) == Complex(1.0));

  const ComplexPolynomial p({Complex(-17.0 / 16.0), Complex(0.0), Complex(1.0)});
  CHECK(p.eval(Complex(0.0)) == Complex(-17.0 / 16.0));
  CHECK(p.degree() == 2);
}

TEST_CASE("eval matches the naive power-sum oracle on the unit circle") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> angle(0.0, 6.28318);
  for (int trial = 0; trial < 20; ++trial) {
    const ComplexPolynomial p = random_poly(rng, 10, 2.0);
    const double th = angle(rng);
    const Complex z(std::cos(th), std::sin(th));
    const Complex lhs = p.eval(z);
    const Complex rhs = naive_eval(p, z);
    CHECK(std::abs(lhs - rhs) <= 1e-13 * (1.0 + std::abs(rhs)));
  }
}

TEST_CASE("mul_linear builds nodal factors") {
  const ComplexPolynomial one = ComplexPolynomial::constant(1.0);
  const ComplexPolynomial zm1 = one.mul_linear(1.0);
  CHECK(zm1.degree() == 1);
  CHECK(zm1.coeff(0) == Complex(-1.0));
  CHECK(zm1.coeff(1) == Complex(1.0));

  // (z-1)(z+1)(z-1)(z+1) = z^4 - 2 z^2 + 1
  ComplexPolynomial u = one;
  for (const double node : {1.0, -1.0, 1.0, -1.0}) u = u.mul_linear(node);
  CHECK(u.degree() == 4);
  CHECK(u.coeff(0) == Complex(1.0));
  CHECK(u.coeff(1) == Complex(0.0));
  CHECK(u.coeff(2) == Complex(-2.0));
  CHECK(u.coeff(3) == Complex(0.0));
  CHECK(u.coeff(4) == Complex(1.0));
}

TEST_CASE("mul_linear raises the degree by exactly one") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    const ComplexPolynomial p = random_poly(rng, trial % 6, 3.0);
    CHECK(p.mul_linear(Complex(0.5, -0.25)).degree() == p.degree() + 1);
  }
}

TEST_CASE("exact cancellation trims to the zero polynomial") {
  std::mt19937 rng(3);
  const ComplexPolynomial p = random_poly(rng, 7, 10.0);
  const ComplexPolynomial zero = p + p.scaled(-1.0);
  CHECK(zero.is_zero());
  CHECK(zero.degree() == -1);
  CHECK(zero.eval(Complex(2.0, 1.0)) == Complex(0.0));
}

TEST_CASE("is_monic") {
  const ComplexPolynomial zm1({Complex(-1.0), Complex(1.0)});
  CHECK(zm1.is_monic(1e-12));
  const ComplexPolynomial q({Complex(1.0), Complex(0.0), Complex(2.0)});
  CHECK_FALSE(q.is_monic(1e-12));
  CHECK_FALSE(ComplexPolynomial().is_monic(1e-12));
}

TEST_CASE("property: evaluation is additive") {
  std::mt19937 rng(23);
  std::uniform_real_distribution<double> pick(-1.5, 1.5);
  for (int trial = 0; trial < 50; ++trial) {
    const ComplexPolynomial p = random_poly(rng, 12, 1e3);
    const ComplexPolynomial q = random_poly(rng, 9, 1e3);
    const Complex z(pick(rng), pick(rng));
    double scale = 1.0;
    for (int j = 0; j <= 12; ++j)
      scale += (std::abs(p.coeff(j)) + std::abs(q.coeff(j))) * std::pow(std::abs(z), j);
    CHECK(std::abs((p + q).eval(z) - (p.eval(z) + q.eval(z))) <= 1e-12 * scale);
  }
}

TEST_CASE("property: mul_linear evaluates as (z - c) * p(z)") {
  std::mt19937 rng(29);
  std::uniform_real_distribution<double> pick(-2.0, 2.0);
  for (int trial = 0; trial < 50; ++trial) {
    const ComplexPolynomial p = random_poly(rng, 10, 1.0);
    const Complex c(pick(rng), pick(rng));
    const Complex z(pick(rng), pick(rng));
    const Complex lhs = p.mul_linear(c).eval(z);
    const Complex rhs = (z - c) * p.eval(z);
    CHECK(std::abs(lhs - rhs) <= 1e-12 * (1.0 + std::abs(rhs)));
  }
}

TEST_CASE("trimming is idempotent") {
  std::vector<Complex> c = {Complex(1.0), Complex(2.0), Complex(0.0), Complex(0.0)};
  const ComplexPolynomial p(c);
  CHECK(p.degree() == 1);
  const ComplexPolynomial again(p.coeffs());
  CHECK(again.degree() == 1);
  CHECK(fw::max_coefficient_difference(p, again) == 0.0);
}

TEST_CASE("reflected flips odd coefficients") {
  const ComplexPolynomial p({Complex(1.0), Complex(2.0), Complex(3.0), Complex(4.0)});
  const ComplexPolynomial r = fw::reflected(p);
  CHECK(r.coeff(0) == Complex(1.0));
  CHECK(r.coeff(1) == Complex(-2.0));
  CHECK(r.coeff(2) == Complex(3.0));
  CHECK(r.coeff(3) == Complex(-4.0));
  const Complex z(0.3, -0.7);
  CHECK(std::abs(r.eval(z) - p.eval(-z)) <= 1e-14);
}
