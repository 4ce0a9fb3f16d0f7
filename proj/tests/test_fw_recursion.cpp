#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "fw/fw_recursion.hpp"
#include "fw/two_interval_map.hpp"

using fw::AlphaSequence;
using fw::BetaScheme;
using fw::Complex;
using fw::ComplexPolynomial;
using fw::LaurentMap;
using fw::TwoIntervalSet;

namespace {

const TwoIntervalSet kSet(0.75, 1.25);  // a = 1, mu = 1/2

// b_0..b_5 in closed form as functions of (a, mu).
std::vector<std::vector<double>> closed_form_b(double a, double mu) {
  const double a2 = a * a, a4 = a2 * a2, a8 = a4 * a4;
  const double m4 = std::pow(mu, 4.0), m8 = m4 * m4;
  return {
      {1.0},
      {-a, 1.0},
      {-(a4 + m4) / a2, 0.0, 1.0},
      {(a4 + m4) / a, -(a2 + 1.5 * m4 / a2), -a, 1.0},
      {(a8 + m8) / a4, 0.0, -2.0 * (a4 + m4) / a2, 0.0, 1.0},
      {-(a8 + m8) / (a2 * a), a4 + 0.5 * m4 + (15.0 / 8.0) * m8 / a4, 2.0 * (a2 * a + m4 / a),
       -(2.0 * a2 + 2.5 * m4 / a2), -a, 1.0},
  };
}

// Monic Chebyshev polynomials 2^{1-n} T_n via the three-term recursion.
std::vector<ComplexPolynomial> monic_chebyshev(int n_max) {
  std::vector<ComplexPolynomial> t;
  t.push_back(ComplexPolynomial::constant(1.0));
  t.push_back(ComplexPolynomial({Complex(0.0), Complex(1.0)}));
  for (int n = 1; n < n_max; ++n)
    t.push_back(t.back().mul_linear(0.0).scaled(2.0) - t[static_cast<std::size_t>(n - 1)]);
  std::vector<ComplexPolynomial> monic;
  monic.push_back(t[0]);
  for (int n = 1; n <= n_max; ++n)
    monic.push_back(t[static_cast<std::size_t>(n)].scaled(std::pow(2.0, 1.0 - n)));
  return monic;
}

}  // namespace

TEST_CASE("alpha sequences") {
  const AlphaSequence plus = AlphaSequence::plus_first(1.0);
  CHECK(plus.alpha(1) == Complex(1.0));
  CHECK(plus.alpha(2) == Complex(-1.0));
  CHECK(plus.alpha(7) == Complex(1.0));
  const AlphaSequence minus = AlphaSequence::minus_first(1.0);
  CHECK(minus.alpha(1) == Complex(-1.0));
  const AlphaSequence fixed = AlphaSequence::cycle({Complex(0.25, 0.5)});
  CHECK(fixed.alpha(3) == Complex(0.25, 0.5));
  CHECK_THROWS_AS(fixed.alpha(0), std::invalid_argument);
}

TEST_CASE("u_poly: nodal polynomials") {
  const AlphaSequence seq = AlphaSequence::plus_first(1.0);
  CHECK(fw::u_poly(seq, 0).degree() == 0);
  CHECK(fw::u_poly(seq, 0).coeff(0) == Complex(1.0));

  const ComplexPolynomial u2 = fw::u_poly(seq, 2);  // (w-1)(w+1) = w^2 - 1
  CHECK(u2.coeff(0) == Complex(-1.0));
  CHECK(u2.coeff(1) == Complex(0.0));
  CHECK(u2.coeff(2) == Complex(1.0));

  const ComplexPolynomial u3 = fw::u_poly(seq, 3);  // w^3 - w^2 - w + 1
  CHECK(u3.coeff(0) == Complex(1.0));
  CHECK(u3.coeff(1) == Complex(-1.0));
  CHECK(u3.coeff(2) == Complex(-1.0));
  CHECK(u3.coeff(3) == Complex(1.0));

  const Complex w(0.4, 1.3);
  CHECK(std::abs(fw::u_value(seq, 3, w) - u3.eval(w)) < 1e-14);
}

TEST_CASE("scheme reproduces the first closed-form polynomials at a=1, mu=1/2") {
  const LaurentMap m(kSet, 10);
  const BetaScheme scheme = build_scheme(m.c(), AlphaSequence::plus_first(1.0), 5);
  const auto want = closed_form_b(1.0, 0.5);
  for (int n = 0; n <= 5; ++n)
    for (int j = 0; j <= n; ++j)
      CHECK(std::abs(scheme.b(n).coeff(j) - want[static_cast<std::size_t>(n)]
                                                 [static_cast<std::size_t>(j)]) <= 1e-13);
  CHECK(scheme.b(2).coeff(0) == Complex(-17.0 / 16.0));
  CHECK(std::real(scheme.b(5).coeff(1)) ==
        doctest::Approx(1.0 + 1.0 / 32.0 + 15.0 / 2048.0).epsilon(1e-15));
  CHECK(std::imag(scheme.b(5).coeff(1)) == 0.0);
}

TEST_CASE("closed forms hold symbolically in (a, mu): 20 random sets") {
  std::mt19937 rng(12345);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  double worst = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    const double a = 0.2 + 2.8 * uni(rng);
    const double mu = a * (0.05 + 0.9 * uni(rng));
    const LaurentMap m(TwoIntervalSet::from_focus_capacity(a, mu), 10);
    const BetaScheme scheme = build_scheme(m.c(), AlphaSequence::plus_first(a), 5);
    const auto want = closed_form_b(a, mu);
    for (int n = 0; n <= 5; ++n)
      for (int j = 0; j <= n; ++j) {
        const double ref = want[static_cast<std::size_t>(n)][static_cast<std::size_t>(j)];
        worst = std::max(worst, std::abs(scheme.b(n).coeff(j) - ref) /
                                    std::max(1.0, std::abs(ref)));
      }
  }
  CHECK(worst < 1e-11);
}

TEST_CASE("triangle shape: beta_0^(n) monic of degree n+1, beta_k^(n) of degree <= n") {
  const LaurentMap m(kSet, 10);
  const int N = 12;
  const BetaScheme scheme = build_scheme(m.c(), AlphaSequence::plus_first(1.0), N);
  for (int n = 0; n < N; ++n) {
    CHECK(scheme.beta(n, 0).degree() == n + 1);
    CHECK(scheme.beta(n, 0).is_monic(1e-12));
    for (int k = 1; k < scheme.row_length(n); ++k) CHECK(scheme.beta(n, k).degree() <= n);
  }
  CHECK(scheme.b(0).coeff(0) == Complex(1.0));
  for (int n = 0; n < N; ++n)
    CHECK(fw::max_coefficient_difference(scheme.b(n + 1), scheme.beta(n, 0)) == 0.0);
}

TEST_CASE("every b_n is monic across parameter sets, n <= 40") {
  for (const auto& [a, mu] : std::vector<std::pair<double, double>>{{1.0, 0.5}, {2.0, 1.0},
                                                                    {1.0, 0.9}}) {
    const LaurentMap m(TwoIntervalSet::from_focus_capacity(a, mu), 40);
    const BetaScheme scheme = build_scheme(m.c(), AlphaSequence::plus_first(a), 40);
    for (int n = 0; n <= 40; ++n) {
      CHECK(scheme.b(n).degree() == n);
      CHECK(scheme.b(n).is_monic(1e-9));
    }
  }
}

TEST_CASE("central values b_n(0) from the scheme match the closed forms") {
  const LaurentMap m(kSet, 40);
  const BetaScheme scheme = build_scheme(m.c(), AlphaSequence::plus_first(1.0), 21);
  const double a = 1.0, mu = 0.5;
  for (int k = 1; k <= 10; ++k) {
    const double core = std::pow(a, 2 * k) + std::pow(mu * mu / a, 2 * k);
    const double even_ref = (k % 2 == 0 ? 1.0 : -1.0) * core;
    const double odd_ref = (k % 2 == 1 ? 1.0 : -1.0) * a * core;
    CHECK(std::abs(scheme.b(2 * k).coeff(0) - even_ref) <= 1e-9 * std::abs(even_ref));
    CHECK(std::abs(scheme.b(2 * k + 1).coeff(0) - odd_ref) <= 1e-9 * std::abs(odd_ref));
  }
}

TEST_CASE("|b_n(0)|^{1/n} approaches the focus") {
  const LaurentMap m(kSet, 40);
  const BetaScheme scheme = build_scheme(m.c(), AlphaSequence::plus_first(1.0), 40);
  const double v10 = std::pow(std::abs(scheme.b(10).eval(Complex(0.0))), 1.0 / 10.0);
  const double v40 = std::pow(std::abs(scheme.b(40).eval(Complex(0.0))), 1.0 / 40.0);
  CHECK(std::abs(v40 - 1.0) < std::abs(v10 - 1.0));
  CHECK(std::abs(v40 - 1.0) < 1e-3);
}

TEST_CASE("classical recursion: zero coefficients give monomials") {
  const std::vector<double> zeros(12, 0.0);
  const auto F = fw::faber_recursion(zeros, 10);
  for (int n = 0; n <= 10; ++n) {
    CHECK(F[static_cast<std::size_t>(n)].degree() == n);
    for (int j = 0; j < n; ++j) CHECK(F[static_cast<std::size_t>(n)].coeff(j) == Complex(0.0));
    CHECK(F[static_cast<std::size_t>(n)].coeff(n) == Complex(1.0));
  }
}

TEST_CASE("classical recursion on [-1,1] gives monic Chebyshev polynomials") {
  std::vector<double> c(12, 0.0);
  c[1] = 0.25;
  const auto F = fw::faber_recursion(c, 10);
  const auto T = monic_chebyshev(10);
  CHECK(fw::max_coefficient_difference(F[2],
                                       ComplexPolynomial({Complex(-0.5), Complex(0.0),
                                                          Complex(1.0)})) < 1e-15);
  for (int n = 0; n <= 10; ++n)
    CHECK(fw::max_coefficient_difference(F[static_cast<std::size_t>(n)],
                                         T[static_cast<std::size_t>(n)]) < 1e-10);
}

TEST_CASE("single-focus scheme collapses to the classical recursion") {
  const AlphaSequence origin = AlphaSequence::cycle({Complex(0.0)});

  // Chebyshev data
  std::vector<double> c(12, 0.0);
  c[1] = 0.25;
  const BetaScheme scheme = build_scheme(c, origin, 10);
  const auto F = fw::faber_recursion(c, 10);
  for (int n = 0; n <= 10; ++n)
    CHECK(fw::max_coefficient_difference(scheme.b(n), F[static_cast<std::size_t>(n)]) < 1e-12);

  // two-interval Laurent data with the node forced to the origin
  const LaurentMap m(kSet, 10);
  const BetaScheme scheme2 = build_scheme(m.c(), origin, 10);
  const auto F2 = fw::faber_recursion(m.c(), 10);
  for (int n = 0; n <= 10; ++n)
    CHECK(fw::max_coefficient_difference(scheme2.b(n), F2[static_cast<std::size_t>(n)]) <
          1e-12);
}

TEST_CASE("parity relations between the two node choices") {
  const LaurentMap m(kSet, 40);

  // Degree 1 by hand: b+_1 = z - a, b-_1 = z + a.
  const auto pair1 = fw_parity_pair(m, 1);
  CHECK(pair1.plus[1].coeff(0) == Complex(-1.0));
  CHECK(pair1.minus[1].coeff(0) == Complex(1.0));
  CHECK(pair1.max_odd_deviation == 0.0);

  const auto pair = fw_parity_pair(m, 20);
  CHECK(pair.max_even_deviation < 1e-11);
  CHECK(pair.max_odd_deviation < 1e-11);

  // Even-degree polynomials are even: odd-power coefficients vanish.
  for (int n = 2; n <= 20; n += 2)
    for (int j = 1; j <= n; j += 2)
      CHECK(std::abs(pair.plus[static_cast<std::size_t>(n)].coeff(j)) < 1e-11);
}

TEST_CASE("Laurent-part oracle: b_n is the polynomial part of u_n(phi(z))") {
  // Trapezoidal Fourier analysis on |z| = 4 separates the polynomial part of
  // u_n(phi(z)) from its decaying tail (the least-squares fit on circle
  // samples reduces to exactly these DFT sums).
  const LaurentMap m(kSet, 40);
  const AlphaSequence seq = AlphaSequence::plus_first(1.0);
  const BetaScheme scheme = build_scheme(m.c(), seq, 8);
  const int M = 512;
  const double R = 4.0;
  std::vector<Complex> phi_vals(M);
  for (int i = 0; i < M; ++i) {
    const double th = 2.0 * std::numbers::pi * i / M;
    phi_vals[static_cast<std::size_t>(i)] = m.phi(R * Complex(std::cos(th), std::sin(th)));
  }
  double worst = 0.0;
  for (int n = 1; n <= 8; ++n) {
    for (int j = 0; j <= n; ++j) {
      Complex cj = 0.0;
      for (int i = 0; i < M; ++i) {
        const double th = 2.0 * std::numbers::pi * i / M;
        const Complex z = R * Complex(std::cos(th), std::sin(th));
        cj += fw::u_value(seq, n, phi_vals[static_cast<std::size_t>(i)]) / std::pow(z, j);
      }
      cj /= double(M);
      worst = std::max(worst, std::abs(cj - scheme.b(n).coeff(j)));
    }
  }
  CHECK(worst < 1e-7);
}

TEST_CASE("input validation") {
  const AlphaSequence seq = AlphaSequence::plus_first(1.0);
  const std::vector<double> c(5, 0.0);
  CHECK_THROWS_AS(build_scheme(c, seq, 6), std::invalid_argument);  // needs c_0..c_5
  CHECK_NOTHROW(build_scheme(c, seq, 5));
  CHECK_THROWS_AS(build_scheme(c, seq, 0), std::invalid_argument);
  CHECK_THROWS_AS(fw::faber_recursion(c, 6), std::invalid_argument);
}
