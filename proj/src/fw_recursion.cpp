#include "fw/fw_recursion.hpp"

#include <cmath>
#include <stdexcept>

namespace fw {

AlphaSequence::AlphaSequence(std::vector<Complex> values) : cycle_(std::move(values)) {
  if (cycle_.empty()) throw std::invalid_argument("AlphaSequence: empty node list");
}

AlphaSequence AlphaSequence::plus_first(double a) {
  return AlphaSequence({Complex(a), Complex(-a)});
}

AlphaSequence AlphaSequence::minus_first(double a) {
  return AlphaSequence({Complex(-a), Complex(a)});
}

AlphaSequence AlphaSequence::cycle(std::vector<Complex> values) {
  return AlphaSequence(std::move(values));
}

Complex AlphaSequence::alpha(int j) const {
  if (j < 1) throw std::invalid_argument("AlphaSequence: index is 1-based");
  return cycle_[static_cast<std::size_t>(j - 1) % cycle_.size()];
}

ComplexPolynomial u_poly(const AlphaSequence& seq, int n) {
  if (n < 0) throw std::invalid_argument("u_poly: n must be >= 0");
  ComplexPolynomial u = ComplexPolynomial::constant(1.0);
  for (int j = 1; j <= n; ++j) u = u.mul_linear(seq.alpha(j));
  return u;
}

Complex u_value(const AlphaSequence& seq, int n, Complex w) {
  Complex v = 1.0;
  for (int j = 1; j <= n; ++j) v *= w - seq.alpha(j);
  return v;
}

BetaScheme::BetaScheme(std::span<const double> c, const AlphaSequence& seq, int target_degree)
    : target_(target_degree) {
  if (target_ < 1) throw std::invalid_argument("build_scheme: target degree must be >= 1");
  if (static_cast<int>(c.size()) < target_)
    throw std::invalid_argument("build_scheme: needs Laurent coefficients c_0..c_{N-1}");

  auto note = [this](const ComplexPolynomial& p) {
    for (const Complex& v : p.coeffs()) condition_ = std::max(condition_, std::abs(v));
    return p;
  };

  rows_.resize(static_cast<std::size_t>(target_));
  b_.reserve(static_cast<std::size_t>(target_) + 1);
  b_.push_back(ComplexPolynomial::constant(1.0));

  const Complex c0 = c[0];
  const Complex alpha1 = seq.alpha(1);
  auto& base = rows_[0];
  base.reserve(static_cast<std::size_t>(target_));
  base.push_back(note(b_[0].mul_linear(c0) - ComplexPolynomial::constant(alpha1)));
  for (int k = 1; k < target_; ++k) {
    const Complex ck = c[static_cast<std::size_t>(k)];
    const Complex ckm1 = c[static_cast<std::size_t>(k - 1)];
    const Complex shift = -double(k) * ck + double(k - 1) * ckm1 * alpha1;
    base.push_back(note(b_[0].scaled(-ck) + ComplexPolynomial::constant(shift)));
  }
  b_.push_back(base[0]);

  for (int n = 1; n < target_; ++n) {
    const auto& prev = rows_[static_cast<std::size_t>(n - 1)];
    const ComplexPolynomial& bn = b_[static_cast<std::size_t>(n)];
    const Complex alpha_next = seq.alpha(n + 1);
    auto& row = rows_[static_cast<std::size_t>(n)];
    const int cols = target_ - n;
    row.reserve(static_cast<std::size_t>(cols));
    row.push_back(note(bn.mul_linear(c0) + prev[1] + prev[0].scaled(-alpha_next)));
    for (int k = 1; k < cols; ++k) {
      const Complex ck = c[static_cast<std::size_t>(k)];
      row.push_back(note(bn.scaled(-ck) + prev[static_cast<std::size_t>(k + 1)] +
                         prev[static_cast<std::size_t>(k)].scaled(-alpha_next)));
    }
    b_.push_back(row[0]);
  }
}

const ComplexPolynomial& BetaScheme::beta(int n, int k) const {
  if (n < 0 || n >= target_ || k < 0 || k >= row_length(n))
    throw std::out_of_range("BetaScheme::beta: index outside the triangle");
  return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

BetaScheme build_scheme(std::span<const double> c, const AlphaSequence& seq, int target_degree) {
  return BetaScheme(c, seq, target_degree);
}

std::vector<ComplexPolynomial> faber_recursion(std::span<const double> c, int target_degree) {
  if (target_degree < 0) throw std::invalid_argument("faber_recursion: degree must be >= 0");
  if (target_degree >= 1 && static_cast<int>(c.size()) < target_degree)
    throw std::invalid_argument("faber_recursion: needs Laurent coefficients c_0..c_{N-1}");

  std::vector<ComplexPolynomial> F;
  F.reserve(static_cast<std::size_t>(target_degree) + 1);
  F.push_back(ComplexPolynomial::constant(1.0));
  for (int n = 0; n < target_degree; ++n) {
    ComplexPolynomial next = F[static_cast<std::size_t>(n)].mul_linear(c[0]);
    for (int j = 1; j <= n; ++j)
      next = next + F[static_cast<std::size_t>(n - j)].scaled(-c[static_cast<std::size_t>(j)]);
    next = next + ComplexPolynomial::constant(-double(n) * c[static_cast<std::size_t>(n)]);
    F.push_back(next);
  }
  return F;
}

ParityPair fw_parity_pair(const LaurentMap& m, int target_degree) {
  if (target_degree < 1) throw std::invalid_argument("fw_parity_pair: degree must be >= 1");
  const BetaScheme plus = build_scheme(m.c(), AlphaSequence::plus_first(m.focus()), target_degree);
  const BetaScheme minus = build_scheme(m.c(), AlphaSequence::minus_first(m.focus()), target_degree);

  ParityPair out{plus.polynomials(), minus.polynomials(), 0.0, 0.0};
  for (int n = 0; n <= target_degree; ++n) {
    if (n % 2 == 0) {
      out.max_even_deviation =
          std::max(out.max_even_deviation, max_coefficient_difference(out.plus[static_cast<std::size_t>(n)],
                                                                      out.minus[static_cast<std::size_t>(n)]));
    } else {
      // b+_n(-z) = -b-_n(z)
      const ComplexPolynomial mirrored = reflected(out.plus[static_cast<std::size_t>(n)]).scaled(-1.0);
      out.max_odd_deviation =
          std::max(out.max_odd_deviation, max_coefficient_difference(mirrored, out.minus[static_cast<std::size_t>(n)]));
    }
  }
  return out;
}

}  // namespace fw
