#include "fw/two_interval_map.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace fw {

bool is_infinite(Complex z) {
  return std::isinf(std::real(z)) || std::isinf(std::imag(z));
}

Complex complex_infinity() {
  const double inf = std::numeric_limits<double>::infinity();
  return Complex(inf, inf);
}

TwoIntervalSet::TwoIntervalSet(double alpha_in, double beta_in) : alpha(alpha_in), beta(beta_in) {
  if (!(0.0 < alpha && alpha < beta) || !std::isfinite(beta))
    throw std::invalid_argument("TwoIntervalSet: need 0 < alpha < beta");
}

TwoIntervalSet TwoIntervalSet::from_focus_capacity(double a, double mu) {
  if (!(0.0 < mu && mu < a) || !std::isfinite(a))
    throw std::invalid_argument("TwoIntervalSet: need 0 < mu < a");
  const double half_gap = mu * mu / a;  // (beta - alpha)/2
  return TwoIntervalSet(a - half_gap, a + half_gap);
}

double TwoIntervalSet::capacity() const {
  return std::sqrt(0.5 * (beta - alpha) * 0.5 * (beta + alpha));
}

bool TwoIntervalSet::contains(Complex z, double tol) const {
  if (std::abs(std::imag(z)) > tol) return false;
  const double x = std::abs(std::real(z));
  return x >= alpha - tol && x <= beta + tol;
}

double lemniscate_u(const TwoIntervalSet& set, Complex w) {
  if (is_infinite(w)) return std::numeric_limits<double>::infinity();
  const double a = set.focus();
  return std::sqrt(std::abs(w - a) * std::abs(w + a));
}

double lemniscate_modulus(std::span<const Complex> foci, std::span<const double> exponents,
                          Complex w) {
  if (foci.size() != exponents.size() || foci.empty())
    throw std::invalid_argument("lemniscate_modulus: need one exponent per focus");
  if (is_infinite(w)) return std::numeric_limits<double>::infinity();
  double value = 1.0;
  for (std::size_t j = 0; j < foci.size(); ++j)
    value *= std::pow(std::abs(w - foci[j]), exponents[j]);
  return value;
}

double distance_to_E(const TwoIntervalSet& set, Complex z) {
  const double x = std::real(z), y = std::imag(z);
  auto seg = [y](double lo, double hi, double xx) {
    const double dx = (xx < lo) ? lo - xx : (xx > hi ? xx - hi : 0.0);
    return std::hypot(dx, y);
  };
  return std::min(seg(set.alpha, set.beta, x), seg(-set.beta, -set.alpha, x));
}

LaurentMap::LaurentMap(const TwoIntervalSet& set, int truncation)
    : set_(set), truncation_(truncation) {
  if (truncation < 1) throw std::invalid_argument("LaurentMap: truncation must be >= 1");
  a_ = set_.focus();
  mu_ = set_.capacity();
  q_ = (mu_ * mu_) * (mu_ * mu_) / (a_ * a_);
  w0sq_ = a_ * a_ - q_;
  w0_ = std::sqrt(w0sq_);

  // d_0 = 1, d_n = mu^4/(2 a^4) - (1/2) sum_{k=1}^{n-1} d_k d_{n-k}
  const double m4 = q_ / (a_ * a_);  // mu^4 / a^4
  d_.assign(static_cast<std::size_t>(truncation_) + 1, 0.0);
  d_[0] = 1.0;
  for (int n = 1; n <= truncation_; ++n) {
    double acc = 0.0;
    for (int k = 1; k <= n - 1; ++k) acc += d_[k] * d_[n - k];
    d_[n] = 0.5 * m4 - 0.5 * acc;
  }

  // c_0 = 0, c_{2k} = 0, c_{2k-1} = d_k a^{2k}
  c_.assign(static_cast<std::size_t>(2 * truncation_), 0.0);
  double a2k = 1.0;
  for (int k = 1; k <= truncation_; ++k) {
    a2k *= a_ * a_;
    c_[static_cast<std::size_t>(2 * k - 1)] = d_[k] * a2k;
  }
}

Complex LaurentMap::psi(Complex w) const {
  if (is_infinite(w)) return complex_infinity();
  if (!(lemniscate_u(set_, w) > mu_))
    throw std::domain_error("psi: w lies inside or on the lemniscate |U(w)| = mu");
  return psi_continued(w);
}

Complex LaurentMap::psi_continued(Complex w) const {
  if (is_infinite(w)) return complex_infinity();
  if (std::abs(w) > 1e100) return w;  // tail ~ c_1/w is below relative precision
  const Complex denom = w * w - a_ * a_;
  return w * std::sqrt(1.0 + q_ / denom);
}

Complex LaurentMap::psi_derivative(Complex w) const {
  if (is_infinite(w)) return 1.0;
  if (std::abs(w) > 1e100) return 1.0;
  const Complex denom = w * w - a_ * a_;
  const Complex radicand = 1.0 + q_ / denom;
  const Complex root = std::sqrt(radicand);
  const Complex dradicand = -2.0 * w * q_ / (denom * denom);
  return root + w * dradicand / (2.0 * root);
}

Complex LaurentMap::psi_log_derivative(Complex w) const {
  return 1.0 / w + w / (w * w - w0sq_) - w / (w * w - a_ * a_);
}

Complex LaurentMap::psi_truncated(Complex w, int terms) const {
  if (is_infinite(w)) return complex_infinity();
  if (terms > truncation_) terms = truncation_;
  const Complex t = (a_ / w) * (a_ / w);
  Complex tail = 0.0;
  for (int n = terms; n >= 1; --n) tail = (tail + d_[static_cast<std::size_t>(n)]) * t;
  return w * (1.0 + tail);
}

Complex LaurentMap::phi(Complex z) const {
  if (is_infinite(z)) return complex_infinity();
  if (std::abs(z) > 1e100) return z;  // phi(z) - z ~ -c_1/z is below precision
  if (set_.contains(z)) throw std::domain_error("phi: z lies on E");

  // psi(w) = z  <=>  s^2 - (z^2 + w0^2) s + z^2 a^2 = 0 with s = w^2.
  // The two roots satisfy (s1 - a^2)(s2 - a^2) = mu^4, so exactly one of
  // them lies outside |s - a^2| = mu^2, i.e. gives |U(w)| > mu.
  const double a2 = a_ * a_;
  const Complex z2 = z * z;
  const Complex B = z2 + w0sq_;
  const Complex C = z2 * a2;
  const Complex D = std::sqrt(B * B - 4.0 * C);
  const Complex big = (std::real(std::conj(B) * D) >= 0.0) ? 0.5 * (B + D) : 0.5 * (B - D);
  const Complex small = (big == Complex(0.0)) ? Complex(0.0) : C / big;
  const Complex s = (std::abs(big - a2) >= std::abs(small - a2)) ? big : small;

  Complex w = std::sqrt(s);
  // psi maps every open quadrant (and each half axis) to itself.
  const double dot = std::real(w) * std::real(z) + std::imag(w) * std::imag(z);
  if (dot < 0.0) {
    w = -w;
  } else if (dot == 0.0 && w != Complex(0.0)) {
    if (std::abs(psi_continued(-w) - z) < std::abs(psi_continued(w) - z)) w = -w;
  }

  const double target = 1e-13 * (1.0 + std::abs(z));
  for (int iter = 0; iter < 60; ++iter) {
    const Complex residual = psi_continued(w) - z;
    if (std::abs(residual) <= target) break;
    w -= residual / psi_derivative(w);
  }
  if (!(std::abs(psi_continued(w) - z) <= 100.0 * target) ||
      !(lemniscate_u(set_, w) >= mu_ * (1.0 - 1e-9)))
    throw std::domain_error("phi: branch selection did not converge");
  return w;
}

double LaurentMap::convergence_factor(Complex z0) const {
  if (is_infinite(z0)) return 0.0;
  if (set_.contains(z0))
    throw std::domain_error("convergence_factor: z0 lies on E (factor would be 1)");
  return mu_ / lemniscate_u(set_, phi(z0));
}

LaurentMap laurent_coeffs(const TwoIntervalSet& set, int truncation) {
  return LaurentMap(set, truncation);
}

MobiusImage::MobiusImage(LaurentMap base, Complex A, Complex B)
    : base_(std::move(base)), A_(A), B_(B) {
  if (A_ == Complex(0.0)) throw std::invalid_argument("mobius_image: A must be nonzero");
}

double MobiusImage::capacity() const { return std::abs(A_) * base_.capacity(); }

Complex MobiusImage::psi(Complex w) const {
  if (is_infinite(w)) return complex_infinity();
  return A_ * base_.psi((w - B_) / A_) + B_;
}

Complex MobiusImage::psi_continued(Complex w) const {
  if (is_infinite(w)) return complex_infinity();
  return A_ * base_.psi_continued((w - B_) / A_) + B_;
}

MobiusImage mobius_image(const LaurentMap& m, Complex A, Complex B) {
  return MobiusImage(m, A, B);
}

}  // namespace fw
