#include "fw/contour_quadrature.hpp"

#include <cmath>
#include <numbers>

namespace fw {

namespace {

constexpr int kMaxDepth = 30;

// Gauss(7)-Kronrod(15) nodes and weights on [-1, 1].
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct PanelResult {
  Complex integral;
  double error;
  double resabs;  // integral of |f|, for the round-off floor
};

PanelResult gk15(const Integrand& f, Complex z0, Complex z1) {
  const Complex mid = 0.5 * (z0 + z1);
  const Complex half = 0.5 * (z1 - z0);

  const Complex fc = f(mid);
  Complex kronrod = kWgk[7] * fc;
  Complex gauss = kWg[3] * fc;
  double resabs = kWgk[7] * std::abs(fc);
  for (int i = 0; i < 7; ++i) {
    const Complex fa = f(mid - half * kXgk[i]);
    const Complex fb = f(mid + half * kXgk[i]);
    kronrod += kWgk[i] * (fa + fb);
    resabs += kWgk[i] * (std::abs(fa) + std::abs(fb));
    if (i % 2 == 1) gauss += kWg[i / 2] * (fa + fb);
  }
  kronrod *= half;
  gauss *= half;
  resabs *= std::abs(half);
  return {kronrod, std::abs(kronrod - gauss), resabs};
}

Complex adapt_segment(const Integrand& f, Complex z0, Complex z1, double tol, int depth) {
  const PanelResult panel = gk15(f, z0, z1);
  // Accept on tolerance, or once the estimate sits at the evaluation
  // round-off floor of the panel: integrands that cancel internally leave
  // |K - G| stuck at a few hundred ulp of the magnitude sum, and further
  // splitting cannot improve on that.
  if (panel.error <= tol || panel.error <= 500.0 * 1.1e-16 * panel.resabs) return panel.integral;
  if (depth >= kMaxDepth)
    throw QuadratureError("integrate: subdivision depth exhausted before reaching tolerance");
  const Complex mid = 0.5 * (z0 + z1);
  return adapt_segment(f, z0, mid, 0.5 * tol, depth + 1) +
         adapt_segment(f, mid, z1, 0.5 * tol, depth + 1);
}

constexpr Complex kTwoPiI{0.0, 2.0 * std::numbers::pi};

void check_polygon_radius(const LaurentMap& m, double r) {
  const double a = m.focus();
  if (!(r > 0.0) || !(r < a))
    throw std::domain_error("fw_coefficient_a: need 0 < r < a so 0 stays outside P+-");
  if (!(r > a - m.inner_branch_point()))
    throw std::domain_error("fw_coefficient_a: r too small, branch segment [w0, a] must lie inside P+-");
}

}  // namespace

PolygonContour::PolygonContour(std::vector<Complex> vertices, bool closed)
    : vertices_(std::move(vertices)), closed_(closed) {
  if (closed_ && vertices_.size() < 3)
    throw std::invalid_argument("PolygonContour: a closed path needs at least 3 vertices");
  if (!closed_ && vertices_.size() < 2)
    throw std::invalid_argument("PolygonContour: a path needs at least 2 vertices");
  for (std::size_t i = 0; i + 1 < vertices_.size(); ++i)
    if (vertices_[i] == vertices_[i + 1])
      throw std::invalid_argument("PolygonContour: repeated consecutive vertex");
  if (closed_ && vertices_.front() == vertices_.back())
    throw std::invalid_argument("PolygonContour: closed paths list the start vertex once");
}

PolygonContour PolygonContour::square(Complex center, double r) {
  return PolygonContour({center + Complex(r, 0.0), center + Complex(0.0, r),
                         center - Complex(r, 0.0), center - Complex(0.0, r)});
}

PolygonContour PolygonContour::regular_polygon(Complex center, double circumradius, int sides,
                                               double phase) {
  if (sides < 3) throw std::invalid_argument("PolygonContour: need at least 3 sides");
  std::vector<Complex> v;
  v.reserve(static_cast<std::size_t>(sides));
  for (int i = 0; i < sides; ++i) {
    const double angle = phase + 2.0 * std::numbers::pi * i / sides;
    v.push_back(center + circumradius * Complex(std::cos(angle), std::sin(angle)));
  }
  return PolygonContour(std::move(v));
}

std::size_t PolygonContour::segment_count() const {
  return closed_ ? vertices_.size() : vertices_.size() - 1;
}

std::pair<Complex, Complex> PolygonContour::segment(std::size_t i) const {
  const std::size_t next = (i + 1 == vertices_.size()) ? 0 : i + 1;
  return {vertices_[i], vertices_[next]};
}

double PolygonContour::winding_number(Complex p) const {
  const Complex value = integrate(*this, [p](Complex z) { return 1.0 / (z - p); }, 1e-8);
  return std::real(value / kTwoPiI);
}

Complex integrate(const PolygonContour& path, const Integrand& f, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("integrate: tolerance must be positive");
  Complex total = 0.0;
  for (std::size_t i = 0; i < path.segment_count(); ++i) {
    const auto [z0, z1] = path.segment(i);
    total += adapt_segment(f, z0, z1, tol, 0);
  }
  return total;
}

Complex fw_coefficient_a(const LaurentMap& m, const AlphaSequence& seq, const Integrand& f,
                         int k, double r, double tol) {
  if (k < 0) throw std::invalid_argument("fw_coefficient_a: k must be >= 0");
  check_polygon_radius(m, r);
  const double a = m.focus();
  const PolygonContour plus = PolygonContour::square(Complex(a, 0.0), r);
  const PolygonContour minus = PolygonContour::square(Complex(-a, 0.0), r);
  const auto integrand = [&](Complex tau) {
    return f(m.psi_continued(tau)) / u_value(seq, k + 1, tau);
  };
  return (integrate(plus, integrand, tol) + integrate(minus, integrand, tol)) / kTwoPiI;
}

std::vector<Complex> fw_coefficients(const LaurentMap& m, const AlphaSequence& seq,
                                     const Integrand& f, int n, double r, double tol) {
  if (n < 0) throw std::invalid_argument("fw_coefficients: n must be >= 0");
  check_polygon_radius(m, r);
  const double a = m.focus();
  const PolygonContour plus = PolygonContour::square(Complex(a, 0.0), r);
  const PolygonContour minus = PolygonContour::square(Complex(-a, 0.0), r);
  if (std::lround(plus.winding_number(Complex(a, 0.0))) != 1 ||
      std::lround(minus.winding_number(Complex(-a, 0.0))) != 1 ||
      std::lround(plus.winding_number(0.0)) != 0 || std::lround(minus.winding_number(0.0)) != 0)
    throw std::domain_error("fw_coefficients: polygon winding check failed");

  std::vector<Complex> out;
  out.reserve(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) {
    const auto integrand = [&](Complex tau) {
      return f(m.psi_continued(tau)) / u_value(seq, k + 1, tau);
    };
    out.push_back((integrate(plus, integrand, tol) + integrate(minus, integrand, tol)) / kTwoPiI);
  }
  return out;
}

Complex fw_coefficient_alpha_nk(const LaurentMap& m, const AlphaSequence& seq,
                                std::span<const ComplexPolynomial> b, int n, int k,
                                const PolygonContour& lambda_path, double tol) {
  if (n < 0 || n >= static_cast<int>(b.size()))
    throw std::invalid_argument("fw_coefficient_alpha_nk: n outside the supplied b range");
  if (k < 0) throw std::invalid_argument("fw_coefficient_alpha_nk: k must be >= 0");
  if (k == 0) return 0.0;
  const ComplexPolynomial& bn = b[static_cast<std::size_t>(n)];
  // G_n(tau) = b_n(psi(tau)) - u_n(tau); on a closed path the polynomial
  // part u_{k-1} u_n integrates to zero exactly, so it is dropped from the
  // integrand (the literal subtraction cancels catastrophically pointwise).
  const auto integrand = [&](Complex tau) {
    return u_value(seq, k - 1, tau) * bn.eval(m.psi_continued(tau));
  };
  return integrate(lambda_path, integrand, tol) / kTwoPiI;
}

double b_n_at_zero_closed_form(const TwoIntervalSet& set, int n) {
  if (n < 2) throw std::invalid_argument("b_n_at_zero_closed_form: needs n >= 2");
  const double a = set.focus();
  const double mu = set.capacity();
  const int k = n / 2;
  const double core = std::pow(a, 2 * k) + std::pow(mu * mu / a, 2 * k);
  if (n % 2 == 0) return (k % 2 == 0 ? 1.0 : -1.0) * core;
  return (k % 2 == 1 ? 1.0 : -1.0) * a * core;
}

ResidueCheck residue_b_n_at_zero(const LaurentMap& m, int n, double tol) {
  if (n < 2)
    throw std::invalid_argument("residue_b_n_at_zero: needs n >= 2 so u_n cancels both foci");
  const AlphaSequence seq = AlphaSequence::plus_first(m.focus());
  // A single contour around 0 and both foci.  The radius keeps |U| of order
  // a on the path (so |u_n| stays tame) while staying outside the lemniscate
  // for every admissible capacity.
  const PolygonContour path =
      PolygonContour::square(0.0, 1.3 * std::hypot(m.focus(), m.capacity()));
  const auto integrand = [&](Complex tau) {
    return u_value(seq, n, tau) * m.psi_log_derivative(tau);
  };
  return {integrate(path, integrand, tol) / kTwoPiI, b_n_at_zero_closed_form(m.set(), n)};
}

SeriesApproximation truncated_series(const LaurentMap& m, const AlphaSequence& seq,
                                     const Integrand& f, int n, double r, double tol) {
  if (n < 0) throw std::invalid_argument("truncated_series: n must be >= 0");
  if (n >= 1 && static_cast<int>(m.c().size()) < n)
    throw std::invalid_argument("truncated_series: LaurentMap truncation too small for degree n");

  SeriesApproximation s;
  s.n = n;
  s.a = fw_coefficients(m, seq, f, n, r, tol);
  if (n == 0)
    s.b = {ComplexPolynomial::constant(1.0)};
  else
    s.b = build_scheme(m.c(), seq, n).polynomials();
  ComplexPolynomial acc;
  for (int k = 0; k <= n; ++k)
    acc = acc + s.b[static_cast<std::size_t>(k)].scaled(s.a[static_cast<std::size_t>(k)]);
  s.assembled = std::move(acc);
  return s;
}

}  // namespace fw
