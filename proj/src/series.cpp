#include "qharm/series.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <string>

#include "qharm/error.hpp"
#include "qharm/kernels.hpp"

namespace qharm {

namespace {

Complex horner_point(std::span<const Complex> coeffs, Complex z) {
  const double zr = z.real();
  const double zi = z.imag();
  double outr = 0.0;
  double outi = 0.0;
  kernels::horner_scalar(coeffs, &zr, &zi, &outr, &outi, 1);
  return {outr, outi};
}

}  // namespace

int default_truncation_order() {
  if (const char* env = std::getenv("QHARM_TRUNC_ORDER")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1 && v <= 100000) {
      return static_cast<int>(v);
    }
    throw DomainError(std::string("QHARM_TRUNC_ORDER: expected a positive integer, got '") +
                      env + "'");
  }
  return kDefaultTruncationOrder;
}

// --- PowerSeries -----------------------------------------------------------

PowerSeries::PowerSeries(std::vector<Complex> coeffs) : c_(std::move(coeffs)) {}

Complex PowerSeries::operator[](int k) const noexcept {
  if (k < 0 || k >= static_cast<int>(c_.size())) return {};
  return c_[static_cast<std::size_t>(k)];
}

Complex PowerSeries::value(Complex z) const { return horner_point(c_, z); }

// --- AnalyticSeries --------------------------------------------------------

AnalyticSeries::AnalyticSeries(int order) {
  if (order < 1) {
    throw DomainError("AnalyticSeries: truncation order must be >= 1, got " +
                      std::to_string(order));
  }
  c_.assign(static_cast<std::size_t>(order) + 1, Complex{});
}

AnalyticSeries AnalyticSeries::from_coeffs(std::vector<Complex> c1_to_n) {
  if (c1_to_n.empty()) {
    throw DomainError("AnalyticSeries: truncation order must be >= 1, got 0");
  }
  c1_to_n.insert(c1_to_n.begin(), Complex{});
  AnalyticSeries s;
  s.c_ = std::move(c1_to_n);
  return s;
}

AnalyticSeries AnalyticSeries::from_dense(std::vector<Complex> dense) {
  if (dense.size() < 2) {
    throw DomainError("AnalyticSeries: truncation order must be >= 1");
  }
  if (dense[0] != Complex{}) {
    throw DomainError("AnalyticSeries: constant term must be zero");
  }
  AnalyticSeries s;
  s.c_ = std::move(dense);
  return s;
}

AnalyticSeries AnalyticSeries::monomial(int n, Complex c, int order) {
  if (n < 1 || n > order) {
    throw DomainError("AnalyticSeries::monomial: power " + std::to_string(n) +
                      " outside 1.." + std::to_string(order));
  }
  AnalyticSeries s(order);
  s.c_[static_cast<std::size_t>(n)] = c;
  return s;
}

Complex AnalyticSeries::coeff(int n) const noexcept {
  if (n <= 0 || n > order()) return {};
  return c_[static_cast<std::size_t>(n)];
}

AnalyticSeries AnalyticSeries::with_order(int order) const {
  AnalyticSeries s(order);
  const std::size_t n = std::min(s.c_.size(), c_.size());
  std::copy_n(c_.begin(), n, s.c_.begin());
  return s;
}

bool AnalyticSeries::is_zero() const noexcept {
  return std::all_of(c_.begin(), c_.end(),
                     [](const Complex& c) { return c == Complex{}; });
}

Complex AnalyticSeries::value(Complex z) const { return horner_point(c_, z); }

AnalyticSeries operator+(const AnalyticSeries& a, const AnalyticSeries& b) {
  const int n = std::max(a.order(), b.order());
  std::vector<Complex> c(static_cast<std::size_t>(n) + 1);
  for (int k = 1; k <= n; ++k) c[static_cast<std::size_t>(k)] = a.coeff(k) + b.coeff(k);
  return AnalyticSeries::from_dense(std::move(c));
}

AnalyticSeries operator*(Complex k, const AnalyticSeries& a) {
  std::vector<Complex> c(a.dense().begin(), a.dense().end());
  for (std::size_t i = 1; i < c.size(); ++i) c[i] *= k;
  return AnalyticSeries::from_dense(std::move(c));
}

// --- HarmonicSeries --------------------------------------------------------

HarmonicSeries::HarmonicSeries(AnalyticSeries h, AnalyticSeries g, int co_sign)
    : HarmonicSeries(std::move(h), std::move(g), co_sign, false) {}

HarmonicSeries::HarmonicSeries(AnalyticSeries h, AnalyticSeries g, int co_sign,
                               bool closure)
    : h_(std::move(h)), g_(std::move(g)), co_sign_(co_sign) {
  if (co_sign != 1 && co_sign != -1) {
    throw DomainError("HarmonicSeries: co_sign must be +1 or -1");
  }
  if (h_.coeff(1) != Complex{1.0, 0.0}) {
    throw DomainError("HarmonicSeries: normalization a_1 = 1 violated");
  }
  const double b1 = std::abs(g_.coeff(1));
  if (closure) {
    if (b1 > 1.0 + 1e-12) {
      throw DomainError("HarmonicSeries: closed hull requires |b_1| <= 1");
    }
    hull_boundary_ = b1 >= 1.0;
  } else if (!(b1 < 1.0)) {
    throw DomainError("HarmonicSeries: |b_1| < 1 violated");
  }
  const int n = std::max(h_.order(), g_.order());
  if (h_.order() != n) h_ = h_.with_order(n);
  if (g_.order() != n) g_ = g_.with_order(n);
}

HarmonicSeries HarmonicSeries::hull_closure(AnalyticSeries h, AnalyticSeries g,
                                            int co_sign) {
  return HarmonicSeries(std::move(h), std::move(g), co_sign, true);
}

HarmonicSeries HarmonicSeries::identity(int order) {
  return HarmonicSeries(AnalyticSeries::monomial(1, 1.0, order),
                        AnalyticSeries(order));
}

Complex HarmonicSeries::value(Complex z) const {
  return h_.value(z) + static_cast<double>(co_sign_) * std::conj(g_.value(z));
}

// --- GridSpec --------------------------------------------------------------

void GridSpec::validate() const {
  if (angles_per_ring < 1) {
    throw DomainError("GridSpec: angles_per_ring must be positive");
  }
  if (!(max_radius > 0.0 && max_radius < 1.0)) {
    throw DomainError("GridSpec: max_radius must lie in (0, 1)");
  }
  if (radii.empty()) throw DomainError("GridSpec: at least one radius required");
  for (double r : radii) {
    if (!(r > 0.0 && r <= max_radius)) {
      throw DomainError("GridSpec: every radius must satisfy 0 < r <= max_radius < 1");
    }
  }
}

GridSpec GridSpec::boundary_weighted(int rings, int angles, double r_min,
                                     double r_max) {
  if (rings < 1) throw DomainError("GridSpec: rings must be positive");
  if (!(0.0 < r_min && r_min <= r_max && r_max < 1.0)) {
    throw DomainError("GridSpec: requires 0 < r_min <= r_max < 1");
  }
  GridSpec g;
  g.angles_per_ring = angles;
  g.max_radius = r_max;
  const double gap_lo = 1.0 - r_min;
  const double gap_hi = 1.0 - r_max;
  for (int k = 0; k < rings; ++k) {
    const double t = rings == 1 ? 1.0 : static_cast<double>(k) / (rings - 1);
    g.radii.push_back(1.0 - gap_lo * std::pow(gap_hi / gap_lo, t));
  }
  g.radii.front() = rings == 1 ? r_max : r_min;
  g.radii.back() = r_max;
  g.validate();
  return g;
}

GridSpec GridSpec::standard() { return boundary_weighted(32, 128, 0.05, 0.999); }

GridSpec GridSpec::injectivity() { return boundary_weighted(12, 24, 0.05, 0.999); }

std::vector<Complex> GridSpec::points() const {
  std::vector<Complex> pts;
  pts.reserve(size());
  for (double r : radii) {
    for (int k = 0; k < angles_per_ring; ++k) {
      const double theta = 2.0 * std::numbers::pi * k / angles_per_ring;
      pts.push_back(std::polar(r, theta));
    }
  }
  return pts;
}

// --- operators -------------------------------------------------------------

Complex evaluate(const HarmonicSeries& f, Complex z) {
  if (!(std::abs(z) < 1.0)) {
    throw DomainError("evaluate: requires |z| < 1");
  }
  return f.value(z);
}

PowerSeries derivative(const AnalyticSeries& s) {
  const int n = s.order();
  std::vector<Complex> c(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) {
    c[static_cast<std::size_t>(k - 1)] = static_cast<double>(k) * s.coeff(k);
  }
  return PowerSeries(std::move(c));
}

Complex q_derivative_pointwise(const AnalyticSeries& s, QParam q, Complex z) {
  if (z == Complex{}) return s.coeff(1);
  const double qv = q.value();
  return (s.value(z) - s.value(qv * z)) / ((1.0 - qv) * z);
}

PowerSeries q_derivative_coeffs(const AnalyticSeries& s, QParam q) {
  const int n = s.order();
  const auto br = q_bracket_table(n, q);
  std::vector<Complex> c(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) {
    c[static_cast<std::size_t>(k - 1)] = br[static_cast<std::size_t>(k)] * s.coeff(k);
  }
  return PowerSeries(std::move(c));
}

AnalyticSeries shift_up(const PowerSeries& p) {
  std::vector<Complex> c(p.coeffs().size() + 1);
  std::copy(p.coeffs().begin(), p.coeffs().end(), c.begin() + 1);
  if (c.size() < 2) c.resize(2);
  return AnalyticSeries::from_dense(std::move(c));
}

AnalyticSeries hadamard(const AnalyticSeries& a, const AnalyticSeries& b) {
  const int n = std::max(a.order(), b.order());
  std::vector<Complex> c(static_cast<std::size_t>(n) + 1);
  for (int k = 1; k <= n; ++k) c[static_cast<std::size_t>(k)] = a.coeff(k) * b.coeff(k);
  return AnalyticSeries::from_dense(std::move(c));
}

AnalyticSeries salagean_kernel(int order, QParam q, int m) {
  const auto t = q_bracket_pow_table(order, q, m);
  std::vector<Complex> c(t.begin(), t.end());
  return AnalyticSeries::from_dense(std::move(c));
}

AnalyticSeries salagean_q(const AnalyticSeries& s, QParam q, int m) {
  if (m < 0) throw DomainError("salagean_q: requires m >= 0");
  if (m == 0) return s;
  return hadamard(s, salagean_kernel(s.order(), q, m));
}

Complex HarmonicImage::value(Complex z) const {
  return analytic.value(z) +
         static_cast<double>(sign * series_sign) * std::conj(coanalytic.value(z));
}

HarmonicImage salagean_q_harmonic(const HarmonicSeries& f, QParam q, int m) {
  if (m < 0) throw DomainError("salagean_q_harmonic: requires m >= 0");
  return HarmonicImage{salagean_q(f.h(), q, m), salagean_q(f.g(), q, m),
                       (m % 2 == 0) ? 1 : -1, f.co_sign()};
}

}  // namespace qharm
