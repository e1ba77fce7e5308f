#pragma once

// Truncated power series on the unit disc and the q-difference operators
// acting on them.

#include <complex>
#include <span>
#include <vector>

#include "qharm/qcore.hpp"

namespace qharm {

using Complex = std::complex<double>;

inline constexpr int kDefaultTruncationOrder = 64;

/// Default truncation order, overridable through QHARM_TRUNC_ORDER.
int default_truncation_order();

/// General polynomial c_0 + c_1 z + ... + c_N z^N. Results of differentiation
/// land here because they carry a constant term.
class PowerSeries {
 public:
  PowerSeries() = default;
  explicit PowerSeries(std::vector<Complex> coeffs);

  /// Coefficient of z^k; zero beyond the stored degree.
  Complex operator[](int k) const noexcept;
  std::span<const Complex> coeffs() const noexcept { return c_; }
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }

  Complex value(Complex z) const;

 private:
  std::vector<Complex> c_;
};

/// c_1 z + ... + c_N z^N: analytic on the disc, vanishing at the origin.
/// Storage is dense over 0..N with slot 0 pinned to zero.
class AnalyticSeries {
 public:
  /// The zero series of order N (N >= 1).
  explicit AnalyticSeries(int order = 1);

  /// From c_1..c_N (index 0 of the argument holds c_1).
  static AnalyticSeries from_coeffs(std::vector<Complex> c1_to_n);

  /// From dense c_0..c_N; c_0 must be exactly zero.
  static AnalyticSeries from_dense(std::vector<Complex> dense);

  /// z^n scaled by c, in a series of the given order.
  static AnalyticSeries monomial(int n, Complex c, int order);

  int order() const noexcept { return static_cast<int>(c_.size()) - 1; }

  /// Coefficient of z^n; zero for n == 0 and n > order().
  Complex coeff(int n) const noexcept;

  /// Dense view over indices 0..N.
  std::span<const Complex> dense() const noexcept { return c_; }

  /// Copy padded with zeros (or truncated) to the given order.
  AnalyticSeries with_order(int order) const;

  bool is_zero() const noexcept;

  Complex value(Complex z) const;

  friend bool operator==(const AnalyticSeries&, const AnalyticSeries&) = default;

 private:
  std::vector<Complex> c_;
};

AnalyticSeries operator+(const AnalyticSeries& a, const AnalyticSeries& b);
AnalyticSeries operator*(Complex k, const AnalyticSeries& a);

/// f = h + sign * conj(g), with h(z) = z + ..., |g'(0)| < 1.
///
/// `co_sign` is a fixed +1/-1 attached to the co-analytic part. It is never
/// folded into g's coefficients, so |b_n| always reads off g directly.
/// Ordinary harmonic functions use +1; members of the restricted class with
/// odd operator order carry -1.
class HarmonicSeries {
 public:
  HarmonicSeries(AnalyticSeries h, AnalyticSeries g, int co_sign = 1);

  /// Members of the closed convex hull may sit at |b_1| = 1. Such series are
  /// flagged and refused by the univalence verifiers.
  static HarmonicSeries hull_closure(AnalyticSeries h, AnalyticSeries g,
                                     int co_sign = 1);

  static HarmonicSeries identity(int order = default_truncation_order());

  const AnalyticSeries& h() const noexcept { return h_; }
  const AnalyticSeries& g() const noexcept { return g_; }
  int co_sign() const noexcept { return co_sign_; }
  int order() const noexcept { return h_.order(); }
  bool on_hull_boundary() const noexcept { return hull_boundary_; }

  /// h(z) + co_sign * conj(g(z)); no domain check.
  Complex value(Complex z) const;

  friend bool operator==(const HarmonicSeries&, const HarmonicSeries&) = default;

 private:
  HarmonicSeries(AnalyticSeries h, AnalyticSeries g, int co_sign, bool closure);

  AnalyticSeries h_;
  AnalyticSeries g_;
  int co_sign_;
  bool hull_boundary_ = false;
};

/// Sample points z = r e^{i theta}, ring by ring.
struct GridSpec {
  std::vector<double> radii;
  int angles_per_ring = 128;
  double max_radius = 0.999;

  /// Throws DomainError unless 0 < r <= max_radius < 1 for every radius.
  void validate() const;

  /// `rings` radii with 1 - r geometrically spaced from 1 - r_min down to
  /// 1 - r_max, which concentrates rings near the boundary.
  static GridSpec boundary_weighted(int rings, int angles, double r_min,
                                    double r_max);

  /// 32 rings in [0.05, 0.999] x 128 angles.
  static GridSpec standard();

  /// 12 rings x 24 angles over the same radial range, for pairwise checks.
  static GridSpec injectivity();

  /// Points in ring-major order; angle k on a ring is 2 pi k / angles.
  std::vector<Complex> points() const;

  std::size_t size() const noexcept {
    return radii.size() * static_cast<std::size_t>(angles_per_ring);
  }
};

/// h(z) + co_sign conj(g(z)); throws DomainError for |z| >= 1.
Complex evaluate(const HarmonicSeries& f, Complex z);

/// s'(z) as a polynomial of degree N-1.
PowerSeries derivative(const AnalyticSeries& s);

/// Jackson difference quotient (s(z) - s(qz)) / ((1-q) z); at z = 0 the
/// removable value c_1. Requires |z| < 1 (unchecked).
Complex q_derivative_pointwise(const AnalyticSeries& s, QParam q, Complex z);

/// Coefficients of the Jackson derivative: [n]_q c_n at z^{n-1}.
PowerSeries q_derivative_coeffs(const AnalyticSeries& s, QParam q);

/// z * p(z): lifts a power series back to one vanishing at the origin.
AnalyticSeries shift_up(const PowerSeries& p);

/// Coefficient-wise product; the shorter operand is zero-padded.
AnalyticSeries hadamard(const AnalyticSeries& a, const AnalyticSeries& b);

/// Series with coefficients [n]_q^m, n = 1..order.
AnalyticSeries salagean_kernel(int order, QParam q, int m);

/// m-fold z * d_q applied to s: coefficient n becomes [n]_q^m c_n.
AnalyticSeries salagean_q(const AnalyticSeries& s, QParam q, int m);

/// D_q^m applied to a harmonic f: the two transformed parts and the operator
/// sign (-1)^m. The series' own co_sign is carried alongside, separately.
struct HarmonicImage {
  AnalyticSeries analytic;
  AnalyticSeries coanalytic;
  int sign = 1;         // (-1)^m
  int series_sign = 1;  // co_sign of the input series

  Complex value(Complex z) const;
};

HarmonicImage salagean_q_harmonic(const HarmonicSeries& f, QParam q, int m);

}  // namespace qharm
