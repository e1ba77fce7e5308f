#include "qharm/classes.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qharm/error.hpp"

namespace qharm {

namespace {

// Equality cases land within a few ulps of the budget; anything inside this
// band counts as margin zero for the verdict.
constexpr double kMarginSlop = 1e-12;
constexpr double kWeightSumTol = 1e-12;

template <class T>
int last_nonzero(const std::vector<T>& v) {
  for (int i = static_cast<int>(v.size()) - 1; i >= 0; --i) {
    if (v[static_cast<std::size_t>(i)] != T{}) return i;
  }
  return 0;
}

}  // namespace

std::string_view verdict_name(Verdict v) noexcept {
  switch (v) {
    case Verdict::kMemberSufficient:
      return "member-sufficient";
    case Verdict::kNotCertified:
      return "not-certified";
    case Verdict::kMemberIff:
      return "member-iff";
    case Verdict::kNonMember:
      return "non-member";
  }
  return "unknown";
}

double analytic_extremal_coeff(const ClassParams& p, int n) {
  if (n < 2) throw DomainError("analytic_extremal_coeff: requires n >= 2");
  const double b = q_bracket(n, p.q());
  return (1.0 - p.alpha()) / (q_bracket_pow(n, p.q(), p.m()) * (b - p.alpha()));
}

double coanalytic_extremal_coeff(const ClassParams& p, int n) {
  if (n < 1) throw DomainError("coanalytic_extremal_coeff: requires n >= 1");
  const double b = q_bracket(n, p.q());
  return (1.0 - p.alpha()) / (q_bracket_pow(n, p.q(), p.m()) * (b + p.alpha()));
}

MembershipReport coefficient_functional(const HarmonicSeries& f,
                                        const ClassParams& p) {
  const int n_max = f.order();
  const auto br = q_bracket_table(n_max, p.q());
  const auto brm = q_bracket_pow_table(n_max, p.q(), p.m());
  const double alpha = p.alpha();
  double sum = 0.0;
  for (int n = 2; n <= n_max; ++n) {
    const auto k = static_cast<std::size_t>(n);
    sum += brm[k] * (br[k] - alpha) * std::abs(f.h().coeff(n));
  }
  for (int n = 1; n <= n_max; ++n) {
    const auto k = static_cast<std::size_t>(n);
    sum += brm[k] * (br[k] + alpha) * std::abs(f.g().coeff(n));
  }
  MembershipReport r;
  r.functional_value = sum;
  r.budget = 1.0 - alpha;
  r.margin = r.budget - sum;
  r.verdict = r.margin >= -kMarginSlop ? Verdict::kMemberSufficient
                                       : Verdict::kNotCertified;
  return r;
}

bool has_restricted_form(const HarmonicSeries& f, const ClassParams& p) {
  for (int n = 2; n <= f.order(); ++n) {
    const Complex a = f.h().coeff(n);
    if (a.imag() != 0.0 || a.real() > 0.0) return false;
  }
  for (int n = 1; n <= f.order(); ++n) {
    const Complex b = f.g().coeff(n);
    if (b.imag() != 0.0 || b.real() < 0.0) return false;
  }
  return f.g().is_zero() || f.co_sign() == p.operator_sign();
}

MembershipReport is_member_restricted(const HarmonicSeries& f,
                                      const ClassParams& p) {
  if (!has_restricted_form(f, p)) {
    throw NotRestrictedError(
        "is_member_restricted: not in the restricted family (requires "
        "h(z) = z - sum a_n z^n, g(z) = sum b_n z^n with a_n, b_n >= 0 real "
        "and co-analytic sign (-1)^m); use the sufficiency test");
  }
  MembershipReport r = coefficient_functional(f, p);
  r.verdict = r.margin >= -kMarginSlop ? Verdict::kMemberIff : Verdict::kNonMember;
  return r;
}

// --- weights ---------------------------------------------------------------

ExtremalWeights::ExtremalWeights(std::vector<Complex> x, std::vector<Complex> y)
    : x_(std::move(x)), y_(std::move(y)) {
  for (std::size_t n = 0; n < std::min<std::size_t>(2, x_.size()); ++n) {
    if (x_[n] != Complex{}) {
      throw DomainError("ExtremalWeights: x_n is defined only for n >= 2");
    }
  }
  if (!y_.empty() && y_[0] != Complex{}) {
    throw DomainError("ExtremalWeights: y_n is defined only for n >= 1");
  }
  double total = 0.0;
  for (const auto& v : x_) total += std::abs(v);
  for (const auto& v : y_) total += std::abs(v);
  if (!std::isfinite(total) || std::abs(total - 1.0) > kWeightSumTol) {
    throw DomainError("ExtremalWeights: sum |x_n| + sum |y_n| = 1 violated (sum = " +
                      std::to_string(total) + ")");
  }
}

int ExtremalWeights::support() const noexcept {
  return std::max(last_nonzero(x_), last_nonzero(y_));
}

ConvexWeights::ConvexWeights(std::vector<double> X, std::vector<double> Y)
    : X_(std::move(X)), Y_(std::move(Y)) {
  if ((!X_.empty() && X_[0] != 0.0) || (!Y_.empty() && Y_[0] != 0.0)) {
    throw DomainError("ConvexWeights: X_n, Y_n are defined only for n >= 1");
  }
  double total = 0.0;
  for (double v : X_) {
    if (!(v >= 0.0)) throw DomainError("ConvexWeights: X_n >= 0 violated");
    total += v;
  }
  for (double v : Y_) {
    if (!(v >= 0.0)) throw DomainError("ConvexWeights: Y_n >= 0 violated");
    total += v;
  }
  if (std::abs(total - 1.0) > kWeightSumTol) {
    throw DomainError("ConvexWeights: sum (X_n + Y_n) = 1 violated (sum = " +
                      std::to_string(total) + ")");
  }
}

int ConvexWeights::support() const noexcept {
  return std::max(last_nonzero(X_), last_nonzero(Y_));
}

// --- constructions ---------------------------------------------------------

HarmonicSeries extremal_function(const ClassParams& p, const ExtremalWeights& w,
                                 int order) {
  const int n_max = std::max({order, w.support(), 1});
  AnalyticSeries h = AnalyticSeries::monomial(1, 1.0, n_max);
  std::vector<Complex> hc(h.dense().begin(), h.dense().end());
  std::vector<Complex> gc(static_cast<std::size_t>(n_max) + 1);
  for (std::size_t n = 2; n < w.x().size(); ++n) {
    if (w.x()[n] != Complex{}) {
      hc[n] = analytic_extremal_coeff(p, static_cast<int>(n)) * w.x()[n];
    }
  }
  for (std::size_t n = 1; n < w.y().size(); ++n) {
    if (w.y()[n] != Complex{}) {
      gc[n] = coanalytic_extremal_coeff(p, static_cast<int>(n)) * w.y()[n];
    }
  }
  return HarmonicSeries::hull_closure(AnalyticSeries::from_dense(std::move(hc)),
                                      AnalyticSeries::from_dense(std::move(gc)));
}

HarmonicSeries extreme_point_h(const ClassParams& p, int n, int order) {
  if (n < 1) throw DomainError("extreme_point_h: requires n >= 1");
  if (n > order) {
    throw DomainError("extreme_point_h: n = " + std::to_string(n) +
                      " exceeds truncation order " + std::to_string(order));
  }
  AnalyticSeries h = AnalyticSeries::monomial(1, 1.0, order);
  if (n >= 2) h = h + AnalyticSeries::monomial(n, -analytic_extremal_coeff(p, n), order);
  return HarmonicSeries(std::move(h), AnalyticSeries(order));
}

HarmonicSeries extreme_point_g(const ClassParams& p, int n, int order) {
  if (n < 1) throw DomainError("extreme_point_g: requires n >= 1");
  if (n > order) {
    throw DomainError("extreme_point_g: n = " + std::to_string(n) +
                      " exceeds truncation order " + std::to_string(order));
  }
  return HarmonicSeries::hull_closure(
      AnalyticSeries::monomial(1, 1.0, order),
      AnalyticSeries::monomial(n, coanalytic_extremal_coeff(p, n), order),
      p.operator_sign());
}

HarmonicSeries convex_combination(const ClassParams& p, const ConvexWeights& w,
                                  int order) {
  const int n_max = std::max({order, w.support(), 1});
  std::vector<Complex> hc(static_cast<std::size_t>(n_max) + 1);
  std::vector<Complex> gc(static_cast<std::size_t>(n_max) + 1);
  hc[1] = 1.0;
  for (std::size_t n = 2; n < w.X().size(); ++n) {
    if (w.X()[n] != 0.0) {
      hc[n] = -w.X()[n] * analytic_extremal_coeff(p, static_cast<int>(n));
    }
  }
  for (std::size_t n = 1; n < w.Y().size(); ++n) {
    if (w.Y()[n] != 0.0) {
      gc[n] = w.Y()[n] * coanalytic_extremal_coeff(p, static_cast<int>(n));
    }
  }
  return HarmonicSeries::hull_closure(AnalyticSeries::from_dense(std::move(hc)),
                                      AnalyticSeries::from_dense(std::move(gc)),
                                      p.operator_sign());
}

ConvexWeights hull_weights(const HarmonicSeries& f, const ClassParams& p) {
  if (!has_restricted_form(f, p)) {
    throw NotRestrictedError("hull_weights: not in the restricted family");
  }
  const auto n_max = static_cast<std::size_t>(f.order());
  std::vector<double> X(n_max + 1, 0.0);
  std::vector<double> Y(n_max + 1, 0.0);
  double rest = 0.0;
  for (int n = 2; n <= f.order(); ++n) {
    X[static_cast<std::size_t>(n)] = -f.h().coeff(n).real() / analytic_extremal_coeff(p, n);
    rest += X[static_cast<std::size_t>(n)];
  }
  for (int n = 1; n <= f.order(); ++n) {
    Y[static_cast<std::size_t>(n)] = f.g().coeff(n).real() / coanalytic_extremal_coeff(p, n);
    rest += Y[static_cast<std::size_t>(n)];
  }
  X[1] = 1.0 - rest;
  if (X[1] < 0.0 && X[1] > -kWeightSumTol) X[1] = 0.0;
  return ConvexWeights(std::move(X), std::move(Y));
}

}  // namespace qharm
