#pragma once

// Coefficient-class machinery: the weighted coefficient functional, membership
// verdicts, equality-case (extremal) functions, extreme points of the closed
// convex hull of the restricted class, and their convex combinations.

#include <string_view>
#include <vector>

#include "qharm/qcore.hpp"
#include "qharm/series.hpp"

namespace qharm {

enum class Verdict {
  kMemberSufficient,  // functional within budget; sufficient for membership
  kNotCertified,      // over budget, but the test is only sufficient
  kMemberIff,         // restricted family, within budget
  kNonMember,         // restricted family, over budget
};

std::string_view verdict_name(Verdict v) noexcept;

struct MembershipReport {
  double functional_value = 0.0;
  double budget = 0.0;  // 1 - alpha
  double margin = 0.0;  // budget - functional_value
  Verdict verdict = Verdict::kMemberSufficient;
};

/// Weight (1-alpha) / ([n]^m ([n] - alpha)) on |a_n|, inverted.
double analytic_extremal_coeff(const ClassParams& p, int n);
/// Weight (1-alpha) / ([n]^m ([n] + alpha)) on |b_n|, inverted.
double coanalytic_extremal_coeff(const ClassParams& p, int n);

/// Sum_{n>=2} [n]^m([n]-alpha)|a_n| + Sum_{n>=1} [n]^m([n]+alpha)|b_n| over
/// the stored coefficients, compared against 1 - alpha.
MembershipReport coefficient_functional(const HarmonicSeries& f,
                                        const ClassParams& p);

/// True when f has the restricted sign pattern for p: h(z) = z - sum a_n z^n
/// and g(z) = sum b_n z^n with a_n, b_n real and nonnegative, and (unless
/// g == 0) co_sign == (-1)^m.
bool has_restricted_form(const HarmonicSeries& f, const ClassParams& p);

/// Exact membership test for the restricted family. Throws NotRestrictedError
/// for inputs outside that family.
MembershipReport is_member_restricted(const HarmonicSeries& f,
                                      const ClassParams& p);

/// Finite-support complex weights x_n (n >= 2) and y_n (n >= 1) with
/// sum |x_n| + sum |y_n| = 1. Vectors are indexed by n; unused leading slots
/// are zero.
class ExtremalWeights {
 public:
  ExtremalWeights(std::vector<Complex> x, std::vector<Complex> y);

  const std::vector<Complex>& x() const noexcept { return x_; }
  const std::vector<Complex>& y() const noexcept { return y_; }
  int support() const noexcept;

 private:
  std::vector<Complex> x_;
  std::vector<Complex> y_;
};

/// Nonnegative finite-support weights X_n, Y_n (n >= 1) summing to one.
class ConvexWeights {
 public:
  ConvexWeights(std::vector<double> X, std::vector<double> Y);

  const std::vector<double>& X() const noexcept { return X_; }
  const std::vector<double>& Y() const noexcept { return Y_; }
  int support() const noexcept;

 private:
  std::vector<double> X_;
  std::vector<double> Y_;
};

/// z + sum c_n x_n z^n + conj(sum d_n y_n z^n), which meets the coefficient
/// budget with equality. Order is max(order, weight support).
HarmonicSeries extremal_function(const ClassParams& p, const ExtremalWeights& w,
                                 int order = default_truncation_order());

/// h_1(z) = z; h_n(z) = z - c_n z^n for n >= 2.
HarmonicSeries extreme_point_h(const ClassParams& p, int n,
                               int order = default_truncation_order());

/// g_n: analytic part z, co-analytic coefficient d_n at z^n, co_sign (-1)^m.
/// At alpha = 0, n = 1 the result lies on the hull boundary |b_1| = 1.
HarmonicSeries extreme_point_g(const ClassParams& p, int n,
                               int order = default_truncation_order());

/// sum_n (X_n h_n + conj(Y_n g_n)).
HarmonicSeries convex_combination(const ClassParams& p, const ConvexWeights& w,
                                  int order = default_truncation_order());

/// Inverse of convex_combination for restricted members:
/// X_n = a_n / c_n (n >= 2), Y_n = b_n / d_n, X_1 = 1 - rest.
/// Throws NotRestrictedError outside the restricted family.
ConvexWeights hull_weights(const HarmonicSeries& f, const ClassParams& p);

}  // namespace qharm
