#pragma once

// Closed-form distortion and covering bounds for the restricted class.

#include <string_view>

#include "qharm/qcore.hpp"

namespace qharm {

/// Which b_1 factor to use. kPrinted is (1+alpha)/([2]_q - alpha) in the
/// distortion bracket; kVariant swaps in (1+alpha)/([2]_q + alpha).
enum class BoundsVariant { kPrinted, kVariant };

std::string_view variant_name(BoundsVariant v) noexcept;

struct DistortionBound {
  double r = 0.0;
  double b1 = 0.0;
  double lower = 0.0;
  double upper = 0.0;
  /// Set when the lower bound is negative (vacuous); the value is not clamped.
  bool lower_vacuous = false;
  /// Set when the bracket is negative, i.e. b1 exceeds (1-alpha)/(1+alpha)
  /// and no restricted member has this b1.
  bool bracket_negative = false;
};

/// (1/[2]^m) ((1-alpha)/([2]-alpha) - factor * b1), factor per `variant`.
double distortion_bracket(const ClassParams& p, double b1,
                          BoundsVariant variant = BoundsVariant::kPrinted);

/// (1 -+ b1) r -+ bracket r^2. Requires 0 <= b1 < 1 and 0 < r < 1.
DistortionBound distortion_bounds(const ClassParams& p, double b1, double r,
                                  BoundsVariant variant = BoundsVariant::kPrinted);

/// kPrinted: ([2]^{m+1} - 1 - ([2]^m - 1) alpha) / ([2]^m ([2]-alpha))
///           * (1 - ([2]-alpha)/([2]+alpha) b1).
/// kVariant: the r -> 1 limit of the variant lower distortion bound,
///           1 - b1 - distortion_bracket(p, b1, kVariant).
/// Requires 0 <= b1 < 1.
double covering_radius(const ClassParams& p, double b1,
                       BoundsVariant variant = BoundsVariant::kPrinted);

/// Largest b1 admitted by the class budget, (1-alpha)/(1+alpha).
double max_class_b1(const ClassParams& p);

}  // namespace qharm
