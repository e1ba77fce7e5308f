#include "qharm/bounds.hpp"

#include <cmath>
#include <string>

#include "qharm/error.hpp"

namespace qharm {

namespace {

void check_b1(double b1, const char* who) {
  if (!(b1 >= 0.0 && b1 < 1.0)) {
    throw DomainError(std::string(who) + ": requires 0 <= b1 < 1, got " +
                      std::to_string(b1));
  }
}

}  // namespace

std::string_view variant_name(BoundsVariant v) noexcept {
  return v == BoundsVariant::kPrinted ? "printed" : "variant";
}

double distortion_bracket(const ClassParams& p, double b1, BoundsVariant variant) {
  const double two = q_bracket(2, p.q());
  const double two_m = q_bracket_pow(2, p.q(), p.m());
  const double a = p.alpha();
  const double factor = variant == BoundsVariant::kPrinted ? (1.0 + a) / (two - a)
                                                           : (1.0 + a) / (two + a);
  return ((1.0 - a) / (two - a) - factor * b1) / two_m;
}

DistortionBound distortion_bounds(const ClassParams& p, double b1, double r,
                                  BoundsVariant variant) {
  check_b1(b1, "distortion_bounds");
  if (!(r > 0.0 && r < 1.0)) {
    throw DomainError("distortion_bounds: requires 0 < r < 1, got " + std::to_string(r));
  }
  const double bracket = distortion_bracket(p, b1, variant);
  DistortionBound d;
  d.r = r;
  d.b1 = b1;
  d.upper = (1.0 + b1) * r + bracket * r * r;
  d.lower = (1.0 - b1) * r - bracket * r * r;
  d.lower_vacuous = d.lower < 0.0;
  d.bracket_negative = bracket < 0.0;
  return d;
}

double covering_radius(const ClassParams& p, double b1, BoundsVariant variant) {
  check_b1(b1, "covering_radius");
  if (variant == BoundsVariant::kVariant) {
    return 1.0 - b1 - distortion_bracket(p, b1, variant);
  }
  const double two = q_bracket(2, p.q());
  const double two_m = q_bracket_pow(2, p.q(), p.m());
  const double two_m1 = q_bracket_pow(2, p.q(), p.m() + 1);
  const double a = p.alpha();
  const double lead = (two_m1 - 1.0 - (two_m - 1.0) * a) / (two_m * (two - a));
  return lead * (1.0 - (two - a) / (two + a) * b1);
}

double max_class_b1(const ClassParams& p) {
  return (1.0 - p.alpha()) / (1.0 + p.alpha());
}

}  // namespace qharm
