#include "qharm/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "qharm/error.hpp"
#include "qharm/kernels.hpp"

namespace qharm {

namespace {

using kernels::PointsSoA;

constexpr double kInf = std::numeric_limits<double>::infinity();

PointsSoA eval_on(std::span<const Complex> coeffs, const PointsSoA& z) {
  PointsSoA out;
  kernels::horner(coeffs, z, out);
  return out;
}

// f = h + sign * conj(g) at every point.
PointsSoA harmonic_on(const AnalyticSeries& h, const AnalyticSeries& g, int sign,
                      const PointsSoA& z) {
  PointsSoA out = eval_on(h.dense(), z);
  const PointsSoA gv = eval_on(g.dense(), z);
  const double s = sign;
  for (std::size_t i = 0; i < out.size(); ++i) {
    out.re[i] += s * gv.re[i];
    out.im[i] -= s * gv.im[i];
  }
  return out;
}

PointsSoA ring_points(double r, int angles) {
  PointsSoA z(static_cast<std::size_t>(angles));
  for (int k = 0; k < angles; ++k) {
    const Complex p = std::polar(r, 2.0 * std::numbers::pi * k / angles);
    z.re[static_cast<std::size_t>(k)] = p.real();
    z.im[static_cast<std::size_t>(k)] = p.imag();
  }
  return z;
}

void require_restricted_member(const HarmonicSeries& f, const ClassParams& p,
                               const char* who) {
  const MembershipReport m = is_member_restricted(f, p);
  if (m.verdict != Verdict::kMemberIff) {
    throw DomainError(std::string(who) + ": requires a restricted-class member");
  }
}

void require_interior(const HarmonicSeries& f, const char* who) {
  if (f.on_hull_boundary()) {
    throw DomainError(std::string(who) +
                      ": series lies on the hull boundary |b_1| = 1");
  }
}

}  // namespace

double truncation_tail_bound(const ClassParams& p, int order, double r) {
  if (!(r >= 0.0 && r < 1.0)) throw DomainError("truncation_tail_bound: requires 0 <= r < 1");
  const double q = p.q().value();
  const double a = p.alpha();
  double bracket = q_bracket(order + 1, p.q());
  double qn = std::pow(q, order + 1);
  double rn = std::pow(r, order + 1);
  double sum = 0.0;
  for (int n = order + 1; n < order + 10'000'000; ++n) {
    const double term = (1.0 - a) / (std::pow(bracket, p.m()) * (bracket - a)) * rn;
    sum += term;
    if (term < 1e-18 * sum || rn == 0.0) break;
    bracket += qn;
    qn *= q;
    rn *= r;
  }
  return sum;
}

double boundary_slack(const ClassParams& p, int order, double r, TailModel tail) {
  if (tail == TailModel::kExact || r <= 0.99) return 0.0;
  return truncation_tail_bound(p, order, r);
}

VerificationReport verify_ratio_condition(const HarmonicSeries& f,
                                          const ClassParams& p,
                                          const GridSpec& grid, double tol) {
  grid.validate();
  VerificationReport rep;
  rep.check = "ratio_condition";
  rep.grid = grid;
  rep.tol = tol;

  const PointsSoA z(grid.points());
  const HarmonicImage d0 = salagean_q_harmonic(f, p.q(), p.m());
  const HarmonicImage d1 = salagean_q_harmonic(f, p.q(), p.m() + 1);
  const PointsSoA den = harmonic_on(d0.analytic, d0.coanalytic, d0.sign * d0.series_sign, z);
  const PointsSoA num = harmonic_on(d1.analytic, d1.coanalytic, d1.sign * d1.series_sign, z);

  double best = kInf;
  std::size_t best_i = 0;
  std::optional<std::size_t> degenerate;
  for (std::size_t i = 0; i < z.size(); ++i) {
    const double dd = den.re[i] * den.re[i] + den.im[i] * den.im[i];
    if (std::sqrt(dd) < kDivisionGuard) {
      if (!degenerate) degenerate = i;
      continue;
    }
    const double re = (num.re[i] * den.re[i] + num.im[i] * den.im[i]) / dd;
    if (re < best) {
      best = re;
      best_i = i;
    }
  }
  rep.extremum = best;
  if (degenerate) {
    rep.pass = false;
    rep.failure_kind = "degenerate-denominator";
    rep.witness = z.at(*degenerate);
    return rep;
  }
  rep.pass = best >= p.alpha() - tol;
  if (!rep.pass) rep.witness = z.at(best_i);
  return rep;
}

VerificationReport verify_sense_preserving(const HarmonicSeries& f,
                                           const GridSpec& grid) {
  require_interior(f, "verify_sense_preserving");
  grid.validate();
  VerificationReport rep;
  rep.check = "sense_preserving";
  rep.grid = grid;
  rep.tol = 0.0;

  const PointsSoA z(grid.points());
  const PowerSeries hp = derivative(f.h());
  const PowerSeries gp = derivative(f.g());
  const PointsSoA hv = eval_on(hp.coeffs(), z);
  const PointsSoA gv = eval_on(gp.coeffs(), z);

  double worst = -kInf;
  std::size_t worst_i = 0;
  double min_jacobian = kInf;
  std::optional<std::size_t> vanishing;
  for (std::size_t i = 0; i < z.size(); ++i) {
    const double h2 = hv.re[i] * hv.re[i] + hv.im[i] * hv.im[i];
    const double g2 = gv.re[i] * gv.re[i] + gv.im[i] * gv.im[i];
    min_jacobian = std::min(min_jacobian, h2 - g2);
    if (std::sqrt(h2) < kDivisionGuard) {
      if (!vanishing) vanishing = i;
      continue;
    }
    const double dil = std::sqrt(g2 / h2);
    if (dil > worst) {
      worst = dil;
      worst_i = i;
    }
  }
  rep.extremum = worst;
  rep.secondary = min_jacobian;
  if (vanishing) {
    rep.pass = false;
    rep.failure_kind = "vanishing-h-prime";
    rep.witness = z.at(*vanishing);
    return rep;
  }
  rep.pass = worst < 1.0;
  if (!rep.pass) rep.witness = z.at(worst_i);
  return rep;
}

namespace {

// Squared difference quotient; +inf for coincident points.
double pair_quotient(const HarmonicSeries& f, Complex z1, Complex z2) {
  const double den = std::norm(z1 - z2);
  if (den == 0.0) return kInf;
  return std::norm(f.value(z1) - f.value(z2)) / den;
}

struct PairPoint {
  Complex z1, z2;
  double value;
};

// Compass search over (z1, z2) in the closed disc of radius rmax. Fixed
// direction order and step halving keep it deterministic.
PairPoint refine_pair(const HarmonicSeries& f, PairPoint start, double step,
                      double rmax) {
  constexpr int kMaxEvals = 4000;
  constexpr double kMinStep = 1e-13;
  static constexpr Complex kDirs[4] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
  PairPoint cur = start;
  int evals = 0;
  while (step > kMinStep && evals < kMaxEvals) {
    bool moved = false;
    for (int which = 0; which < 2; ++which) {
      for (const Complex& d : kDirs) {
        PairPoint cand = cur;
        Complex& z = which == 0 ? cand.z1 : cand.z2;
        z += step * d;
        if (std::abs(z) > rmax) continue;
        cand.value = pair_quotient(f, cand.z1, cand.z2);
        ++evals;
        if (cand.value < cur.value) {
          cur = cand;
          moved = true;
        }
      }
    }
    if (!moved) step *= 0.5;
  }
  return cur;
}

}  // namespace

VerificationReport verify_injectivity_sampled(const HarmonicSeries& f,
                                              const GridSpec& grid, double tol) {
  require_interior(f, "verify_injectivity_sampled");
  grid.validate();
  VerificationReport rep;
  rep.check = "injectivity_sampled";
  rep.grid = grid;
  rep.tol = tol;

  const PointsSoA z(grid.points());
  const PointsSoA fv = harmonic_on(f.h(), f.g(), f.co_sign(), z);
  const kernels::PairMin pm = kernels::min_pair_quotient(z, fv);
  rep.secondary = std::sqrt(pm.value);
  if (z.size() < 2) {
    rep.extremum = kInf;
    rep.pass = true;
    return rep;
  }

  // Second seed: the sample with the least local stretch ||h'| - |g'||,
  // paired with a point a small step away.
  const PointsSoA hp = eval_on(derivative(f.h()).coeffs(), z);
  const PointsSoA gp = eval_on(derivative(f.g()).coeffs(), z);
  std::size_t flat = 0;
  double flat_v = kInf;
  for (std::size_t i = 0; i < z.size(); ++i) {
    const double v = std::fabs(std::hypot(hp.re[i], hp.im[i]) - std::hypot(gp.re[i], gp.im[i]));
    if (v < flat_v) {
      flat_v = v;
      flat = i;
    }
  }
  const double step = 1.0 / grid.angles_per_ring;
  const double rmax = *std::max_element(grid.radii.begin(), grid.radii.end());
  const Complex zf = z.at(flat);
  const Complex zf2 = zf * (1.0 - 0.5 * step);

  PairPoint best{z.at(pm.i), z.at(pm.j), pm.value};
  for (PairPoint seed : {best, PairPoint{zf, zf2, pair_quotient(f, zf, zf2)}}) {
    const PairPoint r = refine_pair(f, seed, step, rmax);
    if (r.value < best.value) best = r;
  }
  rep.extremum = std::sqrt(best.value);
  rep.pass = rep.extremum > tol;
  if (!rep.pass) {
    rep.witness = best.z1;
    rep.partner = best.z2;
  }
  return rep;
}

std::vector<double> necessity_radii() {
  std::vector<double> r;
  for (int k = 1; k <= 990; ++k) r.push_back(k / 1000.0);
  constexpr int kSteps = 3000;
  const double lo = std::log(1e-2);
  const double hi = std::log(1e-10);
  for (int k = 1; k <= kSteps; ++k) {
    r.push_back(1.0 - std::exp(lo + (hi - lo) * k / kSteps));
  }
  return r;
}

double real_axis_quotient(const HarmonicSeries& f, const ClassParams& p, double r) {
  const int n_max = f.order();
  const auto br = q_bracket_table(n_max, p.q());
  const auto brm = q_bracket_pow_table(n_max, p.q(), p.m());
  const double alpha = p.alpha();
  // Horner in r over powers r^{n-1}, from the top.
  double num = 0.0;
  double den = 0.0;
  for (int n = n_max; n >= 1; --n) {
    const auto k = static_cast<std::size_t>(n);
    const double a = (n >= 2) ? -f.h().coeff(n).real() : 0.0;
    const double b = f.g().coeff(n).real();
    double cn = -brm[k] * (br[k] + alpha) * b;
    double cd = brm[k] * b;
    if (n >= 2) {
      cn -= brm[k] * (br[k] - alpha) * a;
      cd -= brm[k] * a;
    } else {
      cn += 1.0 - alpha;
      cd += 1.0;
    }
    num = num * r + cn;
    den = den * r + cd;
  }
  return num / den;
}

VerificationReport verify_real_axis(const HarmonicSeries& f, const ClassParams& p,
                                    std::span<const double> r_grid) {
  if (!has_restricted_form(f, p)) {
    throw NotRestrictedError("verify_real_axis: not in the restricted family");
  }
  VerificationReport rep;
  rep.check = "real_axis_condition";
  rep.tol = 0.0;
  rep.grid.angles_per_ring = 1;
  rep.grid.radii.assign(r_grid.begin(), r_grid.end());
  rep.grid.max_radius = r_grid.empty() ? 0.0 : *std::max_element(r_grid.begin(), r_grid.end());

  double best = kInf;
  std::optional<double> first_negative;
  for (double r : r_grid) {
    if (!(r > 0.0 && r < 1.0)) throw DomainError("verify_real_axis: radii must lie in (0, 1)");
    const double v = real_axis_quotient(f, p, r);
    if (!std::isfinite(v)) continue;
    best = std::min(best, v);
    if (v < 0.0 && (!first_negative || r < *first_negative)) first_negative = r;
  }
  rep.extremum = best;
  rep.pass = !first_negative.has_value();
  if (first_negative) rep.witness = *first_negative;
  return rep;
}

std::optional<double> necessity_witness(const HarmonicSeries& f,
                                        const ClassParams& p,
                                        std::span<const double> r_grid) {
  const MembershipReport m = is_member_restricted(f, p);
  if (m.verdict == Verdict::kMemberIff) {
    throw DomainError("necessity_witness: margin >= 0, no witness can exist");
  }
  const VerificationReport rep = verify_real_axis(f, p, r_grid);
  if (const double* r0 = std::get_if<double>(&rep.witness)) return *r0;
  return std::nullopt;
}

VerificationReport verify_distortion(const HarmonicSeries& f, const ClassParams& p,
                                     std::span<const double> radii, double tol,
                                     int angles, TailModel tail,
                                     BoundsVariant variant) {
  require_restricted_member(f, p, "verify_distortion");
  if (radii.empty()) throw DomainError("verify_distortion: no radii given");
  VerificationReport rep;
  rep.check = "distortion";
  rep.tol = tol;
  rep.grid.radii.assign(radii.begin(), radii.end());
  rep.grid.angles_per_ring = angles;
  rep.grid.max_radius = *std::max_element(radii.begin(), radii.end());
  rep.grid.validate();

  const double b1 = f.g().coeff(1).real();
  double best = kInf;
  double worst_excess = kInf;  // min of statistic + allowance
  Complex worst_z{};
  for (double r : radii) {
    const DistortionBound bd = distortion_bounds(p, b1, r, variant);
    const double allowance = tol + boundary_slack(p, f.order(), r, tail);
    const PointsSoA z = ring_points(r, angles);
    const PointsSoA fv = harmonic_on(f.h(), f.g(), f.co_sign(), z);
    for (std::size_t i = 0; i < z.size(); ++i) {
      const double mod = std::hypot(fv.re[i], fv.im[i]);
      const double stat = std::min(mod - bd.lower, bd.upper - mod);
      best = std::min(best, stat);
      if (stat + allowance < worst_excess) {
        worst_excess = stat + allowance;
        worst_z = z.at(i);
      }
    }
  }
  rep.extremum = best;
  rep.pass = worst_excess >= 0.0;
  if (!rep.pass) rep.witness = worst_z;
  return rep;
}

VerificationReport verify_covering(const HarmonicSeries& f, const ClassParams& p,
                                   double ring_radius, double tol, int angles,
                                   TailModel tail, BoundsVariant variant) {
  require_restricted_member(f, p, "verify_covering");
  if (!(ring_radius > 0.0 && ring_radius < 1.0)) {
    throw DomainError("verify_covering: ring radius must lie in (0, 1)");
  }
  VerificationReport rep;
  rep.check = "covering";
  rep.tol = tol;
  rep.grid.radii = {ring_radius};
  rep.grid.angles_per_ring = angles;
  rep.grid.max_radius = ring_radius;

  const double b1 = f.g().coeff(1).real();
  const double cover = covering_radius(p, b1, variant);
  const double bracket = distortion_bracket(p, b1, variant);
  const auto lower = [&](double r) { return (1.0 - b1) * r - bracket * r * r; };
  const double ring_slack = std::max(0.0, lower(1.0) - lower(ring_radius));
  const double slack = ring_slack + boundary_slack(p, f.order(), ring_radius, tail);

  const PointsSoA z = ring_points(ring_radius, angles);
  const PointsSoA fv = harmonic_on(f.h(), f.g(), f.co_sign(), z);
  double best = kInf;
  std::size_t best_i = 0;
  for (std::size_t i = 0; i < z.size(); ++i) {
    const double mod = std::hypot(fv.re[i], fv.im[i]);
    if (mod < best) {
      best = mod;
      best_i = i;
    }
  }
  rep.extremum = best;
  rep.secondary = cover;
  rep.pass = best >= cover - slack - tol;
  if (!rep.pass) rep.witness = z.at(best_i);
  return rep;
}

VerificationReport verify_reduction_m0(const HarmonicSeries& f, QParam q,
                                       const GridSpec& grid) {
  grid.validate();
  VerificationReport rep;
  rep.check = "reduction_m0";
  rep.grid = grid;
  rep.tol = 0.0;
  rep.evidence_grade = false;

  const PointsSoA z(grid.points());
  const HarmonicImage d0 = salagean_q_harmonic(f, q, 0);
  const PointsSoA lhs = harmonic_on(d0.analytic, d0.coanalytic, d0.sign * d0.series_sign, z);
  const PointsSoA rhs = harmonic_on(f.h(), f.g(), f.co_sign(), z);
  double worst = 0.0;
  std::size_t worst_i = 0;
  for (std::size_t i = 0; i < z.size(); ++i) {
    const double d = std::hypot(lhs.re[i] - rhs.re[i], lhs.im[i] - rhs.im[i]);
    if (d > worst) {
      worst = d;
      worst_i = i;
    }
  }
  rep.extremum = worst;
  rep.pass = worst == 0.0;
  if (!rep.pass) rep.witness = z.at(worst_i);
  return rep;
}

ReductionQ1Result verify_reduction_q1(const AnalyticSeries& s, int m,
                                      std::span<const double> q_seq) {
  if (m < 0) throw DomainError("verify_reduction_q1: requires m >= 0");
  if (q_seq.empty()) throw DomainError("verify_reduction_q1: empty q sequence");
  for (std::size_t k = 1; k < q_seq.size(); ++k) {
    if (!(q_seq[k] > q_seq[k - 1])) {
      throw DomainError("verify_reduction_q1: q sequence must be increasing");
    }
  }
  ReductionQ1Result out;
  const int n_max = s.order();
  for (double qv : q_seq) {
    const QParam q(qv);
    const AnalyticSeries d = salagean_q(s, q, m);
    std::vector<double> err(static_cast<std::size_t>(n_max) + 1, 0.0);
    double worst = 0.0;
    for (int n = 1; n <= n_max; ++n) {
      // |[n]^m c_n - n^m c_n| = |[n]^m - n^m| |c_n| up to rounding.
      const double classical = std::pow(static_cast<double>(n), m);
      const double e = std::abs(d.coeff(n) - classical * s.coeff(n));
      err[static_cast<std::size_t>(n)] = e;
      worst = std::max(worst, e);
    }
    out.q_values.push_back(qv);
    out.errors.push_back(std::move(err));
    out.max_errors.push_back(worst);
  }

  VerificationReport& rep = out.report;
  rep.check = "reduction_q1";
  rep.evidence_grade = false;
  rep.grid.angles_per_ring = 1;
  rep.grid.max_radius = 0.0;
  const double q_last = q_seq.back();
  // n - [n]_q <= n(n-1)(1-q)/2, so |[n]^m - n^m| <= m (n-1)(1-q)/2 n^m: the
  // envelope is relative to the classical coefficient n^m |c_n|.
  rep.tol = static_cast<double>(m) * n_max * n_max * (1.0 - q_last);
  rep.extremum = out.max_errors.back();
  std::optional<CoefficientWitness> bad;
  for (std::size_t k = 1; k < out.errors.size() && !bad; ++k) {
    for (int n = 1; n <= n_max; ++n) {
      if (out.errors[k][static_cast<std::size_t>(n)] >
          out.errors[k - 1][static_cast<std::size_t>(n)]) {
        bad = CoefficientWitness{n, out.q_values[k]};
        break;
      }
    }
  }
  for (int n = 1; n <= n_max && !bad; ++n) {
    const double scale = std::pow(static_cast<double>(n), m) * std::abs(s.coeff(n));
    const double rounding = 4.0 * std::numeric_limits<double>::epsilon() * scale;
    if (out.errors.back()[static_cast<std::size_t>(n)] > rep.tol * scale + rounding) {
      bad = CoefficientWitness{n, q_last};
    }
  }
  rep.pass = !bad;
  if (bad) rep.witness = *bad;
  return out;
}

std::vector<DiscrepancyRow> b1_discrepancy_table(std::span<const ClassParams> params,
                                                 std::span<const double> b1_values,
                                                 std::span<const double> radii,
                                                 int max_n, int angles, double tol) {
  if (max_n < 2) throw DomainError("b1_discrepancy_table: requires max_n >= 2");
  std::vector<DiscrepancyRow> rows;
  const PointsSoA boundary = ring_points(1.0, angles);
  for (const ClassParams& p : params) {
    const double alpha = p.alpha();
    for (double b1 : b1_values) {
      if (b1 > max_class_b1(p)) continue;
      const double budget = (1.0 - alpha) - (1.0 + alpha) * b1;

      std::vector<HarmonicSeries> members;
      const auto base_h = AnalyticSeries::monomial(1, 1.0, max_n);
      const auto base_g = AnalyticSeries::monomial(1, b1, max_n);
      for (int n = 2; n <= max_n; ++n) {
        const double wa = q_bracket_pow(n, p.q(), p.m()) * (q_bracket(n, p.q()) - alpha);
        const double wb = q_bracket_pow(n, p.q(), p.m()) * (q_bracket(n, p.q()) + alpha);
        members.emplace_back(base_h + AnalyticSeries::monomial(n, -budget / wa, max_n), base_g,
                             p.operator_sign());
        members.emplace_back(base_h, base_g + AnalyticSeries::monomial(n, budget / wb, max_n),
                             p.operator_sign());
      }
      {
        const double wa = q_bracket_pow(2, p.q(), p.m()) * (q_bracket(2, p.q()) - alpha);
        const double wb = q_bracket_pow(2, p.q(), p.m()) * (q_bracket(2, p.q()) + alpha);
        for (double t : {0.25, 0.5, 0.75}) {
          members.emplace_back(base_h + AnalyticSeries::monomial(2, -t * budget / wa, max_n),
                               base_g + AnalyticSeries::monomial(2, (1 - t) * budget / wb, max_n),
                               p.operator_sign());
        }
      }

      double cover_min = kInf;
      for (const auto& f : members) {
        const PointsSoA fv = harmonic_on(f.h(), f.g(), f.co_sign(), boundary);
        for (std::size_t i = 0; i < fv.size(); ++i) {
          cover_min = std::min(cover_min, std::hypot(fv.re[i], fv.im[i]));
        }
      }

      for (double r : radii) {
        DiscrepancyRow row;
        row.q = p.q().value();
        row.m = p.m();
        row.alpha = alpha;
        row.b1 = b1;
        row.r = r;
        const DistortionBound printed = distortion_bounds(p, b1, r, BoundsVariant::kPrinted);
        const DistortionBound variant = distortion_bounds(p, b1, r, BoundsVariant::kVariant);
        row.printed_lower = printed.lower;
        row.printed_upper = printed.upper;
        row.variant_lower = variant.lower;
        row.variant_upper = variant.upper;
        row.oracle_min = kInf;
        row.oracle_max = -kInf;
        const PointsSoA z = ring_points(r, angles);
        for (const auto& f : members) {
          const PointsSoA fv = harmonic_on(f.h(), f.g(), f.co_sign(), z);
          for (std::size_t i = 0; i < fv.size(); ++i) {
            const double mod = std::hypot(fv.re[i], fv.im[i]);
            row.oracle_min = std::min(row.oracle_min, mod);
            row.oracle_max = std::max(row.oracle_max, mod);
          }
        }
        row.distortion_violated =
            row.oracle_max > printed.upper + tol || row.oracle_min < printed.lower - tol;
        row.printed_cover = covering_radius(p, b1, BoundsVariant::kPrinted);
        row.variant_cover = covering_radius(p, b1, BoundsVariant::kVariant);
        row.oracle_cover = cover_min;
        row.cover_violated = cover_min < row.printed_cover - tol;
        rows.push_back(row);
      }
    }
  }
  return rows;
}

bool SuiteResult::all_pass() const {
  return std::all_of(reports.begin(), reports.end(),
                     [](const VerificationReport& r) { return r.pass; });
}

SuiteResult run_suite(const HarmonicSeries& f, const ClassParams& p,
                      const SuiteOptions& opt) {
  SuiteResult out;
  bool restricted_member = false;
  if (opt.restricted) {
    const MembershipReport m = is_member_restricted(f, p);
    if (m.verdict == Verdict::kNonMember) {
      out.reports.push_back(verify_real_axis(f, p, necessity_radii()));
    } else {
      restricted_member = true;
    }
  }
  out.reports.push_back(verify_ratio_condition(f, p, opt.grid, opt.tol));
  if (!f.on_hull_boundary()) {
    out.reports.push_back(verify_sense_preserving(f, opt.grid));
    out.reports.push_back(verify_injectivity_sampled(f, opt.injectivity_grid, opt.tol));
  }
  out.reports.push_back(verify_reduction_m0(f, p.q(), opt.grid));
  if (restricted_member && !f.on_hull_boundary()) {
    out.reports.push_back(verify_distortion(f, p, opt.distortion_radii, opt.tol, 128,
                                            opt.tail, opt.variant));
    out.reports.push_back(verify_covering(f, p, opt.ring_radius, opt.tol, 1024, opt.tail,
                                          opt.variant));
  }
  return out;
}

}  // namespace qharm
