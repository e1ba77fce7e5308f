#pragma once

// Grid-based numerical checks of the class statements. Every check samples
// finitely many points, so a pass is evidence on that grid, not a proof.

#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "qharm/bounds.hpp"
#include "qharm/classes.hpp"
#include "qharm/series.hpp"

namespace qharm {

/// Offending coefficient index for the q -> 1 reduction check.
struct CoefficientWitness {
  int n = 0;
  double q = 0.0;
};

/// A point z, a radius r0 on the positive real axis, or a coefficient.
using Witness = std::variant<std::monostate, Complex, double, CoefficientWitness>;

struct VerificationReport {
  std::string check;
  bool pass = false;
  /// The critical sampled statistic (min, max or max error, per check).
  double extremum = 0.0;
  /// Present whenever pass is false.
  Witness witness;
  /// Second point of a pair witness (injectivity).
  std::optional<Complex> partner;
  GridSpec grid;
  double tol = 0.0;
  /// Empty on ordinary inequality failures; names special failure modes
  /// such as "degenerate-denominator" or "vanishing-h-prime".
  std::string failure_kind;
  /// Check-specific companion value (e.g. min Jacobian).
  std::optional<double> secondary;
  bool evidence_grade = true;
};

inline constexpr double kDefaultTol = 1e-6;
inline constexpr double kIdentityTol = 1e-10;
inline constexpr double kDivisionGuard = 1e-14;
inline constexpr double kDefaultRingRadius = 1.0 - 1e-3;

/// Whether coefficients beyond the stored order are taken as zero (the
/// series is an exact polynomial) or bounded by the class budget.
enum class TailModel { kExact, kClassBudget };

/// sum_{n > order} (1-alpha)/([n]^m([n]-alpha)) r^n, the largest modulus the
/// missing tail of a class member can contribute at radius r.
double truncation_tail_bound(const ClassParams& p, int order, double r);

/// Slack added at radius r: the tail bound when r > 0.99 under kClassBudget,
/// otherwise zero.
double boundary_slack(const ClassParams& p, int order, double r, TailModel tail);

/// min Re(D^{m+1} f / D^m f) over the grid; passes iff >= alpha - tol.
VerificationReport verify_ratio_condition(const HarmonicSeries& f,
                                          const ClassParams& p,
                                          const GridSpec& grid = GridSpec::standard(),
                                          double tol = kDefaultTol);

/// max |g'/h'| over the grid; passes iff < 1. secondary = min Jacobian.
VerificationReport verify_sense_preserving(const HarmonicSeries& f,
                                           const GridSpec& grid = GridSpec::standard());

/// min |f(z_i) - f(z_j)| / |z_i - z_j| over distinct grid pairs, then
/// refined by a local search over pairs inside the grid's largest radius.
/// Passes iff the refined minimum is > tol. secondary = grid-only minimum.
VerificationReport verify_injectivity_sampled(const HarmonicSeries& f,
                                              const GridSpec& grid = GridSpec::injectivity(),
                                              double tol = kDefaultTol);

/// Radii for real-axis scans: uniform on (0, 0.99] then 1 - r geometric down
/// to 1e-10.
std::vector<double> necessity_radii();

/// The real-axis class quotient for a restricted f at z = r:
/// [(1-alpha) - sum [n]^m([n]-alpha) a_n r^{n-1} - sum [n]^m([n]+alpha) b_n r^{n-1}]
///   / [1 - sum [n]^m a_n r^{n-1} + sum [n]^m b_n r^{n-1}].
/// Equals Re(D^{m+1}f(r)/D^m f(r)) - alpha.
double real_axis_quotient(const HarmonicSeries& f, const ClassParams& p, double r);

/// Scans r_grid for the real-axis quotient; passes iff it stays >= 0.
/// extremum = min quotient; witness = smallest r with a negative quotient.
VerificationReport verify_real_axis(const HarmonicSeries& f, const ClassParams& p,
                                    std::span<const double> r_grid);

/// Smallest sampled r0 in (0, 1) with a negative real-axis quotient. Requires
/// the restricted form and a negative margin.
std::optional<double> necessity_witness(const HarmonicSeries& f,
                                        const ClassParams& p,
                                        std::span<const double> r_grid);

/// Samples |f(r e^{i theta})| against the distortion bounds (b1 read from f).
/// extremum = min over samples of min(|f| - lower, upper - |f|).
VerificationReport verify_distortion(const HarmonicSeries& f, const ClassParams& p,
                                     std::span<const double> radii,
                                     double tol = kDefaultTol, int angles = 128,
                                     TailModel tail = TailModel::kExact,
                                     BoundsVariant variant = BoundsVariant::kPrinted);

/// min |f| on the ring |z| = ring_radius against the covering radius, less
/// the ring slack max(0, L(1) - L(ring_radius)) of the lower distortion
/// bound L and any tail slack. A necessary-condition check.
VerificationReport verify_covering(const HarmonicSeries& f, const ClassParams& p,
                                   double ring_radius = kDefaultRingRadius,
                                   double tol = kDefaultTol, int angles = 1024,
                                   TailModel tail = TailModel::kExact,
                                   BoundsVariant variant = BoundsVariant::kPrinted);

/// max |D_q^0 f(z) - f(z)|; passes iff exactly zero.
VerificationReport verify_reduction_m0(const HarmonicSeries& f, QParam q,
                                       const GridSpec& grid = GridSpec::standard());

struct ReductionQ1Result {
  VerificationReport report;
  std::vector<double> q_values;
  /// errors[k][n] = |[n]_{q_k}^m - n^m| |c_n|, n = 0..order (slot 0 unused).
  std::vector<std::vector<double>> errors;
  /// max over n of errors[k].
  std::vector<double> max_errors;
};

/// Coefficient errors of D_q^m against the classical n^m along q_seq.
/// Passes iff every coefficient's error is non-increasing along q_seq and
/// the last is within m N^2 (1 - q_last) relative to n^m |c_n|.
ReductionQ1Result verify_reduction_q1(const AnalyticSeries& s, int m,
                                      std::span<const double> q_seq);

/// One row of the b1 comparison between the printed bounds, the variant
/// factor, and a brute-force search over two-term margin-zero members.
struct DiscrepancyRow {
  double q = 0.0;
  int m = 0;
  double alpha = 0.0;
  double b1 = 0.0;
  double r = 0.0;
  double printed_lower = 0.0;
  double printed_upper = 0.0;
  double variant_lower = 0.0;
  double variant_upper = 0.0;
  double oracle_min = 0.0;  // min |f| at radius r over the searched members
  double oracle_max = 0.0;
  bool distortion_violated = false;  // oracle outside printed bounds beyond tol
  double printed_cover = 0.0;
  double variant_cover = 0.0;
  double oracle_cover = 0.0;  // min over members of min |f| on |z| = 1
  bool cover_violated = false;
};

/// For each (p, b1 <= (1-alpha)/(1+alpha), r): the searched members are
/// z - a z^n + s conj(b1 z + b z^k) spending the whole remaining budget on one
/// extra coefficient (n or k in 2..max_n) or splitting it between a_2 and b_2.
std::vector<DiscrepancyRow> b1_discrepancy_table(std::span<const ClassParams> params,
                                                 std::span<const double> b1_values,
                                                 std::span<const double> radii,
                                                 int max_n = 12, int angles = 720,
                                                 double tol = kDefaultTol);

/// Result of the full battery on a single series.
struct SuiteResult {
  std::vector<VerificationReport> reports;
  bool all_pass() const;
};

struct SuiteOptions {
  GridSpec grid = GridSpec::standard();
  GridSpec injectivity_grid = GridSpec::injectivity();
  double tol = kDefaultTol;
  std::vector<double> distortion_radii{0.25, 0.5, 0.9};
  double ring_radius = kDefaultRingRadius;
  TailModel tail = TailModel::kExact;
  BoundsVariant variant = BoundsVariant::kPrinted;
  bool restricted = false;
};

/// Runs ratio, sense-preservation, injectivity and the m = 0 reduction; for
/// restricted members also distortion and covering; for restricted inputs
/// over budget, the real-axis scan that produces the necessity witness.
SuiteResult run_suite(const HarmonicSeries& f, const ClassParams& p,
                      const SuiteOptions& opt);

}  // namespace qharm
