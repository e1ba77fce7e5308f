#pragma once

// Seeded random generators for property sweeps. Draws use a fixed mapping
// from the 64-bit Mersenne Twister stream, so a seed reproduces the same
// inputs on any platform.

#include <cstdint>
#include <random>

#include "qharm/classes.hpp"
#include "qharm/qcore.hpp"
#include "qharm/series.hpp"

namespace qharm::sampling {

using Rng = std::mt19937_64;

/// Uniform on [lo, hi).
double uniform(Rng& rng, double lo, double hi);
/// Uniform integer on [lo, hi].
int uniform_int(Rng& rng, int lo, int hi);

struct ParamRanges {
  double q_lo = 0.05;
  double q_hi = 0.95;
  int m_max = 4;
  double alpha_hi = 0.9;
};

ClassParams random_params(Rng& rng, const ParamRanges& ranges = {});

/// Series with `order` coefficients drawn uniformly from the unit square.
AnalyticSeries random_series(Rng& rng, int order);

/// A harmonic series with 1..max_terms nonzero complex coefficients at random
/// indices in [2, support] for h and [1, support] for g, scaled so the
/// coefficient functional equals u (1 - alpha) with u drawn from [u_lo, u_hi).
HarmonicSeries random_member(Rng& rng, const ClassParams& p, int support,
                             double u_lo = 0.0, double u_hi = 1.0,
                             int max_terms = 4);

/// Restricted-form series (real a_n, b_n >= 0, co_sign (-1)^m) whose
/// functional equals ratio (1 - alpha). Redraws until |b_1| < 1.
HarmonicSeries random_restricted(Rng& rng, const ClassParams& p, int support,
                                 double ratio, int max_terms = 4);

/// Random finite-support convex weights; Y_1 is forced to zero unless
/// allow_b1.
ConvexWeights random_convex_weights(Rng& rng, int support, bool allow_b1,
                                    int max_terms = 4);

/// Random extremal weights with sum |x_n| + sum |y_n| = 1.
ExtremalWeights random_extremal_weights(Rng& rng, int support, int max_terms = 4);

}  // namespace qharm::sampling
