#include "qharm/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qharm/error.hpp"

namespace qharm::sampling {

double uniform(Rng& rng, double lo, double hi) {
  const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * u;
}

int uniform_int(Rng& rng, int lo, int hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<int>(rng() % span);
}

ClassParams random_params(Rng& rng, const ParamRanges& ranges) {
  const double q = uniform(rng, ranges.q_lo, ranges.q_hi);
  const int m = uniform_int(rng, 0, ranges.m_max);
  const double alpha = uniform(rng, 0.0, ranges.alpha_hi);
  return ClassParams(QParam(q), m, alpha);
}

AnalyticSeries random_series(Rng& rng, int order) {
  std::vector<Complex> c(static_cast<std::size_t>(order));
  for (auto& v : c) v = {uniform(rng, -1.0, 1.0), uniform(rng, -1.0, 1.0)};
  return AnalyticSeries::from_coeffs(std::move(c));
}

namespace {

Complex random_phase(Rng& rng) {
  return std::polar(1.0, uniform(rng, 0.0, 2.0 * std::numbers::pi));
}

}  // namespace

namespace {

// Functional weight of |a_n| (analytic) or |b_n| (co-analytic).
double weight(const ClassParams& p, int n, bool analytic) {
  const double b = q_bracket(n, p.q());
  return q_bracket_pow(n, p.q(), p.m()) * (analytic ? b - p.alpha() : b + p.alpha());
}

double functional_of(const ClassParams& p, const std::vector<Complex>& hc,
                     const std::vector<Complex>& gc) {
  double f = 0.0;
  for (std::size_t n = 2; n < hc.size(); ++n) {
    if (hc[n] != Complex{}) f += weight(p, static_cast<int>(n), true) * std::abs(hc[n]);
  }
  for (std::size_t n = 1; n < gc.size(); ++n) {
    if (gc[n] != Complex{}) f += weight(p, static_cast<int>(n), false) * std::abs(gc[n]);
  }
  return f;
}

HarmonicSeries assemble(std::vector<Complex> hc, std::vector<Complex> gc, int sign) {
  hc[1] = 1.0;
  return HarmonicSeries(AnalyticSeries::from_dense(std::move(hc)),
                        AnalyticSeries::from_dense(std::move(gc)), sign);
}

}  // namespace

HarmonicSeries random_member(Rng& rng, const ClassParams& p, int support,
                             double u_lo, double u_hi, int max_terms) {
  if (support < 2) throw DomainError("random_member: support must be >= 2");
  const auto n_max = static_cast<std::size_t>(support);
  std::vector<Complex> hc(n_max + 1);
  std::vector<Complex> gc(n_max + 1);
  const int terms = uniform_int(rng, 1, max_terms);
  for (int t = 0; t < terms; ++t) {
    const Complex v = uniform(rng, 0.05, 1.0) * random_phase(rng);
    if (uniform(rng, 0.0, 1.0) < 0.5) {
      hc[static_cast<std::size_t>(uniform_int(rng, 2, support))] += v;
    } else {
      gc[static_cast<std::size_t>(uniform_int(rng, 1, support))] += v;
    }
  }
  const double u = uniform(rng, u_lo, u_hi);
  const double scale = u * (1.0 - p.alpha()) / functional_of(p, hc, gc);
  for (auto& v : hc) v *= scale;
  for (auto& v : gc) v *= scale;
  return assemble(std::move(hc), std::move(gc), 1);
}

HarmonicSeries random_restricted(Rng& rng, const ClassParams& p, int support,
                                 double ratio, int max_terms) {
  if (support < 2) throw DomainError("random_restricted: support must be >= 2");
  const auto n_max = static_cast<std::size_t>(support);
  for (;;) {
    std::vector<Complex> hc(n_max + 1);
    std::vector<Complex> gc(n_max + 1);
    const int terms = uniform_int(rng, 1, max_terms);
    for (int t = 0; t < terms; ++t) {
      const double v = uniform(rng, 0.05, 1.0);
      if (uniform(rng, 0.0, 1.0) < 0.5) {
        hc[static_cast<std::size_t>(uniform_int(rng, 2, support))] += v;
      } else {
        gc[static_cast<std::size_t>(uniform_int(rng, 1, support))] += v;
      }
    }
    const double scale = ratio * (1.0 - p.alpha()) / functional_of(p, hc, gc);
    for (auto& v : hc) v = -v.real() * scale;
    for (auto& v : gc) v = v.real() * scale;
    for (auto& v : hc) {
      if (v == Complex{}) v = Complex{};  // drop negative zeros
    }
    if (std::abs(gc[1]) < 1.0) return assemble(std::move(hc), std::move(gc), p.operator_sign());
  }
}

ConvexWeights random_convex_weights(Rng& rng, int support, bool allow_b1, int max_terms) {
  if (support < 2) throw DomainError("random_convex_weights: support must be >= 2");
  const auto n_max = static_cast<std::size_t>(support);
  std::vector<double> X(n_max + 1, 0.0);
  std::vector<double> Y(n_max + 1, 0.0);
  const int terms = uniform_int(rng, 1, max_terms);
  double total = 0.0;
  for (int t = 0; t < terms; ++t) {
    const double v = uniform(rng, 0.05, 1.0);
    total += v;
    if (uniform(rng, 0.0, 1.0) < 0.5) {
      X[static_cast<std::size_t>(uniform_int(rng, 1, support))] += v;
    } else {
      Y[static_cast<std::size_t>(uniform_int(rng, allow_b1 ? 1 : 2, support))] += v;
    }
  }
  for (auto& v : X) v /= total;
  for (auto& v : Y) v /= total;
  // Put the rounding residue on the largest entry so the sum is 1 to an ulp.
  double sum = 0.0;
  for (double v : X) sum += v;
  for (double v : Y) sum += v;
  auto& big = *std::max_element(X.begin(), X.end()) >= *std::max_element(Y.begin(), Y.end())
                  ? *std::max_element(X.begin(), X.end())
                  : *std::max_element(Y.begin(), Y.end());
  big += 1.0 - sum;
  return ConvexWeights(std::move(X), std::move(Y));
}

ExtremalWeights random_extremal_weights(Rng& rng, int support, int max_terms) {
  if (support < 2) throw DomainError("random_extremal_weights: support must be >= 2");
  const auto n_max = static_cast<std::size_t>(support);
  std::vector<Complex> x(n_max + 1);
  std::vector<Complex> y(n_max + 1);
  const int terms = uniform_int(rng, 1, max_terms);
  double total = 0.0;
  for (int t = 0; t < terms; ++t) {
    const double mag = uniform(rng, 0.05, 1.0);
    const Complex v = mag * random_phase(rng);
    if (uniform(rng, 0.0, 1.0) < 0.5) {
      x[static_cast<std::size_t>(uniform_int(rng, 2, support))] += v;
    } else {
      y[static_cast<std::size_t>(uniform_int(rng, 1, support))] += v;
    }
  }
  for (const auto& v : x) total += std::abs(v);
  for (const auto& v : y) total += std::abs(v);
  for (auto& v : x) v /= total;
  for (auto& v : y) v /= total;
  return ExtremalWeights(std::move(x), std::move(y));
}

}  // namespace qharm::sampling
