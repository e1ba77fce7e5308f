#include "qharm/qcore.hpp"

#include <cmath>
#include <string>

#include "qharm/error.hpp"

namespace qharm {

QParam::QParam(double q) : q_(q) {
  if (!(q > 0.0 && q < 1.0)) {
    throw DomainError("QParam: requires 0 < q < 1, got " + std::to_string(q));
  }
}

ClassParams::ClassParams(QParam q, int m, double alpha)
    : q_(q), m_(m), alpha_(alpha) {
  if (m < 0) {
    throw DomainError("ClassParams: requires m >= 0, got " + std::to_string(m));
  }
  if (!(alpha >= 0.0 && alpha < 1.0)) {
    throw DomainError("ClassParams: requires 0 <= alpha < 1, got " +
                      std::to_string(alpha));
  }
}

namespace {

// Neumaier-compensated running sum of q^k. Calls `emit(n, value)` after
// each of the first max_n terms.
template <class Emit>
void bracket_sweep(int max_n, double q, Emit&& emit) {
  double sum = 0.0;
  double comp = 0.0;
  for (int k = 0; k < max_n; ++k) {
    const double term = (k == 0) ? 1.0 : std::pow(q, k);
    const double t = sum + term;
    if (std::abs(sum) >= std::abs(term)) {
      comp += (sum - t) + term;
    } else {
      comp += (term - t) + sum;
    }
    sum = t;
    emit(k + 1, sum + comp);
  }
}

}  // namespace

double q_bracket(int n, QParam q) {
  if (n < 1) {
    throw DomainError("q_bracket: requires n >= 1, got " + std::to_string(n));
  }
  double out = 0.0;
  bracket_sweep(n, q.value(), [&](int, double v) { out = v; });
  return out;
}

double q_bracket_pow(int n, QParam q, int m) {
  if (m < 0) {
    throw DomainError("q_bracket_pow: requires m >= 0, got " + std::to_string(m));
  }
  const double b = q_bracket(n, q);
  if (m == 0) return 1.0;
  return std::pow(b, m);
}

std::vector<double> q_bracket_table(int max_n, QParam q) {
  if (max_n < 0) throw DomainError("q_bracket_table: requires max_n >= 0");
  std::vector<double> t(static_cast<std::size_t>(max_n) + 1, 0.0);
  bracket_sweep(max_n, q.value(), [&](int n, double v) { t[n] = v; });
  return t;
}

std::vector<double> q_bracket_pow_table(int max_n, QParam q, int m) {
  if (m < 0) throw DomainError("q_bracket_pow_table: requires m >= 0");
  auto t = q_bracket_table(max_n, q);
  for (std::size_t n = 1; n < t.size(); ++n) {
    t[n] = (m == 0) ? 1.0 : std::pow(t[n], m);
  }
  return t;
}

}  // namespace qharm
