#pragma once

#include <vector>

namespace qharm {

/// Deformation parameter q, strictly inside (0, 1).
class QParam {
 public:
  explicit QParam(double q);

  double value() const noexcept { return q_; }

 private:
  double q_;
};

/// The triple (q, m, alpha) indexing a coefficient class.
class ClassParams {
 public:
  ClassParams(QParam q, int m, double alpha);

  QParam q() const noexcept { return q_; }
  int m() const noexcept { return m_; }
  double alpha() const noexcept { return alpha_; }

  /// (-1)^m, the sign the operator attaches to the co-analytic part.
  int operator_sign() const noexcept { return (m_ % 2 == 0) ? 1 : -1; }

 private:
  QParam q_;
  int m_;
  double alpha_;
};

/// q-integer [n]_q = 1 + q + ... + q^(n-1).
///
/// Evaluated as a compensated sum of the powers, never as (1-q^n)/(1-q),
/// so the result stays accurate to about one ulp as q approaches 1.
double q_bracket(int n, QParam q);

/// [n]_q^m; m == 0 yields exactly 1.
double q_bracket_pow(int n, QParam q, int m);

/// Table t with t[n] = [n]_q for 1 <= n <= max_n and t[0] = 0. Entries are
/// bit-identical to q_bracket(n, q).
std::vector<double> q_bracket_table(int max_n, QParam q);

/// Table t with t[n] = [n]_q^m for 1 <= n <= max_n and t[0] = 0.
std::vector<double> q_bracket_pow_table(int max_n, QParam q, int m);

}  // namespace qharm
