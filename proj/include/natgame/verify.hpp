#pragma once

#include <vector>

#include "natgame/analytic.hpp"
#include "natgame/domain.hpp"

namespace natgame {

/// Evaluates every pure strategy of both players against the proposed pair
/// and checks the saddle chain H(i,Y) <= v <= H(X,j) at the given tolerance.
template <class T>
SaddleCertificateT<T> certify_saddle(const GameMatrixT<T>& H, const MixedStrategyT<T>& x,
                                     const MixedStrategyT<T>& y, const T& value,
                                     const T& tolerance) {
  if (tolerance < T(0)) throw ArgumentError("tolerance must be non-negative");
  if (x.size() != H.rows() || y.size() != H.cols())
    throw DimensionError("strategy dimensions do not match matrix");

  SaddleCertificateT<T> cert;
  cert.value = value;
  cert.tolerance = tolerance;
  cert.row_payoffs.reserve(static_cast<std::size_t>(H.rows()));
  cert.col_payoffs.reserve(static_cast<std::size_t>(H.cols()));

  for (int i = 0; i < H.rows(); ++i) cert.row_payoffs.push_back(pure_row_payoff(H, i, y));
  for (int j = 0; j < H.cols(); ++j) cert.col_payoffs.push_back(pure_col_payoff(H, x, j));

  cert.max_row_violation = T(cert.row_payoffs.front() - value);
  for (const T& p : cert.row_payoffs)
    cert.max_row_violation = max_of(cert.max_row_violation, T(p - value));
  cert.max_col_violation = T(value - cert.col_payoffs.front());
  for (const T& p : cert.col_payoffs)
    cert.max_col_violation = max_of(cert.max_col_violation, T(value - p));

  cert.mixed_payoff = payoff(H, x, y);
  cert.valid = cert.max_row_violation <= tolerance && cert.max_col_violation <= tolerance &&
               abs_value(T(cert.mixed_payoff - value)) <= tolerance;
  return cert;
}

/// True iff all row payoffs H(i, y) for i in `support` agree pairwise
/// within tol.
template <class T>
bool equalizer_check(const GameMatrixT<T>& H, const MixedStrategyT<T>& y,
                     const std::vector<int>& support, const T& tol) {
  if (support.empty()) throw ArgumentError("support must be non-empty");
  T lo = pure_row_payoff(H, support.front(), y);
  T hi = lo;
  for (std::size_t k = 1; k < support.size(); ++k) {
    const T p = pure_row_payoff(H, support[k], y);
    lo = min_of(lo, p);
    hi = max_of(hi, p);
  }
  return T(hi - lo) <= tol;
}

template <class T>
struct OffSupportReportT {
  bool passed;
  bool vacuous;      // support covers all strategies
  T column_margin;   // min over j > omega of H(X,j) - v
  T row_slack;       // min over i > omega of v - H(i,Y)
  explicit operator bool() const { return passed; }
};

/// Checks the strategies beyond the support: dominated rows never beat the
/// value, and off-support columns cost the minimizer strictly more.
template <class T>
OffSupportReportT<T> off_support_check(const LossVectorT<T>& t, const GameSolutionT<T>& sol,
                                       const T& tol) {
  const GameMatrixT<T> H = diagonal_matrix(t);
  if (sol.x.size() != H.rows() || sol.y.size() != H.cols())
    throw DimensionError("solution dimensions do not match loss vector");

  OffSupportReportT<T> report{true, sol.support >= t.size(), T(0), T(0)};
  bool first = true;
  for (int k = sol.support; k < t.size(); ++k) {
    const T row = pure_row_payoff(H, k, sol.y);
    const T col = pure_col_payoff(H, sol.x, k);
    const T row_slack = T(sol.value - row);
    const T col_margin = T(col - sol.value);
    if (row > sol.value + tol || col < sol.value - tol) report.passed = false;
    if (first) {
      report.row_slack = row_slack;
      report.column_margin = col_margin;
      first = false;
    } else {
      report.row_slack = min_of(report.row_slack, row_slack);
      report.column_margin = min_of(report.column_margin, col_margin);
    }
  }
  return report;
}

}  // namespace natgame
