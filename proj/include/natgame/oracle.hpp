#pragma once

#include <algorithm>
#include <functional>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "natgame/domain.hpp"

namespace natgame {

namespace detail {

template <class T>
struct PositiveGameLp {
  std::vector<T> primal;  // u, one per column of M
  std::vector<T> dual;    // pi, one per row of M
  T total;                // sum(u) = sum(pi) = 1 / value of the positive game
  long pivots;
};

// Dense-tableau simplex for: maximize sum(u) subject to M u <= 1, u >= 0,
// with every entry of M strictly positive (so the LP is feasible and
// bounded). Run as a minimization of -sum(u); the slack basis is feasible
// from the start, so a single phase suffices. Entering column follows
// Bland's rule; among tied minimum ratios the leaving row takes the smallest
// basis index, which together rule out cycling.
template <class T>
PositiveGameLp<T> solve_positive_game(const GameMatrixT<T>& M) {
  const int m = M.rows();
  const int n = M.cols();
  const int rhs = n + m;
  const long guard = 5000 + 200L * (m + n);

  std::vector<std::vector<T>> tab(static_cast<std::size_t>(m) + 1,
                                  std::vector<T>(static_cast<std::size_t>(n + m) + 1, T(0)));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) tab[i][j] = M.at(i, j);
    tab[i][static_cast<std::size_t>(n + i)] = T(1);
    tab[i][static_cast<std::size_t>(rhs)] = T(1);
  }
  for (int j = 0; j < n; ++j) tab[m][j] = T(-1);

  std::vector<int> basis(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) basis[static_cast<std::size_t>(i)] = n + i;

  long pivots = 0;
  for (;;) {
    // entering: smallest column with a negative reduced cost
    T cost_eps(0);
    if constexpr (!scalar_traits<T>::exact) {
      T scale(1);
      for (int j = 0; j < rhs; ++j) scale = max_of(scale, abs_value(tab[m][j]));
      cost_eps = 1e-11 * scale;
    }
    int entering = -1;
    for (int j = 0; j < rhs; ++j) {
      if (tab[m][j] < -cost_eps) {
        entering = j;
        break;
      }
    }
    if (entering < 0) break;

    T pivot_eps(0);
    if constexpr (!scalar_traits<T>::exact) {
      T scale(0);
      for (int i = 0; i < m; ++i) scale = max_of(scale, abs_value(tab[i][entering]));
      pivot_eps = 1e-11 * max_of(scale, T(1));
    }

    int leaving = -1;
    T best_ratio(0);
    for (int i = 0; i < m; ++i) {
      if (!(tab[i][static_cast<std::size_t>(entering)] > pivot_eps)) continue;
      const T ratio =
          T(tab[i][static_cast<std::size_t>(rhs)] / tab[i][static_cast<std::size_t>(entering)]);
      bool take = false;
      if (leaving < 0) {
        take = true;
      } else if (ratio < best_ratio) {
        take = true;
      } else if constexpr (scalar_traits<T>::exact) {
        if (ratio == best_ratio &&
            basis[static_cast<std::size_t>(i)] < basis[static_cast<std::size_t>(leaving)])
          take = true;
      } else {
        const T slack = 1e-12 * max_of(T(1), abs_value(best_ratio));
        if (ratio <= best_ratio + slack &&
            basis[static_cast<std::size_t>(i)] < basis[static_cast<std::size_t>(leaving)])
          take = true;
      }
      if (take) {
        leaving = i;
        best_ratio = ratio;
      }
    }
    if (leaving < 0) throw SolverError("minimax LP reported unbounded; matrix not positive?");

    // pivot
    auto& prow = tab[static_cast<std::size_t>(leaving)];
    const T pivot = prow[static_cast<std::size_t>(entering)];
    for (auto& e : prow) e = T(e / pivot);
    for (int i = 0; i <= m; ++i) {
      if (i == leaving) continue;
      auto& row = tab[static_cast<std::size_t>(i)];
      const T factor = row[static_cast<std::size_t>(entering)];
      if (factor == T(0)) continue;
      for (int j = 0; j <= rhs; ++j) row[static_cast<std::size_t>(j)] -= factor * prow[static_cast<std::size_t>(j)];
      row[static_cast<std::size_t>(entering)] = T(0);
    }
    basis[static_cast<std::size_t>(leaving)] = entering;

    if (++pivots > guard) throw SolverError("simplex cycle guard exceeded");
  }

  PositiveGameLp<T> out;
  out.primal.assign(static_cast<std::size_t>(n), T(0));
  for (int i = 0; i < m; ++i)
    if (basis[static_cast<std::size_t>(i)] < n)
      out.primal[static_cast<std::size_t>(basis[static_cast<std::size_t>(i)])] =
          tab[static_cast<std::size_t>(i)][static_cast<std::size_t>(rhs)];
  out.dual.assign(static_cast<std::size_t>(m), T(0));
  for (int i = 0; i < m; ++i) out.dual[static_cast<std::size_t>(i)] = tab[m][static_cast<std::size_t>(n + i)];
  out.total = tab[m][static_cast<std::size_t>(rhs)];
  out.pivots = pivots;
  return out;
}

template <class T>
void clamp_tiny_negatives(std::vector<T>& values) {
  if constexpr (!scalar_traits<T>::exact) {
    for (T& v : values) {
      if (v < T(0)) {
        if (v < T(-1e-9)) throw SolverError("solver produced a negative strategy weight");
        v = T(0);
      }
    }
  }
}

// Gaussian elimination solve; returns nothing when the system is singular.
template <class T>
std::optional<std::vector<T>> solve_linear(std::vector<std::vector<T>> a, std::vector<T> b) {
  const int s = static_cast<int>(b.size());
  for (int col = 0; col < s; ++col) {
    int pivot_row = -1;
    if constexpr (scalar_traits<T>::exact) {
      for (int i = col; i < s; ++i)
        if (a[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)] != T(0)) {
          pivot_row = i;
          break;
        }
    } else {
      T best(0);
      for (int i = col; i < s; ++i) {
        const T mag = abs_value(a[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)]);
        if (mag > best) {
          best = mag;
          pivot_row = i;
        }
      }
      if (pivot_row >= 0 && best <= T(1e-12)) pivot_row = -1;
    }
    if (pivot_row < 0) return std::nullopt;
    std::swap(a[static_cast<std::size_t>(col)], a[static_cast<std::size_t>(pivot_row)]);
    std::swap(b[static_cast<std::size_t>(col)], b[static_cast<std::size_t>(pivot_row)]);

    const T pivot = a[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)];
    for (int i = col + 1; i < s; ++i) {
      const T factor = T(a[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)] / pivot);
      if (factor == T(0)) continue;
      for (int j = col; j < s; ++j)
        a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -=
            factor * a[static_cast<std::size_t>(col)][static_cast<std::size_t>(j)];
      b[static_cast<std::size_t>(i)] -= factor * b[static_cast<std::size_t>(col)];
    }
  }
  std::vector<T> z(static_cast<std::size_t>(s), T(0));
  for (int i = s - 1; i >= 0; --i) {
    T acc = b[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < s; ++j)
      acc -= a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * z[static_cast<std::size_t>(j)];
    z[static_cast<std::size_t>(i)] = T(acc / a[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)]);
  }
  return z;
}

}  // namespace detail

/// Exact minimax via the standard LP transform: shift the matrix positive by
/// c = 1 + max(0, -min entry), solve the positive game, recover
/// v = 1/sum(u) - c and both normalized strategies from the primal/dual pair.
template <class T>
GameSolutionT<T> lp_solve(const GameMatrixT<T>& H) {
  const T mn = H.min_entry();
  T shift(1);
  if (mn < T(0)) shift = T(T(1) - mn);

  GameMatrixT<T> M = H;
  for (int i = 0; i < M.rows(); ++i)
    for (int j = 0; j < M.cols(); ++j) M.at(i, j) += shift;

  auto lp = detail::solve_positive_game(M);
  if (!(lp.total > T(0))) throw SolverError("minimax LP returned a non-positive total");

  detail::clamp_tiny_negatives(lp.primal);
  detail::clamp_tiny_negatives(lp.dual);

  const T value = T(T(T(1) / lp.total) - shift);
  return GameSolutionT<T>{MixedStrategyT<T>::normalized(std::move(lp.dual)),
                          MixedStrategyT<T>::normalized(std::move(lp.primal)), value, H.cols(),
                          SolveMethod::lp};
}

struct FictitiousPlayTrace {
  long iterations;
  double lower_bound;  // best guarantee found for the row player
  double upper_bound;  // best guarantee found for the column player
  MixedStrategy x_avg;
  MixedStrategy y_avg;
  bool converged;
};

/// Brown-Robinson iteration. Each round both players best-respond to the
/// opponent's empirical mixture (lowest index wins ties); the running best
/// bounds always bracket the game value. Budget exhaustion is reported in
/// the trace, not thrown.
template <class Observer>
FictitiousPlayTrace fictitious_play(const GameMatrix& H, long max_iters, double eps,
                                    Observer&& observe) {
  if (max_iters < 1) throw ArgumentError("max_iters must be at least 1");
  if (!(eps > 0)) throw ArgumentError("eps must be positive");

  const int m = H.rows();
  const int n = H.cols();
  std::vector<double> row_totals(static_cast<std::size_t>(m), 0.0);
  std::vector<double> col_totals(static_cast<std::size_t>(n), 0.0);
  std::vector<double> x_counts(static_cast<std::size_t>(m), 0.0);
  std::vector<double> y_counts(static_cast<std::size_t>(n), 0.0);

  double best_lower = -std::numeric_limits<double>::infinity();
  double best_upper = std::numeric_limits<double>::infinity();
  long k = 0;
  bool converged = false;

  while (k < max_iters) {
    ++k;
    int bi = 0;
    for (int i = 1; i < m; ++i)
      if (row_totals[static_cast<std::size_t>(i)] > row_totals[static_cast<std::size_t>(bi)]) bi = i;
    x_counts[static_cast<std::size_t>(bi)] += 1.0;
    for (int j = 0; j < n; ++j) col_totals[static_cast<std::size_t>(j)] += H.at(bi, j);

    int bj = 0;
    for (int j = 1; j < n; ++j)
      if (col_totals[static_cast<std::size_t>(j)] < col_totals[static_cast<std::size_t>(bj)]) bj = j;
    y_counts[static_cast<std::size_t>(bj)] += 1.0;
    for (int i = 0; i < m; ++i) row_totals[static_cast<std::size_t>(i)] += H.at(i, bj);

    // after k picks per side: max_i H(i, y_avg) >= v >= min_j H(x_avg, j)
    double upper = row_totals[0];
    for (int i = 1; i < m; ++i) upper = std::max(upper, row_totals[static_cast<std::size_t>(i)]);
    double lower = col_totals[0];
    for (int j = 1; j < n; ++j) lower = std::min(lower, col_totals[static_cast<std::size_t>(j)]);
    upper /= static_cast<double>(k);
    lower /= static_cast<double>(k);
    best_upper = std::min(best_upper, upper);
    best_lower = std::max(best_lower, lower);

    observe(k, best_lower, best_upper);

    if (best_upper - best_lower <= eps) {
      converged = true;
      break;
    }
  }

  return FictitiousPlayTrace{k, best_lower, best_upper,
                             MixedStrategy::normalized(std::move(x_counts)),
                             MixedStrategy::normalized(std::move(y_counts)), converged};
}

inline FictitiousPlayTrace fictitious_play(const GameMatrix& H, long max_iters, double eps) {
  return fictitious_play(H, max_iters, eps, [](long, double, double) {});
}

/// Brute-force equilibrium search over equal-size support pairs (a square
/// kernel always exists). Solves the equalizing system per pair and returns
/// the first candidate that is feasible and certifies.
template <class T>
GameSolutionT<T> enumerate_supports(const GameMatrixT<T>& H) {
  const int m = H.rows();
  const int n = H.cols();
  if (m > 5 || n > 5) throw CapError("support enumeration is capped at 5x5 matrices");

  const T cert_tol = scalar_traits<T>::certificate_tolerance();
  T feas_tol(0);
  if constexpr (!scalar_traits<T>::exact) feas_tol = 1e-9;

  std::vector<int> row_masks, col_masks;
  for (int mask = 1; mask < (1 << m); ++mask) row_masks.push_back(mask);
  for (int mask = 1; mask < (1 << n); ++mask) col_masks.push_back(mask);

  for (int k = 1; k <= std::min(m, n); ++k) {
    for (int rmask : row_masks) {
      if (__builtin_popcount(static_cast<unsigned>(rmask)) != k) continue;
      std::vector<int> rows;
      for (int i = 0; i < m; ++i)
        if (rmask & (1 << i)) rows.push_back(i);

      for (int cmask : col_masks) {
        if (__builtin_popcount(static_cast<unsigned>(cmask)) != k) continue;
        std::vector<int> cols;
        for (int j = 0; j < n; ++j)
          if (cmask & (1 << j)) cols.push_back(j);

        // unknowns (y restricted to cols, v): equalize the support rows
        std::vector<std::vector<T>> ay(static_cast<std::size_t>(k) + 1,
                                       std::vector<T>(static_cast<std::size_t>(k) + 1, T(0)));
        std::vector<T> by(static_cast<std::size_t>(k) + 1, T(0));
        for (int r = 0; r < k; ++r) {
          for (int c = 0; c < k; ++c) ay[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = H.at(rows[static_cast<std::size_t>(r)], cols[static_cast<std::size_t>(c)]);
          ay[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)] = T(-1);
        }
        for (int c = 0; c < k; ++c) ay[static_cast<std::size_t>(k)][static_cast<std::size_t>(c)] = T(1);
        by[static_cast<std::size_t>(k)] = T(1);
        auto ysol = detail::solve_linear(ay, by);
        if (!ysol) continue;

        std::vector<std::vector<T>> ax(static_cast<std::size_t>(k) + 1,
                                       std::vector<T>(static_cast<std::size_t>(k) + 1, T(0)));
        std::vector<T> bx(static_cast<std::size_t>(k) + 1, T(0));
        for (int c = 0; c < k; ++c) {
          for (int r = 0; r < k; ++r) ax[static_cast<std::size_t>(c)][static_cast<std::size_t>(r)] = H.at(rows[static_cast<std::size_t>(r)], cols[static_cast<std::size_t>(c)]);
          ax[static_cast<std::size_t>(c)][static_cast<std::size_t>(k)] = T(-1);
        }
        for (int r = 0; r < k; ++r) ax[static_cast<std::size_t>(k)][static_cast<std::size_t>(r)] = T(1);
        bx[static_cast<std::size_t>(k)] = T(1);
        auto xsol = detail::solve_linear(ax, bx);
        if (!xsol) continue;

        const T v = (*ysol)[static_cast<std::size_t>(k)];
        const T w = (*xsol)[static_cast<std::size_t>(k)];
        if (abs_value(T(v - w)) > max_of(cert_tol, feas_tol)) continue;

        bool feasible = true;
        for (int c = 0; c < k && feasible; ++c)
          if ((*ysol)[static_cast<std::size_t>(c)] < -feas_tol) feasible = false;
        for (int r = 0; r < k && feasible; ++r)
          if ((*xsol)[static_cast<std::size_t>(r)] < -feas_tol) feasible = false;
        if (!feasible) continue;

        std::vector<T> yfull(static_cast<std::size_t>(n), T(0));
        std::vector<T> xfull(static_cast<std::size_t>(m), T(0));
        for (int c = 0; c < k; ++c)
          yfull[static_cast<std::size_t>(cols[static_cast<std::size_t>(c)])] =
              max_of((*ysol)[static_cast<std::size_t>(c)], T(0));
        for (int r = 0; r < k; ++r)
          xfull[static_cast<std::size_t>(rows[static_cast<std::size_t>(r)])] =
              max_of((*xsol)[static_cast<std::size_t>(r)], T(0));

        MixedStrategyT<T> x = MixedStrategyT<T>::normalized(std::move(xfull));
        MixedStrategyT<T> y = MixedStrategyT<T>::normalized(std::move(yfull));
        const auto cert = certify_saddle_for_enumeration(H, x, y, v, cert_tol);
        if (!cert) continue;

        return GameSolutionT<T>{std::move(x), std::move(y), v, n,
                                SolveMethod::support_enumeration};
      }
    }
  }
  throw SolverError("support enumeration found no certified equilibrium");
}

// kept out of verify.hpp to avoid a circular include
template <class T>
bool certify_saddle_for_enumeration(const GameMatrixT<T>& H, const MixedStrategyT<T>& x,
                                    const MixedStrategyT<T>& y, const T& v, const T& tol) {
  for (int i = 0; i < H.rows(); ++i)
    if (pure_row_payoff(H, i, y) > v + tol) return false;
  for (int j = 0; j < H.cols(); ++j)
    if (pure_col_payoff(H, x, j) < v - tol) return false;
  return true;
}

}  // namespace natgame
