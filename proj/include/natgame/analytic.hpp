#pragma once

#include <algorithm>
#include <numeric>
#include <utility>
#include <vector>

#include "natgame/domain.hpp"

namespace natgame {

namespace detail {

// Truncation scan: walks k = 3..n testing t_k > (k-2)/sum_{i<k} 1/t_i and
// stops at the first violation (equality counts as a violation). Returns the
// support size and the harmonic sum over that support.
template <class T>
struct SupportProfile {
  int omega;
  T harmonic;  // sum of 1/t_k over k = 1..omega
};

template <class T>
SupportProfile<T> support_profile(const LossVectorT<T>& t) {
  const int n = t.size();
  if (n == 1) return {1, T(T(1) / t[0])};

  T harmonic = T(T(1) / t[0]) + T(T(1) / t[1]);
  for (int k = 3; k <= n; ++k) {
    const T bound = T(T(k - 2) / harmonic);
    if (!definitely_greater(t[k - 1], bound)) return {k - 1, harmonic};
    harmonic += T(1) / t[k - 1];
  }
  return {n, harmonic};
}

}  // namespace detail

/// True iff the full-support inequalities hold for every k in 3..n
/// (vacuously true for n <= 2).
template <class T>
bool holds_full_support(const LossVectorT<T>& t) {
  return detail::support_profile(t).omega == t.size();
}

/// Number of leading strategies that stay in the optimal support: the first
/// violated truncation inequality minus one, or n when none is violated.
template <class T>
int support_index(const LossVectorT<T>& t) {
  return detail::support_profile(t).omega;
}

/// Zero diagonal, row i constant t_i off the diagonal.
template <class T>
GameMatrixT<T> diagonal_matrix(const LossVectorT<T>& t) {
  const int n = t.size();
  GameMatrixT<T> H = GameMatrixT<T>::filled(n, n, T(0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) H.at(i, j) = t[i];
  return H;
}

template <class T>
T game_value(const LossVectorT<T>& t) {
  const auto profile = detail::support_profile(t);
  return T(T(profile.omega - 1) / profile.harmonic);
}

/// Closed-form optimal pair for the diagonal loss game. Strategies beyond the
/// support index are exactly zero.
template <class T>
GameSolutionT<T> solve_diagonal(const LossVectorT<T>& t) {
  const int n = t.size();
  const auto profile = detail::support_profile(t);
  const int omega = profile.omega;
  const T& s = profile.harmonic;
  const T value = T(T(omega - 1) / s);

  std::vector<T> x(static_cast<std::size_t>(n), T(0));
  std::vector<T> y(static_cast<std::size_t>(n), T(0));
  for (int i = 0; i < omega; ++i) {
    const T ts = T(t[i] * s);
    x[static_cast<std::size_t>(i)] = T(T(1) / ts);
    T eta = T(T(ts - T(omega - 1)) / ts);
    if constexpr (!scalar_traits<T>::exact) {
      // boundary supports can round a hair below zero
      if (eta < 0 && eta > -scalar_traits<T>::probability_tolerance()) eta = 0;
    }
    y[static_cast<std::size_t>(i)] = eta;
  }

  return GameSolutionT<T>{MixedStrategyT<T>(std::move(x)), MixedStrategyT<T>(std::move(y)),
                          value, omega, SolveMethod::analytic};
}

/// solve_diagonal on unsorted losses: sorts descending, solves, and maps the
/// strategies back to the caller's order.
template <class T>
struct PermutedSolutionT {
  GameSolutionT<T> solution;    // in the caller's original order
  std::vector<int> order;       // order[k] = original index of the k-th largest loss
  LossVectorT<T> sorted_losses;
};

template <class T>
PermutedSolutionT<T> solve_diagonal_sorted(const std::vector<T>& losses, bool relaxed = false) {
  const int n = static_cast<int>(losses.size());
  if (n == 0) throw DimensionError("loss vector must have at least one entry");

  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return losses[static_cast<std::size_t>(b)] <
                                              losses[static_cast<std::size_t>(a)]; });

  std::vector<T> sorted;
  sorted.reserve(losses.size());
  for (int idx : order) sorted.push_back(losses[static_cast<std::size_t>(idx)]);

  LossVectorT<T> t(std::move(sorted), relaxed);
  GameSolutionT<T> inner = solve_diagonal(t);

  std::vector<T> x(static_cast<std::size_t>(n), T(0));
  std::vector<T> y(static_cast<std::size_t>(n), T(0));
  for (int k = 0; k < n; ++k) {
    x[static_cast<std::size_t>(order[static_cast<std::size_t>(k)])] = inner.x[k];
    y[static_cast<std::size_t>(order[static_cast<std::size_t>(k)])] = inner.y[k];
  }

  GameSolutionT<T> solution{MixedStrategyT<T>(std::move(x)), MixedStrategyT<T>(std::move(y)),
                            inner.value, inner.support, SolveMethod::analytic};
  return PermutedSolutionT<T>{std::move(solution), std::move(order), std::move(t)};
}

}  // namespace natgame
