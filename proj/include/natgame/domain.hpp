#pragma once

#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "natgame/errors.hpp"
#include "natgame/numeric.hpp"

namespace natgame {

/// Diagonal-game losses, largest first. Strictly decreasing unless
/// constructed relaxed, in which case ties are admitted (never increases).
template <class T>
class LossVectorT {
 public:
  explicit LossVectorT(std::vector<T> losses, bool relaxed = false)
      : t_(std::move(losses)), relaxed_(relaxed) {
    if (t_.empty()) throw DimensionError("loss vector must have at least one entry");
    for (std::size_t i = 0; i < t_.size(); ++i) {
      if constexpr (!scalar_traits<T>::exact) {
        if (!std::isfinite(t_[i]))
          throw ValidationError(element_name(i), "loss must be finite");
      }
      if (!(t_[i] > T(0))) throw ValidationError(element_name(i), "loss must be positive");
    }
    for (std::size_t i = 1; i < t_.size(); ++i) {
      if (t_[i] > t_[i - 1])
        throw ValidationError(element_name(i), "losses must not increase");
      if (!relaxed_ && t_[i] == t_[i - 1])
        throw ValidationError(element_name(i),
                              "losses must be strictly decreasing (use relaxed to admit ties)");
    }
  }

  int size() const { return static_cast<int>(t_.size()); }
  const T& operator[](int i) const { return t_[static_cast<std::size_t>(i)]; }
  const std::vector<T>& values() const { return t_; }
  bool relaxed() const { return relaxed_; }

 private:
  static std::string element_name(std::size_t i) { return "t[" + std::to_string(i + 1) + "]"; }

  std::vector<T> t_;
  bool relaxed_;
};

/// Dense m-by-n payoff matrix. Row player is nature (maximizes losses
/// inflicted), column player is the decision maker (minimizes).
template <class T>
class GameMatrixT {
 public:
  GameMatrixT(int rows, int cols, std::vector<T> entries)
      : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (rows_ < 1 || cols_ < 1) throw DimensionError("matrix must be at least 1x1");
    if (entries_.size() != static_cast<std::size_t>(rows_) * static_cast<std::size_t>(cols_))
      throw DimensionError("entry count does not match matrix shape");
    check_finite();
  }

  explicit GameMatrixT(const std::vector<std::vector<T>>& rows) {
    if (rows.empty() || rows.front().empty())
      throw DimensionError("matrix must be at least 1x1");
    rows_ = static_cast<int>(rows.size());
    cols_ = static_cast<int>(rows.front().size());
    entries_.reserve(static_cast<std::size_t>(rows_) * static_cast<std::size_t>(cols_));
    for (const auto& row : rows) {
      if (static_cast<int>(row.size()) != cols_)
        throw DimensionError("matrix rows must all have the same length");
      entries_.insert(entries_.end(), row.begin(), row.end());
    }
    check_finite();
  }

  static GameMatrixT filled(int rows, int cols, const T& value) {
    return GameMatrixT(rows, cols,
                       std::vector<T>(static_cast<std::size_t>(rows) * cols, value));
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  const T& at(int i, int j) const {
    return entries_[static_cast<std::size_t>(i) * cols_ + j];
  }
  T& at(int i, int j) { return entries_[static_cast<std::size_t>(i) * cols_ + j]; }

  T min_entry() const {
    T best = entries_.front();
    for (const T& e : entries_)
      if (e < best) best = e;
    return best;
  }

 private:
  void check_finite() const {
    if constexpr (!scalar_traits<T>::exact) {
      for (const T& e : entries_)
        if (!std::isfinite(e)) throw ValidationError("H", "matrix entries must be finite");
    }
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<T> entries_;
};

/// Probability vector over pure strategies. Construction validates;
/// renormalization only happens through the explicit factory.
template <class T>
class MixedStrategyT {
 public:
  explicit MixedStrategyT(std::vector<T> probabilities) : p_(std::move(probabilities)) {
    if (p_.empty()) throw DimensionError("mixed strategy must have at least one component");
    T sum(0);
    for (std::size_t i = 0; i < p_.size(); ++i) {
      if constexpr (!scalar_traits<T>::exact) {
        if (!std::isfinite(p_[i]))
          throw ValidationError(component_name(i), "probability must be finite");
      }
      if (p_[i] < T(0))
        throw ValidationError(component_name(i), "probability must be non-negative");
      sum += p_[i];
    }
    if (abs_value(T(sum - T(1))) > scalar_traits<T>::probability_tolerance())
      throw ValidationError("p", "probabilities must sum to 1");
  }

  /// Explicit renormalization of non-negative weights with positive total.
  static MixedStrategyT normalized(std::vector<T> weights) {
    if (weights.empty()) throw DimensionError("mixed strategy must have at least one component");
    T sum(0);
    for (std::size_t i = 0; i < weights.size(); ++i) {
      if (weights[i] < T(0))
        throw ValidationError(component_name(i), "weight must be non-negative");
      sum += weights[i];
    }
    if (!(sum > T(0))) throw ValidationError("p", "weights must have positive total");
    for (T& w : weights) w = T(w / sum);
    return MixedStrategyT(std::move(weights));
  }

  static MixedStrategyT pure(int index, int size) {
    if (size < 1) throw DimensionError("mixed strategy must have at least one component");
    if (index < 0 || index >= size) throw IndexError("pure strategy index out of range");
    std::vector<T> p(static_cast<std::size_t>(size), T(0));
    p[static_cast<std::size_t>(index)] = T(1);
    return MixedStrategyT(std::move(p));
  }

  static MixedStrategyT uniform(int size) {
    if (size < 1) throw DimensionError("mixed strategy must have at least one component");
    return MixedStrategyT(std::vector<T>(static_cast<std::size_t>(size), T(T(1) / T(size))));
  }

  int size() const { return static_cast<int>(p_.size()); }
  const T& operator[](int i) const { return p_[static_cast<std::size_t>(i)]; }
  const std::vector<T>& probabilities() const { return p_; }

 private:
  static std::string component_name(std::size_t i) { return "p[" + std::to_string(i + 1) + "]"; }

  std::vector<T> p_;
};

enum class SolveMethod { analytic, lp, fictitious_play, support_enumeration };

inline const char* method_name(SolveMethod method) {
  switch (method) {
    case SolveMethod::analytic: return "analytic";
    case SolveMethod::lp: return "lp";
    case SolveMethod::fictitious_play: return "fictitious-play";
    case SolveMethod::support_enumeration: return "support-enumeration";
  }
  return "unknown";
}

template <class T>
struct GameSolutionT {
  MixedStrategyT<T> x;  // nature
  MixedStrategyT<T> y;  // decision maker
  T value;
  int support;  // leading strategies with positive probability (diagonal case)
  SolveMethod method;
};

/// Evaluated saddle chain H(i,Y) <= v <= H(X,j) with signed worst-case
/// violations (negative means slack).
template <class T>
struct SaddleCertificateT {
  T value;
  std::vector<T> row_payoffs;
  std::vector<T> col_payoffs;
  T mixed_payoff;
  T max_row_violation;  // max_i row_payoffs[i] - v
  T max_col_violation;  // max_j v - col_payoffs[j]
  T tolerance;
  bool valid;
};

template <class T>
T payoff(const GameMatrixT<T>& H, const MixedStrategyT<T>& x, const MixedStrategyT<T>& y) {
  if (x.size() != H.rows() || y.size() != H.cols())
    throw DimensionError("strategy dimensions do not match matrix");
  T total(0);
  for (int i = 0; i < H.rows(); ++i) {
    if (x[i] == T(0)) continue;
    T row(0);
    for (int j = 0; j < H.cols(); ++j) row += H.at(i, j) * y[j];
    total += x[i] * row;
  }
  return total;
}

template <class T>
T pure_row_payoff(const GameMatrixT<T>& H, int row, const MixedStrategyT<T>& y) {
  if (row < 0 || row >= H.rows()) throw IndexError("row index out of range");
  if (y.size() != H.cols()) throw DimensionError("strategy dimension does not match matrix");
  T total(0);
  for (int j = 0; j < H.cols(); ++j) total += H.at(row, j) * y[j];
  return total;
}

template <class T>
T pure_col_payoff(const GameMatrixT<T>& H, const MixedStrategyT<T>& x, int col) {
  if (col < 0 || col >= H.cols()) throw IndexError("column index out of range");
  if (x.size() != H.rows()) throw DimensionError("strategy dimension does not match matrix");
  T total(0);
  for (int i = 0; i < H.rows(); ++i) total += H.at(i, col) * x[i];
  return total;
}

using LossVector = LossVectorT<double>;
using GameMatrix = GameMatrixT<double>;
using MixedStrategy = MixedStrategyT<double>;
using GameSolution = GameSolutionT<double>;
using SaddleCertificate = SaddleCertificateT<double>;

using LossVectorQ = LossVectorT<Rational>;
using GameMatrixQ = GameMatrixT<Rational>;
using MixedStrategyQ = MixedStrategyT<Rational>;
using GameSolutionQ = GameSolutionT<Rational>;
using SaddleCertificateQ = SaddleCertificateT<Rational>;

}  // namespace natgame
