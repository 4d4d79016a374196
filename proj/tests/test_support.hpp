#pragma once

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "natgame/domain.hpp"

namespace test_support {

// Strictly decreasing losses in (lo, hi]; resamples on (float-improbable) ties.
inline std::vector<double> random_losses(std::mt19937_64& rng, int n, double lo = 0.01,
                                         double hi = 100.0) {
  std::uniform_real_distribution<double> dist(lo, hi);
  std::set<double> unique;
  while (static_cast<int>(unique.size()) < n) unique.insert(dist(rng));
  std::vector<double> values(unique.rbegin(), unique.rend());
  return values;
}

inline natgame::LossVector random_loss_vector(std::mt19937_64& rng, int n_min = 2, int n_max = 10,
                                              double lo = 0.01, double hi = 100.0) {
  std::uniform_int_distribution<int> ndist(n_min, n_max);
  return natgame::LossVector(random_losses(rng, ndist(rng), lo, hi));
}

inline natgame::GameMatrix random_matrix(std::mt19937_64& rng, int max_dim = 4, double lo = -10.0,
                                         double hi = 10.0) {
  std::uniform_int_distribution<int> dim(1, max_dim);
  const int m = dim(rng);
  const int n = dim(rng);
  std::uniform_real_distribution<double> entry(lo, hi);
  std::vector<double> entries(static_cast<std::size_t>(m) * static_cast<std::size_t>(n));
  for (double& e : entries) e = entry(rng);
  return natgame::GameMatrix(m, n, std::move(entries));
}

// Random exact rationals k/scale, strictly decreasing, in (lo_k/scale, hi_k/scale].
inline std::vector<natgame::Rational> random_rational_losses(std::mt19937_64& rng, int n,
                                                             long lo_k = 2, long hi_k = 10000,
                                                             long scale = 100) {
  std::uniform_int_distribution<long> dist(lo_k, hi_k);
  std::set<long> unique;
  while (static_cast<int>(unique.size()) < n) unique.insert(dist(rng));
  std::vector<natgame::Rational> values;
  for (auto it = unique.rbegin(); it != unique.rend(); ++it)
    values.emplace_back(*it, scale);
  for (auto& v : values) v.canonicalize();
  return values;
}

}  // namespace test_support
