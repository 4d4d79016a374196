#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "natgame/analytic.hpp"
#include "natgame/oracle.hpp"
#include "natgame/verify.hpp"
#include "test_support.hpp"

using namespace natgame;

namespace {

const std::vector<double> kFiveLosses{30, 28, 26, 24, 22};
const std::vector<double> kFractional{1.0 / 3, 1 / 3.5, 1.0 / 4, 1 / 4.5, 1.0 / 5};

LossVectorQ fractional_exact() {
  return LossVectorQ(std::vector<Rational>{Rational(1, 3), Rational(2, 7), Rational(1, 4),
                                           Rational(2, 9), Rational(1, 5)});
}

// Independent scan of the truncation inequalities, straight off the
// definition, used as the oracle for support_index.
int first_violation_minus_one(const std::vector<double>& t) {
  const int n = static_cast<int>(t.size());
  if (n <= 2) return n;
  double harmonic = 1.0 / t[0] + 1.0 / t[1];
  for (int k = 3; k <= n; ++k) {
    const double bound = (k - 2) / harmonic;
    if (!(t[static_cast<std::size_t>(k - 1)] - bound > 1e-12 * std::max(std::abs(bound), t[static_cast<std::size_t>(k - 1)])))
      return k - 1;
    harmonic += 1.0 / t[static_cast<std::size_t>(k - 1)];
  }
  return n;
}

}  // namespace

TEST_CASE("full support holds for the five-loss fixture") {
  CHECK(holds_full_support(LossVector(kFiveLosses)));
}

TEST_CASE("full support is vacuous for n <= 2") {
  CHECK(holds_full_support(LossVector(std::vector<double>{1, 1}, true)));
  CHECK(holds_full_support(LossVector(std::vector<double>{7})));
}

TEST_CASE("full support fails at the boundary equality of the fractional fixture") {
  // at k=5 the bound is 3/15, exactly equal to the fifth loss
  CHECK_FALSE(holds_full_support(LossVector(kFractional)));
  CHECK_FALSE(holds_full_support(fractional_exact()));
}

TEST_CASE("support index examples") {
  CHECK(support_index(LossVector(kFiveLosses)) == 5);
  CHECK(support_index(LossVector(std::vector<double>{10})) == 1);
  CHECK(support_index(LossVector(kFractional)) == 4);
  CHECK(support_index(fractional_exact()) == 4);
  CHECK(support_index(LossVector(kFractional)) == first_violation_minus_one(kFractional));
}

TEST_CASE("support index equals the first-violation scan on random instances") {
  std::mt19937_64 rng(555111);
  for (int trial = 0; trial < 200; ++trial) {
    // mix wide-range magnitudes so truncation actually happens
    const LossVector t = test_support::random_loss_vector(rng, 2, 10, 0.01, 100.0);
    CHECK(support_index(t) == first_violation_minus_one(t.values()));
  }
}

TEST_CASE("support index on a prefix agrees when the violation is inside it") {
  std::mt19937_64 rng(911911);
  for (int trial = 0; trial < 100; ++trial) {
    const LossVector t = test_support::random_loss_vector(rng, 3, 10, 0.01, 100.0);
    const int omega = support_index(t);
    if (omega >= t.size() - 1) continue;
    for (int keep = omega + 1; keep < t.size(); ++keep) {
      std::vector<double> prefix(t.values().begin(), t.values().begin() + keep);
      CHECK(support_index(LossVector(prefix)) == omega);
    }
  }
}

TEST_CASE("diagonal matrix layout") {
  const GameMatrix H = diagonal_matrix(LossVector(kFiveLosses));
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j)
      CHECK(H.at(i, j) == (i == j ? 0.0 : kFiveLosses[static_cast<std::size_t>(i)]));

  const GameMatrix one = diagonal_matrix(LossVector(std::vector<double>{5}));
  CHECK(one.rows() == 1);
  CHECK(one.at(0, 0) == 0.0);

  const GameMatrix two = diagonal_matrix(LossVector(std::vector<double>{2, 1}));
  CHECK(two.at(0, 0) == 0.0);
  CHECK(two.at(0, 1) == 2.0);
  CHECK(two.at(1, 0) == 1.0);
  CHECK(two.at(1, 1) == 0.0);
}

TEST_CASE("game value examples") {
  const double s = 1.0 / 30 + 1.0 / 28 + 1.0 / 26 + 1.0 / 24 + 1.0 / 22;
  CHECK(game_value(LossVector(kFiveLosses)) == doctest::Approx(4.0 / s).epsilon(1e-14));
  CHECK(game_value(LossVector(std::vector<double>{10})) == 0.0);
  CHECK(game_value(LossVector(std::vector<double>{2, 1})) ==
        doctest::Approx(2.0 / 3).epsilon(1e-14));
}

TEST_CASE("solve_diagonal reproduces the published five-loss allocation to print precision") {
  const auto sol = solve_diagonal(LossVector(kFiveLosses));
  const std::vector<double> reference{0.315, 0.266, 0.21, 0.143, 0.066};
  for (int j = 0; j < 5; ++j)
    CHECK(sol.y[j] == doctest::Approx(reference[static_cast<std::size_t>(j)]).epsilon(4e-3));
  CHECK(sol.support == 5);
  CHECK(sol.method == SolveMethod::analytic);

  // LP is the independent oracle; the equilibrium is unique here
  const auto lp = lp_solve(diagonal_matrix(LossVector(kFiveLosses)));
  CHECK(sol.value == doctest::Approx(lp.value).epsilon(1e-10));
  for (int j = 0; j < 5; ++j) {
    CHECK(sol.y[j] == doctest::Approx(lp.y[j]).epsilon(1e-8));
    CHECK(sol.x[j] == doctest::Approx(lp.x[j]).epsilon(1e-8));
  }
}

TEST_CASE("constant losses give the uniform pair") {
  const double c = 3.25;
  LossVector t(std::vector<double>(6, c), true);
  const auto sol = solve_diagonal(t);
  for (int j = 0; j < 6; ++j) {
    CHECK(sol.y[j] == doctest::Approx(1.0 / 6).epsilon(1e-13));
    CHECK(sol.x[j] == doctest::Approx(1.0 / 6).epsilon(1e-13));
  }
  CHECK(sol.value == doctest::Approx(c * 5.0 / 6).epsilon(1e-13));

  LossVectorQ tq(std::vector<Rational>(6, Rational(13, 4)), true);
  const auto solq = solve_diagonal(tq);
  CHECK(solq.value == Rational(13, 4) * Rational(5, 6));
  for (int j = 0; j < 6; ++j) CHECK(solq.y[j] == Rational(1, 6));
}

TEST_CASE("two-strategy game closed form") {
  const auto sol = solve_diagonal(LossVector(std::vector<double>{2, 1}));
  CHECK(sol.value == doctest::Approx(2.0 / 3).epsilon(1e-14));
  CHECK(sol.x[0] == doctest::Approx(1.0 / 3).epsilon(1e-14));
  CHECK(sol.x[1] == doctest::Approx(2.0 / 3).epsilon(1e-14));
  // equalizing allocation: row payoffs 2*y2 and 1*y1 both meet 2/3
  CHECK(sol.y[0] == doctest::Approx(2.0 / 3).epsilon(1e-14));
  CHECK(sol.y[1] == doctest::Approx(1.0 / 3).epsilon(1e-14));

  const auto lp = lp_solve(diagonal_matrix(LossVector(std::vector<double>{2, 1})));
  CHECK(lp.value == doctest::Approx(2.0 / 3).epsilon(1e-12));
  CHECK(lp.y[0] == doctest::Approx(sol.y[0]).epsilon(1e-10));
}

TEST_CASE("single strategy game is worth zero") {
  const auto sol = solve_diagonal(LossVector(std::vector<double>{10}));
  CHECK(sol.value == 0.0);
  CHECK(sol.support == 1);
  CHECK(sol.x[0] == 1.0);
  CHECK(sol.y[0] == 1.0);
}

TEST_CASE("exact solution of the fractional fixture") {
  const auto sol = solve_diagonal(fractional_exact());
  CHECK(sol.support == 4);
  CHECK(sol.value == Rational(1, 5));
  CHECK(sol.y.probabilities() ==
        std::vector<Rational>{Rational(2, 5), Rational(3, 10), Rational(1, 5), Rational(1, 10),
                              Rational(0)});
  CHECK(sol.x.probabilities() ==
        std::vector<Rational>{Rational(1, 5), Rational(7, 30), Rational(4, 15), Rational(3, 10),
                              Rational(0)});
}

TEST_CASE("exact solution of the five-loss fixture") {
  LossVectorQ t(std::vector<Rational>{Rational(30), Rational(28), Rational(26), Rational(24),
                                      Rational(22)});
  const auto sol = solve_diagonal(t);
  CHECK(sol.value == Rational(160160, 7793));
  CHECK(game_value(t) == Rational(160160, 7793));
  CHECK(sol.y[0] == Rational(7363, 23379));
  CHECK(sol.y[3] == Rational(3359, 23379));
  // exact equality with the LP oracle
  const auto lp = lp_solve(diagonal_matrix(t));
  CHECK(lp.value == sol.value);
}

TEST_CASE("equality at the truncation boundary drops the new strategy") {
  // harmonic sum of (2,2) is 1, so a third loss of exactly 1 violates
  LossVectorQ t(std::vector<Rational>{Rational(2), Rational(2), Rational(1)}, true);
  CHECK(support_index(t) == 2);
  const auto sol = solve_diagonal(t);
  CHECK(sol.value == Rational(1));
  CHECK(sol.y.probabilities() ==
        std::vector<Rational>{Rational(1, 2), Rational(1, 2), Rational(0)});
}

TEST_CASE("equalizer property on the support") {
  std::mt19937_64 rng(424242);
  for (int trial = 0; trial < 100; ++trial) {
    const LossVector t = test_support::random_loss_vector(rng, 2, 10, 0.01, 100.0);
    const auto sol = solve_diagonal(t);
    const GameMatrix H = diagonal_matrix(t);
    for (int i = 0; i < sol.support; ++i)
      CHECK(std::abs(pure_row_payoff(H, i, sol.y) - sol.value) <= 1e-10);
  }
}

TEST_CASE("off-support rows are dominated and columns strictly worse") {
  const LossVector t(kFractional);
  const auto sol = solve_diagonal(t);
  const GameMatrix H = diagonal_matrix(t);
  const double s = 3.0 + 3.5 + 4.0 + 4.5;
  REQUIRE(sol.support == 4);
  for (int i = sol.support; i < t.size(); ++i) {
    CHECK(pure_row_payoff(H, i, sol.y) == doctest::Approx(t[i]).epsilon(1e-12));
    CHECK(pure_row_payoff(H, i, sol.y) <= sol.value + 1e-12);
  }
  for (int j = sol.support; j < t.size(); ++j)
    CHECK(pure_col_payoff(H, sol.x, j) == doctest::Approx(4.0 / s).epsilon(1e-12));
}

TEST_CASE("scaling the losses scales the value and fixes the strategies") {
  std::mt19937_64 rng(77777);
  for (int trial = 0; trial < 30; ++trial) {
    const LossVector t = test_support::random_loss_vector(rng, 2, 8);
    const auto base = solve_diagonal(t);
    for (double c : {0.5, 2.0, 7.0}) {
      std::vector<double> scaled;
      for (double v : t.values()) scaled.push_back(c * v);
      const auto sol = solve_diagonal(LossVector(scaled));
      CHECK(sol.support == base.support);
      CHECK(sol.value == doctest::Approx(c * base.value).epsilon(1e-12));
      for (int j = 0; j < t.size(); ++j) {
        CHECK(std::abs(sol.y[j] - base.y[j]) <= 1e-12);
        CHECK(std::abs(sol.x[j] - base.x[j]) <= 1e-12);
      }
    }
  }
}

TEST_CASE("exact scaling is an identity on strategies") {
  LossVectorQ t(std::vector<Rational>{Rational(7, 2), Rational(3, 2), Rational(1, 7)});
  const auto base = solve_diagonal(t);
  std::vector<Rational> scaled;
  for (const auto& v : t.values()) scaled.push_back(v * Rational(7));
  const auto sol = solve_diagonal(LossVectorQ(scaled));
  CHECK(sol.value == base.value * Rational(7));
  CHECK(sol.y.probabilities() == base.y.probabilities());
  CHECK(sol.x.probabilities() == base.x.probabilities());
}

TEST_CASE("analytic agrees with the LP oracle on random instances") {
  std::mt19937_64 rng(13579);
  for (int trial = 0; trial < 100; ++trial) {
    const LossVector t = test_support::random_loss_vector(rng, 2, 10);
    const auto sol = solve_diagonal(t);
    const GameMatrix H = diagonal_matrix(t);
    const auto lp = lp_solve(H);
    CHECK(std::abs(sol.value - lp.value) <= 1e-9);
    const auto cert = certify_saddle(H, sol.x, sol.y, lp.value, 1e-9);
    CHECK(cert.valid);
  }
}

TEST_CASE("sorted wrapper restores the caller's order") {
  const std::vector<double> shuffled{24, 30, 22, 28, 26};
  const auto wrapped = solve_diagonal_sorted(shuffled);
  const auto sorted = solve_diagonal(LossVector(kFiveLosses));

  CHECK(wrapped.solution.value == doctest::Approx(sorted.value).epsilon(1e-14));
  CHECK(wrapped.order == std::vector<int>{1, 3, 4, 0, 2});
  // entry k of the sorted solution lands at the original position of loss k
  CHECK(wrapped.solution.y[1] == doctest::Approx(sorted.y[0]).epsilon(1e-14));
  CHECK(wrapped.solution.y[0] == doctest::Approx(sorted.y[3]).epsilon(1e-14));
  CHECK(wrapped.solution.y[2] == doctest::Approx(sorted.y[4]).epsilon(1e-14));

  // certificate still holds on the unsorted matrix
  GameMatrix H = GameMatrix::filled(5, 5, 0.0);
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j)
      if (i != j) H.at(i, j) = shuffled[static_cast<std::size_t>(i)];
  const auto cert =
      certify_saddle(H, wrapped.solution.x, wrapped.solution.y, wrapped.solution.value, 1e-12);
  CHECK(cert.valid);

  CHECK_THROWS_AS(solve_diagonal_sorted(std::vector<double>{3, 3, 1}), ValidationError);
  CHECK_NOTHROW(solve_diagonal_sorted(std::vector<double>{3, 3, 1}, true));
}
