#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "logent/maxent.hpp"

using namespace logent;

namespace {
const std::vector<double> kDie{-1.0, 0.0, 1.0};
}

TEST(Equilibrium, ThreeFacedDie) {
  for (double m : {-1.0, -0.3, 0.0, 0.5, 1.1}) {
    const auto sol = equilibrium({kDie, m});
    EXPECT_NEAR(sol.lambda, 2.0 / 3, 1e-15);
    EXPECT_NEAR(sol.mu, -m, 1e-15);
    EXPECT_NEAR(sol.p[0], 1.0 / 3 - m / 2, 1e-15);
    EXPECT_NEAR(sol.p[1], 1.0 / 3, 1e-15);
    EXPECT_NEAR(sol.p[2], 1.0 / 3 + m / 2, 1e-15);
  }
  const auto uniform = equilibrium({kDie, 0.0});
  for (double v : uniform.p.entries())
    EXPECT_NEAR(v, 1.0 / 3, 1e-15);

  const double s3 = std::numbers::sqrt3;
  const auto pure = equilibrium({kDie, 2.0 / s3});
  EXPECT_NEAR(pure.p[0], (1 - s3) / 3, 1e-15);
  EXPECT_NEAR(pure.p[1], 1.0 / 3, 1e-15);
  EXPECT_NEAR(pure.p[2], (1 + s3) / 3, 1e-15);
  EXPECT_NEAR(pure.information, 1.0, 1e-15);
  EXPECT_TRUE(pure.admissible);
}

TEST(Equilibrium, FlagsInadmissibleAndRejectsConstantObservable) {
  const auto sol = equilibrium({kDie, 1.5});
  EXPECT_FALSE(sol.admissible);
  EXPECT_GT(sol.information, 1.0);
  try {
    equilibrium({{2.0, 2.0, 2.0}, 2.0});
    FAIL();
  } catch (const invalid_input &e) {
    EXPECT_NE(std::string(e.what()).find("degenerate constraint"),
              std::string::npos);
  }
}

TEST(Equilibrium, StationarityAndConstraints) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int s = 0; s < 200; ++s) {
    std::vector<double> x(2 + s % 7);
    for (auto &v : x)
      v = u(rng);
    const double m = u(rng) * 0.3;
    const auto sol = equilibrium({x, m});
    double sum = 0.0, mean = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      EXPECT_NEAR(2 * sol.p[i] - sol.lambda + sol.mu * x[i], 0.0, 1e-10);
      sum += sol.p[i];
      mean += sol.p[i] * x[i];
    }
    EXPECT_NEAR(sum, 1.0, 1e-10);
    EXPECT_NEAR(mean, m, 1e-10);
  }
}

// The equilibrium minimizes I over the affine set fixed by both constraints.
TEST(Equilibrium, MinimizesInformationOnConstraintSet) {
  const std::vector<double> x{-1.0, 0.2, 0.5, 2.0, 3.0};
  const auto sol = equilibrium({x, 0.7});
  std::mt19937_64 rng(11);
  std::normal_distribution<double> g(0.0, 1.0);
  const double n = static_cast<double>(x.size());
  double xbar = 0.0;
  for (double v : x)
    xbar += v / n;
  for (int s = 0; s < 1000; ++s) {
    // Project a random vector onto {sum d = 0, sum d X = 0}.
    std::vector<double> d(x.size());
    for (auto &v : d)
      v = g(rng);
    double mean_d = 0.0;
    for (double v : d)
      mean_d += v / n;
    for (auto &v : d)
      v -= mean_d;
    double dx = 0.0, xx = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      dx += d[i] * (x[i] - xbar);
      xx += (x[i] - xbar) * (x[i] - xbar);
    }
    for (std::size_t i = 0; i < x.size(); ++i)
      d[i] -= dx / xx * (x[i] - xbar);
    const double eps = 1e-3;
    std::vector<double> q(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
      q[i] = sol.p[i] + eps * d[i];
    EXPECT_GT(information(SignedProbVector(q)), sol.information);
  }
}

TEST(InformationOfMean, Examples) {
  EXPECT_NEAR(information_of_mean({kDie, 0.0}), 1.0 / 3, 1e-15);
  EXPECT_NEAR(information_of_mean({kDie, 2.0 / 3}), 5.0 / 9, 1e-15);
  EXPECT_NEAR(information_of_mean({kDie, 1.0}), 5.0 / 6, 1e-15);
  for (double m : {-1.2, -0.4, 0.1, 0.9})
    EXPECT_NEAR(information_of_mean({kDie, m}),
                equilibrium({kDie, m}).information, 1e-14);
}

TEST(InformationOfMean, ConvexParabolaWithMinimumAtMeanOfX) {
  const std::vector<double> x{0.0, 1.0, 4.0, 5.0};
  const double xbar = 2.5;
  double prev = information_of_mean({x, xbar});
  for (int k = 1; k <= 50; ++k) {
    const double m = xbar + 0.05 * k;
    const double cur = information_of_mean({x, m});
    const double mirror = information_of_mean({x, xbar - 0.05 * k});
    EXPECT_GT(cur, prev);
    EXPECT_NEAR(cur, mirror, 1e-14);
    // Second differences of a parabola are constant and positive.
    const double left = information_of_mean({x, m - 0.05});
    const double right = information_of_mean({x, m + 0.05});
    EXPECT_NEAR(left - 2 * cur + right, 2 * 0.05 * 0.05 / 17.0, 1e-12);
    prev = cur;
  }
}

TEST(MaxMean, Examples) {
  EXPECT_NEAR(max_mean(kDie), 2.0 / std::numbers::sqrt3, 1e-15);
  EXPECT_NEAR(max_mean(kDie, Branch::Negative), -2.0 / std::numbers::sqrt3,
              1e-15);
  EXPECT_NEAR(max_mean_nonnegative(kDie), 2.0 / 3, 1e-15);
  const auto at = equilibrium({kDie, 2.0 / 3});
  EXPECT_NEAR(at.p[0], 0.0, 1e-15);
  EXPECT_NEAR(at.p[1], 1.0 / 3, 1e-15);
  EXPECT_NEAR(at.p[2], 2.0 / 3, 1e-15);

  const double neg = max_mean_nonnegative(kDie, Branch::Negative);
  EXPECT_NEAR(neg, -2.0 / 3, 1e-15);
  const auto mirror = equilibrium({kDie, neg});
  EXPECT_NEAR(mirror.p[0], 2.0 / 3, 1e-15);
  EXPECT_NEAR(mirror.p[2], 0.0, 1e-15);
}

// Brute-force scan of m for the two-outcome observable X = (0, 1).
TEST(MaxMean, GridSearchOracleTwoOutcomes) {
  const std::vector<double> x{0.0, 1.0};
  const double analytic = max_mean(x);
  double lo = 0.5, hi = 3.0;
  // Coarse scan then bisection on I(m) - 1 computed from the explicit state.
  auto info = [&](double m) {
    const auto s = equilibrium({x, m});
    return s.information - 1.0;
  };
  double best = lo;
  for (int k = 0; k <= 25000; ++k) {
    const double m = lo + (hi - lo) * k / 25000.0;
    if (info(m) <= 0.0)
      best = m;
  }
  double a = best, b = best + (hi - lo) / 25000.0;
  for (int it = 0; it < 60; ++it) {
    const double mid = 0.5 * (a + b);
    (info(mid) <= 0.0 ? a : b) = mid;
  }
  EXPECT_NEAR(a, analytic, 1e-8);
  EXPECT_NEAR(analytic, 1.0, 1e-15);
}

TEST(MaxMean, AgreesWithInformationCrossing) {
  const std::vector<double> x{-3.0, 0.5, 1.0, 7.0};
  const double m = max_mean(x);
  EXPECT_NEAR(information_of_mean({x, m}), 1.0, 1e-10);
  EXPECT_NEAR(information_of_mean({x, max_mean(x, Branch::Negative)}), 1.0,
              1e-10);
  // Past the nonnegative limit the smallest entry goes negative.
  const double mpos = max_mean_nonnegative(x);
  EXPECT_NEAR(equilibrium({x, mpos}).p.min_entry(), 0.0, 1e-12);
  EXPECT_LT(equilibrium({x, mpos + 1e-3}).p.min_entry(), 0.0);
  EXPECT_GT(equilibrium({x, mpos - 1e-3}).p.min_entry(), 0.0);
  EXPECT_THROW(max_mean({1.0, 1.0}), invalid_input);
}
