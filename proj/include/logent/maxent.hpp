#pragma once

// Minimum-information (maximum logical entropy) distributions under
// sum(p) = 1 and a prescribed mean of one observable X.
//
// Stationarity of F = sum p^2 - lambda sum p + mu sum p X gives
// p_i = (lambda - mu X_i) / 2, and the two constraints fix the multipliers.
// Writing Xbar for the mean of X and S = sum (X_i - Xbar)^2:
//
//   p_i(m) = 1/n + (m - Xbar)(X_i - Xbar) / S
//   I(m)   = 1/n + (m - Xbar)^2 / S
//
// so I(m) = 1 at m = Xbar +- sqrt(S (1 - 1/n)).

#include <cmath>
#include <limits>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "logent/errors.hpp"
#include "logent/prob_core.hpp"

namespace logent {

struct ObservableConstraint {
  std::vector<double> values;
  double target_mean = 0.0;
};

struct EquilibriumSolution {
  SignedProbVector p;
  double lambda;
  double mu;
  double information;
  bool admissible;
};

enum class Branch { Positive, Negative };

namespace detail {

struct ObservableMoments {
  double n;
  double sum;
  double sum_sq;
  double mean;
  double spread; // sum of squared deviations from the mean
};

inline ObservableMoments observable_moments(const std::vector<double> &x) {
  if (x.size() < 2)
    throw invalid_input("observable needs at least 2 outcomes");
  ObservableMoments m{};
  m.n = static_cast<double>(x.size());
  for (double v : x) {
    if (!std::isfinite(v))
      throw invalid_input("observable has a non-finite value");
    m.sum += v;
    m.sum_sq += v * v;
  }
  m.mean = m.sum / m.n;
  for (double v : x)
    m.spread += (v - m.mean) * (v - m.mean);
  if (!(m.spread > 0.0))
    throw invalid_input(
        "degenerate constraint: observable X is constant, so the mean "
        "constraint duplicates normalization");
  return m;
}

} // namespace detail

/// Solves n*lambda - mu*sum(X) = 2 and lambda*sum(X) - mu*sum(X^2) = 2m.
inline EquilibriumSolution equilibrium(const ObservableConstraint &c) {
  const auto mom = detail::observable_moments(c.values);
  // Cramer's rule; det = -n * spread.
  const double det = -mom.n * mom.sum_sq + mom.sum * mom.sum;
  const double lambda =
      (2.0 * -mom.sum_sq + mom.sum * 2.0 * c.target_mean) / det;
  const double mu = (mom.n * 2.0 * c.target_mean - mom.sum * 2.0) / det;

  std::vector<double> p(c.values.size());
  for (std::size_t i = 0; i < p.size(); ++i)
    p[i] = 0.5 * (lambda - mu * c.values[i]);
  SignedProbVector vec(std::move(p));
  const double info = vec.information();
  return EquilibriumSolution{std::move(vec), lambda, mu, info,
                             info <= 1.0 + kClassifyTolerance};
}

/// Closed-form information of the equilibrium state as a function of m.
inline double information_of_mean(const ObservableConstraint &c) {
  const auto mom = detail::observable_moments(c.values);
  const double d = c.target_mean - mom.mean;
  return 1.0 / mom.n + d * d / mom.spread;
}

/// Largest |m - Xbar| reachable by an admissible equilibrium; returns the
/// mean on the requested side.
inline double max_mean(const std::vector<double> &x,
                       Branch branch = Branch::Positive) {
  const auto mom = detail::observable_moments(x);
  const double disc = mom.spread * (1.0 - 1.0 / mom.n);
  if (disc < 0.0)
    throw no_solution("I(m) = 1 has no real root");
  const double half_width = std::sqrt(disc);
  return branch == Branch::Positive ? mom.mean + half_width
                                    : mom.mean - half_width;
}

/// Extreme mean for which every equilibrium entry stays nonnegative.
inline double max_mean_nonnegative(const std::vector<double> &x,
                                   Branch branch = Branch::Positive) {
  const auto mom = detail::observable_moments(x);
  // p_i >= 0  <=>  (m - Xbar)(X_i - Xbar) >= -S/n; the binding entry is the
  // one farthest from the mean on the opposite side.
  double gap = 0.0;
  if (branch == Branch::Positive) {
    for (double v : x)
      gap = std::max(gap, mom.mean - v);
    return mom.mean + mom.spread / (mom.n * gap);
  }
  for (double v : x)
    gap = std::max(gap, v - mom.mean);
  return mom.mean - mom.spread / (mom.n * gap);
}

} // namespace logent
