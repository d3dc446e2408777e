#pragma once

// One-step propagators for linear systems dv/dt = G v with skew-symmetric G.
//
// The diagonal Pade approximant r_s(X) = D_s(X)^{-1} N_s(X) of exp(X) maps
// skew matrices to orthogonal ones (D_s(X) = N_s(-X) = N_s(X)^T), so every
// quadratic invariant of the flow is preserved exactly up to round-off,
// whatever the step size. For a linear system r_s is also the s-stage
// Gauss-Legendre collocation step; s = 1 is the implicit midpoint rule
// (Cayley transform).

#include <Eigen/Dense>

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace logent {

enum class SkewScheme {
  ImplicitMidpoint, ///< Pade [1/1], second order
  GaussLegendre6,   ///< Pade [6/6], twelfth order
};

inline int pade_degree(SkewScheme scheme) noexcept {
  return scheme == SkewScheme::ImplicitMidpoint ? 1 : 6;
}

/// r_s(X) for the given Pade degree.
inline Eigen::MatrixXd pade_propagator(const Eigen::MatrixXd &x, int degree) {
  if (degree < 1)
    throw std::invalid_argument("Pade degree must be positive");
  const auto n = x.rows();
  // c_k = (2s-k)! s! / ((2s)! k! (s-k)!), built by the recurrence
  // c_k = c_{k-1} (s-k+1) / (k (2s-k+1)).
  Eigen::MatrixXd num = Eigen::MatrixXd::Identity(n, n);
  Eigen::MatrixXd den = Eigen::MatrixXd::Identity(n, n);
  Eigen::MatrixXd power = Eigen::MatrixXd::Identity(n, n);
  double coeff = 1.0;
  for (int k = 1; k <= degree; ++k) {
    coeff *= static_cast<double>(degree - k + 1) /
             (static_cast<double>(k) * static_cast<double>(2 * degree - k + 1));
    power = power * x;
    num += coeff * power;
    den += ((k % 2) ? -coeff : coeff) * power;
  }
  return den.partialPivLu().solve(num);
}

/// Splits [0, t] into equal substeps with |G| * h <= max_step_norm.
struct StepPlan {
  std::size_t steps = 0;
  double step = 0.0;
};

inline StepPlan plan_steps(double generator_norm, double t,
                           double max_step_norm = 0.1) {
  if (!(max_step_norm > 0.0))
    throw std::invalid_argument("step bound must be positive");
  if (t == 0.0)
    return {0, 0.0};
  const double raw = std::ceil(generator_norm * std::abs(t) / max_step_norm);
  const auto steps = static_cast<std::size_t>(std::max(1.0, raw));
  return {steps, t / static_cast<double>(steps)};
}

} // namespace logent
