#pragma once

// Finite-dimensional rotations of signed probability vectors.
//
// dp/dt = rate * M p with M antisymmetric and every row/column summing to
// zero. Antisymmetry keeps |p|^2 constant; zero column sums keep sum(p)
// constant. The generator is stored as its strictly upper triangle so that
// M_ji = -M_ij holds bit-exactly.

#include <Eigen/Dense>

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "logent/errors.hpp"
#include "logent/prob_core.hpp"
#include "logent/skew_propagator.hpp"

namespace logent {

inline constexpr double kGeneratorSumTolerance = 1e-12;

class GeneratorMatrix {
public:
  /// `upper` holds M_ij for i < j in row-major order, n(n-1)/2 values.
  GeneratorMatrix(std::size_t n, std::vector<double> upper, double rate)
      : n_(n), upper_(std::move(upper)), rate_(rate) {
    if (n_ < 2)
      throw invalid_input("generator needs n >= 2");
    if (upper_.size() != n_ * (n_ - 1) / 2)
      throw invalid_input("generator upper triangle has " +
                          std::to_string(upper_.size()) + " entries, expected " +
                          std::to_string(n_ * (n_ - 1) / 2));
    if (!std::isfinite(rate_))
      throw invalid_input("generator rate must be finite");
    const double worst = max_marginal_sum();
    if (!(worst <= kGeneratorSumTolerance))
      throw invalid_input("generator row/column sums must vanish, largest is " +
                          std::to_string(worst));
  }

  /// Takes the strict upper triangle of `m`; rejects matrices that are not
  /// antisymmetric to `tol`.
  static GeneratorMatrix from_dense(const Eigen::MatrixXd &m, double rate,
                                    double tol = kGeneratorSumTolerance) {
    if (m.rows() != m.cols())
      throw invalid_input("generator must be square");
    const auto n = static_cast<std::size_t>(m.rows());
    std::vector<double> upper;
    upper.reserve(n * (n - 1) / 2);
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      if (std::abs(m(i, i)) > tol)
        throw invalid_input("generator diagonal must vanish");
      for (Eigen::Index j = i + 1; j < m.cols(); ++j) {
        if (std::abs(m(i, j) + m(j, i)) > tol)
          throw invalid_input("generator must be antisymmetric");
        upper.push_back(m(i, j));
      }
    }
    return GeneratorMatrix(n, std::move(upper), rate);
  }

  std::size_t size() const noexcept { return n_; }
  double rate() const noexcept { return rate_; }

  double operator()(std::size_t i, std::size_t j) const noexcept {
    if (i == j)
      return 0.0;
    if (i < j)
      return upper_[index(i, j)];
    return -upper_[index(j, i)];
  }

  Eigen::MatrixXd dense() const {
    const auto n = static_cast<Eigen::Index>(n_);
    Eigen::MatrixXd m(n, n);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
            (*this)(i, j);
    return m;
  }

  /// M p (without the rate).
  std::vector<double> apply(std::span<const double> p) const {
    if (p.size() != n_)
      throw invalid_input("dimension mismatch in generator action");
    std::vector<double> out(n_, 0.0);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        out[i] += (*this)(i, j) * p[j];
    return out;
  }

  double max_marginal_sum() const noexcept {
    // Row i sum equals minus column i sum, so rows suffice.
    double worst = 0.0;
    for (std::size_t i = 0; i < n_; ++i) {
      double s = 0.0;
      for (std::size_t j = 0; j < n_; ++j)
        s += (*this)(i, j);
      worst = std::max(worst, std::abs(s));
    }
    return worst;
  }

  /// Infinity norm of rate * M.
  double norm() const noexcept {
    double worst = 0.0;
    for (std::size_t i = 0; i < n_; ++i) {
      double s = 0.0;
      for (std::size_t j = 0; j < n_; ++j)
        s += std::abs((*this)(i, j));
      worst = std::max(worst, s);
    }
    return std::abs(rate_) * worst;
  }

private:
  std::size_t index(std::size_t i, std::size_t j) const noexcept {
    // Offset of row i in the packed strict upper triangle.
    return i * n_ - i * (i + 1) / 2 + (j - i - 1);
  }

  std::size_t n_;
  std::vector<double> upper_;
  double rate_;
};

/// The three-outcome generator: rotation about (1,1,1)/sqrt(3) with unit
/// angular speed.
inline GeneratorMatrix paper_generator3() {
  // Upper triangle of [[0,-1,1],[1,0,-1],[-1,1,0]].
  return GeneratorMatrix(3, {-1.0, 1.0, -1.0}, std::numbers::sqrt3 / 3.0);
}

/// Uniform draw on [-1, 1) from a 64-bit Mersenne Twister word: the top 53
/// bits form u in [0, 1), and the value is 2u - 1. std::mt19937_64's output
/// sequence is fixed by the standard, so results match across toolchains.
inline double symmetric_unit_draw(std::mt19937_64 &rng) {
  const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return 2.0 * u - 1.0;
}

/// Random generator M = P A P, P = I - J/n, with A antisymmetric and its
/// upper triangle filled row-major from symmetric_unit_draw.
inline GeneratorMatrix random_generator(std::size_t n, std::uint64_t seed,
                                        double rate = 1.0) {
  if (n < 2)
    throw invalid_input("generator needs n >= 2");
  std::mt19937_64 rng(seed);
  const auto dn = static_cast<Eigen::Index>(n);
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(dn, dn);
  for (Eigen::Index i = 0; i < dn; ++i)
    for (Eigen::Index j = i + 1; j < dn; ++j) {
      a(i, j) = symmetric_unit_draw(rng);
      a(j, i) = -a(i, j);
    }
  const Eigen::MatrixXd proj =
      Eigen::MatrixXd::Identity(dn, dn) -
      Eigen::MatrixXd::Constant(dn, dn, 1.0 / static_cast<double>(n));
  const Eigen::MatrixXd m = proj * a * proj;
  std::vector<double> upper;
  upper.reserve(n * (n - 1) / 2);
  for (Eigen::Index i = 0; i < dn; ++i)
    for (Eigen::Index j = i + 1; j < dn; ++j)
      upper.push_back(m(i, j));
  return GeneratorMatrix(n, std::move(upper), rate);
}

struct EvolveOptions {
  SkewScheme scheme = SkewScheme::GaussLegendre6;
  /// Upper bound on |rate * M| * substep.
  double max_step_norm = 0.1;
};

/// exp(t * rate * M) realised as `steps` applications of a Pade substep.
class FdPropagator {
public:
  FdPropagator(const GeneratorMatrix &g, double t, EvolveOptions opts = {})
      : plan_(plan_steps(g.norm(), t, opts.max_step_norm)) {
    if (plan_.steps > 0)
      step_ = pade_propagator(g.dense() * (g.rate() * plan_.step),
                              pade_degree(opts.scheme));
  }

  std::size_t substeps() const noexcept { return plan_.steps; }

  Eigen::VectorXd apply(Eigen::VectorXd v) const {
    for (std::size_t k = 0; k < plan_.steps; ++k)
      v = step_ * v;
    return v;
  }

private:
  StepPlan plan_;
  Eigen::MatrixXd step_;
};

namespace detail {

inline void require_compatible(const SignedProbVector &p,
                               const GeneratorMatrix &g) {
  if (p.size() != g.size())
    throw invalid_input("dimension mismatch: state has " +
                        std::to_string(p.size()) + " entries, generator is " +
                        std::to_string(g.size()) + "x" +
                        std::to_string(g.size()));
  if (!p.admissible())
    throw inadmissible_state("evolution needs an admissible initial state");
}

inline SignedProbVector to_state(const Eigen::VectorXd &v) {
  return SignedProbVector(std::vector<double>(v.data(), v.data() + v.size()));
}

inline Eigen::VectorXd to_eigen(const SignedProbVector &p) {
  return Eigen::Map<const Eigen::VectorXd>(p.values().data(),
                                           static_cast<Eigen::Index>(p.size()));
}

} // namespace detail

inline SignedProbVector evolve(const SignedProbVector &p0,
                               const GeneratorMatrix &g, double t,
                               EvolveOptions opts = {}) {
  detail::require_compatible(p0, g);
  const FdPropagator prop(g, t, opts);
  return detail::to_state(prop.apply(detail::to_eigen(p0)));
}

struct TrajectoryRecord {
  std::vector<double> times;
  std::vector<SignedProbVector> states;
  std::vector<double> probability_drift;
  std::vector<double> information_drift;

  double max_probability_drift() const {
    return probability_drift.empty()
               ? 0.0
               : *std::max_element(probability_drift.begin(),
                                   probability_drift.end());
  }
  double max_information_drift() const {
    return information_drift.empty()
               ? 0.0
               : *std::max_element(information_drift.begin(),
                                   information_drift.end());
  }
};

/// Samples the flow at t = 0, dt, 2 dt, ... <= t_end. Each sample is one
/// application of the same propagator evolve(., g, dt) uses.
inline TrajectoryRecord trajectory(const SignedProbVector &p0,
                                   const GeneratorMatrix &g, double t_end,
                                   double dt, EvolveOptions opts = {}) {
  if (!(dt > 0.0))
    throw invalid_input("time step must be positive");
  if (!(t_end >= 0.0))
    throw invalid_input("end time must be nonnegative");
  detail::require_compatible(p0, g);

  const auto samples =
      static_cast<std::size_t>(std::floor(t_end / dt + 1e-9)) + 1;
  const FdPropagator prop(g, dt, opts);
  const double info0 = p0.information();

  TrajectoryRecord rec;
  rec.times.reserve(samples);
  rec.states.reserve(samples);
  Eigen::VectorXd v = detail::to_eigen(p0);
  for (std::size_t k = 0; k < samples; ++k) {
    if (k > 0)
      v = prop.apply(std::move(v));
    rec.times.push_back(static_cast<double>(k) * dt);
    rec.probability_drift.push_back(std::abs(v.sum() - 1.0));
    rec.information_drift.push_back(std::abs(v.squaredNorm() - info0));
    rec.states.push_back(detail::to_state(v));
  }
  return rec;
}

} // namespace logent
