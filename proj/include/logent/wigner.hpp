#pragma once

// Wigner-function dynamics on a doubly periodic phase-space grid.
//
//   dw/dt + (p/m) dw/dx
//     = (2 pi i / h^2) Int Int [V(x + lambda/2) - V(x - lambda/2)]
//         exp(2 pi i (p - p') lambda / h) w(x, p', t) dp' dlambda
//
// Both sides are diagonal in a Fourier variable: free streaming in the one
// conjugate to x, the potential term (for each fixed x) in the one conjugate
// to p, with rate Omega(x + lambda/2) - Omega(x - lambda/2), Omega = 2 pi V/h.
// wigner_evolve composes the two exact sub-flows symmetrically
// (half kick, drift, half kick).
//
// Localizing w = wbar(p) delta(x - a) turns the potential term into a
// momentum-only flow; delta_localized_evolve integrates it by dense
// quadrature of the double integral, with no code shared with the
// spectral continuum solver.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <string>
#include <vector>

#include "logent/continuum.hpp"
#include "logent/errors.hpp"
#include "logent/profile.hpp"
#include "logent/skew_propagator.hpp"
#include "logent/spectral.hpp"

namespace logent {

/// Potential energy V(x). Families carry their physical parameters; the
/// underlying profile is what the solvers evaluate.
class PotentialSpec {
public:
  static PotentialSpec constant(double v0) {
    return PotentialSpec("constant", Profile::constant(v0));
  }
  /// Uniform force field: V = -force * x.
  static PotentialSpec linear(double force) {
    return PotentialSpec("linear", Profile::linear(-force));
  }
  /// V = m omega^2 x^2 / 2
  static PotentialSpec harmonic(double omega, double mass) {
    return PotentialSpec("harmonic", Profile::harmonic(0.5 * mass * omega * omega));
  }
  /// V = beta x^4
  static PotentialSpec quartic(double beta) {
    return PotentialSpec("quartic", Profile::quartic(beta));
  }
  static PotentialSpec tabulated(std::vector<double> x, std::vector<double> v) {
    return PotentialSpec("tabulated", Profile::tabulated(std::move(x), std::move(v)));
  }

  const std::string &family() const noexcept { return family_; }
  const Profile &profile() const noexcept { return profile_; }
  double operator()(double x) const noexcept { return profile_(x); }

  /// Omega(x) = 2 pi V(x) / h
  Profile frequency(double h) const {
    return profile_.scaled(2.0 * std::numbers::pi / h);
  }

private:
  PotentialSpec(std::string family, Profile p)
      : family_(std::move(family)), profile_(std::move(p)) {}

  std::string family_;
  Profile profile_;
};

/// Geometry of a phase-space grid: x_i = x0 + i dx, p_j = p0 + j dp.
struct PhaseSpaceGrid {
  std::size_t nx = 128;
  std::size_t np = 128;
  double x0 = 0.0;
  double dx = 0.0;
  double p0 = 0.0;
  double dp = 0.0;
  double h = 1.0;
  double mass = 1.0;

  /// Centred grid on [-x_len/2, x_len/2) x [-p_len/2, p_len/2).
  static PhaseSpaceGrid centered(std::size_t nx, std::size_t np, double x_len,
                                 double p_len, double h = 1.0,
                                 double mass = 1.0) {
    return {nx,
            np,
            -0.5 * x_len,
            x_len / static_cast<double>(nx),
            -0.5 * p_len,
            p_len / static_cast<double>(np),
            h,
            mass};
  }

  double x(std::size_t i) const noexcept {
    return x0 + static_cast<double>(i) * dx;
  }
  double p(std::size_t j) const noexcept {
    return p0 + static_cast<double>(j) * dp;
  }
  double x_length() const noexcept { return dx * static_cast<double>(nx); }
  double p_length() const noexcept { return dp * static_cast<double>(np); }

  void validate() const {
    if (!is_power_of_two(nx) || !is_power_of_two(np))
      throw invalid_input("phase-space grid sizes must be powers of two");
    if (!(dx > 0.0) || !(dp > 0.0) || !(h > 0.0) || !(mass > 0.0))
      throw invalid_input("phase-space grid needs dx, dp, h, mass > 0");
    if (!std::isfinite(x0) || !std::isfinite(p0))
      throw invalid_input("phase-space grid origin must be finite");
  }
};

/// Samples w(x_i, p_j), stored row-major with index i * np + j.
class WignerGrid {
public:
  WignerGrid(PhaseSpaceGrid g, std::vector<double> values)
      : grid_(g), values_(std::move(values)) {
    grid_.validate();
    if (values_.size() != grid_.nx * grid_.np)
      throw invalid_input("Wigner grid holds " + std::to_string(values_.size()) +
                          " samples, expected " +
                          std::to_string(grid_.nx * grid_.np));
    for (double v : values_)
      if (!std::isfinite(v))
        throw invalid_input("Wigner grid has a non-finite value");
    if (std::abs(total() - 1.0) > kNormTolerance)
      throw invalid_input("unnormalized Wigner function: integral is " +
                          std::to_string(total()));
  }

  const PhaseSpaceGrid &grid() const noexcept { return grid_; }
  const std::vector<double> &values() const noexcept { return values_; }
  double operator()(std::size_t i, std::size_t j) const {
    return values_[i * grid_.np + j];
  }

  double cell() const noexcept { return grid_.dx * grid_.dp; }

  double total() const noexcept {
    double s = 0.0;
    for (double v : values_)
      s += v;
    return s * cell();
  }

  /// h sum w^2 dx dp
  double information() const noexcept {
    double s = 0.0;
    for (double v : values_)
      s += v * v;
    return grid_.h * s * cell();
  }

  bool admissible() const noexcept {
    return information() <= 1.0 + kNormTolerance;
  }

  double min_value() const noexcept {
    return *std::min_element(values_.begin(), values_.end());
  }
  double max_abs() const noexcept {
    double m = 0.0;
    for (double v : values_)
      m = std::max(m, std::abs(v));
    return m;
  }

  WignerGrid with_values(std::vector<double> v) const {
    return WignerGrid(grid_, std::move(v));
  }

private:
  PhaseSpaceGrid grid_;
  std::vector<double> values_;
};

/// h^(r-1) sum w^r dx dp
inline double higher_moment(const WignerGrid &w, int r) {
  if (r < 2)
    throw invalid_input("moment order must be >= 2");
  double s = 0.0;
  for (double v : w.values()) {
    double pw = v;
    for (int k = 1; k < r; ++k)
      pw *= v;
    s += pw;
  }
  return std::pow(w.grid().h, r - 1) * s * w.cell();
}

struct GaussianState {
  double sigma_x;
  double x_center = 0.0;
  double p_center = 0.0;
  /// Correlation coefficient between x and p, in (-1, 1). Nonzero values
  /// describe a sheared (rotated-squeezed) state of the same purity.
  double correlation = 0.0;

  /// sigma_x sigma_p sqrt(1 - rho^2) = h / (4 pi) keeps I = 1.
  double sigma_p(double h) const noexcept {
    return h / (4.0 * std::numbers::pi * sigma_x *
                std::sqrt(1.0 - correlation * correlation));
  }
};

/// Analytic value of a normalized bivariate Gaussian Wigner function.
inline double gaussian_wigner_value(double x, double p, double sx, double sp,
                                    double xc, double pc, double rho) {
  const double u = (x - xc) / sx;
  const double v = (p - pc) / sp;
  const double one_m = 1.0 - rho * rho;
  const double q = (u * u - 2.0 * rho * u * v + v * v) / one_m;
  return std::exp(-0.5 * q) /
         (2.0 * std::numbers::pi * sx * sp * std::sqrt(one_m));
}

/// Minimum-uncertainty Gaussian with sigma_x sigma_p = h/(4 pi) (for zero
/// correlation), so that I = 1 and max w = 2/h.
inline WignerGrid gaussian_pure_wigner(const PhaseSpaceGrid &g,
                                       const GaussianState &s) {
  g.validate();
  if (!(s.sigma_x > 0.0) || !(std::abs(s.correlation) < 1.0))
    throw invalid_input("Gaussian needs sigma_x > 0 and |correlation| < 1");
  const double sp = s.sigma_p(g.h);
  // Tail left outside the periodic box must stay below 1e-10 of the peak.
  const double x_gap = std::min(s.x_center - g.x0,
                                g.x0 + g.x_length() - s.x_center);
  const double p_gap = std::min(s.p_center - g.p0,
                                g.p0 + g.p_length() - s.p_center);
  const double sx_marg = s.sigma_x;
  const double sp_marg = sp;
  if (x_gap <= 0.0 || p_gap <= 0.0 ||
      std::exp(-0.5 * (x_gap / sx_marg) * (x_gap / sx_marg)) > 1e-10 ||
      std::exp(-0.5 * (p_gap / sp_marg) * (p_gap / sp_marg)) > 1e-10)
    throw invalid_input("grid too small for the Gaussian: wrap-around above "
                        "1e-10");
  if (g.dx > sx_marg || g.dp > sp_marg)
    throw invalid_input("grid too coarse to resolve the Gaussian");

  std::vector<double> w(g.nx * g.np);
  for (std::size_t i = 0; i < g.nx; ++i)
    for (std::size_t j = 0; j < g.np; ++j)
      w[i * g.np + j] = gaussian_wigner_value(g.x(i), g.p(j), s.sigma_x, sp,
                                              s.x_center, s.p_center,
                                              s.correlation);
  return WignerGrid(g, std::move(w));
}

/// Exact harmonic-oscillator solution for a Gaussian initial state: the
/// phase-space flow is a rotation, w(z, t) = w0(R(-t) z) in coordinates
/// (x, p / (m omega)). Evaluated analytically on the grid.
inline std::vector<double> harmonic_rotation_reference(const PhaseSpaceGrid &g,
                                                       const GaussianState &s,
                                                       double omega, double t) {
  const double sp = s.sigma_p(g.h);
  const double mw = g.mass * omega;
  const double c = std::cos(omega * t);
  const double sn = std::sin(omega * t);
  std::vector<double> w(g.nx * g.np);
  for (std::size_t i = 0; i < g.nx; ++i)
    for (std::size_t j = 0; j < g.np; ++j) {
      const double x = g.x(i);
      const double p = g.p(j);
      const double xb = x * c - p / mw * sn;
      const double pb = p * c + mw * x * sn;
      w[i * g.np + j] = gaussian_wigner_value(xb, pb, s.sigma_x, sp,
                                              s.x_center, s.p_center,
                                              s.correlation);
    }
  return w;
}

/// Largest phase advanced in one step by each sub-flow, over all grid modes.
struct StepPhaseReport {
  double max_kick_phase = 0.0;
  double max_transport_phase = 0.0;
  /// Both below the default bound of 0.1 rad.
  bool within_default = true;
  /// Both below pi; larger phases wrap and the step no longer resolves the
  /// fastest grid modes.
  bool resolved = true;
};

namespace detail {

inline double kick_rate(const Profile &omega, double x, double lam) {
  return omega(x + 0.5 * lam) - omega(x - 0.5 * lam);
}

inline double max_kick_rate(const PhaseSpaceGrid &g, const Profile &omega) {
  double r = 0.0;
  for (std::size_t i = 0; i < g.nx; ++i)
    for (std::size_t k = 0; k < g.np; ++k) {
      if (is_nyquist(k, g.np))
        continue;
      const double lam =
          g.h * static_cast<double>(signed_mode(k, g.np)) / g.p_length();
      r = std::max(r, std::abs(kick_rate(omega, g.x(i), lam)));
    }
  return r;
}

inline double max_transport_rate(const PhaseSpaceGrid &g) {
  const double kappa_max =
      static_cast<double>(g.nx / 2 - 1) / g.x_length();
  double pmax = std::max(std::abs(g.p0), std::abs(g.p(g.np - 1)));
  return 2.0 * std::numbers::pi * kappa_max * pmax / g.mass;
}

} // namespace detail

inline StepPhaseReport step_phase_report(const PhaseSpaceGrid &g,
                                         const PotentialSpec &v, double dt) {
  StepPhaseReport r;
  r.max_kick_phase = detail::max_kick_rate(g, v.frequency(g.h)) * std::abs(dt);
  r.max_transport_phase = detail::max_transport_rate(g) * std::abs(dt);
  r.within_default = r.max_kick_phase <= 0.1 && r.max_transport_phase <= 0.1;
  r.resolved = r.max_kick_phase <= std::numbers::pi &&
               r.max_transport_phase <= std::numbers::pi;
  return r;
}

/// Step for which neither sub-flow advances any grid mode by more than
/// 0.1 rad.
inline double default_time_step(const PhaseSpaceGrid &g,
                                 const PotentialSpec &v) {
  const double rate = std::max(detail::max_kick_rate(g, v.frequency(g.h)),
                               detail::max_transport_rate(g));
  if (rate <= 0.0)
    throw invalid_input("no dynamics on this grid; choose dt explicitly");
  return 0.1 / rate;
}

/// Split-step propagator for a fixed potential and step size. Phase factors
/// are tabulated once; each sub-flow is a unimodular multiplication in
/// Fourier space and so conserves sum(w) and sum(w^2) to round-off.
class WignerSplitStep {
public:
  WignerSplitStep(const PhaseSpaceGrid &g, const PotentialSpec &v, double dt)
      : g_(g), dt_(dt) {
    g_.validate();
    const Profile omega = v.frequency(g_.h);
    half_kick_.resize(g_.nx * g_.np);
    full_kick_.resize(g_.nx * g_.np);
    for (std::size_t i = 0; i < g_.nx; ++i)
      for (std::size_t k = 0; k < g_.np; ++k) {
        double rate = 0.0;
        if (!is_nyquist(k, g_.np)) {
          const double lam =
              g_.h * static_cast<double>(signed_mode(k, g_.np)) / g_.p_length();
          rate = detail::kick_rate(omega, g_.x(i), lam);
          if (!std::isfinite(rate))
            throw invalid_input("potential is not finite near x = " +
                                std::to_string(g_.x(i)) + " +- " +
                                std::to_string(0.5 * std::abs(lam)));
        }
        half_kick_[i * g_.np + k] = std::polar(1.0, 0.5 * rate * dt_);
        full_kick_[i * g_.np + k] = std::polar(1.0, rate * dt_);
      }
    drift_.resize(g_.np * g_.nx);
    for (std::size_t j = 0; j < g_.np; ++j)
      for (std::size_t k = 0; k < g_.nx; ++k) {
        double phase = 0.0;
        if (!is_nyquist(k, g_.nx)) {
          const double kappa =
              static_cast<double>(signed_mode(k, g_.nx)) / g_.x_length();
          phase = -2.0 * std::numbers::pi * kappa * g_.p(j) * dt_ / g_.mass;
        }
        drift_[j * g_.nx + k] = std::polar(1.0, phase);
      }
  }

  double dt() const noexcept { return dt_; }

  /// Potential sub-flow over `fraction` of a step (0.5 or 1).
  void kick(std::vector<double> &w, bool half) {
    const auto &table = half ? half_kick_ : full_kick_;
    row_.resize(g_.np);
    for (std::size_t i = 0; i < g_.nx; ++i) {
      for (std::size_t j = 0; j < g_.np; ++j)
        row_[j] = w[i * g_.np + j];
      fft_.forward(spec_, row_);
      for (std::size_t k = 0; k < g_.np; ++k)
        spec_[k] *= table[i * g_.np + k];
      fft_.inverse(row_, spec_);
      for (std::size_t j = 0; j < g_.np; ++j)
        w[i * g_.np + j] = row_[j].real();
    }
  }

  /// Free streaming over one full step.
  void drift(std::vector<double> &w) {
    row_.resize(g_.nx);
    for (std::size_t j = 0; j < g_.np; ++j) {
      for (std::size_t i = 0; i < g_.nx; ++i)
        row_[i] = w[i * g_.np + j];
      fft_.forward(spec_, row_);
      for (std::size_t k = 0; k < g_.nx; ++k)
        spec_[k] *= drift_[j * g_.nx + k];
      fft_.inverse(row_, spec_);
      for (std::size_t i = 0; i < g_.nx; ++i)
        w[i * g_.np + j] = row_[i].real();
    }
  }

  /// `steps` Strang steps; interior half kicks are fused.
  void advance(std::vector<double> &w, std::size_t steps) {
    if (steps == 0)
      return;
    kick(w, true);
    for (std::size_t s = 0; s < steps; ++s) {
      drift(w);
      kick(w, s + 1 < steps ? false : true);
    }
  }

private:
  PhaseSpaceGrid g_;
  double dt_;
  std::vector<cplx> half_kick_;
  std::vector<cplx> full_kick_;
  std::vector<cplx> drift_;
  Fft fft_;
  std::vector<cplx> row_;
  std::vector<cplx> spec_;
};

/// Evolves to time t with steps no longer than dt (t is split evenly).
inline WignerGrid wigner_evolve(const WignerGrid &w0, const PotentialSpec &v,
                                double t, double dt) {
  if (!(dt > 0.0))
    throw invalid_input("time step must be positive");
  if (t == 0.0)
    return w0;
  const auto steps = static_cast<std::size_t>(
      std::max(1.0, std::ceil(std::abs(t) / dt - 1e-9)));
  WignerSplitStep stepper(w0.grid(), v, t / static_cast<double>(steps));
  std::vector<double> w = w0.values();
  stepper.advance(w, steps);
  return w0.with_values(std::move(w));
}

struct DeltaEvolveOptions {
  SkewScheme scheme = SkewScheme::GaussLegendre6;
  double max_step_norm = 0.1;
};

/// Momentum-space generator for w = wbar(p) delta(x - a):
/// G_jl = (i/h) sum_k [Omega(a + lambda_k/2) - Omega(a - lambda_k/2)]
///          exp(2 pi i (p_j - p_l) lambda_k / h) dlambda dp,
/// with lambda_k = h k / L for |k| < N/2.
inline Eigen::MatrixXd delta_localized_generator(std::size_t n, double length,
                                                 double h,
                                                 const PotentialSpec &v,
                                                 double offset) {
  if (!is_power_of_two(n))
    throw invalid_input("momentum grid size must be a power of two");
  const Profile omega = v.frequency(h);
  const double dp = length / static_cast<double>(n);
  const double dlam = h / length;
  const long half = static_cast<long>(n / 2);

  std::vector<double> rate(static_cast<std::size_t>(2 * half));
  for (long k = -half + 1; k < half; ++k) {
    const double lam = h * static_cast<double>(k) / length;
    const double r = omega(offset + 0.5 * lam) - omega(offset - 0.5 * lam);
    if (!std::isfinite(r))
      throw invalid_input("potential is not finite near a +- " +
                          std::to_string(0.5 * std::abs(lam)));
    rate[static_cast<std::size_t>(k + half)] = r;
  }

  // The generator depends on p_j - p_l = d dp only.
  std::vector<double> column(n);
  for (std::size_t d = 0; d < n; ++d) {
    cplx acc(0.0, 0.0);
    const double pd = static_cast<double>(d) * dp;
    for (long k = -half + 1; k < half; ++k) {
      const double lam = h * static_cast<double>(k) / length;
      acc += rate[static_cast<std::size_t>(k + half)] *
             std::polar(1.0, 2.0 * std::numbers::pi * pd * lam / h);
    }
    const cplx g = cplx(0.0, 1.0) / h * acc * dlam * dp;
    column[d] = g.real();
  }

  const auto en = static_cast<Eigen::Index>(n);
  Eigen::MatrixXd gen(en, en);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t l = 0; l < n; ++l)
      gen(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(l)) =
          column[(j + n - l) % n];
  // Odd kernel: enforce exact skew symmetry against round-off in the sums.
  return 0.5 * (gen - gen.transpose());
}

/// Integrates the delta-localized momentum equation for wbar (a density over
/// p) by dense quadrature and Pade substeps.
inline DensityGrid delta_localized_evolve(const DensityGrid &wbar0,
                                          const PotentialSpec &v, double offset,
                                          double t,
                                          DeltaEvolveOptions opts = {}) {
  if (!wbar0.admissible())
    throw inadmissible_state("delta-localized evolution needs an admissible "
                             "momentum density");
  if (t == 0.0)
    return wbar0;
  const Eigen::MatrixXd gen = delta_localized_generator(
      wbar0.size(), wbar0.length(), wbar0.h(), v, offset);
  const double norm = gen.cwiseAbs().rowwise().sum().maxCoeff();
  const StepPlan plan = plan_steps(norm, t, opts.max_step_norm);
  const auto en = static_cast<Eigen::Index>(wbar0.size());
  Eigen::VectorXd w =
      Eigen::Map<const Eigen::VectorXd>(wbar0.values().data(), en);
  if (plan.steps > 0) {
    const Eigen::MatrixXd step =
        pade_propagator(gen * plan.step, pade_degree(opts.scheme));
    for (std::size_t s = 0; s < plan.steps; ++s)
      w = step * w;
  }
  return wbar0.with_values(std::vector<double>(w.data(), w.data() + en));
}

} // namespace logent
