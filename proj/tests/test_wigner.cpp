#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "logent/wigner.hpp"

using namespace logent;

namespace {

constexpr double kPi = std::numbers::pi;
// Coherent-state width for h = m = omega = 1: sigma_x = sigma_p.
const double kSigma = std::sqrt(1.0 / (4.0 * kPi));

PhaseSpaceGrid standard_grid() {
  return PhaseSpaceGrid::centered(128, 128, 8.0, 8.0);
}

double l2_error(const WignerGrid &w, const std::vector<double> &ref) {
  double s = 0.0;
  for (std::size_t k = 0; k < ref.size(); ++k) {
    const double d = w.values()[k] - ref[k];
    s += d * d;
  }
  return std::sqrt(s * w.cell());
}

double sum_of(const std::vector<double> &v) {
  double s = 0.0;
  for (double x : v)
    s += x;
  return s;
}

double sum_sq(const std::vector<double> &v) {
  double s = 0.0;
  for (double x : v)
    s += x * x;
  return s;
}

double linf(const DensityGrid &a, const DensityGrid &b) {
  double m = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j)
    m = std::max(m, std::abs(a[j] - b[j]));
  return m;
}

} // namespace

TEST(GaussianPureWigner, Examples) {
  const auto g = standard_grid();
  const auto w = gaussian_pure_wigner(g, {kSigma, 0.5, -0.3});
  EXPECT_NEAR(w.information(), 1.0, 1e-6);
  EXPECT_NEAR(higher_moment(w, 2), w.information(), 1e-15);
  EXPECT_LE(w.max_abs(), 2.0 / g.h * (1.0 + 1e-9));
  EXPECT_NEAR(w.max_abs(), 2.0 / g.h, 1e-2); // peak falls between samples

  const auto centred = gaussian_pure_wigner(g, {kSigma});
  EXPECT_NEAR(centred.max_abs(), 2.0 / g.h, 1e-12);

  // A squeezed, correlated state keeps I = 1.
  const auto sheared = gaussian_pure_wigner(g, {0.4, 0.0, 0.0, 0.6});
  EXPECT_NEAR(sheared.information(), 1.0, 1e-6);

  // p-marginal is the x Gaussian.
  for (std::size_t i = 0; i < g.nx; ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < g.np; ++j)
      s += w(i, j) * g.dp;
    const double u = (g.x(i) - 0.5) / kSigma;
    EXPECT_NEAR(s, std::exp(-0.5 * u * u) / (std::sqrt(2 * kPi) * kSigma),
                1e-9);
  }
}

TEST(GaussianPureWigner, RejectsSmallOrCoarseGrids) {
  EXPECT_THROW(gaussian_pure_wigner(PhaseSpaceGrid::centered(128, 128, 2.0, 8.0),
                                    {kSigma}),
               invalid_input);
  EXPECT_THROW(gaussian_pure_wigner(PhaseSpaceGrid::centered(8, 128, 8.0, 8.0),
                                    {kSigma}),
               invalid_input);
  EXPECT_THROW(higher_moment(gaussian_pure_wigner(standard_grid(), {kSigma}), 1),
               invalid_input);
}

TEST(WignerEvolve, FreeTransportIsAShear) {
  const auto g = standard_grid();
  const GaussianState s{kSigma, -0.5, 0.2};
  const auto w0 = gaussian_pure_wigner(g, s);
  const double t = 1.3;
  const auto w = wigner_evolve(w0, PotentialSpec::constant(0.0), t, 0.1);
  double worst = 0.0;
  for (std::size_t i = 0; i < g.nx; ++i)
    for (std::size_t j = 0; j < g.np; ++j) {
      const double ref = gaussian_wigner_value(
          g.x(i) - g.p(j) * t / g.mass, g.p(j), kSigma, s.sigma_p(g.h),
          s.x_center, s.p_center, 0.0);
      worst = std::max(worst, std::abs(w(i, j) - ref));
    }
  EXPECT_LT(worst, 1e-10);
}

TEST(WignerSplitStep, KickOnlyMatchesMomentumShift) {
  const auto g = standard_grid();
  const GaussianState s{kSigma, 0.4, -0.2};
  const auto w0 = gaussian_pure_wigner(g, s);
  const double dt = 0.3;
  WignerSplitStep step(g, PotentialSpec::harmonic(1.0, 1.0), dt);
  auto w = w0.values();
  step.kick(w, false);
  double worst = 0.0;
  for (std::size_t i = 0; i < g.nx; ++i)
    for (std::size_t j = 0; j < g.np; ++j) {
      // Force -x moves momentum by -x dt.
      const double ref =
          gaussian_wigner_value(g.x(i), g.p(j) + g.x(i) * dt, kSigma,
                                s.sigma_p(g.h), s.x_center, s.p_center, 0.0);
      worst = std::max(worst, std::abs(w[i * g.np + j] - ref));
    }
  EXPECT_LT(worst, 1e-10);
}

TEST(WignerSplitStep, EachSubstepConserves) {
  const auto g = standard_grid();
  const auto w0 = gaussian_pure_wigner(g, {kSigma, 1.0});
  WignerSplitStep step(g, PotentialSpec::quartic(0.25), 0.005);
  auto w = w0.values();
  const double s0 = sum_of(w);
  const double q0 = sum_sq(w);
  for (int k = 0; k < 20; ++k) {
    const double s_before = sum_of(w), q_before = sum_sq(w);
    step.kick(w, true);
    EXPECT_LT(std::abs(sum_of(w) - s_before) * w0.cell(), 1e-13);
    EXPECT_LT(std::abs(sum_sq(w) - q_before) * w0.cell(), 1e-13);
    const double s_mid = sum_of(w), q_mid = sum_sq(w);
    step.drift(w);
    EXPECT_LT(std::abs(sum_of(w) - s_mid) * w0.cell(), 1e-13);
    EXPECT_LT(std::abs(sum_sq(w) - q_mid) * w0.cell(), 1e-13);
  }
  EXPECT_LT(std::abs(sum_of(w) - s0) * w0.cell(), 1e-12);
  EXPECT_LT(std::abs(sum_sq(w) - q0) * w0.cell(), 1e-12);
}

TEST(WignerEvolve, HarmonicQuarterPeriodRotation) {
  const auto g = standard_grid();
  const GaussianState s{kSigma, 1.0, 0.0};
  const auto w0 = gaussian_pure_wigner(g, s);
  const double t = kPi / 2;
  const auto w = wigner_evolve(w0, PotentialSpec::harmonic(1.0, 1.0), t, 0.01);
  EXPECT_LT(l2_error(w, harmonic_rotation_reference(g, s, 1.0, t)), 1e-3);
  // A quarter turn takes (1, 0) to (0, -1).
  std::size_t best = 0;
  for (std::size_t k = 0; k < w.values().size(); ++k)
    if (w.values()[k] > w.values()[best])
      best = k;
  EXPECT_NEAR(g.x(best / g.np), 0.0, g.dx);
  EXPECT_NEAR(g.p(best % g.np), -1.0, g.dp);
}

TEST(WignerEvolve, HarmonicRotationAtArbitraryTimes) {
  const auto g = standard_grid();
  const GaussianState s{0.35, 0.8, 0.5, 0.3};
  const auto w0 = gaussian_pure_wigner(g, s);
  const double m3 = higher_moment(w0, 3);
  for (double t : {0.37, 1.9, 4.4}) {
    const auto w =
        wigner_evolve(w0, PotentialSpec::harmonic(1.0, 1.0), t, 0.01);
    EXPECT_LT(l2_error(w, harmonic_rotation_reference(g, s, 1.0, t)), 1e-3)
        << "t=" << t;
    EXPECT_NEAR(higher_moment(w, 3) / m3, 1.0, 1e-6);
  }
}

TEST(WignerEvolve, HarmonicWithNonUnitMassAndFrequency) {
  auto g = PhaseSpaceGrid::centered(128, 128, 8.0, 16.0, 1.0, 2.0);
  const double omega = 1.5;
  // Coherent width for m omega = 3.
  const GaussianState s{std::sqrt(1.0 / (4 * kPi * 3.0)), 0.8, 0.0};
  const auto w0 = gaussian_pure_wigner(g, s);
  const double t = 0.9;
  const auto w =
      wigner_evolve(w0, PotentialSpec::harmonic(omega, 2.0), t, 0.005);
  EXPECT_LT(l2_error(w, harmonic_rotation_reference(g, s, omega, t)), 1e-3);
}

TEST(WignerEvolve, QuarticBreaksHigherMoments) {
  const auto g = standard_grid();
  const auto w0 = gaussian_pure_wigner(g, {kSigma, 1.0});
  const auto v = PotentialSpec::quartic(0.25);
  WignerSplitStep step(g, v, 0.005);
  auto w = w0.values();
  step.advance(w, 1000);
  const auto w1 = w0.with_values(w);
  EXPECT_LT(std::abs(w1.total() - w0.total()), 1e-8);
  EXPECT_LT(std::abs(w1.information() - w0.information()), 1e-8);
  const double m3_0 = higher_moment(w0, 3);
  const double m3_1 = higher_moment(w1, 3);
  EXPECT_GT(std::abs(m3_1 - m3_0) / std::abs(m3_0), 1e-3);
  EXPECT_GE(w0.min_value(), 0.0);
  EXPECT_LT(w1.min_value(), 0.0);
}

TEST(WignerEvolve, HarmonicKeepsThirdMomentUnlikeQuartic) {
  const auto g = standard_grid();
  const auto w0 = gaussian_pure_wigner(g, {kSigma, 1.0});
  const auto w = wigner_evolve(w0, PotentialSpec::harmonic(1.0, 1.0), 5.0, 0.005);
  EXPECT_NEAR(higher_moment(w, 3), higher_moment(w0, 3), 1e-6);
}

TEST(StepPhaseReport, FlagsLargeSteps) {
  const auto g = standard_grid();
  const auto v = PotentialSpec::harmonic(1.0, 1.0);
  const double dt0 = default_time_step(g, v);
  const auto ok = step_phase_report(g, v, dt0);
  EXPECT_TRUE(ok.within_default);
  EXPECT_NEAR(std::max(ok.max_kick_phase, ok.max_transport_phase), 0.1, 1e-12);
  const auto mid = step_phase_report(g, v, 0.01);
  EXPECT_FALSE(mid.within_default);
  EXPECT_TRUE(mid.resolved);
  EXPECT_FALSE(step_phase_report(g, v, 1.0).resolved);
  EXPECT_EQ(step_phase_report(g, PotentialSpec::constant(1.0), 0.5)
                .max_kick_phase,
            0.0);
}

TEST(DeltaLocalized, ConstantPotentialIsIdentity) {
  const auto f0 = gaussian_density(128, 12.0, 1.0, 0.5, 0.3);
  const auto f = delta_localized_evolve(f0, PotentialSpec::constant(2.0), 0.4, 3.0);
  EXPECT_LT(linf(f, f0), 1e-15);
}

TEST(DeltaLocalized, GeneratorIsSkewWithZeroRowSums) {
  const auto gen = delta_localized_generator(64, 10.0, 1.0,
                                             PotentialSpec::quartic(0.3), 0.7);
  EXPECT_EQ((gen + gen.transpose()).cwiseAbs().maxCoeff(), 0.0);
  EXPECT_LT(gen.rowwise().sum().cwiseAbs().maxCoeff(), 1e-10);
}

TEST(DeltaLocalized, MatchesContinuumSpectralFlow) {
  const std::vector<PotentialSpec> potentials{
      PotentialSpec::constant(1.5),
      PotentialSpec::linear(0.8),
      PotentialSpec::harmonic(1.0, 1.0),
      PotentialSpec::quartic(0.1),
      PotentialSpec::tabulated({-4, -3, -2, -1, 0, 1, 2, 3, 4},
                               {2.0, 0.9, 0.3, 0.1, 0.0, 0.2, 0.5, 1.2, 2.4})};
  const auto f0 = gaussian_density(128, 12.0, 1.0, 0.5, 0.3);
  for (const auto &v : potentials)
    for (double a : {-0.6, 0.0, 0.9}) {
      const auto k = build_kernel(v.frequency(f0.h()), a, f0);
      const double tau = characteristic_time(f0, k);
      const double t = std::isfinite(tau) ? 3.0 * tau : 3.0;
      const auto spectral = evolve_density(f0, k, t);
      const auto direct = delta_localized_evolve(f0, v, a, t);
      EXPECT_LT(linf(spectral, direct), 1e-6) << v.family() << " a=" << a;
    }
}

TEST(DeltaLocalized, ConservesOverManySteps) {
  const auto f0 = gaussian_density(128, 12.0, 1.0, 0.5, 0.3);
  const auto v = PotentialSpec::quartic(0.1);
  auto f = f0;
  for (int s = 0; s < 1000; ++s)
    f = delta_localized_evolve(f, v, 0.9, 0.01);
  EXPECT_LT(std::abs(f.total() - f0.total()), 1e-8);
  EXPECT_LT(std::abs(f.information() - f0.information()), 1e-8);
}

TEST(DeltaLocalized, RejectsInadmissibleDensity) {
  std::vector<double> spike(64, 0.0);
  spike[32] = 100.0;
  const DensityGrid f(spike, 0.0, 0.01, 0.1);
  EXPECT_THROW(delta_localized_evolve(f, PotentialSpec::harmonic(1, 1), 0, 1),
               inadmissible_state);
}
