#pragma once

// Densities f(z) on a periodic grid and the information-conserving flow
//
//   df/dt = (i/h) Int Int mhat(lambda) exp(2 pi i (z - z') lambda / h)
//                 f(z') dz' dlambda,
//   mhat(lambda) = Omega(a + lambda/2) - Omega(a - lambda/2).
//
// The right-hand side is a convolution with the real odd kernel
// m(zeta) = i Int mhat(lambda) exp(2 pi i zeta lambda / h) dlambda, so each
// Fourier mode nu_k = k / L evolves as
//
//   fhat_k(t) = fhat_k(0) exp(i mhat(lambda_k) t),   lambda_k = h k / L.
//
// mhat(0) = 0 pins the total probability and unimodular phases pin the
// information h Int f^2 dz. The unpaired Nyquist slot keeps phase 0 so that f
// stays real; content there is unrepresentable anyway.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "logent/errors.hpp"
#include "logent/profile.hpp"
#include "logent/skew_propagator.hpp"
#include "logent/spectral.hpp"

namespace logent {

inline constexpr double kNormTolerance = 1e-9;

/// Samples f(z_j), z_j = z0 + j dz, on a periodic domain of length N dz;
/// h is the scale constant making h * Int f^2 dimensionless.
class DensityGrid {
public:
  DensityGrid(std::vector<double> values, double z0, double dz, double h)
      : values_(std::move(values)), z0_(z0), dz_(dz), h_(h) {
    if (!is_power_of_two(values_.size()))
      throw invalid_input("density grid size must be a power of two, got " +
                          std::to_string(values_.size()));
    if (!(dz_ > 0.0) || !(h_ > 0.0) || !std::isfinite(z0_))
      throw invalid_input("density grid needs dz > 0, h > 0, finite z0");
    for (double v : values_)
      if (!std::isfinite(v))
        throw invalid_input("density grid has a non-finite value");
    const double mass = total();
    if (std::abs(mass - 1.0) > kNormTolerance)
      throw invalid_input("unnormalized density: integral is " +
                          std::to_string(mass));
  }

  std::size_t size() const noexcept { return values_.size(); }
  double z0() const noexcept { return z0_; }
  double dz() const noexcept { return dz_; }
  double h() const noexcept { return h_; }
  double length() const noexcept {
    return dz_ * static_cast<double>(values_.size());
  }
  double z(std::size_t j) const noexcept {
    return z0_ + static_cast<double>(j) * dz_;
  }
  const std::vector<double> &values() const noexcept { return values_; }
  double operator[](std::size_t j) const { return values_[j]; }

  double total() const noexcept {
    double s = 0.0;
    for (double v : values_)
      s += v;
    return s * dz_;
  }

  double information() const noexcept {
    double s = 0.0;
    for (double v : values_)
      s += v * v;
    return h_ * s * dz_;
  }

  /// h/L <= I <= 1; the lower end is the uniform density.
  bool admissible() const noexcept {
    return information() <= 1.0 + kNormTolerance &&
           information() >= h_ / length() - kNormTolerance;
  }

  /// Same geometry, new samples.
  DensityGrid with_values(std::vector<double> v) const {
    return DensityGrid(std::move(v), z0_, dz_, h_);
  }

private:
  std::vector<double> values_;
  double z0_, dz_, h_;
};

/// Normalized Gaussian of width sigma centred at `center` on [-L/2, L/2).
inline DensityGrid gaussian_density(std::size_t n, double length, double h,
                                    double sigma, double center = 0.0) {
  if (!(sigma > 0.0))
    throw invalid_input("Gaussian width must be positive");
  const double dz = length / static_cast<double>(n);
  const double z0 = -0.5 * length;
  const double norm = 1.0 / (std::sqrt(2.0 * std::numbers::pi) * sigma);
  std::vector<double> f(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double u = (z0 + static_cast<double>(j) * dz - center) / sigma;
    f[j] = norm * std::exp(-0.5 * u * u);
  }
  return DensityGrid(std::move(f), z0, dz, h);
}

inline DensityGrid uniform_density(std::size_t n, double length, double h) {
  return DensityGrid(std::vector<double>(n, 1.0 / length), -0.5 * length,
                     length / static_cast<double>(n), h);
}

/// h * sum f^2 dz
inline double continuum_information(const DensityGrid &f) {
  return f.information();
}

inline double continuum_entropy(const DensityGrid &f) {
  return 1.0 - f.information();
}

struct AmplitudeReport {
  double max_abs;
  double bound; // sqrt(2 I) / h
  bool satisfied;
  double ratio() const noexcept { return max_abs / bound; }
};

inline AmplitudeReport amplitude_bound_check(const DensityGrid &f) {
  double peak = 0.0;
  for (double v : f.values())
    peak = std::max(peak, std::abs(v));
  const double bound = std::sqrt(2.0 * f.information()) / f.h();
  return {peak, bound, peak <= bound * (1.0 + kNormTolerance)};
}

/// h f(z)^2 - Int f(z - lambda/2) f(z + lambda/2) dlambda at every grid point,
/// with lambda = 2 k dz and f taken as zero off the sampled interval (periodic
/// images would pair the two ends). Vanishes for pure Gaussian states.
inline std::vector<double> pure_state_residual(const DensityGrid &f) {
  const std::size_t n = f.size();
  const auto &v = f.values();
  std::vector<double> res(n);
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t reach = std::min(j, n - 1 - j);
    double acc = v[j] * v[j];
    for (std::size_t k = 1; k <= reach; ++k)
      acc += 2.0 * v[j - k] * v[j + k];
    res[j] = f.h() * v[j] * v[j] - 2.0 * f.dz() * acc;
  }
  return res;
}

/// mhat sampled at the grid's conjugate values lambda_k = h k / L, stored in
/// FFT slot order together with the multiplier i * mhat.
class KernelSpec {
public:
  KernelSpec(Profile omega, double offset, std::size_t n, double length,
             double h)
      : omega_(std::move(omega)), offset_(offset), n_(n), length_(length),
        h_(h) {
    if (!is_power_of_two(n_))
      throw invalid_input("kernel grid size must be a power of two");
    if (!(length_ > 0.0) || !(h_ > 0.0))
      throw invalid_input("kernel needs L > 0 and h > 0");
    mhat_.resize(n_);
    multiplier_.resize(n_);
    for (std::size_t k = 0; k < n_; ++k) {
      if (is_nyquist(k, n_)) {
        mhat_[k] = 0.0;
        multiplier_[k] = 0.0;
        continue;
      }
      const double lam = lambda(k);
      const double value =
          omega_(offset_ + 0.5 * lam) - omega_(offset_ - 0.5 * lam);
      if (!std::isfinite(value))
        throw invalid_input("Omega is not finite near a +- " +
                            std::to_string(0.5 * std::abs(lam)) +
                            " (lambda sample " + std::to_string(lam) + ")");
      mhat_[k] = value;
      multiplier_[k] = cplx(0.0, value);
    }
  }

  const Profile &omega() const noexcept { return omega_; }
  double offset() const noexcept { return offset_; }
  std::size_t size() const noexcept { return n_; }
  double length() const noexcept { return length_; }
  double h() const noexcept { return h_; }

  double lambda(std::size_t k) const noexcept {
    return h_ * static_cast<double>(signed_mode(k, n_)) / length_;
  }
  const std::vector<double> &mhat() const noexcept { return mhat_; }
  const std::vector<cplx> &multiplier() const noexcept { return multiplier_; }

  double max_rate() const noexcept {
    double r = 0.0;
    for (double v : mhat_)
      r = std::max(r, std::abs(v));
    return r;
  }

  bool compatible_with(const DensityGrid &f) const noexcept {
    const double tol = 1e-12 * std::max(1.0, length_);
    return f.size() == n_ && std::abs(f.length() - length_) <= tol &&
           std::abs(f.h() - h_) <= 1e-12 * std::max(1.0, h_);
  }

private:
  Profile omega_;
  double offset_;
  std::size_t n_;
  double length_;
  double h_;
  std::vector<double> mhat_;
  std::vector<cplx> multiplier_;
};

inline KernelSpec build_kernel(Profile omega, double offset,
                               const DensityGrid &grid) {
  return KernelSpec(std::move(omega), offset, grid.size(), grid.length(),
                    grid.h());
}

namespace detail {
inline void require_compatible(const DensityGrid &f, const KernelSpec &k) {
  if (!k.compatible_with(f))
    throw invalid_input("kernel was built for a different grid (N, L or h "
                        "mismatch)");
}
} // namespace detail

/// Fourier coefficients dz * sum_j f_j exp(-2 pi i jk/N) in FFT slot order,
/// scaled like the continuous transform so that mode 0 is the total
/// probability.
inline std::vector<cplx> density_modes(const DensityGrid &f) {
  Fft fft;
  auto spec = fft.forward(f.values());
  for (auto &c : spec)
    c *= f.dz();
  return spec;
}

/// Exact spectral solution at time t.
inline DensityGrid evolve_density(const DensityGrid &f0, const KernelSpec &k,
                                  double t) {
  detail::require_compatible(f0, k);
  if (t == 0.0 || k.max_rate() == 0.0)
    return f0;
  Fft fft;
  std::vector<cplx> spec = fft.forward(f0.values());
  const auto &mhat = k.mhat();
  for (std::size_t s = 0; s < spec.size(); ++s)
    spec[s] *= std::polar(1.0, mhat[s] * t);
  return f0.with_values(fft.inverse_real(spec));
}

/// Real-space kernel m(zeta_j) by quadrature of its Fourier integral,
/// zeta_j = j dz for slot j in FFT order (slot N - j is -zeta_j). The slot
/// N/2 is its own mirror image on the periodic grid, so m vanishes there.
inline std::vector<double> real_space_kernel(const KernelSpec &k) {
  const std::size_t n = k.size();
  const double dlam = k.h() / k.length();
  std::vector<double> m(n, 0.0);
  // i * sum_k mhat_k exp(2 pi i j k / N) dlam, paired over +-k.
  for (std::size_t j = 1; j < n / 2; ++j) {
    double acc = 0.0;
    for (std::size_t s = 1; s < n / 2; ++s) {
      const double angle = 2.0 * std::numbers::pi *
                           static_cast<double>((j * s) % n) /
                           static_cast<double>(n);
      acc += k.mhat()[s] * std::sin(angle);
    }
    m[j] = -2.0 * dlam * acc;
    m[n - j] = -m[j];
  }
  return m;
}

/// Same flow by dense real-space quadrature and implicit-midpoint steps:
/// df_j/dt = (1/h) sum_l m(z_j - z_l) f_l dz.
inline DensityGrid evolve_density_timestepped(const DensityGrid &f0,
                                              const KernelSpec &k, double t,
                                              double dt) {
  if (!(dt > 0.0))
    throw invalid_input("time step must be positive");
  detail::require_compatible(f0, k);
  const std::size_t n = f0.size();
  const auto steps = static_cast<std::size_t>(
      std::max(1.0, std::ceil(std::abs(t) / dt - 1e-9)));
  if (t == 0.0)
    return f0;
  const double step = t / static_cast<double>(steps);

  const std::vector<double> m = real_space_kernel(k);
  const auto en = static_cast<Eigen::Index>(n);
  Eigen::MatrixXd gen(en, en);
  const double scale = f0.dz() / f0.h();
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t l = 0; l < n; ++l)
      gen(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(l)) =
          scale * m[(j + n - l) % n];

  const Eigen::MatrixXd prop =
      pade_propagator(gen * step, pade_degree(SkewScheme::ImplicitMidpoint));
  Eigen::VectorXd v =
      Eigen::Map<const Eigen::VectorXd>(f0.values().data(), en);
  for (std::size_t s = 0; s < steps; ++s)
    v = prop * v;
  return f0.with_values(std::vector<double>(v.data(), v.data() + n));
}

/// 1 / (rms phase rate weighted by the initial spectrum); infinite for a
/// vanishing kernel.
inline double characteristic_time(const DensityGrid &f0, const KernelSpec &k) {
  detail::require_compatible(f0, k);
  const auto spec = density_modes(f0);
  double num = 0.0;
  double den = 0.0;
  for (std::size_t s = 0; s < spec.size(); ++s) {
    const double w = std::norm(spec[s]);
    num += w * k.mhat()[s] * k.mhat()[s];
    den += w;
  }
  if (num <= 0.0)
    return std::numeric_limits<double>::infinity();
  return 1.0 / std::sqrt(num / den);
}

} // namespace logent
