#pragma once

// Periodic-grid Fourier helpers. Transforms follow the usual convention
// F_k = sum_j f_j exp(-2 pi i jk/N), inverse scaled by 1/N.

#include <unsupported/Eigen/FFT>

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace logent {

using cplx = std::complex<double>;

inline bool is_power_of_two(std::size_t n) noexcept {
  return n >= 2 && (n & (n - 1)) == 0;
}

/// Signed frequency index of FFT slot k: 0..N/2-1, then -N/2..-1.
inline long signed_mode(std::size_t k, std::size_t n) noexcept {
  const auto sk = static_cast<long>(k);
  const auto sn = static_cast<long>(n);
  return sk < sn / 2 ? sk : sk - sn;
}

/// Slot N/2 has no partner of opposite sign; real-valued dynamics leave it
/// untouched.
inline bool is_nyquist(std::size_t k, std::size_t n) noexcept {
  return k == n / 2;
}

class Fft {
public:
  std::vector<cplx> forward(std::span<const double> f) {
    std::vector<cplx> in(f.begin(), f.end());
    std::vector<cplx> out;
    fft_.fwd(out, in);
    return out;
  }

  void forward(std::vector<cplx> &out, const std::vector<cplx> &in) {
    fft_.fwd(out, in);
  }

  void inverse(std::vector<cplx> &out, const std::vector<cplx> &in) {
    fft_.inv(out, in);
  }

  std::vector<double> inverse_real(const std::vector<cplx> &spec) {
    std::vector<cplx> out;
    fft_.inv(out, spec);
    std::vector<double> re(out.size());
    for (std::size_t i = 0; i < out.size(); ++i)
      re[i] = out[i].real();
    return re;
  }

private:
  Eigen::FFT<double> fft_;
};

} // namespace logent
