#pragma once

// Real functions of one variable from a small closed family. Used both for
// frequency functions Omega(x) and for potentials V(x).

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "logent/errors.hpp"

namespace logent {

class Profile {
public:
  enum class Kind { Constant, Linear, Harmonic, Quartic, Tabulated };

  /// c
  static Profile constant(double c) { return Profile(Kind::Constant, c, 0.0); }
  /// slope * x + intercept
  static Profile linear(double slope, double intercept = 0.0) {
    return Profile(Kind::Linear, slope, intercept);
  }
  /// c * x^2
  static Profile harmonic(double c) { return Profile(Kind::Harmonic, c, 0.0); }
  /// c * x^4
  static Profile quartic(double c) { return Profile(Kind::Quartic, c, 0.0); }
  /// Piecewise-linear through (x_i, y_i); NaN outside [x_0, x_last].
  static Profile tabulated(std::vector<double> x, std::vector<double> y) {
    if (x.size() != y.size() || x.size() < 2)
      throw invalid_input("tabulated profile needs >= 2 matching samples");
    for (std::size_t i = 1; i < x.size(); ++i)
      if (!(x[i] > x[i - 1]))
        throw invalid_input("tabulated abscissae must be strictly increasing");
    Profile p(Kind::Tabulated, 1.0, 0.0);
    p.xs_ = std::move(x);
    p.ys_ = std::move(y);
    return p;
  }

  Kind kind() const noexcept { return kind_; }
  double coefficient() const noexcept { return c0_; }

  double operator()(double x) const noexcept {
    switch (kind_) {
    case Kind::Constant:
      return c0_;
    case Kind::Linear:
      return c0_ * x + c1_;
    case Kind::Harmonic:
      return c0_ * x * x;
    case Kind::Quartic: {
      const double x2 = x * x;
      return c0_ * x2 * x2;
    }
    case Kind::Tabulated:
      return c0_ * interpolate(x);
    }
    return std::numeric_limits<double>::quiet_NaN();
  }

  /// factor * this
  Profile scaled(double factor) const {
    Profile p = *this;
    p.c0_ *= factor;
    if (kind_ == Kind::Linear)
      p.c1_ *= factor;
    return p;
  }

  std::string describe() const {
    std::ostringstream os;
    os.precision(15);
    switch (kind_) {
    case Kind::Constant:
      os << "constant(" << c0_ << ")";
      break;
    case Kind::Linear:
      os << "linear(" << c0_ << "*x + " << c1_ << ")";
      break;
    case Kind::Harmonic:
      os << "harmonic(" << c0_ << "*x^2)";
      break;
    case Kind::Quartic:
      os << "quartic(" << c0_ << "*x^4)";
      break;
    case Kind::Tabulated:
      os << "tabulated(" << xs_.size() << " samples on [" << xs_.front()
         << ", " << xs_.back() << "])";
      break;
    }
    return os.str();
  }

private:
  Profile(Kind k, double c0, double c1) : kind_(k), c0_(c0), c1_(c1) {}

  double interpolate(double x) const noexcept {
    if (!(x >= xs_.front() && x <= xs_.back()))
      return std::numeric_limits<double>::quiet_NaN();
    auto it = std::upper_bound(xs_.begin(), xs_.end(), x);
    if (it == xs_.end())
      return ys_.back();
    const auto i = static_cast<std::size_t>(it - xs_.begin());
    const double t = (x - xs_[i - 1]) / (xs_[i] - xs_[i - 1]);
    return ys_[i - 1] + t * (ys_[i] - ys_[i - 1]);
  }

  Kind kind_;
  double c0_;
  double c1_;
  std::vector<double> xs_;
  std::vector<double> ys_;
};

} // namespace logent
