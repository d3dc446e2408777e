#pragma once

// Signed probability vectors on the hyperplane sum(p) = 1.
//
// A vector p in R^n with unit sum is a (quasi-)probability distribution whose
// entries may be negative. Its information I = |p|^2 and logical entropy
// S_L = 1 - I are the only quantities that need a sign-free interpretation:
// I is the probability that two independent draws coincide. The feasible set
// for a given radius R = sqrt(I) is the intersection of the hyperplane with
// the sphere of radius R:
//
//   R < 1/sqrt(n)               empty
//   R = 1/sqrt(n)               only the uniform state
//   1/sqrt(n) <= R <= 1/sqrt(n-1)  all entries nonnegative
//   1/sqrt(n-1) < R <= 1        some solutions carry negative entries
//
// States with R = 1 are pure, R < 1 mixed, R > 1 inadmissible.

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "logent/errors.hpp"

namespace logent {

inline constexpr double kSumTolerance = 1e-9;
inline constexpr double kClassifyTolerance = 1e-9;

class SignedProbVector {
public:
  explicit SignedProbVector(std::vector<double> entries)
      : entries_(std::move(entries)) {
    if (entries_.size() < 2)
      throw invalid_input("probability vector needs at least 2 entries, got " +
                          std::to_string(entries_.size()));
    double sum = 0.0;
    double sq = 0.0;
    for (double v : entries_) {
      if (!std::isfinite(v))
        throw invalid_input("probability vector has a non-finite entry");
      sum += v;
      sq += v * v;
    }
    if (std::abs(sum - 1.0) > kSumTolerance)
      throw invalid_input("probability entries sum to " + std::to_string(sum) +
                          ", expected 1");
    information_ = sq;
    // Cauchy-Schwarz on the unit-sum hyperplane.
    assert(information_ >= 1.0 / static_cast<double>(entries_.size()) - 1e-12);
  }

  SignedProbVector(std::initializer_list<double> entries)
      : SignedProbVector(std::vector<double>(entries)) {}

  std::size_t size() const noexcept { return entries_.size(); }
  std::span<const double> entries() const noexcept { return entries_; }
  const std::vector<double> &values() const noexcept { return entries_; }
  double operator[](std::size_t i) const { return entries_[i]; }

  /// Sum of squared entries.
  double information() const noexcept { return information_; }
  double radius() const noexcept { return std::sqrt(information_); }
  bool admissible() const noexcept {
    return information_ <= 1.0 + kClassifyTolerance;
  }
  double min_entry() const noexcept {
    return *std::min_element(entries_.begin(), entries_.end());
  }

private:
  std::vector<double> entries_;
  double information_ = 0.0;
};

enum class StateClass { Pure, Mixed, Inadmissible };

inline const char *to_string(StateClass c) noexcept {
  switch (c) {
  case StateClass::Pure:
    return "Pure";
  case StateClass::Mixed:
    return "Mixed";
  case StateClass::Inadmissible:
    return "Inadmissible";
  }
  return "?";
}

struct FeasibilityRadii {
  double r_max = 1.0;
  double r_pos = 1.0;
  double r_min = 1.0;
  std::size_t n = 0;
  // False for n = 2: the line meets the circle only in the nonnegative
  // quadrant, so r_pos carries no information there.
  bool negatives_possible = false;
};

inline double logical_entropy(const SignedProbVector &p) noexcept {
  return 1.0 - p.information();
}

inline double information(const SignedProbVector &p) noexcept {
  return p.information();
}

/// Natural-log Shannon entropy; zero entries contribute nothing.
inline double shannon_entropy(const SignedProbVector &p) {
  double s = 0.0;
  for (double v : p.entries()) {
    if (v < 0.0)
      throw std::domain_error(
          "Shannon entropy undefined for signed probabilities");
    if (v > 0.0)
      s -= v * std::log(v);
  }
  return s;
}

inline double scalar_product(const SignedProbVector &p,
                             const SignedProbVector &q) {
  if (p.size() != q.size())
    throw invalid_input("dimension mismatch: " + std::to_string(p.size()) +
                        " vs " + std::to_string(q.size()));
  double s = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i)
    s += p[i] * q[i];
  return s;
}

inline double distance(const SignedProbVector &p, const SignedProbVector &q) {
  if (p.size() != q.size())
    throw invalid_input("dimension mismatch: " + std::to_string(p.size()) +
                        " vs " + std::to_string(q.size()));
  double s = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double d = p[i] - q[i];
    s += d * d;
  }
  return std::sqrt(s);
}

inline StateClass classify(const SignedProbVector &p,
                           double tol = kClassifyTolerance) {
  const double info = p.information();
  if (info > 1.0 + tol)
    return StateClass::Inadmissible;
  if (std::abs(info - 1.0) <= tol)
    return StateClass::Pure;
  return StateClass::Mixed;
}

inline FeasibilityRadii feasibility_radii(std::size_t n) {
  if (n < 2)
    throw invalid_input("feasibility radii need n >= 2");
  const double dn = static_cast<double>(n);
  FeasibilityRadii r;
  r.n = n;
  r.r_max = 1.0;
  r.r_min = 1.0 / std::sqrt(dn);
  r.r_pos = 1.0 / std::sqrt(dn - 1.0);
  r.negatives_possible = n >= 3;
  return r;
}

namespace detail {
// Squared in-plane radius; values within a few ulps of zero are the tangent
// case, where the square root would amplify round-off to ~1e-8.
inline double snap_tangent(double r2) noexcept {
  return r2 <= 8.0 * std::numeric_limits<double>::epsilon() ? 0.0 : r2;
}
} // namespace detail

/// Both intersections of the line p1 + p2 = 1 with the circle of radius R.
/// The larger entry comes first in the first vector.
inline std::pair<SignedProbVector, SignedProbVector> solve_n2(double radius) {
  if (radius > 1.0 + kClassifyTolerance)
    throw inadmissible_state("radius " + std::to_string(radius) +
                             " exceeds 1 (information above unity)");
  const double r_min = std::numbers::sqrt2 / 2.0;
  if (radius < r_min - 1e-12)
    throw no_solution("no two-outcome state has radius below sqrt(2)/2");
  const double disc = std::sqrt(detail::snap_tangent(2.0 * radius * radius - 1.0));
  const double hi = 0.5 * (1.0 + disc);
  const double lo = 0.5 * (1.0 - disc);
  return {SignedProbVector{hi, lo}, SignedProbVector{lo, hi}};
}

/// Fixed orthonormal basis of the plane sum(x) = 0 in R^3.
inline constexpr double kPlaneB1[3] = {std::numbers::sqrt2 / 2.0,
                                       -std::numbers::sqrt2 / 2.0, 0.0};
inline constexpr double kPlaneB2[3] = {1.0 / (std::numbers::sqrt3 *
                                              std::numbers::sqrt2),
                                       1.0 / (std::numbers::sqrt3 *
                                              std::numbers::sqrt2),
                                       -2.0 / (std::numbers::sqrt3 *
                                               std::numbers::sqrt2)};

/// Point at angle theta on the circle where the sphere of radius R cuts the
/// plane sum(p) = 1. theta = pi/6 at R = 1 gives (1, 0, 0).
inline SignedProbVector solve_n3(double radius, double theta) {
  if (radius > 1.0 + kClassifyTolerance)
    throw inadmissible_state("radius " + std::to_string(radius) +
                             " exceeds 1 (information above unity)");
  const double r_min = 1.0 / std::numbers::sqrt3;
  if (radius < r_min - 1e-12)
    throw no_solution("no three-outcome state has radius below 1/sqrt(3)");
  const double r = std::sqrt(detail::snap_tangent(radius * radius - 1.0 / 3.0));
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  std::vector<double> out(3);
  for (int i = 0; i < 3; ++i)
    out[i] = 1.0 / 3.0 + r * (c * kPlaneB1[i] + s * kPlaneB2[i]);
  return SignedProbVector(std::move(out));
}

/// The pure states with n-1 entries 2/n and one entry (2-n)/n. Member k has
/// its negative entry at position k; the family is orthonormal.
inline std::vector<SignedProbVector> negative_orthonormal_basis(std::size_t n) {
  if (n < 3)
    throw invalid_input("negative pure states need n >= 3");
  const double dn = static_cast<double>(n);
  std::vector<SignedProbVector> basis;
  basis.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<double> v(n, 2.0 / dn);
    v[k] = (2.0 - dn) / dn;
    basis.emplace_back(std::move(v));
  }
  return basis;
}

/// Probability of outcome i followed by outcome j in two independent draws
/// (zero-based indices).
inline double pair_outcome_probability(const SignedProbVector &p, std::size_t i,
                                       std::size_t j) {
  if (i >= p.size() || j >= p.size())
    throw std::out_of_range("outcome index out of range for n = " +
                            std::to_string(p.size()));
  if (!p.admissible())
    throw inadmissible_state("pair probabilities need an admissible state");
  return p[i] * p[j];
}

/// Probability that two draws both land in `outcomes` with the same outcome.
inline double same_outcome_probability(const SignedProbVector &p,
                                       std::span<const std::size_t> outcomes) {
  double s = 0.0;
  for (std::size_t i : outcomes)
    s += pair_outcome_probability(p, i, i);
  return s;
}

} // namespace logent
