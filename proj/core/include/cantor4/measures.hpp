#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <vector>

namespace cantor4 {

using cplx = std::complex<double>;

/// Accuracy settings for the infinite-product Fourier transform of mu_4.
class TransformEvaluator {
 public:
  static constexpr double kDefaultTolerance = 1e-12;
  static constexpr int kDefaultMaxFactors = 64;

  explicit TransformEvaluator(double tolerance = kDefaultTolerance,
                              int max_factors = kDefaultMaxFactors);

  double tolerance() const noexcept { return tolerance_; }
  int max_factors() const noexcept { return max_factors_; }

  // Number of product factors used at argument t:
  // max(2, ceil(log4(max(|t|,1) / (tolerance/10))) + 2), capped at max_factors.
  int factor_count(double t) const;

 private:
  double tolerance_;
  int max_factors_;
};

/// A level-K cylinder tau_{a_1} o ... o tau_{a_K}(C4), digits a_k in {0, 2}.
class XCylinder {
 public:
  XCylinder() = default;
  explicit XCylinder(std::vector<int> digits);

  std::size_t level() const noexcept { return digits_.size(); }
  const std::vector<int>& digits() const noexcept { return digits_; }
  // Left endpoint sum a_k 4^-k.
  double offset() const noexcept;
  XCylinder child(int digit) const;

 private:
  std::vector<int> digits_;
};

// cos(pi x) and sin(pi x) with exact argument reduction, so half-integers and
// integers produce exact zeros.
double cospi(double x) noexcept;
double sinpi(double x) noexcept;

/// Fourier transform of mu_4: prod_{k>=1} (1 + e^{4 pi i t / 4^k}) / 2.
///
/// Factors are multiplied in ascending k. Each factor is evaluated as
/// e^{i pi h} cos(pi h) with h = t / (2 * 4^(k-1)), so odd integer t gives an
/// exact zero from the first factor.
cplx mu4_hat(double t, const TransformEvaluator& cfg = TransformEvaluator{});

/// Integral of e^{2 pi i delta x} over one cylinder of mu_4:
/// 2^-K e^{2 pi i delta offset(u)} mu4_hat(delta / 4^K).
cplx cylinder_exp_integral(double delta, const XCylinder& u,
                           const TransformEvaluator& cfg = TransformEvaluator{});

using PlaneFunction = std::function<cplx(double x, double y)>;

/// Monte-Carlo estimate of the integral of f against mu_4 x Lebesgue on
/// C4 x [0,1].
///
/// Each sample composes `depth` maps drawn uniformly from the four planar
/// contractions (x, y) -> ((x + 2a)/4, (y + b)/2) and applies them to (0, 0).
/// Randomness comes from std::mt19937_64 seeded with `seed`, so the estimate
/// is reproducible. Intended as an independent test oracle.
cplx ifs_monte_carlo_integral(const PlaneFunction& f, int depth, std::int64_t samples,
                              std::uint64_t seed);

}  // namespace cantor4
