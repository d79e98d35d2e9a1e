#include "cantor4/measures.hpp"

#include "cantor4/errors.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <string>

namespace cantor4 {

TransformEvaluator::TransformEvaluator(double tolerance, int max_factors)
    : tolerance_(tolerance), max_factors_(max_factors) {
  if (!(tolerance > 0.0) || !std::isfinite(tolerance)) {
    throw DomainError("TransformEvaluator: tolerance must be positive and finite");
  }
  if (max_factors < 1) throw DomainError("TransformEvaluator: max_factors must be >= 1");
}

int TransformEvaluator::factor_count(double t) const {
  const double eps_tail = tolerance_ / 10.0;
  const double scale = std::max(std::abs(t), 1.0) / eps_tail;
  const int k = static_cast<int>(std::ceil(std::log(scale) / std::log(4.0))) + 2;
  return std::min(std::max(2, k), max_factors_);
}

XCylinder::XCylinder(std::vector<int> digits) : digits_(std::move(digits)) {
  for (int d : digits_) {
    if (d != 0 && d != 2) throw ContractError("XCylinder digit must be 0 or 2");
  }
}

double XCylinder::offset() const noexcept {
  double x = 0.0;
  for (std::size_t i = digits_.size(); i-- > 0;) x = (x + digits_[i]) / 4.0;
  return x;
}

XCylinder XCylinder::child(int digit) const {
  auto digits = digits_;
  digits.push_back(digit);
  return XCylinder(std::move(digits));
}

double cospi(double x) noexcept {
  const double r = std::remainder(x, 2.0);  // exact, in [-1, 1]
  const double a = std::abs(r);
  if (a == 0.5) return 0.0;
  if (a == 0.0) return 1.0;
  if (a == 1.0) return -1.0;
  return std::cos(std::numbers::pi * r);
}

double sinpi(double x) noexcept {
  const double r = std::remainder(x, 2.0);
  if (r == 0.0 || std::abs(r) == 1.0) return 0.0;
  if (r == 0.5) return 1.0;
  if (r == -0.5) return -1.0;
  return std::sin(std::numbers::pi * r);
}

cplx mu4_hat(double t, const TransformEvaluator& cfg) {
  if (!std::isfinite(t)) throw DomainError("mu4_hat: non-finite argument");
  const int factors = cfg.factor_count(t);
  cplx product{1.0, 0.0};
  for (int k = 1; k <= factors; ++k) {
    const double h = std::ldexp(t, -(2 * k - 1));
    const double c = cospi(h);
    product *= cplx{c * c, c * sinpi(h)};
  }
  return product;
}

cplx cylinder_exp_integral(double delta, const XCylinder& u, const TransformEvaluator& cfg) {
  const int level = static_cast<int>(u.level());
  const double turns = delta * u.offset();
  const cplx phase{cospi(2.0 * turns), sinpi(2.0 * turns)};
  return std::ldexp(1.0, -level) * phase * mu4_hat(std::ldexp(delta, -2 * level), cfg);
}

cplx ifs_monte_carlo_integral(const PlaneFunction& f, int depth, std::int64_t samples,
                              std::uint64_t seed) {
  if (depth < 8 || depth > 32) {
    throw ContractError("ifs_monte_carlo_integral: depth must be in [8, 32], got " +
                        std::to_string(depth));
  }
  if (samples < 1) throw ContractError("ifs_monte_carlo_integral: samples must be >= 1");
  std::mt19937_64 rng(seed);
  cplx sum{0.0, 0.0};
  for (std::int64_t s = 0; s < samples; ++s) {
    std::uint64_t bits = rng();  // two bits per map, 32 maps per draw
    double x = 0.0;
    double y = 0.0;
    for (int d = 0; d < depth; ++d) {
      const unsigned k = bits & 3u;
      bits >>= 2;
      x = (x + 2.0 * (k & 1u)) / 4.0;
      y = (y + static_cast<double>(k >> 1)) / 2.0;
    }
    sum += f(x, y);
  }
  return sum / static_cast<double>(samples);
}

}  // namespace cantor4
