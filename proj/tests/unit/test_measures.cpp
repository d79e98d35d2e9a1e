#include "cantor4/errors.hpp"
#include "cantor4/measures.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <random>

using namespace cantor4;

namespace {
const double kPi = std::acos(-1.0);
}

TEST(Mu4Hat, Examples) {
  EXPECT_EQ(mu4_hat(0.0), cplx(1.0, 0.0));
  EXPECT_EQ(mu4_hat(1.0), cplx(0.0, 0.0));
  for (int n = -41; n <= 41; n += 2) EXPECT_EQ(std::abs(mu4_hat(n)), 0.0) << n;
  const cplx v = mu4_hat(2.0, TransformEvaluator(1e-12));
  EXPECT_GT(std::abs(v), 0.5);
  EXPECT_LT(std::abs(v - oracle::mu4_hat(2.0)), 1e-12);
}

TEST(Mu4Hat, AgreesWithRecursionOracle) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-100.0, 100.0);
  for (int i = 0; i < 500; ++i) {
    const double t = u(rng);
    EXPECT_LT(std::abs(mu4_hat(t) - oracle::mu4_hat(t)), 1e-11) << t;
  }
}

TEST(Mu4Hat, RecursionBoundAndSymmetry) {
  const TransformEvaluator cfg;
  const double tol = cfg.tolerance();
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-100.0, 100.0);
  for (int i = 0; i < 1000; ++i) {
    const double t = u(rng);
    const cplx v = mu4_hat(t, cfg);
    const cplx rec = (1.0 + std::exp(cplx(0.0, kPi * t))) / 2.0 * mu4_hat(t / 4.0, cfg);
    EXPECT_LE(std::abs(v - rec), 2 * tol) << t;
    EXPECT_LE(std::abs(v), 1.0 + tol);
    EXPECT_LE(std::abs(mu4_hat(-t, cfg) - std::conj(v)), 2 * tol);
  }
}

TEST(Mu4Hat, RejectsNonFinite) {
  EXPECT_THROW(mu4_hat(std::numeric_limits<double>::infinity()), DomainError);
  EXPECT_THROW(mu4_hat(std::nan("")), DomainError);
}

TEST(TransformEvaluator, FactorCountRule) {
  const TransformEvaluator cfg(1e-12, 64);
  // max(2, ceil(log4(1 / 1e-13)) + 2) = ceil(21.59) + 2
  EXPECT_EQ(cfg.factor_count(0.0), 24);
  EXPECT_EQ(cfg.factor_count(0.5), 24);
  EXPECT_EQ(cfg.factor_count(4096.0), 30);
  EXPECT_EQ(TransformEvaluator(1e-12, 10).factor_count(4096.0), 10);
  EXPECT_THROW(TransformEvaluator(0.0), DomainError);
  EXPECT_THROW(TransformEvaluator(1e-12, 0), DomainError);
}

TEST(TrigPi, ExactZeros) {
  EXPECT_EQ(cospi(0.5), 0.0);
  EXPECT_EQ(cospi(-7.5), 0.0);
  EXPECT_EQ(sinpi(3.0), 0.0);
  EXPECT_EQ(sinpi(-1e6), 0.0);
  EXPECT_NEAR(cospi(1.0 / 3.0), 0.5, 1e-15);
}

TEST(CylinderExpIntegral, Examples) {
  EXPECT_DOUBLE_EQ(std::abs(cylinder_exp_integral(0.0, XCylinder({0, 2, 2}))), 0.125);
  EXPECT_EQ(std::abs(cylinder_exp_integral(1.0, XCylinder{})), 0.0);
  EXPECT_EQ(std::abs(cylinder_exp_integral(4.0, XCylinder({2}))), 0.0);
  EXPECT_THROW(XCylinder({1}), ContractError);
}

TEST(CylinderExpIntegral, ChildrenAddUp) {
  const TransformEvaluator cfg;
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(-50.0, 50.0);
  std::uniform_int_distribution<int> d(0, 1);
  for (int i = 0; i < 200; ++i) {
    std::vector<int> digits;
    for (int k = 0; k < i % 5; ++k) digits.push_back(2 * d(rng));
    const XCylinder c(digits);
    const double delta = u(rng);
    const cplx sum = cylinder_exp_integral(delta, c.child(0), cfg) +
                     cylinder_exp_integral(delta, c.child(2), cfg);
    EXPECT_LE(std::abs(sum - cylinder_exp_integral(delta, c, cfg)), 4 * cfg.tolerance());
  }
}

TEST(IfsMonteCarlo, Examples) {
  const std::int64_t samples = 200000;
  const double band = 5.0 / std::sqrt(static_cast<double>(samples));
  EXPECT_EQ(ifs_monte_carlo_integral([](double, double) { return cplx(1.0, 0.0); }, 24, samples, 1),
            cplx(1.0, 0.0));
  const cplx e1 = ifs_monte_carlo_integral(
      [](double x, double) { return std::exp(cplx(0.0, 2 * kPi * x)); }, 24, samples, 2);
  EXPECT_LT(std::abs(e1), band);
  const cplx e2 = ifs_monte_carlo_integral(
      [](double x, double) { return std::exp(cplx(0.0, 4 * kPi * x)); }, 24, samples, 3);
  EXPECT_LT(std::abs(e2 - mu4_hat(2.0)), band);
  // Lebesgue in y: integral of y is 1/2.
  const cplx y = ifs_monte_carlo_integral([](double, double y) { return cplx(y, 0.0); }, 24,
                                          samples, 4);
  EXPECT_LT(std::abs(y - 0.5), band);
}

TEST(IfsMonteCarlo, DeterministicAndGuarded) {
  auto f = [](double x, double y) { return cplx(x * y, x - y); };
  EXPECT_EQ(ifs_monte_carlo_integral(f, 16, 1000, 42), ifs_monte_carlo_integral(f, 16, 1000, 42));
  EXPECT_THROW(ifs_monte_carlo_integral(f, 7, 10, 1), ContractError);
  EXPECT_THROW(ifs_monte_carlo_integral(f, 16, 0, 1), ContractError);
}
