#include "cantor4/atoms.hpp"
#include "cantor4/errors.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace cantor4;

namespace {

const double kPi = std::acos(-1.0);

FunctionSum random_sum(std::mt19937_64& rng, int level = 2) {
  RandomSumOptions o;
  o.max_level = level;
  return random_function_sum(rng, o);
}

}  // namespace

TEST(Cylinder, EncodingMatchesMaps) {
  // k = x/2 + 2y
  const Cylinder c({0, 2, 0, 2}, {0, 0, 1, 1});
  EXPECT_EQ(c.level(), 4);
  for (int i = 0; i < 4; ++i) EXPECT_EQ(c.pair(i), i);
  EXPECT_EQ(c.xword(), (std::vector<int>{0, 2, 0, 2}));
  EXPECT_EQ(c.yword(), (std::vector<int>{0, 0, 1, 1}));
  EXPECT_EQ(Cylinder::from_pairs({0, 1, 2, 3}), c);
  EXPECT_THROW(Cylinder({1}, {0}), ContractError);
  EXPECT_THROW(Cylinder({0, 2}, {0}), ContractError);
  EXPECT_THROW(Cylinder({0}, {2}), ContractError);
}

TEST(Cylinder, PrependTailChildPrefix) {
  const Cylinder c = Cylinder::from_pairs({1, 3});
  EXPECT_EQ(c.prepended(2), Cylinder::from_pairs({2, 1, 3}));
  EXPECT_EQ(c.tail(), Cylinder::from_pairs({3}));
  EXPECT_EQ(c.child(0), Cylinder::from_pairs({1, 3, 0}));
  EXPECT_EQ(c.child(0).prefix(2), c);
  EXPECT_TRUE(c.is_prefix_of(c.child(2)));
  EXPECT_FALSE(c.child(2).is_prefix_of(c));
  EXPECT_TRUE(Cylinder{}.is_prefix_of(c));
}

TEST(Cylinder, OffsetsAndMembership) {
  const Cylinder c({2, 0, 2}, {1, 0, 1});
  EXPECT_DOUBLE_EQ(c.x_offset(), 2.0 / 4 + 2.0 / 64);
  EXPECT_EQ(c.x_offset_numerator(), 34u);
  EXPECT_TRUE(c.contains_point(c.x_offset(), 0.5 + 0.125));
  EXPECT_FALSE(c.contains_point(c.x_offset(), 0.25));
  EXPECT_FALSE(c.contains_point(0.0, 0.625));
}

TEST(Atom, Validation) {
  EXPECT_THROW(Atom(cplx(std::nan(""), 0.0), 1.0, {}, {}), DomainError);
  EXPECT_THROW(Atom(1.0, std::nan(""), {}, {}), DomainError);
}

TEST(Exponential, Basics) {
  const FunctionSum e5 = exponential(5.0);
  ASSERT_EQ(e5.size(), 1u);
  EXPECT_EQ(e5.atoms()[0].level(), 0);
  EXPECT_EQ(e5.atoms()[0].freq, Frequency::integer(5));
  EXPECT_EQ(one().atoms()[0].freq, Frequency{});
  for (double t : {0.0, 1.0, -3.7, 100.25}) EXPECT_NEAR(norm(exponential(t)), 1.0, 1e-14);
}

TEST(InnerProduct, Examples) {
  EXPECT_EQ(inner_product(one(), one()), cplx(1.0, 0.0));
  EXPECT_EQ(std::abs(inner_product(exponential(1.0), exponential(0.0))), 0.0);
  const FunctionSum piece({Atom(1.0, 0.0, {0}, {0})});
  EXPECT_EQ(inner_product(piece, one()), cplx(0.25, 0.0));
  for (double a : {0.5, 2.0, -3.25}) {
    for (double b : {0.0, 1.5, 7.0}) {
      EXPECT_LT(std::abs(inner_product(exponential(a), exponential(b)) - oracle::mu4_hat(a - b)), 1e-12);
    }
  }
}

TEST(InnerProduct, DisjointCylindersVanish) {
  const FunctionSum f({Atom(1.0, 3.0, {0, 2}, {1, 0})});
  const FunctionSum g({Atom(1.0, 3.0, {0, 0}, {1, 0})});
  EXPECT_EQ(inner_product(f, g), cplx(0.0, 0.0));
}

TEST(InnerProduct, SesquilinearAndHermitian) {
  std::mt19937_64 rng(21);
  const cplx a(0.3, -1.7);
  for (int i = 0; i < 50; ++i) {
    const FunctionSum f = random_sum(rng);
    const FunctionSum g = random_sum(rng);
    const FunctionSum h = random_sum(rng);
    EXPECT_LT(std::abs(inner_product(a * f + g, h) - (a * inner_product(f, h) + inner_product(g, h))), 1e-12);
    EXPECT_LT(std::abs(inner_product(f, g) - std::conj(inner_product(g, f))), 1e-12);
    const cplx ff = inner_product(f, f);
    EXPECT_GE(ff.real(), 0.0);
    EXPECT_LT(std::abs(ff.imag()), 1e-14);
  }
  EXPECT_EQ(norm(FunctionSum{}), 0.0);
}

TEST(InnerProduct, AgreesWithPointwiseMonteCarlo) {
  std::mt19937_64 rng(23);
  const std::int64_t samples = 100000;
  for (int i = 0; i < 5; ++i) {
    const FunctionSum f = random_sum(rng);
    const FunctionSum g = random_sum(rng);
    const cplx mc = ifs_monte_carlo_integral(
        [&](double x, double y) { return evaluate(f, x, y) * std::conj(evaluate(g, x, y)); }, 24,
        samples, 100 + i);
    EXPECT_LT(std::abs(mc - inner_product(f, g)), 5.0 / std::sqrt(double(samples)));
  }
}

TEST(Refine, Examples) {
  const FunctionSum r = refine(one(), 1);
  ASSERT_EQ(r.size(), 4u);
  for (const Atom& a : r.atoms()) EXPECT_EQ(a.coeff, cplx(1.0, 0.0));
  EXPECT_THROW(refine(FunctionSum({Atom(1.0, 0.0, {0, 0}, {0, 0})}), 1), ContractError);
}

TEST(Refine, PreservesFunctionAndComposes) {
  std::mt19937_64 rng(25);
  for (int i = 0; i < 30; ++i) {
    const FunctionSum f = random_sum(rng, 1);
    const FunctionSum r2 = refine(f, 2);
    for (const Atom& a : r2.atoms()) EXPECT_EQ(a.level(), 2);
    EXPECT_NEAR(norm(r2), norm(f), 1e-12);
    const FunctionSum g = random_sum(rng, 2);
    EXPECT_LT(std::abs(inner_product(r2, g) - inner_product(f, g)), 1e-12);
    const FunctionSum a = normalize(refine(refine(f, 1), 2));
    const FunctionSum b = normalize(r2);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t k = 0; k < a.size(); ++k) {
      EXPECT_EQ(a.atoms()[k].freq, b.atoms()[k].freq);
      EXPECT_EQ(a.atoms()[k].cyl, b.atoms()[k].cyl);
      EXPECT_LT(std::abs(a.atoms()[k].coeff - b.atoms()[k].coeff), 1e-15);
    }
  }
}

TEST(Refine, AtomEqualsSumOfChildren) {
  std::mt19937_64 rng(27);
  const Atom parent(cplx(0.4, 0.9), 2.5, {2}, {1});
  FunctionSum children;
  for (int k = 0; k < 4; ++k) children.push_back(Atom(parent.coeff, parent.freq, parent.cyl.child(k)));
  for (int i = 0; i < 20; ++i) {
    const FunctionSum g = random_sum(rng);
    EXPECT_LT(std::abs(inner_product(FunctionSum({parent}), g) - inner_product(children, g)), 1e-13);
  }
}

TEST(Normalize, Examples) {
  const Atom half(0.5, 2.0, {0}, {1});
  const FunctionSum merged = normalize(FunctionSum({half, half}));
  ASSERT_EQ(merged.size(), 1u);
  EXPECT_EQ(merged.atoms()[0].coeff, cplx(1.0, 0.0));
  EXPECT_TRUE(normalize(FunctionSum({Atom(0.0, 1.0, {}, {})})).empty());
  std::mt19937_64 rng(29);
  for (int i = 0; i < 30; ++i) {
    const FunctionSum f = random_sum(rng);
    const FunctionSum g = random_sum(rng);
    EXPECT_LT(std::abs(inner_product(normalize(f + f - g), g) - inner_product(f + f - g, g)), 1e-12);
  }
}

TEST(Normalize, SortedByFrequencyThenCylinder) {
  std::mt19937_64 rng(31);
  const FunctionSum f = normalize(random_sum(rng) + random_sum(rng) + random_sum(rng));
  for (std::size_t k = 1; k < f.size(); ++k) {
    const Atom& a = f.atoms()[k - 1];
    const Atom& b = f.atoms()[k];
    EXPECT_TRUE(a.freq < b.freq || (a.freq == b.freq && a.cyl < b.cyl));
  }
}

TEST(Evaluate, PointwiseValues) {
  const FunctionSum f({Atom(cplx(2.0, 0.0), 1.0, {2}, {0})});
  const double x = 0.5 + 2.0 / 16;
  EXPECT_LT(std::abs(evaluate(f, x, 0.25) - 2.0 * std::exp(cplx(0.0, 2 * kPi * x))), 1e-14);
  EXPECT_EQ(evaluate(f, x, 0.75), cplx(0.0, 0.0));
  EXPECT_EQ(evaluate(f, 0.0, 0.25), cplx(0.0, 0.0));
}

TEST(RandomFunctionSum, RespectsOptions) {
  std::mt19937_64 rng(33);
  RandomSumOptions o;
  o.max_level = 3;
  o.exact_level = true;
  o.min_atoms = 2;
  o.max_atoms = 4;
  for (int i = 0; i < 50; ++i) {
    const FunctionSum f = random_function_sum(rng, o);
    EXPECT_GE(f.size(), 2u);
    EXPECT_LE(f.size(), 4u);
    for (const Atom& a : f.atoms()) {
      EXPECT_EQ(a.level(), 3);
      EXPECT_TRUE(a.freq.is_integer());
      EXPECT_LE(std::abs(a.freq.to_double()), 8.0);
      EXPECT_LE(std::abs(a.coeff), 1.0 / f.size() + 1e-15);
    }
  }
}
