#include <powideal/sparse_poly.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace powideal;

namespace {

SparseIntPoly random_poly(std::size_t vars, std::mt19937& rng) {
  SparseIntPoly p(vars);
  const int terms = std::uniform_int_distribution<int>(0, 5)(rng);
  for (int t = 0; t < terms; ++t) {
    Exponents e(vars);
    for (auto& x : e) x = std::uniform_int_distribution<long>(0, 3)(rng);
    p.add_term(e, std::uniform_int_distribution<long>(-50, 50)(rng));
  }
  return p;
}

}  // namespace

TEST(SparseIntPoly, PrintsDocumentedSyntax) {
  const auto x0 = SparseIntPoly::variable_power(3, 0, 1);
  const auto x1 = SparseIntPoly::variable_power(3, 1, 1);
  const auto x2 = SparseIntPoly::variable_power(3, 2, 2);
  EXPECT_EQ((x0 * x1 - x2 * SparseIntPoly::constant(3, 3)).to_string(), "1*x0*x1-3*x2^2");
  EXPECT_EQ(SparseIntPoly(2).to_string(), "0");
  EXPECT_EQ(SparseIntPoly::constant(2, -7).to_string(), "-7");
}

TEST(SparseIntPoly, ParseRoundTripsRandomPolynomials) {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t vars = 1 + rng() % 4;
    const auto p = random_poly(vars, rng);
    EXPECT_EQ(SparseIntPoly::parse(vars, p.to_string()), p) << p.to_string();
  }
  EXPECT_EQ(SparseIntPoly::parse(2, "x0 + 2*x1^3 - x0"), SparseIntPoly::parse(2, "2*x1^3"));
  EXPECT_THROW(SparseIntPoly::parse(2, "1*x2"), std::invalid_argument);
  EXPECT_THROW(SparseIntPoly::parse(2, "1*y0"), std::invalid_argument);
  EXPECT_THROW(SparseIntPoly::parse(2, ""), std::invalid_argument);
  EXPECT_THROW(SparseIntPoly::parse(2, "1 2"), std::invalid_argument);
}

TEST(SparseIntPoly, RingAxiomsOnRandomInputs) {
  std::mt19937 rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    const auto a = random_poly(3, rng), b = random_poly(3, rng), c = random_poly(3, rng);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_TRUE((a - a).is_zero());
  }
}

TEST(SparseIntPoly, PowerOfLinearFormHasMultinomialCoefficients) {
  SparseIntPoly lin(3);
  for (std::size_t v = 0; v < 3; ++v) lin += SparseIntPoly::variable_power(3, v, 1);
  const auto p = lin.pow(4);
  EXPECT_TRUE(p.is_homogeneous());
  EXPECT_EQ(p.homogeneous_degree(), 4);
  EXPECT_EQ(p.term_count(), 15u);
  EXPECT_EQ(p.coefficient({2, 1, 1}), 12);
  EXPECT_EQ(p.coefficient({4, 0, 0}), 1);
  EXPECT_EQ(p.coefficient({2, 2, 0}), 6);
  EXPECT_EQ(p.coefficient({1, 1, 1}), 0);
}

TEST(SparseIntPoly, ZeroCoefficientsAreNotStored) {
  SparseIntPoly p(2);
  p.add_term({1, 0}, 3);
  p.add_term({1, 0}, -3);
  EXPECT_TRUE(p.is_zero());
  EXPECT_EQ(p.term_count(), 0u);
}

TEST(MonomialsOfDegree, CountAndOrder) {
  for (std::size_t vars = 1; vars <= 5; ++vars)
    for (long deg = 0; deg <= 6; ++deg) {
      const auto ms = monomials_of_degree(vars, deg);
      EXPECT_EQ(BigInt(ms.size()), binomial(vars - 1 + deg, vars - 1));
      for (std::size_t i = 1; i < ms.size(); ++i) EXPECT_GT(ms[i - 1], ms[i]);
    }
  EXPECT_TRUE(monomials_of_degree(3, -1).empty());
}
