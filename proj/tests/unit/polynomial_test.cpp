#include "hodgesig/arith.hpp"
#include "hodgesig/polynomial.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace hodgesig;

namespace {

RatPoly rat(std::initializer_list<long> c) {
  RatPoly out;
  for (long x : c) out.push_back(Rational(x));
  return out;
}

}  // namespace

TEST(Poly, DivModReconstructs) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> d(-9, 9);
  for (int trial = 0; trial < 200; ++trial) {
    RatPoly f, g;
    for (int i = 0; i < 7; ++i) f.push_back(Rational(d(rng)));
    for (int i = 0; i < 3; ++i) g.push_back(Rational(d(rng)));
    g.push_back(Rational(1 + (trial % 4)));
    poly::trim(f);
    poly::DivMod qr = poly::divmod(f, g);
    EXPECT_EQ(poly::add(poly::mul(qr.quotient, g), qr.remainder), f);
    EXPECT_LT(poly::degree(qr.remainder), poly::degree(g));
  }
}

TEST(Poly, GcdIsMonic) {
  RatPoly a = poly::mul(rat({-1, 1}), rat({2, 0, 1}));
  RatPoly b = poly::mul(rat({-1, 1}), rat({3, 1}));
  EXPECT_EQ(poly::gcd(poly::scale(a, 6), b), rat({-1, 1}));
}

TEST(Poly, SquarefreeDecomposition) {
  // 3 (x - 1)^3 (x^2 + 2)^2 (x + 5)
  RatPoly f = rat({3});
  for (int i = 0; i < 3; ++i) f = poly::mul(f, rat({-1, 1}));
  for (int i = 0; i < 2; ++i) f = poly::mul(f, rat({2, 0, 1}));
  f = poly::mul(f, rat({5, 1}));
  auto parts = poly::squarefree_decomposition(f);
  ASSERT_EQ(parts.size(), 3u);
  EXPECT_EQ(parts[0].multiplicity, 1);
  EXPECT_EQ(parts[0].factor, rat({5, 1}));
  EXPECT_EQ(parts[1].multiplicity, 2);
  EXPECT_EQ(parts[1].factor, rat({2, 0, 1}));
  EXPECT_EQ(parts[2].multiplicity, 3);
  EXPECT_EQ(parts[2].factor, rat({-1, 1}));
}

TEST(Poly, PowerSumsRoundTrip) {
  IntPoly f{Integer(16), 4, 3, 2, 1};
  auto sums = poly::power_sums(f, 4);
  EXPECT_EQ(sums[0], -2);  // -a_{n-1}
  EXPECT_EQ(poly::from_power_sums(sums, 4), f);
  // roots 1, 2, 3
  EXPECT_EQ(poly::power_sums(IntPoly{-6, 11, -6, 1}, 3), (std::vector<Integer>{6, 14, 36}));
  EXPECT_THROW(poly::from_power_sums({1}, 2), DomainError);
}

TEST(Poly, RootMultiplicity) {
  IntPoly f{4, -4, 1};  // (x - 2)^2
  EXPECT_EQ(poly::root_multiplicity(poly::mul(f, IntPoly{1, 1}), 2), 2);
  EXPECT_EQ(poly::root_multiplicity(f, 3), 0);
  EXPECT_EQ(poly::root_multiplicity(IntPoly{0, 0, 0, 1}, 0), 3);
}

TEST(Poly, SurdSignExact) {
  // 7 - 5 sqrt 2 < 0 and 3 - 2 sqrt 2 > 0 (both tiny in magnitude)
  EXPECT_EQ(poly::sign({7, -5, 2}), -1);
  EXPECT_EQ(poly::sign({3, -2, 2}), 1);
  EXPECT_EQ(poly::sign({0, 0, 5}), 0);
  EXPECT_EQ(poly::sign({-6, 3, 4}), 0);
  // (x^2 - 8) at 2 sqrt 2 is zero
  EXPECT_EQ(poly::sign(poly::evaluate(rat({-8, 0, 1}), poly::Surd{0, 2, 2})), 0);
}

TEST(Poly, SturmCountsRoots) {
  // (x - 1)(x + 1)(x - 3): two roots inside (-2 sqrt 2, 2 sqrt 2)
  RatPoly f = poly::mul(poly::mul(rat({-1, 1}), rat({1, 1})), rat({-3, 1}));
  auto chain = poly::sturm_chain(f);
  EXPECT_EQ(poly::count_real_roots(chain, {0, -2, 2}, {0, 2, 2}), 2);
  EXPECT_EQ(poly::count_real_roots(chain, {-10, 0, 0}, {10, 0, 0}), 3);
  EXPECT_EQ(poly::count_real_roots(poly::sturm_chain(rat({1, 0, 1})), {-10, 0, 0}, {10, 0, 0}), 0);
}
