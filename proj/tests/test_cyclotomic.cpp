#include <gtest/gtest.h>

#include <random>

#include "girr/cyclotomic.hpp"
#include "girr/number_theory.hpp"

using namespace girr;

namespace {

CyclotomicNumber random_value(std::mt19937_64& rng, std::int64_t e) {
  std::vector<std::int64_t> mults(e);
  for (auto& m : mults) m = static_cast<std::int64_t>(rng() % 7) - 3;
  return CyclotomicNumber::from_root_multiplicities(e, mults);
}

}  // namespace

TEST(Cyclotomic, RootMultiplicityExamples) {
  std::vector<std::int64_t> m3{0, 1, 1};
  const auto minus_one = CyclotomicNumber::from_root_multiplicities(3, m3);
  EXPECT_TRUE(minus_one.is_rational());
  EXPECT_EQ(minus_one.rational_value(), -1);
  std::vector<std::int64_t> m4{0, 1, 0, 0};
  EXPECT_EQ(CyclotomicNumber::from_root_multiplicities(4, m4), CyclotomicNumber::zeta(4));
  std::vector<std::int64_t> m5{0, 1, 0, 0, 1};
  const auto golden = CyclotomicNumber::from_root_multiplicities(5, m5);
  EXPECT_FALSE(golden.is_rational());
  EXPECT_NEAR(golden.to_complex().real(), 0.6180339887498949, 1e-9);
  EXPECT_NEAR(golden.to_complex().imag(), 0.0, 1e-12);
  EXPECT_THROW(CyclotomicNumber::from_root_multiplicities(5, m4), std::invalid_argument);
}

TEST(Cyclotomic, RingExamples) {
  EXPECT_EQ(CyclotomicNumber::zeta(3) + CyclotomicNumber::zeta(3, 2), CyclotomicNumber(-1));
  EXPECT_EQ(CyclotomicNumber::zeta(4) * CyclotomicNumber::zeta(4), CyclotomicNumber(-1));
  const auto golden = CyclotomicNumber::zeta(5) + CyclotomicNumber::zeta(5, 4);
  EXPECT_EQ(conjugate(golden), golden);
  EXPECT_EQ(galois_apply(CyclotomicNumber::zeta(3), 2), CyclotomicNumber::zeta(3, 2));
  EXPECT_EQ(galois_apply(CyclotomicNumber(-1), 7), CyclotomicNumber(-1));
  EXPECT_EQ(galois_apply(golden, 2), CyclotomicNumber::zeta(5, 2) + CyclotomicNumber::zeta(5, 3));
  EXPECT_THROW(CyclotomicNumber::zeta(6).galois(3), std::invalid_argument);
  EXPECT_TRUE(is_rational(CyclotomicNumber(-1)));
  EXPECT_FALSE(is_rational(CyclotomicNumber::zeta(3)));
}

TEST(Cyclotomic, MixedConductorsCompareByValue) {
  // zeta_6^2 = zeta_3 and zeta_12^3 = zeta_4.
  EXPECT_EQ(CyclotomicNumber::zeta(6, 2), CyclotomicNumber::zeta(3));
  EXPECT_EQ(CyclotomicNumber::zeta(12, 3), CyclotomicNumber::zeta(4));
  EXPECT_EQ(CyclotomicNumber::zeta(3).rebased(12), CyclotomicNumber::zeta(12, 4));
  EXPECT_NE(CyclotomicNumber::zeta(5), CyclotomicNumber::zeta(5, 2));
}

TEST(Cyclotomic, TextRoundTrip) {
  std::mt19937_64 rng(7);
  for (std::int64_t e : {1, 2, 3, 4, 5, 8, 9, 12, 15, 24, 30}) {
    for (int trial = 0; trial < 20; ++trial) {
      const auto a = random_value(rng, e);
      const auto text = a.to_string();
      const auto back = CyclotomicNumber::parse(text);
      EXPECT_EQ(back, a) << text;
      EXPECT_EQ(back.to_string(), text);
    }
  }
}

TEST(CyclotomicProperty, GaloisIsRingAutomorphism) {
  std::mt19937_64 rng(11);
  for (std::int64_t e : {5, 7, 8, 9, 12, 15, 20, 21, 24}) {
    for (int trial = 0; trial < 10; ++trial) {
      const auto a = random_value(rng, e), b = random_value(rng, e);
      for (std::int64_t k = 1; k < e; ++k) {
        if (gcd(k, e) != 1) continue;
        EXPECT_EQ((a + b).galois(k), a.galois(k) + b.galois(k));
        EXPECT_EQ((a * b).galois(k), a.galois(k) * b.galois(k));
        for (std::int64_t k2 = 1; k2 < e; k2 += 2) {
          if (gcd(k2, e) != 1) continue;
          EXPECT_EQ(a.galois(k).galois(k2), a.galois(k * k2 % e));
        }
      }
    }
  }
}

TEST(CyclotomicProperty, NormIsNonnegativeAndArithmeticMatchesNumerics) {
  std::mt19937_64 rng(13);
  for (std::int64_t e : {3, 7, 10, 16, 18}) {
    for (int trial = 0; trial < 20; ++trial) {
      const auto a = random_value(rng, e), b = random_value(rng, e);
      const auto norm = (a * a.conjugate()).to_complex();
      EXPECT_GE(norm.real(), -1e-9);
      EXPECT_NEAR(norm.imag(), 0.0, 1e-9);
      EXPECT_LT(std::abs((a * b).to_complex() - a.to_complex() * b.to_complex()), 1e-8);
      EXPECT_LT(std::abs((a - b).to_complex() - (a.to_complex() - b.to_complex())), 1e-8);
    }
  }
}

TEST(Cyclotomic, ConductorBoundIsEnforced) {
  const auto old = conductor_bound();
  set_conductor_bound(100);
  EXPECT_THROW(CyclotomicNumber::zeta(101), BoundExceeded);
  EXPECT_THROW(CyclotomicNumber::zeta(11) * CyclotomicNumber::zeta(13), BoundExceeded);
  set_conductor_bound(old);
}
