#include <gtest/gtest.h>

#include "girr/linear_fp.hpp"
#include "girr/number_theory.hpp"

using namespace girr;

namespace {

bool trial_division_prime(std::int64_t m) {
  if (m < 2) return false;
  for (std::int64_t d = 2; d * d <= m; ++d) {
    if (m % d == 0) return false;
  }
  return true;
}

// Primitive prime divisor by direct divisibility of p^k - 1.
bool brute_force_has_zsigmondy(std::int64_t p, int n) {
  const std::int64_t target = checked_pow(p, n) - 1;
  for (std::int64_t q = 2; q <= target; ++q) {
    if (target % q != 0 || !trial_division_prime(q)) continue;
    bool primitive = true;
    for (int k = 1; k < n && primitive; ++k) {
      if ((checked_pow(p, k) - 1) % q == 0) primitive = false;
    }
    if (primitive) return true;
  }
  return false;
}

}  // namespace

TEST(Primes, SmallValues) {
  EXPECT_TRUE(is_prime(2));
  EXPECT_FALSE(is_prime(1));
  EXPECT_TRUE(is_prime(13));
  for (std::int64_t m = 1; m < 5000; ++m) EXPECT_EQ(is_prime(m), trial_division_prime(m)) << m;
  EXPECT_TRUE(is_prime(2305843009213693951LL));
  EXPECT_FALSE(is_prime(3215031751LL));  // strong pseudoprime to bases 2, 3, 5, 7
}

TEST(Primes, Mersenne) {
  EXPECT_TRUE(is_mersenne_prime(3));
  EXPECT_TRUE(is_mersenne_prime(7));
  EXPECT_FALSE(is_mersenne_prime(5));
  EXPECT_FALSE(is_mersenne_prime(15));
  EXPECT_TRUE(is_mersenne_prime(31));
}

TEST(Factorization, RoundTrips) {
  for (std::int64_t m = 1; m < 3000; ++m) {
    std::int64_t prod = 1;
    for (auto [q, k] : factorize(m)) {
      EXPECT_TRUE(is_prime(q));
      prod *= checked_pow(q, k);
    }
    EXPECT_EQ(prod, m);
  }
  EXPECT_EQ(divisors(12), (std::vector<std::int64_t>{1, 2, 3, 4, 6, 12}));
  EXPECT_EQ(euler_phi(486), 162);
}

TEST(Zsigmondy, ListedValues) {
  EXPECT_EQ(zsigmondy_prime(2, 1), std::nullopt);
  EXPECT_EQ(zsigmondy_prime(2, 6), std::nullopt);
  EXPECT_EQ(zsigmondy_prime(2, 4), 5);
  EXPECT_EQ(zsigmondy_prime(3, 2), std::nullopt);
  EXPECT_THROW(zsigmondy_prime(4, 2), std::invalid_argument);
}

TEST(Zsigmondy, AgreesWithBruteForce) {
  for (std::int64_t p : {2, 3, 5, 7, 11, 13, 31}) {
    for (int n = 1; checked_pow(p, n) <= 5000; ++n) {
      const auto q = zsigmondy_prime(p, n);
      EXPECT_EQ(q.has_value(), brute_force_has_zsigmondy(p, n)) << p << "^" << n;
      if (q) {
        EXPECT_EQ(multiplicative_order(p % *q, *q), n);
      }
    }
  }
}

TEST(PrimitivePolynomial, CompanionOrderByPowering) {
  EXPECT_EQ(primitive_polynomial(2, 2), (std::vector<std::int64_t>{1, 1, 1}));
  EXPECT_EQ(primitive_polynomial(3, 1), (std::vector<std::int64_t>{1, 1}));  // x + 1 = x - 2
  for (auto [p, n] : std::vector<std::pair<std::int64_t, int>>{{2, 2}, {2, 3}, {2, 4}, {3, 2}, {3, 3}, {5, 2}, {7, 2}, {3, 4}}) {
    const auto poly = primitive_polynomial(p, n);
    const FpMatrix c = companion_matrix(poly, p);
    const std::int64_t target = checked_pow(p, n) - 1;
    FpMatrix x = c;
    std::int64_t k = 1;
    while (!x.is_identity()) {
      x = x * c;
      ++k;
    }
    EXPECT_EQ(k, target) << p << "^" << n;
  }
}

TEST(DixonPrime, Examples) {
  EXPECT_EQ(find_dixon_prime(6, 24), 13);
  EXPECT_EQ(find_dixon_prime(1, 1), 3);
  EXPECT_EQ(find_dixon_prime(12, 72), 37);
  for (std::int64_t e : {1, 2, 6, 12, 30}) {
    for (std::int64_t order : {1, 24, 216, 1000}) {
      const std::int64_t l = find_dixon_prime(e, order);
      EXPECT_TRUE(is_prime(l));
      EXPECT_EQ(l % e, 1 % e);
      EXPECT_GT(l * l, 4 * order);
      for (std::int64_t smaller = 2; smaller < l; ++smaller) {
        EXPECT_FALSE(is_prime(smaller) && smaller % e == 1 % e && smaller * smaller > 4 * order);
      }
    }
  }
}
