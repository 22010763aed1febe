#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace girr {

/// Raised when a configured size bound (order, conductor, field size) is exceeded.
class BoundExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct PrimePower {
  std::int64_t p = 2;
  int n = 1;

  std::int64_t value() const;
};

bool is_prime(std::int64_t m);
bool is_mersenne_prime(std::int64_t p);

/// Prime factorization as (prime, exponent) pairs in increasing prime order.
std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t m);
std::vector<std::int64_t> prime_divisors(std::int64_t m);
std::vector<std::int64_t> divisors(std::int64_t m);

std::int64_t gcd(std::int64_t a, std::int64_t b);
std::int64_t lcm(std::int64_t a, std::int64_t b);
std::int64_t euler_phi(std::int64_t m);

/// Modular helpers for moduli below 2^62.
std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t m);
std::int64_t pow_mod(std::int64_t a, std::int64_t e, std::int64_t m);
std::int64_t inv_mod(std::int64_t a, std::int64_t m);
std::int64_t mod(std::int64_t a, std::int64_t m);

/// p^n with overflow detection.
std::int64_t checked_pow(std::int64_t base, int exp);

/// Multiplicative order of a modulo m; requires gcd(a, m) = 1.
std::int64_t multiplicative_order(std::int64_t a, std::int64_t m);

/// Smallest primitive root modulo a prime.
std::int64_t primitive_root(std::int64_t p);

/// A prime dividing p^n - 1 and no p^k - 1 with k < n, or nullopt when none exists.
/// Found by factoring p^n - 1; the smallest such prime is returned.
std::optional<std::int64_t> zsigmondy_prime(std::int64_t p, int n);

/// Monic degree-n polynomial over F_p whose companion matrix has order p^n - 1.
/// Coefficients are returned low degree first and include the leading 1.
std::vector<std::int64_t> primitive_polynomial(std::int64_t p, int n,
                                               std::int64_t bound = 1'000'000);

/// Smallest prime l with l = 1 (mod e) and l^2 > 4 * group_order.
std::int64_t find_dixon_prime(std::int64_t e, std::int64_t group_order);

}  // namespace girr
