#include "girr/number_theory.hpp"

#include <algorithm>
#include <limits>
#include <tuple>
#include <string>

namespace girr {

namespace {

using u128 = unsigned __int128;

// Product of polynomials modulo (f, p); f monic of degree n, operands of degree < n.
std::vector<std::int64_t> polymulmod(const std::vector<std::int64_t>& a,
                                     const std::vector<std::int64_t>& b,
                                     const std::vector<std::int64_t>& f, std::int64_t p) {
  const std::size_t n = f.size() - 1;
  std::vector<std::int64_t> prod(2 * n - 1, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  }
  for (std::size_t k = prod.size(); k-- > n;) {
    const std::int64_t c = prod[k];
    if (c == 0) continue;
    for (std::size_t i = 0; i <= n; ++i) {
      prod[k - n + i] = mod(prod[k - n + i] - c * f[i], p);
    }
  }
  prod.resize(n);
  return prod;
}

std::vector<std::int64_t> polypowmod_x(std::int64_t e, const std::vector<std::int64_t>& f,
                                       std::int64_t p) {
  const std::size_t n = f.size() - 1;
  std::vector<std::int64_t> result(n, 0), base(n, 0);
  result[0] = 1;
  if (n == 1) {
    base[0] = mod(-f[0], p);
  } else {
    base[1] = 1;
  }
  while (e > 0) {
    if (e & 1) result = polymulmod(result, base, f, p);
    base = polymulmod(base, base, f, p);
    e >>= 1;
  }
  return result;
}

bool is_one(const std::vector<std::int64_t>& v) {
  if (v.empty() || v[0] != 1) return false;
  return std::all_of(v.begin() + 1, v.end(), [](std::int64_t c) { return c == 0; });
}

}  // namespace

std::int64_t PrimePower::value() const { return checked_pow(p, n); }

std::int64_t mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t m) {
  return static_cast<std::int64_t>(static_cast<u128>(mod(a, m)) * static_cast<u128>(mod(b, m)) %
                                   static_cast<u128>(m));
}

std::int64_t pow_mod(std::int64_t a, std::int64_t e, std::int64_t m) {
  if (m == 1) return 0;
  std::int64_t result = 1;
  a = mod(a, m);
  while (e > 0) {
    if (e & 1) result = mul_mod(result, a, m);
    a = mul_mod(a, a, m);
    e >>= 1;
  }
  return result;
}

std::int64_t inv_mod(std::int64_t a, std::int64_t m) {
  std::int64_t old_r = mod(a, m), r = m, old_s = 1, s = 0;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    std::tie(old_r, r) = std::make_pair(r, old_r - q * r);
    std::tie(old_s, s) = std::make_pair(s, old_s - q * s);
  }
  if (old_r != 1) throw std::invalid_argument("inv_mod: element not invertible");
  return mod(old_s, m);
}

std::int64_t gcd(std::int64_t a, std::int64_t b) {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b != 0) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

std::int64_t lcm(std::int64_t a, std::int64_t b) {
  if (a == 0 || b == 0) return 0;
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a / gcd(a, b), b, &out)) throw BoundExceeded("lcm overflow");
  return out;
}

std::int64_t checked_pow(std::int64_t base, int exp) {
  std::int64_t out = 1;
  for (int i = 0; i < exp; ++i) {
    if (__builtin_mul_overflow(out, base, &out)) {
      throw BoundExceeded("integer power overflows 64 bits: " + std::to_string(base) + "^" +
                          std::to_string(exp));
    }
  }
  return out;
}

bool is_prime(std::int64_t m) {
  if (m < 2) return false;
  for (std::int64_t q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (m % q == 0) return m == q;
  }
  // Deterministic Miller-Rabin for 64-bit inputs.
  std::int64_t d = m - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::int64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::int64_t x = pow_mod(a, d, m);
    if (x == 1 || x == m - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, m);
      if (x == m - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

bool is_mersenne_prime(std::int64_t p) {
  if (!is_prime(p)) return false;
  const std::int64_t q = p + 1;
  return (q & (q - 1)) == 0;
}

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t m) {
  if (m < 1) throw std::invalid_argument("factorize: argument must be positive");
  std::vector<std::pair<std::int64_t, int>> out;
  for (std::int64_t q = 2; q * q <= m; q += (q == 2 ? 1 : 2)) {
    if (m % q != 0) continue;
    int e = 0;
    while (m % q == 0) {
      m /= q;
      ++e;
    }
    out.emplace_back(q, e);
  }
  if (m > 1) out.emplace_back(m, 1);
  return out;
}

std::vector<std::int64_t> prime_divisors(std::int64_t m) {
  std::vector<std::int64_t> out;
  for (const auto& [q, e] : factorize(m)) out.push_back(q);
  return out;
}

std::vector<std::int64_t> divisors(std::int64_t m) {
  std::vector<std::int64_t> out{1};
  for (const auto& [q, e] : factorize(m)) {
    const std::size_t base = out.size();
    std::int64_t power = 1;
    for (int k = 1; k <= e; ++k) {
      power *= q;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * power);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::int64_t euler_phi(std::int64_t m) {
  std::int64_t out = m;
  for (const auto& [q, e] : factorize(m)) out = out / q * (q - 1);
  return out;
}

std::int64_t multiplicative_order(std::int64_t a, std::int64_t m) {
  if (m == 1) return 1;
  if (gcd(a, m) != 1) throw std::invalid_argument("multiplicative_order: gcd(a, m) != 1");
  std::int64_t order = euler_phi(m);
  for (const auto& [q, e] : factorize(order)) {
    for (int k = 0; k < e && order % q == 0 && pow_mod(a, order / q, m) == 1; ++k) order /= q;
  }
  return order;
}

std::int64_t primitive_root(std::int64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("primitive_root: modulus must be prime");
  if (p == 2) return 1;
  const auto qs = prime_divisors(p - 1);
  for (std::int64_t g = 2; g < p; ++g) {
    if (std::all_of(qs.begin(), qs.end(), [&](std::int64_t q) { return pow_mod(g, (p - 1) / q, p) != 1; }))
      return g;
  }
  throw std::logic_error("primitive_root: none found");
}

std::optional<std::int64_t> zsigmondy_prime(std::int64_t p, int n) {
  if (!is_prime(p)) throw std::invalid_argument("zsigmondy_prime: p must be prime");
  if (n < 1) throw std::invalid_argument("zsigmondy_prime: n must be positive");
  const std::int64_t value = checked_pow(p, n) - 1;
  if (value < 2) return std::nullopt;
  for (std::int64_t q : prime_divisors(value)) {
    if (p % q != 0 && multiplicative_order(p, q) == n) return q;
  }
  return std::nullopt;
}

std::vector<std::int64_t> primitive_polynomial(std::int64_t p, int n, std::int64_t bound) {
  if (!is_prime(p)) throw std::invalid_argument("primitive_polynomial: p must be prime");
  if (n < 1) throw std::invalid_argument("primitive_polynomial: n must be positive");
  const std::int64_t q = checked_pow(p, n);
  if (q > bound) throw BoundExceeded("primitive_polynomial: p^n exceeds bound");
  const std::int64_t target = q - 1;
  const auto qs = prime_divisors(target == 1 ? 1 : target);
  for (std::int64_t code = 0; code < q; ++code) {
    std::vector<std::int64_t> f(n + 1, 0);
    std::int64_t rest = code;
    for (int i = 0; i < n; ++i) {
      f[i] = rest % p;
      rest /= p;
    }
    f[n] = 1;
    if (f[0] == 0) continue;  // x divides f; companion matrix singular
    if (!is_one(polypowmod_x(target, f, p))) continue;
    bool primitive = true;
    for (std::int64_t r : qs) {
      if (target > 1 && is_one(polypowmod_x(target / r, f, p))) {
        primitive = false;
        break;
      }
    }
    if (primitive) return f;
  }
  throw std::logic_error("primitive_polynomial: search exhausted");
}

std::int64_t find_dixon_prime(std::int64_t e, std::int64_t group_order) {
  if (e < 1 || group_order < 1) throw std::invalid_argument("find_dixon_prime: arguments must be positive");
  constexpr std::int64_t kCap = std::int64_t{1} << 62;
  std::int64_t four_n = 0;
  if (__builtin_mul_overflow(group_order, std::int64_t{4}, &four_n)) throw BoundExceeded("find_dixon_prime: order too large");
  for (std::int64_t l = e + 1; l < kCap; l += e) {
    if (static_cast<u128>(l) * static_cast<u128>(l) <= static_cast<u128>(four_n)) continue;
    if (is_prime(l)) return l;
  }
  throw BoundExceeded("find_dixon_prime: search passed 2^62");
}

}  // namespace girr
