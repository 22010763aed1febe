#include "girr/cyclotomic.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <stdexcept>

#include "girr/number_theory.hpp"

namespace girr {

namespace {

std::atomic<std::int64_t> g_conductor_bound{10'000};

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw BoundExceeded("cyclotomic coefficient overflow");
  return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw BoundExceeded("cyclotomic coefficient overflow");
  return out;
}

void check_conductor(std::int64_t e) {
  if (e < 1) throw std::invalid_argument("cyclotomic conductor must be positive");
  if (e > g_conductor_bound.load()) {
    throw BoundExceeded("cyclotomic conductor " + std::to_string(e) + " exceeds bound");
  }
}

// Exact division of a by the monic polynomial b; returns the quotient.
std::vector<std::int64_t> divide_monic(std::vector<std::int64_t> a, const std::vector<std::int64_t>& b) {
  const std::size_t db = b.size() - 1;
  std::vector<std::int64_t> q(a.size() - db, 0);
  for (std::size_t k = a.size(); k-- > db;) {
    const std::int64_t c = a[k];
    q[k - db] = c;
    if (c == 0) continue;
    for (std::size_t i = 0; i <= db; ++i) a[k - db + i] -= c * b[i];
  }
  for (std::size_t i = 0; i < db; ++i) {
    if (a[i] != 0) throw std::logic_error("cyclotomic polynomial division not exact");
  }
  return q;
}

struct SparsePoly {
  std::vector<std::int64_t> dense;
  std::vector<std::pair<std::size_t, std::int64_t>> nonzero;  // below the leading term
};

const SparsePoly& sparse_cyclotomic(std::int64_t e) {
  static std::mutex lock;
  static std::map<std::int64_t, std::unique_ptr<SparsePoly>> cache;
  {
    std::lock_guard guard(lock);
    if (auto it = cache.find(e); it != cache.end()) return *it->second;
  }
  // x^e - 1 divided by every Phi_d with d a proper divisor of e.
  std::vector<std::int64_t> poly(e + 1, 0);
  poly[0] = -1;
  poly[e] = 1;
  for (std::int64_t d : divisors(e)) {
    if (d == e) continue;
    poly = divide_monic(std::move(poly), sparse_cyclotomic(d).dense);
  }
  auto entry = std::make_unique<SparsePoly>();
  entry->dense = poly;
  for (std::size_t i = 0; i + 1 < poly.size(); ++i) {
    if (poly[i] != 0) entry->nonzero.emplace_back(i, poly[i]);
  }
  std::lock_guard guard(lock);
  auto [it, inserted] = cache.emplace(e, std::move(entry));
  return *it->second;
}

}  // namespace

std::int64_t conductor_bound() { return g_conductor_bound.load(); }
void set_conductor_bound(std::int64_t bound) { g_conductor_bound.store(bound); }

const std::vector<std::int64_t>& cyclotomic_polynomial(std::int64_t e) {
  check_conductor(e);
  return sparse_cyclotomic(e).dense;
}

CyclotomicNumber::CyclotomicNumber(std::int64_t value) {
  if (value != 0) terms_.push_back({0, value});
}

CyclotomicNumber CyclotomicNumber::reduce(std::int64_t e, std::vector<std::int64_t> dense) {
  check_conductor(e);
  if (dense.size() > static_cast<std::size_t>(e)) {
    for (std::size_t i = e; i < dense.size(); ++i) dense[i % e] = checked_add(dense[i % e], dense[i]);
    dense.resize(e);
  }
  const SparsePoly& phi = sparse_cyclotomic(e);
  const std::size_t deg = phi.dense.size() - 1;
  for (std::size_t k = dense.size(); k-- > deg;) {
    const std::int64_t c = dense[k];
    if (c == 0) continue;
    dense[k] = 0;
    for (const auto& [i, coeff] : phi.nonzero) {
      dense[k - deg + i] = checked_add(dense[k - deg + i], -checked_mul(c, coeff));
    }
  }
  std::vector<Term> terms;
  for (std::size_t i = 0; i < std::min(deg, dense.size()); ++i) {
    if (dense[i] != 0) terms.push_back({static_cast<std::int64_t>(i), dense[i]});
  }
  if (terms.empty() || (terms.size() == 1 && terms[0].exponent == 0)) return CyclotomicNumber(1, std::move(terms));
  return CyclotomicNumber(e, std::move(terms));
}

CyclotomicNumber CyclotomicNumber::zeta(std::int64_t e, std::int64_t power) {
  check_conductor(e);
  std::vector<std::int64_t> dense(e, 0);
  dense[mod(power, e)] = 1;
  return reduce(e, std::move(dense));
}

CyclotomicNumber CyclotomicNumber::from_root_multiplicities(std::int64_t e, std::span<const std::int64_t> mults) {
  if (static_cast<std::int64_t>(mults.size()) != e) {
    throw std::invalid_argument("from_root_multiplicities: expected " + std::to_string(e) + " multiplicities");
  }
  return reduce(e, std::vector<std::int64_t>(mults.begin(), mults.end()));
}

CyclotomicNumber CyclotomicNumber::from_coefficients(std::int64_t e, std::span<const std::int64_t> coeffs) {
  check_conductor(e);
  if (static_cast<std::int64_t>(coeffs.size()) != euler_phi(e)) {
    throw std::invalid_argument("from_coefficients: expected phi(e) coefficients");
  }
  return reduce(e, std::vector<std::int64_t>(coeffs.begin(), coeffs.end()));
}

std::vector<std::int64_t> CyclotomicNumber::coefficients() const {
  std::vector<std::int64_t> out(euler_phi(conductor_), 0);
  for (const Term& t : terms_) out[t.exponent] = t.coeff;
  return out;
}

std::optional<std::int64_t> CyclotomicNumber::rational_value() const {
  if (!is_rational()) return std::nullopt;
  return terms_.empty() ? 0 : terms_[0].coeff;
}

CyclotomicNumber CyclotomicNumber::rebased(std::int64_t e) const {
  if (e % conductor_ != 0) throw std::invalid_argument("rebased: target is not a multiple of the conductor");
  if (e == conductor_) return *this;
  if (is_rational()) return *this;
  check_conductor(e);
  const std::int64_t step = e / conductor_;
  std::vector<std::int64_t> dense(e, 0);
  for (const Term& t : terms_) dense[t.exponent * step] = t.coeff;
  CyclotomicNumber out = reduce(e, std::move(dense));
  out.conductor_ = e;
  return out;
}

CyclotomicNumber CyclotomicNumber::galois(std::int64_t k) const {
  if (gcd(k, conductor_) != 1) throw std::invalid_argument("galois: k is not a unit modulo the conductor");
  if (is_rational()) return *this;
  std::vector<std::int64_t> dense(conductor_, 0);
  for (const Term& t : terms_) dense[mod(t.exponent * mod(k, conductor_), conductor_)] = t.coeff;
  return reduce(conductor_, std::move(dense));
}

CyclotomicNumber CyclotomicNumber::conjugate() const { return galois(-1); }

std::complex<double> CyclotomicNumber::to_complex() const {
  std::complex<double> out{0.0, 0.0};
  for (const Term& t : terms_) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(t.exponent) / static_cast<double>(conductor_);
    out += static_cast<double>(t.coeff) * std::polar(1.0, angle);
  }
  return out;
}

std::string CyclotomicNumber::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const Term& t : terms_) {
    const std::int64_t magnitude = t.coeff < 0 ? -t.coeff : t.coeff;
    if (first) {
      if (t.coeff < 0) out += "-";
    } else {
      out += t.coeff < 0 ? " - " : " + ";
    }
    out += std::to_string(magnitude);
    if (t.exponent != 0) out += "*z(" + std::to_string(conductor_) + ")^" + std::to_string(t.exponent);
    first = false;
  }
  return out;
}

CyclotomicNumber CyclotomicNumber::parse(std::string_view text) {
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto expect = [&](char c) {
    skip();
    if (pos >= text.size() || text[pos] != c) {
      throw std::invalid_argument("cyclotomic parse: expected '" + std::string(1, c) + "' in '" + std::string(text) + "'");
    }
    ++pos;
  };
  auto integer = [&]() -> std::int64_t {
    skip();
    const std::size_t start = pos;
    std::int64_t v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      v = checked_add(checked_mul(v, 10), text[pos] - '0');
      ++pos;
    }
    if (pos == start) throw std::invalid_argument("cyclotomic parse: expected integer in '" + std::string(text) + "'");
    return v;
  };

  struct Raw {
    std::int64_t coeff, e, exponent;
  };
  std::vector<Raw> raw;
  std::int64_t conductor = 1;
  bool first = true;
  skip();
  while (pos < text.size()) {
    int sign = 1;
    skip();
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (!first) {
      throw std::invalid_argument("cyclotomic parse: expected '+' or '-' in '" + std::string(text) + "'");
    }
    std::int64_t coeff = sign * integer();
    skip();
    std::int64_t e = 1, exponent = 0;
    if (pos < text.size() && text[pos] == '*') {
      ++pos;
      expect('z');
      expect('(');
      e = integer();
      expect(')');
      expect('^');
      exponent = integer();
      if (e < 1) throw std::invalid_argument("cyclotomic parse: conductor must be positive");
      conductor = lcm(conductor, e);
    }
    raw.push_back({coeff, e, exponent});
    first = false;
    skip();
  }
  if (raw.empty()) throw std::invalid_argument("cyclotomic parse: empty input");
  check_conductor(conductor);
  std::vector<std::int64_t> dense(conductor, 0);
  for (const Raw& r : raw) {
    const std::int64_t idx = mod(r.exponent % r.e * (conductor / r.e), conductor);
    dense[idx] = checked_add(dense[idx], r.coeff);
  }
  return reduce(conductor, std::move(dense));
}

CyclotomicNumber CyclotomicNumber::operator-() const {
  CyclotomicNumber out = *this;
  for (Term& t : out.terms_) t.coeff = checked_mul(t.coeff, -1);
  return out;
}

CyclotomicNumber operator+(const CyclotomicNumber& a, const CyclotomicNumber& b) {
  const std::int64_t e = lcm(a.conductor_, b.conductor_);
  check_conductor(e);
  std::vector<std::int64_t> dense(e, 0);
  for (const auto* x : {&a, &b}) {
    const std::int64_t step = e / x->conductor_;
    for (const auto& t : x->terms_) dense[t.exponent * step] = checked_add(dense[t.exponent * step], t.coeff);
  }
  return CyclotomicNumber::reduce(e, std::move(dense));
}

CyclotomicNumber operator-(const CyclotomicNumber& a, const CyclotomicNumber& b) { return a + (-b); }

CyclotomicNumber operator*(const CyclotomicNumber& a, const CyclotomicNumber& b) {
  const std::int64_t e = lcm(a.conductor_, b.conductor_);
  check_conductor(e);
  const std::int64_t sa = e / a.conductor_, sb = e / b.conductor_;
  std::vector<std::int64_t> dense(e, 0);
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) {
      const std::int64_t idx = (x.exponent * sa + y.exponent * sb) % e;
      dense[idx] = checked_add(dense[idx], checked_mul(x.coeff, y.coeff));
    }
  }
  return CyclotomicNumber::reduce(e, std::move(dense));
}

bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b) { return compare(a, b) == 0; }

int compare(const CyclotomicNumber& a, const CyclotomicNumber& b) {
  if (a.conductor_ == b.conductor_) {
    const auto& x = a.terms_;
    const auto& y = b.terms_;
    std::size_t i = 0, j = 0;
    while (i < x.size() || j < y.size()) {
      // Dense comparison by exponent: a missing term is a zero coefficient.
      std::int64_t ex = i < x.size() ? x[i].exponent : INT64_MAX;
      std::int64_t ey = j < y.size() ? y[j].exponent : INT64_MAX;
      const std::int64_t e = std::min(ex, ey);
      const std::int64_t cx = ex == e ? x[i].coeff : 0;
      const std::int64_t cy = ey == e ? y[j].coeff : 0;
      if (cx != cy) return cx < cy ? -1 : 1;
      if (ex == e) ++i;
      if (ey == e) ++j;
    }
    return 0;
  }
  const std::int64_t e = lcm(a.conductor_, b.conductor_);
  CyclotomicNumber ra = a.rebased(e), rb = b.rebased(e);
  ra.conductor_ = rb.conductor_ = e;
  return compare(ra, rb);
}

}  // namespace girr
