#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace girr {

/// Largest conductor any cyclotomic operation may produce (default 10^4).
std::int64_t conductor_bound();
void set_conductor_bound(std::int64_t bound);

/// Coefficients of the e-th cyclotomic polynomial, low degree first.
const std::vector<std::int64_t>& cyclotomic_polynomial(std::int64_t e);

/// An element of Z[zeta_e] stored in the power basis zeta^0 .. zeta^(phi(e)-1),
/// reduced modulo the e-th cyclotomic polynomial.
///
/// Only nonzero coefficients are stored.  Rational values always carry
/// conductor 1; values with different conductors are compared after rebasing
/// both to the lcm of the conductors.
class CyclotomicNumber {
 public:
  struct Term {
    std::int64_t exponent;
    std::int64_t coeff;
    friend bool operator==(const Term&, const Term&) = default;
  };

  CyclotomicNumber() = default;
  CyclotomicNumber(std::int64_t value);  // NOLINT: integers embed implicitly

  static CyclotomicNumber zeta(std::int64_t e, std::int64_t power = 1);
  /// Sum over t of mults[t] * zeta_e^t.
  static CyclotomicNumber from_root_multiplicities(std::int64_t e, std::span<const std::int64_t> mults);
  /// Canonical coefficient vector (length phi(e)) in the power basis.
  static CyclotomicNumber from_coefficients(std::int64_t e, std::span<const std::int64_t> coeffs);
  /// Parses the text produced by to_string().
  static CyclotomicNumber parse(std::string_view text);

  std::int64_t conductor() const { return conductor_; }
  const std::vector<Term>& terms() const { return terms_; }
  /// Dense coefficient vector of length phi(conductor).
  std::vector<std::int64_t> coefficients() const;

  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const { return conductor_ == 1; }
  std::optional<std::int64_t> rational_value() const;

  /// Same value expressed with conductor `e`, which must be a multiple of conductor().
  CyclotomicNumber rebased(std::int64_t e) const;
  /// Image under zeta -> zeta^k; k must be a unit modulo the conductor.
  CyclotomicNumber galois(std::int64_t k) const;
  CyclotomicNumber conjugate() const;

  std::complex<double> to_complex() const;
  std::string to_string() const;

  CyclotomicNumber operator-() const;
  friend CyclotomicNumber operator+(const CyclotomicNumber& a, const CyclotomicNumber& b);
  friend CyclotomicNumber operator-(const CyclotomicNumber& a, const CyclotomicNumber& b);
  friend CyclotomicNumber operator*(const CyclotomicNumber& a, const CyclotomicNumber& b);
  CyclotomicNumber& operator+=(const CyclotomicNumber& b) { return *this = *this + b; }
  CyclotomicNumber& operator*=(const CyclotomicNumber& b) { return *this = *this * b; }

  friend bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b);
  /// Total order: compare after rebasing to a common conductor, then by
  /// exponent-indexed coefficient sequence.
  friend int compare(const CyclotomicNumber& a, const CyclotomicNumber& b);

 private:
  CyclotomicNumber(std::int64_t e, std::vector<Term> terms) : conductor_(e), terms_(std::move(terms)) {}
  /// Reduces a dense polynomial in zeta_e of arbitrary length.
  static CyclotomicNumber reduce(std::int64_t e, std::vector<std::int64_t> dense);

  std::int64_t conductor_ = 1;
  std::vector<Term> terms_;
};

inline CyclotomicNumber galois_apply(const CyclotomicNumber& a, std::int64_t k) { return a.galois(k); }
inline CyclotomicNumber conjugate(const CyclotomicNumber& a) { return a.conjugate(); }
inline bool is_rational(const CyclotomicNumber& a) { return a.is_rational(); }
inline std::complex<double> to_complex_approx(const CyclotomicNumber& a) { return a.to_complex(); }

}  // namespace girr
