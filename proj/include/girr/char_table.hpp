#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "girr/cyclotomic.hpp"
#include "girr/perm_group.hpp"

namespace girr {

inline constexpr std::uint64_t kDefaultSeed = 0xC0FFEE;

/// Raised when a computed table fails its exact verification.
class VerificationError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// One irreducible character with its derived data.
struct Character {
  std::size_t index = 0;
  std::vector<CyclotomicNumber> values;
  std::int64_t degree = 1;
  Subgroup kernel;
  /// Units k mod e with chi^k = chi, increasing.
  std::vector<std::int64_t> galois_stabilizer;
};

/// Exact irreducible character table.  Rows are sorted by degree with the
/// principal character first; columns follow conjugacy_classes() order.
class CharacterTable {
 public:
  const PermGroup& group() const { return *group_; }
  const ClassStructure& classes() const { return classes_; }
  std::size_t size() const { return degrees_.size(); }
  std::int64_t exponent() const { return classes_.exponent; }
  std::uint64_t seed() const { return seed_; }
  std::int64_t dixon_prime() const { return dixon_prime_; }

  const std::vector<std::int64_t>& degrees() const { return degrees_; }
  std::int64_t degree(std::size_t row) const { return degrees_[row]; }
  const std::vector<std::vector<CyclotomicNumber>>& values() const { return values_; }
  const CyclotomicNumber& value(std::size_t row, std::size_t cls) const { return values_[row][cls]; }

  /// Interned value ids: equal ids iff equal values.
  std::uint32_t value_id(std::size_t row, std::size_t cls) const { return ids_[row][cls]; }
  /// Row whose id vector is `ids`, if any.
  std::optional<std::size_t> find_row(const std::vector<std::uint32_t>& ids) const;

  /// Units modulo the exponent, increasing.
  const std::vector<std::int64_t>& units() const { return units_; }

  Character character(std::size_t row) const;

  /// Multiset of e-th roots of unity summing to value(row, cls), as
  /// (exponent mod e, multiplicity) pairs.
  const std::vector<std::pair<std::int32_t, std::int32_t>>& roots(std::size_t row, std::size_t cls) const {
    return roots_[row][cls];
  }

  friend CharacterTable character_table(const PermGroup& g, std::uint64_t seed);

 private:
  const PermGroup* group_ = nullptr;
  ClassStructure classes_;
  std::uint64_t seed_ = kDefaultSeed;
  std::int64_t dixon_prime_ = 0;
  std::vector<std::int64_t> degrees_;
  std::vector<std::vector<CyclotomicNumber>> values_;
  std::vector<std::vector<std::uint32_t>> ids_;
  std::vector<std::vector<std::vector<std::pair<std::int32_t, std::int32_t>>>> roots_;
  std::map<std::vector<std::uint32_t>, std::size_t> row_lookup_;
  std::vector<std::int64_t> units_;
};

/// Class-matrix eigenvector method over a Dixon prime, lifted to cyclotomic
/// integers and verified by exact orthogonality.  Deterministic given seed.
CharacterTable character_table(const PermGroup& g, std::uint64_t seed = kDefaultSeed);

/// Throws VerificationError unless row and column orthogonality hold exactly.
void verify_orthogonality(const CharacterTable& t);

Subgroup kernel_of(const CharacterTable& t, std::size_t row);

/// Row of chi^k, where chi^k(g) = chi(g^k).  The entrywise Galois image is
/// computed as well and must agree.
std::size_t galois_conjugate(const CharacterTable& t, std::size_t row, std::int64_t k);

/// Orbits of the unit group mod e on rows, each sorted, ordered by least row.
std::vector<std::vector<std::size_t>> galois_orbits(const CharacterTable& t);

std::vector<std::int64_t> galois_stabilizer(const CharacterTable& t, std::size_t row);

/// True iff Q(chi) lies in the p-th cyclotomic field.
bool field_in_pth_cyclotomic(const CharacterTable& t, std::size_t row, std::int64_t p);

bool is_rational_row(const CharacterTable& t, std::size_t row);

/// Classes c with c^k conjugate to c for every unit k.
std::size_t rational_class_count(const CharacterTable& t);

}  // namespace girr
