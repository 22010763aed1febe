#include <gtest/gtest.h>

#include "girr/char_table.hpp"
#include "girr/number_theory.hpp"
#include "hand_tables.hpp"
#include "numeric_oracle.hpp"
#include "small_groups.hpp"

using namespace girr;
using namespace testing_groups;
using namespace testing_tables;

namespace {

// Root-of-unity multiplicities by the discrete Fourier formula
// m_t = (1/o) sum_s chi(g^s) w^(-st) over F_l, for comparison with the table.
std::vector<std::int64_t> dft_multiplicities(const CharacterTable& t, std::size_t row, std::size_t cls) {
  const auto& cs = t.classes();
  const std::int64_t l = t.dixon_prime(), e = t.exponent();
  const std::int64_t o = cs.classes[cls].element_order;
  const std::int64_t w_e = pow_mod(primitive_root(l), (l - 1) / e, l);
  const std::int64_t w = pow_mod(w_e, e / o, l);
  // chi mod l from the exact value: sum over roots with omega_e.
  const auto chi_mod = [&](std::size_t c) {
    std::int64_t acc = 0;
    for (const auto& [x, m] : t.roots(row, c)) acc = (acc + m * pow_mod(w_e, x, l)) % l;
    return acc;
  };
  std::vector<std::int64_t> mults(o);
  for (std::int64_t tt = 0; tt < o; ++tt) {
    std::int64_t acc = 0;
    for (std::int64_t s = 0; s < o; ++s) {
      const std::int64_t v = chi_mod(cs.classes[cls].power_map[s]);
      acc = (acc + v * pow_mod(w, mod(-s * tt, o), l)) % l;
    }
    mults[tt] = acc * inv_mod(o % l, l) % l;
  }
  return mults;
}

std::vector<PermGroup> sample_groups() {
  return {symmetric(3), cyclic(6), dihedral(4), quaternion8(), dihedral(5), alternating4(), sl23(), symmetric(4),
          heisenberg(3), cyclic(1), cyclic(5), direct_product(quaternion8(), cyclic(3)), symmetric(5), dihedral(6)};
}

}  // namespace

TEST(CharacterTable, HandTables) {
  EXPECT_TRUE(matches_hand(character_table(symmetric(3)), s3_table()));
  EXPECT_TRUE(matches_hand(character_table(cyclic(6)), c6_table()));
  EXPECT_TRUE(matches_hand(character_table(dihedral(4)), d8_table()));
  EXPECT_TRUE(matches_hand(character_table(quaternion8()), q8_table()));
  EXPECT_TRUE(matches_hand(character_table(dihedral(5)), d10_table()));
  EXPECT_TRUE(matches_hand(character_table(alternating4()), a4_table()));
  const auto g = sl23();
  EXPECT_TRUE(matches_hand(character_table(g), sl23_table()));
  EXPECT_FALSE(matches_hand(character_table(alternating4()), d10_table()));
}

TEST(CharacterTable, DegreesOfExamples) {
  const auto s3 = symmetric(3);
  EXPECT_EQ(character_table(s3).degrees(), (std::vector<std::int64_t>{1, 1, 2}));
  const auto g = sl23();
  EXPECT_EQ(character_table(g).degrees(), (std::vector<std::int64_t>{1, 1, 1, 2, 2, 2, 3}));
  const auto c3 = cyclic(3);
  const auto t = character_table(c3);
  EXPECT_EQ(t.degrees(), (std::vector<std::int64_t>{1, 1, 1}));
}

TEST(CharacterTable, NumericOracleAgrees) {
  for (const auto& g : sample_groups()) {
    const auto t = character_table(g);
    EXPECT_TRUE(testing_oracle::matches_numeric(t, testing_oracle::numeric_character_table(g, t.classes())))
        << "order " << g.order();
  }
}

TEST(CharacterTableProperty, InvariantsHold) {
  for (const auto& g : sample_groups()) {
    const auto t = character_table(g);
    std::int64_t sum = 0;
    for (std::size_t i = 0; i < t.size(); ++i) {
      sum += t.degree(i) * t.degree(i);
      EXPECT_EQ(t.value(i, 0), CyclotomicNumber(t.degree(i)));
    }
    EXPECT_EQ(sum, g.order());
    EXPECT_NO_THROW(verify_orthogonality(t));

    std::size_t rational_rows = 0;
    for (std::size_t i = 0; i < t.size(); ++i) rational_rows += is_rational_row(t, i) ? 1 : 0;
    EXPECT_EQ(rational_rows, rational_class_count(t));

    for (const auto& orbit : galois_orbits(t)) {
      for (std::size_t row : orbit) {
        EXPECT_EQ(orbit.size() * galois_stabilizer(t, row).size(), t.units().size());
      }
    }
    for (std::size_t i = 0; i < t.size(); ++i) {
      for (std::int64_t k : t.units()) EXPECT_NO_THROW(galois_conjugate(t, i, k));
    }
  }
}

TEST(CharacterTableProperty, LiftingMatchesFourierFormula) {
  for (const auto& g : {sl23(), dihedral(5), direct_product(quaternion8(), cyclic(3))}) {
    const auto t = character_table(g);
    for (std::size_t i = 0; i < t.size(); ++i) {
      for (std::size_t k = 0; k < t.size(); ++k) {
        const auto mults = dft_multiplicities(t, i, k);
        EXPECT_EQ(CyclotomicNumber::from_root_multiplicities(static_cast<std::int64_t>(mults.size()), mults), t.value(i, k));
      }
    }
  }
}

TEST(CharacterTableProperty, Determinism) {
  const auto g = sl23();
  const auto a = character_table(g, 1), b = character_table(g, 1), c = character_table(g, 99);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t k = 0; k < a.size(); ++k) {
      EXPECT_EQ(a.value(i, k).to_string(), b.value(i, k).to_string());
      EXPECT_EQ(a.value(i, k).to_string(), c.value(i, k).to_string());
    }
  }
}

TEST(Kernels, Examples) {
  const auto s3 = symmetric(3);
  const auto t = character_table(s3);
  EXPECT_EQ(kernel_of(t, 0).order(), 6);
  EXPECT_EQ(kernel_of(t, 1).order(), 3);
  const auto g = sl23();
  const auto ts = character_table(g);
  EXPECT_EQ(kernel_of(ts, 6).order(), 2);
  EXPECT_EQ(kernel_of(ts, 6), center(g.whole()));
}

TEST(Galois, OrbitsAndConjugates) {
  const auto c5 = cyclic(5);
  EXPECT_EQ(galois_orbits(character_table(c5)), (std::vector<std::vector<std::size_t>>{{0}, {1, 2, 3, 4}}));
  const auto s3 = symmetric(3);
  EXPECT_EQ(galois_orbits(character_table(s3)).size(), 3u);
  const auto c3 = cyclic(3);
  const auto t = character_table(c3);
  EXPECT_EQ(galois_orbits(t), (std::vector<std::vector<std::size_t>>{{0}, {1, 2}}));
  EXPECT_EQ(galois_conjugate(t, 1, 1), 1u);
  EXPECT_EQ(galois_conjugate(t, 1, 2), 2u);
  EXPECT_THROW(galois_conjugate(t, 1, 3), std::invalid_argument);
}

TEST(Galois, FieldInPthCyclotomic) {
  const auto d10 = dihedral(5);
  const auto t = character_table(d10);
  EXPECT_TRUE(field_in_pth_cyclotomic(t, 0, 5));
  EXPECT_TRUE(field_in_pth_cyclotomic(t, 2, 5));
  EXPECT_TRUE(field_in_pth_cyclotomic(t, 3, 5));
  EXPECT_FALSE(field_in_pth_cyclotomic(t, 2, 3));
  const auto c4 = cyclic(4);
  const auto t4 = character_table(c4);
  std::size_t nonreal = 0;
  for (std::size_t i = 0; i < t4.size(); ++i) {
    if (!is_rational_row(t4, i)) {
      EXPECT_FALSE(field_in_pth_cyclotomic(t4, i, 5));
      ++nonreal;
    }
  }
  EXPECT_EQ(nonreal, 2u);
}
