#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "girr/number_theory.hpp"
#include "girr/perm_group.hpp"
#include "small_groups.hpp"

using namespace girr;
using namespace testing_groups;

namespace {

std::vector<std::int64_t> class_sizes(const ClassStructure& cs) {
  std::vector<std::int64_t> out;
  for (const auto& c : cs.classes) out.push_back(c.size);
  return out;
}

// Every subgroup, by closing known subgroups under one more element.
std::vector<Subgroup> all_subgroups(const PermGroup& g) {
  std::vector<Subgroup> found{g.trivial()};
  std::set<std::vector<ElementId>> seen{found[0].elements()};
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (ElementId x = 0; x < static_cast<ElementId>(g.order()); ++x) {
      if (found[i].contains(x)) continue;
      std::vector<ElementId> gens = found[i].generators();
      gens.push_back(x);
      Subgroup s = closure(g, gens);
      if (seen.insert(s.elements()).second) found.push_back(std::move(s));
    }
  }
  return found;
}

Subgroup brute_force_frattini(const PermGroup& g) {
  const auto subs = all_subgroups(g);
  std::vector<ElementId> meet = g.whole().elements();
  for (const auto& s : subs) {
    if (s.order() == g.order()) continue;
    const bool maximal = std::none_of(subs.begin(), subs.end(), [&](const Subgroup& t) {
      return t.order() > s.order() && t.order() < g.order() && s.is_subgroup_of(t);
    });
    if (!maximal) continue;
    std::erase_if(meet, [&](ElementId x) { return !s.contains(x); });
  }
  return subgroup_from_elements(g, meet);
}

}  // namespace

TEST(PermGroup, Orders) {
  EXPECT_EQ(symmetric(3).order(), 6);
  const auto klein = group_from_generators(4, {Permutation({1, 0, 3, 2}), Permutation({2, 3, 0, 1})});
  EXPECT_EQ(klein.order(), 4);
  EXPECT_EQ(quaternion8().order(), 8);
  EXPECT_EQ(heisenberg(3).order(), 27);
  EXPECT_EQ(symmetric(5).order(), 120);
  EXPECT_THROW(group_from_generators(6, symmetric(6).generators(), 100), BoundExceeded);
  EXPECT_THROW(Permutation({0, 0, 1}), std::invalid_argument);
}

TEST(PermGroup, MultiplicationMatchesPermutations) {
  for (const auto& g : {symmetric(4), heisenberg(3), dihedral(7)}) {
    for (ElementId a = 0; a < g.order(); a += 3) {
      for (ElementId b = 0; b < g.order(); b += 2) {
        EXPECT_EQ(g.element(g.mul(a, b)), g.element(a) * g.element(b));
      }
      EXPECT_EQ(g.mul(a, g.inv(a)), g.identity());
    }
  }
}

TEST(PermGroup, LargeGroupWithoutTable) {
  const auto g = symmetric(7);
  EXPECT_EQ(g.order(), 5040);
  for (ElementId a = 0; a < 5040; a += 97) {
    for (ElementId b = 1; b < 5040; b += 131) EXPECT_EQ(g.element(g.mul(a, b)), g.element(a) * g.element(b));
  }
}

TEST(ConjugacyClasses, Examples) {
  EXPECT_EQ(class_sizes(conjugacy_classes(symmetric(3))), (std::vector<std::int64_t>{1, 3, 2}));
  EXPECT_EQ(class_sizes(conjugacy_classes(quaternion8())), (std::vector<std::int64_t>{1, 1, 2, 2, 2}));
  EXPECT_EQ(conjugacy_classes(cyclic(1)).classes.size(), 1u);
}

TEST(ConjugacyClasses, ClassEquationAndPowerMaps) {
  for (const auto& g : {symmetric(4), heisenberg(3), dihedral(10), quaternion8(), alternating4()}) {
    const auto cs = conjugacy_classes(g);
    std::int64_t total = 0;
    for (std::size_t c = 0; c < cs.classes.size(); ++c) {
      const auto& cls = cs.classes[c];
      total += cls.size;
      EXPECT_EQ(g.order() % cls.size, 0);
      EXPECT_EQ(cls.power_map[1 % cs.exponent], c);
      EXPECT_EQ(cs.class_of[g.inv(cls.representative)], cls.power_map[cls.element_order - 1]);
      for (std::int64_t a = 0; a < cs.exponent; ++a) {
        for (std::int64_t b = 0; b < cs.exponent; ++b) {
          const std::size_t via = cs.classes[cls.power_map[a]].power_map[b];
          EXPECT_EQ(via, cls.power_map[(a * b) % cs.exponent]);
        }
      }
    }
    EXPECT_EQ(total, g.order());
  }
}

TEST(Series, DerivedAndResidue) {
  const auto s3 = symmetric(3);
  EXPECT_EQ(derived_subgroup(s3.whole()).order(), 3);
  EXPECT_EQ(nilpotent_residue(s3.whole()).order(), 3);
  const auto q8 = quaternion8();
  const auto lcs = lower_central_series(q8.whole());
  ASSERT_EQ(lcs.size(), 3u);
  EXPECT_EQ(lcs[1].order(), 2);
  EXPECT_TRUE(lcs[2].is_trivial());
  const auto c6 = cyclic(6);
  EXPECT_EQ(derived_series(c6.whole()).size(), 2u);
  EXPECT_TRUE(is_nilpotent(q8.whole()));
  EXPECT_FALSE(is_nilpotent(s3.whole()));
  EXPECT_TRUE(is_solvable(s3.whole()));
  EXPECT_TRUE(is_solvable(alternating4().whole()));
  EXPECT_FALSE(is_solvable(group_from_generators(5, {cycle(5, {0, 1, 2, 3, 4}), cycle(5, {0, 1, 2})}).whole()));
  EXPECT_TRUE(has_fitting_height_at_most_two(s3.whole()));
  EXPECT_FALSE(has_fitting_height_at_most_two(symmetric(4).whole()));
}

TEST(Series, ResidueIsNormalWithNilpotentQuotient) {
  for (const auto& g : {symmetric(4), symmetric(3), alternating4(), dihedral(6), dihedral(5)}) {
    const auto residue = nilpotent_residue(g.whole());
    EXPECT_TRUE(is_normal(residue, g.whole()));
    const auto q = quotient(g, residue);
    EXPECT_EQ(q.group.order() * residue.order(), g.order());
    EXPECT_TRUE(is_nilpotent(q.group.whole()));
  }
}

TEST(Subgroups, CentersAndCentralizers) {
  EXPECT_EQ(center(quaternion8().whole()).order(), 2);
  const auto s3 = symmetric(3);
  const auto a3 = derived_subgroup(s3.whole());
  EXPECT_EQ(centralizer(s3.whole(), a3), a3);
  const auto c6 = cyclic(6);
  EXPECT_EQ(center(c6.whole()), c6.whole());
}

TEST(Subgroups, FrattiniExamples) {
  const auto v4 = group_from_generators(4, {Permutation({1, 0, 3, 2}), Permutation({2, 3, 0, 1})});
  EXPECT_TRUE(frattini_of_pgroup(v4.whole(), 2).is_trivial());
  EXPECT_EQ(frattini_of_pgroup(quaternion8().whole(), 2).order(), 2);
  const auto h = heisenberg(3);
  EXPECT_EQ(frattini_of_pgroup(h.whole(), 3), derived_subgroup(h.whole()));
  EXPECT_EQ(derived_subgroup(h.whole()).order(), 3);
  EXPECT_THROW(frattini_of_pgroup(symmetric(3).whole(), 3), std::invalid_argument);
}

TEST(Subgroups, FrattiniMatchesIntersectionOfMaximals) {
  const std::vector<PermGroup> groups{quaternion8(), dihedral(4), cyclic(8), cyclic(9), heisenberg(3),
                                      direct_product(cyclic(4), cyclic(2)), direct_product(cyclic(9), cyclic(3)),
                                      direct_product(cyclic(3), cyclic(3)),
                                      direct_product(direct_product(cyclic(3), cyclic(3)), cyclic(9)),
                                      direct_product(quaternion8(), cyclic(2))};
  for (const auto& g : groups) {
    const auto p = *prime_of_p_group(g.whole());
    EXPECT_EQ(frattini_of_pgroup(g.whole(), p), brute_force_frattini(g)) << g.order();
  }
}

TEST(Subgroups, StructureTests) {
  EXPECT_TRUE(is_cyclic(cyclic(6).whole()));
  EXPECT_TRUE(is_generalized_quaternion(quaternion8().whole()));
  EXPECT_FALSE(is_generalized_quaternion(dihedral(4).whole()));
  EXPECT_FALSE(is_generalized_quaternion(cyclic(8).whole()));
  const auto g = direct_product(quaternion8(), cyclic(3));
  const auto parts = nilpotent_sylow_decomposition(g.whole());
  ASSERT_EQ(parts.size(), 2u);
  EXPECT_EQ(parts[0].first, 2);
  EXPECT_EQ(parts[0].second.order(), 8);
  EXPECT_EQ(parts[1].second.order(), 3);
  EXPECT_THROW(nilpotent_sylow_decomposition(symmetric(3).whole()), std::invalid_argument);
}

TEST(ModuleAction, A4) {
  const auto a4 = alternating4();
  const auto v4 = nilpotent_residue(a4.whole());
  ASSERT_EQ(v4.order(), 4);
  ElementId three = 0;
  while (a4.element_order(three) != 3) ++three;
  std::vector<ElementId> acting{three};
  const auto action = quotient_module_action(v4, a4.trivial(), acting);
  EXPECT_EQ(action.n, 2);
  EXPECT_EQ(action.matrices[0].order(), 3);
  EXPECT_TRUE(quotient_module_action(v4, a4.trivial(), std::vector<ElementId>{0}).matrices[0].is_identity());
}

TEST(ModuleAction, SL23OnQ8ModCenter) {
  const auto g = sl23();
  const auto q8 = nilpotent_residue(g.whole());
  ASSERT_EQ(q8.order(), 8);
  ElementId three = 0;
  while (g.element_order(three) != 3) ++three;
  const auto action = quotient_module_action(q8, frattini_of_pgroup(q8, 2), std::vector<ElementId>{three});
  EXPECT_EQ(action.n, 2);
  EXPECT_EQ(action.matrices[0].order(), 3);
}

TEST(Quotient, CosetAction) {
  const auto s4 = symmetric(4);
  const auto v4 = nilpotent_residue(nilpotent_residue(s4.whole()));
  const auto q = quotient(s4, v4);
  EXPECT_EQ(q.group.order(), 6);
  EXPECT_FALSE(is_abelian(q.group.whole()));
  for (ElementId a = 0; a < 24; ++a) {
    for (ElementId b = 0; b < 24; ++b) EXPECT_EQ(q.image[s4.mul(a, b)], q.group.mul(q.image[a], q.image[b]));
  }
}
