#include <gtest/gtest.h>

#include "girr/classify.hpp"
#include "girr/constructors.hpp"
#include "girr/hand_tables.hpp"
#include "girr/number_theory.hpp"
#include "small_groups.hpp"

using namespace girr;
namespace ref = girr::reference;

namespace {

std::vector<std::int64_t> sorted_class_sizes(const PermGroup& g) {
  std::vector<std::int64_t> out;
  for (const auto& c : conjugacy_classes(g).classes) out.push_back(c.size);
  std::sort(out.begin(), out.end());
  return out;
}

std::string params_invalid_message(const CaseParams& c) {
  try {
    construct_case(c);
  } catch (const ParamsInvalid& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST(Singer, Examples) {
  EXPECT_EQ(singer_matrix(2, 2), FpMatrix(2, {{0, 1}, {1, 1}}));
  EXPECT_EQ(singer_matrix(2, 2).order(), 3);
  EXPECT_EQ(singer_matrix(3, 1), FpMatrix(3, {{2}}));
  for (std::int64_t p : {5, 7, 11, 13}) EXPECT_EQ(multiplicative_order(singer_matrix(p, 1)(0, 0), p), p - 1);
  for (auto [p, n] : std::vector<std::pair<std::int64_t, int>>{{2, 3}, {3, 2}, {3, 3}, {5, 2}, {7, 2}, {2, 6}}) {
    EXPECT_EQ(singer_matrix(p, n).order(), checked_pow(p, n) - 1);
  }
}

TEST(AffineSemidirect, Examples) {
  const std::vector<FpMatrix> singer{singer_matrix(2, 2)};
  const auto a4 = affine_semidirect(2, 2, singer);
  EXPECT_EQ(a4.order(), 12);
  EXPECT_EQ(nilpotent_residue(a4.whole()).order(), 4);
  EXPECT_TRUE(ref::matches_hand(character_table(a4), ref::a4_table()));

  const std::vector<FpMatrix> minus{FpMatrix(3, {{2}})};
  const auto s3 = affine_semidirect(3, 1, minus);
  EXPECT_TRUE(ref::matches_hand(character_table(s3), ref::s3_table()));

  const auto v4c9 = affine_semidirect(2, 2, singer, 2);
  EXPECT_EQ(v4c9.order(), 36);
  const auto v4 = nilpotent_residue(v4c9.whole());
  EXPECT_EQ(v4.order(), 4);
  EXPECT_TRUE(is_cyclic(find_complement(v4c9.whole(), v4)));

  const std::vector<FpMatrix> singular{FpMatrix(3, {{1, 1}, {1, 1}})};
  EXPECT_THROW(affine_semidirect(3, 2, singular), std::invalid_argument);
  const std::vector<FpMatrix> c4{FpMatrix(3, {{0, 2}, {1, 0}})};
  EXPECT_THROW(affine_semidirect(3, 2, c4, 2), std::invalid_argument);
}

TEST(QuaternionSL2, Examples) {
  for (auto [p, order] : std::vector<std::pair<std::int64_t, std::int64_t>>{{3, 8}, {7, 16}, {5, 8}, {7, 8}, {31, 64}}) {
    const auto [x, y] = quaternion_subgroup_SL2(p, order);
    EXPECT_EQ(x.determinant(), 1);
    EXPECT_EQ(y.determinant(), 1);
    EXPECT_EQ(x.order(), order / 2);
    EXPECT_EQ(y * y, x.pow(order / 4));
    EXPECT_EQ(y.inverse() * x * y, x.inverse());
    const std::vector<FpMatrix> gens{x, y};
    const auto q = matrix_group_permutations(gens);
    EXPECT_EQ(q.order(), order);
    EXPECT_TRUE(is_generalized_quaternion(q.whole()));
    EXPECT_TRUE(check_frobenius_action(gens, p, 2));
  }
  EXPECT_THROW(quaternion_subgroup_SL2(5, 12), ParamsInvalid);
  EXPECT_THROW(quaternion_subgroup_SL2(2, 8), ParamsInvalid);
  EXPECT_THROW(quaternion_subgroup_SL2(3, 16), ParamsInvalid);
}

TEST(Extraspecial, Heisenberg) {
  const auto h3 = girr::heisenberg(3);
  EXPECT_EQ(h3.order(), 27);
  EXPECT_EQ(h3.exponent(), 3);
  EXPECT_EQ(center(h3.whole()).order(), 3);
  EXPECT_TRUE(is_extraspecial_p3(h3.whole(), 3));
  EXPECT_EQ(sorted_class_sizes(h3), sorted_class_sizes(ref::heisenberg(3)));
  const auto h5 = girr::heisenberg(5);
  EXPECT_EQ(h5.exponent(), 5);
  EXPECT_TRUE(is_extraspecial_p3(h5.whole(), 5));
  const auto q8 = girr::quaternion8();
  EXPECT_EQ(q8.order(), 8);
  std::int64_t involutions = 0;
  for (ElementId x = 0; x < 8; ++x) involutions += q8.element_order(x) == 2 ? 1 : 0;
  EXPECT_EQ(involutions, 1);
  EXPECT_TRUE(is_extraspecial_p3(q8.whole(), 2));
}

TEST(ExtraspecialProperty, OrderThreeIndexPSquaredForcesOrderPCubed) {
  const std::vector<PermGroup> groups{ref::quaternion8(), ref::dihedral(4), ref::heisenberg(3), girr::heisenberg(5),
                                      ref::direct_product(ref::quaternion8(), ref::cyclic(2)), ref::cyclic(9),
                                      ref::direct_product(ref::cyclic(3), ref::cyclic(9))};
  for (const auto& g : groups) {
    const auto p = *prime_of_p_group(g.whole());
    const auto z = center(g.whole());
    const bool coincide = frattini_of_pgroup(g.whole(), p) == z && derived_subgroup(g.whole()) == z;
    if (coincide && g.order() / z.order() == p * p) {
      EXPECT_EQ(g.order(), p * p * p);
    }
  }
}

TEST(ExtraspecialSemidirect, Examples) {
  const std::vector<FpMatrix> c8{singer_matrix(3, 2)};
  const auto g = extraspecial_semidirect(3, c8);
  EXPECT_EQ(g.order(), 216);
  EXPECT_EQ(analyze_structure(g, character_table(g)).case_tag, CaseTag::a4);

  const auto [x, y] = quaternion_subgroup_SL2(3, 8);
  const std::vector<FpMatrix> q8{x, y};
  const auto h = extraspecial_semidirect(3, q8);
  EXPECT_EQ(h.order(), 216);
  EXPECT_EQ(analyze_structure(h, character_table(h)).case_tag, CaseTag::a6);

  const std::vector<FpMatrix> three{singer_matrix(2, 2)};
  const auto sl = extraspecial_semidirect(2, three);
  EXPECT_EQ(sl.order(), 24);
  EXPECT_EQ(center(sl.whole()).order(), 2);
  EXPECT_EQ(derived_subgroup(sl.whole()).order(), 8);
  EXPECT_TRUE(ref::matches_hand(character_table(sl), ref::sl23_table()));

  const std::vector<FpMatrix> unipotent{FpMatrix(2, {{1, 1}, {0, 1}})};
  EXPECT_THROW(extraspecial_semidirect(2, unipotent), std::invalid_argument);
}

TEST(ExtraspecialSemidirectProperty, AutomorphismsOfOddHeisenberg) {
  // A map that is not an automorphism would not normalize the translations,
  // and the generated group would be larger than p^3 |<M>|.
  for (std::int64_t p : {3, 5, 7}) {
    for (const auto& m : {singer_matrix(p, 2), FpMatrix(p, {{1, 1}, {0, 1}}), FpMatrix(p, {{2, 0}, {0, 1}}),
                          FpMatrix(p, {{0, 1}, {p - 1, 0}})}) {
      const std::vector<FpMatrix> mats{m};
      const auto g = extraspecial_semidirect(p, mats);
      EXPECT_EQ(g.order(), p * p * p * m.order());
    }
  }
}

TEST(ConstructCase, Examples) {
  EXPECT_EQ(construct_case({CaseTag::a1, 5, 1, 2, 1}).order(), 10);
  EXPECT_EQ(construct_case({CaseTag::a2, 3, 2, 1, 1}).order(), 72);
  EXPECT_EQ(construct_case({CaseTag::a3, 2, 2, 1, 2}).order(), 36);
  EXPECT_EQ(construct_case({CaseTag::a7, 2, 2, 1, 2}).order(), 72);
  EXPECT_EQ(case_order({CaseTag::a3, 2, 2, 1, 5}), 972);
}

TEST(ConstructCaseProperty, ClassifiesAsRequestedCase) {
  const std::vector<CaseParams> cases{{CaseTag::a1, 5, 1, 2, 1}, {CaseTag::a1, 2, 3, 1, 1}, {CaseTag::a1, 3, 3, 2, 1},
                                      {CaseTag::a2, 3, 2, 1, 1}, {CaseTag::a2, 7, 2, 3, 1}, {CaseTag::a3, 2, 2, 1, 2},
                                      {CaseTag::a3, 3, 3, 2, 2}, {CaseTag::a4, 3, 2, 1, 1}, {CaseTag::a5, 2, 2, 1, 1},
                                      {CaseTag::a6, 3, 2, 1, 1}, {CaseTag::a7, 2, 2, 1, 2}};
  for (const auto& c : cases) {
    const auto g = construct_case(c);
    EXPECT_EQ(g.order(), case_order(c));
    const auto r = analyze_structure(g, character_table(g));
    EXPECT_EQ(r.verdict, Verdict::SingleGaloisClass) << describe(c);
    EXPECT_EQ(r.case_tag, c.tag) << describe(c);
    EXPECT_TRUE(r.theorem_violations.empty()) << describe(c);
  }
}

TEST(ConstructCaseProperty, A1GroupsAreFrobenius) {
  for (const CaseParams& c : {CaseParams{CaseTag::a1, 7, 1, 2, 1}, CaseParams{CaseTag::a1, 3, 2, 1, 1},
                              CaseParams{CaseTag::a1, 3, 3, 2, 1}}) {
    const auto g = construct_case(c);
    // Point 0 is the zero vector; nothing but the identity fixes it and another point.
    for (ElementId x = 1; x < static_cast<ElementId>(g.order()); ++x) {
      const auto& perm = g.element(x);
      if (perm[0] != 0) continue;
      for (std::size_t v = 1; v < perm.degree(); ++v) EXPECT_NE(perm[v], v) << describe(c);
    }
  }
}

TEST(ConstructCase, ParamsInvalid) {
  EXPECT_NE(params_invalid_message({CaseTag::a5, 3, 2, 2, 1}).find("transitive"), std::string::npos);
  EXPECT_NE(params_invalid_message({CaseTag::a1, 5, 1, 3, 1}).find("d must divide p-1"), std::string::npos);
  EXPECT_NE(params_invalid_message({CaseTag::a3, 3, 2, 2, 2}).find("must be prime"), std::string::npos);
  EXPECT_NE(params_invalid_message({CaseTag::a6, 5, 2, 2, 1}).find("Mersenne"), std::string::npos);
  EXPECT_NE(params_invalid_message({CaseTag::a2, 3, 2, 2, 1}).find("too small"), std::string::npos);
  EXPECT_EQ(params_invalid_message({CaseTag::a1, 4, 1, 1, 1}).rfind("PARAMS-INVALID: ", 0), 0u);
  EXPECT_NO_THROW(build_case({CaseTag::a5, 3, 2, 2, 1}));
}
