#include "algver/character.hpp"
#include "algver/group.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace algver;

TEST(Groups, NamedGroupsHaveRightShape) {
  EXPECT_EQ(group_s3()->size(), 6);
  EXPECT_EQ(group_d4()->size(), 8);
  EXPECT_EQ(group_q8()->size(), 8);
  EXPECT_EQ(group_a4()->size(), 12);
  EXPECT_EQ(group_sl2_f3()->size(), 24);
  EXPECT_EQ(group_q8()->center().size(), 2u);
  EXPECT_EQ(group_sl2_f3()->center().size(), 2u);
  EXPECT_FALSE(group_q8()->is_abelian());
  // every non-identity element of Q8 except -1 has order 4
  auto q8 = group_q8();
  int order4 = 0;
  for (int x = 0; x < 8; ++x)
    if (q8->element_order(x) == 4) ++order4;
  EXPECT_EQ(order4, 6);
}

TEST(Groups, ConjugacyClasses) {
  auto s3 = group_s3();
  std::multiset<std::size_t> sizes;
  for (const auto& c : s3->classes()) sizes.insert(c.size());
  EXPECT_EQ(sizes, (std::multiset<std::size_t>{1, 2, 3}));
  EXPECT_EQ(group_q8()->classes().size(), 5u);
  auto z6 = Group::cyclic(6);
  EXPECT_EQ(z6->classes().size(), 6u);  // abelian: singletons
}

TEST(Groups, QuotientsAndProducts) {
  // (Z/4 x Z/4) / <(2,2)> has order 8
  auto z4z4 = Group::abelian({4, 4});
  int diag2 = 2 * 4 + 2;  // element (2,2)
  auto q = central_quotient(z4z4, z4z4->closure({diag2}));
  EXPECT_EQ(q.group->size(), 8);
  // Q8 / center = Z/2 x Z/2
  auto q8 = group_q8();
  auto qq = central_quotient(q8, q8->center());
  EXPECT_EQ(qq.group->size(), 4);
  for (int x = 0; x < 4; ++x) EXPECT_EQ(qq.group->mul(x, x), qq.group->identity());
  // non-central subgroup rejected
  auto s3 = group_s3();
  std::vector<int> sub2;
  for (int x = 0; x < 6; ++x)
    if (s3->element_order(x) == 2) {
      sub2 = s3->closure({x});
      break;
    }
  try {
    central_quotient(s3, sub2);
    FAIL() << "expected NotCentral";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), "NotCentral");
  }
  // not a subgroup
  try {
    central_quotient(q8, {3});
    FAIL() << "expected NotSubgroup";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), "NotSubgroup");
  }
  auto prod = direct_product(group_s3(), Group::cyclic(2));
  EXPECT_EQ(prod.group->size(), 12);
}

TEST(CharacterTables, ClassicalShapes) {
  auto ts3 = character_table(group_s3());
  std::multiset<long long> dims;
  for (const auto& c : ts3.irreps) dims.insert(std::llround(c.dim()));
  EXPECT_EQ(dims, (std::multiset<long long>{1, 1, 2}));

  auto tq8 = character_table(group_q8());
  dims.clear();
  for (const auto& c : tq8.irreps) dims.insert(std::llround(c.dim()));
  EXPECT_EQ(dims, (std::multiset<long long>{1, 1, 1, 1, 2}));

  auto z5 = character_table(Group::cyclic(5));
  EXPECT_EQ(z5.irreps.size(), 5u);
  for (const auto& c : z5.irreps) {
    EXPECT_NEAR(c.dim(), 1.0, 1e-9);
    for (int x = 0; x < 5; ++x) EXPECT_NEAR(std::abs(c.vals[x]), 1.0, 1e-8);
  }

  auto tsl2 = character_table(group_sl2_f3());
  dims.clear();
  for (const auto& c : tsl2.irreps) dims.insert(std::llround(c.dim()));
  EXPECT_EQ(dims, (std::multiset<long long>{1, 1, 1, 2, 2, 2, 3}));

  // every row is irreducible and rows are orthonormal after snapping
  for (const auto& a : tq8.irreps) EXPECT_EQ(inner(a, a), 1);
  for (std::size_t i = 0; i < tq8.irreps.size(); ++i)
    for (std::size_t j = i + 1; j < tq8.irreps.size(); ++j)
      EXPECT_EQ(inner(tq8.irreps[i], tq8.irreps[j]), 0);
}

TEST(CharacterOps, InduceRestrictFrobenius) {
  auto s3 = group_s3();
  // A3 = closure of a 3-cycle
  int three_cycle = -1;
  for (int x = 0; x < 6; ++x)
    if (s3->element_order(x) == 3) {
      three_cycle = x;
      break;
    }
  auto a3 = make_subgroup(s3, s3->closure({three_cycle}));
  EXPECT_EQ(a3.group->size(), 3);
  auto ta3 = character_table(a3.group);
  auto ts3 = character_table(s3);

  // induce(trivial of A3) = trivial + sign
  Character ind = induce_character(trivial_character(a3.group), a3);
  auto mult = decompose(ind, ts3);
  long long ones = 0, twos = 0;
  for (std::size_t i = 0; i < mult.size(); ++i) {
    if (mult[i] == 0) continue;
    long long d = std::llround(ts3.irreps[i].dim());
    if (d == 1) ones += mult[i];
    if (d == 2) twos += mult[i];
  }
  EXPECT_EQ(ones, 2);
  EXPECT_EQ(twos, 0);

  // restrict with N = G is the identity
  auto full = full_subgroup(s3);
  for (const auto& chi : ts3.irreps)
    EXPECT_TRUE(char_equal(restrict_character(chi, full), chi));

  // Frobenius reciprocity for all pairs
  for (const auto& chi : ta3.irreps)
    for (const auto& psi : ts3.irreps)
      EXPECT_EQ(inner(induce_character(chi, a3), psi),
                inner(chi, restrict_character(psi, a3)));
}

TEST(CharacterOps, DescendAndPullback) {
  auto q8 = group_q8();
  auto q = central_quotient(q8, q8->center());
  auto tq = character_table(q.group);
  // pullbacks of quotient characters are exactly the characters trivial on Z
  auto tq8 = character_table(q8);
  int trivial_on_z = 0;
  for (const auto& chi : tq8.irreps) {
    bool triv = true;
    for (int z : q8->center()) triv = triv && std::abs(chi.vals[z] - chi.vals[q8->identity()]) < 1e-8;
    if (triv) ++trivial_on_z;
  }
  EXPECT_EQ(trivial_on_z, static_cast<int>(tq.irreps.size()));
  for (const auto& chi : tq.irreps) {
    Character up = pullback(chi, q);
    EXPECT_EQ(inner(up, up), 1);
    Character down = descend(up, q);
    EXPECT_TRUE(char_equal(down, chi));
  }
}

TEST(CharacterOps, CyclotomicParsing) {
  EXPECT_NEAR(std::abs(parse_cyclotomic("z8^3 - z8") - Cplx(-std::sqrt(2.0), 0)), 0, 1e-9);
  EXPECT_NEAR(std::abs(parse_cyclotomic("-1") - Cplx(-1, 0)), 0, 1e-12);
  EXPECT_NEAR(std::abs(parse_cyclotomic("2*z4") - Cplx(0, 2)), 0, 1e-12);
  EXPECT_NEAR(std::abs(parse_cyclotomic("z3 + z3^2") - Cplx(-1, 0)), 0, 1e-9);
}

TEST(CharacterOps, SnapFailureSurfaceable) {
  try {
    snap_int(0.4);
    FAIL() << "expected SnapFailure";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), "SnapFailure");
  }
}
