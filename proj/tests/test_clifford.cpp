#include "algver/clifford.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <map>

using namespace algver;

namespace {

std::string fixture_dir() { return std::string(ALGVER_FIXTURES) + "/clifford"; }

CliffordFixture load(const std::string& name) {
  return load_clifford_fixture(fixture_dir() + "/" + name + ".json");
}

}  // namespace

TEST(Fixtures, AllLoadAndHaveExpectedShapes) {
  std::map<std::string, std::pair<int, int>> expect = {
      {"s3_a3", {6, 3}},         {"d4_center", {8, 2}},     {"q8_center", {8, 2}},
      {"a4_v4", {12, 4}},        {"z4_z2", {4, 2}},         {"sl2f3_center", {24, 2}},
      {"sl2f3_q8", {24, 8}},
  };
  for (const auto& [name, shape] : expect) {
    auto fx = load(name);
    EXPECT_EQ(fx.g->size(), shape.first) << name;
    EXPECT_EQ(fx.n.group->size(), shape.second) << name;
    // U really is a character of N with norm 1
    Character chi = rep_character(fx.n, fx.u);
    EXPECT_EQ(inner(chi, chi), 1) << name;
  }
}

TEST(ConjAction, StabilizersMatchTheory) {
  // elements of N fix any class function of N
  auto s3fx = load("s3_a3");
  auto ctx = make_clifford_context(s3fx.g, s3fx.n);
  Character omega = rep_character(s3fx.n, s3fx.u);
  for (int p : s3fx.n.to_parent) {
    // conjugation by elements of N fixes class functions of N
    EXPECT_TRUE(char_equal(conj_char(omega, s3fx.n, p), omega));
  }
  // the transposition swaps omega and its conjugate: G_omega = A3
  Subgroup stab = stabilizer(ctx, omega);
  EXPECT_EQ(stab.group->size(), 3);
  // central characters are conjugation-fixed: G_chi = Q8
  auto q8fx = load("q8_center");
  auto qctx = make_clifford_context(q8fx.g, q8fx.n);
  Subgroup qstab = stabilizer(qctx, rep_character(q8fx.n, q8fx.u));
  EXPECT_EQ(qstab.group->size(), 8);
}

TEST(Restriction, CliffordDecompositions) {
  // S3 2-dim irrep to A3: e = 1, orbit = {omega, omega bar}
  auto fx = load("s3_a3");
  auto ctx = make_clifford_context(fx.g, fx.n);
  auto tg = character_table(fx.g);
  auto tn = character_table(fx.n.group);
  const Character* two_dim = nullptr;
  for (const auto& c : tg.irreps)
    if (std::llround(c.dim()) == 2) two_dim = &c;
  ASSERT_NE(two_dim, nullptr);
  auto r = clifford_restriction(ctx, *two_dim, tn);
  EXPECT_EQ(r.multiplicity, 1);
  EXPECT_EQ(r.orbit.size(), 2u);

  // N = G: e = 1, orbit = {pi}
  auto full = full_subgroup(fx.g);
  auto full_ctx = make_clifford_context(fx.g, full);
  auto rfull = clifford_restriction(full_ctx, *two_dim, tg);
  EXPECT_EQ(rfull.multiplicity, 1);
  EXPECT_EQ(rfull.orbit.size(), 1u);

  // Q8 2-dim irrep to the center: e = 2, orbit = one character
  auto qfx = load("q8_center");
  auto qctx = make_clifford_context(qfx.g, qfx.n);
  auto qtg = character_table(qfx.g);
  auto qtn = character_table(qfx.n.group);
  const Character* q2 = nullptr;
  for (const auto& c : qtg.irreps)
    if (std::llround(c.dim()) == 2) q2 = &c;
  ASSERT_NE(q2, nullptr);
  auto qr = clifford_restriction(qctx, *q2, qtn);
  EXPECT_EQ(qr.multiplicity, 2);
  EXPECT_EQ(qr.orbit.size(), 1u);

  // reducible input rejected
  try {
    Character red = sum_character(tg.irreps[0], tg.irreps[1]);
    clifford_restriction(ctx, red, tn);
    FAIL() << "expected NotIrreducible";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), "NotIrreducible");
  }
}

TEST(InducedIrreducibility, StabilizerInduction) {
  // S3, U = omega, G_U = A3, V = omega itself: Ind is the 2-dim irreducible
  auto fx = load("s3_a3");
  auto ctx = make_clifford_context(fx.g, fx.n);
  Character omega = rep_character(fx.n, fx.u);
  Subgroup gu = stabilizer(ctx, omega);
  // V lives on gu.group; A3 = N here so V = omega transported
  CVec vals(gu.group->size());
  for (int s = 0; s < gu.group->size(); ++s)
    vals[s] = omega.vals[ctx.n.restrict_index(gu.embed(s))];
  Character v{gu.group, vals};
  EXPECT_TRUE(induced_irreducibility_check(ctx, gu, v, omega));
  // G_U = G: induction is V itself
  auto qfx = load("q8_center");
  auto qctx = make_clifford_context(qfx.g, qfx.n);
  Character qu = rep_character(qfx.n, qfx.u);
  Subgroup qgu = stabilizer(qctx, qu);
  ASSERT_EQ(qgu.group->size(), 8);
  auto qtg = character_table(qfx.g);
  for (const auto& c : qtg.irreps)
    if (std::llround(c.dim()) == 2)
      EXPECT_TRUE(induced_irreducibility_check(qctx, qgu, c, qu));
  // D4 with a stabilizer of index 2: take N = <rotation>, U faithful
  auto d4 = group_d4();
  int rot = -1;
  for (int x = 0; x < 8; ++x)
    if (d4->element_order(x) == 4) {
      rot = x;
      break;
    }
  auto n4 = make_subgroup(d4, d4->closure({rot}));
  auto dctx = make_clifford_context(d4, n4);
  auto tn4 = character_table(n4.group);
  for (const auto& u : tn4.irreps) {
    if (std::abs(u.vals[n4.group->identity()].real() - 1) > 1e-9) continue;
    Subgroup stab = stabilizer(dctx, u);
    if (stab.group->size() != 4) continue;  // faithful characters: index 2
    CVec uvals(stab.group->size());
    bool transportable = true;
    for (int s = 0; s < stab.group->size(); ++s) {
      int p = stab.embed(s);
      if (!n4.contains(p)) {
        transportable = false;
        break;
      }
      uvals[s] = u.vals[n4.restrict_index(p)];
    }
    if (!transportable) continue;  // stabilizer = N here
    Character v{stab.group, uvals};
    EXPECT_TRUE(induced_irreducibility_check(dctx, stab, v, u));
  }
}

TEST(Intertwiners, TrivialQuotient) {
  auto fx = load("s3_a3");
  auto full = full_subgroup(fx.g);
  auto ctx = make_clifford_context(fx.g, full);
  EXPECT_EQ(ctx.m, 1);
  // U = any irreducible matrix rep of G itself; take the trivial one
  MatrixRep triv;
  triv.dim = 1;
  triv.mats.assign(static_cast<std::size_t>(fx.g->size()), CMat::Identity(1, 1));
  auto data = intertwiners(ctx, triv);
  EXPECT_EQ(data.m, 1);
  EXPECT_TRUE(cocycle_order_check(data));
}

TEST(Intertwiners, Z4OverZ2DirectComputation) {
  auto fx = load("z4_z2");
  auto ctx = make_clifford_context(fx.g, fx.n);
  ASSERT_EQ(ctx.m, 2);
  auto data = intertwiners(ctx, fx.u);
  EXPECT_TRUE(cocycle_order_check(data));
  // c(a,a) = -1 for the nontrivial coset under det-1 normalization
  int a = 1 - ctx.a.project(fx.g->identity());
  EXPECT_NEAR(std::abs(data.cocycle[a][a] - Cplx(-1, 0)), 0, 1e-8);
  // abelian quotient: skew form trivial, genuine dims 1
  EXPECT_NEAR(std::abs(abelian_skew(data, a, a) - Cplx(1, 0)), 0, 1e-9);
  EXPECT_EQ(skew_radical(data).size(), 2u);
  EXPECT_TRUE(genuine_dim_check(data));
}

TEST(Intertwiners, Q8ExtraspecialSkewForm) {
  auto fx = load("q8_center");
  auto ctx = make_clifford_context(fx.g, fx.n);
  ASSERT_EQ(ctx.m, 4);
  auto data = intertwiners(ctx, fx.u);
  EXPECT_TRUE(cocycle_order_check(data));
  // skew form nondegenerate: radical = {identity}; sqrt|A/rad| = 2
  auto rad = skew_radical(data);
  EXPECT_EQ(rad.size(), 1u);
  EXPECT_TRUE(genuine_dim_check(data));
  // D4 over its center behaves identically
  auto dfx = load("d4_center");
  auto dctx = make_clifford_context(dfx.g, dfx.n);
  auto ddata = intertwiners(dctx, dfx.u);
  EXPECT_TRUE(cocycle_order_check(ddata));
  EXPECT_EQ(skew_radical(ddata).size(), 1u);
  EXPECT_TRUE(genuine_dim_check(ddata));
}

TEST(Intertwiners, SplitExtensions) {
  // split with odd quotient: the det-1 section is a homomorphism, c = 1
  {
    auto g = Group::abelian({2, 3});
    std::vector<int> n_elems;  // the order-2 factor
    for (int x = 0; x < 6; ++x)
      if (g->element_order(x) <= 2) n_elems.push_back(x);
    auto n = make_subgroup(g, g->closure(n_elems));
    ASSERT_EQ(n.group->size(), 2);
    auto ctx = make_clifford_context(g, n);
    MatrixRep u;
    u.dim = 1;
    u.mats.resize(2);
    u.mats[static_cast<std::size_t>(n.group->identity())] = CMat::Identity(1, 1);
    u.mats[static_cast<std::size_t>(1 - n.group->identity())] = -CMat::Identity(1, 1);
    auto data = intertwiners(ctx, u);
    EXPECT_TRUE(cocycle_order_check(data));
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b)
        EXPECT_NEAR(std::abs(data.cocycle[a][b] - Cplx(1, 0)), 0, 1e-8);
    EXPECT_TRUE(genuine_dim_check(data));
  }
  // split with even quotient: the determinant-1 constraint pins c(a,a) = -1
  // (the coset swap is an odd permutation), but the class is still trivial:
  // the skew form is identically 1 and every genuine dimension is 1
  {
    auto g = Group::abelian({2, 2});
    auto n = make_subgroup(g, g->closure({1}));  // first factor
    ASSERT_EQ(n.group->size(), 2);
    auto ctx = make_clifford_context(g, n);
    MatrixRep u;
    u.dim = 1;
    u.mats.resize(2);
    u.mats[static_cast<std::size_t>(n.group->identity())] = CMat::Identity(1, 1);
    u.mats[static_cast<std::size_t>(1 - n.group->identity())] = -CMat::Identity(1, 1);
    auto data = intertwiners(ctx, u);
    EXPECT_TRUE(cocycle_order_check(data));
    int a = 1 - ctx.a.project(g->identity());
    EXPECT_NEAR(std::abs(data.cocycle[a][a] - Cplx(-1, 0)), 0, 1e-8);
    EXPECT_EQ(skew_radical(data).size(), 2u);  // trivial skew form
    EXPECT_TRUE(genuine_dim_check(data));
  }
}

TEST(Intertwiners, ReducibleURejected) {
  auto fx = load("s3_a3");
  auto ctx = make_clifford_context(fx.g, fx.n);
  MatrixRep red;
  red.dim = 2;
  red.mats.resize(3);
  for (int s = 0; s < 3; ++s) {
    CMat m = CMat::Zero(2, 2);
    m(0, 0) = 1;
    m(1, 1) = fx.u.at(s)(0, 0);  // 1 + omega, reducible
    red.mats[static_cast<std::size_t>(s)] = m;
  }
  try {
    intertwiners(ctx, red);
    FAIL() << "expected SchurFailure";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), "SchurFailure");
  }
}

TEST(Intertwiners, NonAbelianQuotientRejectsSkew) {
  auto fx = load("sl2f3_center");
  auto ctx = make_clifford_context(fx.g, fx.n);
  auto data = intertwiners(ctx, fx.u);
  EXPECT_TRUE(cocycle_order_check(data));
  try {
    abelian_skew(data, 0, 1);
    FAIL() << "expected NotAbelian";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), "NotAbelian");
  }
}

TEST(DecomposeInduction, AllFixturesSatisfyTheIdentity) {
  for (const std::string name :
       {"s3_a3", "d4_center", "q8_center", "a4_v4", "z4_z2", "sl2f3_center", "sl2f3_q8"}) {
    auto fx = load(name);
    auto ctx = make_clifford_context(fx.g, fx.n);
    auto cert = decompose_induction(ctx, fx.u);
    EXPECT_TRUE(cert.holds) << name;
  }
}

TEST(DecomposeInduction, StructuralDetails) {
  // S3 / A3, U = omega: G_U = A3, one trivial E, Ind = the 2-dim irreducible
  {
    auto fx = load("s3_a3");
    auto ctx = make_clifford_context(fx.g, fx.n);
    auto cert = decompose_induction(ctx, fx.u);
    EXPECT_EQ(cert.gu.group->size(), 3);
    ASSERT_EQ(cert.summands.size(), 1u);
    EXPECT_EQ(cert.summands[0].dim_e, 1);
    EXPECT_EQ(inner(cert.lhs, cert.lhs), 1);  // the induced rep is irreducible
    EXPECT_NEAR(cert.lhs.vals[fx.g->identity()].real(), 2.0, 1e-9);
  }
  // Q8 / center: one genuine E of dim 2, identity reads 4 = 2 * 2
  {
    auto fx = load("q8_center");
    auto ctx = make_clifford_context(fx.g, fx.n);
    auto cert = decompose_induction(ctx, fx.u);
    ASSERT_EQ(cert.summands.size(), 1u);
    EXPECT_EQ(cert.summands[0].dim_e, 2);
    EXPECT_NEAR(cert.lhs.vals[fx.g->identity()].real(), 4.0, 1e-9);
  }
  // abelian G: all E linear, identity reduces to plain Frobenius
  {
    auto fx = load("z4_z2");
    auto ctx = make_clifford_context(fx.g, fx.n);
    auto cert = decompose_induction(ctx, fx.u);
    ASSERT_EQ(cert.summands.size(), 2u);
    for (const auto& s : cert.summands) EXPECT_EQ(s.dim_e, 1);
  }
  // SL2(F3) / Q8 with the 2-dim spin rep: A_U = Z/3, three linear E's, and
  // the three 2-dim irreducibles of SL2(F3) appear once each
  {
    auto fx = load("sl2f3_q8");
    auto ctx = make_clifford_context(fx.g, fx.n);
    auto cert = decompose_induction(ctx, fx.u);
    EXPECT_EQ(cert.gu.group->size(), 24);
    ASSERT_EQ(cert.summands.size(), 3u);
    for (const auto& s : cert.summands) {
      EXPECT_EQ(s.dim_e, 1);
      EXPECT_NEAR(s.w.vals[cert.gu.group->identity()].real(), 2.0, 1e-9);
    }
  }
  // A4 / V4: G_U = N itself, single trivial E, Ind is the 3-dim irreducible
  {
    auto fx = load("a4_v4");
    auto ctx = make_clifford_context(fx.g, fx.n);
    auto cert = decompose_induction(ctx, fx.u);
    EXPECT_EQ(cert.gu.group->size(), 4);
    ASSERT_EQ(cert.summands.size(), 1u);
    EXPECT_EQ(inner(cert.lhs, cert.lhs), 1);
    EXPECT_NEAR(cert.lhs.vals[fx.g->identity()].real(), 3.0, 1e-9);
  }
}
