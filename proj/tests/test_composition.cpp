#include "algver/composition.hpp"

#include <gtest/gtest.h>

using namespace algver;

namespace {

template <class K>
CompositionAlgebra<K> dim_algebra(const FieldOf<K>& f, int dim, bool split) {
  std::vector<K> gammas;
  int k = dim == 1 ? 0 : dim == 2 ? 1 : dim == 4 ? 2 : 3;
  for (int i = 0; i < k; ++i) gammas.push_back(ScalarTraits<K>::from_int(f, split ? 1 : -1));
  return CompositionAlgebra<K>::cayley_dickson(f, gammas);
}

}  // namespace

TEST(Doubling, ComplexOverQ) {
  auto c = CompositionAlgebra<Rat>::ground(RatField{}).doubled(Rat(-1));
  EXPECT_EQ(c.dim(), 2);
  Vec<Rat> x(2);
  x << Rat(3), Rat(4);
  EXPECT_EQ(c.norm(x), Rat(25));  // a^2 + b^2
  // (0,1)^2 = (-1, 0) with gamma = -1
  Vec<Rat> i(2);
  i << Rat(0), Rat(1);
  Vec<Rat> sq = c.mul(i, i);
  EXPECT_EQ(sq[0], Rat(-1));
  EXPECT_EQ(sq[1], Rat(0));
}

TEST(Doubling, SplitOctonionsAreIsotropic) {
  const GFField* f5 = GFField::prime_field(5);
  auto o = dim_algebra<GFElem>(f5, 8, true);
  EXPECT_EQ(o.dim(), 8);
  bool isotropic = false;
  Rng rng(2);
  for (int t = 0; t < 200 && !isotropic; ++t) {
    Vec<GFElem> x = o.random(rng);
    bool zero = true;
    for (int i = 0; i < 8; ++i) zero = zero && x[i].is_zero();
    if (!zero && o.norm(x).is_zero()) isotropic = true;
  }
  EXPECT_TRUE(isotropic);
  // multiplicativity spot-check
  for (int t = 0; t < 100; ++t) {
    Vec<GFElem> x = o.random(rng), y = o.random(rng);
    EXPECT_EQ(o.norm(o.mul(x, y)), o.norm(x) * o.norm(y));
  }
}

TEST(Doubling, OctonionDoublingRejected) {
  const GFField* f5 = GFField::prime_field(5);
  auto o = dim_algebra<GFElem>(f5, 8, true);
  try {
    o.doubled(GFElem(f5, 1));
    FAIL() << "expected DimensionLimit";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), "DimensionLimit");
  }
}

TEST(CompOps, UnitAndConj) {
  const GFField* f7 = GFField::prime_field(7);
  auto q = dim_algebra<GFElem>(f7, 4, true);
  EXPECT_EQ(q.norm(q.one()), GFElem(f7, 1));
  EXPECT_TRUE(vec_eq<GFElem>(q.conj(q.one()), q.one()));
  EXPECT_EQ(q.trace(q.one()), GFElem(f7, 2));
}

// direct-expansion oracle: N(x) read off as the scalar part of x conj(x)
TEST(CompOps, NormMatchesExpansionOracle) {
  const GFField* f5 = GFField::prime_field(5);
  auto q = dim_algebra<GFElem>(f5, 4, true);
  Rng rng(13);
  for (int t = 0; t < 300; ++t) {
    Vec<GFElem> x = q.random(rng), y = q.random(rng);
    Vec<GFElem> xc = q.mul(x, q.conj(x));
    EXPECT_EQ(xc[0], q.norm(x));
    for (int i = 1; i < 4; ++i) EXPECT_TRUE(xc[i].is_zero());
    EXPECT_EQ(q.norm(q.mul(x, y)), q.norm(x) * q.norm(y));
  }
}

TEST(CompOps, OctonionsNotAssociative) {
  const GFField* f7 = GFField::prime_field(7);
  auto o = dim_algebra<GFElem>(f7, 8, true);
  Rng rng(3);
  bool witness = false;
  for (int t = 0; t < 100 && !witness; ++t) {
    Vec<GFElem> x = o.random(rng), y = o.random(rng), z = o.random(rng);
    if (!vec_eq<GFElem>(o.mul(o.mul(x, y), z), o.mul(x, o.mul(y, z)))) witness = true;
  }
  EXPECT_TRUE(witness);
}

TEST(CheckComposition, PassesAllDims) {
  Rng rng(17);
  for (long long p : {5ll, 7ll}) {
    const GFField* f = GFField::prime_field(p);
    for (int dim : {1, 2, 4, 8}) {
      auto c = dim_algebra<GFElem>(f, dim, true);
      auto st = check_composition(c, 120, rng);
      EXPECT_TRUE(st.exhaustive || st.samples >= 120);
      check_rank_identity(c, 60, rng);
    }
  }
  for (int dim : {1, 2, 4, 8}) {
    auto c = dim_algebra<Rat>(RatField{}, dim, false);
    check_composition(c, 60, rng);
    check_rank_identity(c, 30, rng);
  }
}

TEST(CheckComposition, ExhaustiveOverGF2) {
  // char 2 is fine for composition algebras themselves
  const GFField* f2 = GFField::prime_field(2);
  auto c = dim_algebra<GFElem>(f2, 4, true);
  Rng rng(1);
  auto st = check_composition(c, 10, rng);
  EXPECT_TRUE(st.exhaustive);
  EXPECT_EQ(st.samples, 16 * 16);
}

TEST(CheckComposition, CorruptedMultiplicationCaught) {
  const GFField* f5 = GFField::prime_field(5);
  auto q = dim_algebra<GFElem>(f5, 4, true);
  MulFn<GFElem> bad = [&](const Vec<GFElem>& x, const Vec<GFElem>& y) {
    Vec<GFElem> r = q.mul(x, y);
    r[1] = r[1] + GFElem(f5, 1);  // corrupted table entry
    return r;
  };
  Rng rng(5);
  try {
    check_composition(q, 50, rng, &bad);
    FAIL() << "expected PropertyViolation";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), "PropertyViolation");
    EXPECT_NE(std::string(e.what()).find("x="), std::string::npos);  // witness present
  }
}

TEST(Twisted, TensorConstructionAnchors) {
  const GFField* f7 = GFField::prime_field(7);
  auto c = CompositionAlgebra<GFElem>::ground(f7);
  auto tc = TwistedComposition<GFElem>::from_tensor(c);
  Vec<GFElem> ones(3);
  ones << GFElem(f7, 1), GFElem(f7, 1), GFElem(f7, 1);
  auto q = tc.q_map(ones);
  EXPECT_TRUE(tc.etale().eq(q, tc.etale().one()));
  EXPECT_TRUE(vec_eq<GFElem>(tc.beta(ones), ones));
  Vec<GFElem> zero(3);
  zero << GFElem(f7, 0), GFElem(f7, 0), GFElem(f7, 0);
  EXPECT_TRUE(tc.etale().is_zero(tc.q_map(zero)));
  EXPECT_TRUE(vec_eq<GFElem>(tc.beta(zero), zero));
}

TEST(Twisted, BetaMatchesEtaleSharpForGroundC) {
  const GFField* f7 = GFField::prime_field(7);
  auto c = CompositionAlgebra<GFElem>::ground(f7);
  auto tc = TwistedComposition<GFElem>::from_tensor(c);
  auto e3 = EtaleAlgebra<GFElem>::split(f7, 3);
  Rng rng(23);
  for (int t = 0; t < 100; ++t) {
    Vec<GFElem> v = tc.random(rng);
    Vec<GFElem> bv = tc.beta(v);
    auto sharp = e3.sharp(e3.make({v[0], v[1], v[2]}));
    EXPECT_EQ(bv[0], sharp.coords[0]);
    EXPECT_EQ(bv[1], sharp.coords[1]);
    EXPECT_EQ(bv[2], sharp.coords[2]);
  }
}

TEST(Twisted, ChecksPassGroundAndOctonion) {
  const GFField* f7 = GFField::prime_field(7);
  Rng rng(29);
  auto tc1 = TwistedComposition<GFElem>::from_tensor(CompositionAlgebra<GFElem>::ground(f7));
  check_twisted(tc1, 200, rng);
  const GFField* f5 = GFField::prime_field(5);
  auto tc2 = TwistedComposition<GFElem>::from_tensor(dim_algebra<GFElem>(f5, 8, true));
  check_twisted(tc2, 300, rng);
  auto tcq = TwistedComposition<Rat>::from_tensor(dim_algebra<Rat>(RatField{}, 4, false));
  check_twisted(tcq, 100, rng);
}

TEST(Twisted, CorruptedBetaCaught) {
  const GFField* f7 = GFField::prime_field(7);
  auto tc = TwistedComposition<GFElem>::from_tensor(dim_algebra<GFElem>(f7, 2, true));
  BetaFn<GFElem> bad = [&](const Vec<GFElem>& v) {
    Vec<GFElem> b = tc.beta(v);
    b.segment(0, 2) = -b.segment(0, 2);  // sign flip on one slot
    return b;
  };
  Rng rng(31);
  try {
    check_twisted(tc, 100, rng, &bad);
    FAIL() << "expected PropertyViolation";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), "PropertyViolation");
  }
}

TEST(Twisted, NonSplitERejected) {
  const GFField* f7 = GFField::prime_field(7);
  auto c = CompositionAlgebra<GFElem>::ground(f7);
  try {
    TwistedComposition<GFElem>(c, EtaleAlgebra<GFElem>::single_extension(f7, 3));
    FAIL() << "expected Unsupported";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), "Unsupported");
  }
}

TEST(CdSerial, RoundTrip) {
  auto c = parse_composition_gf("cd(gf(7);1,1,1)");
  EXPECT_EQ(c.dim(), 8);
  EXPECT_EQ(c.descriptor(), "cd(gf(7);1,1,1)");
  auto r = parse_composition_rat("cd(Q;-1,1/2)");
  EXPECT_EQ(r.dim(), 4);
  EXPECT_EQ(r.gammas()[1], Rat(1, 2));
  try {
    parse_composition_gf("cd(gf(7);1,1,1,1)");
    FAIL() << "expected ConfigError";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), "ConfigError");
  }
}
