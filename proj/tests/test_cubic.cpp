#include "algver/cubic.hpp"

#include <gtest/gtest.h>

using namespace algver;

namespace {

template <class K>
CompositionAlgebra<K> comp_of_dim(const FieldOf<K>& f, int dim) {
  long long g = ScalarTraits<K>::finite(f) ? 1 : -1;
  std::vector<K> gammas;
  int k = dim == 1 ? 0 : dim == 2 ? 1 : dim == 4 ? 2 : 3;
  for (int i = 0; i < k; ++i) gammas.push_back(ScalarTraits<K>::from_int(f, g));
  return CompositionAlgebra<K>::cayley_dickson(f, gammas);
}

// 3x3 symmetric matrix oracle for J(F): determinant, adjugate via cofactors,
// trace of products. Independent of the Freudenthal formulas under test.
template <class K>
struct SymMatrixOracle {
  using M = std::array<std::array<K, 3>, 3>;

  static M to_matrix(const Vec<K>& x) {
    M m;
    m[0][0] = x[0];
    m[1][1] = x[1];
    m[2][2] = x[2];
    m[1][2] = m[2][1] = x[3];
    m[0][2] = m[2][0] = x[4];
    m[0][1] = m[1][0] = x[5];
    return m;
  }

  static Vec<K> to_coords(const M& m) {
    Vec<K> x(6);
    x[0] = m[0][0];
    x[1] = m[1][1];
    x[2] = m[2][2];
    x[3] = m[1][2];
    x[4] = m[0][2];
    x[5] = m[0][1];
    return x;
  }

  static K det(const M& m) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  }

  static M adjugate(const M& m) {
    M a;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        int r0 = (i + 1) % 3, r1 = (i + 2) % 3, c0 = (j + 1) % 3, c1 = (j + 2) % 3;
        // cofactor with cyclic index choice keeps signs positive
        a[j][i] = m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0];
      }
    return a;
  }

  static K trace_prod(const M& a, const M& b) {
    K t = a[0][0] - a[0][0];
    for (int i = 0; i < 3; ++i)
      for (int k = 0; k < 3; ++k) t = t + a[i][k] * b[k][i];
    return t;
  }
};

}  // namespace

TEST(HermJ, DimensionsMatchTable) {
  const GFField* f7 = GFField::prime_field(7);
  EXPECT_EQ(herm_j(comp_of_dim<GFElem>(f7, 1))->dim(), 6);
  EXPECT_EQ(herm_j(comp_of_dim<GFElem>(f7, 2))->dim(), 9);
  EXPECT_EQ(herm_j(comp_of_dim<GFElem>(f7, 4))->dim(), 15);
  EXPECT_EQ(herm_j(comp_of_dim<GFElem>(f7, 8))->dim(), 27);
  auto j = herm_j(comp_of_dim<GFElem>(f7, 8));
  EXPECT_EQ(j->norm(j->unit()), GFElem(f7, 1));
}

TEST(HermJ, BadCharacteristicRejected) {
  for (long long p : {2ll, 3ll}) {
    const GFField* f = GFField::prime_field(p);
    try {
      herm_j(comp_of_dim<GFElem>(f, 1));
      FAIL() << "expected BadCharacteristic";
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), "BadCharacteristic");
    }
  }
  // opt-in flag constructs anyway
  const GFField* f2 = GFField::prime_field(2);
  EXPECT_EQ(herm_j(comp_of_dim<GFElem>(f2, 1), SmallChar::allow)->dim(), 6);
}

TEST(HermJ, GroundCaseMatchesMatrixOracle) {
  Rng rng(41);
  // over Q, 1000 random matrices
  auto jq = HermitianCubic<Rat>(comp_of_dim<Rat>(RatField{}, 1));
  for (int t = 0; t < 1000; ++t) {
    Vec<Rat> x = jq.random(rng);
    auto m = SymMatrixOracle<Rat>::to_matrix(x);
    EXPECT_EQ(jq.norm(x), SymMatrixOracle<Rat>::det(m));
    EXPECT_TRUE(vec_eq<Rat>(jq.sharp(x),
                            SymMatrixOracle<Rat>::to_coords(SymMatrixOracle<Rat>::adjugate(m))));
    Vec<Rat> y = jq.random(rng);
    EXPECT_EQ(jq.trace_form(x, y),
              SymMatrixOracle<Rat>::trace_prod(m, SymMatrixOracle<Rat>::to_matrix(y)));
  }
  // exhaustively on 0/1 coordinate vectors over GF(7)
  const GFField* f7 = GFField::prime_field(7);
  auto j7 = HermitianCubic<GFElem>(comp_of_dim<GFElem>(f7, 1));
  for (int mask = 0; mask < (1 << 6); ++mask) {
    Vec<GFElem> x(6);
    for (int i = 0; i < 6; ++i) x[i] = GFElem(f7, (mask >> i) & 1);
    auto m = SymMatrixOracle<GFElem>::to_matrix(x);
    EXPECT_EQ(j7.norm(x), SymMatrixOracle<GFElem>::det(m));
    EXPECT_TRUE(vec_eq<GFElem>(
        j7.sharp(x), SymMatrixOracle<GFElem>::to_coords(SymMatrixOracle<GFElem>::adjugate(m))));
  }
}

TEST(CubicOps, CrossPolarization) {
  const GFField* f7 = GFField::prime_field(7);
  auto j = herm_j(comp_of_dim<GFElem>(f7, 4));
  Rng rng(43);
  for (int t = 0; t < 100; ++t) {
    Vec<GFElem> x = j->random(rng);
    EXPECT_TRUE(vec_eq<GFElem>(j->cross(x, x), Vec<GFElem>(j->from_int(2) * j->sharp(x))));
  }
}

TEST(CubicOps, UOperator) {
  const GFField* f7 = GFField::prime_field(7);
  auto j = herm_j(comp_of_dim<GFElem>(f7, 2));
  Rng rng(47);
  for (int t = 0; t < 100; ++t) {
    Vec<GFElem> y = j->random(rng);
    EXPECT_TRUE(vec_eq<GFElem>(j->u_op(j->unit(), y), y));  // U_1 = id
    Vec<GFElem> x = j->random(rng);
    EXPECT_TRUE(vec_eq<GFElem>(j->u_op(x, j->zero()), j->zero()));  // linear in y
    GFElem lam = ScalarTraits<GFElem>::random(f7, rng);
    EXPECT_TRUE(vec_eq<GFElem>(j->u_op(Vec<GFElem>(lam * x), y),
                               Vec<GFElem>(lam * lam * j->u_op(x, y))));
  }
}

TEST(CubicAxioms, AllHermitianInstances) {
  Rng rng(53);
  const GFField* f7 = GFField::prime_field(7);
  for (int dim : {1, 2, 4, 8}) {
    auto j = herm_j(comp_of_dim<GFElem>(f7, dim));
    EXPECT_TRUE(j->trace_nondegenerate());
    check_cubic_axioms(*j, 60, rng);
  }
  for (int dim : {1, 2, 4, 8}) {
    auto j = herm_j(comp_of_dim<Rat>(RatField{}, dim));
    check_cubic_axioms(*j, dim == 8 ? 12 : 30, rng);
  }
}

TEST(CubicAxioms, CorruptedNormCaught) {
  // drop the T_C((ab)c) term from the norm: x^## = N(x)x must fail
  const GFField* f7 = GFField::prime_field(7);
  struct Corrupted : HermitianCubic<GFElem> {
    explicit Corrupted(CompositionAlgebra<GFElem> c) : HermitianCubic<GFElem>(std::move(c)) {}
    GFElem norm(const Vec<GFElem>& x) const override {
      GFElem n = x[0] * x[1] * x[2];
      for (int i = 0; i < 3; ++i) n = n - x[i] * comp().norm(off(x, i));
      return n;  // missing trace term
    }
  };
  Corrupted j(comp_of_dim<GFElem>(f7, 2));
  Rng rng(59);
  try {
    check_cubic_axioms(j, 200, rng);
    FAIL() << "expected PropertyViolation";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), "PropertyViolation");
    EXPECT_NE(std::string(e.what()).find("N(x)"), std::string::npos);
  }
}

TEST(Springer, NormReducesToEtaleNormAtVZero) {
  const GFField* f7 = GFField::prime_field(7);
  auto tc = TwistedComposition<GFElem>::from_tensor(comp_of_dim<GFElem>(f7, 2));
  auto j = springer(tc);
  EXPECT_EQ(j->norm(j->unit()), GFElem(f7, 1));
  Rng rng(61);
  auto e3 = EtaleAlgebra<GFElem>::split(f7, 3);
  for (int t = 0; t < 50; ++t) {
    Vec<GFElem> x = j->zero();
    for (int i = 0; i < 3; ++i) x[i] = ScalarTraits<GFElem>::random(f7, rng);
    EXPECT_EQ(j->norm(x), e3.norm(e3.make({x[0], x[1], x[2]})));
  }
}

TEST(Springer, GroundCaseMatchesHermJExhaustively) {
  const GFField* f5 = GFField::prime_field(5);
  auto c = comp_of_dim<GFElem>(f5, 1);
  auto js = springer(TwistedComposition<GFElem>::from_tensor(c));
  auto jh = herm_j(c);
  ASSERT_EQ(js->dim(), 6);
  // identify (e1,e2,e3; v1,v2,v3) with the hermitian coordinates directly
  for (long long code = 0; code < 15625; ++code) {
    Vec<GFElem> x(6);
    long long c2 = code;
    for (int i = 0; i < 6; ++i) {
      x[i] = GFElem(f5, c2 % 5);
      c2 /= 5;
    }
    ASSERT_EQ(js->norm(x), jh->norm(x)) << vec_str(x);
  }
}

TEST(Springer, OctonionInstancePassesAxioms) {
  const GFField* f7 = GFField::prime_field(7);
  auto tc = TwistedComposition<GFElem>::from_tensor(comp_of_dim<GFElem>(f7, 8));
  auto j = springer(tc);
  EXPECT_EQ(j->dim(), 27);
  Rng rng(67);
  check_cubic_axioms(*j, 40, rng);
  auto tq = TwistedComposition<Rat>::from_tensor(comp_of_dim<Rat>(RatField{}, 2));
  check_cubic_axioms(*springer(tq), 25, rng);
}

TEST(Rescale, FactorIsT) {
  auto jq = HermitianCubic<Rat>(comp_of_dim<Rat>(RatField{}, 1));
  Mat<Rat> g = rescale_map(jq, Rat(2));
  EXPECT_EQ(jq.norm(g * jq.unit()), Rat(2));  // 2*2*(1/2) = 2 = t * N(1)
  Mat<Rat> id = rescale_map(jq, Rat(1));
  for (int i = 0; i < 6; ++i)
    for (int k = 0; k < 6; ++k) EXPECT_EQ(id(i, k), Rat(i == k ? 1 : 0));
  // octonion case over GF(7), random samples
  const GFField* f7 = GFField::prime_field(7);
  HermitianCubic<GFElem> jo(comp_of_dim<GFElem>(f7, 8));
  Rng rng(71);
  for (int t = 0; t < 30; ++t) {
    GFElem tt = ScalarTraits<GFElem>::random(f7, rng);
    if (tt.is_zero()) continue;
    Mat<GFElem> go = rescale_map(jo, tt);
    Vec<GFElem> x = jo.random(rng);
    EXPECT_EQ(jo.norm(go * x), tt * jo.norm(x));
  }
  // composition law rescale(t1) rescale(t2) = rescale(t1 t2)
  Mat<Rat> a = rescale_map(jq, Rat(3));
  Mat<Rat> b = rescale_map(jq, Rat(1, 2));
  Mat<Rat> ab = a * b;
  Mat<Rat> direct = rescale_map(jq, Rat(3, 2));
  for (int i = 0; i < 6; ++i)
    for (int k = 0; k < 6; ++k) EXPECT_EQ(ab(i, k), direct(i, k));
}

TEST(Similitude, DetectsRescaleAndCongruence) {
  auto jq = HermitianCubic<Rat>(comp_of_dim<Rat>(RatField{}, 1));
  Rng rng(73);
  std::vector<Vec<Rat>> samples;
  for (int t = 0; t < 40; ++t) samples.push_back(jq.random(rng));
  auto t0 = is_similitude<Rat>(rescale_map(jq, Rat(5, 3)), jq, samples);
  ASSERT_TRUE(t0.has_value());
  EXPECT_EQ(*t0, Rat(5, 3));

  // congruence action x -> m x m^T has factor det(m)^2
  std::array<std::array<Rat, 3>, 3> m{{{Rat(1), Rat(2), Rat(0)},
                                       {Rat(0), Rat(1), Rat(3)},
                                       {Rat(1), Rat(0), Rat(2)}}};
  Mat<Rat> op(6, 6);
  for (int col = 0; col < 6; ++col) {
    Vec<Rat> e(6);
    for (int i = 0; i < 6; ++i) e[i] = Rat(i == col ? 1 : 0);
    auto em = SymMatrixOracle<Rat>::to_matrix(e);
    std::array<std::array<Rat, 3>, 3> out{};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        out[i][j] = Rat(0);
        for (int r = 0; r < 3; ++r)
          for (int s = 0; s < 3; ++s) out[i][j] += m[i][r] * em[r][s] * m[j][s];
      }
    Vec<Rat> oc = SymMatrixOracle<Rat>::to_coords(out);
    for (int i = 0; i < 6; ++i) op(i, col) = oc[i];
  }
  auto factor = is_similitude<Rat>(op, jq, samples);
  ASSERT_TRUE(factor.has_value());
  Rat detm = SymMatrixOracle<Rat>::det(m);
  EXPECT_EQ(*factor, detm * detm);

  // random perturbation is not a similitude
  Mat<Rat> bad = rescale_map(jq, Rat(2));
  bad(0, 1) += Rat(1);
  EXPECT_FALSE(is_similitude<Rat>(bad, jq, samples).has_value());

  // insufficient sample: all norms vanish
  std::vector<Vec<Rat>> iso{jq.zero()};
  try {
    is_similitude<Rat>(rescale_map(jq, Rat(2)), jq, iso);
    FAIL() << "expected InsufficientSample";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), "InsufficientSample");
  }
}
