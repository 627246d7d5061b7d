#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "algver/composition.hpp"
#include "algver/linalg.hpp"

namespace algver {

// Cubic norm structure: a space with cubic norm N, quadratic adjoint #,
// bilinear trace T and unit, subject to the adjoint identity x^## = N(x) x.
// Elements are coordinate vectors in a fixed basis; the two constructions
// (Hermitian 3x3 over a composition algebra, Springer E + C^b) provide the
// maps, everything else is derived here.
template <class K>
class CubicNormStructure {
 public:
  using Field = FieldOf<K>;

  virtual ~CubicNormStructure() = default;

  const Field& base() const { return base_; }
  int dim() const { return dim_; }
  const Vec<K>& unit() const { return unit_; }

  virtual K norm(const Vec<K>& x) const = 0;
  virtual Vec<K> sharp(const Vec<K>& x) const = 0;
  virtual K trace_form(const Vec<K>& x, const Vec<K>& y) const = 0;
  virtual std::string describe() const = 0;

  Vec<K> cross(const Vec<K>& x, const Vec<K>& y) const {
    return sharp(x + y) - sharp(x) - sharp(y);
  }

  K trace_lin(const Vec<K>& x) const { return trace_form(x, unit_); }

  // U_x(y) = T(x,y) x - x^# x y
  Vec<K> u_op(const Vec<K>& x, const Vec<K>& y) const {
    return trace_form(x, y) * x - cross(sharp(x), y);
  }

  Vec<K> zero() const {
    Vec<K> v(dim_);
    for (int i = 0; i < dim_; ++i) v[i] = from_int(0);
    return v;
  }

  Vec<K> basis(int i) const {
    Vec<K> v = zero();
    v[i] = from_int(1);
    return v;
  }

  Vec<K> random(Rng& rng) const {
    Vec<K> v(dim_);
    for (int i = 0; i < dim_; ++i) v[i] = ScalarTraits<K>::random(base_, rng);
    return v;
  }

  K from_int(long long n) const { return ScalarTraits<K>::from_int(base_, n); }

  bool trace_nondegenerate() const {
    Mat<K> gram(dim_, dim_);
    for (int i = 0; i < dim_; ++i)
      for (int j = 0; j < dim_; ++j) gram(i, j) = trace_form(basis(i), basis(j));
    return !mat_det(gram).is_zero();
  }

  void check(const Vec<K>& x) const {
    require(static_cast<int>(x.size()) == dim_, "IncompatibleParents",
            "element has wrong coordinate length");
  }

 protected:
  Field base_{};
  int dim_ = 0;
  Vec<K> unit_;
};

enum class SmallChar { reject, allow };

// ---------------------------------------------------------------------------
// J(C): Hermitian 3x3 matrices over a composition algebra C, coordinates
// (a1,a2,a3; x1,x2,x3) for the matrix with diagonal (a1,a2,a3) and x_i in the
// off-diagonal slot not meeting row/column i.
// ---------------------------------------------------------------------------
template <class K>
class HermitianCubic : public CubicNormStructure<K> {
 public:
  explicit HermitianCubic(CompositionAlgebra<K> c, SmallChar mode = SmallChar::reject)
      : c_(std::move(c)) {
    long long p = ScalarTraits<K>::characteristic(c_.base());
    if (mode == SmallChar::reject)
      require(p != 2 && p != 3, "BadCharacteristic",
              "hermitian cubic norm structures need characteristic not in {2,3}");
    this->base_ = c_.base();
    this->dim_ = 3 + 3 * c_.dim();
    this->unit_ = this->zero();
    for (int i = 0; i < 3; ++i) this->unit_[i] = this->from_int(1);
  }

  const CompositionAlgebra<K>& comp() const { return c_; }

  K diag(const Vec<K>& x, int i) const { return x[i]; }

  Vec<K> off(const Vec<K>& x, int i) const {
    return x.segment(3 + i * c_.dim(), c_.dim());
  }

  Vec<K> assemble(const K& a1, const K& a2, const K& a3, const Vec<K>& x1, const Vec<K>& x2,
                  const Vec<K>& x3) const {
    Vec<K> v(this->dim_);
    v[0] = a1;
    v[1] = a2;
    v[2] = a3;
    v.segment(3, c_.dim()) = x1;
    v.segment(3 + c_.dim(), c_.dim()) = x2;
    v.segment(3 + 2 * c_.dim(), c_.dim()) = x3;
    return v;
  }

  K norm(const Vec<K>& x) const override {
    this->check(x);
    K n = x[0] * x[1] * x[2];
    for (int i = 0; i < 3; ++i) n = n - x[i] * c_.norm(off(x, i));
    Vec<K> prod = c_.mul(c_.mul(off(x, 0), off(x, 1)), off(x, 2));
    return n + c_.trace(prod);
  }

  Vec<K> sharp(const Vec<K>& x) const override {
    this->check(x);
    K d1 = x[1] * x[2] - c_.norm(off(x, 0));
    K d2 = x[2] * x[0] - c_.norm(off(x, 1));
    K d3 = x[0] * x[1] - c_.norm(off(x, 2));
    Vec<K> s1 = c_.conj(c_.mul(off(x, 1), off(x, 2))) - x[0] * off(x, 0);
    Vec<K> s2 = c_.conj(c_.mul(off(x, 2), off(x, 0))) - x[1] * off(x, 1);
    Vec<K> s3 = c_.conj(c_.mul(off(x, 0), off(x, 1))) - x[2] * off(x, 2);
    return assemble(d1, d2, d3, s1, s2, s3);
  }

  K trace_form(const Vec<K>& x, const Vec<K>& y) const override {
    this->check(x);
    this->check(y);
    K t = x[0] * y[0] + x[1] * y[1] + x[2] * y[2];
    for (int i = 0; i < 3; ++i) t = t + c_.norm_bilinear(off(x, i), off(y, i));
    return t;
  }

  std::string describe() const override { return "hermJ(" + c_.descriptor() + ")"; }

 private:
  CompositionAlgebra<K> c_;
};

// ---------------------------------------------------------------------------
// Springer construction E + V for a twisted composition (V, Q, beta) over
// split cubic E: N(e,v) = N_E(e) - T_E(e Q(v)) + N_V(v), unit (1,0),
// (e,v)^# = (e^# - Q(v), beta(v) - e.v).
// ---------------------------------------------------------------------------
template <class K>
class SpringerCubic : public CubicNormStructure<K> {
 public:
  explicit SpringerCubic(TwistedComposition<K> tc, SmallChar mode = SmallChar::reject)
      : tc_(std::move(tc)) {
    long long p = ScalarTraits<K>::characteristic(tc_.comp().base());
    if (mode == SmallChar::reject)
      require(p != 2 && p != 3, "BadCharacteristic",
              "springer construction needs characteristic not in {2,3}");
    this->base_ = tc_.comp().base();
    this->dim_ = 3 + tc_.vdim();
    this->unit_ = this->zero();
    for (int i = 0; i < 3; ++i) this->unit_[i] = this->from_int(1);
    smoke_check();
  }

  const TwistedComposition<K>& twisted() const { return tc_; }

  EtaleElem<K> epart(const Vec<K>& x) const {
    return tc_.etale().make({x[0], x[1], x[2]});
  }

  Vec<K> vpart(const Vec<K>& x) const { return x.segment(3, tc_.vdim()); }

  Vec<K> assemble(const EtaleElem<K>& e, const Vec<K>& v) const {
    Vec<K> out(this->dim_);
    for (int i = 0; i < 3; ++i) out[i] = e.coords[static_cast<std::size_t>(i)];
    out.segment(3, tc_.vdim()) = v;
    return out;
  }

  K norm(const Vec<K>& x) const override {
    this->check(x);
    const auto& e = tc_.etale();
    auto ep = epart(x);
    Vec<K> v = vpart(x);
    K n = e.norm(ep) - e.trace(e.mul(ep, tc_.q_map(v)));
    auto pairing = tc_.bq(v, tc_.beta(v));
    auto diag = tc_.diagonal_scalar(pairing);
    require(diag.has_value(), "AxiomFailure", "twisted norm pairing is not diagonal");
    return n + *diag;
  }

  Vec<K> sharp(const Vec<K>& x) const override {
    this->check(x);
    const auto& e = tc_.etale();
    auto ep = epart(x);
    Vec<K> v = vpart(x);
    auto es = e.sub(e.sharp(ep), tc_.q_map(v));
    Vec<K> vs = tc_.beta(v) - tc_.e_act(ep, v);
    return assemble(es, vs);
  }

  K trace_form(const Vec<K>& x, const Vec<K>& y) const override {
    this->check(x);
    this->check(y);
    const auto& e = tc_.etale();
    K t = e.trace(e.mul(epart(x), epart(y)));
    return t + e.trace(tc_.bq(vpart(x), vpart(y)));
  }

  std::string describe() const override {
    return "springer(" + tc_.comp().descriptor() + ")";
  }

 private:
  // wrong sign conventions surface as adjoint-identity failures immediately
  void smoke_check() {
    Rng rng(0x5eed);
    for (int t = 0; t < 8; ++t) {
      Vec<K> x = this->random(rng);
      if (!vec_eq<K>(this->sharp(this->sharp(x)), Vec<K>(this->norm(x) * x)))
        fail("AxiomFailure", "springer data violates x^## = N(x) x at x=" + vec_str(x));
    }
  }

  TwistedComposition<K> tc_;
};

template <class K>
std::shared_ptr<CubicNormStructure<K>> herm_j(const CompositionAlgebra<K>& c,
                                              SmallChar mode = SmallChar::reject) {
  return std::make_shared<HermitianCubic<K>>(c, mode);
}

template <class K>
std::shared_ptr<CubicNormStructure<K>> springer(const TwistedComposition<K>& tc,
                                                SmallChar mode = SmallChar::reject) {
  return std::make_shared<SpringerCubic<K>>(tc, mode);
}

// ---------------------------------------------------------------------------
// Axiom suite; throws PropertyViolation naming the identity.
// ---------------------------------------------------------------------------
template <class K>
CheckStats check_cubic_axioms(const CubicNormStructure<K>& j, long long trials, Rng& rng) {
  require(trials >= 1, "ConfigError", "check_cubic_axioms needs trials >= 1");
  const Vec<K> one = j.unit();
  if (j.norm(one) != j.from_int(1))
    fail("PropertyViolation", "N(1) != 1 in " + j.describe());
  if (!vec_eq<K>(j.sharp(one), one))
    fail("PropertyViolation", "1^# != 1 in " + j.describe());
  CheckStats st;
  for (long long t = 0; t < trials; ++t) {
    Vec<K> x = j.random(rng);
    Vec<K> y = j.random(rng);
    Vec<K> z = j.random(rng);
    if (!vec_eq<K>(j.sharp(j.sharp(x)), Vec<K>(j.norm(x) * x)))
      fail("PropertyViolation",
           "x^## != N(x) x in " + j.describe() + " at x=" + vec_str(x));
    if (j.trace_form(j.sharp(x), x) != j.from_int(3) * j.norm(x))
      fail("PropertyViolation",
           "T(x^#, x) != 3N(x) in " + j.describe() + " at x=" + vec_str(x));
    if (!vec_eq<K>(j.u_op(one, y), y))
      fail("PropertyViolation", "U_1 != id in " + j.describe() + " at y=" + vec_str(y));
    if (!vec_eq<K>(j.u_op(j.u_op(x, y), z), j.u_op(x, j.u_op(y, j.u_op(x, z)))))
      fail("PropertyViolation", "U_{U_x y} != U_x U_y U_x in " + j.describe() + " at x=" +
                                    vec_str(x) + ", y=" + vec_str(y) + ", z=" + vec_str(z));
    ++st.samples;
  }
  return st;
}

// ---------------------------------------------------------------------------
// Similitudes of the norm form.
// ---------------------------------------------------------------------------

// linear operator scaling the norm by t: upper-left 2x2 block (both diagonal
// entries and the off-diagonal slot x3) times t, remaining diagonal entry
// divided by t, other entries fixed
template <class K>
Mat<K> rescale_map(const HermitianCubic<K>& j, const K& t) {
  require(!t.is_zero(), "DivisionByZero", "rescale map needs t != 0");
  int n = j.dim();
  int c = j.comp().dim();
  Mat<K> g(n, n);
  for (int r = 0; r < n; ++r)
    for (int s = 0; s < n; ++s) g(r, s) = j.from_int(0);
  K tinv = t.inverse();
  g(0, 0) = t;
  g(1, 1) = t;
  g(2, 2) = tinv;
  for (int i = 0; i < c; ++i) {
    g(3 + i, 3 + i) = j.from_int(1);          // x1 fixed
    g(3 + c + i, 3 + c + i) = j.from_int(1);  // x2 fixed
    g(3 + 2 * c + i, 3 + 2 * c + i) = t;      // x3 scaled
  }
  return g;
}

// Detects the similitude factor from the first anisotropic sample, then
// verifies it on every sample; nullopt when g is not a similitude.
template <class K>
std::optional<K> is_similitude(const Mat<K>& g, const CubicNormStructure<K>& j,
                               const std::vector<Vec<K>>& samples) {
  require(!samples.empty(), "InsufficientSample", "similitude detection needs samples");
  std::optional<K> t;
  for (const auto& x : samples) {
    K nx = j.norm(x);
    if (!nx.is_zero()) {
      t = j.norm(g * x) / nx;
      break;
    }
  }
  require(t.has_value(), "InsufficientSample", "all sampled norms vanish");
  for (const auto& x : samples)
    if (j.norm(g * x) != *t * j.norm(x)) return std::nullopt;
  return t;
}

}  // namespace algver
