#pragma once

#include <functional>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "algver/cubic.hpp"
#include "algver/linalg.hpp"

namespace algver {

// Jordan pair (J+, J-) with quadratic maps Q^eps stored as exact closures
// (x, y) -> Q^eps(x)(y). Pairs remember how to rebuild themselves over a field
// extension so the axiom suite can test the "for any F-algebra" quantifier on
// a quadratic extension.
template <class K>
struct JordanPair {
  using Field = FieldOf<K>;
  using QMap = std::function<Vec<K>(const Vec<K>&, const Vec<K>&)>;

  Field base{};
  int dim_plus = 0;
  int dim_minus = 0;
  QMap q_plus;   // J+ x J- -> J+
  QMap q_minus;  // J- x J+ -> J-
  std::string name;
  std::function<JordanPair(const Field&)> rebuild;  // may be empty

  const QMap& q(int eps) const { return eps > 0 ? q_plus : q_minus; }
  int dim(int eps) const { return eps > 0 ? dim_plus : dim_minus; }

  Vec<K> zero(int eps) const {
    Vec<K> v(dim(eps));
    for (int i = 0; i < dim(eps); ++i) v[i] = ScalarTraits<K>::from_int(base, 0);
    return v;
  }

  Vec<K> random(int eps, Rng& rng) const {
    Vec<K> v(dim(eps));
    for (int i = 0; i < dim(eps); ++i) v[i] = ScalarTraits<K>::random(base, rng);
    return v;
  }
};

// {x,y,z}^eps = Q^eps(x+z)(y) - Q^eps(x)(y) - Q^eps(z)(y)
template <class K>
Vec<K> bracket(const JordanPair<K>& p, int eps, const Vec<K>& x, const Vec<K>& y,
               const Vec<K>& z) {
  require(x.size() == p.dim(eps) && z.size() == p.dim(eps) && y.size() == p.dim(-eps),
          "SlotMismatch", "bracket arguments in wrong spaces");
  return p.q(eps)(x + z, y) - p.q(eps)(x, y) - p.q(eps)(z, y);
}

// (V, V*) with Q+(v)(f) = <v,f> v
template <class K>
JordanPair<K> from_dual_space(const FieldOf<K>& field, int dim) {
  require(dim >= 1, "Unsupported", "dual-space pair needs dim >= 1");
  JordanPair<K> p;
  p.base = field;
  p.dim_plus = p.dim_minus = dim;
  auto pairing = [](const Vec<K>& a, const Vec<K>& b) {
    K s = a[0] * b[0];
    for (Eigen::Index i = 1; i < a.size(); ++i) s = s + a[i] * b[i];
    return s;
  };
  p.q_plus = [pairing](const Vec<K>& v, const Vec<K>& f) { return Vec<K>(pairing(v, f) * v); };
  p.q_minus = [pairing](const Vec<K>& f, const Vec<K>& v) { return Vec<K>(pairing(f, v) * f); };
  p.name = "dualspace(dim=" + std::to_string(dim) + ")";
  p.rebuild = [dim](const FieldOf<K>& f2) { return from_dual_space<K>(f2, dim); };
  return p;
}

// (J, J) with Q+ = Q- = U. The cubic structure is kept alive by the closures.
template <class K>
JordanPair<K> from_cubic(std::shared_ptr<CubicNormStructure<K>> j) {
  // a broken cubic structure surfaces here, before any pair is formed
  Rng rng(0xa71);
  try {
    check_cubic_axioms(*j, 4, rng);
  } catch (const Error& e) {
    fail("AxiomFailure", std::string("cubic structure fails its axioms: ") + e.what());
  }
  JordanPair<K> p;
  p.base = j->base();
  p.dim_plus = p.dim_minus = j->dim();
  p.q_plus = [j](const Vec<K>& x, const Vec<K>& y) { return j->u_op(x, y); };
  p.q_minus = p.q_plus;
  p.name = "cubic(" + j->describe() + ")";
  return p;
}

// from_cubic with an extension-aware rebuild hook
template <class K>
JordanPair<K> from_cubic_rebuildable(
    std::shared_ptr<CubicNormStructure<K>> j,
    std::function<std::shared_ptr<CubicNormStructure<K>>(const FieldOf<K>&)> make) {
  JordanPair<K> p = from_cubic(std::move(j));
  if (make)
    p.rebuild = [make](const FieldOf<K>& f2) { return from_cubic<K>(make(f2)); };
  return p;
}

// ---------------------------------------------------------------------------
// Axiom suite JP1-JP3.
// ---------------------------------------------------------------------------
enum class JPMode { exhaustive, random };

namespace detail {

template <class K>
void jp_laws(const JordanPair<K>& p, int eps, const Vec<K>& x, const Vec<K>& y, const Vec<K>& z2,
             const Vec<K>& z_opp) {
  // JP1: {x, y, Q(x) z} = Q(x){y, x, z} with y, z in J^{-eps}
  Vec<K> lhs1 = bracket(p, eps, x, y, p.q(eps)(x, z_opp));
  Vec<K> rhs1 = p.q(eps)(x, bracket(p, -eps, y, x, z_opp));
  if (!vec_eq<K>(lhs1, rhs1))
    fail("PropertyViolation", "JP1 fails in " + p.name + " (eps=" + std::to_string(eps) +
                                  ") at x=" + vec_str(x) + ", y=" + vec_str(y) +
                                  ", z=" + vec_str(z_opp));
  // JP2: {Q(x)y, y, z} = {x, Q(y)x, z} with z in J^{eps}
  Vec<K> lhs2 = bracket(p, eps, p.q(eps)(x, y), y, z2);
  Vec<K> rhs2 = bracket(p, eps, x, p.q(-eps)(y, x), z2);
  if (!vec_eq<K>(lhs2, rhs2))
    fail("PropertyViolation", "JP2 fails in " + p.name + " (eps=" + std::to_string(eps) +
                                  ") at x=" + vec_str(x) + ", y=" + vec_str(y) +
                                  ", z=" + vec_str(z2));
  // JP3: Q(Q(x)y) = Q(x) Q(y) Q(x) applied to z in J^{-eps}
  Vec<K> lhs3 = p.q(eps)(p.q(eps)(x, y), z_opp);
  Vec<K> rhs3 = p.q(eps)(x, p.q(-eps)(y, p.q(eps)(x, z_opp)));
  if (!vec_eq<K>(lhs3, rhs3))
    fail("PropertyViolation", "JP3 fails in " + p.name + " (eps=" + std::to_string(eps) +
                                  ") at x=" + vec_str(x) + ", y=" + vec_str(y) +
                                  ", z=" + vec_str(z_opp));
}

template <class K>
CheckStats jp_run(const JordanPair<K>& p, JPMode mode, long long trials, Rng& rng,
                  long long exhaustive_bound) {
  CheckStats st;
  if (mode == JPMode::exhaustive) {
    require(ScalarTraits<K>::finite(p.base), "ConfigError",
            "exhaustive JP check needs a finite field");
    long long q = ScalarTraits<K>::size(p.base);
    auto count = [&](int d) {
      long long n = 1;
      for (int i = 0; i < d; ++i) n *= q;
      return n;
    };
    auto element = [&](int d, long long code) {
      Vec<K> v(d);
      for (int i = 0; i < d; ++i) {
        v[i] = ScalarTraits<K>::element(p.base, code % q);
        code /= q;
      }
      return v;
    };
    for (int eps : {+1, -1}) {
      long long ne = count(p.dim(eps)), no = count(p.dim(-eps));
      require(ne * no * no * ne <= exhaustive_bound, "ConfigError",
              "carrier too large for exhaustive JP check");
      for (long long a = 0; a < ne; ++a) {
        Vec<K> x = element(p.dim(eps), a);
        for (long long b = 0; b < no; ++b) {
          Vec<K> y = element(p.dim(-eps), b);
          for (long long c = 0; c < no; ++c) {
            Vec<K> z = element(p.dim(-eps), c);
            for (long long d = 0; d < ne; ++d) {
              jp_laws(p, eps, x, y, element(p.dim(eps), d), z);
              ++st.samples;
            }
          }
        }
      }
    }
    st.exhaustive = true;
    return st;
  }
  for (long long t = 0; t < trials; ++t) {
    for (int eps : {+1, -1}) {
      Vec<K> x = p.random(eps, rng);
      Vec<K> y = p.random(-eps, rng);
      Vec<K> z2 = p.random(eps, rng);
      Vec<K> z = p.random(-eps, rng);
      jp_laws(p, eps, x, y, z2, z);
    }
    ++st.samples;
  }
  return st;
}

}  // namespace detail

// Verifies JP1-3 over the base field and, when the pair can be rebuilt and the
// base is finite, over the canonical quadratic extension.
template <class K>
CheckStats check_jp(const JordanPair<K>& p, JPMode mode, long long trials, Rng& rng,
                    long long exhaustive_bound = 2000000) {
  require(trials >= 1, "ConfigError", "check_jp needs trials >= 1");
  CheckStats st = detail::jp_run(p, mode, trials, rng, exhaustive_bound);
  if constexpr (std::is_same_v<K, GFElem>) {
    if (p.rebuild) {
      const GFField* ext = GFField::canonical(p.base->p(), 2 * p.base->degree());
      JordanPair<K> pe = p.rebuild(ext);
      detail::jp_run(pe, JPMode::random, std::max<long long>(trials / 4, 8), rng,
                     exhaustive_bound);
    }
  }
  return st;
}

// phi^eps(Q(x)(y)) = Q(phi^eps x)(phi^{-eps} y) for sampled (x, y), both eps
template <class K>
bool is_hom(const Mat<K>& phi_plus, const Mat<K>& phi_minus, const JordanPair<K>& src,
            const JordanPair<K>& dst, long long trials, Rng& rng) {
  require(phi_plus.rows() == dst.dim_plus && phi_plus.cols() == src.dim_plus &&
              phi_minus.rows() == dst.dim_minus && phi_minus.cols() == src.dim_minus,
          "ShapeMismatch", "homomorphism matrices have wrong shapes");
  for (long long t = 0; t < trials; ++t) {
    Vec<K> x = src.random(+1, rng);
    Vec<K> y = src.random(-1, rng);
    if (!vec_eq<K>(phi_plus * src.q_plus(x, y),
                   dst.q_plus(phi_plus * x, phi_minus * y)))
      return false;
    Vec<K> f = src.random(-1, rng);
    Vec<K> v = src.random(+1, rng);
    if (!vec_eq<K>(phi_minus * src.q_minus(f, v),
                   dst.q_minus(phi_minus * f, phi_plus * v)))
      return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Hermitian pair over a quadratic extension K/F (finite fields):
// V = K^n with sigma-Hermitian h, Q(v)(w) = h(v,w) v.
// Convention recorded here: h is K-linear in the first slot and
// sigma-semilinear in the second; automorphisms are K-linear h-isometries.
// ---------------------------------------------------------------------------
class HermitianPair {
 public:
  HermitianPair(const GFField* base, const GFField* ext, Mat<GFElem> gram)
      : base_(base), ext_(ext), h_(std::move(gram)) {
    require(ext_->degree() == 2 * base_->degree() && ext_->p() == base_->p(), "Unsupported",
            "hermitian pairs need a quadratic extension");
    n_ = static_cast<int>(h_.rows());
    require(n_ >= 1 && h_.cols() == n_, "ShapeMismatch", "gram matrix must be square");
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j)
        require(h_(i, j) == sigma(h_(j, i)), "DegenerateForm",
                "gram matrix is not sigma-hermitian");
    require(!mat_det(h_).is_zero(), "DegenerateForm", "hermitian form is degenerate");
  }

  const GFField* ext() const { return ext_; }
  int n() const { return n_; }

  GFElem sigma(const GFElem& x) const {
    return GFElem(ext_, ext_->pow(x.in(ext_).index(), base_->size()));
  }

  GFElem form(const Vec<GFElem>& v, const Vec<GFElem>& w) const {
    GFElem s = ScalarTraits<GFElem>::from_int(ext_, 0);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) s = s + h_(i, j) * v[i] * sigma(w[j]);
    return s;
  }

  Vec<GFElem> q(const Vec<GFElem>& v, const Vec<GFElem>& w) const {
    return form(v, w) * v;
  }

  bool preserves_form(const Mat<GFElem>& u) const {
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) {
        Vec<GFElem> ei = basis(i), ej = basis(j);
        if (form(u * ei, u * ej) != form(ei, ej)) return false;
      }
    return true;
  }

  bool q_equivariant(const Mat<GFElem>& u, long long trials, Rng& rng) const {
    for (long long t = 0; t < trials; ++t) {
      Vec<GFElem> v = random(rng), w = random(rng);
      if (!vec_eq<GFElem>(u * q(v, w), q(u * v, u * w))) return false;
    }
    return true;
  }

  Vec<GFElem> basis(int i) const {
    Vec<GFElem> v(n_);
    for (int k = 0; k < n_; ++k) v[k] = ScalarTraits<GFElem>::from_int(ext_, k == i ? 1 : 0);
    return v;
  }

  Vec<GFElem> random(Rng& rng) const {
    Vec<GFElem> v(n_);
    for (int k = 0; k < n_; ++k) v[k] = ScalarTraits<GFElem>::random(ext_, rng);
    return v;
  }

 private:
  const GFField* base_;
  const GFField* ext_;
  Mat<GFElem> h_;
  int n_ = 0;
};

inline HermitianPair hermitian_from_form(const GFField* base, const GFField* ext,
                                         const Mat<GFElem>& gram) {
  return HermitianPair(base, ext, gram);
}

// ---------------------------------------------------------------------------
// Box repackaging J_box = J+ x J- as an F x F module with swap involution.
// ---------------------------------------------------------------------------
template <class K>
struct BoxPair {
  JordanPair<K> pair;

  int dim() const { return pair.dim_plus + pair.dim_minus; }

  Vec<K> glue(const Vec<K>& xp, const Vec<K>& xm) const {
    Vec<K> v(dim());
    v.segment(0, pair.dim_plus) = xp;
    v.segment(pair.dim_plus, pair.dim_minus) = xm;
    return v;
  }

  Vec<K> plus_part(const Vec<K>& v) const { return v.segment(0, pair.dim_plus); }
  Vec<K> minus_part(const Vec<K>& v) const {
    return v.segment(pair.dim_plus, pair.dim_minus);
  }

  // (a, b) . (x+, x-) = (a x+, b x-)
  Vec<K> module_act(const K& a, const K& b, const Vec<K>& v) const {
    return glue(Vec<K>(a * plus_part(v)), Vec<K>(b * minus_part(v)));
  }

  // swap exchanges the factors; an endomap when the two sides share a space
  Vec<K> swap(const Vec<K>& v) const {
    require(pair.dim_plus == pair.dim_minus, "ShapeMismatch",
            "swap needs matching factor dimensions");
    return glue(minus_part(v), plus_part(v));
  }

  // Q_box(x)(y) = (Q+(x+)(y-), Q-(x-)(y+)); the twist feeds the swapped slots
  Vec<K> q_box(const Vec<K>& x, const Vec<K>& y) const {
    return glue(pair.q_plus(plus_part(x), minus_part(y)),
                pair.q_minus(minus_part(x), plus_part(y)));
  }

  Vec<K> random(Rng& rng) const { return glue(pair.random(+1, rng), pair.random(-1, rng)); }
};

template <class K>
BoxPair<K> box_form(const JordanPair<K>& p) {
  return BoxPair<K>{p};
}

// swap^2 = id, the F x F module law, and (for pairs with Q+ = Q- as formulas,
// e.g. from_cubic) swap is a sigma-linear automorphism of Q_box.
template <class K>
CheckStats sigma_swap_check(const BoxPair<K>& b, long long trials, Rng& rng,
                            bool expect_swap_automorphism) {
  CheckStats st;
  for (long long t = 0; t < trials; ++t) {
    Vec<K> v = b.random(rng);
    if (!vec_eq<K>(b.swap(b.swap(v)), v))
      fail("PropertyViolation", "swap^2 != id in " + b.pair.name);
    K one = ScalarTraits<K>::from_int(b.pair.base, 1);
    K zero = ScalarTraits<K>::from_int(b.pair.base, 0);
    Vec<K> proj = b.module_act(one, zero, v);
    if (!vec_eq<K>(b.plus_part(proj), b.plus_part(v)) ||
        !vec_eq<K>(b.minus_part(proj), Vec<K>(b.pair.zero(-1))))
      fail("PropertyViolation", "(1,0) action does not project in " + b.pair.name);
    if (expect_swap_automorphism) {
      Vec<K> w = b.random(rng);
      if (!vec_eq<K>(b.swap(b.q_box(v, w)), b.q_box(b.swap(v), b.swap(w))))
        fail("PropertyViolation", "swap is not a Q_box automorphism in " + b.pair.name);
    }
    ++st.samples;
  }
  return st;
}

// trace-form self-adjointness of the U operator, T(U_x y, z) = T(y, U_x z);
// this is what makes the trace identification J = J* a sigma-linear
// automorphism of the box pair
template <class K>
CheckStats u_selfadjoint_check(const CubicNormStructure<K>& j, long long trials, Rng& rng) {
  CheckStats st;
  for (long long t = 0; t < trials; ++t) {
    Vec<K> x = j.random(rng), y = j.random(rng), z = j.random(rng);
    if (j.trace_form(j.u_op(x, y), z) != j.trace_form(y, j.u_op(x, z)))
      fail("PropertyViolation", "T(U_x y, z) != T(y, U_x z) in " + j.describe());
    ++st.samples;
  }
  return st;
}

}  // namespace algver
