#pragma once

#include <algorithm>
#include <memory>
#include <numeric>
#include <string>
#include <vector>

#include "algver/scalars.hpp"

namespace algver {

// Étale algebra over a base field: an ordered product of field extensions.
// Coordinates of an element live in the component fields (for GF bases) or in
// the base itself (rationals support split components only).
//
// Split components are copies of the base; extension components carry the
// relative degree and an embedding of the base.

template <class K>
struct EtaleComponent;

template <>
struct EtaleComponent<Rat> {
  int degree = 1;  // always 1 over Q
};

template <>
struct EtaleComponent<GFElem> {
  int degree = 1;
  const GFField* field = nullptr;  // component field
  GFEmbedding embed_base;          // base -> component field
};

template <class K>
class EtaleAlgebra;

template <class K>
struct EtaleElem {
  const EtaleAlgebra<K>* parent = nullptr;
  std::vector<K> coords;  // one per component, in the component field
};

template <class K>
class EtaleAlgebra {
 public:
  using Field = FieldOf<K>;
  using Elem = EtaleElem<K>;

  static EtaleAlgebra split(const Field& base, int copies) {
    require(copies >= 1, "Unsupported", "etale algebra needs rank >= 1");
    EtaleAlgebra a;
    a.base_ = base;
    a.comps_.resize(static_cast<std::size_t>(copies));
    if constexpr (std::is_same_v<K, GFElem>) {
      for (auto& c : a.comps_) {
        c.field = base;
        c.embed_base = GFEmbedding::identity(base);
      }
    }
    a.rank_ = copies;
    return a;
  }

  // single extension component of the given relative degree (GF only)
  static EtaleAlgebra single_extension(const Field& base, int degree);

  // explicit component field (GF only); degree must divide out evenly
  static EtaleAlgebra single_field(const Field& base, const Field& ext);

  const Field& base() const { return base_; }
  int components() const { return static_cast<int>(comps_.size()); }
  int rank() const { return rank_; }
  const EtaleComponent<K>& component(int i) const { return comps_[static_cast<std::size_t>(i)]; }
  bool is_split() const {
    for (const auto& c : comps_)
      if (c.degree != 1) return false;
    return true;
  }

  bool same(const EtaleAlgebra& o) const {
    if (!ScalarTraits<K>::same(base_, o.base_) || comps_.size() != o.comps_.size()) return false;
    for (std::size_t i = 0; i < comps_.size(); ++i)
      if (comps_[i].degree != o.comps_[i].degree) return false;
    return true;
  }

  Elem make(std::vector<K> coords) const {
    require(static_cast<int>(coords.size()) == components(), "RankMismatch",
            "coordinate count does not match component count");
    return Elem{this, std::move(coords)};
  }

  Elem zero() const { return constant(0); }
  Elem one() const { return constant(1); }

  Elem constant(long long n) const {
    std::vector<K> c;
    c.reserve(comps_.size());
    for (int i = 0; i < components(); ++i) c.push_back(comp_from_int(i, n));
    return Elem{this, std::move(c)};
  }

  // base scalar embedded diagonally
  Elem scalar(const K& s) const {
    std::vector<K> c;
    c.reserve(comps_.size());
    for (int i = 0; i < components(); ++i) c.push_back(embed(i, s));
    return Elem{this, std::move(c)};
  }

  Elem add(const Elem& x, const Elem& y) const {
    check(x);
    check(y);
    std::vector<K> c(x.coords);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = c[i] + y.coords[i];
    return Elem{this, std::move(c)};
  }

  Elem sub(const Elem& x, const Elem& y) const {
    check(x);
    check(y);
    std::vector<K> c(x.coords);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = c[i] - y.coords[i];
    return Elem{this, std::move(c)};
  }

  Elem neg(const Elem& x) const {
    check(x);
    std::vector<K> c(x.coords);
    for (auto& v : c) v = -v;
    return Elem{this, std::move(c)};
  }

  Elem mul(const Elem& x, const Elem& y) const {
    check(x);
    check(y);
    std::vector<K> c(x.coords);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = c[i] * y.coords[i];
    return Elem{this, std::move(c)};
  }

  Elem mul_scalar(const K& s, const Elem& x) const {
    check(x);
    std::vector<K> c(x.coords);
    for (int i = 0; i < components(); ++i)
      c[static_cast<std::size_t>(i)] = embed(i, s) * c[static_cast<std::size_t>(i)];
    return Elem{this, std::move(c)};
  }

  Elem invert(const Elem& x) const {
    check(x);
    std::vector<K> c(x.coords);
    for (auto& v : c) {
      require(!v.is_zero(), "DivisionByZero", "etale element is not a unit");
      v = v.inverse();
    }
    return Elem{this, std::move(c)};
  }

  bool is_zero(const Elem& x) const {
    for (const auto& v : x.coords)
      if (!v.is_zero()) return false;
    return true;
  }

  bool eq(const Elem& x, const Elem& y) const {
    check(x);
    check(y);
    for (std::size_t i = 0; i < x.coords.size(); ++i)
      if (x.coords[i] != y.coords[i]) return false;
    return true;
  }

  // product over components of the Galois-conjugate product
  K norm(const Elem& x) const {
    check(x);
    K n = ScalarTraits<K>::from_int(base_, 1);
    for (int i = 0; i < components(); ++i) n = n * comp_norm(i, x.coords[static_cast<std::size_t>(i)]);
    return n;
  }

  K trace(const Elem& x) const {
    check(x);
    K t = ScalarTraits<K>::from_int(base_, 0);
    for (int i = 0; i < components(); ++i) t = t + comp_trace(i, x.coords[static_cast<std::size_t>(i)]);
    return t;
  }

  // second elementary symmetric function of the rank-many conjugates
  K second_symmetric(const Elem& x) const;

  // x^2 - T(x) x + S(x), the degree-3 characteristic-polynomial adjoint;
  // satisfies x * sharp(x) = N(x) and sharp(sharp(x)) = N(x) x.
  Elem sharp(const Elem& x) const {
    require(rank_ == 3, "RankMismatch", "sharp needs a rank-3 algebra");
    K t = trace(x);
    K s = second_symmetric(x);
    Elem x2 = mul(x, x);
    Elem out = sub(x2, mul_scalar(t, x));
    return add(out, scalar(s));
  }

  // base-fixing algebra automorphisms; split algebras give component
  // permutations, a single extension field gives Frobenius powers
  struct Aut {
    std::vector<int> perm;       // out[i] reads in[perm[i]]
    std::vector<int> frob;       // relative Frobenius power applied per slot
    Elem apply(const EtaleAlgebra& a, const Elem& x) const {
      a.check(x);
      std::vector<K> c(x.coords.size());
      for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = a.comp_frobenius(static_cast<int>(i), x.coords[static_cast<std::size_t>(perm[i])],
                                frob[i]);
      return Elem{&a, std::move(c)};
    }
    Aut compose(const Aut& other, const EtaleAlgebra& a) const {  // this after other
      Aut r;
      r.perm.resize(perm.size());
      r.frob.resize(perm.size());
      for (std::size_t i = 0; i < perm.size(); ++i) {
        r.perm[i] = other.perm[static_cast<std::size_t>(perm[i])];
        int d = a.component(static_cast<int>(i)).degree;
        r.frob[i] = (frob[i] + other.frob[static_cast<std::size_t>(perm[i])]) % d;
      }
      return r;
    }
    bool operator==(const Aut& o) const { return perm == o.perm && frob == o.frob; }
  };

  std::vector<Aut> automorphisms() const;

  Elem random(Rng& rng) const {
    std::vector<K> c;
    c.reserve(comps_.size());
    for (int i = 0; i < components(); ++i) c.push_back(comp_random(i, rng));
    return Elem{this, std::move(c)};
  }

  std::string str(const Elem& x) const {
    std::string s = "(";
    for (std::size_t i = 0; i < x.coords.size(); ++i) {
      if (i) s += ",";
      s += x.coords[i].str();
    }
    return s + ")";
  }

  // component-level helpers (public: the twisted-composition code uses them)
  K comp_from_int(int i, long long n) const;
  K embed(int i, const K& base_val) const;
  K comp_frobenius(int i, const K& v, int power) const;  // relative to base
  K comp_norm(int i, const K& v) const;                  // lands in base
  K comp_trace(int i, const K& v) const;
  K comp_random(int i, Rng& rng) const;

 private:
  void check(const Elem& x) const {
    require(x.parent == this && static_cast<int>(x.coords.size()) == components(),
            "IncompatibleParents", "element does not belong to this etale algebra");
  }

  Field base_{};
  std::vector<EtaleComponent<K>> comps_;
  int rank_ = 0;
};

// --- Rat specializations: split only -----------------------------------------

template <>
inline EtaleAlgebra<Rat> EtaleAlgebra<Rat>::single_extension(const RatField&, int) {
  fail("Unsupported", "field extensions of Q are out of scope");
}

template <>
inline EtaleAlgebra<Rat> EtaleAlgebra<Rat>::single_field(const RatField&, const RatField&) {
  fail("Unsupported", "field extensions of Q are out of scope");
}

template <>
inline Rat EtaleAlgebra<Rat>::comp_from_int(int, long long n) const {
  return Rat(n);
}

template <>
inline Rat EtaleAlgebra<Rat>::embed(int, const Rat& v) const {
  return v;
}

template <>
inline Rat EtaleAlgebra<Rat>::comp_frobenius(int, const Rat& v, int) const {
  return v;
}

template <>
inline Rat EtaleAlgebra<Rat>::comp_norm(int, const Rat& v) const {
  return v;
}

template <>
inline Rat EtaleAlgebra<Rat>::comp_trace(int, const Rat& v) const {
  return v;
}

template <>
inline Rat EtaleAlgebra<Rat>::comp_random(int, Rng& rng) const {
  return ScalarTraits<Rat>::random(RatField{}, rng);
}

template <>
inline Rat EtaleAlgebra<Rat>::second_symmetric(const Elem& x) const {
  require(rank_ == 3, "RankMismatch", "second_symmetric needs rank 3");
  return x.coords[0] * x.coords[1] + x.coords[1] * x.coords[2] + x.coords[2] * x.coords[0];
}

template <>
inline std::vector<EtaleAlgebra<Rat>::Aut> EtaleAlgebra<Rat>::automorphisms() const {
  // split case only over Q
  std::vector<int> idx(comps_.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::vector<Aut> out;
  std::vector<int> perm = idx;
  do {
    Aut a;
    a.perm = perm;
    a.frob.assign(perm.size(), 0);
    out.push_back(a);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

// --- GF specializations ------------------------------------------------------

template <>
inline EtaleAlgebra<GFElem> EtaleAlgebra<GFElem>::single_extension(const Field& base, int degree) {
  require(degree >= 1, "Unsupported", "extension degree must be positive");
  EtaleAlgebra a;
  a.base_ = base;
  EtaleComponent<GFElem> c;
  c.degree = degree;
  c.field = degree == 1 ? base : GFField::canonical(base->p(), base->degree() * degree);
  c.embed_base = GFEmbedding::find(base, c.field);
  a.comps_.push_back(c);
  a.rank_ = degree;
  return a;
}

template <>
inline EtaleAlgebra<GFElem> EtaleAlgebra<GFElem>::single_field(const Field& base, const Field& ext) {
  require(ext->p() == base->p() && ext->degree() % base->degree() == 0, "Unsupported",
          "component is not an extension of the base");
  EtaleAlgebra a;
  a.base_ = base;
  EtaleComponent<GFElem> c;
  c.degree = ext->degree() / base->degree();
  c.field = ext;
  c.embed_base = GFEmbedding::find(base, ext);
  a.comps_.push_back(c);
  a.rank_ = c.degree;
  return a;
}

template <>
inline GFElem EtaleAlgebra<GFElem>::comp_from_int(int i, long long n) const {
  return ScalarTraits<GFElem>::from_int(comps_[static_cast<std::size_t>(i)].field, n);
}

template <>
inline GFElem EtaleAlgebra<GFElem>::embed(int i, const GFElem& v) const {
  const auto& c = comps_[static_cast<std::size_t>(i)];
  GFElem b = v.in(base_);
  return GFElem(c.field, c.embed_base.apply(b.index()));
}

template <>
inline GFElem EtaleAlgebra<GFElem>::comp_frobenius(int i, const GFElem& v, int power) const {
  const auto& c = comps_[static_cast<std::size_t>(i)];
  GFElem x = v.in(c.field);
  long long qbase = base_->size();
  long long r = x.index();
  int d = c.degree;
  int e = ((power % d) + d) % d;
  for (int j = 0; j < e; ++j) r = c.field->pow(r, qbase);
  return GFElem(c.field, r);
}

template <>
inline GFElem EtaleAlgebra<GFElem>::comp_norm(int i, const GFElem& v) const {
  const auto& c = comps_[static_cast<std::size_t>(i)];
  GFElem x = v.in(c.field);
  GFElem acc = ScalarTraits<GFElem>::from_int(c.field, 1);
  for (int j = 0; j < c.degree; ++j) acc = acc * comp_frobenius(i, x, j);
  auto pre = c.embed_base.preimage(acc.index());
  require(pre.has_value(), "IncompatibleFields", "norm did not land in the base field");
  return GFElem(base_, *pre);
}

template <>
inline GFElem EtaleAlgebra<GFElem>::comp_trace(int i, const GFElem& v) const {
  const auto& c = comps_[static_cast<std::size_t>(i)];
  GFElem x = v.in(c.field);
  GFElem acc = ScalarTraits<GFElem>::from_int(c.field, 0);
  for (int j = 0; j < c.degree; ++j) acc = acc + comp_frobenius(i, x, j);
  auto pre = c.embed_base.preimage(acc.index());
  require(pre.has_value(), "IncompatibleFields", "trace did not land in the base field");
  return GFElem(base_, *pre);
}

template <>
inline GFElem EtaleAlgebra<GFElem>::comp_random(int i, Rng& rng) const {
  return ScalarTraits<GFElem>::random(comps_[static_cast<std::size_t>(i)].field, rng);
}

template <>
inline GFElem EtaleAlgebra<GFElem>::second_symmetric(const Elem& x) const {
  require(rank_ == 3, "RankMismatch", "second_symmetric needs rank 3");
  // sum over unordered pairs of distinct conjugates, grouped by component
  GFElem total = ScalarTraits<GFElem>::from_int(base_, 0);
  std::vector<GFElem> traces;  // per component, in base
  for (int i = 0; i < components(); ++i) {
    const auto& c = comps_[static_cast<std::size_t>(i)];
    const GFElem& v = x.coords[static_cast<std::size_t>(i)];
    // within-component pairs
    GFElem within = ScalarTraits<GFElem>::from_int(c.field, 0);
    for (int a = 0; a < c.degree; ++a)
      for (int b = a + 1; b < c.degree; ++b)
        within = within + comp_frobenius(i, v, a) * comp_frobenius(i, v, b);
    auto pre = c.embed_base.preimage(within.in(c.field).index());
    require(pre.has_value(), "IncompatibleFields", "symmetric function not in base");
    total = total + GFElem(base_, *pre);
    traces.push_back(comp_trace(i, v));
  }
  for (std::size_t i = 0; i < traces.size(); ++i)
    for (std::size_t j = i + 1; j < traces.size(); ++j) total = total + traces[i] * traces[j];
  return total;
}

template <>
inline std::vector<EtaleAlgebra<GFElem>::Aut> EtaleAlgebra<GFElem>::automorphisms() const {
  std::vector<Aut> out;
  if (is_split()) {
    std::vector<int> perm(comps_.size());
    std::iota(perm.begin(), perm.end(), 0);
    do {
      Aut a;
      a.perm = perm;
      a.frob.assign(perm.size(), 0);
      out.push_back(a);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
  }
  if (components() == 1) {
    for (int j = 0; j < comps_[0].degree; ++j) {
      Aut a;
      a.perm = {0};
      a.frob = {j};
      out.push_back(a);
    }
    return out;
  }
  fail("Unsupported", "automorphisms of mixed non-split products are out of scope");
}

}  // namespace algver
