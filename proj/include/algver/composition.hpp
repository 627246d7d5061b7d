#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "algver/etale.hpp"
#include "algver/scalars.hpp"

namespace algver {

// Cayley-Dickson composition algebra of dimension 2^k, k <= 3, over an exact
// base field. Elements are coordinate vectors; multiplication recurses through
// the doubling levels with parameters gamma_1..gamma_k:
//   (a,b)(c,d) = (ac + gamma * conj(d) b, da + b conj(c)).
template <class K>
class CompositionAlgebra {
 public:
  using Field = FieldOf<K>;

  static CompositionAlgebra ground(const Field& base) {
    CompositionAlgebra c;
    c.base_ = base;
    c.dim_ = 1;
    return c;
  }

  static CompositionAlgebra cayley_dickson(const Field& base, const std::vector<K>& gammas) {
    CompositionAlgebra c = ground(base);
    for (const K& g : gammas) c = c.doubled(g);
    return c;
  }

  CompositionAlgebra doubled(const K& gamma) const {
    require(dim_ < 8, "DimensionLimit", "doubling an 8-dimensional composition algebra");
    require(!gamma.is_zero(), "Unsupported", "doubling parameter must be nonzero");
    CompositionAlgebra c(*this);
    c.gammas_.push_back(gamma);
    c.dim_ *= 2;
    return c;
  }

  const Field& base() const { return base_; }
  int dim() const { return dim_; }
  const std::vector<K>& gammas() const { return gammas_; }

  bool same(const CompositionAlgebra& o) const {
    if (!ScalarTraits<K>::same(base_, o.base_) || dim_ != o.dim_) return false;
    for (std::size_t i = 0; i < gammas_.size(); ++i)
      if (gammas_[i] != o.gammas_[i]) return false;
    return true;
  }

  Vec<K> zero() const { return from_scalar(scalar(0)); }

  Vec<K> one() const { return from_scalar(scalar(1)); }

  Vec<K> from_scalar(const K& s) const {
    Vec<K> v(dim_);
    for (int i = 0; i < dim_; ++i) v[i] = scalar(0);
    v[0] = s;
    return v;
  }

  K scalar(long long n) const { return ScalarTraits<K>::from_int(base_, n); }

  Vec<K> mul(const Vec<K>& x, const Vec<K>& y) const {
    check(x);
    check(y);
    return mul_seg(x, 0, y, 0, dim_);
  }

  Vec<K> conj(const Vec<K>& x) const {
    check(x);
    Vec<K> r = x;
    for (int i = 1; i < dim_; ++i) r[i] = -r[i];
    return r;
  }

  // N(x) with x conj(x) = N(x) * 1; computed by the doubling recursion
  // N(a,b) = N(a) - gamma N(b).
  K norm(const Vec<K>& x) const {
    check(x);
    return norm_seg(x, 0, dim_);
  }

  K trace(const Vec<K>& x) const {
    check(x);
    return scalar(2) * x[0];
  }

  // polarized norm form N(x+y) - N(x) - N(y)
  K norm_bilinear(const Vec<K>& x, const Vec<K>& y) const {
    return norm(x + y) - norm(x) - norm(y);
  }

  Vec<K> random(Rng& rng) const {
    Vec<K> v(dim_);
    for (int i = 0; i < dim_; ++i) v[i] = ScalarTraits<K>::random(base_, rng);
    return v;
  }

  Vec<K> element(long long code) const {  // enumeration for finite bases
    Vec<K> v(dim_);
    long long q = ScalarTraits<K>::size(base_);
    for (int i = 0; i < dim_; ++i) {
      v[i] = ScalarTraits<K>::element(base_, code % q);
      code /= q;
    }
    return v;
  }

  long long carrier_size() const {
    if (!ScalarTraits<K>::finite(base_)) return 0;
    long long q = ScalarTraits<K>::size(base_);
    long long n = 1;
    for (int i = 0; i < dim_; ++i) n *= q;
    return n;
  }

  std::string descriptor() const {
    std::string s = "cd(" + ScalarTraits<K>::describe(base_);
    for (std::size_t i = 0; i < gammas_.size(); ++i)
      s += (i == 0 ? ";" : ",") + gammas_[i].str();
    return s + ")";
  }

 private:
  void check(const Vec<K>& x) const {
    require(static_cast<int>(x.size()) == dim_, "IncompatibleAlgebras",
            "element has wrong coordinate length");
  }

  Vec<K> mul_seg(const Vec<K>& x, int xo, const Vec<K>& y, int yo, int n) const {
    Vec<K> out(n);
    if (n == 1) {
      out[0] = x[xo] * y[yo];
      return out;
    }
    int h = n / 2;
    const K& g = gammas_[static_cast<std::size_t>(level_of(n))];
    // segments: x = (a,b), y = (c,d)
    Vec<K> cbar = conj_seg(y, yo, h);
    Vec<K> dbar = conj_seg(y, yo + h, h);
    Vec<K> ac = mul_seg(x, xo, y, yo, h);
    Vec<K> db_bar = mul_seg(dbar, 0, x, xo + h, h);  // conj(d) * b
    Vec<K> da = mul_seg(y, yo + h, x, xo, h);        // d * a
    Vec<K> bc_bar = mul_seg(x, xo + h, cbar, 0, h);  // b * conj(c)
    for (int i = 0; i < h; ++i) {
      out[i] = ac[i] + g * db_bar[i];
      out[h + i] = da[i] + bc_bar[i];
    }
    return out;
  }

  Vec<K> conj_seg(const Vec<K>& x, int xo, int n) const {
    Vec<K> r(n);
    for (int i = 0; i < n; ++i) r[i] = i == 0 ? x[xo] : -x[xo + i];
    return r;
  }

  K norm_seg(const Vec<K>& x, int xo, int n) const {
    if (n == 1) return x[xo] * x[xo];
    int h = n / 2;
    const K& g = gammas_[static_cast<std::size_t>(level_of(n))];
    return norm_seg(x, xo, h) - g * norm_seg(x, xo + h, h);
  }

  static int level_of(int n) {
    int lvl = 0;
    while ((1 << (lvl + 1)) < n) ++lvl;
    return lvl;  // gamma index for splitting dimension n
  }

  Field base_{};
  std::vector<K> gammas_;
  int dim_ = 1;
};

namespace detail {

struct CdParts {
  std::string base;
  std::vector<std::pair<long long, long long>> gammas;  // num/den
};

// "cd(gf(7);1,1,1)" or "cd(Q;-1,1/2)"
inline CdParts split_cd(const std::string& s) {
  require(s.rfind("cd(", 0) == 0 && s.back() == ')', "ConfigError",
          "bad composition-algebra descriptor: " + s);
  std::string body = s.substr(3, s.size() - 4);
  auto semi = body.find(';');
  CdParts parts;
  parts.base = semi == std::string::npos ? body : body.substr(0, semi);
  if (semi != std::string::npos) {
    std::string rest = body.substr(semi + 1);
    std::size_t pos = 0;
    while (pos <= rest.size()) {
      auto comma = rest.find(',', pos);
      std::string tok = rest.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
      require(!tok.empty(), "ConfigError", "empty gamma in: " + s);
      long long num = 0, den = 1;
      auto slash = tok.find('/');
      try {
        if (slash == std::string::npos) {
          num = std::stoll(tok);
        } else {
          num = std::stoll(tok.substr(0, slash));
          den = std::stoll(tok.substr(slash + 1));
        }
      } catch (const std::exception&) {
        fail("ConfigError", "bad gamma '" + tok + "' in: " + s);
      }
      parts.gammas.emplace_back(num, den);
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
  }
  require(parts.gammas.size() <= 3, "ConfigError", "too many doubling parameters in: " + s);
  return parts;
}

}  // namespace detail

// Serialized form "cd(gf(7);1,1,1)"; the base must match the scalar type.
inline CompositionAlgebra<GFElem> parse_composition_gf(const std::string& s) {
  auto parts = detail::split_cd(s);
  const GFField* f = realize(parse_field_desc(parts.base));
  std::vector<GFElem> gammas;
  for (auto [num, den] : parts.gammas) {
    require(den % f->p() != 0, "ConfigError", "gamma denominator vanishes in " + s);
    gammas.push_back(ScalarTraits<GFElem>::from_int(f, num) /
                     ScalarTraits<GFElem>::from_int(f, den));
  }
  return CompositionAlgebra<GFElem>::cayley_dickson(f, gammas);
}

inline CompositionAlgebra<Rat> parse_composition_rat(const std::string& s) {
  auto parts = detail::split_cd(s);
  require(parse_field_desc(parts.base).rationals, "ConfigError",
          "expected rational base in: " + s);
  std::vector<Rat> gammas;
  for (auto [num, den] : parts.gammas) gammas.emplace_back(num, den);
  return CompositionAlgebra<Rat>::cayley_dickson(RatField{}, gammas);
}

// ---------------------------------------------------------------------------
// Property checks. All throw Error("PropertyViolation", witness) on failure.
// ---------------------------------------------------------------------------

template <class K>
bool vec_eq(const Vec<K>& a, const Vec<K>& b) {
  if (a.size() != b.size()) return false;
  for (Eigen::Index i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return false;
  return true;
}

template <class K>
using MulFn = std::function<Vec<K>(const Vec<K>&, const Vec<K>&)>;

struct CheckStats {
  long long samples = 0;
  bool exhaustive = false;
};

namespace detail {
constexpr long long kExhaustivePairBound = 200000;
}

// Composition-algebra law suite: multiplicativity of the norm, alternativity,
// conjugation anti-automorphism, and x conj(x) = N(x) 1. Exhausts all (x, y)
// pairs when the carrier is small, otherwise samples.
template <class K>
CheckStats check_composition(const CompositionAlgebra<K>& c, long long trials, Rng& rng,
                             const MulFn<K>* mul_override = nullptr) {
  require(trials >= 1, "ConfigError", "check_composition needs trials >= 1");
  auto mul = [&](const Vec<K>& x, const Vec<K>& y) {
    return mul_override ? (*mul_override)(x, y) : c.mul(x, y);
  };
  auto witness = [&](const char* law, const Vec<K>& x, const Vec<K>& y) {
    return std::string(law) + " fails in " + c.descriptor() + " at x=" + vec_str(x) +
           ", y=" + vec_str(y);
  };
  auto laws = [&](const Vec<K>& x, const Vec<K>& y) {
    Vec<K> xy = mul(x, y);
    if (c.norm(xy) != c.norm(x) * c.norm(y))
      fail("PropertyViolation", witness("N(xy)=N(x)N(y)", x, y));
    Vec<K> xx = mul(x, x);
    if (!vec_eq<K>(mul(x, xy), mul(xx, y)))
      fail("PropertyViolation", witness("x(xy)=(xx)y", x, y));
    Vec<K> yx = mul(y, x);
    if (!vec_eq<K>(mul(yx, x), mul(y, xx)))
      fail("PropertyViolation", witness("(yx)x=y(xx)", x, y));
    if (!vec_eq<K>(c.conj(xy), mul(c.conj(y), c.conj(x))))
      fail("PropertyViolation", witness("conj(xy)=conj(y)conj(x)", x, y));
    if (!vec_eq<K>(mul(x, c.conj(x)), c.from_scalar(c.norm(x))))
      fail("PropertyViolation", witness("x conj(x) = N(x) 1", x, y));
  };
  CheckStats st;
  long long size = c.carrier_size();
  if (size > 0 && size * size <= detail::kExhaustivePairBound) {
    st.exhaustive = true;
    for (long long i = 0; i < size; ++i)
      for (long long j = 0; j < size; ++j) {
        laws(c.element(i), c.element(j));
        ++st.samples;
      }
    return st;
  }
  for (long long t = 0; t < trials; ++t) {
    laws(c.random(rng), c.random(rng));
    ++st.samples;
  }
  return st;
}

// rank-2 identity x^2 - T(x) x + N(x) 1 = 0
template <class K>
CheckStats check_rank_identity(const CompositionAlgebra<K>& c, long long trials, Rng& rng) {
  CheckStats st;
  for (long long t = 0; t < trials; ++t) {
    Vec<K> x = c.random(rng);
    Vec<K> lhs = c.mul(x, x) - c.trace(x) * x + c.from_scalar(c.norm(x));
    if (!vec_eq<K>(lhs, c.zero()))
      fail("PropertyViolation",
           "x^2 - T(x)x + N(x)1 != 0 in " + c.descriptor() + " at x=" + vec_str(x));
    ++st.samples;
  }
  return st;
}

// ---------------------------------------------------------------------------
// Twisted composition over split cubic E = F^3: V = C^3 with
//   Q(v) = (N(v1), N(v2), N(v3)) in E,   beta(v) = (conj(v2)conj(v3), ...).
// ---------------------------------------------------------------------------
template <class K>
class TwistedComposition {
 public:
  using Field = FieldOf<K>;

  TwistedComposition(CompositionAlgebra<K> c, EtaleAlgebra<K> e)
      : c_(std::move(c)), e_(std::move(e)) {
    require(e_.rank() == 3 && e_.is_split(), "Unsupported",
            "twisted compositions need split cubic E = F^3");
    require(ScalarTraits<K>::same(c_.base(), e_.base()), "IncompatibleFields",
            "C and E must share the base field");
  }

  static TwistedComposition from_tensor(const CompositionAlgebra<K>& c) {
    return TwistedComposition(c, EtaleAlgebra<K>::split(c.base(), 3));
  }

  const CompositionAlgebra<K>& comp() const { return c_; }
  const EtaleAlgebra<K>& etale() const { return e_; }
  int vdim() const { return 3 * c_.dim(); }  // over F; dim_E = dim C

  Vec<K> slot(const Vec<K>& v, int i) const {
    return v.segment(i * c_.dim(), c_.dim());
  }

  Vec<K> glue(const Vec<K>& a, const Vec<K>& b, const Vec<K>& c) const {
    Vec<K> v(vdim());
    v.segment(0, c_.dim()) = a;
    v.segment(c_.dim(), c_.dim()) = b;
    v.segment(2 * c_.dim(), c_.dim()) = c;
    return v;
  }

  EtaleElem<K> q_map(const Vec<K>& v) const {
    return e_.make({c_.norm(slot(v, 0)), c_.norm(slot(v, 1)), c_.norm(slot(v, 2))});
  }

  Vec<K> beta(const Vec<K>& v) const {
    Vec<K> c0 = c_.conj(slot(v, 0));
    Vec<K> c1 = c_.conj(slot(v, 1));
    Vec<K> c2 = c_.conj(slot(v, 2));
    return glue(c_.mul(c1, c2), c_.mul(c2, c0), c_.mul(c0, c1));
  }

  EtaleElem<K> bq(const Vec<K>& v, const Vec<K>& w) const {
    std::vector<K> comps;
    for (int i = 0; i < 3; ++i) comps.push_back(c_.norm_bilinear(slot(v, i), slot(w, i)));
    return e_.make(std::move(comps));
  }

  // b_Q(v, beta(v)) read as a base scalar when diagonal
  std::optional<K> diagonal_scalar(const EtaleElem<K>& e) const {
    for (int i = 1; i < 3; ++i)
      if (e.coords[static_cast<std::size_t>(i)] != e.coords[0]) return std::nullopt;
    return e.coords[0];
  }

  K norm(const Vec<K>& v) const {
    auto d = diagonal_scalar(bq(v, beta(v)));
    require(d.has_value(), "PropertyViolation", "b_Q(v, beta(v)) is not diagonal");
    return *d;
  }

  // componentwise E-action on V = C^3
  Vec<K> e_act(const EtaleElem<K>& e, const Vec<K>& v) const {
    Vec<K> out(vdim());
    for (int i = 0; i < 3; ++i)
      out.segment(i * c_.dim(), c_.dim()) =
          slot(v, i) * e.coords[static_cast<std::size_t>(i)];
    return out;
  }

  Vec<K> random(Rng& rng) const {
    Vec<K> v(vdim());
    for (int i = 0; i < vdim(); ++i) v[i] = ScalarTraits<K>::random(c_.base(), rng);
    return v;
  }

 private:
  CompositionAlgebra<K> c_;
  EtaleAlgebra<K> e_;
};

template <class K>
using BetaFn = std::function<Vec<K>(const Vec<K>&)>;

// Twisted-composition laws: Q(beta(v)) = Q(v)^#, b_Q(v, beta(v)) diagonal, and
// the Springer-compatible square identity beta(beta(v)) = N(v) v - Q(v) beta(v).
template <class K>
CheckStats check_twisted(const TwistedComposition<K>& tc, long long trials, Rng& rng,
                         const BetaFn<K>* beta_override = nullptr) {
  require(trials >= 1, "ConfigError", "check_twisted needs trials >= 1");
  auto beta = [&](const Vec<K>& v) {
    return beta_override ? (*beta_override)(v) : tc.beta(v);
  };
  CheckStats st;
  const auto& e = tc.etale();
  for (long long t = 0; t < trials; ++t) {
    Vec<K> v = tc.random(rng);
    Vec<K> bv = beta(v);
    auto qb = tc.q_map(bv);
    auto qs = e.sharp(tc.q_map(v));
    if (!e.eq(qb, qs))
      fail("PropertyViolation", "Q(beta(v)) != Q(v)^# at v=" + vec_str(v));
    auto pairing = tc.bq(v, bv);
    auto diag = tc.diagonal_scalar(pairing);
    if (!diag.has_value())
      fail("PropertyViolation", "b_Q(v, beta(v)) not in F*(1,1,1) at v=" + vec_str(v));
    Vec<K> lhs = beta(bv);
    Vec<K> rhs = *diag * v - tc.e_act(tc.q_map(v), bv);
    if (!vec_eq<K>(lhs, rhs))
      fail("PropertyViolation",
           "beta(beta(v)) != N(v) v - Q(v) beta(v) at v=" + vec_str(v));
    ++st.samples;
  }
  return st;
}

}  // namespace algver
