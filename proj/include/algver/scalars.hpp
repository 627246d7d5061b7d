#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <Eigen/Core>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "algver/error.hpp"
#include "algver/rng.hpp"

namespace algver {

// ---------------------------------------------------------------------------
// Rat: exact rational scalar. Thin wrapper so generic code sees a plain value
// type with no expression templates leaking through `auto`.
// ---------------------------------------------------------------------------
class Rat {
 public:
  using Backend = boost::multiprecision::cpp_rational;

  Rat() : v_(0) {}
  Rat(long long n) : v_(n) {}  // NOLINT: implicit by design, mirrors field literals
  Rat(long long num, long long den) {
    require(den != 0, "DivisionByZero", "rational with zero denominator");
    v_ = Backend(num, den);
  }
  explicit Rat(Backend b) : v_(std::move(b)) {}

  bool is_zero() const { return v_.is_zero(); }

  Rat inverse() const {
    require(!is_zero(), "DivisionByZero", "inverse of rational zero");
    return Rat(Backend(1) / v_);
  }

  Rat operator-() const { return Rat(Backend(-v_)); }
  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o) {
    require(!o.is_zero(), "DivisionByZero", "rational division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }

  const Backend& value() const { return v_; }

  std::string str() const { return v_.str(); }
  friend std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.v_; }

 private:
  Backend v_;
};

// ---------------------------------------------------------------------------
// GFField: GF(p^k) with an explicit monic irreducible modulus over GF(p).
// Instances are interned and immortal, so elements can hold raw pointers.
// Elements are indices in [0, q); the base-p digits of the index are the
// coefficients of the representing polynomial (little-endian in u).
// ---------------------------------------------------------------------------
class GFField {
 public:
  static const GFField* prime_field(long long p);
  // modulus: coefficients c0..ck with ck == 1, irreducible over GF(p).
  static const GFField* extension(long long p, const std::vector<long long>& modulus);
  // lexicographically least monic irreducible modulus of degree k
  static const GFField* canonical(long long p, int k);

  long long p() const { return p_; }
  int degree() const { return k_; }
  long long size() const { return q_; }
  const std::vector<long long>& modulus() const { return modulus_; }

  long long add(long long a, long long b) const;
  long long neg(long long a) const;
  long long sub(long long a, long long b) const { return add(a, neg(b)); }
  long long mul(long long a, long long b) const;
  long long inv(long long a) const;
  long long pow(long long a, long long e) const;
  long long frobenius(long long a) const { return pow(a, p_); }
  long long from_int(long long n) const;

  std::string to_string(long long a) const;
  std::string descriptor() const;  // "gf(7)" or "gf(3^2;u^2+1)"

  std::vector<long long> digits(long long a) const;
  long long from_digits(const std::vector<long long>& d) const;

 private:
  GFField(long long p, std::vector<long long> modulus);
  long long mul_raw(long long a, long long b) const;

  long long p_;
  int k_;
  long long q_;
  std::vector<long long> modulus_;
  std::vector<std::int32_t> mul_table_;  // only for small q
  std::vector<std::int32_t> inv_table_;
};

// Subfield embedding src -> dst, found by locating a root of src's modulus in
// dst (deterministically the least one).
class GFEmbedding {
 public:
  static GFEmbedding find(const GFField* src, const GFField* dst);
  static GFEmbedding identity(const GFField* f);

  const GFField* src() const { return src_; }
  const GFField* dst() const { return dst_; }
  long long apply(long long a) const { return fwd_[static_cast<std::size_t>(a)]; }
  std::optional<long long> preimage(long long b) const;

 private:
  const GFField* src_ = nullptr;
  const GFField* dst_ = nullptr;
  std::vector<long long> fwd_;
};

// ---------------------------------------------------------------------------
// GFElem: element of an interned GFField, or a field-free integer literal
// (null parent). Literals coerce into whichever field they meet, which is
// what lets Eigen default-construct and setZero() matrices of GFElem.
// ---------------------------------------------------------------------------
class GFElem {
 public:
  GFElem() : f_(nullptr), v_(0) {}
  GFElem(long long n) : f_(nullptr), v_(n) {}  // NOLINT: literal
  GFElem(const GFField* f, long long index) : f_(f), v_(index) {}

  const GFField* field() const { return f_; }
  long long index() const { return v_; }
  bool is_literal() const { return f_ == nullptr; }

  bool is_zero() const { return f_ ? v_ == 0 : v_ == 0; }

  GFElem inverse() const;
  GFElem operator-() const;

  friend GFElem operator+(const GFElem& a, const GFElem& b);
  friend GFElem operator-(const GFElem& a, const GFElem& b);
  friend GFElem operator*(const GFElem& a, const GFElem& b);
  friend GFElem operator/(const GFElem& a, const GFElem& b);
  GFElem& operator+=(const GFElem& o) { return *this = *this + o; }
  GFElem& operator-=(const GFElem& o) { return *this = *this - o; }
  GFElem& operator*=(const GFElem& o) { return *this = *this * o; }
  GFElem& operator/=(const GFElem& o) { return *this = *this / o; }

  friend bool operator==(const GFElem& a, const GFElem& b);
  friend bool operator!=(const GFElem& a, const GFElem& b) { return !(a == b); }

  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const GFElem& x);

  // Resolves a literal against a field; no-op for matching parents.
  GFElem in(const GFField* f) const;

 private:
  const GFField* f_;
  long long v_;
};

// Unifies the two operand parents, coercing literals.
const GFField* unify_fields(const GFElem& a, const GFElem& b);

// ---------------------------------------------------------------------------
// Scalar traits: the handle generic code carries for "the field of K".
// ---------------------------------------------------------------------------
struct RatField {
  friend bool operator==(const RatField&, const RatField&) { return true; }
};

template <class K>
struct ScalarTraits;

template <>
struct ScalarTraits<Rat> {
  using Field = RatField;
  static Rat from_int(const Field&, long long n) { return Rat(n); }
  static long long characteristic(const Field&) { return 0; }
  static bool finite(const Field&) { return false; }
  static long long size(const Field&) { return 0; }
  static Rat element(const Field&, long long i) {
    fail("Unsupported", "cannot enumerate rationals");
    return Rat(i);
  }
  // desk-scale random rational: small numerator and denominator
  static Rat random(const Field&, Rng& rng) {
    return Rat(rng.range(-9, 9), rng.range(1, 9));
  }
  static std::string describe(const Field&) { return "Q"; }
  static bool same(const Field&, const Field&) { return true; }
};

template <>
struct ScalarTraits<GFElem> {
  using Field = const GFField*;
  static GFElem from_int(const Field& f, long long n) { return GFElem(f, f->from_int(n)); }
  static long long characteristic(const Field& f) { return f->p(); }
  static bool finite(const Field&) { return true; }
  static long long size(const Field& f) { return f->size(); }
  static GFElem element(const Field& f, long long i) { return GFElem(f, i); }
  static GFElem random(const Field& f, Rng& rng) {
    return GFElem(f, static_cast<long long>(rng.below(static_cast<std::uint64_t>(f->size()))));
  }
  static std::string describe(const Field& f) { return f->descriptor(); }
  static bool same(const Field& a, const Field& b) { return a == b; }
};

template <class K>
using FieldOf = typename ScalarTraits<K>::Field;

// ---------------------------------------------------------------------------
// Descriptor parsing: "Q", "gf(7)", "gf(3^2;u^2+1)", "split(gf(5),3)".
// ---------------------------------------------------------------------------
struct FieldDesc {
  bool rationals = false;
  long long p = 0;
  int k = 1;
  std::vector<long long> modulus;  // empty: canonical
  std::string str() const;
};

struct SplitEtaleDesc {
  FieldDesc base;
  int copies = 1;
};

using DomainDesc = std::variant<FieldDesc, SplitEtaleDesc>;

FieldDesc parse_field_desc(const std::string& s);
DomainDesc parse_domain_desc(const std::string& s);
const GFField* realize(const FieldDesc& d);  // requires !d.rationals

// Modulus polynomial text, e.g. "u^2+1" or "x^3+2*x+1".
std::vector<long long> parse_poly(const std::string& s, long long p);

template <class K>
using Vec = Eigen::Matrix<K, Eigen::Dynamic, 1>;
template <class K>
using Mat = Eigen::Matrix<K, Eigen::Dynamic, Eigen::Dynamic>;

template <class K>
std::string vec_str(const Vec<K>& v) {
  std::ostringstream os;
  os << "[";
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i) os << ",";
    os << v[i];
  }
  os << "]";
  return os.str();
}

}  // namespace algver

namespace Eigen {

template <>
struct NumTraits<algver::Rat> {
  using Real = algver::Rat;
  using NonInteger = algver::Rat;
  using Literal = long long;
  using Nested = algver::Rat;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 2,
    AddCost = 6,
    MulCost = 8,
  };
  static inline Real epsilon() { return algver::Rat(0); }
  static inline Real dummy_precision() { return algver::Rat(0); }
  static inline int digits10() { return 0; }
};

template <>
struct NumTraits<algver::GFElem> {
  using Real = algver::GFElem;
  using NonInteger = algver::GFElem;
  using Literal = long long;
  using Nested = algver::GFElem;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 2,
    MulCost = 3,
  };
  static inline Real epsilon() { return algver::GFElem(0); }
  static inline Real dummy_precision() { return algver::GFElem(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
