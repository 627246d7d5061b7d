#include "algver/scalars.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <ostream>

namespace algver {
namespace {

constexpr long long kMaxFieldSize = 1 << 16;
constexpr long long kMulTableLimit = 1024;  // q*q int32 entries

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

long long mod(long long a, long long p) {
  long long r = a % p;
  return r < 0 ? r + p : r;
}

// dense polynomial arithmetic over GF(p), little-endian coefficients
using Poly = std::vector<long long>;

Poly poly_trim(Poly a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, long long p) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = mod(c[i + j] + a[i] * b[j], p);
  // reduce by monic f
  std::size_t k = f.size() - 1;
  for (std::size_t i = c.size(); i-- > k;) {
    long long lead = c[i];
    if (lead == 0) continue;
    for (std::size_t j = 0; j < k; ++j) c[i - k + j] = mod(c[i - k + j] - lead * f[j], p);
    c[i] = 0;
  }
  c.resize(k);
  return poly_trim(c);
}

Poly poly_powmod(Poly base, boost::multiprecision::cpp_int e, const Poly& f, long long p) {
  Poly r = {1};
  while (e > 0) {
    if ((e & 1) != 0) r = poly_mulmod(r, base, f, p);
    base = poly_mulmod(base, base, f, p);
    e >>= 1;
  }
  return r;
}

Poly poly_gcd(Poly a, Poly b, long long p) {
  a = poly_trim(std::move(a));
  b = poly_trim(std::move(b));
  while (!b.empty()) {
    // a mod b with b made monic
    long long lead_inv = 1;
    {  // inverse of b.back() mod p
      long long x = b.back(), acc = 1, e = p - 2;
      while (e) {
        if (e & 1) acc = mod(acc * x, p);
        x = mod(x * x, p);
        e >>= 1;
      }
      lead_inv = acc;
    }
    Poly r = a;
    while (r.size() >= b.size()) {
      long long coef = mod(r.back() * lead_inv, p);
      if (coef != 0) {
        std::size_t shift = r.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i)
          r[shift + i] = mod(r[shift + i] - coef * b[i], p);
      }
      r = poly_trim(std::move(r));
      if (r.size() < b.size()) break;
      if (!r.empty() && r.size() >= b.size() && mod(r.back(), p) == 0) r = poly_trim(std::move(r));
    }
    a = b;
    b = poly_trim(std::move(r));
  }
  return a;
}

// Rabin irreducibility test for monic f of degree k over GF(p).
bool poly_irreducible(const Poly& f, long long p) {
  int k = static_cast<int>(f.size()) - 1;
  if (k < 1) return false;
  if (k == 1) return true;
  using boost::multiprecision::cpp_int;
  cpp_int pk = boost::multiprecision::pow(cpp_int(p), static_cast<unsigned>(k));
  Poly x = {0, 1};
  // x^{p^k} == x mod f
  Poly xp = poly_powmod(x, pk, f, p);
  Poly diff = xp;
  diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
  diff[1] = mod(diff[1] - 1, p);
  if (!poly_trim(diff).empty()) return false;
  // gcd(x^{p^{k/r}} - x, f) == 1 for prime divisors r of k
  for (int r = 2; r <= k; ++r) {
    if (k % r != 0 || !is_prime(r)) continue;
    cpp_int e = boost::multiprecision::pow(cpp_int(p), static_cast<unsigned>(k / r));
    Poly xe = poly_powmod(x, e, f, p);
    Poly d = xe;
    d.resize(std::max<std::size_t>(d.size(), 2), 0);
    d[1] = mod(d[1] - 1, p);
    Poly g = poly_gcd(poly_trim(d), f, p);
    if (g.size() > 1) return false;
  }
  return true;
}

struct FieldKey {
  long long p;
  std::vector<long long> modulus;
  bool operator<(const FieldKey& o) const {
    return std::tie(p, modulus) < std::tie(o.p, o.modulus);
  }
};

std::map<FieldKey, std::unique_ptr<GFField>>& registry() {
  static auto* r = new std::map<FieldKey, std::unique_ptr<GFField>>();
  return *r;
}

std::mutex& registry_mutex() {
  static auto* m = new std::mutex();
  return *m;
}

}  // namespace

GFField::GFField(long long p, std::vector<long long> modulus)
    : p_(p), k_(static_cast<int>(modulus.size()) - 1), modulus_(std::move(modulus)) {
  q_ = 1;
  for (int i = 0; i < k_; ++i) {
    q_ *= p_;
    require(q_ <= kMaxFieldSize, "SizeBound", "field size exceeds desk-scale bound");
  }
  if (q_ <= kMulTableLimit) {
    mul_table_.assign(static_cast<std::size_t>(q_ * q_), 0);
    for (long long a = 0; a < q_; ++a)
      for (long long b = a; b < q_; ++b) {
        auto v = static_cast<std::int32_t>(mul_raw(a, b));
        mul_table_[static_cast<std::size_t>(a * q_ + b)] = v;
        mul_table_[static_cast<std::size_t>(b * q_ + a)] = v;
      }
  }
  inv_table_.assign(static_cast<std::size_t>(q_), 0);
  for (long long a = 1; a < q_; ++a)
    inv_table_[static_cast<std::size_t>(a)] = static_cast<std::int32_t>(pow(a, q_ - 2));
}

const GFField* GFField::prime_field(long long p) {
  require(is_prime(p), "Unsupported", "characteristic must be prime: " + std::to_string(p));
  return extension(p, {0, 1});  // modulus u - 0: degree-1 "extension" is GF(p) itself
}

const GFField* GFField::extension(long long p, const std::vector<long long>& modulus_in) {
  require(is_prime(p), "Unsupported", "characteristic must be prime: " + std::to_string(p));
  std::vector<long long> modulus(modulus_in.size());
  for (std::size_t i = 0; i < modulus_in.size(); ++i) modulus[i] = mod(modulus_in[i], p);
  require(!modulus.empty() && modulus.back() == 1, "Unsupported", "modulus must be monic");
  if (modulus.size() > 2)
    require(poly_irreducible(modulus, p), "Unsupported",
            "modulus polynomial is reducible over GF(" + std::to_string(p) + ")");
  std::lock_guard<std::mutex> lock(registry_mutex());
  auto& slot = registry()[FieldKey{p, modulus}];
  if (!slot) slot.reset(new GFField(p, modulus));
  return slot.get();
}

const GFField* GFField::canonical(long long p, int k) {
  require(k >= 1, "Unsupported", "extension degree must be positive");
  if (k == 1) return prime_field(p);
  // least monic irreducible, scanning constant-first coefficient vectors
  long long total = 1;
  for (int i = 0; i < k; ++i) total *= p;
  for (long long code = 0; code < total; ++code) {
    std::vector<long long> f(static_cast<std::size_t>(k) + 1, 0);
    long long c = code;
    for (int i = 0; i < k; ++i) {
      f[static_cast<std::size_t>(i)] = c % p;
      c /= p;
    }
    f[static_cast<std::size_t>(k)] = 1;
    if (f[0] == 0) continue;
    if (poly_irreducible(f, p)) return extension(p, f);
  }
  fail("Unsupported", "no irreducible modulus found");
}

std::vector<long long> GFField::digits(long long a) const {
  std::vector<long long> d(static_cast<std::size_t>(k_), 0);
  for (int i = 0; i < k_; ++i) {
    d[static_cast<std::size_t>(i)] = a % p_;
    a /= p_;
  }
  return d;
}

long long GFField::from_digits(const std::vector<long long>& d) const {
  long long a = 0;
  for (int i = k_; i-- > 0;) a = a * p_ + mod(i < static_cast<int>(d.size()) ? d[static_cast<std::size_t>(i)] : 0, p_);
  return a;
}

long long GFField::add(long long a, long long b) const {
  if (k_ == 1) return mod(a + b, p_);
  long long r = 0, mult = 1;
  for (int i = 0; i < k_; ++i) {
    r += mod(a % p_ + b % p_, p_) * mult;
    a /= p_;
    b /= p_;
    mult *= p_;
  }
  return r;
}

long long GFField::neg(long long a) const {
  if (k_ == 1) return mod(-a, p_);
  long long r = 0, mult = 1;
  for (int i = 0; i < k_; ++i) {
    r += mod(-(a % p_), p_) * mult;
    a /= p_;
    mult *= p_;
  }
  return r;
}

long long GFField::mul_raw(long long a, long long b) const {
  if (k_ == 1) return mod(a * b, p_);
  Poly pa = digits(a), pb = digits(b);
  Poly c = poly_mulmod(poly_trim(pa), poly_trim(pb), modulus_, p_);
  return from_digits(c);
}

long long GFField::mul(long long a, long long b) const {
  if (!mul_table_.empty()) return mul_table_[static_cast<std::size_t>(a * q_ + b)];
  return mul_raw(a, b);
}

long long GFField::inv(long long a) const {
  require(a != 0, "DivisionByZero", "inverse of zero in " + descriptor());
  return inv_table_[static_cast<std::size_t>(a)];
}

long long GFField::pow(long long a, long long e) const {
  if (e < 0) {
    a = inv(a);
    e = -e;
  }
  long long r = from_int(1);
  while (e) {
    if (e & 1) r = mul_table_.empty() ? mul_raw(r, a) : mul(r, a);
    a = mul_table_.empty() ? mul_raw(a, a) : mul(a, a);
    e >>= 1;
  }
  return r;
}

long long GFField::from_int(long long n) const { return mod(n, p_); }

std::string GFField::to_string(long long a) const {
  if (k_ == 1) return std::to_string(a);
  Poly d = digits(a);
  std::string s;
  for (int i = 0; i < k_; ++i) {
    long long c = d[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    if (!s.empty()) s += "+";
    if (i == 0) {
      s += std::to_string(c);
    } else {
      if (c != 1) s += std::to_string(c) + "*";
      s += "u";
      if (i > 1) s += "^" + std::to_string(i);
    }
  }
  return s.empty() ? "0" : s;
}

std::string GFField::descriptor() const {
  if (k_ == 1) return "gf(" + std::to_string(p_) + ")";
  std::string m;
  for (int i = k_; i >= 0; --i) {
    long long c = modulus_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    if (!m.empty()) m += "+";
    if (i == 0) {
      m += std::to_string(c);
    } else {
      if (c != 1) m += std::to_string(c) + "*";
      m += "u";
      if (i > 1) m += "^" + std::to_string(i);
    }
  }
  return "gf(" + std::to_string(p_) + "^" + std::to_string(k_) + ";" + m + ")";
}

GFEmbedding GFEmbedding::identity(const GFField* f) {
  GFEmbedding e;
  e.src_ = f;
  e.dst_ = f;
  e.fwd_.resize(static_cast<std::size_t>(f->size()));
  for (long long a = 0; a < f->size(); ++a) e.fwd_[static_cast<std::size_t>(a)] = a;
  return e;
}

GFEmbedding GFEmbedding::find(const GFField* src, const GFField* dst) {
  if (src == dst) return identity(src);
  require(src->p() == dst->p(), "IncompatibleFields", "embedding across characteristics");
  require(dst->degree() % src->degree() == 0, "Unsupported",
          "no embedding " + src->descriptor() + " -> " + dst->descriptor());
  // least root of src's modulus inside dst
  const auto& f = src->modulus();
  long long root = -1;
  for (long long x = 0; x < dst->size(); ++x) {
    long long acc = 0, xp = dst->from_int(1);
    for (std::size_t i = 0; i < f.size(); ++i) {
      acc = dst->add(acc, dst->mul(dst->from_int(f[i]), xp));
      xp = dst->mul(xp, x);
    }
    if (acc == 0) {
      root = x;
      break;
    }
  }
  require(root >= 0, "Unsupported", "modulus has no root in target field");
  GFEmbedding e;
  e.src_ = src;
  e.dst_ = dst;
  e.fwd_.resize(static_cast<std::size_t>(src->size()));
  for (long long a = 0; a < src->size(); ++a) {
    auto d = src->digits(a);
    long long acc = 0, rp = dst->from_int(1);
    for (std::size_t i = 0; i < d.size(); ++i) {
      acc = dst->add(acc, dst->mul(dst->from_int(d[i]), rp));
      rp = dst->mul(rp, root);
    }
    e.fwd_[static_cast<std::size_t>(a)] = acc;
  }
  return e;
}

std::optional<long long> GFEmbedding::preimage(long long b) const {
  for (long long a = 0; a < src_->size(); ++a)
    if (fwd_[static_cast<std::size_t>(a)] == b) return a;
  return std::nullopt;
}

const GFField* unify_fields(const GFElem& a, const GFElem& b) {
  const GFField* fa = a.field();
  const GFField* fb = b.field();
  if (fa && fb) {
    require(fa == fb, "IncompatibleFields",
            "operands from " + fa->descriptor() + " and " + fb->descriptor());
    return fa;
  }
  return fa ? fa : fb;
}

GFElem GFElem::in(const GFField* f) const {
  if (f_ == f) return *this;
  if (f_ != nullptr)
    fail("IncompatibleFields",
         "cannot move element of " + f_->descriptor() + " into " + f->descriptor());
  return GFElem(f, f->from_int(v_));
}

GFElem GFElem::inverse() const {
  require(f_ != nullptr, "IncompatibleFields", "inverse of a field-free literal");
  return GFElem(f_, f_->inv(v_));
}

GFElem GFElem::operator-() const {
  if (!f_) return GFElem(-v_);
  return GFElem(f_, f_->neg(v_));
}

GFElem operator+(const GFElem& a, const GFElem& b) {
  const GFField* f = unify_fields(a, b);
  if (!f) return GFElem(a.v_ + b.v_);
  return GFElem(f, f->add(a.in(f).v_, b.in(f).v_));
}

GFElem operator-(const GFElem& a, const GFElem& b) {
  const GFField* f = unify_fields(a, b);
  if (!f) return GFElem(a.v_ - b.v_);
  return GFElem(f, f->sub(a.in(f).v_, b.in(f).v_));
}

GFElem operator*(const GFElem& a, const GFElem& b) {
  const GFField* f = unify_fields(a, b);
  if (!f) return GFElem(a.v_ * b.v_);
  return GFElem(f, f->mul(a.in(f).v_, b.in(f).v_));
}

GFElem operator/(const GFElem& a, const GFElem& b) {
  const GFField* f = unify_fields(a, b);
  require(f != nullptr, "IncompatibleFields", "division of field-free literals");
  return GFElem(f, f->mul(a.in(f).v_, f->inv(b.in(f).v_)));
}

bool operator==(const GFElem& a, const GFElem& b) {
  const GFField* f = unify_fields(a, b);
  if (!f) return a.v_ == b.v_;
  return a.in(f).v_ == b.in(f).v_;
}

std::string GFElem::str() const {
  if (!f_) return std::to_string(v_);
  return f_->to_string(v_);
}

std::ostream& operator<<(std::ostream& os, const GFElem& x) { return os << x.str(); }

// ---------------------------------------------------------------------------
// descriptor parsing
// ---------------------------------------------------------------------------
namespace {

std::string strip(const std::string& s) {
  std::string r;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) r += c;
  return r;
}

}  // namespace

std::vector<long long> parse_poly(const std::string& text, long long p) {
  std::string s = strip(text);
  require(!s.empty(), "ConfigError", "empty modulus polynomial");
  std::vector<long long> coeffs;
  auto bump = [&coeffs](int deg, long long c) {
    if (static_cast<int>(coeffs.size()) <= deg) coeffs.resize(static_cast<std::size_t>(deg) + 1, 0);
    coeffs[static_cast<std::size_t>(deg)] += c;
  };
  std::size_t i = 0;
  char var = 0;
  while (i < s.size()) {
    long long sign = 1;
    while (i < s.size() && (s[i] == '+' || s[i] == '-')) {
      if (s[i] == '-') sign = -sign;
      ++i;
    }
    require(i < s.size(), "ConfigError", "dangling sign in polynomial: " + text);
    long long coef = 1;
    bool saw_coef = false;
    if (std::isdigit(static_cast<unsigned char>(s[i]))) {
      coef = 0;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
        coef = coef * 10 + (s[i++] - '0');
      saw_coef = true;
    }
    if (i < s.size() && s[i] == '*') ++i;
    int deg = 0;
    if (i < s.size() && std::isalpha(static_cast<unsigned char>(s[i]))) {
      if (var == 0) var = s[i];
      require(s[i] == var, "ConfigError", "mixed variables in polynomial: " + text);
      ++i;
      deg = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        require(i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])), "ConfigError",
                "bad exponent in polynomial: " + text);
        deg = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
          deg = deg * 10 + (s[i++] - '0');
      }
    } else {
      require(saw_coef, "ConfigError", "bad term in polynomial: " + text);
    }
    bump(deg, sign * coef);
  }
  for (auto& c : coeffs) c = ((c % p) + p) % p;
  return coeffs;
}

std::string FieldDesc::str() const {
  if (rationals) return "Q";
  if (k == 1) return "gf(" + std::to_string(p) + ")";
  return "gf(" + std::to_string(p) + "^" + std::to_string(k) + ")";
}

FieldDesc parse_field_desc(const std::string& text) {
  std::string s = strip(text);
  FieldDesc d;
  if (s == "Q" || s == "q") {
    d.rationals = true;
    return d;
  }
  require(s.rfind("gf(", 0) == 0 && s.back() == ')', "ConfigError",
          "unrecognized field descriptor: " + text);
  std::string body = s.substr(3, s.size() - 4);
  std::string head = body, modtext;
  auto semi = body.find(';');
  if (semi != std::string::npos) {
    head = body.substr(0, semi);
    modtext = body.substr(semi + 1);
  }
  auto caret = head.find('^');
  try {
    if (caret == std::string::npos) {
      d.p = std::stoll(head);
      d.k = 1;
    } else {
      d.p = std::stoll(head.substr(0, caret));
      d.k = std::stoi(head.substr(caret + 1));
    }
  } catch (const std::exception&) {
    fail("ConfigError", "unrecognized field descriptor: " + text);
  }
  require(d.p >= 2 && d.k >= 1, "ConfigError", "bad field parameters in: " + text);
  if (!modtext.empty()) {
    d.modulus = parse_poly(modtext, d.p);
    require(static_cast<int>(d.modulus.size()) == d.k + 1 && d.modulus.back() == 1, "ConfigError",
            "modulus degree does not match field degree in: " + text);
  }
  return d;
}

DomainDesc parse_domain_desc(const std::string& text) {
  std::string s = strip(text);
  if (s.rfind("split(", 0) == 0 && s.back() == ')') {
    std::string body = s.substr(6, s.size() - 7);
    auto comma = body.rfind(',');
    require(comma != std::string::npos, "ConfigError", "split() needs a copy count: " + text);
    SplitEtaleDesc e;
    e.base = parse_field_desc(body.substr(0, comma));
    try {
      e.copies = std::stoi(body.substr(comma + 1));
    } catch (const std::exception&) {
      fail("ConfigError", "bad copy count in: " + text);
    }
    require(e.copies >= 1, "ConfigError", "split copy count must be positive");
    return e;
  }
  return parse_field_desc(s);
}

const GFField* realize(const FieldDesc& d) {
  require(!d.rationals, "ConfigError", "expected a finite field descriptor");
  if (!d.modulus.empty()) return GFField::extension(d.p, d.modulus);
  return GFField::canonical(d.p, d.k);
}

}  // namespace algver
