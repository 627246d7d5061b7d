#include "algver/character.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numeric>

namespace algver {
namespace {

constexpr double kPi = 3.14159265358979323846;

// deterministic coefficient stream for the class-matrix combination
double coeff_stream(std::uint64_t& state) {
  state = state * 6364136223846793005ull + 1442695040888963407ull;
  return static_cast<double>((state >> 11) & ((1ull << 40) - 1)) / static_cast<double>(1ull << 40);
}

}  // namespace

long long snap_int(double x, double tol) {
  double r = std::round(x);
  require(std::abs(x - r) <= tol, "SnapFailure",
          "value " + std::to_string(x) + " is not within " + std::to_string(tol) +
              " of an integer");
  return static_cast<long long>(r);
}

long long snap_int(const Cplx& x, double tol) {
  require(std::abs(x.imag()) <= tol, "SnapFailure", "value has imaginary part");
  return snap_int(x.real(), tol);
}

Cplx inner_raw(const Character& a, const Character& b) {
  require(a.g == b.g, "IncompatibleParents", "inner product across groups");
  Cplx s = 0;
  for (int x = 0; x < a.g->size(); ++x) s += a.vals[x] * std::conj(b.vals[x]);
  return s / static_cast<double>(a.g->size());
}

long long inner(const Character& a, const Character& b) {
  long long v = snap_int(inner_raw(a, b));
  require(v >= 0, "SnapFailure", "negative inner product of characters");
  return v;
}

Character trivial_character(GroupPtr g) {
  Character c{g, CVec::Ones(g->size())};
  return c;
}

Character zero_character(GroupPtr g) {
  return Character{g, CVec::Zero(g->size())};
}

Character regular_character(GroupPtr g) {
  CVec v = CVec::Zero(g->size());
  v[g->identity()] = static_cast<double>(g->size());
  return Character{g, v};
}

Character product_character(const Character& a, const Character& b) {
  require(a.g == b.g, "IncompatibleParents", "product across groups");
  return Character{a.g, a.vals.cwiseProduct(b.vals)};
}

Character dual_character(const Character& a) { return Character{a.g, a.vals.conjugate()}; }

Character sum_character(const Character& a, const Character& b) {
  require(a.g == b.g, "IncompatibleParents", "sum across groups");
  return Character{a.g, a.vals + b.vals};
}

bool char_equal(const Character& a, const Character& b, double tol) {
  if (a.g != b.g) return false;
  for (int x = 0; x < a.g->size(); ++x)
    if (std::abs(a.vals[x] - b.vals[x]) > tol) return false;
  return true;
}

bool char_is_zero(const Character& a, double tol) {
  for (int x = 0; x < a.g->size(); ++x)
    if (std::abs(a.vals[x]) > tol) return false;
  return true;
}

Character restrict_character(const Character& chi, const Subgroup& h) {
  require(chi.g == h.parent, "NotSubgroup", "restriction needs a subgroup of chi's group");
  CVec v(h.group->size());
  for (int s = 0; s < h.group->size(); ++s) v[s] = chi.vals[h.embed(s)];
  return Character{h.group, v};
}

Character induce_character(const Character& chi, const Subgroup& h) {
  GroupPtr g = h.parent;
  require(chi.g == h.group, "NotSubgroup", "induction needs a character of the subgroup");
  CVec v = CVec::Zero(g->size());
  for (int x = 0; x < g->size(); ++x) {
    Cplx s = 0;
    for (int t = 0; t < g->size(); ++t) {
      int c = g->mul(g->mul(g->inv(t), x), t);
      if (h.contains(c)) s += chi.vals[h.restrict_index(c)];
    }
    v[x] = s / static_cast<double>(h.group->size());
  }
  return Character{g, v};
}

Character conjugate_character(const Character& chi, int g0) {
  CVec v(chi.g->size());
  for (int x = 0; x < chi.g->size(); ++x) v[x] = chi.vals[chi.g->conj(g0, x)];
  return Character{chi.g, v};
}

Character pullback(const Character& chi, const Quotient& q) {
  require(chi.g == q.group, "IncompatibleParents", "pullback needs a quotient character");
  CVec v(q.parent->size());
  for (int x = 0; x < q.parent->size(); ++x) v[x] = chi.vals[q.project(x)];
  return Character{q.parent, v};
}

Character descend(const Character& chi, const Quotient& q) {
  require(chi.g == q.parent, "IncompatibleParents", "descend needs a parent character");
  CVec v(q.group->size());
  std::vector<bool> seen(static_cast<std::size_t>(q.group->size()), false);
  for (int x = 0; x < q.parent->size(); ++x) {
    int c = q.project(x);
    if (!seen[static_cast<std::size_t>(c)]) {
      v[c] = chi.vals[x];
      seen[static_cast<std::size_t>(c)] = true;
    } else {
      require(std::abs(v[c] - chi.vals[x]) <= kSnapTol, "IncompatibleParents",
              "character is not constant on cosets");
    }
  }
  return Character{q.group, v};
}

Character box_character(const ProductGroup& p, const Character& a, const Character& b) {
  require(a.g == p.a && b.g == p.b, "IncompatibleParents", "box character across wrong groups");
  CVec v(p.group->size());
  for (int x = 0; x < p.a->size(); ++x)
    for (int y = 0; y < p.b->size(); ++y) v[p.index(x, y)] = a.vals[x] * b.vals[y];
  return Character{p.group, v};
}

std::vector<long long> decompose(const Character& chi, const CharacterTable& t) {
  require(chi.g == t.g, "IncompatibleParents", "decompose against a foreign table");
  std::vector<long long> m;
  CVec recon = CVec::Zero(chi.g->size());
  for (const auto& irr : t.irreps) {
    long long k = snap_int(inner_raw(chi, irr));
    require(k >= 0, "SnapFailure", "negative multiplicity");
    m.push_back(k);
    recon += static_cast<double>(k) * irr.vals;
  }
  for (int x = 0; x < chi.g->size(); ++x)
    require(std::abs(recon[x] - chi.vals[x]) <= 1e-5, "SnapFailure",
            "character does not reconstruct from the table");
  return m;
}

Cplx central_value(const Character& chi, int z) {
  double d = chi.dim();
  require(d > 0.5, "NotIrreducible", "central value of a zero character");
  return chi.vals[z] / d;
}

CharacterTable character_table(GroupPtr g, long long size_bound) {
  require(g->size() <= size_bound, "SizeBound", "group exceeds the character-table bound");
  CharacterTable table;
  table.g = g;
  table.classes = g->classes();
  table.class_of = g->class_of();
  int k = static_cast<int>(table.classes.size());
  int n = g->size();
  int id_class = table.class_of[g->identity()];

  // class multiplication coefficients a_{ijl} = #{(x,y) in K_i x K_j : x y = rep_l}
  std::vector<Eigen::MatrixXcd> m(static_cast<std::size_t>(k),
                                  Eigen::MatrixXcd::Zero(k, k));
  std::vector<int> rep(static_cast<std::size_t>(k));
  for (int l = 0; l < k; ++l) rep[static_cast<std::size_t>(l)] = table.classes[static_cast<std::size_t>(l)][0];
  for (int i = 0; i < k; ++i)
    for (int x : table.classes[static_cast<std::size_t>(i)])
      for (int y = 0; y < n; ++y) {
        int j = table.class_of[y];
        int l = table.class_of[g->mul(x, y)];
        if (g->mul(x, y) == rep[static_cast<std::size_t>(l)])
          m[static_cast<std::size_t>(i)](j, l) += 1.0;
      }
  // (M_i)_{j,l} holds a_{ijl}; the central-character vectors w (normalized to
  // w_{id} = 1) are the common eigenvectors: M_i w = w_i w
  std::uint64_t state = 0x5eedc0ffee + static_cast<std::uint64_t>(n) * 1315423911ull;
  for (int attempt = 0; attempt < 32; ++attempt) {
    Eigen::MatrixXcd r = Eigen::MatrixXcd::Zero(k, k);
    for (int i = 0; i < k; ++i) r += coeff_stream(state) * m[static_cast<std::size_t>(i)];
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(r);
    if (es.info() != Eigen::Success) continue;
    // distinct eigenvalues give the k one-dimensional common eigenspaces
    bool distinct = true;
    for (int a = 0; a < k && distinct; ++a)
      for (int b = a + 1; b < k && distinct; ++b)
        if (std::abs(es.eigenvalues()[a] - es.eigenvalues()[b]) < 1e-7) distinct = false;
    if (!distinct) continue;
    std::vector<Character> irreps;
    bool ok = true;
    for (int c = 0; c < k && ok; ++c) {
      Eigen::VectorXcd w = es.eigenvectors().col(c);
      if (std::abs(w[id_class]) < 1e-12) {
        ok = false;
        break;
      }
      w /= w[id_class];
      // w_l = |K_l| chi(g_l) / chi(1)
      double denom = 0;
      for (int l = 0; l < k; ++l)
        denom += std::norm(w[l]) / static_cast<double>(table.classes[static_cast<std::size_t>(l)].size());
      double dim2 = static_cast<double>(n) / denom;
      double dim = std::sqrt(dim2);
      long long dim_i = 0;
      try {
        dim_i = snap_int(dim, 1e-4);
      } catch (const Error&) {
        ok = false;
        break;
      }
      if (dim_i < 1) {
        ok = false;
        break;
      }
      CVec vals(n);
      for (int x = 0; x < n; ++x) {
        int l = table.class_of[x];
        vals[x] = static_cast<double>(dim_i) * w[l] /
                  static_cast<double>(table.classes[static_cast<std::size_t>(l)].size());
      }
      irreps.push_back(Character{g, vals});
    }
    if (!ok) continue;
    // validation: orthonormal rows, dimension sum, column orthogonality
    bool valid = true;
    long long dimsum = 0;
    for (std::size_t a = 0; a < irreps.size() && valid; ++a) {
      for (std::size_t b = 0; b < irreps.size() && valid; ++b) {
        Cplx ip = inner_raw(irreps[a], irreps[b]);
        double target = a == b ? 1.0 : 0.0;
        if (std::abs(ip - target) > kOrthTol * 10) valid = false;
      }
      double d = irreps[a].dim();
      dimsum += static_cast<long long>(std::round(d * d));
    }
    if (!valid || dimsum != n) continue;
    for (int c1 = 0; c1 < k && valid; ++c1)
      for (int c2 = 0; c2 < k && valid; ++c2) {
        Cplx s = 0;
        for (const auto& irr : irreps)
          s += irr.vals[rep[static_cast<std::size_t>(c1)]] *
               std::conj(irr.vals[rep[static_cast<std::size_t>(c2)]]);
        double target = c1 == c2 ? static_cast<double>(n) /
                                       table.classes[static_cast<std::size_t>(c1)].size()
                                 : 0.0;
        if (std::abs(s - target) > 1e-6) valid = false;
      }
    if (!valid) continue;
    // deterministic row order: dimension, then values over classes
    std::sort(irreps.begin(), irreps.end(), [&](const Character& a, const Character& b) {
      double da = a.dim(), db = b.dim();
      if (std::abs(da - db) > 0.5) return da < db;
      for (int l = 0; l < k; ++l) {
        Cplx va = a.vals[rep[static_cast<std::size_t>(l)]];
        Cplx vb = b.vals[rep[static_cast<std::size_t>(l)]];
        long long ra = std::llround(va.real() * 4096), rb = std::llround(vb.real() * 4096);
        if (ra != rb) return ra < rb;
        long long ia = std::llround(va.imag() * 4096), ib = std::llround(vb.imag() * 4096);
        if (ia != ib) return ia < ib;
      }
      return false;
    });
    table.irreps = std::move(irreps);
    return table;
  }
  fail("SnapFailure", "character table iteration did not converge");
}

Cplx parse_cyclotomic(const std::string& text) {
  // integer combinations of roots of unity zN^k, plus integer terms
  Cplx total = 0;
  std::size_t i = 0;
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  require(!s.empty(), "FixtureParseError", "empty cyclotomic value");
  while (i < s.size()) {
    double sign = 1;
    while (i < s.size() && (s[i] == '+' || s[i] == '-')) {
      if (s[i] == '-') sign = -sign;
      ++i;
    }
    require(i < s.size(), "FixtureParseError", "dangling sign in: " + text);
    double coef = 1;
    long long num = 0;
    bool has_num = false;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      num = num * 10 + (s[i++] - '0');
      has_num = true;
    }
    if (has_num) coef = static_cast<double>(num);
    if (i < s.size() && s[i] == '*') ++i;
    if (i < s.size() && s[i] == 'z') {
      ++i;
      long long nroot = 0;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
        nroot = nroot * 10 + (s[i++] - '0');
      require(nroot >= 1, "FixtureParseError", "bad root order in: " + text);
      long long e = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        e = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
          e = e * 10 + (s[i++] - '0');
      }
      double arg = 2.0 * kPi * static_cast<double>(e % nroot) / static_cast<double>(nroot);
      total += sign * coef * Cplx(std::cos(arg), std::sin(arg));
    } else {
      require(has_num, "FixtureParseError", "bad term in: " + text);
      total += sign * coef;
    }
  }
  return total;
}

}  // namespace algver
