#include "algver/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <set>
#include <sstream>

namespace algver {
namespace {

MatZ identity(int n) {
  MatZ m = MatZ::Zero(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

void assert_snf_postconditions(const MatZ& m, const SnfResult& r) {
  require((r.u * m * r.v - r.d).isZero(0), "PropertyViolation", "SNF: U M V != D");
  require((r.u * r.uinv - identity(static_cast<int>(r.u.rows()))).isZero(0), "PropertyViolation",
          "SNF: U not unimodular");
  require((r.v * r.vinv - identity(static_cast<int>(r.v.rows()))).isZero(0), "PropertyViolation",
          "SNF: V not unimodular");
  auto diag = r.diagonal();
  for (std::size_t i = 0; i + 1 < diag.size(); ++i) {
    if (diag[i + 1] != 0)
      require(diag[i] != 0 && diag[i + 1] % diag[i] == 0, "PropertyViolation",
              "SNF: divisibility chain broken");
  }
}

}  // namespace

std::vector<long long> SnfResult::diagonal() const {
  std::vector<long long> out;
  int n = static_cast<int>(std::min(d.rows(), d.cols()));
  for (int i = 0; i < n; ++i) out.push_back(d(i, i));
  return out;
}

SnfResult smith_normal_form(const MatZ& m) {
  int rows = static_cast<int>(m.rows());
  int cols = static_cast<int>(m.cols());
  SnfResult r;
  r.d = m;
  r.u = identity(rows);
  r.uinv = identity(rows);
  r.v = identity(cols);
  r.vinv = identity(cols);
  MatZ& d = r.d;

  auto row_sub = [&](int dst, int src, long long q) {  // row_dst -= q row_src
    d.row(dst) -= q * d.row(src);
    r.u.row(dst) -= q * r.u.row(src);
    r.uinv.col(src) += q * r.uinv.col(dst);
  };
  auto col_sub = [&](int dst, int src, long long q) {
    d.col(dst) -= q * d.col(src);
    r.v.col(dst) -= q * r.v.col(src);
    r.vinv.row(src) += q * r.vinv.row(dst);
  };
  auto row_swap = [&](int a, int b) {
    if (a == b) return;
    d.row(a).swap(d.row(b));
    r.u.row(a).swap(r.u.row(b));
    r.uinv.col(a).swap(r.uinv.col(b));
  };
  auto col_swap = [&](int a, int b) {
    if (a == b) return;
    d.col(a).swap(d.col(b));
    r.v.col(a).swap(r.v.col(b));
    r.vinv.row(a).swap(r.vinv.row(b));
  };
  auto row_negate = [&](int a) {
    d.row(a) = -d.row(a);
    r.u.row(a) = -r.u.row(a);
    r.uinv.col(a) = -r.uinv.col(a);
  };

  int t = 0;
  while (t < rows && t < cols) {
    // smallest nonzero pivot in the trailing block
    int pi = -1, pj = -1;
    long long best = 0;
    for (int i = t; i < rows; ++i)
      for (int j = t; j < cols; ++j) {
        long long v = std::llabs(d(i, j));
        if (v != 0 && (pi < 0 || v < best)) {
          pi = i;
          pj = j;
          best = v;
        }
      }
    if (pi < 0) break;
    row_swap(t, pi);
    col_swap(t, pj);
    bool reduced = true;
    for (int i = t + 1; i < rows; ++i) {
      if (d(i, t) == 0) continue;
      long long q = d(i, t) / d(t, t);
      row_sub(i, t, q);
      if (d(i, t) != 0) reduced = false;
    }
    for (int j = t + 1; j < cols; ++j) {
      if (d(t, j) == 0) continue;
      long long q = d(t, j) / d(t, t);
      col_sub(j, t, q);
      if (d(t, j) != 0) reduced = false;
    }
    if (!reduced) continue;  // pick a new, smaller pivot
    // divisibility fix: fold any non-divisible entry into the pivot row
    bool fixed = true;
    for (int i = t + 1; i < rows && fixed; ++i)
      for (int j = t + 1; j < cols && fixed; ++j)
        if (d(i, j) % d(t, t) != 0) {
          row_sub(t, i, -1);  // add row i to row t
          fixed = false;
        }
    if (!fixed) continue;
    if (d(t, t) < 0) row_negate(t);
    ++t;
  }
  r.rank = t;
  assert_snf_postconditions(m, r);
  return r;
}

std::optional<VecZ> solve_in_colspan(const MatZ& a, const VecZ& x) {
  if (a.cols() == 0) {
    if (x.isZero(0)) return VecZ::Zero(0);
    return std::nullopt;
  }
  SnfResult r = smith_normal_form(a);
  VecZ ux = r.u * x;
  VecZ z = VecZ::Zero(a.cols());
  for (int i = 0; i < static_cast<int>(ux.size()); ++i) {
    if (i < r.rank) {
      if (ux[i] % r.d(i, i) != 0) return std::nullopt;
      z[i] = ux[i] / r.d(i, i);
    } else if (ux[i] != 0) {
      return std::nullopt;
    }
  }
  return VecZ(r.v * z);
}

MatZ lattice_basis(const MatZ& gens) {
  if (gens.cols() == 0) return MatZ::Zero(gens.rows(), 0);
  SnfResult r = smith_normal_form(gens);
  // colspan(G) = colspan(G V) = colspan(U^-1 D); keep the rank columns
  MatZ full = r.uinv * r.d;
  return full.leftCols(r.rank);
}

bool lattice_contains(const MatZ& of, const MatZ& sub) {
  for (int j = 0; j < sub.cols(); ++j)
    if (!solve_in_colspan(of, sub.col(j))) return false;
  return true;
}

bool lattice_equal(const MatZ& a, const MatZ& b) {
  return lattice_contains(a, b) && lattice_contains(b, a);
}

MatZ kernel_basis(const MatZ& m) {
  SnfResult r = smith_normal_form(m);
  // M V = U^-1 D: columns of V beyond rank map to zero
  int free_cols = static_cast<int>(m.cols()) - r.rank;
  MatZ out(m.cols(), free_cols);
  for (int j = 0; j < free_cols; ++j) out.col(j) = r.v.col(r.rank + j);
  return out;
}

FinGenAbGroup::FinGenAbGroup(int gens, MatZ rels) : gens_(gens), rels_(std::move(rels)) {
  require(gens >= 0 && rels_.rows() == gens, "IncompatiblePresentation",
          "relation matrix shape does not match generators");
  if (gens == 0) {
    free_rank_ = 0;
    return;
  }
  SnfResult r = smith_normal_form(rels_);
  free_rank_ = gens - r.rank;
  for (long long v : r.diagonal())
    if (v > 1) torsion_.push_back(v);
}

FinGenAbGroup FinGenAbGroup::free_group(int rank) {
  return FinGenAbGroup(rank, MatZ::Zero(rank, 0));
}

FinGenAbGroup FinGenAbGroup::torsion(const std::vector<long long>& orders) {
  int n = static_cast<int>(orders.size());
  MatZ rels = MatZ::Zero(n, n);
  for (int i = 0; i < n; ++i) rels(i, i) = orders[static_cast<std::size_t>(i)];
  return FinGenAbGroup(n, rels);
}

std::string FinGenAbGroup::str() const {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < free_rank_; ++i) {
    os << (first ? "" : " + ") << "Z";
    first = false;
  }
  for (long long t : torsion_) {
    os << (first ? "" : " + ") << "Z/" << t;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

AbHom::AbHom(FinGenAbGroup s, FinGenAbGroup d, MatZ mat)
    : src(std::move(s)), dst(std::move(d)), m(std::move(mat)) {
  require(m.rows() == dst.gens() && m.cols() == src.gens(), "IncompatiblePresentation",
          "hom matrix shape mismatch");
  // relations must map into relations
  MatZ mapped = m * src.rels();
  for (int j = 0; j < mapped.cols(); ++j)
    require(solve_in_colspan(dst.rels(), mapped.col(j)).has_value(), "IncompatiblePresentation",
            "hom does not respect the relations");
}

namespace {

// lattice of all x in Z^{src gens} with h(x) = 0 in dst (preimage of relations)
MatZ kernel_lattice(const AbHom& h) {
  int g1 = h.src.gens();
  int r2 = static_cast<int>(h.dst.rels().cols());
  MatZ stacked(h.dst.gens(), g1 + r2);
  stacked.leftCols(g1) = h.m;
  if (r2 > 0) stacked.rightCols(r2) = -h.dst.rels();
  MatZ ker = kernel_basis(stacked);
  MatZ gens(g1, ker.cols() + h.src.rels().cols());
  gens.leftCols(ker.cols()) = ker.topRows(g1);
  if (h.src.rels().cols() > 0) gens.rightCols(h.src.rels().cols()) = h.src.rels();
  return lattice_basis(gens);
}

// subgroup (lattice containing the relations) presented as an abstract group
FinGenAbGroup subquotient(const MatZ& lattice, const MatZ& rels) {
  MatZ basis = lattice;  // full column rank
  int s = static_cast<int>(basis.cols());
  if (s == 0) return FinGenAbGroup(0, MatZ::Zero(0, 0));
  MatZ x(s, rels.cols());
  for (int j = 0; j < rels.cols(); ++j) {
    auto sol = solve_in_colspan(basis, rels.col(j));
    require(sol.has_value(), "IncompatiblePresentation",
            "relations are not inside the subgroup lattice");
    x.col(j) = *sol;
  }
  return FinGenAbGroup(s, x);
}

}  // namespace

FinGenAbGroup hom_kernel(const AbHom& h) {
  return subquotient(kernel_lattice(h), h.src.rels());
}

FinGenAbGroup hom_cokernel(const AbHom& h) {
  MatZ rels(h.dst.gens(), h.m.cols() + h.dst.rels().cols());
  rels.leftCols(h.m.cols()) = h.m;
  if (h.dst.rels().cols() > 0) rels.rightCols(h.dst.rels().cols()) = h.dst.rels();
  return FinGenAbGroup(h.dst.gens(), rels);
}

bool check_exact(const AbHom& f, const AbHom& g) {
  require(f.dst.gens() == g.src.gens(), "IncompatiblePresentation",
          "maps are not composable");
  // image lattice of f inside the middle group's generator space
  MatZ image(f.dst.gens(), f.m.cols() + f.dst.rels().cols());
  image.leftCols(f.m.cols()) = f.m;
  if (f.dst.rels().cols() > 0) image.rightCols(f.dst.rels().cols()) = f.dst.rels();
  MatZ ker = kernel_lattice(g);
  return lattice_equal(image, ker);
}

NormSequenceReport example2_check(int d) {
  require(d >= 1, "ConfigError", "example2_check needs d >= 1");
  NormSequenceReport rep{false, FinGenAbGroup(0, MatZ::Zero(0, 0))};
  // dual of the norm map: Z -> Z^d, 1 -> (1,...,1)
  MatZ norm_dual(d, 1);
  for (int i = 0; i < d; ++i) norm_dual(i, 0) = 1;
  AbHom alpha(FinGenAbGroup::free_group(1), FinGenAbGroup::free_group(d), norm_dual);
  // injectivity (dual of surjectivity of the norm onto Gm)
  if (!hom_kernel(alpha).trivial()) return rep;
  // X(Z) = coker must be torsion free of rank d-1 for the sequence of tori to
  // be exact (the all-ones vector is primitive)
  FinGenAbGroup coker = hom_cokernel(alpha);
  rep.kernel_dual = coker;
  rep.exact = coker.torsion_factors().empty() && coker.free_rank() == d - 1;
  // exactness in the middle: image of alpha = kernel of the projection onto
  // the cokernel presentation
  MatZ proj = identity(d);
  AbHom beta(FinGenAbGroup::free_group(d), coker, proj);
  rep.exact = rep.exact && check_exact(alpha, beta);
  return rep;
}

IsogenyCriterion example3_criterion(long long n, int d) {
  require(n >= 1 && d >= 1, "ConfigError", "example3_criterion needs n, d >= 1");
  MatZ a = MatZ::Zero(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) a(i, j) = (i == j ? 1 - n : 1);
  IsogenyCriterion out{false, FinGenAbGroup(d, a.transpose()), 0};
  // |det| = n^{d-1} |d-n| by the eigenvalue split (d-n once, -n repeated)
  SnfResult r = smith_normal_form(a);
  long long det = 1;
  for (long long v : r.diagonal()) det *= v;
  out.abs_det = std::llabs(det);
  std::vector<long long> expected;
  for (int i = 0; i < d - 1; ++i)
    if (n > 1) expected.push_back(n);
  out.iso = out.kernel_dual.free_rank() == 0 && out.kernel_dual.torsion_factors() == expected;
  return out;
}

bool center_iso_check(long long n, int d) {
  require(n >= 1 && d >= 1, "ConfigError", "center_iso_check needs n, d >= 1");
  double size = std::pow(static_cast<double>(n), d);
  require(size <= 1e6, "SizeBound", "mu_n^d too large to enumerate");
  if (n == 1) return true;  // both groups trivial
  long long total = 1;
  for (int i = 0; i < d; ++i) total *= n;
  auto decode = [&](long long code) {
    std::vector<long long> v(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) {
      v[static_cast<std::size_t>(i)] = code % n;
      code /= n;
    }
    return v;
  };
  auto encode = [&](const std::vector<long long>& v) {
    long long code = 0;
    for (int i = d; i-- > 0;) code = code * n + ((v[static_cast<std::size_t>(i)] % n) + n) % n;
    return code;
  };
  long long k = ((d % n) + n) % n;  // v -> (sum v) 1 - k v, well defined mod diagonal
  auto phi = [&](const std::vector<long long>& v) {
    long long s = 0;
    for (long long x : v) s += x;
    std::vector<long long> out(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i)
      out[static_cast<std::size_t>(i)] = ((s - k * v[static_cast<std::size_t>(i)]) % n + n) % n;
    return out;
  };
  // well-definedness on Res(mu_n)/mu_n: shifting by the diagonal must not move
  // the image
  for (long long code = 0; code < total; ++code) {
    auto v = decode(code);
    auto base = phi(v);
    for (long long c = 1; c < n; ++c) {
      auto w = v;
      for (auto& x : w) x = (x + c) % n;
      if (encode(phi(w)) != encode(base)) return false;
    }
  }
  // image lands in Res^1 and the induced map on cosets is a bijection
  std::set<long long> image;
  std::set<long long> seen_cosets;
  for (long long code = 0; code < total; ++code) {
    auto v = decode(code);
    long long rep = encode([&] {  // canonical coset representative: v - v_0 * 1
      auto w = v;
      long long v0 = w[0];
      for (auto& x : w) x = ((x - v0) % n + n) % n;
      return w;
    }());
    if (!seen_cosets.insert(rep).second) continue;
    auto img = phi(v);
    long long s = 0;
    for (long long x : img) s += x;
    if (s % n != 0) return false;  // not norm-one
    if (!image.insert(encode(img)).second) return false;  // not injective
  }
  long long res1_order = total / n;
  return static_cast<long long>(image.size()) == res1_order;
}

MatZ parse_matz(const std::string& text) {
  std::vector<std::vector<long long>> rows;
  std::vector<long long> cur;
  std::string num;
  int depth = 0;
  auto flush_num = [&]() {
    if (num.empty()) return;
    try {
      cur.push_back(std::stoll(num));
    } catch (const std::exception&) {
      fail("ConfigError", "bad matrix entry '" + num + "'");
    }
    num.clear();
  };
  for (char c : text) {
    if (c == '[') {
      ++depth;
    } else if (c == ']') {
      flush_num();
      if (depth == 2) {
        rows.push_back(cur);
        cur.clear();
      }
      --depth;
    } else if (c == ',') {
      flush_num();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      num += c;
    }
  }
  require(!rows.empty(), "ConfigError", "empty matrix text");
  std::size_t cols = rows[0].size();
  for (const auto& r : rows)
    require(r.size() == cols, "ConfigError", "ragged matrix rows");
  MatZ m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j)
      m(static_cast<int>(i), static_cast<int>(j)) = rows[i][j];
  return m;
}

}  // namespace algver
