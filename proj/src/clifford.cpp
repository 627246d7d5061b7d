#include "algver/clifford.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <set>

#include <json.hpp>

namespace algver {
namespace {

constexpr double kTol = 1e-8;
constexpr double kPi = 3.14159265358979323846;

long long lcm_ll(long long a, long long b) { return a / std::gcd(a, b) * b; }

}  // namespace

CliffordContext make_clifford_context(GroupPtr g, const Subgroup& n) {
  require(n.parent == g, "NotSubgroup", "context subgroup has a different parent");
  require(g->is_normal(n.to_parent), "NotNormal", "subgroup is not normal");
  CliffordContext ctx;
  ctx.g = g;
  ctx.n = n;
  ctx.a = quotient_by_normal(g, n.to_parent);
  ctx.m = ctx.a.group->size();
  ctx.reps.assign(static_cast<std::size_t>(ctx.m), -1);
  for (int x = 0; x < g->size(); ++x) {
    int c = ctx.a.project(x);
    if (ctx.reps[static_cast<std::size_t>(c)] < 0) ctx.reps[static_cast<std::size_t>(c)] = x;
  }
  // s(1) = identity
  ctx.reps[static_cast<std::size_t>(ctx.a.project(g->identity()))] = g->identity();
  return ctx;
}

Character conj_char(const Character& chi_of_n, const Subgroup& n, int g_parent) {
  require(chi_of_n.g == n.group, "NotNormal", "character is not on the subgroup");
  require(n.parent->is_normal(n.to_parent), "NotNormal", "conjugation needs a normal subgroup");
  CVec v(n.group->size());
  for (int s = 0; s < n.group->size(); ++s) {
    int c = n.parent->conj(g_parent, n.embed(s));
    v[s] = chi_of_n.vals[n.restrict_index(c)];
  }
  return Character{n.group, v};
}

Subgroup stabilizer(const CliffordContext& ctx, const Character& chi_of_n) {
  require(chi_of_n.g == ctx.n.group, "NotSubgroup", "character is not on the normal subgroup");
  std::vector<int> elems;
  for (int x = 0; x < ctx.g->size(); ++x) {
    if (char_equal(conj_char(chi_of_n, ctx.n, x), chi_of_n)) elems.push_back(x);
  }
  for (int p : ctx.n.to_parent)
    require(std::find(elems.begin(), elems.end(), p) != elems.end(), "NotNormal",
            "stabilizer does not contain N");
  return make_subgroup(ctx.g, elems);
}

CliffordRestriction clifford_restriction(const CliffordContext& ctx, const Character& pi,
                                         const CharacterTable& n_table) {
  require(pi.g == ctx.g, "NotIrreducible", "character is not on the context group");
  require(snap_int(inner_raw(pi, pi)) == 1, "NotIrreducible",
          "clifford restriction needs an irreducible character");
  Character res = restrict_character(pi, ctx.n);
  std::vector<long long> mult = decompose(res, n_table);
  CliffordRestriction out;
  std::vector<std::size_t> present;
  for (std::size_t i = 0; i < mult.size(); ++i)
    if (mult[i] > 0) present.push_back(i);
  require(!present.empty(), "NotIrreducible", "restriction vanished");
  out.multiplicity = mult[present[0]];
  for (std::size_t i : present) {
    require(mult[i] == out.multiplicity, "PropertyViolation",
            "restriction is not multiplicity-homogeneous");
    out.orbit.push_back(n_table.irreps[i]);
  }
  // single G-orbit: conjugates of the first constituent cover the set
  std::set<std::size_t> orbit_ids;
  for (int x = 0; x < ctx.g->size(); ++x) {
    Character cc = conj_char(out.orbit[0], ctx.n, x);
    for (std::size_t i = 0; i < n_table.irreps.size(); ++i)
      if (char_equal(cc, n_table.irreps[i])) orbit_ids.insert(i);
  }
  std::set<std::size_t> present_set(present.begin(), present.end());
  require(orbit_ids == present_set, "PropertyViolation",
          "restriction constituents are not a single orbit");
  return out;
}

bool induced_irreducibility_check(const CliffordContext& ctx, const Subgroup& gu,
                                  const Character& v, const Character& u) {
  require(v.g == gu.group, "NotSubgroup", "V must live on the stabilizer");
  // hypothesis: U appears in V|_N; N sits inside G_U
  std::vector<int> n_in_gu;
  for (int p : ctx.n.to_parent) n_in_gu.push_back(gu.restrict_index(p));
  Subgroup n_sub = make_subgroup(gu.group, n_in_gu);
  Character v_res = restrict_character(v, n_sub);
  // match indices: n_sub and ctx.n enumerate the same parent elements
  Character u_on_nsub = u;
  {
    CVec vals(n_sub.group->size());
    for (int s = 0; s < n_sub.group->size(); ++s) {
      int parent_elem = n_sub.embed(s);          // element of gu.group
      int in_g = gu.embed(parent_elem);          // element of G
      vals[s] = u.vals[ctx.n.restrict_index(in_g)];
    }
    u_on_nsub = Character{n_sub.group, vals};
  }
  require(snap_int(inner_raw(v_res, u_on_nsub)) >= 1, "HypothesisFailure",
          "V does not lie over U");
  Character ind = induce_character(v, gu);
  return snap_int(inner_raw(ind, ind)) == 1;
}

MatrixRep rep_from_generators(const Subgroup& n,
                              const std::vector<std::pair<int, CMat>>& gen_images) {
  int size = n.group->size();
  int dim = gen_images.empty() ? 1 : static_cast<int>(gen_images[0].second.rows());
  std::vector<CMat> mats(static_cast<std::size_t>(size));
  std::vector<bool> known(static_cast<std::size_t>(size), false);
  mats[static_cast<std::size_t>(n.group->identity())] = CMat::Identity(dim, dim);
  known[static_cast<std::size_t>(n.group->identity())] = true;
  std::vector<int> frontier{n.group->identity()};
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int x : frontier)
      for (const auto& [gen, img] : gen_images) {
        require(img.rows() == dim && img.cols() == dim, "FixtureParseError",
                "generator matrices have mixed dimensions");
        int y = n.group->mul(x, gen);
        CMat my = mats[static_cast<std::size_t>(x)] * img;
        if (!known[static_cast<std::size_t>(y)]) {
          mats[static_cast<std::size_t>(y)] = my;
          known[static_cast<std::size_t>(y)] = true;
          next.push_back(y);
        } else {
          require((mats[static_cast<std::size_t>(y)] - my).norm() <= 1e-6, "FixtureParseError",
                  "generator images are inconsistent");
        }
      }
    frontier = std::move(next);
  }
  for (bool k : known)
    require(k, "FixtureParseError", "generators do not generate the subgroup");
  MatrixRep rep;
  rep.mats = std::move(mats);
  rep.dim = dim;
  // homomorphism spot check
  for (int x = 0; x < size; ++x)
    for (int y = 0; y < size; ++y)
      require((rep.mats[static_cast<std::size_t>(n.group->mul(x, y))] -
               rep.mats[static_cast<std::size_t>(x)] * rep.mats[static_cast<std::size_t>(y)])
                      .norm() <= 1e-6,
              "FixtureParseError", "matrix images are not a homomorphism");
  return rep;
}

Character rep_character(const Subgroup& n, const MatrixRep& rep) {
  CVec vals(n.group->size());
  for (int s = 0; s < n.group->size(); ++s) vals[s] = rep.at(s).trace();
  return Character{n.group, vals};
}

ProjectiveExtensionData intertwiners(const CliffordContext& ctx, const MatrixRep& u) {
  int d = u.dim;
  int nn = ctx.n.group->size();
  Character chi_u = rep_character(ctx.n, u);
  require(snap_int(inner_raw(chi_u, chi_u)) == 1, "SchurFailure",
          "U must be irreducible for one-dimensional intertwiner spaces");
  // the context group must stabilize U
  Subgroup gu = stabilizer(ctx, chi_u);
  require(gu.group->size() == ctx.g->size(), "HypothesisFailure",
          "intertwiners need G_U = G");

  ProjectiveExtensionData data;
  data.ctx = ctx;
  data.u = u;
  data.m = ctx.m;
  data.intertwiner.resize(static_cast<std::size_t>(ctx.m));
  int id_coset = ctx.a.project(ctx.g->identity());
  for (int a = 0; a < ctx.m; ++a) {
    if (a == id_coset) {
      data.intertwiner[static_cast<std::size_t>(a)] = CMat::Identity(d, d);
      continue;
    }
    int sa = ctx.rep_of(a);
    // solve A U(n) = U(s_a n s_a^{-1}) A for all n
    CMat sys(nn * d * d, d * d);
    for (int s = 0; s < nn; ++s) {
      int parent_elem = ctx.n.embed(s);
      int conj = ctx.g->conj(sa, parent_elem);
      const CMat& un = u.at(s);
      const CMat& uc = u.at(ctx.n.restrict_index(conj));
      // vec(A U(n)) = (U(n)^T (x) I) vec(A); vec(U(c) A) = (I (x) U(c)) vec(A)
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
          for (int k = 0; k < d; ++k)
            for (int l = 0; l < d; ++l) {
              // row (i,j) of the constraint for entry vec index (k,l): A_{k,l}
              Cplx coef = 0;
              if (i == k) coef += un(l, j);   // (A U(n))_{i,j} term with A_{i,l}
              if (j == l) coef -= uc(i, k);   // (U(c) A)_{i,j} term with A_{k,j}
              sys(s * d * d + i * d + j, k * d + l) = coef;
            }
    }
    Eigen::FullPivLU<CMat> lu(sys);
    lu.setThreshold(1e-7);
    require(lu.dimensionOfKernel() == 1, "SchurFailure",
            "intertwiner space is not one-dimensional (is U irreducible?)");
    CMat kern = lu.kernel();
    CMat aa(d, d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) aa(i, j) = kern(i * d + j, 0);
    // deterministic pre-normalization: first entry of largest modulus -> 1
    int bi = 0, bj = 0;
    double best = 0;
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        if (std::abs(aa(i, j)) > best + 1e-12) {
          best = std::abs(aa(i, j));
          bi = i;
          bj = j;
        }
    require(best > 1e-9, "SchurFailure", "intertwiner solution vanished");
    aa /= aa(bi, bj);
    data.intertwiner[static_cast<std::size_t>(a)] = aa;
  }

  // raw cocycle: A_a A_b = c(a,b) U(s_a s_b s_{ab}^{-1}) A_{ab}
  auto raw_cocycle = [&](int a, int b) {
    int sa = ctx.rep_of(a), sb = ctx.rep_of(b);
    int ab = ctx.a.group->mul(a, b);
    int z = ctx.g->mul(ctx.g->mul(sa, sb), ctx.g->inv(ctx.rep_of(ab)));
    CMat lhs = data.intertwiner[static_cast<std::size_t>(a)] *
               data.intertwiner[static_cast<std::size_t>(b)];
    CMat rhs = u.at(ctx.n.restrict_index(z)) * data.intertwiner[static_cast<std::size_t>(ab)];
    // scalar ratio at the largest rhs entry, then verified against the rest
    int bi = 0, bj = 0;
    double best = 0;
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        if (std::abs(rhs(i, j)) > best) {
          best = std::abs(rhs(i, j));
          bi = i;
          bj = j;
        }
    require(best > 1e-9, "SchurFailure", "degenerate cocycle comparison");
    Cplx lambda = lhs(bi, bj) / rhs(bi, bj);
    require((lhs - lambda * rhs).norm() <= 1e-6, "SchurFailure",
            "intertwiner products are not projective");
    return lambda;
  };

  std::vector<std::vector<Cplx>> chat(static_cast<std::size_t>(ctx.m),
                                      std::vector<Cplx>(static_cast<std::size_t>(ctx.m)));
  for (int a = 0; a < ctx.m; ++a)
    for (int b = 0; b < ctx.m; ++b) chat[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = raw_cocycle(a, b);

  // det-1 normalization on the twisted algebra model rho(a) e_b = c(a,b) e_{ab}
  std::vector<Cplx> lambda(static_cast<std::size_t>(ctx.m), 1.0);
  for (int a = 0; a < ctx.m; ++a) {
    // det rho_hat(a) = sign(b -> ab) * prod_b chat(a,b)
    Cplx det = 1.0;
    std::vector<int> perm(static_cast<std::size_t>(ctx.m));
    for (int b = 0; b < ctx.m; ++b) {
      det *= chat[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
      perm[static_cast<std::size_t>(b)] = ctx.a.group->mul(a, b);
    }
    // permutation sign by cycle decomposition
    std::vector<bool> seen(static_cast<std::size_t>(ctx.m), false);
    int sign = 1;
    for (int b = 0; b < ctx.m; ++b) {
      if (seen[static_cast<std::size_t>(b)]) continue;
      int len = 0, cur = b;
      while (!seen[static_cast<std::size_t>(cur)]) {
        seen[static_cast<std::size_t>(cur)] = true;
        cur = perm[static_cast<std::size_t>(cur)];
        ++len;
      }
      if (len % 2 == 0) sign = -sign;
    }
    det *= static_cast<double>(sign);
    // lambda_a^m = 1/det; least argument in [0, 2pi) is the deterministic pick
    double mag = std::pow(std::abs(det), -1.0 / ctx.m);
    double base_arg = -std::arg(det);
    Cplx pick = 0;
    double best_arg = 1e9;
    for (int k = 0; k < ctx.m; ++k) {
      double ang = (base_arg + 2 * kPi * k) / ctx.m;
      double norm_ang = std::fmod(std::fmod(ang, 2 * kPi) + 2 * kPi, 2 * kPi);
      if (norm_ang < best_arg - 1e-12) {
        best_arg = norm_ang;
        pick = Cplx(mag * std::cos(ang), mag * std::sin(ang));
      }
    }
    lambda[static_cast<std::size_t>(a)] = pick;
  }
  require(std::abs(lambda[static_cast<std::size_t>(id_coset)] - 1.0) <= 1e-9,
          "NormalizationAmbiguity", "identity coset scaling drifted from 1");

  data.cocycle.assign(static_cast<std::size_t>(ctx.m),
                      std::vector<Cplx>(static_cast<std::size_t>(ctx.m)));
  for (int a = 0; a < ctx.m; ++a) {
    data.intertwiner[static_cast<std::size_t>(a)] *= lambda[static_cast<std::size_t>(a)];
    for (int b = 0; b < ctx.m; ++b) {
      int ab = ctx.a.group->mul(a, b);
      data.cocycle[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
          chat[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] *
          lambda[static_cast<std::size_t>(a)] * lambda[static_cast<std::size_t>(b)] /
          lambda[static_cast<std::size_t>(ab)];
    }
  }

  // cocycle identity c(a,b) c(ab,d) = c(a,bd) c(b,d)
  for (int a = 0; a < ctx.m; ++a)
    for (int b = 0; b < ctx.m; ++b)
      for (int e = 0; e < ctx.m; ++e) {
        int ab = ctx.a.group->mul(a, b);
        int be = ctx.a.group->mul(b, e);
        Cplx l = data.cocycle[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] *
                 data.cocycle[static_cast<std::size_t>(ab)][static_cast<std::size_t>(e)];
        Cplx r = data.cocycle[static_cast<std::size_t>(a)][static_cast<std::size_t>(be)] *
                 data.cocycle[static_cast<std::size_t>(b)][static_cast<std::size_t>(e)];
        require(std::abs(l - r) <= 1e-6, "PropertyViolation", "cocycle identity fails");
      }
  return data;
}

bool cocycle_order_check(const ProjectiveExtensionData& data) {
  for (const auto& row : data.cocycle)
    for (const Cplx& c : row) {
      Cplx p = std::pow(c, data.m);
      if (std::abs(p - 1.0) > 1e-5) return false;
    }
  return true;
}

Cplx abelian_skew(const ProjectiveExtensionData& data, int a, int b) {
  require(data.ctx.a.group->is_abelian(), "NotAbelian", "skew form needs an abelian quotient");
  return data.cocycle[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] /
         data.cocycle[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)];
}

std::vector<int> skew_radical(const ProjectiveExtensionData& data) {
  std::vector<int> rad;
  for (int a = 0; a < data.m; ++a) {
    bool central = true;
    for (int b = 0; b < data.m && central; ++b)
      central = std::abs(abelian_skew(data, a, b) - 1.0) <= 1e-6;
    if (central) rad.push_back(a);
  }
  return rad;
}

namespace {

// explicit central extension mu_r x_c A as a finite group, with the snapped
// cocycle exponents
struct FiniteExtension {
  GroupPtr group;
  long long r = 1;
  int asize = 0;
  int index(long long j, int a) const { return static_cast<int>(j) * asize + a; }
  std::pair<long long, int> parts(int i) const { return {i / asize, i % asize}; }
};

FiniteExtension build_extension(const ProjectiveExtensionData& data) {
  int m = data.m;
  GroupPtr a = data.ctx.a.group;
  // snap each cocycle value to a root of unity of order dividing m
  std::vector<std::vector<long long>> expo(static_cast<std::size_t>(m),
                                           std::vector<long long>(static_cast<std::size_t>(m)));
  long long r = 1;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      Cplx c = data.cocycle[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      double ang = std::arg(c);
      double scaled = ang * m / (2 * kPi);
      long long k = std::llround(scaled);
      long long kk = ((k % m) + m) % m;
      Cplx snapped(std::cos(2 * kPi * kk / m), std::sin(2 * kPi * kk / m));
      require(std::abs(c - snapped) <= 1e-5, "SnapFailure",
              "cocycle value is not an m-th root of unity");
      expo[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = kk;
      long long order = m / std::gcd(kk == 0 ? m : kk, static_cast<long long>(m));
      if (kk == 0) order = 1;
      r = lcm_ll(r, order);
    }
  FiniteExtension ext;
  ext.r = r;
  ext.asize = m;
  int n = static_cast<int>(r) * m;
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (long long j1 = 0; j1 < r; ++j1)
    for (int a1 = 0; a1 < m; ++a1)
      for (long long j2 = 0; j2 < r; ++j2)
        for (int a2 = 0; a2 < m; ++a2) {
          long long k = expo[static_cast<std::size_t>(a1)][static_cast<std::size_t>(a2)];
          long long jr = (j1 + j2 + k * r / m) % r;
          int prod = a->mul(a1, a2);
          table[static_cast<std::size_t>(ext.index(j1, a1)) * n + ext.index(j2, a2)] =
              ext.index(jr, prod);
        }
  ext.group = Group::from_table(n, std::move(table));
  return ext;
}

}  // namespace

bool genuine_dim_check(const ProjectiveExtensionData& data) {
  require(data.ctx.a.group->is_abelian(), "NotAbelian", "genuine dim check needs abelian A");
  auto rad = skew_radical(data);
  long long abar = data.m / static_cast<long long>(rad.size());
  long long expect = std::llround(std::sqrt(static_cast<double>(abar)));
  require(expect * expect == abar, "PropertyViolation", "|A/rad| is not a perfect square");
  FiniteExtension ext = build_extension(data);
  auto table = character_table(ext.group);
  long long genuine = 0;
  for (const auto& chi : table.irreps) {
    // genuine: the central mu_r acts by the inverse tautological character
    int zeta = ext.index(1 % ext.r, data.ctx.a.group->identity());
    Cplx want = ext.r == 1 ? Cplx(1, 0)
                           : Cplx(std::cos(-2 * kPi / static_cast<double>(ext.r)),
                                  std::sin(-2 * kPi / static_cast<double>(ext.r)));
    if (std::abs(central_value(chi, zeta) - want) > 1e-6) continue;
    ++genuine;
    if (std::llround(chi.dim()) != expect) return false;
  }
  // dim(E)^2 * |radical| * (#genuine) = |A| * ... : each genuine E has the
  // same dimension and sum of squares is |A|
  return genuine * expect * expect == data.m;
}

InductionCertificate decompose_induction(const CliffordContext& ctx, const MatrixRep& u) {
  Character chi_u = rep_character(ctx.n, u);
  Subgroup gu = stabilizer(ctx, chi_u);
  InductionCertificate cert;
  cert.gu = gu;
  cert.lhs = induce_character(chi_u, ctx.n);

  // work inside G_U: its own clifford context over (the copy of) N
  std::vector<int> n_in_gu;
  for (int p : ctx.n.to_parent) n_in_gu.push_back(gu.restrict_index(p));
  Subgroup n_sub = make_subgroup(gu.group, n_in_gu);
  CliffordContext inner_ctx = make_clifford_context(gu.group, n_sub);
  // the matrix rep transported to the inner copy of N
  MatrixRep u_inner;
  u_inner.dim = u.dim;
  u_inner.mats.resize(static_cast<std::size_t>(n_sub.group->size()));
  for (int s = 0; s < n_sub.group->size(); ++s) {
    int in_g = gu.embed(n_sub.embed(s));
    u_inner.mats[static_cast<std::size_t>(s)] = u.at(ctx.n.restrict_index(in_g));
  }

  ProjectiveExtensionData data = intertwiners(inner_ctx, u_inner);
  FiniteExtension ext = build_extension(data);
  auto ext_table = character_table(ext.group);

  // genuine irreducibles E, and W = U (x) E as characters of G_U
  Cplx want = ext.r == 1 ? Cplx(1, 0)
                         : Cplx(std::cos(-2 * kPi / static_cast<double>(ext.r)),
                                std::sin(-2 * kPi / static_cast<double>(ext.r)));
  int zeta = ext.index(1 % ext.r, inner_ctx.a.project(gu.group->identity()));
  long long dimsq_sum = 0;
  for (const auto& e_chi : ext_table.irreps) {
    if (ext.r != 1 && std::abs(central_value(e_chi, zeta) - want) > 1e-6) continue;
    long long de = std::llround(e_chi.dim());
    dimsq_sum += de * de;
    CVec wvals(gu.group->size());
    for (int x = 0; x < gu.group->size(); ++x) {
      int coset = inner_ctx.a.project(x);
      int sa = inner_ctx.rep_of(coset);
      int nelt = gu.group->mul(x, gu.group->inv(sa));
      CMat bx = u_inner.at(inner_ctx.n.restrict_index(nelt)) *
                data.intertwiner[static_cast<std::size_t>(coset)];
      wvals[x] = bx.trace() * e_chi.vals[ext.index(0, coset)];
    }
    InductionSummand s;
    s.dim_e = de;
    s.w = Character{gu.group, wvals};
    require(snap_int(inner_raw(s.w, s.w)) == 1, "IdentityFailure",
            "U (x) E is not irreducible");
    s.induced = induce_character(s.w, gu);
    cert.summands.push_back(std::move(s));
  }
  require(dimsq_sum == inner_ctx.m, "IdentityFailure",
          "genuine dimensions do not sum to |A_U|");
  // mutual non-isomorphism
  for (std::size_t i = 0; i < cert.summands.size(); ++i)
    for (std::size_t j = i + 1; j < cert.summands.size(); ++j)
      require(snap_int(inner_raw(cert.summands[i].w, cert.summands[j].w)) == 0,
              "IdentityFailure", "U (x) E summands are isomorphic");

  Character rhs = zero_character(ctx.g);
  for (const auto& s : cert.summands) {
    CVec scaled = static_cast<double>(s.dim_e) * s.induced.vals;
    rhs = sum_character(rhs, Character{ctx.g, scaled});
  }
  cert.holds = char_equal(cert.lhs, rhs, 1e-5);
  if (!cert.holds)
    fail("IdentityFailure", "Ind_N^G U != sum dim(E) Ind(U (x) E); lhs(1)=" +
                                std::to_string(cert.lhs.vals[ctx.g->identity()].real()) +
                                " rhs(1)=" +
                                std::to_string(rhs.vals[ctx.g->identity()].real()));
  return cert;
}

// ---------------------------------------------------------------------------
// fixture loading
// ---------------------------------------------------------------------------
std::vector<std::string> list_fixture_files(const std::string& dir, const std::string& ext) {
  std::vector<std::string> files;
  std::error_code ec;
  for (const auto& entry : std::filesystem::directory_iterator(dir, ec)) {
    if (entry.path().extension() == ext) files.push_back(entry.path().string());
  }
  require(!ec, "FixtureParseError", "cannot read fixture directory " + dir);
  std::sort(files.begin(), files.end());
  return files;
}

CliffordFixture load_clifford_fixture(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), "FixtureParseError", "cannot open fixture " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    fail("FixtureParseError", "bad JSON in " + path + ": " + e.what());
  }
  CliffordFixture fx;
  try {
    fx.name = j.at("name").get<std::string>();
    int degree = j.at("group").at("degree").get<int>();
    std::vector<Perm> gens;
    for (const auto& s : j.at("group").at("generators"))
      gens.push_back(parse_cycles(s.get<std::string>(), degree));
    fx.g = Group::from_perms(degree, gens);
    std::vector<int> n_elems;
    std::vector<std::pair<int, CMat>> images;
    const auto& rep = j.at("rep");
    fx.rep_name = rep.at("name").get<std::string>();
    int dim = rep.at("dim").get<int>();
    std::vector<int> n_gens;
    for (const auto& s : j.at("normal_generators")) {
      Perm p = parse_cycles(s.get<std::string>(), degree);
      auto idx = fx.g->find_element(p);
      require(idx.has_value(), "FixtureParseError",
              "normal generator outside the group in " + path);
      n_gens.push_back(*idx);
    }
    n_elems = fx.g->closure(n_gens);
    fx.n = make_subgroup(fx.g, n_elems);
    for (const auto& [key, rows] : rep.at("matrices").items()) {
      Perm p = parse_cycles(key, degree);
      auto idx = fx.g->find_element(p);
      require(idx.has_value(), "FixtureParseError", "matrix key outside the group in " + path);
      CMat m(dim, dim);
      int r = 0;
      for (const auto& row : rows) {
        int c = 0;
        for (const auto& cell : row) m(r, c++) = parse_cyclotomic(cell.get<std::string>());
        ++r;
      }
      images.emplace_back(fx.n.restrict_index(*idx), m);
    }
    fx.u = rep_from_generators(fx.n, images);
  } catch (const nlohmann::json::exception& e) {
    fail("FixtureParseError", "fixture schema error in " + path + ": " + e.what());
  }
  return fx;
}

}  // namespace algver
