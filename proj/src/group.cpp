#include "algver/group.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>

namespace algver {

Perm parse_cycles(const std::string& text, int degree) {
  Perm p(static_cast<std::size_t>(degree));
  std::iota(p.begin(), p.end(), 0);
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    require(text[i] == '(', "FixtureParseError", "expected '(' in cycles: " + text);
    ++i;
    std::vector<int> cycle;
    while (i < text.size() && text[i] != ')') {
      if (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ',') {
        ++i;
        continue;
      }
      require(std::isdigit(static_cast<unsigned char>(text[i])), "FixtureParseError",
              "bad cycle entry in: " + text);
      int v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        v = v * 10 + (text[i++] - '0');
      require(v >= 1 && v <= degree, "FixtureParseError",
              "cycle point out of range in: " + text);
      cycle.push_back(v - 1);
    }
    require(i < text.size(), "FixtureParseError", "unterminated cycle in: " + text);
    ++i;  // ')'
    for (std::size_t k = 0; k < cycle.size(); ++k)
      p[static_cast<std::size_t>(cycle[k])] = cycle[(k + 1) % cycle.size()];
  }
  return p;
}

Perm compose_perms(const Perm& first_applied, const Perm& then_applied) {
  Perm r(first_applied.size());
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] = then_applied[static_cast<std::size_t>(first_applied[i])];
  return r;
}

GroupPtr Group::from_table(int n, std::vector<int> table) {
  require(n >= 1 && static_cast<int>(table.size()) == n * n, "FixtureParseError",
          "cayley table has wrong size");
  auto g = std::shared_ptr<Group>(new Group());
  g->n_ = n;
  g->table_ = std::move(table);
  // identity: the unique e with e*x = x*e = x
  int e = -1;
  for (int cand = 0; cand < n; ++cand) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      ok = g->table_[static_cast<std::size_t>(cand) * n + x] == x &&
           g->table_[static_cast<std::size_t>(x) * n + cand] == x;
    if (ok) {
      e = cand;
      break;
    }
  }
  require(e >= 0, "FixtureParseError", "cayley table has no identity");
  g->identity_ = e;
  g->inv_.assign(static_cast<std::size_t>(n), -1);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y)
      if (g->table_[static_cast<std::size_t>(x) * n + y] == e &&
          g->table_[static_cast<std::size_t>(y) * n + x] == e) {
        g->inv_[static_cast<std::size_t>(x)] = y;
        break;
      }
    require(g->inv_[static_cast<std::size_t>(x)] >= 0, "FixtureParseError",
            "cayley table element without inverse");
  }
  // associativity spot check (full check is cubic; sample deterministically)
  long long step = std::max(1, n / 17);
  for (long long a = 0; a < n; a += step)
    for (long long b = 0; b < n; b += step)
      for (long long c = 0; c < n; c += step)
        require(g->mul(g->mul(static_cast<int>(a), static_cast<int>(b)), static_cast<int>(c)) ==
                    g->mul(static_cast<int>(a), g->mul(static_cast<int>(b), static_cast<int>(c))),
                "FixtureParseError", "cayley table is not associative");
  return g;
}

GroupPtr Group::from_perms(int degree, const std::vector<Perm>& generators, long long max_size) {
  auto g = std::shared_ptr<Group>(new Group());
  Perm id(static_cast<std::size_t>(degree));
  std::iota(id.begin(), id.end(), 0);
  g->perms_.push_back(id);
  g->perm_index_[id] = 0;
  for (const auto& gen : generators)
    require(static_cast<int>(gen.size()) == degree, "FixtureParseError",
            "generator degree mismatch");
  // BFS closure
  std::vector<int> frontier{0};
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int idx : frontier)
      for (const auto& gen : generators) {
        Perm w = compose_perms(g->perms_[static_cast<std::size_t>(idx)], gen);
        auto it = g->perm_index_.find(w);
        if (it == g->perm_index_.end()) {
          int ni = static_cast<int>(g->perms_.size());
          require(ni < max_size, "SizeBound", "permutation closure exceeds bound");
          g->perm_index_[w] = ni;
          g->perms_.push_back(std::move(w));
          next.push_back(ni);
        }
      }
    frontier = std::move(next);
  }
  g->n_ = static_cast<int>(g->perms_.size());
  g->identity_ = 0;
  for (const auto& gen : generators) {
    auto it = g->perm_index_.find(gen);
    require(it != g->perm_index_.end(), "FixtureParseError", "generator missing from closure");
    g->generators_.push_back(it->second);
  }
  if (g->n_ <= kTableBound) {
    g->table_.assign(static_cast<std::size_t>(g->n_) * g->n_, 0);
    for (int a = 0; a < g->n_; ++a)
      for (int b = 0; b < g->n_; ++b)
        g->table_[static_cast<std::size_t>(a) * g->n_ + b] = g->perm_mul(a, b);
  }
  g->inv_.assign(static_cast<std::size_t>(g->n_), -1);
  for (int a = 0; a < g->n_; ++a) {
    // inverse permutation lookup
    const Perm& p = g->perms_[static_cast<std::size_t>(a)];
    Perm pinv(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) pinv[static_cast<std::size_t>(p[i])] = static_cast<int>(i);
    auto it = g->perm_index_.find(pinv);
    require(it != g->perm_index_.end(), "FixtureParseError", "closure not inverse-closed");
    g->inv_[static_cast<std::size_t>(a)] = it->second;
  }
  return g;
}

int Group::perm_mul(int a, int b) const {
  Perm w = compose_perms(perms_[static_cast<std::size_t>(a)], perms_[static_cast<std::size_t>(b)]);
  auto it = perm_index_.find(w);
  require(it != perm_index_.end(), "FixtureParseError", "product escapes the group");
  return it->second;
}

GroupPtr Group::cyclic(int n) {
  require(n >= 1, "ConfigError", "cyclic group needs n >= 1");
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) table[static_cast<std::size_t>(a) * n + b] = (a + b) % n;
  return from_table(n, std::move(table));
}

GroupPtr Group::abelian(const std::vector<int>& orders) {
  int n = 1;
  for (int o : orders) {
    require(o >= 1, "ConfigError", "abelian factor must be positive");
    n *= o;
  }
  auto add = [&](int a, int b) {
    int r = 0, mult = 1;
    for (int o : orders) {
      r += ((a % o + b % o) % o) * mult;
      a /= o;
      b /= o;
      mult *= o;
    }
    return r;
  };
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) table[static_cast<std::size_t>(a) * n + b] = add(a, b);
  return from_table(n, std::move(table));
}

int Group::pow(int a, long long e) const {
  int r = identity_;
  if (e < 0) {
    a = inv(a);
    e = -e;
  }
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

int Group::element_order(int a) const {
  int x = a, k = 1;
  while (x != identity_) {
    x = mul(x, a);
    ++k;
    require(k <= n_, "FixtureParseError", "element order exceeds group size");
  }
  return k;
}

bool Group::is_abelian() const {
  for (int a = 0; a < n_; ++a)
    for (int b = a + 1; b < n_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

const std::vector<std::vector<int>>& Group::classes() const {
  if (!classes_.empty()) return classes_;
  class_of_.assign(static_cast<std::size_t>(n_), -1);
  for (int x = 0; x < n_; ++x) {
    if (class_of_[static_cast<std::size_t>(x)] >= 0) continue;
    std::vector<int> cls;
    std::set<int> seen;
    for (int g = 0; g < n_; ++g) seen.insert(conj(g, x));
    cls.assign(seen.begin(), seen.end());
    int ci = static_cast<int>(classes_.size());
    for (int y : cls) class_of_[static_cast<std::size_t>(y)] = ci;
    classes_.push_back(std::move(cls));
  }
  return classes_;
}

const std::vector<int>& Group::class_of() const {
  classes();
  return class_of_;
}

std::vector<int> Group::center() const {
  std::vector<int> z;
  for (int x = 0; x < n_; ++x) {
    bool central = true;
    for (int g = 0; g < n_ && central; ++g) central = mul(x, g) == mul(g, x);
    if (central) z.push_back(x);
  }
  return z;
}

std::vector<int> Group::closure(std::vector<int> seed) const {
  std::set<int> elems(seed.begin(), seed.end());
  elems.insert(identity_);
  std::vector<int> frontier(elems.begin(), elems.end());
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int a : frontier)
      for (int s : seed) {
        for (int c : {mul(a, s), mul(a, inv(s))})
          if (elems.insert(c).second) next.push_back(c);
      }
    frontier = std::move(next);
  }
  return {elems.begin(), elems.end()};
}

bool Group::is_subgroup(const std::vector<int>& elems) const {
  std::set<int> s(elems.begin(), elems.end());
  if (!s.count(identity_)) return false;
  for (int a : elems)
    for (int b : elems)
      if (!s.count(mul(a, b))) return false;
  return true;
}

bool Group::is_normal(const std::vector<int>& elems) const {
  std::set<int> s(elems.begin(), elems.end());
  for (int g = 0; g < n_; ++g)
    for (int x : elems)
      if (!s.count(conj(g, x))) return false;
  return true;
}

bool Group::is_central(const std::vector<int>& elems) const {
  for (int x : elems)
    for (int g = 0; g < n_; ++g)
      if (mul(x, g) != mul(g, x)) return false;
  return true;
}

Subgroup make_subgroup(GroupPtr g, std::vector<int> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  require(g->is_subgroup(elements), "NotSubgroup", "element set is not a subgroup");
  int m = static_cast<int>(elements.size());
  if (m == g->size()) {  // the whole group: reuse it, identity maps
    Subgroup s;
    s.parent = g;
    s.group = g;
    s.to_parent = elements;
    s.from_parent = elements;
    return s;
  }
  std::vector<int> from(static_cast<std::size_t>(g->size()), -1);
  for (int i = 0; i < m; ++i) from[static_cast<std::size_t>(elements[static_cast<std::size_t>(i)])] = i;
  std::vector<int> table(static_cast<std::size_t>(m) * m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      int prod = g->mul(elements[static_cast<std::size_t>(a)], elements[static_cast<std::size_t>(b)]);
      int pi = from[static_cast<std::size_t>(prod)];
      require(pi >= 0, "NotSubgroup", "subgroup not closed under product");
      table[static_cast<std::size_t>(a) * m + b] = pi;
    }
  Subgroup s;
  s.parent = g;
  s.group = Group::from_table(m, std::move(table));
  s.to_parent = std::move(elements);
  s.from_parent = std::move(from);
  return s;
}

Subgroup trivial_subgroup(GroupPtr g) { return make_subgroup(g, {g->identity()}); }

Subgroup full_subgroup(GroupPtr g) {
  std::vector<int> all(static_cast<std::size_t>(g->size()));
  std::iota(all.begin(), all.end(), 0);
  return make_subgroup(g, all);
}

Quotient quotient_by_normal(GroupPtr g, const std::vector<int>& normal_elems) {
  require(g->is_subgroup(normal_elems), "NotSubgroup", "quotient needs a subgroup");
  require(g->is_normal(normal_elems), "NotCentral", "quotient needs a normal subgroup");
  int n = g->size();
  std::vector<int> coset(static_cast<std::size_t>(n), -1);
  std::vector<int> reps;
  for (int x = 0; x < n; ++x) {
    if (coset[static_cast<std::size_t>(x)] >= 0) continue;
    int ci = static_cast<int>(reps.size());
    reps.push_back(x);
    for (int z : normal_elems) coset[static_cast<std::size_t>(g->mul(x, z))] = ci;
  }
  int m = static_cast<int>(reps.size());
  std::vector<int> table(static_cast<std::size_t>(m) * m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      table[static_cast<std::size_t>(a) * m + b] =
          coset[static_cast<std::size_t>(g->mul(reps[static_cast<std::size_t>(a)],
                                                reps[static_cast<std::size_t>(b)]))];
  // well-definedness across representatives
  for (int x = 0; x < n; ++x)
    for (int z : normal_elems) {
      int y = g->mul(x, z);
      require(coset[static_cast<std::size_t>(y)] == coset[static_cast<std::size_t>(x)],
              "NotSubgroup", "coset partition inconsistent");
    }
  Quotient q;
  q.parent = g;
  q.group = Group::from_table(m, std::move(table));
  q.proj = std::move(coset);
  return q;
}

Quotient central_quotient(GroupPtr g, const std::vector<int>& z_elems) {
  require(g->is_subgroup(z_elems), "NotSubgroup", "central quotient needs a subgroup");
  require(g->is_central(z_elems), "NotCentral", "subgroup is not central");
  return quotient_by_normal(g, z_elems);
}

ProductGroup direct_product(GroupPtr a, GroupPtr b) {
  int n = a->size() * b->size();
  require(n <= 100000, "SizeBound", "product group too large");
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int x1 = 0; x1 < a->size(); ++x1)
    for (int y1 = 0; y1 < b->size(); ++y1)
      for (int x2 = 0; x2 < a->size(); ++x2)
        for (int y2 = 0; y2 < b->size(); ++y2) {
          int i = x1 * b->size() + y1;
          int j = x2 * b->size() + y2;
          table[static_cast<std::size_t>(i) * n + j] =
              a->mul(x1, x2) * b->size() + b->mul(y1, y2);
        }
  ProductGroup p;
  p.a = a;
  p.b = b;
  p.group = Group::from_table(n, std::move(table));
  return p;
}

GroupPtr group_s3() {
  return Group::from_perms(3, {parse_cycles("(1 2 3)", 3), parse_cycles("(1 2)", 3)});
}

GroupPtr group_d4() {
  return Group::from_perms(4, {parse_cycles("(1 2 3 4)", 4), parse_cycles("(1 3)", 4)});
}

GroupPtr group_q8() {
  return Group::from_perms(
      8, {parse_cycles("(1 3 2 4)(5 7 6 8)", 8), parse_cycles("(1 5 2 6)(3 8 4 7)", 8)});
}

GroupPtr group_a4() {
  return Group::from_perms(4, {parse_cycles("(1 2 3)", 4), parse_cycles("(1 2)(3 4)", 4)});
}

GroupPtr group_sl2_f3() {
  return Group::from_perms(
      8, {parse_cycles("(1 3 2 6)(4 5 8 7)", 8), parse_cycles("(3 4 5)(6 8 7)", 8)});
}

}  // namespace algver
