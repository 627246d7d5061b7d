#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "algver/error.hpp"

namespace algver {

using Perm = std::vector<int>;  // images under the permutation, 0-based

Perm parse_cycles(const std::string& text, int degree);
Perm compose_perms(const Perm& first_applied, const Perm& then_applied);

class Group;
using GroupPtr = std::shared_ptr<const Group>;

// Finite group on indices 0..n-1. Small groups carry a Cayley table;
// permutation-constructed groups above the table bound multiply by composing
// stored permutation words.
class Group : public std::enable_shared_from_this<Group> {
 public:
  static constexpr int kTableBound = 4096;

  // table[a * n + b] = a * b; identity/inverses located and verified,
  // associativity spot-checked
  static GroupPtr from_table(int n, std::vector<int> table);
  static GroupPtr from_perms(int degree, const std::vector<Perm>& generators,
                             long long max_size = 200000);
  static GroupPtr cyclic(int n);
  static GroupPtr abelian(const std::vector<int>& orders);

  int size() const { return n_; }
  int identity() const { return identity_; }
  int mul(int a, int b) const {
    return table_.empty() ? perm_mul(a, b) : table_[static_cast<std::size_t>(a) * n_ + b];
  }
  int inv(int a) const { return inv_[static_cast<std::size_t>(a)]; }
  int conj(int g, int x) const { return mul(mul(g, x), inv(g)); }  // g x g^-1
  int pow(int a, long long e) const;
  int element_order(int a) const;
  bool is_abelian() const;

  const std::vector<std::vector<int>>& classes() const;        // conjugacy classes
  const std::vector<int>& class_of() const;                    // element -> class index
  std::vector<int> center() const;

  std::vector<int> closure(std::vector<int> seed) const;       // sorted subgroup elements
  bool is_subgroup(const std::vector<int>& elems) const;
  bool is_normal(const std::vector<int>& elems) const;
  bool is_central(const std::vector<int>& elems) const;

  // generators recorded at construction (perm-built groups)
  const std::vector<int>& generators() const { return generators_; }

  // element index of a permutation, for groups built from permutations
  std::optional<int> find_element(const Perm& p) const {
    auto it = perm_index_.find(p);
    if (it == perm_index_.end()) return std::nullopt;
    return it->second;
  }

 private:
  Group() = default;
  int perm_mul(int a, int b) const;

  int n_ = 0;
  int identity_ = 0;
  std::vector<int> inv_;
  std::vector<int> table_;   // empty for the permutation backend
  std::vector<Perm> perms_;  // element index -> permutation (perm backend or provenance)
  std::map<Perm, int> perm_index_;
  std::vector<int> generators_;

  mutable std::vector<std::vector<int>> classes_;
  mutable std::vector<int> class_of_;
};

// subgroup with its embedding into the parent
struct Subgroup {
  GroupPtr group;
  GroupPtr parent;
  std::vector<int> to_parent;
  std::vector<int> from_parent;  // -1 outside

  int embed(int s) const { return to_parent[static_cast<std::size_t>(s)]; }
  int restrict_index(int p) const {
    int s = from_parent[static_cast<std::size_t>(p)];
    require(s >= 0, "NotSubgroup", "element outside the subgroup");
    return s;
  }
  bool contains(int p) const { return from_parent[static_cast<std::size_t>(p)] >= 0; }
};

Subgroup make_subgroup(GroupPtr g, std::vector<int> elements);
Subgroup trivial_subgroup(GroupPtr g);
Subgroup full_subgroup(GroupPtr g);

// quotient with its projection map
struct Quotient {
  GroupPtr group;
  GroupPtr parent;
  std::vector<int> proj;  // parent element -> quotient element

  int project(int p) const { return proj[static_cast<std::size_t>(p)]; }
  // any preimage of a quotient element
  int section(int q) const {
    for (int p = 0; p < parent->size(); ++p)
      if (proj[static_cast<std::size_t>(p)] == q) return p;
    fail("NotSubgroup", "quotient element without preimage");
  }
};

Quotient quotient_by_normal(GroupPtr g, const std::vector<int>& normal_elems);
// requires the subgroup to be central; error codes NotCentral / NotSubgroup
Quotient central_quotient(GroupPtr g, const std::vector<int>& z_elems);

// direct product with index bookkeeping
struct ProductGroup {
  GroupPtr group;
  GroupPtr a;
  GroupPtr b;

  int index(int x, int y) const { return x * b->size() + y; }
  std::pair<int, int> parts(int i) const { return {i / b->size(), i % b->size()}; }
};

ProductGroup direct_product(GroupPtr a, GroupPtr b);

// named small groups used across fixtures and tests
GroupPtr group_s3();
GroupPtr group_d4();
GroupPtr group_q8();
GroupPtr group_a4();
GroupPtr group_sl2_f3();

}  // namespace algver
