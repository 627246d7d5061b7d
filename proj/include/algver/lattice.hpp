#pragma once

#include <Eigen/Core>
#include <optional>
#include <string>
#include <vector>

#include "algver/error.hpp"

namespace algver {

using MatZ = Eigen::Matrix<long long, Eigen::Dynamic, Eigen::Dynamic>;
using VecZ = Eigen::Matrix<long long, Eigen::Dynamic, 1>;

// U * M * V = D, diagonal with d_i | d_{i+1}, U and V unimodular.
// Inverses are tracked so callers can produce lattice bases.
struct SnfResult {
  MatZ u, uinv, v, vinv, d;
  int rank = 0;
  std::vector<long long> diagonal() const;
};

SnfResult smith_normal_form(const MatZ& m);

// solve A y = x over the integers; nullopt when x is outside the column span
std::optional<VecZ> solve_in_colspan(const MatZ& a, const VecZ& x);

// basis of the column span (full column rank matrix, possibly 0 columns)
MatZ lattice_basis(const MatZ& gens);

// every column of sub inside colspan(of)?
bool lattice_contains(const MatZ& of, const MatZ& sub);

bool lattice_equal(const MatZ& a, const MatZ& b);

// integer kernel basis of m (columns span {x : m x = 0})
MatZ kernel_basis(const MatZ& m);

// ---------------------------------------------------------------------------
// finitely generated abelian groups as cokernels of integer matrices
// ---------------------------------------------------------------------------
class FinGenAbGroup {
 public:
  // group = Z^gens / colspan(rels); rels may have zero columns
  FinGenAbGroup(int gens, MatZ rels);

  static FinGenAbGroup free_group(int rank);
  static FinGenAbGroup torsion(const std::vector<long long>& orders);  // direct sum Z/o_i

  int gens() const { return gens_; }
  const MatZ& rels() const { return rels_; }
  int free_rank() const { return free_rank_; }
  // invariant factors > 1, in divisibility order
  const std::vector<long long>& torsion_factors() const { return torsion_; }

  bool isomorphic(const FinGenAbGroup& o) const {
    return free_rank_ == o.free_rank_ && torsion_ == o.torsion_;
  }

  bool trivial() const { return free_rank_ == 0 && torsion_.empty(); }

  std::string str() const;

 private:
  int gens_;
  MatZ rels_;
  int free_rank_ = 0;
  std::vector<long long> torsion_;
};

// homomorphism of presented groups, given on generators
struct AbHom {
  FinGenAbGroup src;
  FinGenAbGroup dst;
  MatZ m;  // dst.gens x src.gens

  AbHom(FinGenAbGroup s, FinGenAbGroup d, MatZ mat);
};

FinGenAbGroup hom_kernel(const AbHom& h);
FinGenAbGroup hom_cokernel(const AbHom& h);

// image(f) == kernel(g) as subgroups of the middle group
bool check_exact(const AbHom& f, const AbHom& g);

// character-lattice verification of 1 -> Res^1 -> Res_{K/F} Gm -> Gm -> 1 for
// split K = F^d; returns the cokernel lattice (dual of the norm-one torus)
struct NormSequenceReport {
  bool exact = false;
  FinGenAbGroup kernel_dual;
};
NormSequenceReport example2_check(int d);

// x -> N(x) x^{-n} on the rank-d split torus: cokernel of (J - nI)^T and
// whether it matches (Z/n)^{d-1}, the character group of Res^1(mu_n)
struct IsogenyCriterion {
  bool iso = false;
  FinGenAbGroup kernel_dual;
  long long abs_det = 0;
};
IsogenyCriterion example3_criterion(long long n, int d);

// finite enumeration of Res(mu_n)/mu_n -> Res^1(mu_n), v -> (sum v) 1 - k v
// with k = d mod n; checks well-definedness and bijectivity
bool center_iso_check(long long n, int d);

// row-list text like "[[2,0],[0,3]]"
MatZ parse_matz(const std::string& text);

}  // namespace algver
