#pragma once

#include <Eigen/Dense>
#include <complex>
#include <string>
#include <vector>

#include "algver/group.hpp"

namespace algver {

using Cplx = std::complex<double>;
using CVec = Eigen::VectorXcd;

constexpr double kSnapTol = 1e-6;
constexpr double kOrthTol = 1e-8;

// class function stored per element; constancy on classes is an invariant
struct Character {
  GroupPtr g;
  CVec vals;

  double dim() const { return vals[g->identity()].real(); }
  Cplx at(int x) const { return vals[x]; }
};

struct CharacterTable {
  GroupPtr g;
  std::vector<Character> irreps;
  std::vector<std::vector<int>> classes;
  std::vector<int> class_of;
};

// Burnside-Dixon via simultaneous eigenvectors of the class-sum matrices.
// Deterministic for a fixed group; throws SnapFailure / SizeBound.
CharacterTable character_table(GroupPtr g, long long size_bound = 5000);

// <chi, psi> = (1/|G|) sum chi psibar
Cplx inner_raw(const Character& a, const Character& b);
// snapped to a nonnegative integer; SnapFailure beyond tolerance
long long inner(const Character& a, const Character& b);

long long snap_int(double x, double tol = kSnapTol);
long long snap_int(const Cplx& x, double tol = kSnapTol);

Character trivial_character(GroupPtr g);
Character regular_character(GroupPtr g);
Character product_character(const Character& a, const Character& b);  // pointwise
Character dual_character(const Character& a);                         // complex conjugate
Character sum_character(const Character& a, const Character& b);
Character zero_character(GroupPtr g);
bool char_equal(const Character& a, const Character& b, double tol = kSnapTol);
bool char_is_zero(const Character& a, double tol = kSnapTol);

Character restrict_character(const Character& chi, const Subgroup& h);
Character induce_character(const Character& chi, const Subgroup& h);
// chi^g(x) = chi(g x g^-1)
Character conjugate_character(const Character& chi, int g);
// pull a quotient character back to the parent
Character pullback(const Character& chi, const Quotient& q);
// descend a parent character that is constant on cosets
Character descend(const Character& chi, const Quotient& q);
// box tensor on a direct product
Character box_character(const ProductGroup& p, const Character& a, const Character& b);

// multiplicities of chi in the table rows; verifies exact reconstruction
std::vector<long long> decompose(const Character& chi, const CharacterTable& t);

// central character of an irreducible on a central element: chi(z)/chi(1)
Cplx central_value(const Character& chi, int z);

// cyclotomic value text: integer combinations of zN^k, e.g. "z8^3 - z8", "-1"
Cplx parse_cyclotomic(const std::string& text);

}  // namespace algver
