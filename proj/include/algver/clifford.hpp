#pragma once

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <vector>

#include "algver/character.hpp"
#include "algver/group.hpp"

namespace algver {

using CMat = Eigen::MatrixXcd;

// G with a normal subgroup N, the quotient A = G/N, and coset representatives
// s(a) with s(identity coset) = identity.
struct CliffordContext {
  GroupPtr g;
  Subgroup n;
  Quotient a;
  std::vector<int> reps;  // coset index -> representative in G
  int m = 0;              // |A|

  int rep_of(int coset) const { return reps[static_cast<std::size_t>(coset)]; }
};

CliffordContext make_clifford_context(GroupPtr g, const Subgroup& n);

// chi^g(n) = chi(g n g^-1) for chi on a normal subgroup and g in the parent
Character conj_char(const Character& chi_of_n, const Subgroup& n, int g_parent);

// stabilizer G_U of an N-character under conjugation; always contains N
Subgroup stabilizer(const CliffordContext& ctx, const Character& chi_of_n);

struct CliffordRestriction {
  long long multiplicity = 0;        // e
  std::vector<Character> orbit;      // pairwise distinct N-irreducibles
};

// pi|_N = e * sum over one G-orbit of N-irreducibles
CliffordRestriction clifford_restriction(const CliffordContext& ctx, const Character& pi,
                                         const CharacterTable& n_table);

// <Ind V, Ind V> = 1 for V an irreducible of G_U lying over U
bool induced_irreducibility_check(const CliffordContext& ctx, const Subgroup& gu,
                                  const Character& v, const Character& u);

// explicit matrix representation of the normal subgroup
struct MatrixRep {
  std::vector<CMat> mats;  // indexed by elements of the subgroup's own group
  int dim = 0;

  const CMat& at(int n_index) const { return mats[static_cast<std::size_t>(n_index)]; }
};

// extend generator images multiplicatively over the subgroup; consistency is
// checked on every revisit
MatrixRep rep_from_generators(const Subgroup& n,
                              const std::vector<std::pair<int, CMat>>& gen_images);

Character rep_character(const Subgroup& n, const MatrixRep& rep);

struct ProjectiveExtensionData {
  CliffordContext ctx;
  MatrixRep u;
  std::vector<CMat> intertwiner;          // per coset of A, det-normalized
  std::vector<std::vector<Cplx>> cocycle; // c(a,b), |A| x |A|
  int m = 0;                              // |A|
};

// Solves the intertwining systems A_a U(n) A_a^{-1} = U(s_a n s_a^{-1}),
// normalizes so the twisted-algebra action has determinant 1, and extracts
// the mu_m-valued cocycle. Requires G_U = G (the context group stabilizes U).
ProjectiveExtensionData intertwiners(const CliffordContext& ctx, const MatrixRep& u);

// every c(a,b)^m snaps to 1
bool cocycle_order_check(const ProjectiveExtensionData& data);

// skew form <a,b> = [s(a), s(b)] as a root of unity; A must be abelian
Cplx abelian_skew(const ProjectiveExtensionData& data, int a, int b);
std::vector<int> skew_radical(const ProjectiveExtensionData& data);

// every genuine irreducible of the extension has dim = sqrt(|A / radical|),
// and A-character twists act transitively with radical-detected coincidences
bool genuine_dim_check(const ProjectiveExtensionData& data);

struct InductionSummand {
  long long dim_e = 0;
  Character w;         // U (x) E as a G_U character
  Character induced;   // Ind_{G_U}^G of it
};

struct InductionCertificate {
  Subgroup gu;
  std::vector<InductionSummand> summands;
  Character lhs;  // Ind_N^G U
  bool holds = false;
};

// Prop-A2 style decomposition Ind_N^G U = sum_E dim(E) Ind_{G_U}^G (U (x) E),
// built from the explicit finite central extension of A_U by mu_r
InductionCertificate decompose_induction(const CliffordContext& ctx, const MatrixRep& u);

// ---------------------------------------------------------------------------
// fixtures
// ---------------------------------------------------------------------------
struct CliffordFixture {
  std::string name;
  GroupPtr g;
  Subgroup n;
  std::string rep_name;
  MatrixRep u;
};

CliffordFixture load_clifford_fixture(const std::string& path);
std::vector<std::string> list_fixture_files(const std::string& dir, const std::string& ext);

}  // namespace algver
