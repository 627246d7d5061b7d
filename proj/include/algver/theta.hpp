#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "algver/character.hpp"
#include "algver/clifford.hpp"
#include "algver/group.hpp"

namespace algver {

// Literal similitude construction: G~ = (G x T)/Z^nabla with sim onto T/j(Z).
// z_pairs lists the graph of j: (z in G, j(z) in T).
struct SimilitudeData {
  GroupPtr g;                         // the isometry group the construction started from
  GroupPtr gt;                        // G~
  std::vector<int> g_to_gt;           // G -> G~ (the map g -> [g, 1])
  std::vector<int> g_image;           // image of G in G~ (sorted)
  std::vector<int> tau;               // T -> G~, central
  GroupPtr t;
  GroupPtr s;                         // T/j(Z)
  std::vector<int> t_to_s;            // projection T -> S
  std::vector<int> sim;               // G~ -> S
  std::vector<std::pair<int, int>> z_pairs;  // graph of j: (z in G, j(z) in T)
};

SimilitudeData build_similitude(GroupPtr g, GroupPtr t,
                                const std::vector<std::pair<int, int>>& z_pairs);

// Finite model of the F-points of a similitude dual pair. The two tilde
// groups come with sim maps into a common S and compatible central copies of
// T; the literal construction above is one way to produce them.
struct ThetaInstance {
  std::string name;
  GroupPtr g_tilde, h_tilde;
  GroupPtr s;
  std::vector<int> sim_g, sim_h;  // element maps into S
  GroupPtr t;
  std::vector<int> tau_g, tau_h;  // central embeddings of T
  bool literal = false;           // built by build_similitude on both sides
  // literal-only provenance for the iota checks
  std::optional<SimilitudeData> lit_g, lit_h;
  // seesaw data: a subgroup H' of H given by h_tilde element indices
  std::vector<int> seesaw_hprime;
};

// Assembled model with the groups and caches every check needs.
class ThetaModel {
 public:
  // assembles the groups; omega is attached afterwards (it lives on the
  // assembled jsim group)
  explicit ThetaModel(ThetaInstance inst);
  void set_omega(const Character& omega_on_jsim);

  const ThetaInstance& inst() const { return inst_; }
  const ProductGroup& ambient() const { return prod_; }
  const Subgroup& jsim() const { return jsim_; }
  GroupPtr jsim_group() const { return jsim_.group; }
  const Subgroup& g_plus() const { return g_plus_; }
  const Subgroup& h_plus() const { return h_plus_; }
  const Character& omega() const { return omega_; }

  // element maps
  int jsim_to_gplus(int j) const { return j_to_gp_[static_cast<std::size_t>(j)]; }
  int jsim_to_hplus(int j) const { return j_to_hp_[static_cast<std::size_t>(j)]; }

  // isometry subgroups inside the plus groups
  const Subgroup& g_iso() const { return g_iso_; }    // in g_plus().group
  const Subgroup& h_iso() const { return h_iso_; }    // in h_plus().group
  // T element -> plus-group element
  int t_in_gplus(int t) const { return tau_gp_[static_cast<std::size_t>(t)]; }
  int t_in_hplus(int t) const { return tau_hp_[static_cast<std::size_t>(t)]; }
  const std::vector<int>& z_in_t() const { return z_in_t_; }

  // index of (g, h) in jsim_group() for isometry elements
  int pair_in_jsim(int g_sub, int h_sub) const;

  // structural checks of 2.3/2.5/3 (throws on violation; returns counts)
  struct StructureReport {
    long long jsim_order = 0;
    bool g_plus_full = false;
    bool h_plus_full = false;
    bool iff_g = false;  // (G~+ = G~) == (sim_G(G~) contained in sim_H(H~))
    bool iff_h = false;
    bool kernel_is_t_nabla = false;  // ker(iota) for literal instances
    bool quotient_iso = false;       // jsim / T^nabla = (G x H)/Z^nabla (literal)
  };
  StructureReport check_structure() const;

  // Theta(pi~) = (Omega (x) pi~^dual)_G as an H~+ character
  Character big_theta(const Character& pi_on_gplus) const;
  // same with the roles of the two sides exchanged
  Character big_theta_rev(const Character& sigma_on_hplus) const;
  // isometry-level lift of an Irr(G) character to an H character
  Character isometry_theta(const Character& pi_on_g) const;
  Character isometry_theta_rev(const Character& sigma_on_h) const;

  // induced model: Omega~ = ind_{Jsim}^{G~+ x H~+} Omega, then the lift
  Character theta_via_induction(const Character& pi_on_gplus) const;

  bool central_character_check(const Character& pi_on_gplus) const;

  struct OmegaChiReport {
    bool intersection_ok = false;  // Jsim meets T x T in T^nabla . (1 x Z)
    bool compatible = false;       // chi agrees with Omega's Z-central character
    bool identity = false;         // isotypic block matches ind(Omega_chi), or is 0
  };
  OmegaChiReport omega_chi_check(const Character& chi_on_t) const;

  bool restriction_decomposition_check(const Character& pi_on_gplus) const;

  struct HoweReport {
    bool isometry = true;
    bool similitude = true;
  };
  HoweReport howe_check() const;

  bool seesaw_check() const;  // uses inst().seesaw_hprime; BadSeesawFixture if absent

  // tables, cached
  const CharacterTable& gplus_table() const;
  const CharacterTable& hplus_table() const;
  const CharacterTable& giso_table() const;
  const CharacterTable& hiso_table() const;

 private:
  void assemble();
  Character coset_average(const std::vector<int>& fiber_map, GroupPtr target,
                          const Character& weight) const;

  ThetaInstance inst_;
  ProductGroup prod_;
  Subgroup jsim_;
  Subgroup g_plus_, h_plus_;
  std::vector<int> j_to_gp_, j_to_hp_;
  Subgroup g_iso_, h_iso_;           // inside plus groups
  std::vector<int> tau_gp_, tau_hp_; // T -> plus groups
  std::vector<int> z_in_t_;          // Z = ker(sim o tau) as T elements
  std::vector<int> t_nabla_;         // inside jsim.group
  Character omega_;
  mutable std::optional<CharacterTable> gplus_table_, hplus_table_, giso_table_, hiso_table_;
};

// ---------------------------------------------------------------------------
// fixture builders; each returns a fully assembled model
// ---------------------------------------------------------------------------
struct ThetaFixture {
  std::string name;
  std::shared_ptr<ThetaModel> model;
  // expected properties recorded in the fixture file
  bool expect_m2 = false;
  bool expect_proper_gplus = false;
  bool expect_howe = true;
};

ThetaFixture load_theta_fixture(const std::string& path);
std::vector<ThetaFixture> load_theta_fixtures(const std::string& dir);

}  // namespace algver
