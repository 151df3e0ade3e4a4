#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mckay/characters.hpp"
#include "mckay/group.hpp"
#include "mckay/rootweyl.hpp"

namespace mckay {

// Chevalley generators x_a(t) = 1 + t E_a in a module whose root strings have
// length at most 2: the natural module of A1, or the spin module of B_l built
// from Jordan-Wigner fermion operators. Weights are stored doubled.
struct ChevRep {
  RootDatum datum;
  Field F;
  uint32_t dim = 0;
  std::vector<IMat> E;      // E[r] for datum.roots[r]; E[-a] = E[a]^T
  std::vector<IVec> weights;  // 2 * weight of basis vector b

  size_t root_index(const IVec& a) const;
  Mat x(size_t r, uint32_t t) const;
  Mat n(size_t r, uint32_t t) const;  // x_a(t) x_{-a}(-1/t) x_a(t)
  Mat h(size_t r, uint32_t t) const;  // n_a(t) n_a(1)^-1
  // <mu_b, a^vee> for basis vector b
  int64_t pairing(size_t b, size_t r) const;
};

struct RelationCheck {
  std::string label;
  bool ok = true;
  std::string detail;
};

// type 'A' (l = 1) or 'B' (l <= 4) over F_q; the Steinberg self-test must pass
ChevRep build_chevrep(char type, uint32_t l, uint32_t p, uint32_t k = 1);
std::vector<RelationCheck> steinberg_self_test(const ChevRep& rep, uint64_t seed = 1);

struct TitsGroup {
  ChevRep rep;
  uint32_t varpi = 0;  // the chosen primitive 4th root of unity (0 if none)
  UniversePtr U;       // <V, h_{e_i}(varpi)>
  Group V, H;          // V = <n_a(1)>, H = V cap T
  std::vector<uint32_t> n1;  // universe index of n_a(1) per root
  // signed permutation of the ambient basis induced on weights (monomial elements only)
  SignedPerm rho(uint32_t universe_index) const;
  uint32_t h_e(uint32_t i, uint32_t t) const;  // h_{e_i}(t), i 1-based, as universe index
};
// varpi_choice selects which primitive 4th root (0 or 1); no varpi for A1 or when 4 does not divide q-1
TitsGroup tits_group(const ChevRep& rep, uint32_t varpi_choice = 0);

struct SectionElements {
  uint32_t l = 0, d = 0, d0 = 0, a = 0;
  std::vector<std::vector<int>> orbits;  // O_1..O_a, O_k contains k
  uint32_t v0 = 0, v = 0;                 // universe indices
  std::vector<uint32_t> h;                // h[0] = h_0, h[k] for 1 <= k <= a
  std::vector<uint32_t> c;                // c[k] for 1 <= k <= a (c[0] unused)
  std::vector<uint32_t> p;                // p[k] for 1 <= k < a (p[0] unused)
  SignedPerm c1bar;
  size_t c1_candidates = 0;               // rho-preimages of c1bar searched
  bool c1_in_VO1 = false;                 // chosen c_1 lies in <n_a(+-1) : a in Phi_1>
  Group Vd, Hd;
};
SectionElements build_section_elements(const TitsGroup& T, uint32_t d);

std::vector<RelationCheck> verify_relation_catalog(const TitsGroup& T, const SectionElements& s);
// rho(V_d) = C_W(rho(v))
bool check_rhoVd_equals_Wd(const TitsGroup& T, const SectionElements& s);

struct Prop108Report {
  bool all_extend = false;
  size_t characters = 0;
  size_t fired_a = 0, fired_b = 0;   // cases where the hypotheses of (a) / (b) hold
  bool parity_a = true, parity_b = true, intersection_a = true;
  std::string detail;
};
// maximal extendibility for H_d in V_d, with the parity statements for 2 | d
Prop108Report check_Hd_Vd_extendibility(const TitsGroup& T, const SectionElements& s);

// membership of rho(x) in the index-2 subgroup of type D
bool in_type_D(const SignedPerm& w);

}  // namespace mckay
