#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mckay/characters.hpp"
#include "mckay/group.hpp"
#include "mckay/intlinalg.hpp"
#include "mckay/rootweyl.hpp"

namespace mckay {

// T^{wF} for F = q * (w phi) on the cocharacter lattice: Z^l / (q A - I).
struct FiniteTorus {
  uint32_t rank = 0;
  uint64_t q = 0;
  IntMat action;                     // A, in the basis of simple coroots
  std::vector<BigInt> invariant_factors;  // nontrivial ones (> 1), in divisibility order
  IntMat left, right;                // SNF transforms of q A - I
  BigInt order() const;
};
FiniteTorus torus_fixed_points(const RootDatum& R, const IMat& w, uint64_t q, const IMat* phi = nullptr);
FiniteTorus torus_from_action(const IntMat& A, uint64_t q);

// a(d): multiplicity of Phi_d in the characteristic polynomial of A
uint32_t sylow_d_rank(const IntMat& A, uint32_t d);
BigInt sylow_d_order(const IntMat& A, uint32_t d, uint64_t q);  // Phi_d(q)^a(d)

// Cyclic group Z/n with the automorphism x -> s x (additive notation).
struct CyclicModel {
  uint64_t n = 1;
  uint64_t s = 1;
  uint64_t act(uint64_t x, uint64_t times = 1) const;  // sigma^times
};

struct AbelianNorm {
  bool bijective = false;
  bool well_defined = false;            // constant on cosets of [A, sigma]
  uint64_t source_quotient_order = 0;   // |A / [A, sigma]|, A = C^{sigma^m}
  uint64_t target_order = 0;            // |C^sigma|
  std::vector<uint64_t> coset_image;    // image of the coset of x, by x in A (sorted A)
  std::vector<uint64_t> source;         // elements of A
};
// x -> x + sigma x + ... + sigma^{m-1} x from C^{sigma^m}/[C^{sigma^m},sigma] to C^sigma
AbelianNorm shintani_norm_abelian(const CyclicModel& C, uint32_t m);
uint64_t abelian_norm(const CyclicModel& C, uint32_t m, uint64_t x);
// N(t) generates C^sigma for every generator t of C^{sigma^m}
bool last_statement_check(const CyclicModel& C, uint32_t m);
// re-evaluate the induced map on random coset representatives
bool norm_representative_independent(const CyclicModel& C, uint32_t m, uint64_t seed, int trials = 64);

// SL2 or GL2 over F_q, q = q1^m, q1 = p^k1, together with the fixed points of F1: x -> x^q1.
struct DescentSetting {
  Field F;                 // F_q
  uint32_t p = 0, k1 = 0, m = 0;
  bool gl = false;
  UniversePtr U;
  Group G;                 // G(q)
  Group G1;                // G(q)^{F1} = G(q1)
  Automorphism F1;         // on G
  uint64_t q() const { return F.q(); }
  uint64_t q1() const;
};
DescentSetting descent_setting(uint32_t p, uint32_t k1, uint32_t m, bool gl);

struct DescentCount {
  size_t left = 0, right = 0;
  std::string detail;
  bool equal() const { return left == right; }
};
// |Irr(SL2(q))^<tF1>| vs |Irr(SL2(q1))^<t1>| with t = diag(g^e, 1), t1 = diag(N(det t), 1)
DescentCount descent_fixed_count_check(uint32_t p, uint32_t k1, uint32_t m, uint32_t det_log);
// |Irr(SL2(q))^<GL2(q), F1>| vs |Irr(SL2(q1))^{GL2(q1)}|
DescentCount descent_group_invariant_check(uint32_t p, uint32_t k1, uint32_t m);
// |Irr(G(q))^{F1}| vs |Irr(G(q1))| for G = SL2 or GL2
DescentCount shintani_count_check(uint32_t p, uint32_t k1, uint32_t m, bool gl);

// GL3(4) with Frob_2 and transpose-inverse gamma, realized over F_2.
struct GammaDescent {
  size_t left = 0;           // |Irr(GL3(4))^<Frob2, gamma>|
  size_t right = 0;          // |Irr(GL3(2))^gamma|
  size_t m_b = 0, m_c = 0;   // invariant characters whose extensions are fixed / swapped by gamma
  size_t extensions_checked = 0;
  bool ok() const { return left == right && m_c == 0 && m_b == left; }
};
GammaDescent gl3_gamma_descent();

// Instances (X, Y, x) with Y normal in X, X/Y cyclic generated by xY.
struct CosetInstance {
  std::string name;
  Group X, Y;
  uint32_t x = 0;  // universe index
};
std::vector<CosetInstance> onxy_instances();

}  // namespace mckay
