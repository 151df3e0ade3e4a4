#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mckay/characters.hpp"
#include "mckay/group.hpp"

namespace mckay {

// C_m wreath S_n as monomial n x n matrices over F_ell with m | ell - 1.
struct WreathModel {
  uint32_t m = 0, n = 0;
  Field F;
  uint32_t zeta = 0;  // primitive m-th root of unity
  UniversePtr U;
  Group W, base;
  // monomial decoding: x e_i = zeta^{exps[i]} e_{perm[i]}
  struct Decoded {
    std::vector<uint32_t> exps, perm;
  };
  Decoded decode(uint32_t u) const;
  uint32_t encode(const std::vector<uint32_t>& exps, const std::vector<uint32_t>& perm) const;
};
WreathModel wreath_model(uint32_t m, uint32_t n);

// X_0 = prod_i B_i with |B_i| = orders[i] dividing m
Group product_subgroup(const WreathModel& M, const std::vector<uint32_t>& orders);
// S_{B_1} x ... x S_{B_r} for a set partition of {0..n-1}
Group young_subgroup(const WreathModel& M, const std::vector<std::vector<uint32_t>>& blocks);
// all set partitions of {0..n-1}, blocks sorted
std::vector<std::vector<std::vector<uint32_t>>> set_partitions(uint32_t n);

enum class WreathOutcome { holds, fails, hypothesis_not_met };
struct WreathCheck {
  WreathOutcome outcome = WreathOutcome::fails;
  size_t x_order = 0, normalizer_order = 0, characters = 0;
  std::string reason;
};
// maximal extendibility for X = X_0 K normal in N_{A wr S_n}(X); the hypotheses
// (X_0 a product of its projections, K a Young subgroup normalizing X_0) are checked first
WreathCheck wreath_extension_check(const WreathModel& M, const Group& X0, const Group& K);

struct WreathGridResult {
  size_t cases = 0, holds = 0, fails = 0, skipped = 0;
  std::vector<std::string> failures;
};
// every product subgroup X_0 of C_m^n and every Young K normalizing it
WreathGridResult wreath_grid(uint32_t m, uint32_t n);

// Relative inertia groups in W_d = C_g wr S_a acting on characters of a torus
// modelled as (Z/M)^a: the base generator acts on each coordinate by x -> u x,
// and nu = M/2 is the order-2 character with xi-hat nu = xi-hat mu coordinatewise.
struct XiModel {
  uint32_t g = 0, a = 0;
  uint64_t modulus = 0, unit = 0;
  WreathModel W;
  std::vector<uint64_t> reps;  // one label per G-orbit on Z/M, closed under nu where possible
  uint64_t rep_of(uint64_t x) const;
  uint64_t stabilizer_order(uint64_t x) const;
  std::vector<uint64_t> act(uint32_t w, const std::vector<uint64_t>& xi) const;
};
// g = 2 d0 with the torus of order q^d0 + 1; M = 2 (q^d0 + 1), u = q mod M
XiModel xi_model(uint32_t d0, uint32_t a, uint64_t q = 5);

struct XiCheck {
  bool shape = false;          // W_xihat = prod G_zeta wr S_{I_zeta}
  bool index_rule = false;     // |W_xi : W_xihat| = 2 iff |I_zeta| = |I_{zeta nu}| for all paired zeta
  bool invariance = false;     // every eta over eta0 is K_{eta0}-invariant
  bool extendibility = false;  // W_xihat normal in its normalizer: maximal extendibility
  size_t index = 0, w_xihat = 0, w_xi = 0;
  bool ok() const { return shape && index_rule && invariance && extendibility; }
};
XiCheck wreath_relative_weyl_check(const XiModel& X, const std::vector<uint64_t>& pattern);
// labels used for the pattern grid: per stabilizer size one orbit, plus its nu-partner
std::vector<uint64_t> xi_labels(const XiModel& X, size_t max_labels = 6);

}  // namespace mckay
