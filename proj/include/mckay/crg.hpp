#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mckay/characters.hpp"
#include "mckay/group.hpp"

namespace mckay {

// Finite complex reflection group realized over F_13 (12 | 13 - 1).
struct ReflectionGroup {
  std::string label;
  Field F;
  uint32_t dim = 0;
  std::vector<Mat> generators;
  std::vector<uint32_t> degrees;  // empty for G(m,p,n) with no embedded data
  UniversePtr U;
  Group G;
  std::vector<uint32_t> reflections;  // universe indices of all reflections
};

// "G4", "G5", "G8", "G25", "G26", or "G(m,p,n)" with m | 12, p | m, n <= 3
ReflectionGroup build_crg(const std::string& label);
bool is_reflection(const Field& F, const Mat& x);
Mat reflection_matrix(const Field& F, const std::vector<uint32_t>& root, const std::vector<uint32_t>& coroot,
                      uint32_t eigenvalue);

// isomorphism-type label from order, abelian invariants and comparison with G(m,p,n)/exceptional references
std::string iso_label(const Group& H);
// fingerprint comparison with a named reference ("G4", "G(4,2,2)", "3wr3", "G4x3", ...)
bool same_type(const Group& H, const std::string& reference_label);

struct ReflectionSubgroupClass {
  Group rep;
  std::string label;
  size_t class_size = 0;  // number of conjugates
};
// conjugacy classes of subgroups generated by reflections (the trivial group included, first)
std::vector<ReflectionSubgroupClass> reflection_subgroups(const ReflectionGroup& W);

struct DaggerResult {
  size_t characters = 0;
  size_t invariant_exists = 0;  // (i)
  size_t extension_exists = 0;  // (ii)
  bool all_i() const { return invariant_exists == characters; }
  bool all_ii() const { return extension_exists == characters; }
  bool monotone = true;  // (ii) implies (i) per character
};
// W_s~ normal in W_s, K = N_amb(W_s, W_s~); (ii) asks for an extension of eta to W_s (K)_eta~
DaggerResult dagger_check(const Group& ambient, const Group& Ws_tilde, const Group& Ws);
// the same with an explicitly supplied K (must normalize both)
DaggerResult dagger_check(const Group& K, const Group& Ws_tilde, const Group& Ws, bool k_given);

// every character of Y extends to its inertia group in K (Y normal in K)
bool all_extend_to_inertia(const Group& K, const Group& Y);

struct TableRow {
  int table = 1, row = 0;
  std::string centralizer, d, Ws_tilde, Ws, Ks, observation;  // as printed; empty W_s~ means W_s~ = W_s
};
std::vector<TableRow> table_rows(int table);

struct RowReport {
  int table = 0, row = 0;
  std::string status;  // "pass", "fail", "skipped"
  std::string method;  // "constructed" or the observation used
  std::string detail;
  size_t matches = 0;  // subgroup configurations checked
  bool dagger_i = false, dagger_ii = false;
  bool observation_holds = false;  // on the printed K_s (observation rows only)
  bool k_mismatch = false;         // printed K_s is smaller than the computed normalizer
  bool rank1_reading_consistent = false;  // table 1 row 2 only
  std::string ambient;
  uint64_t ws_tilde_order = 0, ws_order = 0, k_order = 0;  // first matching configuration
};
RowReport verify_table_row(int table, int row);

// the E7, d = 4 analysis inside G8
struct E7D4Report {
  size_t nontrivial_classes = 0;
  std::vector<std::string> labels;
  std::vector<std::string> nonabelian_normalizer;  // labels with non-abelian normalizer
  bool g412_self_normalizing = false, g8_self_normalizing = false;
  size_t c4c4_normalizer_index = 0;
  // W_s~ = G(2,1,2): N is a Sylow 2-subgroup; 2 linear + the degree-2 character extend, 2 linear have index-2 inertia
  bool g212_pattern = false;
  // W_s~ = C2 x C2: |N| = 32, unique intermediate normal N1 of index 2; 2 linear extend to N, 2 have inertia N1
  bool c2c2_pattern = false;
  size_t c2c2_index2_normal = 0;  // index-2 normal subgroups of N containing C2 x C2
  bool g422_overgroup_rule = false;  // only index-2 overgroup is G(4,1,2)
  std::string detail;
};
E7D4Report e7_d4_analysis();

}  // namespace mckay
