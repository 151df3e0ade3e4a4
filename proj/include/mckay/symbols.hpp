#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace mckay {

// Symbol with rows kept as strictly increasing lists. Symbols are taken up to
// the shift (S, T) ~ ({0} u S+1, {0} u T+1) and up to swapping the rows; the
// stored representative is reduced with defect |top| - |bottom| >= 0, and for
// defect 0 the lexicographically larger row on top.
struct Symbol {
  std::vector<int> top, bottom;
  int defect() const { return static_cast<int>(top.size()) - static_cast<int>(bottom.size()); }
  int rank() const;
  bool degenerate() const { return top == bottom; }
  bool operator==(const Symbol& o) const { return top == o.top && bottom == o.bottom; }
  bool operator<(const Symbol& o) const { return top != o.top ? top < o.top : bottom < o.bottom; }
  std::string to_string() const;
};

// shift-reduce, then orient
Symbol canonical(Symbol s);
Symbol shift(const Symbol& s);  // one step ({0} u S+1, {0} u T+1)

// all canonical symbols of the given rank whose defect passes the filter
std::vector<Symbol> enumerate_symbols(int rank, const std::function<bool(int)>& defect_ok);
// defect = residue (mod modulus)
std::vector<Symbol> enumerate_symbols(int rank, int modulus, int residue);

// unipotent character counts: B/C (odd defect), D (defect in 4Z, degenerate twice), 2D (defect in 2+4Z)
size_t unipotent_count(const std::string& type, int l);

// move the largest element of the symmetric difference of the rows to the other row
Symbol star_bijection(const Symbol& s);  // throws on degenerate symbols

struct StarReport {
  int max_rank = 0;
  bool rank_preserving = true, involution = true, exchanges_classes = true, bijective = true;
  size_t checked = 0;
};
StarReport star_bijection_check(int max_rank);

struct UnifixResult {
  std::string label;
  size_t twisted = 0, fixed_untwisted = 0;
  bool ok() const { return twisted == fixed_untwisted; }
};
// "2D": #symbols(2 + 4Z) = #non-degenerate symbols(4Z) at rank l, matched through star_bijection
// "2A": p(l+1) on both sides
UnifixResult unifix_count_check(const std::string& label, int l);

// the order-3 automorphism of D4: candidate fixed-point rules on the 14 symbols of rank 4
struct TrialityCandidate {
  std::string rule;
  size_t fixed = 0;
  bool consistent = false;  // 14 - fixed divisible by 3
};
struct TrialityReport {
  size_t total = 0;      // 14, degenerate counted twice
  size_t expected = 8;   // the published count
  std::vector<TrialityCandidate> candidates;
  bool action_open = true;  // no specific action is asserted
};
TrialityReport triality_report();

// independent oracle: number of pairs of partitions (alpha, beta) with |alpha| + |beta| = n
uint64_t bipartition_count(int n);
uint64_t partition_count(int n);

}  // namespace mckay
