#pragma once

#include <cstdint>
#include <vector>

namespace mckay::modp {

inline uint64_t mulm(uint64_t a, uint64_t b, uint64_t p) { return static_cast<uint64_t>((__uint128_t)a * b % p); }
inline uint64_t addm(uint64_t a, uint64_t b, uint64_t p) {
  uint64_t s = a + b;
  return s >= p ? s - p : s;
}
inline uint64_t subm(uint64_t a, uint64_t b, uint64_t p) { return a >= b ? a - b : a + p - b; }
uint64_t powm(uint64_t a, uint64_t e, uint64_t p);
uint64_t invm(uint64_t a, uint64_t p);
uint64_t reduce(int64_t a, uint64_t p);

using Vec = std::vector<uint64_t>;
using Mtx = std::vector<Vec>;  // row-major rows

// Reduced row echelon form in place; returns pivot columns.
std::vector<size_t> rref(Mtx& m, uint64_t p);
// Basis of {x : A x = 0} for A given by rows (n columns).
Mtx nullspace(Mtx a, size_t n, uint64_t p);
// Coefficients of det(x - A), low degree first, monic.
Vec char_poly(Mtx a, uint64_t p);
// All roots in F_p (with multiplicity ignored), ascending.
std::vector<uint64_t> roots(const Vec& f, uint64_t p);
// least prime = 1 mod e that exceeds bound
uint64_t prime_1_mod(uint64_t e, uint64_t bound);

}  // namespace mckay::modp
