#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace mckay {

// Finite field F_q, q = p^k <= 2^20.  Elements are integer codes 0..q-1:
// the code of c_0 + c_1 x + ... + c_{k-1} x^{k-1} is sum c_i p^i.
// The modulus is the least monic irreducible polynomial of degree k, where
// polynomials are ordered by the code of their lower coefficients.
class Field {
 public:
  Field() = default;
  static Field make(uint32_t p, uint32_t k = 1);

  uint32_t p() const { return p_; }
  uint32_t k() const { return k_; }
  uint32_t q() const { return q_; }
  // monic, low degree first, size k+1
  const std::vector<uint32_t>& modulus() const { return modulus_; }

  uint32_t add(uint32_t a, uint32_t b) const {
    if (k_ == 1) {
      uint32_t s = a + b;
      return s >= p_ ? s - p_ : s;
    }
    if (p_ == 2) return a ^ b;
    return add_digits(a, b);
  }
  uint32_t neg(uint32_t a) const;
  uint32_t sub(uint32_t a, uint32_t b) const { return add(a, neg(b)); }
  uint32_t mul(uint32_t a, uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    uint32_t s = log_[a] + log_[b];
    if (s >= q_ - 1) s -= q_ - 1;
    return exp_[s];
  }
  uint32_t inv(uint32_t a) const;
  uint32_t pow(uint32_t a, int64_t e) const;
  uint32_t frobenius(uint32_t a) const { return pow(a, p_); }
  // embed an integer through the prime field
  uint32_t from_int(int64_t n) const;
  // the primitive element used for log tables
  uint32_t generator() const { return exp_.empty() ? 0 : exp_[1 % (q_ - 1)]; }
  // primitive n-th root of unity (generator^((q-1)/n)); throws unless n | q-1
  uint32_t root_of_unity(uint32_t n) const;
  uint32_t log(uint32_t a) const { return log_[a]; }
  uint32_t mult_order(uint32_t a) const;

  bool operator==(const Field& o) const { return p_ == o.p_ && k_ == o.k_; }
  std::string name() const;

 private:
  uint32_t add_digits(uint32_t a, uint32_t b) const;

  uint32_t p_ = 0, k_ = 0, q_ = 0;
  std::vector<uint32_t> modulus_;
  std::vector<uint32_t> exp_, log_;
};

bool is_prime(uint64_t n);

// Polynomials over F_p as coefficient vectors (low first); used for the
// modulus search.
bool irreducible_mod_p(const std::vector<uint32_t>& f, uint32_t p);

}  // namespace mckay
