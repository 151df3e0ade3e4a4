#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "mckay/field.hpp"

namespace mckay {

// Square matrix of field codes, row-major.
struct Mat {
  uint32_t n = 0;
  std::vector<uint32_t> e;

  Mat() = default;
  explicit Mat(uint32_t n_) : n(n_), e(size_t(n_) * n_, 0) {}
  uint32_t& at(uint32_t i, uint32_t j) { return e[size_t(i) * n + j]; }
  uint32_t at(uint32_t i, uint32_t j) const { return e[size_t(i) * n + j]; }
  bool operator==(const Mat& o) const { return n == o.n && e == o.e; }
  bool operator!=(const Mat& o) const { return !(*this == o); }
};

Mat identity(uint32_t n);
// rows of integers, reduced into the prime field of F
Mat from_ints(const Field& F, std::initializer_list<std::initializer_list<int64_t>> rows);
Mat from_ints(const Field& F, const std::vector<std::vector<int64_t>>& rows);
Mat diagonal(const std::vector<uint32_t>& d);

Mat mul(const Field& F, const Mat& a, const Mat& b);
Mat inverse(const Field& F, const Mat& a);  // throws if singular
uint32_t det(const Field& F, const Mat& a);
Mat transpose(const Mat& a);
Mat power(const Field& F, const Mat& a, int64_t e);
// entry-wise x -> x^(p^j)
Mat frobenius(const Field& F, const Mat& a, uint32_t j = 1);
bool is_diagonal(const Mat& a);
// dimension of the fixed space ker(a - 1)
uint32_t fixed_dim(const Field& F, const Mat& a);
uint32_t rank(const Field& F, Mat a);
std::string to_string(const Mat& a);

// Realize g in GL_n(p^k) as an F_p-linear map of F_p^{nk}, using the power
// basis 1, x, ..., x^{k-1} in each coordinate.
Mat restrict_scalars(const Field& F, const Field& Fp, const Mat& g);
// The F_p-linear map of F_{p^k}^n given by entry-wise x -> x^(p^j).
Mat frobenius_linear(const Field& F, const Field& Fp, uint32_t n, uint32_t j);

}  // namespace mckay
