#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>
#include <vector>

namespace mckay {

using BigInt = boost::multiprecision::cpp_int;

// Dense integer matrix (rows x cols), row-major.
struct IntMat {
  size_t rows = 0, cols = 0;
  std::vector<BigInt> e;

  IntMat() = default;
  IntMat(size_t r, size_t c) : rows(r), cols(c), e(r * c) {}
  static IntMat identity(size_t n);
  static IntMat from(const std::vector<std::vector<int64_t>>& rows);
  BigInt& at(size_t i, size_t j) { return e[i * cols + j]; }
  const BigInt& at(size_t i, size_t j) const { return e[i * cols + j]; }
  bool operator==(const IntMat& o) const { return rows == o.rows && cols == o.cols && e == o.e; }
};

IntMat operator*(const IntMat& a, const IntMat& b);
IntMat operator-(const IntMat& a, const IntMat& b);
IntMat scaled(const IntMat& a, const BigInt& s);
BigInt determinant(const IntMat& a);  // Bareiss, exact

struct SnfResult {
  std::vector<BigInt> diagonal;  // d1 | d2 | ..., nonnegative
  IntMat left, right;            // left * A * right = diag
};

SnfResult smith_normal_form(const IntMat& a);

// Integer polynomials, coefficient of x^i at index i.
using IntPoly = std::vector<BigInt>;

void trim(IntPoly& f);
IntPoly poly_mul(const IntPoly& a, const IntPoly& b);
// exact division; throws if b does not divide a
IntPoly poly_div_exact(const IntPoly& a, const IntPoly& b);
bool poly_divides(const IntPoly& b, const IntPoly& a);
BigInt poly_eval(const IntPoly& f, const BigInt& x);
std::string poly_to_string(const IntPoly& f);

// Monic characteristic polynomial det(x - A) (Faddeev-LeVerrier with exact division).
IntPoly char_poly(const IntMat& a);
// Evaluate a polynomial at a square matrix.
IntMat poly_eval(const IntPoly& f, const IntMat& a);

IntPoly cyclotomic(uint32_t n);
// Largest m with Phi_d^m | f.
uint32_t cyclotomic_multiplicity(IntPoly f, uint32_t d);
// Factor f = c * x^N * prod Phi_d^{m_d} when possible; returns false otherwise.
bool cyclotomic_factor(IntPoly f, std::vector<std::pair<uint32_t, uint32_t>>& out, uint32_t max_d = 64);

}  // namespace mckay
