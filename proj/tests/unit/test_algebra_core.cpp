#include <random>

#include "doctest.h"
#include "mckay/field.hpp"
#include "mckay/intlinalg.hpp"
#include "mckay/matrix.hpp"
#include "mckay/modp.hpp"

using namespace mckay;

TEST_CASE("field construction and arithmetic") {
  Field F3 = Field::make(3);
  CHECK(F3.q() == 3);
  Field F9 = Field::make(3, 2);
  CHECK(F9.q() == 9);
  CHECK(F9.modulus() == std::vector<uint32_t>{1, 0, 1});  // x^2 + 1
  // Frobenius has order 2 on F_9
  bool moved = false;
  for (uint32_t a = 0; a < 9; ++a) {
    CHECK(F9.frobenius(F9.frobenius(a)) == a);
    moved |= F9.frobenius(a) != a;
  }
  CHECK(moved);
  CHECK_THROWS(Field::make(4));
  CHECK_THROWS(Field::make(2, 21));
  // a fourth root of unity in F_17, found by scanning
  Field F17 = Field::make(17);
  uint32_t w = 0;
  for (uint32_t x = 1; x < 17 && !w; ++x)
    if (F17.mul(x, x) == F17.neg(1)) w = x;
  CHECK(w != 0);
  CHECK(F17.mul(F17.root_of_unity(4), F17.root_of_unity(4)) == F17.neg(1));
}

TEST_CASE("field axioms on small fields") {
  for (auto [p, k] : std::vector<std::pair<uint32_t, uint32_t>>{{2, 1}, {2, 2}, {2, 3}, {3, 2}, {5, 1}, {5, 2}, {7, 1}}) {
    Field F = Field::make(p, k);
    for (uint32_t a = 1; a < F.q(); ++a) {
      CHECK(F.pow(a, F.q() - 1) == 1);
      CHECK(F.mul(a, F.inv(a)) == 1);
      CHECK(F.add(a, F.neg(a)) == 0);
    }
    // Frobenius is additive and multiplicative, order k
    for (uint32_t a = 0; a < F.q(); ++a)
      for (uint32_t b = 0; b < F.q(); ++b) {
        CHECK(F.frobenius(F.add(a, b)) == F.add(F.frobenius(a), F.frobenius(b)));
        CHECK(F.frobenius(F.mul(a, b)) == F.mul(F.frobenius(a), F.frobenius(b)));
      }
    for (uint32_t a = 0; a < F.q(); ++a) {
      uint32_t x = a;
      for (uint32_t i = 0; i < k; ++i) x = F.frobenius(x);
      CHECK(x == a);
    }
  }
}

TEST_CASE("matrix inverse, determinant, scalar restriction") {
  Field F = Field::make(2, 2);
  Mat a(2);
  a.at(0, 0) = 2;
  a.at(0, 1) = 1;
  a.at(1, 0) = 1;
  a.at(1, 1) = 1;
  Mat ai = inverse(F, a);
  CHECK(mul(F, a, ai) == identity(2));
  Field F2 = Field::make(2);
  Mat ra = restrict_scalars(F, F2, a), rb = restrict_scalars(F, F2, ai);
  CHECK(mul(F2, ra, rb) == identity(4));
  // Frobenius as a linear map: phi * g * phi^-1 = frob(g)
  Mat phi = frobenius_linear(F, F2, 2, 1);
  Mat lhs = mul(F2, mul(F2, phi, ra), inverse(F2, phi));
  CHECK(lhs == restrict_scalars(F, F2, frobenius(F, a, 1)));
}

namespace {
BigInt gcd_big(BigInt a, BigInt b) {
  a = abs(a);
  b = abs(b);
  while (b != 0) {
    BigInt t = a % b;
    a = b;
    b = t;
  }
  return a;
}
}  // namespace

TEST_CASE("smith normal form") {
  auto snf = smith_normal_form(IntMat::identity(2));
  CHECK(snf.diagonal == std::vector<BigInt>{1, 1});
  snf = smith_normal_form(IntMat::from({{2, 0}, {0, 4}}));
  CHECK(snf.diagonal == std::vector<BigInt>{2, 4});
  IntMat A = IntMat::from({{3, 1}, {1, 3}});
  snf = smith_normal_form(A);
  // oracle: d1 = gcd of entries, d1*d2 = |det|
  BigInt g = 0;
  for (auto& x : A.e) g = gcd_big(g, x);
  CHECK(snf.diagonal[0] == g);
  CHECK(snf.diagonal[0] * snf.diagonal[1] == abs(determinant(A)));
  CHECK(snf.diagonal == std::vector<BigInt>{1, 8});

  std::mt19937 rng(7);
  std::uniform_int_distribution<int> d(-6, 6);
  for (int trial = 0; trial < 60; ++trial) {
    size_t n = 2 + trial % 4;
    std::vector<std::vector<int64_t>> rows(n, std::vector<int64_t>(n));
    for (auto& r : rows)
      for (auto& x : r) x = d(rng);
    IntMat M = IntMat::from(rows);
    auto s = smith_normal_form(M);
    IntMat D(n, n);
    for (size_t i = 0; i < n; ++i) D.at(i, i) = s.diagonal[i];
    CHECK((s.left * M * s.right) == D);
    CHECK(abs(determinant(s.left)) == 1);
    CHECK(abs(determinant(s.right)) == 1);
    for (size_t i = 0; i + 1 < n; ++i) {
      if (s.diagonal[i] == 0) CHECK(s.diagonal[i + 1] == 0);
      else CHECK(s.diagonal[i + 1] % s.diagonal[i] == 0);
    }
    BigInt prod = 1;
    for (auto& x : s.diagonal) prod *= x;
    CHECK(prod == abs(determinant(M)));
  }
}

TEST_CASE("characteristic polynomial") {
  CHECK(char_poly(IntMat::identity(2)) == IntPoly{1, -2, 1});
  CHECK(char_poly(IntMat::from({{0, -1}, {1, 0}})) == cyclotomic(4));
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> d(-3, 3);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<std::vector<int64_t>> rows(4, std::vector<int64_t>(4));
    for (auto& r : rows)
      for (auto& x : r) x = d(rng);
    IntMat M = IntMat::from(rows);
    IntPoly f = char_poly(M);
    CHECK(poly_eval(f, M) == IntMat(4, 4));
    CHECK(f[0] == determinant(M));  // det(-M) for n = 4 equals det(M)
    // agrees with the modular Hessenberg computation
    uint64_t p = 10007;
    modp::Mtx mm(4, modp::Vec(4));
    for (size_t i = 0; i < 4; ++i)
      for (size_t j = 0; j < 4; ++j) mm[i][j] = modp::reduce(rows[i][j], p);
    modp::Vec fm = modp::char_poly(mm, p);
    for (size_t i = 0; i <= 4; ++i) {
      BigInt r = f[i] % BigInt(p);
      if (r < 0) r += p;
      CHECK(fm[i] == static_cast<uint64_t>(r));
    }
  }
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic(1) == IntPoly{-1, 1});
  CHECK(cyclotomic(6) == IntPoly{1, -1, 1});
  // x^12 - 1 = prod_{d | 12} Phi_d
  IntPoly f(13);
  f[0] = -1;
  f[12] = 1;
  std::vector<std::pair<uint32_t, uint32_t>> fac;
  CHECK(cyclotomic_factor(f, fac));
  CHECK(fac.size() == 6);
}
