#include <algorithm>
#include <cmath>
#include <iterator>
#include <set>

#include "doctest.h"
#include "mckay/rootweyl.hpp"

using namespace mckay;

namespace {
std::set<uint32_t> minus(const std::set<uint32_t>& a, const std::set<uint32_t>& b) {
  std::set<uint32_t> r;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::inserter(r, r.end()));
  return r;
}

uint64_t factorial(uint64_t n) { return n <= 1 ? 1 : n * factorial(n - 1); }
}  // namespace

TEST_CASE("root systems: counts and Cartan entries") {
  for (char t : {'A', 'B', 'C', 'D'})
    for (uint32_t l = 1; l <= 5; ++l) {
      if (t == 'D' && l < 3) continue;
      RootDatum R = root_datum(t, l);
      CHECK(R.roots.size() == expected_root_count(t, l));
      for (const auto& row : R.cartan)
        for (int64_t c : row) CHECK((c == 2 || c == 0 || c == -1 || c == -2 || c == -3));
    }
  CHECK(root_datum('E', 6).roots.size() == 72);
  CHECK(root_datum('E', 7).roots.size() == 126);
  CHECK(root_datum('B', 2).cartan == std::vector<std::vector<int64_t>>{{2, -2}, {-1, 2}});
  // roots of B_l in the e-basis: +-e_i, +-e_i +- e_j
  RootDatum B3 = root_datum('B', 3);
  for (const auto& r : B3.roots) {
    int64_t n = B3.inner(r, r);
    CHECK((n == 1 || n == 2));
  }
  CHECK_THROWS(root_datum('G', 2));
}

TEST_CASE("Weyl group orders") {
  CHECK(weyl_group(root_datum('B', 2)).W.order() == 8);
  for (uint32_t l = 2; l <= 4; ++l) {
    WeylGroup WG = weyl_group(root_datum('B', l));
    CHECK(WG.W.order() == (uint64_t(1) << l) * factorial(l));
    CHECK(WG.W.order() == weyl_order_from_degrees('B', l));
    // longest element -1 squares to the identity
    IMat minus1 = imat_identity(l);
    for (auto& row : minus1)
      for (auto& x : row) x = -x;
    CHECK(WG.U->find(WG.to_mat(minus1)).has_value());
  }
  CHECK(weyl_group(root_datum('D', 4)).W.order() == weyl_order_from_degrees('D', 4));
  CHECK(weyl_group(root_datum('A', 3)).W.order() == 24);
  CHECK(weyl_order_from_degrees('E', 7) == 2903040);
  WeylGroup E6 = weyl_group(in_root_coordinates(root_datum('E', 6)));
  CHECK(E6.W.order() == 51840);
  CHECK(E6.W.order() == weyl_order_from_degrees('E', 6));
  // every element preserves the root set (sampled)
  for (uint32_t i = 0; i < E6.W.order(); i += 997) {
    IMat w = E6.to_imat(E6.W.elt(i));
    for (const auto& r : E6.datum.roots) CHECK(E6.datum.is_root(imat_apply(w, r)));
  }
}

TEST_CASE("signed permutations and the regular element v") {
  SignedPerm c = sp_from_cycle(3, {1, 2, 3, -1, -2, -3});
  CHECK(sp_order(c) == 6);
  CHECK(c(-2) == -3);
  CHECK(sp_from_matrix(sp_matrix(c)).value() == c);
  for (uint32_t l = 1; l <= 6; ++l) {
    RegularElementV r = regular_element_v(l, 2 * l);
    std::vector<int> cyc;
    for (int i = 1; i <= int(l); ++i) cyc.push_back(i);
    for (int i = 1; i <= int(l); ++i) cyc.push_back(-i);
    CHECK(r.rho_v0 == sp_from_cycle(l, cyc));
    CHECK(sp_order(r.rho_v0) == 2 * l);
    // the word multiplies out to rho(v) on the ambient lattice
    for (uint32_t d = 1; d <= 2 * l; ++d) {
      if ((2 * l) % d) continue;
      RegularElementV v = regular_element_v(l, d);
      RootDatum B = root_datum('B', l);
      CHECK(simple_word_matrix(B, v.word) == sp_matrix(v.rho_v));
      uint32_t d0 = d % 2 ? d : d / 2;
      CHECK(v.d0 == d0);
      CHECK(v.a * v.d0 == l);
      CHECK(sp_power(v.rho_v, d) == sp_identity(l));
    }
  }
  RegularElementV a = regular_element_v(3, 6);
  CHECK(a.rho_v == a.rho_v0);
  CHECK(a.d0 == 3);
  CHECK(a.a == 1);
  RegularElementV b = regular_element_v(6, 4);
  CHECK(b.d0 == 2);
  CHECK(b.a == 3);
  RegularElementV e = regular_element_v(2, 1);
  CHECK(e.rho_v == sp_identity(2));
  CHECK(e.d0 == 1);
  CHECK(e.a == 2);
  CHECK_THROWS(regular_element_v(3, 4));
}

TEST_CASE("zeta-regularity") {
  RootDatum B3 = root_datum('B', 3);
  CHECK(zeta_regular_check(B3, imat_identity(3), 1).regular);
  CHECK_THROWS(zeta_regular_check(B3, imat_identity(3), 0));
  for (uint32_t l = 2; l <= 5; ++l) {
    RootDatum B = root_datum('B', l);
    for (uint32_t d = 1; d <= 2 * l; ++d) {
      if ((2 * l) % d) continue;
      auto r = zeta_regular_check(B, sp_matrix(regular_element_v(l, d).rho_v), d);
      CHECK(r.regular);
      CHECK(r.eigenspace_dim == l / regular_element_v(l, d).d0);
    }
  }
  auto v0 = regular_element_v(3, 6).rho_v0;
  CHECK(zeta_regular_check(B3, sp_matrix(sp_power(v0, 2)), 3).regular);
  // a reflection is not 1-regular
  CHECK_FALSE(zeta_regular_check(B3, B3.reflection(B3.simple[0]), 1).regular);
}

TEST_CASE("relative Weyl groups") {
  WeylGroup B3 = weyl_group(root_datum('B', 3));
  CHECK(relative_weyl_group(B3, imat_identity(3)).order() == 48);
  CHECK(relative_weyl_group(B3, sp_matrix(regular_element_v(3, 2).rho_v)).order() == 48);
  WeylGroup B4 = weyl_group(root_datum('B', 4));
  CHECK(relative_weyl_group(B4, sp_matrix(regular_element_v(4, 4).rho_v)).order() == 32);
  // |C_W(rho(v))| = (2 d0)^a a! for B_l
  for (uint32_t d : {1u, 2u, 4u, 8u}) {
    auto v = regular_element_v(4, d);
    CHECK(relative_weyl_group(B4, sp_matrix(v.rho_v)).order() ==
          uint64_t(std::pow(2 * v.d0, v.a)) * factorial(v.a));
  }
}

TEST_CASE("coroot action and Coxeter tori") {
  RootDatum B2 = root_datum('B', 2);
  IntMat A = coroot_action(B2, simple_word_matrix(B2, {1, 2}));
  CHECK(char_poly(A) == cyclotomic(4));
  RootDatum B3 = root_datum('B', 3);
  IntMat C = coroot_action(B3, simple_word_matrix(B3, {1, 2, 3}));
  CHECK(char_poly(C) == poly_mul(cyclotomic(2), cyclotomic(6)));  // x^3 + 1
}

TEST_CASE("order polynomials") {
  OrderPolynomial B3 = order_polynomial("B3");
  CHECK(B3.N == 9);
  CHECK(B3.phi == std::vector<std::pair<uint32_t, uint32_t>>{{1, 3}, {2, 3}, {3, 1}, {4, 1}, {6, 1}});
  // expansion against prod (q^{2i} - 1)
  IntPoly f{1};
  for (uint32_t i = 1; i <= 3; ++i) {
    IntPoly g(2 * i + 1, 0);
    g[0] = -1;
    g[2 * i] = 1;
    f = poly_mul(f, g);
  }
  CHECK(B3.expand() == f);
  for (const char* t : {"E6", "2E6", "E7"}) {
    INFO(t);
    CHECK(order_polynomial(t) == embedded_order_polynomial(t));
  }
  CHECK(order_polynomial("2A2").phi == std::vector<std::pair<uint32_t, uint32_t>>{{1, 1}, {2, 2}, {6, 1}});
  CHECK_THROWS(order_polynomial("F4"));
}

TEST_CASE("regular numbers") {
  CHECK(regular_numbers("B2") == std::set<uint32_t>{1, 2, 4});
  for (uint32_t l = 2; l <= 5; ++l) {
    std::set<uint32_t> div;
    for (uint32_t d = 1; d <= 2 * l; ++d)
      if ((2 * l) % d == 0) div.insert(d);
    CHECK(regular_numbers("B" + std::to_string(l)) == div);
  }
  for (const char* t : {"E6", "E7"}) {
    INFO(t);
    auto supp = cyclotomic_support(order_polynomial(t));
    CHECK(minus(supp, regular_numbers(t)) == embedded_nonregular(t));
  }
  // explicit search agrees with the degree criterion
  CHECK(regular_numbers_by_search("B3") == regular_numbers("B3"));
  CHECK(regular_numbers_by_search("D4") == regular_numbers("D4"));
  CHECK(regular_numbers_by_search("E6") == regular_numbers("E6"));
  auto twisted = regular_numbers("2E6");
  CHECK(minus(cyclotomic_support(order_polynomial("2E6")), twisted) == embedded_nonregular("2E6"));
  // Ennola correspondence with E6
  std::set<uint32_t> ennola;
  for (uint32_t d : regular_numbers("E6")) ennola.insert(d % 2 ? 2 * d : d % 4 == 2 ? d / 2 : d);
  CHECK(ennola == twisted);
}

TEST_CASE("E7 coroot identities mod 2") {
  RootDatum E7 = root_datum('E', 7);
  IVec b1{0, 0, 0, 0, 0, 0, 1};
  IVec b2{0, 1, 1, 2, 2, 2, 1};
  IVec b3{2, 2, 3, 4, 3, 2, 1};
  for (const auto& b : {b1, b2, b3}) CHECK(E7.is_root(b));
  CHECK(E7.inner(b1, b2) == 0);
  CHECK(E7.inner(b1, b3) == 0);
  CHECK(E7.inner(b2, b3) == 0);
  auto a = [](int i) {
    IVec v(7, 0);
    v[i - 1] = 1;
    return v;
  };
  CHECK(coroot_mod2(E7, {a(2), a(5)}) == coroot_mod2(E7, {b2, b3}));
  CHECK(coroot_mod2(E7, {a(2), a(3)}) == coroot_mod2(E7, {b1, b2}));
  CHECK(coroot_mod2(E7, {a(2), a(5), a(7)}) == coroot_mod2(E7, {b1, b2, b3}));
  CHECK(coroot_mod2(E7, {a(3), a(3)}) == std::vector<int>(7, 0));
  CHECK_THROWS(coroot_mod2(E7, {IVec{1, 1, 0, 0, 0, 0, 0}}));
}

TEST_CASE("root datum JSON") {
  auto j = root_datum('B', 2).to_json();
  CHECK(j["type"] == "B");
  CHECK(j["rank"] == 2);
  CHECK(j["roots"].size() == 8);
  CHECK(j["simple_roots"] == nlohmann::json::parse("[[1,0],[-1,1]]"));
  CHECK(j["cartan"] == nlohmann::json::parse("[[2,-2],[-1,2]]"));
  CHECK(j.dump() == root_datum('B', 2).to_json().dump());
}
