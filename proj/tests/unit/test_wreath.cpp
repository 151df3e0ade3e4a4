#include <numeric>

#include "doctest.h"
#include "mckay/wreath.hpp"

using namespace mckay;

TEST_CASE("wreath models and Young subgroups") {
  CHECK(wreath_model(2, 2).W.order() == 8);
  CHECK(wreath_model(4, 3).W.order() == 384);
  CHECK(wreath_model(3, 1).W.order() == 3);
  CHECK(set_partitions(3).size() == 5);
  CHECK(set_partitions(4).size() == 15);
  WreathModel M = wreath_model(4, 3);
  CHECK(young_subgroup(M, {{0, 1, 2}}).order() == 6);
  CHECK(young_subgroup(M, {{0, 2}, {1}}).order() == 2);
  CHECK(product_subgroup(M, {2, 2, 2}).order() == 8);
  // decode/encode round trip
  for (uint32_t u = 0; u < M.W.order(); u += 17) {
    auto d = M.decode(u);
    CHECK(M.encode(d.exps, d.perm) == u);
  }
}

TEST_CASE("maximal extendibility in wreath products") {
  WreathModel M1 = wreath_model(2, 1);
  CHECK(wreath_extension_check(M1, product_subgroup(M1, {2}), young_subgroup(M1, {{0}})).outcome ==
        WreathOutcome::holds);
  WreathModel M2 = wreath_model(2, 2);
  auto c = wreath_extension_check(M2, product_subgroup(M2, {2, 2}), young_subgroup(M2, {{0, 1}}));
  CHECK(c.outcome == WreathOutcome::holds);
  CHECK(c.x_order == 8);
  WreathModel M = wreath_model(4, 3);
  auto r = wreath_extension_check(M, product_subgroup(M, {2, 2, 2}), young_subgroup(M, {{0, 1, 2}}));
  CHECK(r.outcome == WreathOutcome::holds);
  CHECK(r.x_order == 48);
  CHECK(r.normalizer_order == 96);  // a_i = a_j mod 2 on the single K-orbit

  // hypotheses: diagonal subgroup, non-normalizing K
  std::vector<uint32_t> id(3);
  std::iota(id.begin(), id.end(), 0);
  Group diag = Group::generate(M.U, {M.encode({1, 1, 1}, id)});
  CHECK(wreath_extension_check(M, diag, young_subgroup(M, {{0}, {1}, {2}})).outcome ==
        WreathOutcome::hypothesis_not_met);
  CHECK(wreath_extension_check(M, product_subgroup(M, {2, 4, 4}), young_subgroup(M, {{0, 1}, {2}})).outcome ==
        WreathOutcome::hypothesis_not_met);

  auto g = wreath_grid(2, 3);
  CHECK(g.cases == 22);
  CHECK(g.fails == 0);
  CHECK(g.skipped == 0);
  auto g3 = wreath_grid(3, 3);
  CHECK(g3.fails == 0);
  CHECK(g3.holds == g3.cases);
}

TEST_CASE("relative inertia groups in C_g wr S_a") {
  XiModel X = xi_model(2, 2);
  CHECK(X.g == 4);
  CHECK(X.modulus == 52);
  // orbit representatives partition Z/M
  uint64_t total = 0;
  for (uint64_t r : X.reps) total += X.g / X.stabilizer_order(r);
  CHECK(total == X.modulus);
  auto L = xi_labels(X);
  REQUIRE(L.size() >= 2);
  // distinct labels, nothing paired: index 1
  {
    std::vector<uint64_t> p{0, 0};
    auto c = wreath_relative_weyl_check(X, p);
    CHECK(c.ok());
    CHECK(c.w_xihat == 32);
  }
  // a label and its nu-partner, one each: index 2
  uint64_t z = 1, zn = X.rep_of(1 + X.modulus / 2);
  REQUIRE(zn != z);
  auto c = wreath_relative_weyl_check(X, {z, zn});
  CHECK(c.ok());
  CHECK(c.index == 2);
  CHECK_THROWS(wreath_relative_weyl_check(X, {z}));

  XiModel X6 = xi_model(3, 2);
  for (uint64_t a : xi_labels(X6))
    for (uint64_t b : xi_labels(X6)) CHECK(wreath_relative_weyl_check(X6, {a, b}).ok());
}
