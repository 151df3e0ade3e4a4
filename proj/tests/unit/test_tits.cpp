#include "doctest.h"
#include "mckay/tits.hpp"

using namespace mckay;

namespace {
bool all_ok(const std::vector<RelationCheck>& cs) {
  bool ok = true;
  for (const auto& c : cs) {
    INFO(c.label << ": " << c.detail);
    CHECK(c.ok);
    ok = ok && c.ok;
  }
  return ok;
}
}  // namespace

TEST_CASE("A1 natural module") {
  ChevRep R = build_chevrep('A', 1, 5);
  size_t a = R.root_index({1, -1});
  Mat n = R.n(a, 1);
  CHECK(n.at(0, 0) == 0);
  CHECK(n.at(0, 1) == 1);
  CHECK(n.at(1, 0) == R.F.neg(1));
  Mat h = R.h(a, 2);
  CHECK(h.at(0, 0) == 2);
  CHECK(h.at(1, 1) == R.F.inv(2));
  TitsGroup T = tits_group(R);
  CHECK(T.V.order() == 4);
  CHECK(T.U->order_of(T.n1[a]) == 4);
  CHECK(T.H.order() == 2);
}

TEST_CASE("spin module and the extended Weyl group") {
  ChevRep B2 = build_chevrep('B', 2, 17);
  CHECK(B2.dim == 4);
  for (const auto& c : steinberg_self_test(B2, 7)) CHECK(c.ok);
  Mat I = identity(4);
  for (size_t r = 0; r < B2.datum.roots.size(); ++r) {
    Mat x = B2.x(r, 3);
    Mat nil(4);
    for (uint32_t i = 0; i < 4; ++i)
      for (uint32_t j = 0; j < 4; ++j) nil.at(i, j) = B2.F.sub(x.at(i, j), I.at(i, j));
    CHECK(mul(B2.F, nil, nil) == Mat(4));
  }
  TitsGroup T2 = tits_group(B2);
  CHECK(T2.V.order() == 32);
  CHECK(T2.H.order() == 4);

  TitsGroup T3 = tits_group(build_chevrep('B', 3, 17));
  CHECK(T3.V.order() == 384);
  CHECK(T3.H.order() == 8);
  uint32_t h0 = T3.h_e(1, T3.rep.F.neg(1));
  CHECK(T3.U->order_of(h0) == 2);
  for (uint32_t g : T3.V.gens_universe()) CHECK(T3.U->mul(h0, g) == T3.U->mul(g, h0));
  // rho(n_a(1)) is the reflection s_a; kernel of rho is H
  for (size_t r = 0; r < T3.rep.datum.roots.size(); ++r) {
    SignedPerm s = T3.rho(T3.n1[r]);
    IMat m = sp_matrix(s);
    const IVec& a = T3.rep.datum.roots[r];
    for (uint32_t i = 0; i < 3; ++i) {
      IVec e(3, 0);
      e[i] = 1;
      // s_a(e_i) = e_i - 2 (e_i, a)/(a, a) a
      int64_t c = 2 * a[i] / T3.rep.datum.inner(a, a);
      for (uint32_t j = 0; j < 3; ++j) CHECK(m[j][i] == e[j] - c * a[j]);
    }
  }
  size_t kernel = 0;
  for (uint32_t x : T3.V.elements()) kernel += T3.rho(x) == sp_identity(3);
  CHECK(kernel == T3.H.order());
  CHECK_THROWS(build_chevrep('C', 2, 17));
  CHECK_THROWS(build_chevrep('B', 5, 17));
}

TEST_CASE("relation catalog on small examples") {
  TitsGroup T3 = tits_group(build_chevrep('B', 3, 17));
  auto s32 = build_section_elements(T3, 2);
  CHECK(s32.a == 3);
  CHECK(s32.Hd.order() == 8);
  CHECK(all_ok(verify_relation_catalog(T3, s32)));
  CHECK(check_rhoVd_equals_Wd(T3, s32));
  auto e32 = check_Hd_Vd_extendibility(T3, s32);
  CHECK(e32.all_extend);
  CHECK(e32.characters == 8);

  TitsGroup T2 = tits_group(build_chevrep('B', 2, 5));
  auto s24 = build_section_elements(T2, 4);
  CHECK(s24.a == 1);
  CHECK(s24.Hd.order() == 2);
  CHECK(s24.Hd.contains(s24.h[0]));
  CHECK(all_ok(verify_relation_catalog(T2, s24)));
  CHECK(check_rhoVd_equals_Wd(T2, s24));
  CHECK(check_Hd_Vd_extendibility(T2, s24).all_extend);
  auto s31 = build_section_elements(T3, 1);
  CHECK(s31.Vd.order() == T3.V.order());
  CHECK(check_rhoVd_equals_Wd(T3, s31));

  // other choice of varpi
  TitsGroup T3b = tits_group(build_chevrep('B', 3, 17), 1);
  CHECK(T3b.varpi == T3.rep.F.inv(T3.varpi));
  for (uint32_t d : {1u, 2u, 3u, 6u}) CHECK(all_ok(verify_relation_catalog(T3b, build_section_elements(T3b, d))));
  CHECK_THROWS(build_section_elements(T3, 4));
  CHECK_THROWS(build_section_elements(tits_group(build_chevrep('B', 2, 7)), 2));
}

TEST_CASE("B4: braid relations and parity statements") {
  TitsGroup T = tits_group(build_chevrep('B', 4, 17));
  CHECK(T.V.order() == 16 * 384);
  auto s2 = build_section_elements(T, 2);
  const Universe& U = *T.U;
  CHECK(U.mul(U.mul(s2.p[1], s2.p[2]), s2.p[1]) == U.mul(U.mul(s2.p[2], s2.p[1]), s2.p[2]));
  CHECK(U.mul(s2.p[1], s2.p[3]) == U.mul(s2.p[3], s2.p[1]));
  CHECK(all_ok(verify_relation_catalog(T, s2)));
  auto s4 = build_section_elements(T, 4);
  CHECK(s4.a == 2);
  CHECK(all_ok(verify_relation_catalog(T, s4)));
  auto e = check_Hd_Vd_extendibility(T, s4);
  CHECK(e.all_extend);
  CHECK(e.fired_b > 0);
  CHECK(e.parity_b);
  CHECK(e.fired_a == 0);
}

TEST_CASE("type D membership") {
  CHECK(in_type_D(sp_identity(3)));
  CHECK_FALSE(in_type_D(SignedPerm{{-1, 2, 3}}));
  CHECK(in_type_D(SignedPerm{{-2, -1, 3}}));
}
