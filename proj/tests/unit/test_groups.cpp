#include <algorithm>

#include "doctest.h"
#include "mckay/group.hpp"

using namespace mckay;

namespace {
Group whole(const Field& F, const std::vector<Mat>& gens) { return Group::whole(Universe::closure(F, gens)); }

std::vector<Mat> quaternion(const Field& F3) {
  // Q8 inside SL2(3)
  return {from_ints(F3, {{0, 1}, {-1, 0}}), from_ints(F3, {{1, 1}, {1, -1}})};
}

std::vector<uint64_t> sorted_sizes(const Classes& c) {
  std::vector<uint64_t> s = c.sizes;
  std::sort(s.begin(), s.end());
  return s;
}

// brute-force class count: number of commuting pairs / |G|
uint64_t commuting_pairs_over_order(const Group& G) {
  uint64_t n = 0;
  for (uint32_t a = 0; a < G.order(); ++a)
    for (uint32_t b = 0; b < G.order(); ++b) n += G.mul(a, b) == G.mul(b, a);
  return n / G.order();
}
}  // namespace

TEST_CASE("closure orders") {
  Field F3 = Field::make(3);
  CHECK(whole(F3, {from_ints(F3, {{0, 1}, {1, 0}})}).order() == 2);
  CHECK(whole(F3, gl_generators(F3, 2)).order() == (9 - 1) * (9 - 3));
  Field F4 = Field::make(2, 2);
  CHECK(whole(F4, sl_generators(F4, 2)).order() == 60);
  Field F2 = Field::make(2);
  CHECK(whole(F2, gl_generators(F2, 3)).order() == 168);
  CHECK_THROWS_AS(Universe::closure(F3, gl_generators(F3, 3), 1000), GroupTooLarge);
}

TEST_CASE("universe multiplication matches matrices") {
  Field F5 = Field::make(5);
  auto U = Universe::closure(F5, gl_generators(F5, 2));
  for (uint32_t a = 0; a < U->size(); a += 37)
    for (uint32_t b = 0; b < U->size(); b += 41) {
      CHECK(U->mul(a, b) == *U->find(mul(F5, U->matrix(a), U->matrix(b))));
      CHECK(U->mul(a, U->inv(a)) == 0);
    }
}

TEST_CASE("conjugacy classes") {
  Field F3 = Field::make(3);
  auto S3 = whole(F3, permutation_matrices(F3, 3, {{1, 0, 2}, {1, 2, 0}}));
  auto c = conjugacy_classes(S3);
  CHECK(c.count() == 3);
  CHECK(sorted_sizes(c) == std::vector<uint64_t>{1, 2, 3});
  CHECK(c.reps[0] == 0);
  auto Q8 = whole(F3, quaternion(F3));
  CHECK(Q8.order() == 8);
  CHECK(conjugacy_classes(Q8).count() == 5);
  Field F2 = Field::make(2);
  auto G = whole(F2, gl_generators(F2, 3));
  auto cg = conjugacy_classes(G);
  CHECK(cg.count() == 6);
  uint64_t tot = 0;
  for (auto s : cg.sizes) tot += s;
  CHECK(tot == 168);
  CHECK(cg.count() == commuting_pairs_over_order(G));
  auto GL23 = whole(F3, gl_generators(F3, 2));
  CHECK(conjugacy_classes(GL23).count() == commuting_pairs_over_order(GL23));
}

TEST_CASE("automorphisms") {
  Field F9 = Field::make(3, 2);
  auto G = whole(F9, sl_generators(F9, 2));
  auto fr = automorphism_from_matrix_map(G, frobenius_map(F9, 1));
  CHECK(automorphism_order(fr) == 2);
  auto ti = automorphism_from_matrix_map(G, transpose_inverse_map(F9));
  CHECK(commute(fr, ti));
  // a map that is not a homomorphism is rejected
  std::vector<uint32_t> bad(G.num_gens(), G.gen(0));
  CHECK_THROWS_AS(automorphism_from_images(G, bad), NotAutomorphism);
}

TEST_CASE("twisted classes") {
  Field F3 = Field::make(3);
  auto S3 = whole(F3, permutation_matrices(F3, 3, {{1, 2, 0}, {1, 0, 2}}));
  // identity twist gives ordinary classes
  CHECK(twisted_classes(S3, identity_automorphism(S3)).count() == conjugacy_classes(S3).count());
  // inner twist gives the same count
  CHECK(twisted_classes(S3, inner_automorphism(S3, S3.elt(S3.gen(1)))).count() == 3);
  // C3 twisted by a transposition
  auto C3 = Group::generate(S3.universe(), {S3.elt(S3.gen(0))});
  CHECK(C3.order() == 3);
  auto tw = twisted_classes(C3, inner_automorphism(C3, S3.elt(S3.gen(1))));
  CHECK(tw.count() == 1);
  // F9^x with the cube map: classes = cosets of {h^-1 h^3} = squares
  Field F9 = Field::make(3, 2);
  Mat g(1);
  g.at(0, 0) = F9.generator();
  auto C8 = whole(F9, {g});
  CHECK(C8.order() == 8);
  auto cube = automorphism_from_matrix_map(C8, frobenius_map(F9, 1));
  CHECK(twisted_classes(C8, cube).count() == 2);
}

TEST_CASE("coset reformulation of twisted classes") {
  // H = SL2(4), c = Frobenius in SL2(4) x| <Frob> realized over F2
  Field F4 = Field::make(2, 2), F2 = Field::make(2);
  std::vector<Mat> gens;
  for (auto& m : sl_generators(F4, 2)) gens.push_back(restrict_scalars(F4, F2, m));
  Mat phi = frobenius_linear(F4, F2, 2, 1);
  auto Hwhole = Universe::closure(F2, gens);
  auto U = Universe::closure(F2, [&] { auto g = gens; g.push_back(phi); return g; }());
  CHECK(U->size() == 120);
  std::vector<uint32_t> hg;
  for (auto& m : gens) hg.push_back(*U->find(m));
  auto H = Group::generate(U, hg);
  auto X = Group::whole(U);
  uint32_t c = *U->find(phi);
  auto sigma = inner_automorphism(H, U->inv(c));  // h -> c h c^-1
  auto tw = twisted_classes(H, sigma);
  // H-classes on the coset Hc
  std::vector<uint32_t> coset;
  for (uint32_t h : H.elements()) coset.push_back(U->mul(h, c));
  auto orbs = conjugation_orbits(H, coset);
  CHECK(tw.count() == orbs.size());
  (void)Hwhole;
  (void)X;
}

TEST_CASE("normalizers and centralizers") {
  Field F3 = Field::make(3);
  auto S3 = whole(F3, permutation_matrices(F3, 3, {{1, 2, 0}, {1, 0, 2}}));
  CHECK(normalizer(S3, S3).order() == 6);
  auto C3 = Group::generate(S3.universe(), {S3.elt(S3.gen(0))});
  CHECK(normalizer(S3, C3).order() == 6);
  auto C2 = Group::generate(S3.universe(), {S3.elt(S3.gen(1))});
  CHECK(normalizer(S3, C2).order() == 2);
  CHECK(centralizer(S3, S3.elt(S3.gen(0))).order() == 3);
  CHECK(is_normal(S3, C3));
  CHECK(!is_normal(S3, C2));
  CHECK(intersection(C3, C2).order() == 1);
  CHECK_THROWS(Group::from_elements(S3.universe(), {0, S3.elt(S3.gen(0))}));
}
