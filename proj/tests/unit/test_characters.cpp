#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "mckay/characters.hpp"

using namespace mckay;

namespace {
Group whole(const Field& F, const std::vector<Mat>& gens) { return Group::whole(Universe::closure(F, gens)); }

std::vector<uint64_t> degrees(const CharTable& T) {
  std::vector<uint64_t> d;
  for (size_t i = 0; i < T.size(); ++i) d.push_back(T.degree(i));
  return d;
}

uint64_t commuting_pairs_over_order(const Group& G) {
  uint64_t n = 0;
  for (uint32_t a = 0; a < G.order(); ++a)
    for (uint32_t b = 0; b < G.order(); ++b) n += G.mul(a, b) == G.mul(b, a);
  return n / G.order();
}
}  // namespace

TEST_CASE("small character tables") {
  Field F3 = Field::make(3);
  auto S3 = whole(F3, permutation_matrices(F3, 3, {{1, 2, 0}, {1, 0, 2}}));
  auto T = CharTable::compute(S3);
  CHECK(degrees(*T) == std::vector<uint64_t>{1, 1, 2});
  auto SL23 = whole(F3, sl_generators(F3, 2));
  CHECK(SL23.order() == 24);
  auto T2 = CharTable::compute(SL23);
  CHECK(T2->size() == 7);
  CHECK(T2->size() == commuting_pairs_over_order(SL23));
  CHECK(degrees(*T2) == std::vector<uint64_t>{1, 1, 1, 2, 2, 2, 3});
}

TEST_CASE("permutation character of S4 decomposes as 1 + 3") {
  Field F5 = Field::make(5);
  auto S4 = whole(F5, permutation_matrices(F5, 4, {{1, 2, 3, 0}, {1, 0, 2, 3}}));
  CHECK(S4.order() == 24);
  auto T = CharTable::compute(S4);
  CHECK(degrees(*T) == std::vector<uint64_t>{1, 1, 2, 3, 3});
  // permutation character: number of fixed points, computed from the matrices
  const auto& C = T->classes();
  modp::Vec pi(C.count());
  for (size_t k = 0; k < C.count(); ++k) {
    Mat m = S4.universe()->matrix(S4.elt(C.reps[k]));
    uint64_t fix = 0;
    for (uint32_t i = 0; i < 4; ++i) fix += m.at(i, i);
    pi[k] = fix;
  }
  CHECK(T->inner(pi, pi) == 2);
  CHECK(T->inner(pi, T->row(0)) == 1);
}

TEST_CASE("tables of larger groups") {
  Field F2 = Field::make(2);
  auto G = whole(F2, gl_generators(F2, 3));
  auto T = CharTable::compute(G);
  CHECK(degrees(*T) == std::vector<uint64_t>{1, 3, 3, 6, 7, 8});
  Field F5 = Field::make(5);
  auto SL25 = whole(F5, sl_generators(F5, 2));
  auto T5 = CharTable::compute(SL25);
  CHECK(T5->size() == 9);  // q + 4
  CHECK_THROWS_AS(CharTable::compute(SL25, 0, 100), TableTooLarge);
}

TEST_CASE("inertia groups and extensions") {
  Field F3 = Field::make(3);
  auto S3 = whole(F3, permutation_matrices(F3, 3, {{1, 2, 0}, {1, 0, 2}}));
  auto C3 = Group::generate(S3.universe(), {S3.elt(S3.gen(0))});
  uint64_t ell = CharTable::default_ell(S3);
  auto TC = CharTable::compute(C3, ell);
  CHECK(inertia_group(S3, *TC, 0).order() == 6);
  for (size_t t = 1; t < 3; ++t) CHECK(inertia_group(S3, *TC, t).order() == 3);
  auto r = maximal_extendibility(S3, C3);
  CHECK(r.all_extend);
  // Q8 in SL2(3): the degree-2 characters... use C4 <= Q8 with cyclic quotient
  auto Q8 = whole(F3, {from_ints(F3, {{0, 1}, {-1, 0}}), from_ints(F3, {{1, 1}, {1, -1}})});
  auto C4 = Group::generate(Q8.universe(), {Q8.elt(Q8.gen(0))});
  CHECK(maximal_extendibility(Q8, C4).all_extend);
  // Z(Q8) <= Q8: the faithful character of Z(Q8) does not extend to Q8
  auto Z = Group::generate(Q8.universe(), {Q8.universe()->power(Q8.elt(Q8.gen(0)), 2)});
  CHECK(Z.order() == 2);
  auto rz = maximal_extendibility(Q8, Z);
  CHECK(!rz.all_extend);
  CHECK(rz.per_char[0].extends);
  CHECK(!rz.per_char[1].extends);
}

TEST_CASE("Brauer permutation lemma on abelian groups") {
  // A = C_n1 x C_n2 as diagonal matrices over F_13 and sigma = a power map or a swap
  Field F = Field::make(13);
  uint32_t z = F.generator();
  for (auto [n1, n2] : std::vector<std::pair<uint32_t, uint32_t>>{{2, 2}, {4, 2}, {3, 3}, {6, 2}, {4, 4}, {12, 1}, {6, 6}}) {
    Mat a = diagonal({F.pow(z, 12 / n1), 1}), b = diagonal({1, F.pow(z, 12 / n2)});
    auto A = whole(F, {a, b});
    CHECK(A.order() == n1 * n2);
    auto T = CharTable::compute(A);
    std::vector<Automorphism> sigmas;
    for (int64_t e : {-1, 5, 7})
      if (std::gcd(uint64_t(std::abs(e)), uint64_t(n1 * n2)) == 1) {
        std::vector<uint32_t> im;
        for (uint32_t g : A.gens()) im.push_back(*A.local(A.universe()->power(A.elt(g), e)));
        sigmas.push_back(automorphism_from_images(A, im));
      }
    if (n1 == n2) sigmas.push_back(automorphism_from_matrix_map(A, conjugation_map(F, from_ints(F, {{0, 1}, {1, 0}}))));
    for (const auto& s : sigmas) {
      size_t fixed_pts = 0;
      for (uint32_t x = 0; x < A.order(); ++x) fixed_pts += s(x) == x;
      CHECK(fixed_irr_count(*T, {s}) == fixed_pts);
    }
  }
}

TEST_CASE("fixed counts under Frobenius") {
  Field F9 = Field::make(3, 2), F3 = Field::make(3);
  auto G = whole(F9, sl_generators(F9, 2));
  auto T = CharTable::compute(G);
  auto fr = automorphism_from_matrix_map(G, frobenius_map(F9, 1));
  CHECK(fixed_irr_count(*T, {}) == T->size());
  CHECK(fixed_irr_count(*T, {fr}) == CharTable::compute(whole(F3, sl_generators(F3, 2)))->size());
  // invariance under replacing by a conjugate automorphism
  auto inner = inner_automorphism(G, G.elt(G.gen(0)));
  auto conj_fr = compose(compose(inner, fr), inner_automorphism(G, G.universe()->inv(G.elt(G.gen(0)))));
  CHECK(fixed_irr_count(*T, {conj_fr}) == fixed_irr_count(*T, {fr}));
}

TEST_CASE("coset counts") {
  Field F3 = Field::make(3);
  auto S3 = whole(F3, permutation_matrices(F3, 3, {{1, 2, 0}, {1, 0, 2}}));
  auto C3 = Group::generate(S3.universe(), {S3.elt(S3.gen(0))});
  auto c = coset_basis_counts(S3, C3, S3.elt(S3.gen(1)));
  CHECK(c.x_classes == 1);
  CHECK(c.y_classes == 1);
  CHECK(c.invariant == 1);
  auto self = coset_basis_counts(S3, S3, 0);
  CHECK(self.equal());
  CHECK(self.invariant == 3);
}
