#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"
#include "mckay/group.hpp"
#include "mckay/intlinalg.hpp"

namespace mckay {

using IVec = std::vector<int64_t>;

// Root system in an ambient lattice with an integral inner product.
// Classical types use the e_i basis; types B_l use alpha_1 = e_1,
// alpha_k = e_k - e_{k-1}. E types use simple-root coordinates with Bourbaki
// numbering.
struct RootDatum {
  char type = 'A';
  uint32_t rank = 0;
  uint32_t dim = 0;                     // ambient dimension
  std::vector<std::vector<int64_t>> gram;  // ambient inner product
  std::vector<IVec> simple;
  std::vector<IVec> roots;
  std::vector<std::vector<int64_t>> cartan;  // cartan[i][j] = <alpha_i^vee, alpha_j>

  std::string label() const { return std::string(1, type) + std::to_string(rank); }
  int64_t inner(const IVec& a, const IVec& b) const;
  IVec coroot(const IVec& a) const;  // 2a/(a,a)
  bool is_root(const IVec& a) const;
  // ambient matrix of the reflection in a (row-major dim x dim)
  std::vector<std::vector<int64_t>> reflection(const IVec& a) const;
  nlohmann::json to_json() const;
};

RootDatum root_datum(char type, uint32_t rank);
// expected root count (2l^2 for B_l, 126 for E7, ...)
size_t expected_root_count(char type, uint32_t rank);

// Integer matrices on the ambient space.
using IMat = std::vector<std::vector<int64_t>>;
IMat imat_mul(const IMat& a, const IMat& b);
IMat imat_identity(size_t n);
IVec imat_apply(const IMat& a, const IVec& v);
IMat simple_word_matrix(const RootDatum& R, const std::vector<uint32_t>& word);  // s_{w1} s_{w2} ...

// Action of an ambient matrix on the coroot lattice, in the basis of simple coroots.
IntMat coroot_action(const RootDatum& R, const IMat& ambient);

// Weyl group as a matrix group over a small prime field (ambient action).
struct WeylGroup {
  RootDatum datum;
  Field field;
  UniversePtr U;
  Group W;
  Mat to_mat(const IMat& m) const;
  IMat to_imat(uint32_t universe_index) const;  // lifts entries to (-p/2, p/2)
};
WeylGroup weyl_group(const RootDatum& R, size_t bound = kDefaultBound);
// product of the degrees, without enumeration
uint64_t weyl_order_from_degrees(char type, uint32_t rank);

// Signed permutations of {1..l}: image[i-1] = sigma(i) in {+-1..+-l}.
struct SignedPerm {
  std::vector<int> image;
  int operator()(int i) const { return i > 0 ? image[i - 1] : -image[-i - 1]; }
  bool operator==(const SignedPerm& o) const { return image == o.image; }
};
SignedPerm sp_identity(uint32_t l);
SignedPerm sp_compose(const SignedPerm& a, const SignedPerm& b);  // a after b
SignedPerm sp_power(const SignedPerm& a, int64_t e);
uint32_t sp_order(const SignedPerm& a);
IMat sp_matrix(const SignedPerm& a);  // e_i -> sign e_|sigma(i)|
std::optional<SignedPerm> sp_from_matrix(const IMat& m);
// cycle notation such as (1,2,-1,-2)
SignedPerm sp_from_cycle(uint32_t l, const std::vector<int>& cycle);
std::string sp_to_string(const SignedPerm& a);

struct RegularElementV {
  uint32_t l = 0, d = 0, d0 = 0, a = 0;
  SignedPerm rho_v0, rho_v;
  std::vector<uint32_t> word;  // simple reflections (1-based) of rho(v)
  std::vector<std::vector<int>> orbits;  // rho-bar(v) orbits on {1..l}
};
// rho(v) with v = v0^(2l/d), rho(v0) = s_1 ... s_l
RegularElementV regular_element_v(uint32_t l, uint32_t d);

struct RegularityResult {
  bool regular = false;
  uint32_t eigenspace_dim = 0;
  uint64_t prime = 0;
  std::vector<uint64_t> witness;  // eigenvector off every reflecting hyperplane
};
// zeta-regularity of w (times an optional graph automorphism phi) for a
// primitive d-th root of unity zeta, over F_ell with d | ell - 1.
RegularityResult zeta_regular_check(const RootDatum& R, const IMat& w, uint32_t d, uint64_t seed = 1,
                                    const IMat* phi = nullptr);

// C_W(w) for an ambient matrix w in W
Group relative_weyl_group(const WeylGroup& WG, const IMat& w);

// Graph automorphism of the Dynkin diagram as an ambient matrix.
IMat graph_automorphism(const RootDatum& R, const std::vector<uint32_t>& simple_perm);

struct OrderPolynomial {
  uint32_t N = 0;  // power of q
  std::vector<std::pair<uint32_t, uint32_t>> phi;  // (d, multiplicity)
  IntPoly expand() const;  // prod Phi_d^m, without the q^N factor
  std::string to_string() const;
  bool operator==(const OrderPolynomial& o) const { return N == o.N && phi == o.phi; }
};

// labels: A<l>, B<l>, C<l>, D<l>, 2A<l>, 2D<l>, E6, 2E6, E7
std::vector<uint32_t> reflection_degrees(const std::string& label);
// sign of the twist on the invariant of each degree
std::vector<int> degree_twists(const std::string& label);
OrderPolynomial order_polynomial(const std::string& label);  // computed from degrees
// verbatim lists for E6, 2E6, E7
OrderPolynomial embedded_order_polynomial(const std::string& label);
std::set<uint32_t> embedded_nonregular(const std::string& label);
// d with Phi_d dividing the order polynomial
std::set<uint32_t> cyclotomic_support(const OrderPolynomial& P);
// regular numbers by the degree/codegree criterion (untwisted) or by a
// search over twisted classes (twisted labels)
std::set<uint32_t> regular_numbers(const std::string& label);
// regular numbers found by explicit search for zeta-regular elements
std::set<uint32_t> regular_numbers_by_search(const std::string& label, size_t bound = 200'000);

// Mod-2 coroot arithmetic: a formal product of h_beta(-1) as the sum of the
// coroots modulo 2, in simple-coroot coordinates.
std::vector<int> coroot_mod2(const RootDatum& R, const std::vector<IVec>& betas);

// The same root system in simple-root coordinates (ambient = root lattice).
RootDatum in_root_coordinates(const RootDatum& R);
// Solve B y = v exactly for an integral y (B given by columns); throws if not integral.
IVec solve_integral(const std::vector<IVec>& columns, const IVec& v);

}  // namespace mckay
