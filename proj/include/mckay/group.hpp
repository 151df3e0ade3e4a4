#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mckay/field.hpp"
#include "mckay/matrix.hpp"

namespace mckay {

struct GroupTooLarge : std::runtime_error {
  using std::runtime_error::runtime_error;
};

constexpr size_t kDefaultBound = 2'000'000;

// All elements of a matrix group, enumerated breadth-first from its
// generators. Index 0 is the identity. Matrices are stored bit-packed.
class Universe {
 public:
  static std::shared_ptr<const Universe> closure(const Field& F, const std::vector<Mat>& gens,
                                                 size_t bound = kDefaultBound);

  size_t size() const { return count_; }
  uint32_t dim() const { return n_; }
  const Field& field() const { return F_; }
  size_t num_gens() const { return ngens_; }

  Mat matrix(uint32_t i) const;
  std::optional<uint32_t> find(const Mat& m) const;
  uint32_t mul(uint32_t a, uint32_t b) const;
  uint32_t inv(uint32_t a) const { return inv_[a]; }
  uint32_t right_gen(uint32_t a, size_t g) const { return right_[size_t(a) * ngens_ + g]; }
  uint32_t gen(size_t g) const { return gen_idx_[g]; }
  uint32_t parent(uint32_t a) const { return parent_[a]; }
  uint32_t parent_gen(uint32_t a) const { return pgen_[a]; }
  uint32_t depth(uint32_t a) const { return depth_[a]; }
  uint32_t conj(uint32_t x, uint32_t g) const { return mul(inv(g), mul(x, g)); }  // g^-1 x g
  uint32_t power(uint32_t a, int64_t e) const;
  uint32_t order_of(uint32_t a) const;

 private:
  Universe() = default;
  void pack(const Mat& m, uint64_t* out) const;
  uint64_t hash_words(const uint64_t* w) const;
  std::optional<uint32_t> lookup(const uint64_t* w, uint64_t h) const;
  void insert_hash(uint32_t idx, uint64_t h);

  Field F_;
  uint32_t n_ = 0;
  uint32_t bits_ = 0;
  size_t words_ = 0;
  size_t count_ = 0;
  size_t ngens_ = 0;
  std::vector<uint64_t> packed_;
  std::vector<uint32_t> table_;
  size_t table_mask_ = 0;
  std::vector<uint32_t> right_, parent_, pgen_, depth_, inv_, gen_idx_;
};

using UniversePtr = std::shared_ptr<const Universe>;

// A subgroup of a universe, with its own breadth-first enumeration in
// terms of its own generators. Local index 0 is the identity.
class Group {
 public:
  Group() = default;
  static Group whole(UniversePtr U);
  // closure of the given universe elements
  static Group generate(UniversePtr U, const std::vector<uint32_t>& gens, size_t bound = kDefaultBound);
  // a subgroup given by its element set (universe indices); throws if not closed
  static Group from_elements(UniversePtr U, std::vector<uint32_t> elts);

  const UniversePtr& universe() const { return U_; }
  size_t order() const { return elts_.size(); }
  uint32_t elt(uint32_t local) const { return elts_[local]; }
  const std::vector<uint32_t>& elements() const { return elts_; }
  std::optional<uint32_t> local(uint32_t u) const {
    int32_t l = local_[u];
    if (l < 0) return std::nullopt;
    return static_cast<uint32_t>(l);
  }
  bool contains(uint32_t u) const { return local_[u] >= 0; }
  size_t num_gens() const { return gens_.size(); }
  uint32_t gen(size_t g) const { return gens_[g]; }  // local index
  const std::vector<uint32_t>& gens() const { return gens_; }
  std::vector<uint32_t> gens_universe() const;
  uint32_t right(uint32_t a, size_t g) const { return right_[size_t(a) * gens_.size() + g]; }
  uint32_t parent(uint32_t a) const { return parent_[a]; }
  uint32_t parent_gen(uint32_t a) const { return pgen_[a]; }
  uint32_t mul(uint32_t a, uint32_t b) const;  // local indices
  uint32_t inv(uint32_t a) const { return inv_[a]; }
  uint32_t conj(uint32_t x, uint32_t g) const { return mul(inv(g), mul(x, g)); }
  // z * u for every local u
  std::vector<uint32_t> left_table(uint32_t z) const;
  // u * z for every local u
  std::vector<uint32_t> right_table(uint32_t z) const;
  bool is_subgroup_of(const Group& other) const;
  bool same_elements(const Group& other) const;
  std::vector<uint32_t> sorted_elements() const;
  bool is_abelian() const;
  uint64_t fingerprint() const;

 private:
  void build(const std::vector<uint32_t>& gens_u, size_t bound);

  UniversePtr U_;
  std::vector<uint32_t> elts_;
  std::vector<int32_t> local_;
  std::vector<uint32_t> gens_;
  std::vector<uint32_t> right_, parent_, pgen_, inv_;
};

struct Classes {
  std::vector<uint32_t> class_of;  // local element -> class
  std::vector<uint32_t> reps;      // local representative (first in enumeration order)
  std::vector<uint64_t> sizes;
  std::vector<uint32_t> inverse;   // class of rep^-1
  size_t count() const { return reps.size(); }
};

Classes conjugacy_classes(const Group& G);
uint64_t group_exponent(const Group& G, const Classes& cls);
uint32_t element_order(const Group& G, uint32_t local);

// Automorphism of a group, as a permutation of local indices.
struct Automorphism {
  std::vector<uint32_t> map;
  uint32_t operator()(uint32_t x) const { return map[x]; }
};

struct NotAutomorphism : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Extend generator images to a map, checking every Cayley-graph edge and
// bijectivity.
Automorphism automorphism_from_images(const Group& G, const std::vector<uint32_t>& images);
// Induced by a matrix map (Frobenius power, transpose-inverse, conjugation, ...).
Automorphism automorphism_from_matrix_map(const Group& G, const std::function<Mat(const Mat&)>& f);
Automorphism inner_automorphism(const Group& G, uint32_t g_universe);  // x -> g^-1 x g
Automorphism compose(const Automorphism& a, const Automorphism& b);    // a after b
Automorphism identity_automorphism(const Group& G);
bool commute(const Automorphism& a, const Automorphism& b);
uint32_t automorphism_order(const Automorphism& a);

// Matrix maps
std::function<Mat(const Mat&)> frobenius_map(const Field& F, uint32_t j);
std::function<Mat(const Mat&)> transpose_inverse_map(const Field& F);
std::function<Mat(const Mat&)> conjugation_map(const Field& F, const Mat& c);  // g -> c^-1 g c

struct TwistedClasses {
  std::vector<uint32_t> class_of;
  std::vector<uint32_t> reps;
  size_t count() const { return reps.size(); }
};
// h' ~ h'' iff h'' = h^-1 h' sigma(h)
TwistedClasses twisted_classes(const Group& H, const Automorphism& sigma);

Group centralizer(const Group& G, uint32_t x_universe);
Group centralizer_of_set(const Group& G, const std::vector<uint32_t>& xs_universe);
Group normalizer(const Group& G, const Group& U);
Group intersection(const Group& A, const Group& B);
bool is_normal(const Group& G, const Group& N);
// Orbits of G acting by conjugation on a set of elements (universe indices).
std::vector<std::vector<uint32_t>> conjugation_orbits(const Group& G, const std::vector<uint32_t>& set);

// Standard matrix groups.
std::vector<Mat> gl_generators(const Field& F, uint32_t n);
std::vector<Mat> sl_generators(const Field& F, uint32_t n);
std::vector<Mat> permutation_matrices(const Field& F, uint32_t n, const std::vector<std::vector<uint32_t>>& perms);

// Subgroups of a small group, found as closures of at most three elements.
std::vector<Group> all_subgroups(const Group& G, size_t max_order = 200);

// C of order r in {2,3} normal in C x| D with D abelian; X <= CD.
enum class CdrOutcome { holds, fails, hypothesis_not_met };
struct CdrResult {
  CdrOutcome outcome = CdrOutcome::fails;
  std::optional<uint32_t> conjugator;  // universe index of c in C with cXc^-1 = C'D'
};
CdrResult cdr_decomposition_check(const Group& C, const Group& D, const Group& X);

}  // namespace mckay
