#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <vector>

#include "mckay/group.hpp"
#include "mckay/modp.hpp"

namespace mckay {

struct TableTooLarge : std::runtime_error {
  using std::runtime_error::runtime_error;
};

constexpr size_t kTableOrderCap = 200'000;
constexpr size_t kTableClassCap = 400;

// Character table with values reduced modulo a prime ell = 1 (mod exponent).
// Rows are sorted by (degree, values); the trivial character is row 0.
class CharTable {
 public:
  // ell = 0 picks the least prime = 1 mod exp(G) above 2*ceil(sqrt|G|).
  static std::shared_ptr<const CharTable> compute(const Group& G, uint64_t ell = 0,
                                                  size_t order_cap = kTableOrderCap);
  // least admissible prime for G
  static uint64_t default_ell(const Group& G);

  const Group& group() const { return G_; }
  const Classes& classes() const { return cls_; }
  size_t size() const { return rows_.size(); }
  uint64_t ell() const { return ell_; }
  uint64_t exponent() const { return exponent_; }
  const modp::Vec& row(size_t i) const { return rows_[i]; }
  uint64_t degree(size_t i) const { return degrees_[i]; }
  uint64_t value(size_t i, uint32_t local_elt) const { return rows_[i][cls_.class_of[local_elt]]; }

  // <a, b> = 1/|G| sum_k |C_k| a_k b_{k'}  (mod ell)
  uint64_t inner(const modp::Vec& a, const modp::Vec& b) const;
  std::optional<size_t> find_row(const modp::Vec& v) const;
  // true iff orthogonality relations and the degree equation hold
  bool verify() const;

  // k -> class of sigma(rep k)
  std::vector<uint32_t> class_perm(const Automorphism& sigma) const;
  // chi -> chi o sigma
  std::vector<uint32_t> irr_perm(const std::vector<uint32_t>& class_perm) const;
  std::vector<uint32_t> irr_perm(const Automorphism& sigma) const { return irr_perm(class_perm(sigma)); }
  // action of g (normalizing G, universe index): theta -> (y -> theta(g y g^-1))
  std::vector<uint32_t> conjugation_class_perm(uint32_t g_universe) const;
  std::vector<uint32_t> conjugation_irr_perm(uint32_t g_universe) const {
    return irr_perm(conjugation_class_perm(g_universe));
  }

 private:
  Group G_;
  Classes cls_;
  uint64_t ell_ = 0, exponent_ = 1;
  std::vector<modp::Vec> rows_;
  std::vector<uint64_t> degrees_;
};

using TablePtr = std::shared_ptr<const CharTable>;

// Memoized tables keyed by (universe, element set, ell); safe for concurrent use.
TablePtr cached_table(const Group& G, uint64_t ell = 0, size_t order_cap = kTableOrderCap);
void clear_table_cache();

// Y-class -> X-class for Y <= X in a common universe.
std::vector<uint32_t> class_fusion(const CharTable& Y, const CharTable& X);
modp::Vec restrict_row(const CharTable& X, size_t chi, const CharTable& Y, const std::vector<uint32_t>& fusion);

// Orbit-stabilizer inertia group of theta in X, acting by conjugation on Y.
Group inertia_group(const Group& X, const CharTable& Y, size_t theta);

struct ExtensionResult {
  bool extends = false;
  size_t inertia_order = 0;
  std::optional<size_t> witness;  // row of the inertia-group table
};
// Does theta in Irr(Y) extend to its inertia group in X? Tables use the ell of Y.
ExtensionResult extension_to_inertia(const Group& X, const CharTable& Y, size_t theta);
// Does theta extend to the overgroup Xt (no invariance assumed)?
std::optional<size_t> find_extension(const CharTable& Xt, const CharTable& Y, size_t theta);

struct MaxExtResult {
  bool all_extend = true;
  std::vector<ExtensionResult> per_char;
};
// every theta in Irr(Y) extends to X_theta
MaxExtResult maximal_extendibility(const Group& X, const Group& Y, uint64_t ell = 0);

// characters fixed by all automorphisms (each validated to permute classes)
size_t fixed_irr_count(const CharTable& T, const std::vector<Automorphism>& autos);
// characters fixed by conjugation with all the given universe elements
size_t fixed_irr_count_conj(const CharTable& T, const std::vector<uint32_t>& gs);

struct CosetCounts {
  size_t x_classes = 0;   // |xY / ~X|
  size_t y_classes = 0;   // |xY / ~Y|
  size_t invariant = 0;   // |Irr(Y)^X|
  bool equal() const { return x_classes == y_classes && y_classes == invariant; }
};
// X/Y cyclic generated by xY (checked)
CosetCounts coset_basis_counts(const Group& X, const Group& Y, uint32_t x_universe);

}  // namespace mckay
