#include "mckay/group.hpp"

#include <algorithm>
#include <numeric>

namespace mckay {

namespace {
constexpr uint32_t kEmpty = 0xffffffffu;
constexpr uint32_t kDeepWord = 24;  // beyond this, multiply matrices instead of walking words

uint64_t mix(uint64_t h) {
  h ^= h >> 33;
  h *= 0xff51afd7ed558ccdULL;
  h ^= h >> 33;
  h *= 0xc4ceb9fe1a85ec53ULL;
  h ^= h >> 33;
  return h;
}
}  // namespace

void Universe::pack(const Mat& m, uint64_t* out) const {
  std::fill(out, out + words_, 0);
  size_t bit = 0;
  for (uint32_t v : m.e) {
    size_t w = bit >> 6, off = bit & 63;
    out[w] |= uint64_t(v) << off;
    if (off + bits_ > 64) out[w + 1] |= uint64_t(v) >> (64 - off);
    bit += bits_;
  }
}

Mat Universe::matrix(uint32_t i) const {
  Mat m(n_);
  const uint64_t* w = &packed_[size_t(i) * words_];
  uint64_t mask = (uint64_t(1) << bits_) - 1;
  size_t bit = 0;
  for (auto& v : m.e) {
    size_t wi = bit >> 6, off = bit & 63;
    uint64_t x = w[wi] >> off;
    if (off + bits_ > 64) x |= w[wi + 1] << (64 - off);
    v = static_cast<uint32_t>(x & mask);
    bit += bits_;
  }
  return m;
}

uint64_t Universe::hash_words(const uint64_t* w) const {
  uint64_t h = 0x9e3779b97f4a7c15ULL;
  for (size_t i = 0; i < words_; ++i) h = mix(h ^ w[i]) + i;
  return h;
}

std::optional<uint32_t> Universe::lookup(const uint64_t* w, uint64_t h) const {
  size_t pos = h & table_mask_;
  while (table_[pos] != kEmpty) {
    uint32_t idx = table_[pos];
    if (std::equal(w, w + words_, &packed_[size_t(idx) * words_])) return idx;
    pos = (pos + 1) & table_mask_;
  }
  return std::nullopt;
}

void Universe::insert_hash(uint32_t idx, uint64_t h) {
  size_t pos = h & table_mask_;
  while (table_[pos] != kEmpty) pos = (pos + 1) & table_mask_;
  table_[pos] = idx;
}

std::optional<uint32_t> Universe::find(const Mat& m) const {
  if (m.n != n_) return std::nullopt;
  std::vector<uint64_t> w(words_);
  pack(m, w.data());
  return lookup(w.data(), hash_words(w.data()));
}

std::shared_ptr<const Universe> Universe::closure(const Field& F, const std::vector<Mat>& gens, size_t bound) {
  if (gens.empty()) throw std::invalid_argument("closure: no generators");
  std::shared_ptr<Universe> U(new Universe());
  U->F_ = F;
  U->n_ = gens[0].n;
  U->bits_ = 1;
  while ((uint64_t(1) << U->bits_) < F.q()) ++U->bits_;
  U->words_ = (size_t(U->n_) * U->n_ * U->bits_ + 63) / 64;
  U->ngens_ = gens.size();
  for (const auto& g : gens) {
    if (g.n != U->n_) throw std::invalid_argument("closure: mixed dimensions");
    if (det(F, g) == 0) throw std::invalid_argument("closure: singular generator");
  }
  const size_t W = U->words_;
  auto resize_table = [&](size_t cap) {
    size_t sz = 16;
    while (sz < 2 * cap) sz <<= 1;
    U->table_.assign(sz, kEmpty);
    U->table_mask_ = sz - 1;
    for (uint32_t i = 0; i < U->count_; ++i) U->insert_hash(i, U->hash_words(&U->packed_[size_t(i) * W]));
  };
  std::vector<uint64_t> buf(W);
  auto add = [&](const Mat& m, uint32_t parent, uint32_t pgen, uint32_t depth) -> uint32_t {
    U->pack(m, buf.data());
    uint64_t h = U->hash_words(buf.data());
    if (auto f = U->lookup(buf.data(), h)) return *f;
    if (U->count_ >= bound)
      throw GroupTooLarge("group too large: more than " + std::to_string(bound) + " elements");
    uint32_t idx = static_cast<uint32_t>(U->count_++);
    U->packed_.insert(U->packed_.end(), buf.begin(), buf.end());
    U->parent_.push_back(parent);
    U->pgen_.push_back(pgen);
    U->depth_.push_back(depth);
    if (2 * U->count_ > U->table_.size()) resize_table(U->count_ * 2);
    else U->insert_hash(idx, h);
    return idx;
  };
  resize_table(1024);
  add(identity(U->n_), 0, 0, 0);
  std::vector<Mat> gm = gens;
  for (size_t i = 0; i < U->count_; ++i) {
    Mat x = U->matrix(static_cast<uint32_t>(i));
    for (size_t g = 0; g < gm.size(); ++g) {
      uint32_t r = add(mckay::mul(F, x, gm[g]), static_cast<uint32_t>(i), static_cast<uint32_t>(g), U->depth_[i] + 1);
      U->right_.push_back(r);
    }
  }
  for (const auto& g : gm) U->gen_idx_.push_back(*U->find(g));
  U->inv_.resize(U->count_);
  for (uint32_t i = 0; i < U->count_; ++i) {
    auto f = U->find(inverse(F, U->matrix(i)));
    if (!f) throw std::logic_error("closure: inverse missing");
    U->inv_[i] = *f;
  }
  return U;
}

uint32_t Universe::mul(uint32_t a, uint32_t b) const {
  if (depth_[b] > kDeepWord) return *find(mckay::mul(F_, matrix(a), matrix(b)));
  uint32_t word[64];
  uint32_t len = 0;
  for (uint32_t x = b; x != 0; x = parent_[x]) word[len++] = pgen_[x];
  uint32_t r = a;
  while (len) r = right_[size_t(r) * ngens_ + word[--len]];
  return r;
}

uint32_t Universe::power(uint32_t a, int64_t e) const {
  if (e < 0) {
    a = inv_[a];
    e = -e;
  }
  uint32_t r = 0;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

uint32_t Universe::order_of(uint32_t a) const {
  uint32_t k = 1;
  for (uint32_t x = a; x != 0; x = mul(x, a)) ++k;
  return k;
}

// ---------------------------------------------------------------- Group

Group Group::whole(UniversePtr U) {
  Group G;
  size_t N = U->size(), ng = U->num_gens();
  G.U_ = U;
  G.elts_.resize(N);
  std::iota(G.elts_.begin(), G.elts_.end(), 0u);
  G.local_.resize(N);
  std::iota(G.local_.begin(), G.local_.end(), 0);
  for (size_t g = 0; g < ng; ++g) G.gens_.push_back(U->gen(g));
  G.right_.resize(N * ng);
  G.parent_.resize(N);
  G.pgen_.resize(N);
  G.inv_.resize(N);
  for (uint32_t i = 0; i < N; ++i) {
    for (size_t g = 0; g < ng; ++g) G.right_[i * ng + g] = U->right_gen(i, g);
    G.parent_[i] = U->parent(i);
    G.pgen_[i] = U->parent_gen(i);
    G.inv_[i] = U->inv(i);
  }
  return G;
}

Group Group::generate(UniversePtr U, const std::vector<uint32_t>& gens, size_t bound) {
  Group G;
  G.U_ = std::move(U);
  G.build(gens, bound);
  return G;
}

void Group::build(const std::vector<uint32_t>& gens_u, size_t bound) {
  const Universe& U = *U_;
  elts_.clear();
  local_.assign(U.size(), -1);
  right_.clear();
  parent_.clear();
  pgen_.clear();
  // universe generator shortcut
  std::vector<int> ugen(gens_u.size(), -1);
  for (size_t g = 0; g < gens_u.size(); ++g)
    for (size_t h = 0; h < U.num_gens(); ++h)
      if (U.gen(h) == gens_u[g]) ugen[g] = static_cast<int>(h);
  elts_.push_back(0);
  local_[0] = 0;
  parent_.push_back(0);
  pgen_.push_back(0);
  for (size_t i = 0; i < elts_.size(); ++i) {
    for (size_t g = 0; g < gens_u.size(); ++g) {
      uint32_t y = ugen[g] >= 0 ? U.right_gen(elts_[i], ugen[g]) : U.mul(elts_[i], gens_u[g]);
      if (local_[y] < 0) {
        if (elts_.size() >= bound) throw GroupTooLarge("subgroup too large");
        local_[y] = static_cast<int32_t>(elts_.size());
        elts_.push_back(y);
        parent_.push_back(static_cast<uint32_t>(i));
        pgen_.push_back(static_cast<uint32_t>(g));
      }
      right_.push_back(static_cast<uint32_t>(local_[y]));
    }
  }
  gens_.clear();
  for (uint32_t g : gens_u) gens_.push_back(static_cast<uint32_t>(local_[g]));
  inv_.resize(elts_.size());
  for (size_t i = 0; i < elts_.size(); ++i) inv_[i] = static_cast<uint32_t>(local_[U.inv(elts_[i])]);
}

Group Group::from_elements(UniversePtr U, std::vector<uint32_t> elts) {
  std::sort(elts.begin(), elts.end());
  elts.erase(std::unique(elts.begin(), elts.end()), elts.end());
  std::vector<char> in(U->size(), 0);
  for (uint32_t e : elts) in[e] = 1;
  if (elts.empty() || !in[0]) throw std::invalid_argument("from_elements: identity missing");
  std::vector<uint32_t> gens;
  Group G = generate(U, gens);
  for (uint32_t e : elts) {
    if (G.contains(e)) continue;
    gens.push_back(e);
    G = generate(U, gens);
    for (uint32_t x : G.elements())
      if (!in[x]) throw std::invalid_argument("from_elements: set is not a subgroup");
  }
  if (G.order() != elts.size()) throw std::invalid_argument("from_elements: set is not a subgroup");
  return G;
}

std::vector<uint32_t> Group::gens_universe() const {
  std::vector<uint32_t> r;
  for (uint32_t g : gens_) r.push_back(elts_[g]);
  return r;
}

uint32_t Group::mul(uint32_t a, uint32_t b) const {
  return static_cast<uint32_t>(local_[U_->mul(elts_[a], elts_[b])]);
}

std::vector<uint32_t> Group::left_table(uint32_t z) const {
  size_t N = elts_.size(), ng = gens_.size();
  std::vector<uint32_t> L(N);
  L[0] = z;
  for (size_t u = 1; u < N; ++u) L[u] = right_[size_t(L[parent_[u]]) * ng + pgen_[u]];
  return L;
}

std::vector<uint32_t> Group::right_table(uint32_t z) const {
  // u z = (z^-1 u^-1)^-1
  std::vector<uint32_t> L = left_table(inv_[z]), R(elts_.size());
  for (size_t u = 0; u < elts_.size(); ++u) R[u] = inv_[L[inv_[u]]];
  return R;
}

bool Group::is_subgroup_of(const Group& other) const {
  for (uint32_t e : elts_)
    if (!other.contains(e)) return false;
  return true;
}

bool Group::same_elements(const Group& other) const {
  return order() == other.order() && is_subgroup_of(other);
}

std::vector<uint32_t> Group::sorted_elements() const {
  std::vector<uint32_t> s = elts_;
  std::sort(s.begin(), s.end());
  return s;
}

bool Group::is_abelian() const {
  for (size_t a = 0; a < gens_.size(); ++a)
    for (size_t b = a + 1; b < gens_.size(); ++b)
      if (mul(gens_[a], gens_[b]) != mul(gens_[b], gens_[a])) return false;
  return true;
}

uint64_t Group::fingerprint() const {
  uint64_t h = elts_.size();
  for (uint32_t e : sorted_elements()) h = mix(h ^ e) + 1;
  return h;
}

// ---------------------------------------------------------------- classes

Classes conjugacy_classes(const Group& G) {
  size_t N = G.order(), ng = G.num_gens();
  std::vector<std::vector<uint32_t>> Linv(ng);
  for (size_t g = 0; g < ng; ++g) Linv[g] = G.left_table(G.inv(G.gen(g)));
  Classes c;
  c.class_of.assign(N, kEmpty);
  std::vector<uint32_t> stack;
  for (uint32_t x = 0; x < N; ++x) {
    if (c.class_of[x] != kEmpty) continue;
    uint32_t id = static_cast<uint32_t>(c.reps.size());
    c.reps.push_back(x);
    uint64_t size = 0;
    c.class_of[x] = id;
    stack.push_back(x);
    while (!stack.empty()) {
      uint32_t y = stack.back();
      stack.pop_back();
      ++size;
      for (size_t g = 0; g < ng; ++g) {
        uint32_t z = Linv[g][G.right(y, g)];
        if (c.class_of[z] == kEmpty) {
          c.class_of[z] = id;
          stack.push_back(z);
        }
      }
    }
    c.sizes.push_back(size);
  }
  for (uint32_t r : c.reps) c.inverse.push_back(c.class_of[G.inv(r)]);
  return c;
}

uint32_t element_order(const Group& G, uint32_t local) {
  return G.universe()->order_of(G.elt(local));
}

uint64_t group_exponent(const Group& G, const Classes& cls) {
  uint64_t e = 1;
  for (uint32_t r : cls.reps) e = std::lcm(e, uint64_t(element_order(G, r)));
  return e;
}

// ---------------------------------------------------------------- automorphisms

Automorphism automorphism_from_images(const Group& G, const std::vector<uint32_t>& images) {
  size_t N = G.order(), ng = G.num_gens();
  if (images.size() != ng) throw NotAutomorphism("automorphism: wrong number of images");
  std::vector<std::vector<uint32_t>> R(ng);
  for (size_t g = 0; g < ng; ++g) {
    if (images[g] >= N) throw NotAutomorphism("automorphism: image outside group");
    R[g] = G.right_table(images[g]);
  }
  Automorphism a;
  a.map.assign(N, kEmpty);
  a.map[0] = 0;
  for (size_t u = 1; u < N; ++u) a.map[u] = R[G.parent_gen(u)][a.map[G.parent(u)]];
  // every edge of the Cayley graph must be respected
  for (size_t u = 0; u < N; ++u)
    for (size_t g = 0; g < ng; ++g)
      if (a.map[G.right(u, g)] != R[g][a.map[u]])
        throw NotAutomorphism("automorphism: relation violated");
  std::vector<char> hit(N, 0);
  for (uint32_t x : a.map) {
    if (hit[x]) throw NotAutomorphism("automorphism: not bijective");
    hit[x] = 1;
  }
  return a;
}

Automorphism automorphism_from_matrix_map(const Group& G, const std::function<Mat(const Mat&)>& f) {
  const Universe& U = *G.universe();
  std::vector<uint32_t> imgs;
  for (uint32_t g : G.gens()) {
    auto u = U.find(f(U.matrix(G.elt(g))));
    if (!u || !G.contains(*u)) throw NotAutomorphism("automorphism: matrix image outside group");
    imgs.push_back(*G.local(*u));
  }
  return automorphism_from_images(G, imgs);
}

Automorphism inner_automorphism(const Group& G, uint32_t g_universe) {
  const Universe& U = *G.universe();
  std::vector<uint32_t> imgs;
  for (uint32_t g : G.gens()) {
    uint32_t c = U.conj(G.elt(g), g_universe);
    if (!G.contains(c)) throw NotAutomorphism("inner automorphism: element does not normalize");
    imgs.push_back(*G.local(c));
  }
  return automorphism_from_images(G, imgs);
}

Automorphism compose(const Automorphism& a, const Automorphism& b) {
  Automorphism c;
  c.map.resize(b.map.size());
  for (size_t i = 0; i < b.map.size(); ++i) c.map[i] = a.map[b.map[i]];
  return c;
}

Automorphism identity_automorphism(const Group& G) {
  Automorphism a;
  a.map.resize(G.order());
  std::iota(a.map.begin(), a.map.end(), 0u);
  return a;
}

bool commute(const Automorphism& a, const Automorphism& b) { return compose(a, b).map == compose(b, a).map; }

uint32_t automorphism_order(const Automorphism& a) {
  uint32_t k = 1;
  Automorphism p = a;
  while (true) {
    bool id = true;
    for (size_t i = 0; i < p.map.size() && id; ++i) id = p.map[i] == i;
    if (id) return k;
    p = compose(a, p);
    ++k;
  }
}

std::function<Mat(const Mat&)> frobenius_map(const Field& F, uint32_t j) {
  return [F, j](const Mat& m) { return frobenius(F, m, j); };
}

std::function<Mat(const Mat&)> transpose_inverse_map(const Field& F) {
  return [F](const Mat& m) { return transpose(inverse(F, m)); };
}

std::function<Mat(const Mat&)> conjugation_map(const Field& F, const Mat& c) {
  Mat ci = inverse(F, c);
  return [F, c, ci](const Mat& m) { return mul(F, mul(F, ci, m), c); };
}

TwistedClasses twisted_classes(const Group& H, const Automorphism& sigma) {
  size_t N = H.order(), ng = H.num_gens();
  if (sigma.map.size() != N) throw NotAutomorphism("twisted_classes: automorphism of another group");
  std::vector<std::vector<uint32_t>> L(ng), R(ng);
  for (size_t g = 0; g < ng; ++g) {
    L[g] = H.left_table(H.inv(H.gen(g)));
    R[g] = H.right_table(sigma(H.gen(g)));
  }
  TwistedClasses t;
  t.class_of.assign(N, kEmpty);
  std::vector<uint32_t> stack;
  for (uint32_t x = 0; x < N; ++x) {
    if (t.class_of[x] != kEmpty) continue;
    uint32_t id = static_cast<uint32_t>(t.reps.size());
    t.reps.push_back(x);
    t.class_of[x] = id;
    stack.push_back(x);
    while (!stack.empty()) {
      uint32_t y = stack.back();
      stack.pop_back();
      for (size_t g = 0; g < ng; ++g) {
        uint32_t z = R[g][L[g][y]];
        if (t.class_of[z] == kEmpty) {
          t.class_of[z] = id;
          stack.push_back(z);
        }
      }
    }
  }
  return t;
}

// ---------------------------------------------------------------- subgroups

Group centralizer(const Group& G, uint32_t x) { return centralizer_of_set(G, {x}); }

Group centralizer_of_set(const Group& G, const std::vector<uint32_t>& xs) {
  const Universe& U = *G.universe();
  std::vector<uint32_t> keep;
  for (uint32_t g : G.elements()) {
    bool ok = true;
    for (uint32_t x : xs)
      if (U.mul(g, x) != U.mul(x, g)) {
        ok = false;
        break;
      }
    if (ok) keep.push_back(g);
  }
  return Group::from_elements(G.universe(), keep);
}

Group normalizer(const Group& G, const Group& Usub) {
  if (!Usub.is_subgroup_of(G)) throw std::invalid_argument("normalizer: not a subgroup");
  const Universe& U = *G.universe();
  std::vector<uint32_t> ug = Usub.gens_universe(), keep;
  for (uint32_t g : G.elements()) {
    bool ok = true;
    for (uint32_t u : ug)
      if (!Usub.contains(U.conj(u, g))) {
        ok = false;
        break;
      }
    if (ok) keep.push_back(g);
  }
  return Group::from_elements(G.universe(), keep);
}

Group intersection(const Group& A, const Group& B) {
  std::vector<uint32_t> keep;
  for (uint32_t a : A.elements())
    if (B.contains(a)) keep.push_back(a);
  return Group::from_elements(A.universe(), keep);
}

bool is_normal(const Group& G, const Group& N) {
  if (!N.is_subgroup_of(G)) return false;
  const Universe& U = *G.universe();
  for (uint32_t g : G.gens_universe())
    for (uint32_t n : N.gens_universe())
      if (!N.contains(U.conj(n, g))) return false;
  return true;
}

std::vector<std::vector<uint32_t>> conjugation_orbits(const Group& G, const std::vector<uint32_t>& set) {
  const Universe& U = *G.universe();
  std::vector<uint32_t> gens = G.gens_universe();
  std::vector<std::vector<uint32_t>> orbits;
  std::vector<int32_t> seen(U.size(), -1);
  for (uint32_t s : set) {
    if (seen[s] >= 0) continue;
    std::vector<uint32_t> orb{s};
    seen[s] = static_cast<int32_t>(orbits.size());
    for (size_t i = 0; i < orb.size(); ++i)
      for (uint32_t g : gens) {
        uint32_t c = U.conj(orb[i], g);
        if (seen[c] < 0) {
          seen[c] = static_cast<int32_t>(orbits.size());
          orb.push_back(c);
        }
      }
    orbits.push_back(std::move(orb));
  }
  return orbits;
}

// ---------------------------------------------------------------- standard groups

std::vector<Mat> sl_generators(const Field& F, uint32_t n) {
  std::vector<Mat> gens;
  std::vector<uint32_t> basis;
  uint32_t x = F.k() == 1 ? 1 : F.generator();
  for (uint32_t i = 0, t = 1; i < F.k(); ++i, t = F.mul(t, x)) basis.push_back(t);
  for (uint32_t i = 0; i + 1 < n; ++i)
    for (uint32_t t : basis) {
      Mat u = identity(n), l = identity(n);
      u.at(i, i + 1) = t;
      l.at(i + 1, i) = t;
      gens.push_back(u);
      gens.push_back(l);
    }
  return gens;
}

std::vector<Mat> gl_generators(const Field& F, uint32_t n) {
  std::vector<Mat> gens = sl_generators(F, n);
  if (F.q() > 2) {
    Mat d = identity(n);
    d.at(0, 0) = F.generator();
    gens.push_back(d);
  }
  return gens;
}

std::vector<Mat> permutation_matrices(const Field& F, uint32_t n, const std::vector<std::vector<uint32_t>>& perms) {
  (void)F;
  std::vector<Mat> out;
  for (const auto& p : perms) {
    Mat m(n);
    for (uint32_t i = 0; i < n; ++i) m.at(p[i], i) = 1;
    out.push_back(m);
  }
  return out;
}

}  // namespace mckay
