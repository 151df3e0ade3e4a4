#include "mckay/characters.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <random>
#include <shared_mutex>
#include <tuple>

namespace mckay {

using modp::addm;
using modp::invm;
using modp::mulm;
using modp::subm;

namespace {

uint64_t isqrt_ceil(uint64_t n) {
  uint64_t r = static_cast<uint64_t>(std::sqrt(double(n)));
  while (r * r < n) ++r;
  while (r > 0 && (r - 1) * (r - 1) >= n) --r;
  return r;
}

struct Space {
  modp::Mtx basis;  // RREF rows
  std::vector<size_t> piv;
};

Space make_space(modp::Mtx rows, uint64_t p) {
  Space s;
  s.piv = modp::rref(rows, p);
  s.basis = std::move(rows);
  return s;
}

// Split a subspace invariant under M into eigenspaces. Returns empty if M
// acts as a scalar on it.
std::vector<Space> split(const Space& S, const modp::Mtx& M, uint64_t p) {
  size_t d = S.basis.size(), r = M.size();
  modp::Mtx B(d, modp::Vec(d, 0));  // B = A^T, coordinates of M b_i in columns
  for (size_t i = 0; i < d; ++i) {
    const modp::Vec& b = S.basis[i];
    for (size_t t = 0; t < d; ++t) {
      size_t row = S.piv[t];
      uint64_t s = 0;
      for (size_t k = 0; k < r; ++k)
        if (b[k]) s = addm(s, mulm(M[row][k], b[k], p), p);
      B[t][i] = s;
    }
  }
  std::vector<uint64_t> lam = modp::roots(modp::char_poly(B, p), p);
  if (lam.size() <= 1) return {};
  std::vector<Space> out;
  size_t total = 0;
  for (uint64_t l : lam) {
    modp::Mtx C = B;
    for (size_t i = 0; i < d; ++i) C[i][i] = subm(C[i][i], l, p);
    modp::Mtx ns = modp::nullspace(C, d, p);
    modp::Mtx vecs;
    for (const auto& c : ns) {
      modp::Vec v(r, 0);
      for (size_t i = 0; i < d; ++i)
        if (c[i])
          for (size_t k = 0; k < r; ++k) v[k] = addm(v[k], mulm(c[i], S.basis[i][k], p), p);
      vecs.push_back(std::move(v));
    }
    total += vecs.size();
    out.push_back(make_space(std::move(vecs), p));
  }
  if (total != d) throw std::logic_error("character table: class algebra not split over F_ell");
  return out;
}

}  // namespace

uint64_t CharTable::default_ell(const Group& G) {
  Classes c = conjugacy_classes(G);
  uint64_t e = group_exponent(G, c);
  return modp::prime_1_mod(e, 2 * isqrt_ceil(G.order()));
}

std::shared_ptr<const CharTable> CharTable::compute(const Group& G, uint64_t ell, size_t order_cap) {
  if (G.order() > order_cap)
    throw TableTooLarge("character table: group order " + std::to_string(G.order()) + " above cap");
  auto T = std::make_shared<CharTable>();
  T->G_ = G;
  T->cls_ = conjugacy_classes(G);
  const Classes& C = T->cls_;
  size_t r = C.count();
  if (r > kTableClassCap) throw TableTooLarge("character table: too many classes");
  T->exponent_ = group_exponent(G, C);
  uint64_t N = G.order();
  if (ell == 0) ell = modp::prime_1_mod(T->exponent_, 2 * isqrt_ceil(N));
  if ((ell - 1) % T->exponent_ != 0 || ell <= 2 * isqrt_ceil(N) || !is_prime(ell))
    throw std::invalid_argument("character table: ell not admissible for this group");
  T->ell_ = ell;
  const uint64_t p = ell;

  // class structure constants a[j][i][k] = #{(x,y) in C_j x C_i : xy = z_k}
  std::vector<uint32_t> a(r * r * r, 0);
  for (size_t k = 0; k < r; ++k) {
    std::vector<uint32_t> R = G.right_table(C.reps[k]);  // u -> u z
    for (uint32_t x = 0; x < N; ++x) {
      uint32_t y = R[G.inv(x)];  // x^-1 z
      ++a[(size_t(C.class_of[x]) * r + C.class_of[y]) * r + k];
    }
  }
  auto Mj = [&](size_t j) {
    modp::Mtx M(r, modp::Vec(r));
    for (size_t i = 0; i < r; ++i)
      for (size_t k = 0; k < r; ++k) M[i][k] = a[(j * r + i) * r + k] % p;
    return M;
  };

  modp::Mtx id(r, modp::Vec(r, 0));
  for (size_t i = 0; i < r; ++i) id[i][i] = 1;
  std::vector<Space> work{make_space(id, p)}, done;
  std::mt19937_64 rng(0x5eed + r);
  auto refine = [&](const modp::Mtx& M) {
    std::vector<Space> next;
    for (auto& S : work) {
      if (S.basis.size() == 1) {
        done.push_back(std::move(S));
        continue;
      }
      auto parts = split(S, M, p);
      if (parts.empty()) next.push_back(std::move(S));
      else
        for (auto& P : parts) (P.basis.size() == 1 ? done : next).push_back(std::move(P));
    }
    work = std::move(next);
  };
  for (int round = 0; round < 2 && !work.empty(); ++round) {
    modp::Mtx M(r, modp::Vec(r, 0));
    for (size_t j = 1; j < r; ++j) {
      uint64_t c = rng() % p;
      for (size_t i = 0; i < r; ++i)
        for (size_t k = 0; k < r; ++k) {
          uint64_t v = a[(j * r + i) * r + k];
          if (v) M[i][k] = addm(M[i][k], mulm(c, v % p, p), p);
        }
    }
    refine(M);
  }
  for (size_t j = 1; j < r && !work.empty(); ++j) refine(Mj(j));
  if (!work.empty()) throw std::logic_error("character table: eigenspaces did not split");

  for (auto& S : done) {
    modp::Vec w = S.basis[0];
    if (w[0] == 0) throw std::logic_error("character table: central character vanishes at 1");
    uint64_t s0 = invm(w[0], p);
    for (auto& x : w) x = mulm(x, s0, p);
    uint64_t s = 0;
    for (size_t i = 0; i < r; ++i)
      s = addm(s, mulm(mulm(w[i], w[C.inverse[i]], p), invm(C.sizes[i] % p, p), p), p);
    uint64_t d2 = mulm(N % p, invm(s, p), p);
    uint64_t deg = 0;
    for (uint64_t d = 1; d * d <= N; ++d)
      if ((d * d) % p == d2) {
        deg = d;
        break;
      }
    if (deg == 0) throw std::logic_error("character table: degree recovery failed");
    modp::Vec chi(r);
    for (size_t i = 0; i < r; ++i) chi[i] = mulm(mulm(deg, w[i], p), invm(C.sizes[i] % p, p), p);
    T->rows_.push_back(std::move(chi));
    T->degrees_.push_back(deg);
  }
  std::vector<size_t> ord(T->rows_.size());
  for (size_t i = 0; i < ord.size(); ++i) ord[i] = i;
  std::sort(ord.begin(), ord.end(), [&](size_t x, size_t y) {
    return std::tie(T->degrees_[x], T->rows_[x]) < std::tie(T->degrees_[y], T->rows_[y]);
  });
  std::vector<modp::Vec> rows;
  std::vector<uint64_t> degs;
  for (size_t i : ord) {
    rows.push_back(T->rows_[i]);
    degs.push_back(T->degrees_[i]);
  }
  T->rows_ = std::move(rows);
  T->degrees_ = std::move(degs);
  if (!T->verify()) throw std::logic_error("character table: orthogonality check failed");
  return T;
}

uint64_t CharTable::inner(const modp::Vec& a, const modp::Vec& b) const {
  const uint64_t p = ell_;
  uint64_t s = 0;
  for (size_t k = 0; k < cls_.count(); ++k)
    s = addm(s, mulm(cls_.sizes[k] % p, mulm(a[k], b[cls_.inverse[k]], p), p), p);
  return mulm(s, invm(G_.order() % p, p), p);
}

std::optional<size_t> CharTable::find_row(const modp::Vec& v) const {
  for (size_t i = 0; i < rows_.size(); ++i)
    if (rows_[i] == v) return i;
  return std::nullopt;
}

bool CharTable::verify() const {
  size_t r = cls_.count();
  if (rows_.size() != r) return false;
  uint64_t sum = 0;
  for (uint64_t d : degrees_) {
    if (G_.order() % d) return false;
    sum += d * d;
  }
  if (sum != G_.order()) return false;
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < r; ++j)
      if (inner(rows_[i], rows_[j]) != (i == j ? 1u : 0u)) return false;
  // column orthogonality: sum_chi chi(g_k) chi(g_m^-1) = |C_G(g_k)| delta
  const uint64_t p = ell_;
  for (size_t k = 0; k < r; ++k)
    for (size_t m = 0; m < r; ++m) {
      uint64_t s = 0;
      for (size_t i = 0; i < r; ++i) s = addm(s, mulm(rows_[i][k], rows_[i][cls_.inverse[m]], p), p);
      uint64_t want = k == m ? (G_.order() / cls_.sizes[k]) % p : 0;
      if (s != want) return false;
    }
  for (size_t k = 0; k < r; ++k)
    if (rows_[0][k] != 1) return false;
  return true;
}

std::vector<uint32_t> CharTable::class_perm(const Automorphism& sigma) const {
  std::vector<uint32_t> cp(cls_.count());
  for (size_t k = 0; k < cls_.count(); ++k) cp[k] = cls_.class_of[sigma(cls_.reps[k])];
  return cp;
}

std::vector<uint32_t> CharTable::irr_perm(const std::vector<uint32_t>& cp) const {
  std::vector<uint32_t> ip(rows_.size());
  modp::Vec v(cls_.count());
  for (size_t i = 0; i < rows_.size(); ++i) {
    for (size_t k = 0; k < v.size(); ++k) v[k] = rows_[i][cp[k]];
    auto f = find_row(v);
    if (!f) throw std::logic_error("irr_perm: map does not permute characters");
    ip[i] = static_cast<uint32_t>(*f);
  }
  return ip;
}

std::vector<uint32_t> CharTable::conjugation_class_perm(uint32_t g) const {
  const Universe& U = *G_.universe();
  uint32_t gi = U.inv(g);
  std::vector<uint32_t> cp(cls_.count());
  for (size_t k = 0; k < cls_.count(); ++k) {
    uint32_t y = U.conj(G_.elt(cls_.reps[k]), gi);  // g y g^-1
    auto l = G_.local(y);
    if (!l) throw std::invalid_argument("conjugation_class_perm: element does not normalize");
    cp[k] = cls_.class_of[*l];
  }
  return cp;
}

// ---------------------------------------------------------------- cache

namespace {
using CacheKey = std::tuple<const Universe*, uint64_t, size_t, uint64_t, size_t>;
std::shared_mutex cache_mutex;
std::map<CacheKey, TablePtr> cache;
}  // namespace

TablePtr cached_table(const Group& G, uint64_t ell, size_t order_cap) {
  if (ell == 0) ell = CharTable::default_ell(G);
  CacheKey key{G.universe().get(), G.fingerprint(), G.order(), ell, G.num_gens()};
  {
    std::shared_lock lock(cache_mutex);
    auto it = cache.find(key);
    if (it != cache.end() && it->second->group().same_elements(G) &&
        it->second->group().gens_universe() == G.gens_universe())
      return it->second;
  }
  TablePtr t = CharTable::compute(G, ell, order_cap);
  std::unique_lock lock(cache_mutex);
  cache.emplace(key, t);
  return t;
}

void clear_table_cache() {
  std::unique_lock lock(cache_mutex);
  cache.clear();
}

// ---------------------------------------------------------------- Clifford

std::vector<uint32_t> class_fusion(const CharTable& Y, const CharTable& X) {
  std::vector<uint32_t> f(Y.classes().count());
  for (size_t k = 0; k < f.size(); ++k) {
    auto l = X.group().local(Y.group().elt(Y.classes().reps[k]));
    if (!l) throw std::invalid_argument("class_fusion: not a subgroup");
    f[k] = X.classes().class_of[*l];
  }
  return f;
}

modp::Vec restrict_row(const CharTable& X, size_t chi, const CharTable& Y, const std::vector<uint32_t>& fusion) {
  modp::Vec v(Y.classes().count());
  for (size_t k = 0; k < v.size(); ++k) v[k] = X.row(chi)[fusion[k]];
  return v;
}

Group inertia_group(const Group& X, const CharTable& Y, size_t theta) {
  size_t ng = X.num_gens();
  std::vector<std::vector<uint32_t>> perm(ng);
  for (size_t g = 0; g < ng; ++g) perm[g] = Y.conjugation_irr_perm(X.elt(X.gen(g)));
  std::vector<uint32_t> img(X.order());
  img[0] = static_cast<uint32_t>(theta);
  std::vector<uint32_t> keep{X.elt(0)};
  for (uint32_t u = 1; u < X.order(); ++u) {
    img[u] = perm[X.parent_gen(u)][img[X.parent(u)]];
    if (img[u] == theta) keep.push_back(X.elt(u));
  }
  return Group::from_elements(X.universe(), keep);
}

std::optional<size_t> find_extension(const CharTable& Xt, const CharTable& Y, size_t theta) {
  if (Xt.ell() != Y.ell()) throw std::invalid_argument("find_extension: tables use different primes");
  auto fus = class_fusion(Y, Xt);
  for (size_t i = 0; i < Xt.size(); ++i) {
    if (Xt.degree(i) != Y.degree(theta)) continue;
    if (Y.inner(restrict_row(Xt, i, Y, fus), Y.row(theta)) == 1) return i;
  }
  return std::nullopt;
}

ExtensionResult extension_to_inertia(const Group& X, const CharTable& Y, size_t theta) {
  ExtensionResult r;
  Group Xt = inertia_group(X, Y, theta);
  r.inertia_order = Xt.order();
  TablePtr T = cached_table(Xt, Y.ell());
  r.witness = find_extension(*T, Y, theta);
  r.extends = r.witness.has_value();
  return r;
}

MaxExtResult maximal_extendibility(const Group& X, const Group& Y, uint64_t ell) {
  if (!is_normal(X, Y)) throw std::invalid_argument("maximal_extendibility: subgroup not normal");
  if (ell == 0) ell = CharTable::default_ell(X);
  TablePtr TY = cached_table(Y, ell);
  MaxExtResult res;
  for (size_t t = 0; t < TY->size(); ++t) {
    res.per_char.push_back(extension_to_inertia(X, *TY, t));
    res.all_extend = res.all_extend && res.per_char.back().extends;
  }
  return res;
}

size_t fixed_irr_count(const CharTable& T, const std::vector<Automorphism>& autos) {
  std::vector<char> fixed(T.size(), 1);
  for (const auto& s : autos) {
    auto cp = T.class_perm(s);
    std::vector<char> hit(cp.size(), 0);
    for (size_t k = 0; k < cp.size(); ++k) {
      if (hit[cp[k]] || T.classes().sizes[cp[k]] != T.classes().sizes[k])
        throw std::invalid_argument("fixed_irr_count: map does not permute classes");
      hit[cp[k]] = 1;
    }
    auto ip = T.irr_perm(cp);
    for (size_t i = 0; i < ip.size(); ++i)
      if (ip[i] != i) fixed[i] = 0;
  }
  return static_cast<size_t>(std::count(fixed.begin(), fixed.end(), 1));
}

size_t fixed_irr_count_conj(const CharTable& T, const std::vector<uint32_t>& gs) {
  std::vector<char> fixed(T.size(), 1);
  for (uint32_t g : gs) {
    auto ip = T.conjugation_irr_perm(g);
    for (size_t i = 0; i < ip.size(); ++i)
      if (ip[i] != i) fixed[i] = 0;
  }
  return static_cast<size_t>(std::count(fixed.begin(), fixed.end(), 1));
}

CosetCounts coset_basis_counts(const Group& X, const Group& Y, uint32_t x) {
  if (!is_normal(X, Y)) throw std::invalid_argument("coset_basis_counts: Y not normal in X");
  std::vector<uint32_t> gens = Y.gens_universe();
  gens.push_back(x);
  if (Group::generate(X.universe(), gens).order() != X.order())
    throw std::invalid_argument("coset_basis_counts: X/Y not generated by xY");
  const Universe& U = *X.universe();
  std::vector<uint32_t> coset;
  for (uint32_t y : Y.elements()) coset.push_back(U.mul(x, y));
  CosetCounts c;
  c.x_classes = conjugation_orbits(X, coset).size();
  c.y_classes = conjugation_orbits(Y, coset).size();
  TablePtr T = cached_table(Y, CharTable::default_ell(X));
  c.invariant = fixed_irr_count_conj(*T, X.gens_universe());
  return c;
}

}  // namespace mckay
