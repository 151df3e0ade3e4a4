#include "mckay/wreath.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "mckay/modp.hpp"

namespace mckay {

namespace {

uint64_t factorial(uint64_t n) { return n <= 1 ? 1 : n * factorial(n - 1); }

std::vector<uint32_t> divisors(uint32_t m) {
  std::vector<uint32_t> d;
  for (uint32_t i = 1; i <= m; ++i)
    if (m % i == 0) d.push_back(i);
  return d;
}

}  // namespace

// ---------------------------------------------------------------- C_m wr S_n

WreathModel::Decoded WreathModel::decode(uint32_t u) const {
  Mat x = U->matrix(u);
  Decoded d;
  d.exps.assign(n, 0);
  d.perm.assign(n, n);
  for (uint32_t c = 0; c < n; ++c)
    for (uint32_t r = 0; r < n; ++r) {
      uint32_t v = x.at(r, c);
      if (!v) continue;
      d.perm[c] = r;
      uint32_t z = 1, k = 0;
      while (z != v) {
        z = F.mul(z, zeta);
        if (++k > m) throw std::logic_error("wreath decode: entry is not a power of zeta");
      }
      d.exps[c] = k;
    }
  return d;
}

uint32_t WreathModel::encode(const std::vector<uint32_t>& exps, const std::vector<uint32_t>& perm) const {
  Mat x(n);
  for (uint32_t c = 0; c < n; ++c) x.at(perm[c], c) = F.pow(zeta, exps[c] % m);
  auto u = U->find(x);
  if (!u) throw std::invalid_argument("wreath encode: not in the group");
  return *u;
}

WreathModel wreath_model(uint32_t m, uint32_t n) {
  if (m < 1 || n < 1) throw std::invalid_argument("wreath_model: m, n >= 1");
  WreathModel M;
  M.m = m;
  M.n = n;
  M.F = Field::make(static_cast<uint32_t>(modp::prime_1_mod(m, 2)));
  M.zeta = M.F.root_of_unity(m);
  std::vector<Mat> gens;
  Mat z = identity(n);
  z.at(0, 0) = M.zeta;
  gens.push_back(z);
  std::vector<std::vector<uint32_t>> perms;
  if (n > 1) {
    std::vector<uint32_t> t(n), c(n);
    std::iota(t.begin(), t.end(), 0);
    std::swap(t[0], t[1]);
    for (uint32_t i = 0; i < n; ++i) c[i] = (i + 1) % n;
    perms = {t, c};
  }
  for (const auto& p : permutation_matrices(M.F, n, perms)) gens.push_back(p);
  M.U = Universe::closure(M.F, gens);
  M.W = Group::whole(M.U);
  uint64_t base_order = 1;
  for (uint32_t i = 0; i < n; ++i) base_order *= m;
  if (M.W.order() != factorial(n) * base_order)
    throw std::logic_error("wreath_model: wrong order");
  std::vector<uint32_t> bg;
  for (uint32_t i = 0; i < n; ++i) {
    std::vector<uint32_t> e(n, 0), id(n);
    std::iota(id.begin(), id.end(), 0);
    e[i] = 1;
    bg.push_back(M.encode(e, id));
  }
  M.base = Group::generate(M.U, bg);
  return M;
}

Group product_subgroup(const WreathModel& M, const std::vector<uint32_t>& orders) {
  if (orders.size() != M.n) throw std::invalid_argument("product_subgroup: one order per coordinate");
  std::vector<uint32_t> gens, id(M.n);
  std::iota(id.begin(), id.end(), 0);
  for (uint32_t i = 0; i < M.n; ++i) {
    if (M.m % orders[i]) throw std::invalid_argument("product_subgroup: order must divide m");
    std::vector<uint32_t> e(M.n, 0);
    e[i] = M.m / orders[i];
    gens.push_back(M.encode(e, id));
  }
  return Group::generate(M.U, gens);
}

Group young_subgroup(const WreathModel& M, const std::vector<std::vector<uint32_t>>& blocks) {
  std::vector<uint32_t> gens, zero(M.n, 0);
  for (const auto& b : blocks)
    for (size_t i = 0; i + 1 < b.size(); ++i) {
      std::vector<uint32_t> p(M.n);
      std::iota(p.begin(), p.end(), 0);
      std::swap(p[b[i]], p[b[i + 1]]);
      gens.push_back(M.encode(zero, p));
    }
  return Group::generate(M.U, gens);
}

std::vector<std::vector<std::vector<uint32_t>>> set_partitions(uint32_t n) {
  std::vector<std::vector<std::vector<uint32_t>>> out;
  std::vector<std::vector<uint32_t>> cur;
  std::function<void(uint32_t)> rec = [&](uint32_t i) {
    if (i == n) {
      out.push_back(cur);
      return;
    }
    for (size_t b = 0; b < cur.size(); ++b) {
      cur[b].push_back(i);
      rec(i + 1);
      cur[b].pop_back();
    }
    cur.push_back({i});
    rec(i + 1);
    cur.pop_back();
  };
  rec(0);
  return out;
}

WreathCheck wreath_extension_check(const WreathModel& M, const Group& X0, const Group& K) {
  WreathCheck r;
  const Universe& U = *M.U;
  if (!X0.is_subgroup_of(M.base)) {
    r.outcome = WreathOutcome::hypothesis_not_met;
    r.reason = "X0 not in the base group";
    return r;
  }
  // product of projections: |X0| = prod |pi_i(X0)|
  uint64_t prod = 1;
  for (uint32_t i = 0; i < M.n; ++i) {
    std::set<uint32_t> proj;
    for (uint32_t x : X0.elements()) proj.insert(M.decode(x).exps[i]);
    prod *= proj.size();
  }
  if (prod != X0.order()) {
    r.outcome = WreathOutcome::hypothesis_not_met;
    r.reason = "X0 is not the product of its projections";
    return r;
  }
  // Young: permutation matrices only, order = prod of orbit factorials
  std::vector<uint32_t> parent(M.n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<uint32_t(uint32_t)> root = [&](uint32_t i) { return parent[i] == i ? i : parent[i] = root(parent[i]); };
  for (uint32_t k : K.elements()) {
    auto d = M.decode(k);
    for (uint32_t i = 0; i < M.n; ++i) {
      if (d.exps[i]) {
        r.outcome = WreathOutcome::hypothesis_not_met;
        r.reason = "K is not a permutation group";
        return r;
      }
      parent[root(i)] = root(d.perm[i]);
    }
  }
  std::map<uint32_t, uint64_t> orbit;
  for (uint32_t i = 0; i < M.n; ++i) ++orbit[root(i)];
  uint64_t young = 1;
  for (auto [_, s] : orbit) young *= factorial(s);
  if (young != K.order()) {
    r.outcome = WreathOutcome::hypothesis_not_met;
    r.reason = "K is not a Young subgroup";
    return r;
  }
  for (uint32_t k : K.gens_universe())
    for (uint32_t x : X0.gens_universe())
      if (!X0.contains(U.conj(x, k))) {
        r.outcome = WreathOutcome::hypothesis_not_met;
        r.reason = "K does not normalize X0";
        return r;
      }
  std::vector<uint32_t> gens = X0.gens_universe();
  for (uint32_t k : K.gens_universe()) gens.push_back(k);
  Group X = Group::generate(M.U, gens);
  Group N = normalizer(M.W, X);
  MaxExtResult me = maximal_extendibility(N, X);
  r.x_order = X.order();
  r.normalizer_order = N.order();
  r.characters = me.per_char.size();
  r.outcome = me.all_extend ? WreathOutcome::holds : WreathOutcome::fails;
  if (!me.all_extend) r.reason = "a character of X does not extend to its inertia group";
  return r;
}

WreathGridResult wreath_grid(uint32_t m, uint32_t n) {
  WreathModel M = wreath_model(m, n);
  WreathGridResult res;
  auto divs = divisors(m);
  auto parts = set_partitions(n);
  std::vector<uint32_t> idx(n, 0);
  while (true) {
    std::vector<uint32_t> orders(n);
    for (uint32_t i = 0; i < n; ++i) orders[i] = divs[idx[i]];
    Group X0 = product_subgroup(M, orders);
    for (const auto& blocks : parts) {
      bool constant = true;
      for (const auto& b : blocks)
        for (uint32_t i : b) constant = constant && orders[i] == orders[b[0]];
      if (!constant) continue;  // K would not normalize X0
      ++res.cases;
      auto c = wreath_extension_check(M, X0, young_subgroup(M, blocks));
      if (c.outcome == WreathOutcome::holds) {
        ++res.holds;
      } else if (c.outcome == WreathOutcome::fails) {
        ++res.fails;
        std::string s = "orders";
        for (auto o : orders) s += " " + std::to_string(o);
        res.failures.push_back(s + " blocks " + std::to_string(blocks.size()));
      } else {
        ++res.skipped;
      }
    }
    uint32_t i = 0;
    while (i < n && ++idx[i] == divs.size()) idx[i++] = 0;
    if (i == n) break;
  }
  return res;
}

// ---------------------------------------------------------------- relative inertia groups

uint64_t XiModel::rep_of(uint64_t x) const {
  x %= modulus;
  for (uint64_t r : reps) {
    uint64_t y = r;
    for (uint32_t k = 0; k < g; ++k) {
      if (y == x) return r;
      y = y * unit % modulus;
    }
  }
  throw std::logic_error("XiModel: no representative");
}

uint64_t XiModel::stabilizer_order(uint64_t x) const {
  uint64_t y = x * unit % modulus;
  uint64_t len = 1;
  while (y != x) {
    y = y * unit % modulus;
    ++len;
  }
  return g / len;
}

std::vector<uint64_t> XiModel::act(uint32_t w, const std::vector<uint64_t>& xi) const {
  auto d = W.decode(w);
  std::vector<uint64_t> out(a);
  for (uint32_t i = 0; i < a; ++i) {
    uint64_t y = xi[i];
    for (uint32_t k = 0; k < d.exps[i]; ++k) y = y * unit % modulus;
    out[d.perm[i]] = y;
  }
  return out;
}

XiModel xi_model(uint32_t d0, uint32_t a, uint64_t q) {
  XiModel X;
  X.g = 2 * d0;
  X.a = a;
  uint64_t t = 1;
  for (uint32_t i = 0; i < d0; ++i) t *= q;
  X.modulus = 2 * (t + 1);
  X.unit = q % X.modulus;
  uint64_t y = X.unit;
  uint32_t ord = 1;
  while (y != 1) {
    y = y * X.unit % X.modulus;
    ++ord;
  }
  if (ord != X.g) throw std::invalid_argument("xi_model: q has the wrong order modulo M");
  X.W = wreath_model(X.g, a);
  std::vector<bool> seen(X.modulus, false);
  auto mark = [&](uint64_t x) {
    for (uint32_t k = 0; k < X.g; ++k) {
      seen[x] = true;
      x = x * X.unit % X.modulus;
    }
  };
  uint64_t half = X.modulus / 2;
  for (uint64_t x = 0; x < X.modulus; ++x) {
    if (seen[x]) continue;
    X.reps.push_back(x);
    mark(x);
    uint64_t p = (x + half) % X.modulus;
    if (!seen[p]) {
      X.reps.push_back(p);
      mark(p);
    }
  }
  return X;
}

std::vector<uint64_t> xi_labels(const XiModel& X, size_t max_labels) {
  std::vector<uint64_t> out;
  uint64_t half = X.modulus / 2;
  std::set<uint64_t> stabs;
  for (uint64_t r : X.reps) {
    if (out.size() >= max_labels) break;
    if (std::find(out.begin(), out.end(), r) != out.end()) continue;
    uint64_t s = X.stabilizer_order(r);
    uint64_t p = (r + half) % X.modulus;
    bool paired = std::find(X.reps.begin(), X.reps.end(), p) != X.reps.end();
    // one orbit per (stabilizer, paired) type
    uint64_t key = s * 2 + paired;
    if (!stabs.insert(key).second) continue;
    out.push_back(r);
    if (paired && out.size() < max_labels) out.push_back(p);
  }
  return out;
}

XiCheck wreath_relative_weyl_check(const XiModel& X, const std::vector<uint64_t>& pattern) {
  if (pattern.size() != X.a) throw std::invalid_argument("xi check: pattern length must be a");
  for (uint64_t z : pattern)
    if (std::find(X.reps.begin(), X.reps.end(), z) == X.reps.end())
      throw std::invalid_argument("xi check: labels must be orbit representatives");
  XiCheck r;
  const Universe& U = *X.W.U;
  uint64_t half = X.modulus / 2;
  std::vector<uint64_t> shifted(pattern);
  for (auto& z : shifted) z = (z + half) % X.modulus;
  std::vector<uint32_t> hat, full;
  for (uint32_t w : X.W.W.elements()) {
    auto img = X.act(w, pattern);
    if (img == pattern) hat.push_back(w);
    if (img == pattern || img == shifted) full.push_back(w);
  }
  Group Wh = Group::from_elements(X.W.U, hat), Wx = Group::from_elements(X.W.U, full);
  r.w_xihat = Wh.order();
  r.w_xi = Wx.order();
  r.index = Wx.order() / Wh.order();

  std::map<uint64_t, uint64_t> I;
  for (uint64_t z : pattern) ++I[z];
  uint64_t predicted = 1;
  for (auto [z, c] : I) {
    for (uint64_t k = 0; k < c; ++k) predicted *= X.stabilizer_order(z);
    predicted *= factorial(c);
  }
  r.shape = predicted == Wh.order();

  bool swap_possible = true;
  for (auto [z, c] : I) {
    uint64_t p = (z + half) % X.modulus;
    if (std::find(X.reps.begin(), X.reps.end(), p) == X.reps.end()) continue;  // nu-stable orbit
    auto it = I.find(p);
    if (it == I.end() || it->second != c) swap_possible = false;
  }
  r.index_rule = (r.index == 1 || r.index == 2) && (r.index == 2) == swap_possible;

  Group Nh = normalizer(X.W.W, Wh);
  r.extendibility = maximal_extendibility(Nh, Wh).all_extend;

  Group K = intersection(normalizer(X.W.W, Wx), Nh);
  uint64_t ell = CharTable::default_ell(Wx);
  auto Th = cached_table(Wh, ell), Tx = cached_table(Wx, ell);
  auto fusion = class_fusion(*Th, *Tx);
  r.invariance = true;
  for (size_t e0 = 0; e0 < Th->size() && r.invariance; ++e0) {
    Group Ke = inertia_group(K, *Th, e0);
    std::vector<std::vector<uint32_t>> perms;
    for (uint32_t k : Ke.gens_universe()) perms.push_back(Tx->conjugation_irr_perm(k));
    for (size_t e = 0; e < Tx->size(); ++e) {
      if (Th->inner(restrict_row(*Tx, e, *Th, fusion), Th->row(e0)) == 0) continue;
      for (const auto& p : perms)
        if (p[e] != e) r.invariance = false;
    }
  }
  (void)U;
  return r;
}

}  // namespace mckay
