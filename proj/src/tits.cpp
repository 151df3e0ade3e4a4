#include "mckay/tits.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace mckay {

// ---------------------------------------------------------------- representation

size_t ChevRep::root_index(const IVec& a) const {
  auto it = std::find(datum.roots.begin(), datum.roots.end(), a);
  if (it == datum.roots.end()) throw std::invalid_argument("ChevRep: not a root");
  return static_cast<size_t>(it - datum.roots.begin());
}

Mat ChevRep::x(size_t r, uint32_t t) const {
  Mat m = identity(dim);
  const IMat& e = E[r];
  for (uint32_t i = 0; i < dim; ++i)
    for (uint32_t j = 0; j < dim; ++j)
      if (e[i][j]) m.at(i, j) = F.add(m.at(i, j), F.mul(t, F.from_int(e[i][j])));
  return m;
}

Mat ChevRep::n(size_t r, uint32_t t) const {
  IVec neg = datum.roots[r];
  for (auto& c : neg) c = -c;
  size_t s = root_index(neg);
  Mat xa = x(r, t);
  return mul(F, xa, mul(F, x(s, F.neg(F.inv(t))), xa));
}

Mat ChevRep::h(size_t r, uint32_t t) const { return mul(F, n(r, t), inverse(F, n(r, 1))); }

int64_t ChevRep::pairing(size_t b, size_t r) const {
  const IVec& a = datum.roots[r];
  int64_t num = datum.inner(weights[b], a), den = datum.inner(a, a);
  // weights are doubled: <mu, a^vee> = 2 (mu, a)/(a, a) = (2mu, a)/(a, a)
  if (num % den) throw std::logic_error("ChevRep: non-integral pairing");
  return num / den;
}

namespace {

IMat zero(uint32_t n) { return IMat(n, IVec(n, 0)); }

IMat transpose_i(const IMat& a) {
  IMat t = zero(static_cast<uint32_t>(a.size()));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a.size(); ++j) t[j][i] = a[i][j];
  return t;
}

// Jordan-Wigner creation operator for mode i (0-based) on 2^l states
IMat creation(uint32_t l, uint32_t i) {
  uint32_t n = 1u << l;
  IMat m = zero(n);
  for (uint32_t b = 0; b < n; ++b) {
    if (b >> i & 1) continue;
    int sign = std::popcount(b & ((1u << i) - 1)) % 2 ? -1 : 1;
    m[b | 1u << i][b] = sign;
  }
  return m;
}

IMat parity(uint32_t l) {
  uint32_t n = 1u << l;
  IMat m = zero(n);
  for (uint32_t b = 0; b < n; ++b) m[b][b] = std::popcount(b) % 2 ? -1 : 1;
  return m;
}

Mat pow_mat(const Field& F, const Mat& a, int64_t e) { return power(F, a, e); }

}  // namespace

ChevRep build_chevrep(char type, uint32_t l, uint32_t p, uint32_t k) {
  ChevRep R;
  R.F = Field::make(p, k);
  if (type == 'A') {
    if (l != 1) throw std::invalid_argument("build_chevrep: only A1 is supported");
    R.datum = root_datum('A', 1);
    R.dim = 2;
    R.weights = {{1, -1}, {-1, 1}};
    R.E.resize(R.datum.roots.size());
    IMat e = zero(2);
    e[0][1] = 1;
    R.E[R.root_index({1, -1})] = e;
    R.E[R.root_index({-1, 1})] = transpose_i(e);
  } else if (type == 'B') {
    if (l < 1 || l > 4) throw std::invalid_argument("build_chevrep: B_l needs 1 <= l <= 4");
    R.datum = root_datum('B', l);
    R.dim = 1u << l;
    for (uint32_t b = 0; b < R.dim; ++b) {
      IVec w(l);
      for (uint32_t i = 0; i < l; ++i) w[i] = (b >> i & 1) ? 1 : -1;
      R.weights.push_back(w);
    }
    std::vector<IMat> cd, an;
    for (uint32_t i = 0; i < l; ++i) {
      cd.push_back(creation(l, i));
      an.push_back(transpose_i(cd.back()));
    }
    IMat P = parity(l);
    R.E.resize(R.datum.roots.size());
    for (size_t r = 0; r < R.datum.roots.size(); ++r) {
      const IVec& a = R.datum.roots[r];
      std::vector<uint32_t> pos, neg;
      for (uint32_t i = 0; i < l; ++i) {
        if (a[i] == 1) pos.push_back(i);
        if (a[i] == -1) neg.push_back(i);
      }
      IMat e;
      if (pos.size() == 1 && neg.empty()) e = imat_mul(P, cd[pos[0]]);
      else if (neg.size() == 1 && pos.empty()) e = transpose_i(imat_mul(P, cd[neg[0]]));
      else if (pos.size() == 1 && neg.size() == 1) e = imat_mul(cd[pos[0]], an[neg[0]]);
      else if (pos.size() == 2) e = imat_mul(cd[pos[0]], cd[pos[1]]);
      else e = transpose_i(imat_mul(cd[neg[0]], cd[neg[1]]));
      R.E[r] = e;
    }
  } else {
    throw std::invalid_argument("build_chevrep: unsupported type");
  }
  for (const auto& c : steinberg_self_test(R))
    if (!c.ok) throw std::runtime_error("build_chevrep: relation " + c.label + " fails: " + c.detail);
  return R;
}

std::vector<RelationCheck> steinberg_self_test(const ChevRep& R, uint64_t seed) {
  const Field& F = R.F;
  std::mt19937_64 rng(seed);
  auto nonzero = [&] { return static_cast<uint32_t>(1 + rng() % (F.q() - 1)); };
  std::vector<RelationCheck> out;
  RelationCheck tor{"torus", true, ""}, nsq{"n^2=h(-1)", true, ""}, mult{"h multiplicative", true, ""},
      comm{"commutator formula", true, ""}, nil{"(x-1)^2=0", true, ""};
  Mat I = identity(R.dim);
  size_t nr = R.datum.roots.size();
  for (size_t r = 0; r < nr; ++r) {
    if (!imat_mul(R.E[r], R.E[r]).empty()) {
      IMat sq = imat_mul(R.E[r], R.E[r]);
      for (const auto& row : sq)
        for (auto v : row)
          if (v) nil.ok = false;
    }
    Mat n1 = R.n(r, 1), hm1 = R.h(r, F.neg(1));
    if (!(mul(F, n1, n1) == hm1) || !(mul(F, hm1, hm1) == I)) {
      nsq.ok = false;
      nsq.detail = "root " + std::to_string(r);
    }
    for (int s = 0; s < 3; ++s) {
      uint32_t t = nonzero(), u = nonzero();
      Mat ht = R.h(r, t);
      for (uint32_t b = 0; b < R.dim; ++b)
        for (uint32_t c = 0; c < R.dim; ++c) {
          uint32_t want = b == c ? F.pow(t, R.pairing(b, r)) : 0;
          if (ht.at(b, c) != want) tor.ok = false;
        }
      if (!(mul(F, ht, R.h(r, u)) == R.h(r, F.mul(t, u)))) mult.ok = false;
    }
  }
  // [x_a(t), x_b(u)] = x_a(t)^-1 x_b(u)^-1 x_a(t) x_b(u) = prod x_{ia+jb}(C_ij t^i u^j)
  const auto& roots = R.datum.roots;
  for (size_t a = 0; a < nr && comm.ok; ++a)
    for (size_t b = 0; b < nr && comm.ok; ++b) {
      IVec s(roots[a].size());
      bool opposite = true;
      for (size_t i = 0; i < s.size(); ++i) opposite = opposite && roots[a][i] == -roots[b][i];
      if (a == b || opposite) continue;
      struct Term {
        int i, j;
        size_t r;
      };
      std::vector<Term> terms;
      for (int i = 1; i <= 2; ++i)
        for (int j = 1; j <= 2; ++j) {
          if (i + j > 3) continue;
          IVec g(s.size());
          for (size_t k = 0; k < s.size(); ++k) g[k] = i * roots[a][k] + j * roots[b][k];
          if (R.datum.is_root(g)) terms.push_back({i, j, R.root_index(g)});
        }
      std::sort(terms.begin(), terms.end(), [](const Term& x, const Term& y) {
        return x.i + x.j != y.i + y.j ? x.i + x.j < y.i + y.j : x.i < y.i;
      });
      std::vector<std::pair<uint32_t, uint32_t>> samples;
      for (int k = 0; k < 2; ++k) samples.push_back({nonzero(), nonzero()});
      std::vector<Mat> lhs;
      for (auto [t, u] : samples) {
        Mat xa = R.x(a, t), xb = R.x(b, u);
        lhs.push_back(mul(F, mul(F, inverse(F, xa), inverse(F, xb)), mul(F, xa, xb)));
      }
      const std::vector<int> consts{1, -1, 2, -2};
      size_t combos = 1;
      for (size_t k = 0; k < terms.size(); ++k) combos *= consts.size();
      bool found = false;
      for (size_t cmb = 0; cmb < combos && !found; ++cmb) {
        bool ok = true;
        for (size_t sidx = 0; sidx < samples.size() && ok; ++sidx) {
          auto [t, u] = samples[sidx];
          Mat rhs = I;
          size_t code = cmb;
          for (const auto& term : terms) {
            int C = consts[code % consts.size()];
            code /= consts.size();
            uint32_t val = F.mul(F.from_int(C), F.mul(F.pow(t, term.i), F.pow(u, term.j)));
            rhs = mul(F, rhs, R.x(term.r, val));
          }
          ok = rhs == lhs[sidx];
        }
        found = ok;
      }
      if (!found) {
        comm.ok = false;
        comm.detail = "roots " + std::to_string(a) + "," + std::to_string(b);
      }
    }
  out = {nil, tor, nsq, mult, comm};
  return out;
}

// ---------------------------------------------------------------- Tits group

SignedPerm TitsGroup::rho(uint32_t u) const {
  Mat m = U->matrix(u);
  std::vector<uint32_t> pi(m.n, m.n);
  for (uint32_t c = 0; c < m.n; ++c)
    for (uint32_t r = 0; r < m.n; ++r)
      if (m.at(r, c)) {
        if (pi[c] != m.n) throw std::logic_error("rho: not monomial");
        pi[c] = r;
      }
  uint32_t l = rep.datum.rank;
  SignedPerm s;
  if (rep.datum.type == 'A') {
    s.image = {pi[0] == 0 ? 1 : -1};
    return s;
  }
  uint32_t top = (1u << l) - 1;
  for (uint32_t i = 0; i < l; ++i) {
    const IVec& w1 = rep.weights[pi[top]];
    const IVec& w2 = rep.weights[pi[top ^ (1u << i)]];
    int img = 0;
    for (uint32_t j = 0; j < l; ++j) {
      int64_t dlt = (w1[j] - w2[j]) / 2;
      if (dlt) {
        if (img) throw std::logic_error("rho: not a signed permutation");
        img = dlt > 0 ? static_cast<int>(j + 1) : -static_cast<int>(j + 1);
      }
    }
    s.image.push_back(img);
  }
  return s;
}

uint32_t TitsGroup::h_e(uint32_t i, uint32_t t) const {
  IVec e(rep.datum.rank, 0);
  e[i - 1] = 1;
  auto u = U->find(rep.h(rep.root_index(e), t));
  if (!u) throw std::logic_error("h_e: element outside the universe");
  return *u;
}

TitsGroup tits_group(const ChevRep& rep, uint32_t varpi_choice) {
  TitsGroup T;
  T.rep = rep;
  const Field& F = rep.F;
  std::vector<Mat> gens;
  for (size_t r = 0; r < rep.datum.roots.size(); ++r) gens.push_back(rep.n(r, 1));
  if (rep.datum.type == 'B' && (F.q() - 1) % 4 == 0) {
    uint32_t w = F.root_of_unity(4);
    T.varpi = varpi_choice ? F.inv(w) : w;
    for (uint32_t i = 1; i <= rep.datum.rank; ++i) {
      IVec e(rep.datum.rank, 0);
      e[i - 1] = 1;
      gens.push_back(rep.h(rep.root_index(e), T.varpi));
    }
  }
  T.U = Universe::closure(F, gens, 400'000);
  for (size_t r = 0; r < rep.datum.roots.size(); ++r) T.n1.push_back(*T.U->find(gens[r]));
  T.V = Group::generate(T.U, T.n1);
  std::vector<uint32_t> diag;
  for (uint32_t u : T.V.elements())
    if (is_diagonal(T.U->matrix(u))) diag.push_back(u);
  T.H = Group::from_elements(T.U, diag);
  return T;
}

bool in_type_D(const SignedPerm& w) {
  int neg = 0;
  for (int x : w.image) neg += x < 0;
  return neg % 2 == 0;
}

// ---------------------------------------------------------------- section elements

namespace {
uint32_t product(const Universe& U, const std::vector<uint32_t>& xs) {
  uint32_t r = 0;
  for (uint32_t x : xs) r = U.mul(r, x);
  return r;
}

size_t simple_root_index(const ChevRep& rep, uint32_t k) { return rep.root_index(rep.datum.simple.at(k - 1)); }

bool supported_on(const IVec& a, const std::vector<int>& coords) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] && std::find(coords.begin(), coords.end(), static_cast<int>(i + 1)) == coords.end()) return false;
  return true;
}
}  // namespace

SectionElements build_section_elements(const TitsGroup& T, uint32_t d) {
  const ChevRep& rep = T.rep;
  const Universe& U = *T.U;
  if (rep.datum.type != 'B') throw std::invalid_argument("section elements: type B only");
  if (!T.varpi) throw std::invalid_argument("section elements: need 4 | q - 1");
  SectionElements s;
  uint32_t l = rep.datum.rank;
  RegularElementV rv = regular_element_v(l, d);
  s.l = l;
  s.d = d;
  s.d0 = rv.d0;
  s.a = rv.a;
  s.orbits = rv.orbits;
  for (uint32_t k = 1; k <= s.a; ++k)
    if (std::find(s.orbits[k - 1].begin(), s.orbits[k - 1].end(), static_cast<int>(k)) == s.orbits[k - 1].end())
      throw std::logic_error("section elements: orbit numbering");

  std::vector<uint32_t> word;
  for (uint32_t k = 1; k <= l; ++k) word.push_back(T.n1[simple_root_index(rep, k)]);
  s.v0 = product(U, word);
  if (!(T.rho(s.v0) == rv.rho_v0)) throw std::logic_error("section elements: rho(v0) is not the Coxeter cycle");
  s.v = U.power(s.v0, 2 * l / d);

  const Field& F = rep.F;
  s.h.push_back(T.h_e(1, F.neg(1)));
  for (uint32_t k = 1; k <= s.a; ++k) {
    std::vector<uint32_t> f;
    for (int i : s.orbits[k - 1]) f.push_back(T.h_e(static_cast<uint32_t>(i), T.varpi));
    s.h.push_back(product(U, f));
  }

  // c1bar
  int a = static_cast<int>(s.a);
  if (d % 2 == 0) {
    std::vector<int> cyc;
    for (uint32_t i = 0; i < s.d0; ++i) cyc.push_back(a * static_cast<int>(i) + 1);
    for (uint32_t i = 0; i < s.d0; ++i) cyc.push_back(-(a * static_cast<int>(i) + 1));
    s.c1bar = sp_from_cycle(l, cyc);
  } else {
    int dd = static_cast<int>(d);
    std::vector<int> cyc;
    for (int i = 0; i <= dd - 1; i += 2) cyc.push_back(i * a + 1);
    for (int i = 1; i <= dd - 2; i += 2) cyc.push_back(-(i * a + 1));
    std::vector<int> neg;
    for (int x : cyc) neg.push_back(-x);
    SignedPerm c1p = sp_compose(sp_from_cycle(l, cyc), sp_from_cycle(l, neg));
    SignedPerm flips = sp_identity(l);
    for (int i = 0; i < dd; ++i) flips = sp_compose(flips, sp_from_cycle(l, {i * a + 1, -(i * a + 1)}));
    s.c1bar = sp_compose(c1p, flips);
  }

  s.Vd = centralizer(T.V, s.v);
  s.Hd = centralizer(T.H, s.v);

  // c1: rho-preimage of c1bar in V_d supported on O_1
  const auto& O1 = s.orbits[0];
  std::vector<uint32_t> vo1_gens, to1_gens;
  for (size_t r = 0; r < rep.datum.roots.size(); ++r)
    if (supported_on(rep.datum.roots[r], O1)) {
      vo1_gens.push_back(T.n1[r]);
      vo1_gens.push_back(*U.find(rep.n(r, F.neg(1))));
    }
  Group VO1 = Group::generate(T.U, vo1_gens);
  to1_gens = vo1_gens;
  for (int i : O1) to1_gens.push_back(T.h_e(static_cast<uint32_t>(i), T.varpi));
  Group TO1 = Group::generate(T.U, to1_gens);
  std::optional<uint32_t> first, first_vo1;
  for (uint32_t x : T.V.elements()) {
    if (!s.Vd.contains(x) || !TO1.contains(x) || !(T.rho(x) == s.c1bar)) continue;
    ++s.c1_candidates;
    if (!first) first = x;
    if (!first_vo1 && VO1.contains(x)) first_vo1 = x;
  }
  if (!first) throw std::runtime_error("section elements: no preimage of c1bar in V_d");
  s.c1_in_VO1 = first_vo1.has_value();
  s.c.assign(s.a + 1, 0);
  s.c[1] = first_vo1 ? *first_vo1 : *first;

  // p_k from v_{k+1} = n_{alpha_{k+1}}(1), so that rho(p_k) swaps O_k and O_{k+1}
  s.p.assign(s.a, 0);
  for (uint32_t k = 1; k < s.a; ++k) {
    uint32_t vk = T.n1[simple_root_index(rep, k + 1)];
    std::vector<uint32_t> f;
    for (uint32_t i = 0; i < s.d0; ++i) f.push_back(U.conj(vk, U.power(s.v, i)));
    s.p[k] = product(U, f);
  }
  uint32_t g = 0;
  for (uint32_t k = 2; k <= s.a; ++k) {
    g = U.mul(g, s.p[k - 1]);
    s.c[k] = U.conj(s.c[1], g);
  }
  return s;
}

std::vector<RelationCheck> verify_relation_catalog(const TitsGroup& T, const SectionElements& s) {
  const Universe& U = *T.U;
  std::vector<RelationCheck> out;
  auto add = [&](const std::string& label, bool ok, const std::string& detail = "") {
    out.push_back({label, ok, detail});
  };
  auto pw = [&](uint32_t x, int64_t e) { return U.power(x, e); };
  auto cj = [&](uint32_t x, uint32_t g) { return U.conj(x, g); };  // x^g
  auto comm = [&](uint32_t x, uint32_t y) { return U.mul(U.mul(U.inv(x), U.inv(y)), U.mul(x, y)); };
  uint32_t h0 = s.h[0];
  uint32_t a = s.a;

  bool ok = true;
  for (uint32_t k = 1; k <= a; ++k) ok = ok && pw(s.h[k], 2) == pw(h0, s.orbits[k - 1].size());
  add("eq10.1", ok, "h_k^2 = h_0^|O_k|");

  ok = true;
  for (uint32_t k = 1; k <= a; ++k) ok = ok && cj(s.h[k], s.v) == (s.d % 2 ? s.h[k] : U.mul(h0, s.h[k]));
  add("hk^v", ok, s.d % 2 ? "h_k^v = h_k" : "h_k^v = h_0 h_k");

  {
    bool elem = s.Hd.is_abelian() && s.Hd.order() == (size_t(1) << a);
    for (uint32_t x : s.Hd.elements()) elem = elem && U.mul(x, x) == 0;
    std::vector<uint32_t> gens{h0};
    for (uint32_t k = 1; k < a; ++k) gens.push_back(U.mul(s.h[k], s.h[k + 1]));
    bool gen = Group::generate(T.U, gens).same_elements(s.Hd);
    bool out_hk = true;
    for (uint32_t k = 1; k <= a; ++k) out_hk = out_hk && !s.Hd.contains(s.h[k]);
    add("Hd structure", elem && gen && out_hk,
        "|H_d| = " + std::to_string(s.Hd.order()) + ", a = " + std::to_string(a));
  }

  add("c1", T.rho(s.c[1]) == s.c1bar && s.Vd.contains(s.c[1]),
      std::to_string(s.c1_candidates) + " candidates" + (s.c1_in_VO1 ? ", inside V_O1" : ", outside V_O1"));

  ok = true;
  for (uint32_t k = 1; k < a; ++k) {
    ok = ok && s.Vd.contains(s.p[k]);
    SignedPerm w = T.rho(s.p[k]);
    std::set<int> Ok, Ok1, img;
    for (int i : s.orbits[k - 1]) {
      Ok.insert(i);
      img.insert(std::abs(w(i)));
    }
    for (int i : s.orbits[k]) Ok1.insert(i);
    ok = ok && img == Ok1;
  }
  add("pk", ok, "p_k in V_d and rho(p_k) O_k = O_{k+1}");

  ok = true;
  for (uint32_t k = 1; k < a; ++k)
    ok = ok && pw(s.p[k], 2) == U.mul(U.mul(s.h[k], s.h[k + 1]), pw(h0, s.orbits[k - 1].size()));
  add("eq10.pk2", ok, "p_k^2 = h_k h_{k+1} h_0^|O_k|");

  ok = true;
  for (uint32_t i = 0; i <= a; ++i)
    for (uint32_t j = 1; j <= a; ++j) ok = ok && cj(s.h[i], s.c[j]) == (i == j ? U.mul(s.h[i], h0) : s.h[i]);
  add("eq10.3hicj", ok);

  ok = true;
  for (uint32_t i = 0; i <= a; ++i)
    for (uint32_t k = 1; k < a; ++k) {
      uint32_t want = i == k ? s.h[k + 1] : i == k + 1 ? s.h[k] : s.h[i];
      ok = ok && cj(s.h[i], s.p[k]) == want;
    }
  add("eq10.4", ok);

  ok = true;
  for (uint32_t i = 1; i <= a; ++i)
    for (uint32_t j = 1; j <= a; ++j)
      if (i != j) ok = ok && comm(s.c[i], s.c[j]) == h0;
  add("eq10.5", ok, "[c_i, c_j] = h_0, i != j");

  ok = true;
  for (uint32_t i = 1; i < a; ++i)
    for (uint32_t j = i + 1; j < a; ++j) {
      uint32_t pi = s.p[i], pj = s.p[j];
      if (j == i + 1) ok = ok && U.mul(U.mul(pi, pj), pi) == U.mul(U.mul(pj, pi), pj);
      else ok = ok && U.mul(pi, pj) == U.mul(pj, pi);
    }
  add("braid", ok, "braid relations for p_1..p_{a-1}");

  {
    // h_0 is needed when a = 1
    std::vector<uint32_t> gens{h0};
    for (uint32_t i = 1; i <= a; ++i) gens.push_back(s.c[i]);
    for (uint32_t k = 1; k < a; ++k) gens.push_back(s.p[k]);
    add("generation", Group::generate(T.U, gens).same_elements(s.Vd), "<h_0, c_i, p_k> = V_d");
  }

  {
    std::vector<uint32_t> diag;
    for (uint32_t x : s.Vd.elements())
      if (T.H.contains(x)) diag.push_back(x);
    std::sort(diag.begin(), diag.end());
    add("Vd cap T", diag == s.Hd.sorted_elements());
  }

  add("lem106", in_type_D(T.rho(s.v)) == (a % 2 == 0 || s.d % 2 == 1), "v in N_c iff 2|a or d odd");

  if (s.d % 2) {
    ok = true;
    for (uint32_t k = 1; k <= a; ++k) ok = ok && U.mul(s.h[k], s.v) == U.mul(s.v, s.h[k]);
    add("hk in C", ok, "h_k commutes with v for odd d");
  }
  return out;
}

bool check_rhoVd_equals_Wd(const TitsGroup& T, const SectionElements& s) {
  std::set<std::vector<int>> img, wd;
  for (uint32_t x : s.Vd.elements()) img.insert(T.rho(x).image);
  SignedPerm rv = T.rho(s.v);
  uint32_t l = s.l;
  std::vector<int> perm(l);
  for (uint32_t i = 0; i < l; ++i) perm[i] = static_cast<int>(i + 1);
  do {
    for (uint32_t mask = 0; mask < (1u << l); ++mask) {
      SignedPerm w;
      for (uint32_t i = 0; i < l; ++i) w.image.push_back(mask >> i & 1 ? -perm[i] : perm[i]);
      if (sp_compose(w, rv) == sp_compose(rv, w)) wd.insert(w.image);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return img == wd;
}

Prop108Report check_Hd_Vd_extendibility(const TitsGroup& T, const SectionElements& s) {
  Prop108Report r;
  MaxExtResult me = maximal_extendibility(s.Vd, s.Hd);
  r.all_extend = me.all_extend;
  r.characters = me.per_char.size();
  if (s.d % 2) return r;

  const Universe& U = *T.U;
  std::vector<uint32_t> hg = s.Hd.gens_universe();
  hg.push_back(s.h[1]);
  Group Hhat = Group::generate(T.U, hg);
  uint64_t ell = CharTable::default_ell(Hhat);
  auto TH = CharTable::compute(s.Hd, ell), THat = CharTable::compute(Hhat, ell);
  auto fusion = class_fusion(*TH, *THat);
  // stabilizers of every character of Hhat in V_d
  std::vector<std::vector<uint32_t>> stab(THat->size());
  for (uint32_t x : s.Vd.elements()) {
    auto perm = THat->conjugation_irr_perm(x);
    for (size_t i = 0; i < perm.size(); ++i)
      if (perm[i] == i) stab[i].push_back(x);
  }
  uint32_t h0l = *s.Hd.local(s.h[0]);
  std::ostringstream os;
  for (size_t lam = 0; lam < TH->size(); ++lam) {
    Group In = inertia_group(s.Vd, *TH, lam);
    std::vector<uint32_t> inc;
    bool inside_nc = true;
    for (uint32_t x : In.elements()) {
      bool nc = in_type_D(T.rho(x));
      inside_nc = inside_nc && nc;
      if (nc) inc.push_back(x);
    }
    std::sort(inc.begin(), inc.end());
    bool minus = TH->value(lam, h0l) == ell - 1;
    for (size_t lh = 0; lh < THat->size(); ++lh) {
      if (restrict_row(*THat, lh, *TH, fusion) != TH->row(lam)) continue;
      std::vector<uint32_t> st = stab[lh];
      std::sort(st.begin(), st.end());
      if (minus && !inside_nc) {
        ++r.fired_a;
        r.parity_a = r.parity_a && s.a % 2 == 1;
        r.intersection_a = r.intersection_a && st == inc;
      }
      if (!minus && st != In.sorted_elements()) {
        ++r.fired_b;
        r.parity_b = r.parity_b && s.a % 2 == 0;
      }
    }
  }
  (void)U;
  os << "fired (a) " << r.fired_a << ", (b) " << r.fired_b;
  r.detail = os.str();
  return r;
}

}  // namespace mckay
