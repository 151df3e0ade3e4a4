#include "mckay/rootweyl.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

#include "mckay/modp.hpp"

namespace mckay {

using Rational = boost::multiprecision::cpp_rational;

// ---------------------------------------------------------------- datum

int64_t RootDatum::inner(const IVec& a, const IVec& b) const {
  int64_t s = 0;
  for (uint32_t i = 0; i < dim; ++i)
    for (uint32_t j = 0; j < dim; ++j)
      if (gram[i][j]) s += a[i] * gram[i][j] * b[j];
  return s;
}

IVec RootDatum::coroot(const IVec& a) const {
  int64_t n = inner(a, a);
  IVec c(dim);
  for (uint32_t i = 0; i < dim; ++i) {
    if ((2 * a[i]) % n) throw std::logic_error("coroot: not integral in ambient coordinates");
    c[i] = 2 * a[i] / n;
  }
  return c;
}

bool RootDatum::is_root(const IVec& a) const { return std::find(roots.begin(), roots.end(), a) != roots.end(); }

IMat RootDatum::reflection(const IVec& a) const {
  // s(x) = x - 2(a,x)/(a,a) a
  int64_t n = inner(a, a);
  IMat m = imat_identity(dim);
  for (uint32_t j = 0; j < dim; ++j) {
    IVec ej(dim, 0);
    ej[j] = 1;
    int64_t c = 2 * inner(a, ej);
    if (c % n) throw std::logic_error("reflection: not integral in ambient coordinates");
    c /= n;
    for (uint32_t i = 0; i < dim; ++i) m[i][j] -= c * a[i];
  }
  return m;
}

nlohmann::json RootDatum::to_json() const {
  nlohmann::json j;
  j["type"] = std::string(1, type);
  j["rank"] = rank;
  j["roots"] = roots;
  j["simple_roots"] = simple;
  j["cartan"] = cartan;
  return j;
}

IMat imat_identity(size_t n) {
  IMat m(n, IVec(n, 0));
  for (size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IMat imat_mul(const IMat& a, const IMat& b) {
  size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  IMat c(n, IVec(m, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t t = 0; t < k; ++t)
      if (a[i][t])
        for (size_t j = 0; j < m; ++j) c[i][j] += a[i][t] * b[t][j];
  return c;
}

IVec imat_apply(const IMat& a, const IVec& v) {
  IVec r(a.size(), 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < v.size(); ++j) r[i] += a[i][j] * v[j];
  return r;
}

namespace {

void finish_datum(RootDatum& R) {
  uint32_t l = R.rank;
  R.cartan.assign(l, std::vector<int64_t>(l));
  for (uint32_t i = 0; i < l; ++i)
    for (uint32_t j = 0; j < l; ++j)
      R.cartan[i][j] = 2 * R.inner(R.simple[i], R.simple[j]) / R.inner(R.simple[i], R.simple[i]);
  // close the simple roots under simple reflections
  std::vector<IMat> refl;
  for (const auto& s : R.simple) refl.push_back(R.reflection(s));
  std::vector<IVec> roots = R.simple;
  for (size_t i = 0; i < roots.size(); ++i)
    for (const auto& s : refl) {
      IVec r = imat_apply(s, roots[i]);
      if (std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
    }
  std::sort(roots.begin(), roots.end());
  R.roots = std::move(roots);
}

IVec unit(uint32_t n, uint32_t i, int64_t c = 1) {
  IVec v(n, 0);
  v[i] = c;
  return v;
}

}  // namespace

RootDatum root_datum(char type, uint32_t l) {
  RootDatum R;
  R.type = type;
  R.rank = l;
  if (l == 0) throw std::invalid_argument("root_datum: rank 0");
  switch (type) {
    case 'A': {
      R.dim = l + 1;
      R.gram = imat_identity(l + 1);
      for (uint32_t i = 0; i < l; ++i) {
        IVec a(l + 1, 0);
        a[i] = 1;
        a[i + 1] = -1;
        R.simple.push_back(a);
      }
      break;
    }
    case 'B':
    case 'C':
    case 'D': {
      if (type == 'D' && l < 3) throw std::invalid_argument("root_datum: D_l needs l >= 3");
      R.dim = l;
      R.gram = imat_identity(l);
      if (type == 'B') R.simple.push_back(unit(l, 0));
      if (type == 'C') R.simple.push_back(unit(l, 0, 2));
      if (type == 'D') {
        IVec a(l, 0);
        a[0] = a[1] = 1;
        R.simple.push_back(a);
      }
      for (uint32_t k = 1; k < l; ++k) {
        IVec a(l, 0);
        a[k] = 1;
        a[k - 1] = -1;
        R.simple.push_back(a);
      }
      break;
    }
    case 'E': {
      if (l != 6 && l != 7 && l != 8) throw std::invalid_argument("root_datum: E_l needs l in {6,7,8}");
      R.dim = l;
      R.gram.assign(l, std::vector<int64_t>(l, 0));
      for (uint32_t i = 0; i < l; ++i) R.gram[i][i] = 2;
      // Bourbaki: 1-3-4-5-6-7-8 with 2 attached to 4
      std::vector<std::pair<int, int>> edges{{1, 3}, {3, 4}, {4, 5}, {5, 6}, {2, 4}};
      if (l >= 7) edges.push_back({6, 7});
      if (l >= 8) edges.push_back({7, 8});
      for (auto [a, b] : edges) R.gram[a - 1][b - 1] = R.gram[b - 1][a - 1] = -1;
      for (uint32_t i = 0; i < l; ++i) R.simple.push_back(unit(l, i));
      break;
    }
    default:
      throw std::invalid_argument(std::string("root_datum: unsupported type ") + type);
  }
  finish_datum(R);
  return R;
}

size_t expected_root_count(char type, uint32_t l) {
  switch (type) {
    case 'A': return size_t(l) * (l + 1);
    case 'B':
    case 'C': return 2 * size_t(l) * l;
    case 'D': return 2 * size_t(l) * (l - 1);
    case 'E': return l == 6 ? 72 : l == 7 ? 126 : 240;
  }
  throw std::invalid_argument("expected_root_count: unsupported type");
}

IVec solve_integral(const std::vector<IVec>& cols, const IVec& v) {
  size_t n = v.size(), m = cols.size();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(m + 1));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < m; ++j) a[i][j] = cols[j][i];
    a[i][m] = v[i];
  }
  std::vector<size_t> piv;
  size_t r = 0;
  for (size_t c = 0; c < m && r < n; ++c) {
    size_t s = r;
    while (s < n && a[s][c] == 0) ++s;
    if (s == n) continue;
    std::swap(a[s], a[r]);
    for (size_t i = 0; i < n; ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rational f = a[i][c] / a[r][c];
      for (size_t j = c; j <= m; ++j) a[i][j] -= f * a[r][j];
    }
    piv.push_back(c);
    ++r;
  }
  for (size_t i = r; i < n; ++i)
    if (a[i][m] != 0) throw std::invalid_argument("solve_integral: inconsistent system");
  IVec y(m, 0);
  for (size_t i = 0; i < piv.size(); ++i) {
    Rational x = a[i][m] / a[i][piv[i]];
    if (denominator(x) != 1) throw std::invalid_argument("solve_integral: non-integral solution");
    y[piv[i]] = static_cast<int64_t>(numerator(x));
  }
  return y;
}

RootDatum in_root_coordinates(const RootDatum& R) {
  RootDatum S;
  S.type = R.type;
  S.rank = R.rank;
  S.dim = R.rank;
  S.gram.assign(R.rank, std::vector<int64_t>(R.rank));
  for (uint32_t i = 0; i < R.rank; ++i)
    for (uint32_t j = 0; j < R.rank; ++j) S.gram[i][j] = R.inner(R.simple[i], R.simple[j]);
  for (uint32_t i = 0; i < R.rank; ++i) S.simple.push_back(unit(R.rank, i));
  finish_datum(S);
  return S;
}

IMat simple_word_matrix(const RootDatum& R, const std::vector<uint32_t>& word) {
  IMat m = imat_identity(R.dim);
  for (uint32_t s : word) m = imat_mul(m, R.reflection(R.simple.at(s - 1)));
  return m;
}

IntMat coroot_action(const RootDatum& R, const IMat& M) {
  std::vector<IVec> cb;
  for (const auto& s : R.simple) cb.push_back(R.coroot(s));
  IntMat out(R.rank, R.rank);
  for (uint32_t j = 0; j < R.rank; ++j) {
    IVec y = solve_integral(cb, imat_apply(M, cb[j]));
    for (uint32_t i = 0; i < R.rank; ++i) out.at(i, j) = y[i];
  }
  return out;
}

// ---------------------------------------------------------------- Weyl group

Mat WeylGroup::to_mat(const IMat& m) const {
  Mat r(static_cast<uint32_t>(m.size()));
  for (uint32_t i = 0; i < r.n; ++i)
    for (uint32_t j = 0; j < r.n; ++j) r.at(i, j) = field.from_int(m[i][j]);
  return r;
}

IMat WeylGroup::to_imat(uint32_t u) const {
  Mat m = U->matrix(u);
  IMat r(m.n, IVec(m.n));
  int64_t p = field.p();
  for (uint32_t i = 0; i < m.n; ++i)
    for (uint32_t j = 0; j < m.n; ++j) {
      int64_t x = m.at(i, j);
      r[i][j] = x > p / 2 ? x - p : x;
    }
  return r;
}

WeylGroup weyl_group(const RootDatum& R, size_t bound) {
  WeylGroup WG;
  WG.datum = R;
  // e-basis elements are signed permutations; in root coordinates entries are
  // bounded by root coefficients (<= 6)
  WG.field = Field::make(R.gram == imat_identity(R.dim) ? 3 : 17);
  std::vector<Mat> gens;
  for (const auto& s : R.simple) gens.push_back(WG.to_mat(R.reflection(s)));
  WG.U = Universe::closure(WG.field, gens, bound);
  WG.W = Group::whole(WG.U);
  return WG;
}

uint64_t weyl_order_from_degrees(char type, uint32_t rank) {
  uint64_t n = 1;
  for (uint32_t d : reflection_degrees(std::string(1, type) + std::to_string(rank))) n *= d;
  return n;
}

// ---------------------------------------------------------------- signed permutations

SignedPerm sp_identity(uint32_t l) {
  SignedPerm s;
  for (uint32_t i = 1; i <= l; ++i) s.image.push_back(static_cast<int>(i));
  return s;
}

SignedPerm sp_compose(const SignedPerm& a, const SignedPerm& b) {
  SignedPerm c;
  for (size_t i = 1; i <= b.image.size(); ++i) c.image.push_back(a(b(static_cast<int>(i))));
  return c;
}

SignedPerm sp_power(const SignedPerm& a, int64_t e) {
  SignedPerm base = a, r = sp_identity(static_cast<uint32_t>(a.image.size()));
  if (e < 0) {
    SignedPerm inv = a;
    for (size_t i = 1; i <= a.image.size(); ++i) {
      int t = a.image[i - 1];
      inv.image[std::abs(t) - 1] = t > 0 ? static_cast<int>(i) : -static_cast<int>(i);
    }
    base = inv;
    e = -e;
  }
  while (e) {
    if (e & 1) r = sp_compose(r, base);
    base = sp_compose(base, base);
    e >>= 1;
  }
  return r;
}

uint32_t sp_order(const SignedPerm& a) {
  SignedPerm id = sp_identity(static_cast<uint32_t>(a.image.size())), x = a;
  uint32_t k = 1;
  while (!(x == id)) {
    x = sp_compose(a, x);
    ++k;
  }
  return k;
}

IMat sp_matrix(const SignedPerm& a) {
  size_t l = a.image.size();
  IMat m(l, IVec(l, 0));
  for (size_t i = 0; i < l; ++i) {
    int t = a.image[i];
    m[std::abs(t) - 1][i] = t > 0 ? 1 : -1;
  }
  return m;
}

std::optional<SignedPerm> sp_from_matrix(const IMat& m) {
  SignedPerm s;
  size_t l = m.size();
  for (size_t j = 0; j < l; ++j) {
    int found = 0;
    for (size_t i = 0; i < l; ++i) {
      if (m[i][j] == 0) continue;
      if (found || (m[i][j] != 1 && m[i][j] != -1)) return std::nullopt;
      found = m[i][j] > 0 ? static_cast<int>(i + 1) : -static_cast<int>(i + 1);
    }
    if (!found) return std::nullopt;
    s.image.push_back(found);
  }
  return s;
}

SignedPerm sp_from_cycle(uint32_t l, const std::vector<int>& cyc) {
  SignedPerm s = sp_identity(l);
  for (size_t k = 0; k < cyc.size(); ++k) {
    int from = cyc[k], to = cyc[(k + 1) % cyc.size()];
    if (from > 0) s.image[from - 1] = to;
    else s.image[-from - 1] = -to;
  }
  return s;
}

std::string sp_to_string(const SignedPerm& a) {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < a.image.size(); ++i) os << (i ? " " : "") << (i + 1) << "->" << a.image[i];
  os << "]";
  return os.str();
}

RegularElementV regular_element_v(uint32_t l, uint32_t d) {
  if (d == 0 || (2 * l) % d) throw std::invalid_argument("regular_element_v: d must divide 2l");
  RegularElementV r;
  r.l = l;
  r.d = d;
  // s_1 negates 1, s_k swaps k-1 and k
  SignedPerm v0 = sp_identity(l);
  for (uint32_t k = 1; k <= l; ++k) {
    SignedPerm s = sp_identity(l);
    if (k == 1) s.image[0] = -1;
    else std::swap(s.image[k - 2], s.image[k - 1]);
    v0 = sp_compose(v0, s);
  }
  r.rho_v0 = v0;
  uint32_t e = 2 * l / d;
  r.rho_v = sp_power(v0, e);
  for (uint32_t i = 0; i < e; ++i)
    for (uint32_t k = 1; k <= l; ++k) r.word.push_back(k);
  std::vector<char> seen(l + 1, 0);
  for (int i = 1; i <= static_cast<int>(l); ++i) {
    if (seen[i]) continue;
    std::vector<int> orb;
    int x = i;
    while (!seen[x]) {
      seen[x] = 1;
      orb.push_back(x);
      x = std::abs(r.rho_v(x));
    }
    r.orbits.push_back(orb);
  }
  r.d0 = static_cast<uint32_t>(r.orbits[0].size());
  for (const auto& o : r.orbits)
    if (o.size() != r.d0) throw std::logic_error("regular_element_v: unequal orbit lengths");
  r.a = l / r.d0;
  return r;
}

// ---------------------------------------------------------------- regularity

namespace {
uint32_t imat_order(const IMat& m) {
  IMat id = imat_identity(m.size()), x = m;
  uint32_t k = 1;
  while (x != id) {
    x = imat_mul(x, m);
    if (++k > 10000) throw std::logic_error("imat_order: infinite order");
  }
  return k;
}
}  // namespace

RegularityResult zeta_regular_check(const RootDatum& R, const IMat& w, uint32_t d, uint64_t seed, const IMat* phi) {
  if (d == 0) throw std::invalid_argument("zeta_regular_check: d = 0");
  IMat M = phi ? imat_mul(w, *phi) : w;
  uint64_t m = imat_order(M);
  uint64_t e = std::lcm(m, uint64_t(d));
  uint64_t ell = modp::prime_1_mod(e, std::max<uint64_t>(2 * R.roots.size() + 10, 50));
  Field F = Field::make(static_cast<uint32_t>(ell));
  uint64_t zeta = F.root_of_unity(d);
  RegularityResult res;
  res.prime = ell;
  size_t n = R.dim;
  modp::Mtx A(n, modp::Vec(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) A[i][j] = modp::subm(modp::reduce(M[i][j], ell), i == j ? zeta : 0, ell);
  modp::Mtx E = modp::nullspace(A, n, ell);
  res.eigenspace_dim = static_cast<uint32_t>(E.size());
  if (E.empty()) return res;
  // linear forms x -> (alpha, x), restricted to E
  std::vector<modp::Vec> forms;
  for (const auto& a : R.roots) {
    if (a < IVec(n, 0)) continue;  // one of +-alpha
    modp::Vec f(E.size());
    for (size_t b = 0; b < E.size(); ++b) {
      uint64_t s = 0;
      for (size_t i = 0; i < n; ++i) {
        int64_t gi = 0;
        for (size_t j = 0; j < n; ++j) gi += a[j] * R.gram[j][i];
        s = modp::addm(s, modp::mulm(modp::reduce(gi, ell), E[b][i], ell), ell);
      }
      f[b] = s;
    }
    bool zero = std::all_of(f.begin(), f.end(), [](uint64_t x) { return x == 0; });
    if (zero) return res;  // E inside a reflecting hyperplane
    forms.push_back(std::move(f));
  }
  auto good = [&](const modp::Vec& c) {
    for (const auto& f : forms) {
      uint64_t s = 0;
      for (size_t b = 0; b < c.size(); ++b) s = modp::addm(s, modp::mulm(f[b], c[b], ell), ell);
      if (s == 0) return false;
    }
    return true;
  };
  auto emit = [&](const modp::Vec& c) {
    res.regular = true;
    res.witness.assign(n, 0);
    for (size_t b = 0; b < c.size(); ++b)
      for (size_t i = 0; i < n; ++i) res.witness[i] = modp::addm(res.witness[i], modp::mulm(c[b], E[b][i], ell), ell);
  };
  std::mt19937_64 rng(seed);
  modp::Vec c(E.size());
  for (int t = 0; t < 256; ++t) {
    for (auto& x : c) x = rng() % ell;
    if (good(c)) {
      emit(c);
      return res;
    }
  }
  // exhaustive fallback
  double space = std::pow(double(ell), double(E.size()));
  if (space > 5e6) return res;
  std::fill(c.begin(), c.end(), 0);
  while (true) {
    if (good(c)) {
      emit(c);
      return res;
    }
    size_t i = 0;
    while (i < c.size() && ++c[i] == ell) c[i++] = 0;
    if (i == c.size()) break;
  }
  return res;
}

Group relative_weyl_group(const WeylGroup& WG, const IMat& w) {
  auto u = WG.U->find(WG.to_mat(w));
  if (!u) throw std::invalid_argument("relative_weyl_group: element not in W");
  return centralizer(WG.W, *u);
}

IMat graph_automorphism(const RootDatum& R, const std::vector<uint32_t>& perm) {
  // matrix sending alpha_i to alpha_perm(i); requires simple roots to span
  if (R.dim != R.rank) throw std::invalid_argument("graph_automorphism: use root coordinates");
  std::vector<IVec> cols;
  for (const auto& s : R.simple) cols.push_back(s);
  IMat m(R.dim, IVec(R.dim, 0));
  for (uint32_t j = 0; j < R.dim; ++j) {
    IVec ej(R.dim, 0);
    ej[j] = 1;
    IVec y = solve_integral(cols, ej);  // e_j in simple roots
    IVec img(R.dim, 0);
    for (uint32_t i = 0; i < R.rank; ++i)
      for (uint32_t t = 0; t < R.dim; ++t) img[t] += y[i] * R.simple[perm[i] - 1][t];
    for (uint32_t t = 0; t < R.dim; ++t) m[t][j] = img[t];
  }
  return m;
}

// ---------------------------------------------------------------- order polynomials

namespace {
struct Label {
  bool twisted = false;
  char type = 'A';
  uint32_t rank = 0;
};
Label parse_label(const std::string& s) {
  Label L;
  size_t i = 0;
  if (!s.empty() && s[0] == '2') {
    L.twisted = true;
    i = 1;
  }
  if (i >= s.size()) throw std::invalid_argument("bad type label " + s);
  L.type = s[i];
  L.rank = static_cast<uint32_t>(std::stoul(s.substr(i + 1)));
  return L;
}
}  // namespace

std::vector<uint32_t> reflection_degrees(const std::string& label) {
  Label L = parse_label(label);
  std::vector<uint32_t> d;
  uint32_t l = L.rank;
  switch (L.type) {
    case 'A':
      for (uint32_t i = 2; i <= l + 1; ++i) d.push_back(i);
      break;
    case 'B':
    case 'C':
      for (uint32_t i = 1; i <= l; ++i) d.push_back(2 * i);
      break;
    case 'D':
      for (uint32_t i = 1; i < l; ++i) d.push_back(2 * i);
      d.push_back(l);
      break;
    case 'E':
      if (l == 6) d = {2, 5, 6, 8, 9, 12};
      else if (l == 7) d = {2, 6, 8, 10, 12, 14, 18};
      else if (l == 8) d = {2, 8, 12, 14, 18, 20, 24, 30};
      else throw std::invalid_argument("reflection_degrees: bad E rank");
      break;
    default:
      throw std::invalid_argument("reflection_degrees: unsupported type " + label);
  }
  return d;
}

std::vector<int> degree_twists(const std::string& label) {
  Label L = parse_label(label);
  std::vector<uint32_t> d = reflection_degrees(label);
  std::vector<int> eps(d.size(), 1);
  if (!L.twisted) return eps;
  switch (L.type) {
    case 'A':
      for (size_t i = 0; i < d.size(); ++i) eps[i] = d[i] % 2 ? -1 : 1;
      break;
    case 'D':
      eps.back() = -1;  // the Pfaffian-type invariant of degree l
      break;
    case 'E':
      if (L.rank != 6) throw std::invalid_argument("degree_twists: no twisted form");
      for (size_t i = 0; i < d.size(); ++i) eps[i] = (d[i] == 5 || d[i] == 9) ? -1 : 1;
      break;
    default:
      throw std::invalid_argument("degree_twists: no twisted form of " + label);
  }
  return eps;
}

IntPoly OrderPolynomial::expand() const {
  IntPoly f{1};
  for (auto [d, m] : phi)
    for (uint32_t i = 0; i < m; ++i) f = poly_mul(f, cyclotomic(d));
  return f;
}

std::string OrderPolynomial::to_string() const {
  std::ostringstream os;
  os << "q^" << N;
  for (auto [d, m] : phi) {
    os << " Phi" << d;
    if (m > 1) os << "^" << m;
  }
  return os.str();
}

OrderPolynomial order_polynomial(const std::string& label) {
  std::vector<uint32_t> deg = reflection_degrees(label);
  std::vector<int> eps = degree_twists(label);
  IntPoly f{1};
  uint32_t N = 0;
  for (size_t i = 0; i < deg.size(); ++i) {
    IntPoly g(deg[i] + 1, 0);
    g[deg[i]] = 1;
    g[0] = -eps[i];
    f = poly_mul(f, g);
    N += deg[i] - 1;  // number of positive roots = sum (d_i - 1)
  }
  OrderPolynomial P;
  P.N = N;
  if (!cyclotomic_factor(f, P.phi, 64)) throw std::logic_error("order_polynomial: not a product of cyclotomics");
  return P;
}

OrderPolynomial embedded_order_polynomial(const std::string& label) {
  OrderPolynomial P;
  if (label == "E6") {
    P.N = 36;
    P.phi = {{1, 6}, {2, 4}, {3, 3}, {4, 2}, {5, 1}, {6, 2}, {8, 1}, {9, 1}, {12, 1}};
  } else if (label == "2E6") {
    P.N = 36;
    P.phi = {{1, 4}, {2, 6}, {3, 2}, {4, 2}, {6, 3}, {8, 1}, {10, 1}, {12, 1}, {18, 1}};
  } else if (label == "E7") {
    P.N = 63;
    P.phi = {{1, 7}, {2, 7}, {3, 3}, {4, 2}, {5, 1}, {6, 3}, {7, 1}, {8, 1}, {9, 1},
             {10, 1}, {12, 1}, {14, 1}, {18, 1}};
  } else {
    throw std::invalid_argument("embedded_order_polynomial: no data for " + label);
  }
  return P;
}

std::set<uint32_t> embedded_nonregular(const std::string& label) {
  if (label == "E6") return {5};
  if (label == "2E6") return {10};
  if (label == "E7") return {4, 5, 8, 10, 12};
  throw std::invalid_argument("embedded_nonregular: no data for " + label);
}

std::set<uint32_t> cyclotomic_support(const OrderPolynomial& P) {
  std::set<uint32_t> s;
  for (auto [d, m] : P.phi) s.insert(d);
  return s;
}

std::set<uint32_t> regular_numbers(const std::string& label) {
  Label L = parse_label(label);
  if (L.twisted) return regular_numbers_by_search(label);
  std::vector<uint32_t> deg = reflection_degrees(label);
  std::set<uint32_t> out;
  for (uint32_t d : cyclotomic_support(order_polynomial(label))) {
    // Lehrer-Springer: codegrees of a Weyl group are d_i - 2
    size_t a = 0, b = 0;
    for (uint32_t x : deg) {
      a += x % d == 0;
      b += (x - 2) % d == 0;
    }
    if (a == b) out.insert(d);
  }
  return out;
}

std::set<uint32_t> regular_numbers_by_search(const std::string& label, size_t bound) {
  Label L = parse_label(label);
  RootDatum R = in_root_coordinates(root_datum(L.type, L.rank));
  WeylGroup WG = weyl_group(R, bound);
  std::optional<IMat> phi;
  std::vector<uint32_t> reps;
  if (L.twisted) {
    std::vector<uint32_t> perm(L.rank);
    for (uint32_t i = 0; i < L.rank; ++i) perm[i] = i + 1;
    if (L.type == 'A')
      for (uint32_t i = 0; i < L.rank; ++i) perm[i] = L.rank - i;
    else if (L.type == 'D') std::swap(perm[0], perm[1]);
    else if (L.type == 'E' && L.rank == 6) {
      std::swap(perm[0], perm[5]);
      std::swap(perm[2], perm[4]);
    } else
      throw std::invalid_argument("regular_numbers_by_search: no twisted form");
    phi = graph_automorphism(R, perm);
    Mat pm = WG.to_mat(*phi);
    // w phi ~ x^-1 w phi x = x^-1 w (phi x phi^-1) phi
    auto sigma = automorphism_from_matrix_map(WG.W, conjugation_map(WG.field, inverse(WG.field, pm)));
    for (uint32_t r : twisted_classes(WG.W, sigma).reps) reps.push_back(WG.W.elt(r));
  } else {
    for (uint32_t r : conjugacy_classes(WG.W).reps) reps.push_back(WG.W.elt(r));
  }
  std::set<uint32_t> out;
  for (uint32_t d : cyclotomic_support(order_polynomial(label))) {
    for (uint32_t u : reps) {
      IMat w = WG.to_imat(u);
      if (zeta_regular_check(R, w, d, 1, phi ? &*phi : nullptr).regular) {
        out.insert(d);
        break;
      }
    }
  }
  return out;
}

std::vector<int> coroot_mod2(const RootDatum& R, const std::vector<IVec>& betas) {
  std::vector<IVec> cb;
  for (const auto& s : R.simple) cb.push_back(R.coroot(s));
  std::vector<int> acc(R.rank, 0);
  for (const auto& b : betas) {
    if (!R.is_root(b)) throw std::invalid_argument("coroot_mod2: not a root");
    IVec y = solve_integral(cb, R.coroot(b));
    for (uint32_t i = 0; i < R.rank; ++i) acc[i] = static_cast<int>(((acc[i] + y[i]) % 2 + 2) % 2);
  }
  return acc;
}

}  // namespace mckay
