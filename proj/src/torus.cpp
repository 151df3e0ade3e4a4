#include "mckay/torus.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace mckay {

// ---------------------------------------------------------------- tori

BigInt FiniteTorus::order() const {
  BigInt n = 1;
  for (const auto& d : invariant_factors) n *= d;
  return n;
}

FiniteTorus torus_from_action(const IntMat& A, uint64_t q) {
  if (q < 2) throw std::invalid_argument("torus: q must be at least 2");
  FiniteTorus T;
  T.rank = static_cast<uint32_t>(A.rows);
  T.q = q;
  T.action = A;
  IntMat M = scaled(A, BigInt(q)) - IntMat::identity(A.rows);
  SnfResult s = smith_normal_form(M);
  for (const auto& d : s.diagonal) {
    if (d == 0) throw std::logic_error("torus: q A - I is singular");
    if (d > 1) T.invariant_factors.push_back(d);
  }
  T.left = std::move(s.left);
  T.right = std::move(s.right);
  return T;
}

FiniteTorus torus_fixed_points(const RootDatum& R, const IMat& w, uint64_t q, const IMat* phi) {
  IMat m = phi ? imat_mul(w, *phi) : w;
  return torus_from_action(coroot_action(R, m), q);
}

uint32_t sylow_d_rank(const IntMat& A, uint32_t d) { return cyclotomic_multiplicity(char_poly(A), d); }

BigInt sylow_d_order(const IntMat& A, uint32_t d, uint64_t q) {
  BigInt phi = poly_eval(cyclotomic(d), BigInt(q)), r = 1;
  for (uint32_t i = sylow_d_rank(A, d); i > 0; --i) r *= phi;
  return r;
}

// ---------------------------------------------------------------- abelian norm

uint64_t CyclicModel::act(uint64_t x, uint64_t times) const {
  for (uint64_t i = 0; i < times; ++i) x = static_cast<uint64_t>((__uint128_t)x * s % n);
  return x;
}

uint64_t abelian_norm(const CyclicModel& C, uint32_t m, uint64_t x) {
  uint64_t acc = 0, y = x % C.n;
  for (uint32_t i = 0; i < m; ++i) {
    acc = (acc + y) % C.n;
    y = C.act(y);
  }
  return acc;
}

namespace {
std::vector<uint64_t> fixed_by(const CyclicModel& C, uint64_t times) {
  std::vector<uint64_t> r;
  for (uint64_t x = 0; x < C.n; ++x)
    if (C.act(x, times) == x) r.push_back(x);
  return r;
}

std::set<uint64_t> commutator_image(const CyclicModel& C, const std::vector<uint64_t>& A) {
  std::set<uint64_t> I;
  for (uint64_t y : A) I.insert((C.act(y) + C.n - y) % C.n);
  return I;
}

uint64_t additive_order(uint64_t x, uint64_t n) { return n / std::gcd(x, n); }
}  // namespace

AbelianNorm shintani_norm_abelian(const CyclicModel& C, uint32_t m) {
  if (m == 0) throw std::invalid_argument("shintani_norm_abelian: m = 0");
  if (std::gcd(C.s % C.n, C.n) != 1 && C.n > 1) throw std::invalid_argument("shintani_norm_abelian: not an automorphism");
  AbelianNorm r;
  r.source = fixed_by(C, m);
  std::set<uint64_t> I = commutator_image(C, r.source);
  std::vector<uint64_t> target = fixed_by(C, 1);
  r.source_quotient_order = r.source.size() / I.size();
  r.target_order = target.size();
  std::set<uint64_t> image, kernel;
  for (uint64_t x : r.source) {
    uint64_t y = abelian_norm(C, m, x);
    r.coset_image.push_back(y);
    image.insert(y);
    if (y == 0) kernel.insert(x);
  }
  r.well_defined = std::all_of(I.begin(), I.end(), [&](uint64_t i) { return abelian_norm(C, m, i) == 0; });
  r.bijective = r.well_defined && kernel == I && image == std::set<uint64_t>(target.begin(), target.end());
  return r;
}

bool last_statement_check(const CyclicModel& C, uint32_t m) {
  std::vector<uint64_t> A = fixed_by(C, m), target = fixed_by(C, 1);
  for (uint64_t t : A) {
    if (additive_order(t, C.n) != A.size()) continue;  // t generates A
    if (additive_order(abelian_norm(C, m, t), C.n) != target.size()) return false;
  }
  return true;
}

bool norm_representative_independent(const CyclicModel& C, uint32_t m, uint64_t seed, int trials) {
  std::vector<uint64_t> A = fixed_by(C, m);
  std::set<uint64_t> Iset = commutator_image(C, A);
  std::vector<uint64_t> I(Iset.begin(), Iset.end());
  std::mt19937_64 rng(seed);
  for (int t = 0; t < trials; ++t) {
    uint64_t x = A[rng() % A.size()], i = I[rng() % I.size()];
    if (abelian_norm(C, m, (x + i) % C.n) != abelian_norm(C, m, x)) return false;
  }
  return true;
}

// ---------------------------------------------------------------- SL2 / GL2 descent

uint64_t DescentSetting::q1() const {
  uint64_t r = 1;
  for (uint32_t i = 0; i < k1; ++i) r *= p;
  return r;
}

DescentSetting descent_setting(uint32_t p, uint32_t k1, uint32_t m, bool gl) {
  if (k1 == 0 || m == 0) throw std::invalid_argument("descent_setting: bad degrees");
  DescentSetting S;
  S.F = Field::make(p, k1 * m);
  if (S.F.q() > 16) throw std::invalid_argument("descent_setting: q above the table cap");
  S.p = p;
  S.k1 = k1;
  S.m = m;
  S.gl = gl;
  S.U = Universe::closure(S.F, gl ? gl_generators(S.F, 2) : sl_generators(S.F, 2));
  S.G = Group::whole(S.U);
  S.F1 = automorphism_from_matrix_map(S.G, frobenius_map(S.F, k1));
  std::vector<uint32_t> fixed;
  for (uint32_t x = 0; x < S.G.order(); ++x)
    if (S.F1(x) == x) fixed.push_back(S.G.elt(x));
  S.G1 = Group::from_elements(S.U, fixed);
  return S;
}

namespace {
Mat diag2(uint32_t a) { return diagonal({a, 1}); }

std::function<Mat(const Mat&)> twisted_frobenius(const Field& F, uint32_t k1, const Mat& t) {
  Mat ti = inverse(F, t);
  return [F, k1, t, ti](const Mat& x) { return mul(F, t, mul(F, frobenius(F, x, k1), ti)); };
}

uint64_t norm_exponent(const DescentSetting& S) { return (S.q() - 1) / (S.q1() - 1); }
}  // namespace

DescentCount descent_fixed_count_check(uint32_t p, uint32_t k1, uint32_t m, uint32_t det_log) {
  DescentSetting S = descent_setting(p, k1, m, false);
  const Field& F = S.F;
  Mat t = diag2(F.pow(F.generator(), det_log));
  Automorphism tF1 = automorphism_from_matrix_map(S.G, twisted_frobenius(F, k1, t));
  DescentCount r;
  r.left = fixed_irr_count(*cached_table(S.G), {tF1});
  // t1 on the determinant line: the field norm of det t
  uint64_t e1 = (uint64_t(det_log) * norm_exponent(S)) % (F.q() - 1);
  Mat t1 = diag2(F.pow(F.generator(), static_cast<int64_t>(e1)));
  Automorphism c1 = automorphism_from_matrix_map(S.G1, conjugation_map(F, inverse(F, t1)));
  r.right = fixed_irr_count(*cached_table(S.G1), {c1});
  std::ostringstream os;
  os << "SL2(" << S.q() << ") t=diag(g^" << det_log << ",1) vs SL2(" << S.q1() << ") t1=diag(g^" << e1 << ",1)";
  r.detail = os.str();
  return r;
}

DescentCount descent_group_invariant_check(uint32_t p, uint32_t k1, uint32_t m) {
  DescentSetting S = descent_setting(p, k1, m, false);
  const Field& F = S.F;
  Automorphism diagq = automorphism_from_matrix_map(S.G, conjugation_map(F, diag2(F.generator())));
  DescentCount r;
  r.left = fixed_irr_count(*cached_table(S.G), {S.F1, diagq});
  Mat g1 = diag2(F.pow(F.generator(), static_cast<int64_t>(norm_exponent(S))));
  Automorphism diag1 = automorphism_from_matrix_map(S.G1, conjugation_map(F, g1));
  r.right = fixed_irr_count(*cached_table(S.G1), {diag1});
  std::ostringstream os;
  os << "Irr(SL2(" << S.q() << "))^<GL2, F1> vs Irr(SL2(" << S.q1() << "))^GL2";
  r.detail = os.str();
  return r;
}

DescentCount shintani_count_check(uint32_t p, uint32_t k1, uint32_t m, bool gl) {
  DescentSetting S = descent_setting(p, k1, m, gl);
  DescentCount r;
  r.left = fixed_irr_count(*cached_table(S.G), {S.F1});
  r.right = cached_table(S.G1)->size();
  std::ostringstream os;
  os << (gl ? "GL2(" : "SL2(") << S.q() << ")^F1 vs " << (gl ? "GL2(" : "SL2(") << S.q1() << ")";
  r.detail = os.str();
  return r;
}

// ---------------------------------------------------------------- GL3(4) and gamma

namespace {
// restriction of an automorphism of X to a characteristic subgroup Y
Automorphism restrict_automorphism(const Group& X, const Automorphism& a, const Group& Y) {
  Automorphism r;
  r.map.resize(Y.order());
  for (uint32_t y = 0; y < Y.order(); ++y) {
    auto img = Y.local(X.elt(a(*X.local(Y.elt(y)))));
    if (!img) throw NotAutomorphism("restrict_automorphism: subgroup not invariant");
    r.map[y] = *img;
  }
  return r;
}
}  // namespace

GammaDescent gl3_gamma_descent() {
  Field F4 = Field::make(2, 2), F2 = Field::make(2);
  std::vector<Mat> g3 = gl_generators(F4, 3), gens;
  for (const auto& g : g3) gens.push_back(restrict_scalars(F4, F2, g));
  Mat phi = frobenius_linear(F4, F2, 3, 1);
  gens.push_back(phi);
  UniversePtr U = Universe::closure(F2, gens, 400'000);
  Group X = Group::whole(U);
  std::vector<uint32_t> ygens;
  for (size_t i = 0; i < g3.size(); ++i) ygens.push_back(*U->find(gens[i]));
  Group Y = Group::generate(U, ygens);
  if (X.order() != 362880 || Y.order() != 181440) throw std::logic_error("gl3_gamma_descent: unexpected orders");

  // gamma: A -> A^{-T} on GL3(4), fixing the Frobenius
  std::vector<uint32_t> images;
  for (size_t i = 0; i < g3.size(); ++i) {
    Mat im = restrict_scalars(F4, F2, inverse(F4, transpose(g3[i])));
    images.push_back(*X.local(*U->find(im)));
  }
  images.push_back(*X.local(*U->find(phi)));
  Automorphism gammaX = automorphism_from_images(X, images);
  Automorphism gammaY = restrict_automorphism(X, gammaX, Y);
  Automorphism frobY = restrict_automorphism(X, inner_automorphism(X, *U->find(phi)), Y);

  uint64_t ell = CharTable::default_ell(X);
  TablePtr TX = cached_table(X, ell, 400'000);
  TablePtr TY = cached_table(Y, ell, 400'000);
  GammaDescent r;
  auto py = TY->irr_perm(gammaY), fy = TY->irr_perm(frobY);
  auto px = TX->irr_perm(gammaX);
  auto fusion = class_fusion(*TY, *TX);
  std::vector<std::vector<size_t>> ext(TY->size());
  for (size_t psi = 0; psi < TX->size(); ++psi) {
    auto res = restrict_row(*TX, psi, *TY, fusion);
    if (auto chi = TY->find_row(res)) ext[*chi].push_back(psi);
  }
  for (size_t chi = 0; chi < TY->size(); ++chi) {
    if (py[chi] != chi || fy[chi] != chi) continue;
    ++r.left;
    if (ext[chi].size() != 2) throw std::logic_error("gl3_gamma_descent: invariant character without two extensions");
    ++r.extensions_checked;
    if (px[ext[chi][0]] == ext[chi][0]) ++r.m_b;
    else ++r.m_c;
  }

  UniversePtr U2 = Universe::closure(F2, gl_generators(F2, 3));
  Group G2 = Group::whole(U2);
  Automorphism gamma2 = automorphism_from_matrix_map(G2, transpose_inverse_map(F2));
  r.right = fixed_irr_count(*cached_table(G2), {gamma2});
  return r;
}

// ---------------------------------------------------------------- coset instances

namespace {
std::vector<uint32_t> cycle_perm(uint32_t n, const std::vector<uint32_t>& cyc) {
  std::vector<uint32_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  for (size_t i = 0; i < cyc.size(); ++i) p[cyc[i]] = cyc[(i + 1) % cyc.size()];
  return p;
}

std::vector<uint32_t> indices(const UniversePtr& U, const std::vector<Mat>& ms) {
  std::vector<uint32_t> r;
  for (const auto& m : ms) r.push_back(*U->find(m));
  return r;
}
}  // namespace

std::vector<CosetInstance> onxy_instances() {
  std::vector<CosetInstance> out;
  Field F2 = Field::make(2);
  // S_n over A_n
  for (uint32_t n = 3; n <= 6; ++n) {
    std::vector<uint32_t> full(n);
    std::iota(full.begin(), full.end(), 0);
    auto gens = permutation_matrices(F2, n, {cycle_perm(n, {0, 1}), cycle_perm(n, full)});
    UniversePtr U = Universe::closure(F2, gens);
    std::vector<std::vector<uint32_t>> threes;
    for (uint32_t k = 2; k < n; ++k) threes.push_back(cycle_perm(n, {0, 1, k}));
    Group Y = Group::generate(U, indices(U, permutation_matrices(F2, n, threes)));
    out.push_back({"S" + std::to_string(n) + "/A" + std::to_string(n), Group::whole(U), Y, *U->find(gens[0])});
  }
  // dihedral over rotations
  for (uint32_t n = 3; n <= 8; ++n) {
    std::vector<uint32_t> rot(n), refl(n);
    for (uint32_t i = 0; i < n; ++i) {
      rot[i] = (i + 1) % n;
      refl[i] = (n - i) % n;
    }
    auto gens = permutation_matrices(F2, n, {rot, refl});
    UniversePtr U = Universe::closure(F2, gens);
    Group Y = Group::generate(U, {*U->find(gens[0])});
    out.push_back({"D" + std::to_string(2 * n) + "/C" + std::to_string(n), Group::whole(U), Y, *U->find(gens[1])});
  }
  // GL2(q) over <SL2(q), x^k>, x = diag(g, 1)
  for (auto [p, k] : std::vector<std::pair<uint32_t, uint32_t>>{{3, 1}, {2, 2}, {5, 1}}) {
    Field F = Field::make(p, k);
    UniversePtr U = Universe::closure(F, gl_generators(F, 2));
    uint32_t x = *U->find(diagonal({F.generator(), 1}));
    std::vector<uint32_t> sl = indices(U, sl_generators(F, 2));
    for (uint32_t j = 2; j <= F.q() - 1; ++j) {
      if ((F.q() - 1) % j) continue;
      auto g = sl;
      g.push_back(U->power(x, j));
      out.push_back({"GL2(" + std::to_string(F.q()) + ")/<SL2,x^" + std::to_string(j) + ">", Group::whole(U),
                     Group::generate(U, g), x});
    }
  }
  // semilinear groups over the multiplicative group
  for (auto [p, k] : std::vector<std::pair<uint32_t, uint32_t>>{{2, 2}, {3, 2}, {5, 2}, {7, 2}, {2, 3}, {3, 3}, {2, 4}}) {
    Field F = Field::make(p, k), Fp = Field::make(p);
    Mat g = restrict_scalars(F, Fp, diagonal({F.generator()}));
    Mat fr = frobenius_linear(F, Fp, 1, 1);
    UniversePtr U = Universe::closure(Fp, {g, fr});
    std::string q = std::to_string(F.q());
    out.push_back({"GammaL1(" + q + ")/GL1", Group::whole(U), Group::generate(U, {*U->find(g)}), *U->find(fr)});
    if (k == 4) {
      Group Y = Group::generate(U, {*U->find(g), U->power(*U->find(fr), 2)});
      out.push_back({"GammaL1(" + q + ")/<GL1,frob^2>", Group::whole(U), Y, *U->find(fr)});
    }
  }
  // quaternion and SL2(3)
  {
    Field F3 = Field::make(3);
    Mat i = from_ints(F3, {{0, 1}, {-1, 0}}), j = from_ints(F3, {{1, 1}, {1, -1}});
    Mat u = from_ints(F3, {{1, 1}, {0, 1}}), d = from_ints(F3, {{-1, 0}, {0, 1}});
    UniversePtr U = Universe::closure(F3, {i, j, u, d});
    Group GL = Group::whole(U);
    Group SL = Group::generate(U, indices(U, {i, j, u}));
    Group Q = Group::generate(U, indices(U, {i, j}));
    Group C4 = Group::generate(U, indices(U, {i}));
    out.push_back({"GL2(3)/SL2(3)", GL, SL, *U->find(d)});
    out.push_back({"SL2(3)/Q8", SL, Q, *U->find(u)});
    out.push_back({"Q8/C4", Q, C4, *U->find(j)});
  }
  return out;
}

}  // namespace mckay
