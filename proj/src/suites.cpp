#include "mckay/suites.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <future>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "mckay/crg.hpp"
#include "mckay/rootweyl.hpp"
#include "mckay/symbols.hpp"
#include "mckay/tits.hpp"
#include "mckay/torus.hpp"
#include "mckay/wreath.hpp"

namespace mckay {

using nlohmann::json;

namespace {

CheckResult check(std::string id, json params, bool ok, json witness = nullptr) {
  CheckResult r;
  r.id = std::move(id);
  r.params = std::move(params);
  r.status = ok ? "pass" : "fail";
  r.witness = std::move(witness);
  return r;
}

// check labels as id segments
std::string slug(std::string s) {
  std::replace(s.begin(), s.end(), ' ', '-');
  return s;
}

CheckResult skipped(std::string id, json params, std::string reason) {
  CheckResult r;
  r.id = std::move(id);
  r.params = std::move(params);
  r.status = "skipped";
  r.reason = std::move(reason);
  return r;
}

// computed once per key and shared between tasks of one run
template <class K, class V>
class Memo {
 public:
  std::shared_ptr<const V> get(const K& key, const std::function<V()>& make) {
    std::unique_lock lock(mu_);
    auto it = map_.find(key);
    if (it != map_.end()) {
      auto f = it->second;
      lock.unlock();
      return f.get();
    }
    std::promise<std::shared_ptr<const V>> p;
    map_.emplace(key, p.get_future().share());
    lock.unlock();
    try {
      auto v = std::make_shared<const V>(make());
      p.set_value(v);
      return v;
    } catch (...) {
      p.set_exception(std::current_exception());
      throw;
    }
  }

 private:
  std::mutex mu_;
  std::map<K, std::shared_future<std::shared_ptr<const V>>> map_;
};

struct Context {
  Options opts;
  Memo<std::tuple<char, uint32_t, uint32_t>, TitsGroup> tits;
  Memo<std::tuple<char, uint32_t, uint32_t, uint32_t>, SectionElements> sections;

  std::shared_ptr<const TitsGroup> tits_group_for(char type, uint32_t l, uint32_t q);
  std::shared_ptr<const SectionElements> section_for(uint32_t l, uint32_t q, uint32_t d);
};

std::pair<uint32_t, uint32_t> prime_power(uint32_t q) {
  if (q < 2) throw UsageError("--q must be a prime power");
  uint32_t p = 2;
  while (q % p) ++p;
  uint32_t k = 0, r = q;
  while (r % p == 0) {
    r /= p;
    ++k;
  }
  if (r != 1) throw UsageError("--q must be a prime power, got " + std::to_string(q));
  return {p, k};
}

std::shared_ptr<const TitsGroup> Context::tits_group_for(char type, uint32_t l, uint32_t q) {
  return tits.get({type, l, q}, [&] {
    auto [p, k] = prime_power(q);
    return tits_group(build_chevrep(type, l, p, k));
  });
}

std::shared_ptr<const SectionElements> Context::section_for(uint32_t l, uint32_t q, uint32_t d) {
  return sections.get({'B', l, q, d}, [&] { return build_section_elements(*tits_group_for('B', l, q), d); });
}

std::vector<uint32_t> divisors(uint32_t n) {
  std::vector<uint32_t> v;
  for (uint32_t d = 1; d <= n; ++d)
    if (n % d == 0) v.push_back(d);
  return v;
}

template <class T>
std::vector<T> pick(const std::optional<uint32_t>& flag, std::vector<T> defaults) {
  if (!flag) return defaults;
  return {static_cast<T>(*flag)};
}

struct TitsGrid {
  std::vector<uint32_t> ranks, qs;
  std::optional<uint32_t> d;
};

TitsGrid tits_grid(const Options& o) {
  TitsGrid g;
  g.ranks = pick<uint32_t>(o.rank, {2, 3, 4});
  g.qs = pick<uint32_t>(o.q, {5, 17});
  g.d = o.d;
  for (uint32_t l : g.ranks)
    if (l < 2 || l > 4) throw UsageError("--rank must be 2, 3 or 4 for type B");
  for (uint32_t q : g.qs) prime_power(q);
  if (g.d && (*g.d == 0 || g.d > 8)) throw UsageError("--d out of range");
  return g;
}

// ---------------------------------------------------------------- tits

void plan_tits(const std::shared_ptr<Context>& ctx, std::vector<Task>& tasks) {
  const Options& o = ctx->opts;
  if (o.type == "A") {
    if (o.rank && *o.rank != 1) throw UsageError("type A supports rank 1 only");
    for (uint32_t q : pick<uint32_t>(o.q, {5, 17})) {
      auto [p, k] = prime_power(q);
      tasks.push_back({"steinberg/A1/q" + std::to_string(q), [=] {
                         std::vector<CheckResult> out;
                         for (const auto& c : steinberg_self_test(build_chevrep('A', 1, p, k), ctx->opts.seed))
                           out.push_back(check("steinberg/A1/q" + std::to_string(q) + "/" + slug(c.label),
                                               {{"type", "A"}, {"rank", 1}, {"q", q}}, c.ok, c.detail));
                         return out;
                       }});
    }
    return;
  }
  TitsGrid g = tits_grid(o);
  for (uint32_t l : g.ranks)
    for (uint32_t q : g.qs) {
      std::string base = "B" + std::to_string(l) + "/q" + std::to_string(q);
      json params{{"type", "B"}, {"rank", l}, {"q", q}};
      tasks.push_back({"steinberg/" + base, [=] {
                         std::vector<CheckResult> out;
                         auto T = ctx->tits_group_for('B', l, q);
                         for (const auto& c : steinberg_self_test(T->rep, ctx->opts.seed))
                           out.push_back(check("steinberg/" + base + "/" + slug(c.label), params, c.ok, c.detail));
                         return out;
                       }});
      for (uint32_t d : divisors(2 * l)) {
        if (g.d && *g.d != d) continue;
        json pd = params;
        pd["d"] = d;
        std::string id = base + "/d" + std::to_string(d);
        tasks.push_back({"tits/" + id, [=] {
                           std::vector<CheckResult> out;
                           if ((q - 1) % 4) {
                             out.push_back(skipped("tits/" + id, pd, "no primitive 4th root of unity in F_q"));
                             return out;
                           }
                           auto T = ctx->tits_group_for('B', l, q);
                           auto s = ctx->section_for(l, q, d);
                           for (const auto& c : verify_relation_catalog(*T, *s))
                             out.push_back(check("tits/" + id + "/" + slug(c.label), pd, c.ok, c.detail));
                           out.push_back(check("lemrhoVd/" + id, pd, check_rhoVd_equals_Wd(*T, *s),
                                               {{"Vd_order", s->Vd.order()}, {"a", s->a}}));
                           return out;
                         }});
      }
    }
}

// ---------------------------------------------------------------- clifford-b

void plan_clifford(const std::shared_ptr<Context>& ctx, std::vector<Task>& tasks) {
  const Options& o = ctx->opts;
  bool tits_filters = o.rank || o.d || o.q;
  bool want_prop = !o.m || tits_filters;
  bool want_wreath = !tits_filters || o.m;
  bool want_xi = !tits_filters && !o.m;
  if (want_prop) {
    TitsGrid g = tits_grid(o);
    for (uint32_t l : g.ranks)
      for (uint32_t q : g.qs)
        for (uint32_t d : divisors(2 * l)) {
          if (g.d && *g.d != d) continue;
          std::string id = "B" + std::to_string(l) + "/q" + std::to_string(q) + "/d" + std::to_string(d);
          json pd{{"type", "B"}, {"rank", l}, {"q", q}, {"d", d}};
          tasks.push_back({"vgoodB/" + id, [=] {
                             std::vector<CheckResult> out;
                             if ((q - 1) % 4) {
                               out.push_back(skipped("vgoodB/" + id, pd, "no primitive 4th root of unity in F_q"));
                               return out;
                             }
                             auto T = ctx->tits_group_for('B', l, q);
                             auto s = ctx->section_for(l, q, d);
                             Prop108Report r = check_Hd_Vd_extendibility(*T, *s);
                             out.push_back(check("vgoodB/" + id, pd, r.all_extend, {{"characters", r.characters}}));
                             json w{{"fired_a", r.fired_a}, {"fired_b", r.fired_b}, {"detail", r.detail}};
                             out.push_back(check("prop108/" + id, pd, r.parity_a && r.parity_b && r.intersection_a, w));
                             return out;
                           }});
        }
  }
  if (want_wreath) {
    std::vector<std::pair<uint32_t, uint32_t>> grid{
        {2, 1}, {2, 2}, {2, 3}, {2, 4}, {3, 1}, {3, 2}, {3, 3}, {4, 1}, {4, 2}, {4, 3}, {6, 1}, {6, 2}, {6, 3}};
    if (o.m && *o.m != 2 && *o.m != 3 && *o.m != 4 && *o.m != 6) throw UsageError("--m must be 2, 3, 4 or 6");
    for (auto [m, n] : grid) {
      if (o.m && *o.m != m) continue;
      std::string id = "wreath/C" + std::to_string(m) + "/n" + std::to_string(n);
      tasks.push_back({id, [=] {
                         WreathGridResult r = wreath_grid(m, n);
                         json w{{"cases", r.cases}, {"holds", r.holds}, {"fails", r.fails}, {"skipped", r.skipped}};
                         if (!r.failures.empty()) w["failures"] = r.failures;
                         return std::vector<CheckResult>{
                             check(id, {{"m", m}, {"n", n}}, r.fails == 0 && r.holds > 0, w)};
                       }});
    }
  }
  if (want_xi) {
    std::vector<std::pair<uint32_t, uint32_t>> grid{{1, 2}, {1, 3}, {1, 4}, {2, 2}, {2, 3}, {3, 2}, {3, 3}, {4, 2}};
    for (auto [d0, a] : grid) {
      std::string id = "lemWxi/d0-" + std::to_string(d0) + "/a" + std::to_string(a);
      tasks.push_back({id, [=] {
                         XiModel X = xi_model(d0, a);
                         auto L = xi_labels(X);
                         size_t n = 0, ok = 0, idx2 = 0;
                         std::vector<uint64_t> pat;
                         std::function<void(size_t)> rec = [&](size_t start) {
                           if (pat.size() == a) {
                             XiCheck c = wreath_relative_weyl_check(X, pat);
                             ++n;
                             ok += c.ok();
                             idx2 += c.index == 2;
                             return;
                           }
                           for (size_t i = start; i < L.size(); ++i) {
                             pat.push_back(L[i]);
                             rec(i);
                             pat.pop_back();
                           }
                         };
                         rec(0);
                         json w{{"patterns", n}, {"ok", ok}, {"index_two", idx2}, {"modulus", X.modulus}};
                         return std::vector<CheckResult>{check(id, {{"d0", d0}, {"a", a}}, n > 0 && ok == n, w)};
                       }});
    }
  }
}

// ---------------------------------------------------------------- descent

void plan_descent(const std::shared_ptr<Context>& ctx, std::vector<Task>& tasks) {
  const Options& o = ctx->opts;
  auto keep = [&](uint32_t p, uint32_t m) { return (!o.q || *o.q == p) && (!o.m || *o.m == m); };
  auto count_check = [](const std::string& id, json params, const DescentCount& c) {
    return check(id, std::move(params), c.equal(), {{"left", c.left}, {"right", c.right}, {"detail", c.detail}});
  };
  struct Fixed {
    uint32_t p, m, e;
  };
  for (Fixed f : {Fixed{3, 2, 0}, Fixed{3, 2, 1}, Fixed{2, 2, 0}}) {
    if (!keep(f.p, f.m)) continue;
    std::string id = "descent-fixed/sl2/q1-" + std::to_string(f.p) + "/m" + std::to_string(f.m) + "/t" + std::to_string(f.e);
    tasks.push_back({id, [=] {
                       return std::vector<CheckResult>{count_check(id, {{"q1", f.p}, {"m", f.m}, {"det_log", f.e}},
                                                                   descent_fixed_count_check(f.p, 1, f.m, f.e))};
                     }});
  }
  for (auto [p, m] : std::vector<std::pair<uint32_t, uint32_t>>{{3, 2}, {2, 2}, {2, 3}}) {
    if (!keep(p, m)) continue;
    std::string tag = "q1-" + std::to_string(p) + "/m" + std::to_string(m);
    json params{{"q1", p}, {"m", m}};
    tasks.push_back({"descent-group/" + tag, [=] {
                       std::vector<CheckResult> out;
                       out.push_back(count_check("descent-group/sl2/" + tag, params, descent_group_invariant_check(p, 1, m)));
                       for (bool gl : {false, true})
                         out.push_back(count_check(std::string("shintani-count/") + (gl ? "gl2/" : "sl2/") + tag, params,
                                                   shintani_count_check(p, 1, m, gl)));
                       return out;
                     }});
  }
  if (keep(2, 2))
    tasks.push_back({"gl3-gamma-descent", [] {
                       GammaDescent g = gl3_gamma_descent();
                       json w{{"left", g.left}, {"right", g.right}, {"m_b", g.m_b}, {"m_c", g.m_c},
                              {"extensions_checked", g.extensions_checked}};
                       return std::vector<CheckResult>{check("gl3-gamma-descent", {{"q", 4}, {"q1", 2}}, g.ok(), w)};
                     }});
  if (!o.q && !o.m)
    tasks.push_back({"onxY", [] {
                       std::vector<CheckResult> out;
                       for (const auto& c : onxy_instances()) {
                         CosetCounts r = coset_basis_counts(c.X, c.Y, c.x);
                         json w{{"x_classes", r.x_classes}, {"y_classes", r.y_classes}, {"invariant", r.invariant}};
                         out.push_back(check("onxY/" + c.name, {{"X_order", c.X.order()}, {"Y_order", c.Y.order()}},
                                             r.equal(), w));
                       }
                       return out;
                     }});
}

// ---------------------------------------------------------------- torus

IntPoly binomial_poly(uint32_t n, int64_t c) {  // q^n + c
  IntPoly g(n + 1, 0);
  g[0] = c;
  g[n] = 1;
  return g;
}

// the classical product formula for |G(q)| / q^N
IntPoly classical_order(const std::string& label, uint32_t l) {
  IntPoly f{1};
  auto times = [&](uint32_t n, int64_t c) { f = poly_mul(f, binomial_poly(n, c)); };
  if (label == "A")
    for (uint32_t i = 2; i <= l + 1; ++i) times(i, -1);
  else if (label == "2A")
    for (uint32_t i = 2; i <= l + 1; ++i) times(i, i % 2 ? 1 : -1);
  else if (label == "B" || label == "C")
    for (uint32_t i = 1; i <= l; ++i) times(2 * i, -1);
  else if (label == "D" || label == "2D") {
    for (uint32_t i = 1; i < l; ++i) times(2 * i, -1);
    times(l, label == "D" ? -1 : 1);
  }
  return f;
}

void plan_torus(const std::shared_ptr<Context>& ctx, std::vector<Task>& tasks) {
  const Options& o = ctx->opts;
  tasks.push_back({"shintani-norm", [ctx] {
                     std::vector<CheckResult> out;
                     for (uint64_t q1 : {2, 3, 4, 5, 7, 8, 9})
                       for (uint32_t m = 1; m <= 4; ++m) {
                         uint64_t q = 1;
                         for (uint32_t i = 0; i < m; ++i) q *= q1;
                         if (q > 1 << 14) continue;
                         json params{{"q1", q1}, {"m", m}};
                         std::string tag = "q1-" + std::to_string(q1) + "/m" + std::to_string(m);
                         if (q > 2) {
                           CyclicModel untw{q - 1, q1 % (q - 1)};
                           out.push_back(check("shintani-norm/untwisted/" + tag, params,
                                               shintani_norm_abelian(untw, m).bijective && last_statement_check(untw, m) &&
                                                   norm_representative_independent(untw, m, ctx->opts.seed)));
                         }
                         if (m % 2 == 1) {
                           CyclicModel tw{q + 1, (q + 1) - q1 % (q + 1)};
                           out.push_back(check("shintani-norm/twisted/" + tag, params,
                                               shintani_norm_abelian(tw, m).bijective && last_statement_check(tw, m)));
                         }
                       }
                     // negative control: trivial sigma, squaring on C8
                     out.push_back(check("shintani-norm/negative-control", {{"n", 8}, {"m", 2}},
                                         !shintani_norm_abelian({8, 1}, 2).bijective));
                     return out;
                   }});
  auto ranks = pick<uint32_t>(o.rank, {2, 3, 4, 5});
  for (uint32_t l : ranks)
    if (l < 1 || l > 8) throw UsageError("--rank out of range for the torus suite");
  tasks.push_back({"sylow-rank", [ranks] {
                     std::vector<CheckResult> out;
                     for (uint32_t l : ranks) {
                       if (l < 2) continue;
                       RootDatum B = root_datum('B', l);
                       for (uint32_t d : divisors(2 * l)) {
                         auto v = regular_element_v(l, d);
                         IntMat A = coroot_action(B, sp_matrix(v.rho_v));
                         uint32_t a = sylow_d_rank(A, d);
                         bool reg = zeta_regular_check(B, sp_matrix(v.rho_v), d).regular;
                         out.push_back(check("sylow-rank/B" + std::to_string(l) + "/d" + std::to_string(d),
                                             {{"rank", l}, {"d", d}}, a == v.a && reg, {{"a", a}, {"regular", reg}}));
                       }
                     }
                     return out;
                   }});
  tasks.push_back({"e7-lattice", [] {
                     std::vector<CheckResult> out;
                     RootDatum E7 = root_datum('E', 7);
                     IVec b1{0, 0, 0, 0, 0, 0, 1}, b2{0, 1, 1, 2, 2, 2, 1}, b3{2, 2, 3, 4, 3, 2, 1};
                     auto a = [](int i) {
                       IVec v(7, 0);
                       v[i - 1] = 1;
                       return v;
                     };
                     bool roots = E7.is_root(b1) && E7.is_root(b2) && E7.is_root(b3);
                     bool orth = E7.inner(b1, b2) == 0 && E7.inner(b1, b3) == 0 && E7.inner(b2, b3) == 0;
                     out.push_back(check("e7/beta-orthogonal-roots", json::object(), roots && orth));
                     out.push_back(check("e7/z1", json::object(), coroot_mod2(E7, {a(2), a(5)}) == coroot_mod2(E7, {b2, b3})));
                     out.push_back(check("e7/z2", json::object(), coroot_mod2(E7, {a(2), a(3)}) == coroot_mod2(E7, {b1, b2})));
                     out.push_back(check("e7/z3", json::object(),
                                         coroot_mod2(E7, {a(2), a(5), a(7)}) == coroot_mod2(E7, {b1, b2, b3})));
                     return out;
                   }});
  tasks.push_back({"order-polynomials", [ranks] {
                     std::vector<CheckResult> out;
                     for (const char* t : {"E6", "2E6", "E7"}) {
                       OrderPolynomial P = order_polynomial(t);
                       out.push_back(check(std::string("order-poly/") + t, json::object(),
                                           P == embedded_order_polynomial(t), P.to_string()));
                     }
                     for (uint32_t l : ranks)
                       for (const char* t : {"A", "B", "C", "D", "2A", "2D"}) {
                         if (l < 4 && (t[0] == 'D' || t[1] == 'D')) continue;
                         std::string label = t + std::to_string(l);
                         OrderPolynomial P = order_polynomial(label);
                         out.push_back(check("order-poly/" + label, {{"rank", l}},
                                             P.expand() == classical_order(t, l), P.to_string()));
                       }
                     return out;
                   }});
  tasks.push_back({"regular-numbers", [ranks] {
                     std::vector<CheckResult> out;
                     for (uint32_t l : ranks) {
                       if (l < 2) continue;
                       auto div = divisors(2 * l);
                       std::set<uint32_t> want(div.begin(), div.end());
                       out.push_back(check("regular/B" + std::to_string(l), {{"rank", l}},
                                           regular_numbers("B" + std::to_string(l)) == want));
                     }
                     for (const char* t : {"E6", "2E6", "E7"}) {
                       auto supp = cyclotomic_support(order_polynomial(t));
                       auto reg = regular_numbers(t);
                       std::set<uint32_t> non;
                       std::set_difference(supp.begin(), supp.end(), reg.begin(), reg.end(), std::inserter(non, non.end()));
                       out.push_back(check(std::string("regular/") + t, json::object(), non == embedded_nonregular(t),
                                           {{"nonregular", non}}));
                     }
                     out.push_back(check("regular-search/E6", json::object(),
                                         regular_numbers_by_search("E6") == regular_numbers("E6")));
                     out.push_back(skipped("regular-search/E7", json::object(),
                                           "|W(E7)| = 2903040 is above the enumeration limit"));
                     return out;
                   }});
}

// ---------------------------------------------------------------- symbols

void plan_symbols(const std::shared_ptr<Context>& ctx, std::vector<Task>& tasks) {
  int max_rank = static_cast<int>(ctx->opts.max_rank.value_or(8));
  if (max_rank < 1 || max_rank > 12) throw UsageError("--max-rank must be in [1, 12]");
  tasks.push_back({"symbols", [max_rank] {
                     std::vector<CheckResult> out;
                     out.push_back(check("symbols/B2-count", {{"rank", 2}}, unipotent_count("B", 2) == 6,
                                         unipotent_count("B", 2)));
                     size_t exact = enumerate_symbols(2, [](int d) { return d == 1; }).size();
                     out.push_back(check("symbols/rank2-defect1-exact", {{"rank", 2}}, exact == 5, exact));
                     out.push_back(check("symbols/D4-count", {{"rank", 4}}, unipotent_count("D", 4) == 14,
                                         unipotent_count("D", 4)));
                     for (int n = 0; n <= max_rank; ++n) {
                       size_t c = enumerate_symbols(n, [](int d) { return d == 1; }).size();
                       out.push_back(check("symbols/bipartition-oracle/r" + std::to_string(n), {{"rank", n}},
                                           c == bipartition_count(n), c));
                     }
                     StarReport s = star_bijection_check(max_rank);
                     out.push_back(check("symbols/star-bijection", {{"max_rank", max_rank}},
                                         s.rank_preserving && s.involution && s.exchanges_classes && s.bijective,
                                         {{"checked", s.checked}}));
                     for (int l = 2; l <= max_rank; ++l) {
                       UnifixResult u = unifix_count_check("2D", l);
                       out.push_back(check("symbols/unifix-2D/l" + std::to_string(l), {{"rank", l}}, u.ok(),
                                           {{"twisted", u.twisted}, {"fixed", u.fixed_untwisted}}));
                     }
                     TrialityReport t = triality_report();
                     bool expected_listed = false;
                     json cands = json::array();
                     for (const auto& c : t.candidates) {
                       cands.push_back({{"rule", c.rule}, {"fixed", c.fixed}, {"consistent", c.consistent}});
                       expected_listed = expected_listed || (c.fixed == t.expected && c.consistent);
                     }
                     out.push_back(check("symbols/triality-D4", {{"rank", 4}},
                                         t.total == 14 && expected_listed && t.action_open,
                                         {{"total", t.total}, {"expected", t.expected}, {"action", "open"},
                                          {"candidates", cands}}));
                     return out;
                   }});
}

// ---------------------------------------------------------------- crg

json row_witness(const TableRow& tr, const RowReport& r) {
  return {{"centralizer", tr.centralizer}, {"d", tr.d},
          {"Ws_tilde", tr.Ws_tilde},       {"Ws", tr.Ws},
          {"Ks", tr.Ks},                   {"ambient", r.ambient},
          {"computed", {{"Ws_tilde", r.ws_tilde_order}, {"Ws", r.ws_order}, {"Ks", r.k_order}}},
          {"method", r.method},            {"configurations", r.matches},
          {"dagger_i", r.dagger_i},        {"dagger_ii", r.dagger_ii},
          {"observation", tr.observation}, {"observation_holds", r.observation_holds},
          {"Ks_mismatch", r.k_mismatch},   {"detail", r.detail}};
}

void plan_crg(const std::shared_ptr<Context>& ctx, std::vector<Task>& tasks) {
  const Options& o = ctx->opts;
  const std::string& cs = o.case_name;
  if (!cs.empty() && cs != "e7-d4" && cs != "tables" && cs != "groups")
    throw UsageError("--case must be e7-d4, tables or groups");
  if (o.table && *o.table != 1 && *o.table != 2) throw UsageError("--table must be 1 or 2");
  if (o.row && !o.table) throw UsageError("--row needs --table");
  bool rows_only = o.table.has_value();
  if (!rows_only && (cs.empty() || cs == "groups"))
    for (const char* l : {"G4", "G5", "G8", "G25", "G26", "G(4,2,2)", "G(4,1,2)", "G(3,1,3)"}) {
      std::string label = l;
      tasks.push_back({"crg/group/" + label, [label] {
                         ReflectionGroup W = build_crg(label);
                         bool ok = true;
                         json w{{"order", W.G.order()}, {"reflections", W.reflections.size()}};
                         if (!W.degrees.empty()) {
                           uint64_t prod = 1, refl = 0;
                           for (uint32_t d : W.degrees) {
                             prod *= d;
                             refl += d - 1;
                           }
                           ok = prod == W.G.order() && refl == W.reflections.size();
                           w["degrees"] = W.degrees;
                         }
                         return std::vector<CheckResult>{check("crg/group/" + label, {{"group", label}}, ok, w)};
                       }});
    }
  if (rows_only || cs.empty() || cs == "tables")
    for (int t : {1, 2}) {
      if (o.table && static_cast<int>(*o.table) != t) continue;
      auto rows = table_rows(t);
      if (o.row && (*o.row < 1 || *o.row > rows.size())) throw UsageError("--row out of range");
      for (const auto& tr : rows) {
        if (o.row && static_cast<int>(*o.row) != tr.row) continue;
        std::string id = "table" + std::to_string(t) + "-row" + std::to_string(tr.row);
        tasks.push_back({id, [=] {
                           RowReport r = verify_table_row(t, tr.row);
                           CheckResult c = check(id, {{"table", t}, {"row", tr.row}}, r.status == "pass", row_witness(tr, r));
                           if (r.status == "skipped") {
                             c.status = "skipped";
                             c.reason = r.detail;
                           }
                           return std::vector<CheckResult>{c};
                         }});
      }
    }
  if (!rows_only && (cs.empty() || cs == "e7-d4"))
    tasks.push_back({"e7-d4", [] {
                       E7D4Report e = e7_d4_analysis();
                       json p = {{"ambient", "G8"}};
                       std::vector<CheckResult> out;
                       out.push_back(check("e7-d4/nine-classes", p, e.nontrivial_classes == 9, {{"labels", e.labels}}));
                       out.push_back(check("e7-d4/nonabelian-normalizers", p, e.nonabelian_normalizer.size() == 6,
                                           {{"labels", e.nonabelian_normalizer}}));
                       out.push_back(check("e7-d4/self-normalizing", p, e.g412_self_normalizing && e.g8_self_normalizing));
                       out.push_back(check("e7-d4/c4c4-normalizer-index", p, e.c4c4_normalizer_index == 2,
                                           {{"index", e.c4c4_normalizer_index}}));
                       out.push_back(check("e7-d4/g212-pattern", p, e.g212_pattern));
                       out.push_back(check("e7-d4/c2c2-pattern", p, e.c2c2_pattern,
                                           {{"index2_normal_overgroups", e.c2c2_index2_normal}}));
                       out.push_back(check("e7-d4/g422-overgroup", p, e.g422_overgroup_rule));
                       for (size_t i = 4; i < out.size(); ++i) out[i].witness["detail"] = e.detail;
                       return out;
                     }});
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> n{"descent", "tits", "clifford-b", "symbols", "crg", "torus", "all"};
  return n;
}

std::vector<Task> plan(const Options& o) {
  if (std::find(suite_names().begin(), suite_names().end(), o.suite) == suite_names().end())
    throw UsageError("unknown suite: " + o.suite);
  if (o.threads == 0) throw UsageError("--threads must be positive");
  if (!o.type.empty() && o.type != "A" && o.type != "B") throw UsageError("--type must be A or B");
  auto ctx = std::make_shared<Context>();
  ctx->opts = o;
  std::vector<Task> tasks;
  bool all = o.suite == "all";
  if (all || o.suite == "descent") plan_descent(ctx, tasks);
  if (all || o.suite == "tits") plan_tits(ctx, tasks);
  if (all || o.suite == "clifford-b") plan_clifford(ctx, tasks);
  if (all || o.suite == "symbols") plan_symbols(ctx, tasks);
  if (all || o.suite == "crg") plan_crg(ctx, tasks);
  if (all || o.suite == "torus") plan_torus(ctx, tasks);
  return tasks;
}

Report run(const Options& o) {
  std::vector<Task> tasks = plan(o);
  std::vector<std::vector<CheckResult>> results(tasks.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i; (i = next.fetch_add(1)) < tasks.size();) {
      auto t0 = std::chrono::steady_clock::now();
      try {
        results[i] = tasks[i].run();
      } catch (const std::exception& e) {
        results[i] = {check(tasks[i].key, json::object(), false, {{"error", e.what()}})};
      }
      double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
      for (auto& c : results[i]) c.elapsed_ms = ms / static_cast<double>(results[i].size());
    }
  };
  size_t n = std::min<size_t>(o.threads, std::max<size_t>(tasks.size(), 1));
  std::vector<std::thread> pool;
  for (size_t i = 1; i < n; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  Report r;
  r.options = o;
  for (auto& v : results)
    for (auto& c : v) {
      r.pass += c.status == "pass";
      r.fail += c.status == "fail";
      r.skipped += c.status == "skipped";
      r.checks.push_back(std::move(c));
    }
  return r;
}

json to_json(const Report& r, bool with_timing) {
  const Options& o = r.options;
  json params{{"suite", o.suite}, {"seed", o.seed}, {"threads", o.threads}};
  auto opt = [&](const char* k, const std::optional<uint32_t>& v) {
    if (v) params[k] = *v;
  };
  if (!o.type.empty()) params["type"] = o.type;
  opt("rank", o.rank);
  opt("d", o.d);
  opt("q", o.q);
  opt("m", o.m);
  opt("table", o.table);
  opt("row", o.row);
  opt("max_rank", o.max_rank);
  if (!o.case_name.empty()) params["case"] = o.case_name;
  json checks = json::array();
  for (const auto& c : r.checks) {
    json j{{"id", c.id}, {"params", c.params}, {"status", c.status}, {"witness", c.witness}};
    if (c.status == "skipped") j["reason"] = c.reason;
    if (with_timing) j["elapsed_ms"] = c.elapsed_ms;
    checks.push_back(std::move(j));
  }
  return {{"schema_version", kReportSchemaVersion},
          {"tool", "verify"},
          {"version", kToolVersion},
          {"params", params},
          {"checks", checks},
          {"summary", {{"total", r.checks.size()}, {"pass", r.pass}, {"fail", r.fail}, {"skipped", r.skipped}}}};
}

namespace {

std::string md_cell(const std::string& s) {
  std::string r;
  for (char ch : s) {
    if (ch == '|') r += '\\';
    r += ch == '\n' ? ' ' : ch;
  }
  return r;
}

std::string witness_text(const CheckResult& c) {
  if (c.status == "skipped") return c.reason;
  if (c.witness.is_null()) return "";
  if (c.witness.is_string()) return c.witness.get<std::string>();
  if (c.witness.is_object() && c.witness.contains("detail") && c.witness["detail"].is_string())
    return c.witness["detail"].get<std::string>();
  return c.witness.dump();
}

}  // namespace

std::string to_markdown(const Report& r) {
  std::ostringstream md;
  md << "# Verification report\n\n";
  md << "suite `" << r.options.suite << "`, seed " << r.options.seed << ", threads " << r.options.threads << "\n\n";
  md << "**" << r.pass << " pass, " << r.fail << " fail, " << r.skipped << " skipped** of " << r.checks.size()
     << " checks\n\n";
  md << "| id | status | witness |\n|---|---|---|\n";
  for (const auto& c : r.checks) md << "| " << c.id << " | " << c.status << " | " << md_cell(witness_text(c)) << " |\n";
  for (int t : {1, 2}) {
    std::string prefix = "table" + std::to_string(t) + "-row";
    bool any = false;
    for (const auto& c : r.checks) any = any || c.id.rfind(prefix, 0) == 0;
    if (!any) continue;
    md << "\n## Table " << t << "\n\n";
    md << "| No. | C(s) | d | W_s~ | W_s | K_s | computed orders | method | status |\n"
          "|---|---|---|---|---|---|---|---|---|\n";
    for (const auto& c : r.checks) {
      if (c.id.rfind(prefix, 0) != 0 || !c.witness.is_object()) continue;
      const json& w = c.witness;
      md << "| " << c.params["row"] << " | " << w["centralizer"].get<std::string>() << " | " << w["d"].get<std::string>()
         << " | " << w["Ws_tilde"].get<std::string>() << " | " << w["Ws"].get<std::string>() << " | "
         << w["Ks"].get<std::string>() << " | " << w["computed"]["Ws_tilde"] << ", " << w["computed"]["Ws"] << ", "
         << w["computed"]["Ks"] << (w["Ks_mismatch"].get<bool>() ? " (K_s differs)" : "") << " | "
         << w["method"].get<std::string>() << " | " << c.status << " |\n";
    }
  }
  return md.str();
}

}  // namespace mckay
