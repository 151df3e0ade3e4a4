// One line per acceptance criterion; exit status 1 if any fails.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "mckay/crg.hpp"
#include "mckay/rootweyl.hpp"
#include "mckay/symbols.hpp"
#include "mckay/tits.hpp"
#include "mckay/torus.hpp"
#include "mckay/wreath.hpp"

using namespace mckay;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream note;
  void require(bool c, const std::string& what) {
    if (!c) {
      ok = false;
      note << " [failed: " << what << "]";
    }
  }
};

std::vector<uint32_t> divisors(uint32_t n) {
  std::vector<uint32_t> v;
  for (uint32_t d = 1; d <= n; ++d)
    if (n % d == 0) v.push_back(d);
  return v;
}

struct TitsCase {
  uint32_t l, q, d;
  std::shared_ptr<TitsGroup> T;
  SectionElements s;
};

std::vector<TitsCase>& tits_cases() {
  static std::vector<TitsCase> cases = [] {
    std::vector<TitsCase> v;
    for (uint32_t l : {2u, 3u, 4u})
      for (uint32_t q : {5u, 17u}) {
        auto T = std::make_shared<TitsGroup>(tits_group(build_chevrep('B', l, q)));
        for (uint32_t d : divisors(2 * l)) v.push_back({l, q, d, T, build_section_elements(*T, d)});
      }
    return v;
  }();
  return cases;
}

void c1(Outcome& o) {
  size_t identities = 0;
  const std::set<std::string> required{"eq10.1", "eq10.3hicj", "eq10.4", "eq10.5", "eq10.pk2", "hk^v", "Hd structure", "braid"};
  for (auto& c : tits_cases()) {
    std::set<std::string> seen;
    for (const auto& r : verify_relation_catalog(*c.T, c.s)) {
      seen.insert(r.label);
      ++identities;
      o.require(r.ok, "B" + std::to_string(c.l) + " q=" + std::to_string(c.q) + " d=" + std::to_string(c.d) + " " + r.label);
    }
    for (const auto& l : required) o.require(seen.count(l) > 0, "missing " + l);
  }
  o.note << tits_cases().size() << " (l, q, d) cases, " << identities << " catalog checks";
}

void c2(Outcome& o) {
  for (auto& c : tits_cases())
    o.require(check_rhoVd_equals_Wd(*c.T, c.s), "B" + std::to_string(c.l) + " d=" + std::to_string(c.d));
  o.note << tits_cases().size() << " cases";
}

void c3(Outcome& o) {
  size_t fa = 0, fb = 0;
  for (auto& c : tits_cases()) {
    Prop108Report r = check_Hd_Vd_extendibility(*c.T, c.s);
    std::string tag = "B" + std::to_string(c.l) + " q=" + std::to_string(c.q) + " d=" + std::to_string(c.d);
    o.require(r.all_extend, tag + " extendibility");
    o.require(r.parity_a && r.parity_b && r.intersection_a, tag + " parity");
    fa += r.fired_a;
    fb += r.fired_b;
  }
  o.require(fa > 0 && fb > 0, "parity hypotheses never fired");
  o.note << "parity (a) fired " << fa << " times, (b) " << fb << " times";
}

void c4(Outcome& o) {
  size_t n = 0;
  for (uint32_t e : {0u, 1u}) {
    o.require(descent_fixed_count_check(3, 1, 2, e).equal(), "SL2(9) tF1, det_log " + std::to_string(e));
    ++n;
  }
  for (auto [p, m] : std::vector<std::pair<uint32_t, uint32_t>>{{3, 2}, {2, 2}, {2, 3}}) {
    std::string tag = "q1=" + std::to_string(p) + " m=" + std::to_string(m);
    o.require(descent_group_invariant_check(p, 1, m).equal(), "group invariant " + tag);
    o.require(shintani_count_check(p, 1, m, false).equal(), "Shintani SL2 " + tag);
    o.require(shintani_count_check(p, 1, m, true).equal(), "Shintani GL2 " + tag);
    n += 3;
  }
  o.note << n << " count equalities";
}

void c5(Outcome& o) {
  GammaDescent g = gl3_gamma_descent();
  o.require(g.left == g.right, "counts differ");
  o.require(g.m_c == 0, "m_c != 0");
  o.require(g.ok(), "extension check");
  o.note << "|Irr(GL3(4))^<Frob2,gamma>| = " << g.left << " = |Irr(GL3(2))^gamma|, m_c = " << g.m_c;
}

void c6(Outcome& o) {
  auto inst = onxy_instances();
  o.require(inst.size() >= 20, "fewer than 20 instances");
  for (const auto& c : inst) {
    o.require(c.X.order() <= 2000, c.name + " too large");
    o.require(coset_basis_counts(c.X, c.Y, c.x).equal(), c.name);
  }
  o.note << inst.size() << " instances";
}

void c7(Outcome& o) {
  size_t cases = 0;
  for (uint32_t m : {2u, 3u, 4u, 6u})
    for (uint32_t n = 1; n <= (m == 2 ? 4u : 3u); ++n) {
      WreathGridResult r = wreath_grid(m, n);
      o.require(r.fails == 0 && r.holds > 0, "C" + std::to_string(m) + " n=" + std::to_string(n));
      cases += r.holds;
    }
  o.note << cases << " (X0, K) cases hold";
}

void c8(Outcome& o) {
  o.require(unipotent_count("B", 2) == 6, "#(rank 2, odd defect) = 6");
  o.require(enumerate_symbols(2, [](int d) { return d == 1; }).size() == bipartition_count(2), "defect 1 vs bipartitions");
  o.require(unipotent_count("D", 4) == 14, "D4 count 14");
  StarReport s = star_bijection_check(8);
  o.require(s.rank_preserving && s.involution && s.exchanges_classes && s.bijective, "star bijection");
  for (int l = 2; l <= 8; ++l) o.require(unipotent_count("2D", l) == unifix_count_check("2D", l).fixed_untwisted, "counts");
  TrialityReport t = triality_report();
  bool listed = false;
  for (const auto& c : t.candidates) listed = listed || (c.fixed == 8 && c.consistent);
  o.require(t.expected == 8 && listed && t.action_open, "triality report");
  o.note << "star bijection checked on " << s.checked << " symbols; triality expected 8, action open";
}

void c9(Outcome& o) {
  o.require(build_crg("G8").G.order() == 96, "|G8|");
  o.require(build_crg("G26").G.order() == 1296, "|G26|");
  E7D4Report e = e7_d4_analysis();
  std::multiset<std::string> got(e.labels.begin(), e.labels.end());
  std::multiset<std::string> want{"C2", "C2xC2", "C4", "C2xC4", "C4xC4", "G(2,1,2)", "G(4,2,2)", "G(4,1,2)", "G8"};
  o.require(e.nontrivial_classes == 9 && got == want, "nine classes");
  o.require(e.g412_self_normalizing && e.g8_self_normalizing, "self-normalizing");
  o.require(e.c4c4_normalizer_index == 2, "[N(C4xC4) : C4xC4] = 2");
  o.require(e.g212_pattern, "G(2,1,2) pattern");
  o.require(e.c2c2_pattern, "C2xC2 pattern");
  o.note << "nine classes, " << e.nonabelian_normalizer.size() << " with non-abelian normalizer";
}

void c10(Outcome& o) {
  std::set<std::pair<int, int>> constructed{{1, 2}, {1, 6}, {1, 8}, {1, 10}, {2, 2}, {2, 3}};
  size_t n = 0, flagged = 0;
  for (int t : {1, 2})
    for (const auto& tr : table_rows(t)) {
      RowReport r = verify_table_row(t, tr.row);
      std::string tag = "table " + std::to_string(t) + " row " + std::to_string(tr.row);
      ++n;
      flagged += r.k_mismatch;
      if (constructed.count({t, tr.row})) {
        o.require(r.method == "constructed" && r.matches > 0, tag + " constructed");
        o.require(r.dagger_i, tag + " (i)");
        if (t == 1) o.require(r.dagger_ii, tag + " (ii)");
      } else if (!tr.observation.empty()) {
        o.require(r.observation_holds, tag + " observation " + tr.observation);
      }
      o.require(r.status == "pass", tag);
    }
  o.note << n << " rows; " << flagged << " rows with printed K_s smaller than the computed normalizer";
}

void c11(Outcome& o) {
  RootDatum E7 = root_datum('E', 7);
  IVec b1{0, 0, 0, 0, 0, 0, 1}, b2{0, 1, 1, 2, 2, 2, 1}, b3{2, 2, 3, 4, 3, 2, 1};
  auto a = [](int i) {
    IVec v(7, 0);
    v[i - 1] = 1;
    return v;
  };
  o.require(E7.is_root(b1) && E7.is_root(b2) && E7.is_root(b3), "betas are roots");
  o.require(E7.inner(b1, b2) == 0 && E7.inner(b1, b3) == 0 && E7.inner(b2, b3) == 0, "orthogonal");
  o.require(coroot_mod2(E7, {a(2), a(5)}) == coroot_mod2(E7, {b2, b3}), "z1");
  o.require(coroot_mod2(E7, {a(2), a(3)}) == coroot_mod2(E7, {b1, b2}), "z2");
  o.require(coroot_mod2(E7, {a(2), a(5), a(7)}) == coroot_mod2(E7, {b1, b2, b3}), "z3");
  o.note << "z1, z2, z3 mod 2";
}

void c12(Outcome& o) {
  for (const char* t : {"E6", "2E6", "E7"}) {
    o.require(order_polynomial(t) == embedded_order_polynomial(t), std::string("order polynomial ") + t);
    auto supp = cyclotomic_support(order_polynomial(t));
    auto reg = regular_numbers(t);
    std::set<uint32_t> non;
    for (uint32_t d : supp)
      if (!reg.count(d)) non.insert(d);
    o.require(non == embedded_nonregular(t), std::string("non-regular ") + t);
  }
  o.require(regular_numbers_by_search("E6") == regular_numbers("E6"), "E6 by search");
  for (uint32_t l = 2; l <= 6; ++l) {
    auto div = divisors(2 * l);
    o.require(regular_numbers("B" + std::to_string(l)) == std::set<uint32_t>(div.begin(), div.end()),
              "B" + std::to_string(l) + " regular");
    IntPoly f{1};
    for (uint32_t i = 1; i <= l; ++i) {
      IntPoly g(2 * i + 1, 0);
      g[0] = -1;
      g[2 * i] = 1;
      f = poly_mul(f, g);
    }
    o.require(order_polynomial("B" + std::to_string(l)).expand() == f, "B" + std::to_string(l) + " order");
    IntPoly h{1};
    for (uint32_t i = 2; i <= l + 1; ++i) {
      IntPoly g(i + 1, 0);
      g[0] = -1;
      g[i] = 1;
      h = poly_mul(h, g);
    }
    o.require(order_polynomial("A" + std::to_string(l)).expand() == h, "A" + std::to_string(l) + " order");
  }
  o.note << "E6, 2E6, E7 embedded data; B2..B6, A2..A6";
}

std::string verify_path;

nlohmann::json run_verify(const std::string& args, const std::string& out) {
  std::string cmd = "\"" + verify_path + "\" " + args + " --format json --out " + out + " 2>/dev/null";
  int rc = std::system(cmd.c_str());
  if (rc == -1) throw std::runtime_error("cannot run " + verify_path);
  std::ifstream f(out);
  return nlohmann::json::parse(f);
}

void c13(Outcome& o) {
  if (verify_path.empty()) {
    o.require(false, "path of the verify binary not given");
    return;
  }
  auto a = run_verify("all --seed 11 --threads 1", "acceptance_run_a.json");
  auto b = run_verify("all --seed 11 --threads 1", "acceptance_run_b.json");
  auto c = run_verify("all --seed 11 --threads 4", "acceptance_run_c.json");
  auto statuses = [](const nlohmann::json& r) {
    std::vector<std::pair<std::string, std::string>> v;
    for (const auto& x : r["checks"]) v.push_back({x["id"], x["status"]});
    return v;
  };
  auto strip = [](nlohmann::json r) {
    for (auto& x : r["checks"]) x.erase("elapsed_ms");
    return r.dump();
  };
  o.require(!statuses(a).empty(), "empty report");
  o.require(statuses(a) == statuses(b), "same seed, different statuses");
  o.require(strip(a) == strip(b), "same seed, JSON differs beyond elapsed_ms");
  o.require(statuses(a) == statuses(c), "threads 1 vs 4 differ");
  o.note << statuses(a).size() << " checks, " << a["summary"]["fail"] << " fail in the reference run";
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) verify_path = argv[1];
  struct Criterion {
    int n;
    const char* what;
    std::function<void(Outcome&)> run;
  };
  std::vector<Criterion> all{
      {1, "Tits relation catalog for B2-B4, all d | 2l, q = 5, 17", c1},
      {2, "rho(V_d) = W_d on the same grid", c2},
      {3, "maximal extendibility H_d in V_d and parity statements", c3},
      {4, "descent counts for SL2 and GL2", c4},
      {5, "GL3(4) gamma-descent", c5},
      {6, "coset triple equality on generated instances", c6},
      {7, "wreath product extendibility grid", c7},
      {8, "symbol counts, star bijection, triality report", c8},
      {9, "reflection groups G8, G26 and the E7 d = 4 analysis", c9},
      {10, "relative Weyl group tables", c10},
      {11, "E7 coroot identities mod 2", c11},
      {12, "order polynomials and regular numbers", c12},
      {13, "determinism across reruns and thread counts", c13},
  };
  int failed = 0;
  for (const auto& c : all) {
    Outcome o;
    auto t0 = std::chrono::steady_clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.ok = false;
      o.note << " [exception: " << e.what() << "]";
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    failed += !o.ok;
    std::printf("criterion %2d: %s  %s (%s) %.1fs\n", c.n, o.ok ? "PASS" : "FAIL", c.what, o.note.str().c_str(), s);
    std::fflush(stdout);
  }
  return failed ? 1 : 0;
}
