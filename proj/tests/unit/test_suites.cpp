#include "doctest.h"
#include <set>

#include "mckay/suites.hpp"

using namespace mckay;

TEST_CASE("suite planning rejects bad parameters") {
  Options o;
  o.suite = "nope";
  CHECK_THROWS_AS(plan(o), UsageError);
  o.suite = "crg";
  o.case_name = "e8";
  CHECK_THROWS_AS(plan(o), UsageError);
  o.case_name.clear();
  o.table = 3;
  CHECK_THROWS_AS(plan(o), UsageError);
  o = Options{};
  o.suite = "tits";
  o.q = 12;
  CHECK_THROWS_AS(plan(o), UsageError);
  o.q = 5;
  o.rank = 7;
  CHECK_THROWS_AS(plan(o), UsageError);
  o = Options{};
  o.suite = "symbols";
  o.max_rank = 20;
  CHECK_THROWS_AS(plan(o), UsageError);
  o = Options{};
  o.threads = 0;
  CHECK_THROWS_AS(plan(o), UsageError);
}

TEST_CASE("symbols suite report") {
  Options o;
  o.suite = "symbols";
  o.max_rank = 5;
  Report r = run(o);
  CHECK(r.fail == 0);
  CHECK(r.pass + r.fail + r.skipped == r.checks.size());
  auto j = to_json(r);
  CHECK(j["schema_version"] == kReportSchemaVersion);
  CHECK(j["summary"]["total"] == r.checks.size());
  CHECK(j["checks"][0].contains("elapsed_ms"));
  CHECK_FALSE(to_json(r, false)["checks"][0].contains("elapsed_ms"));
  std::set<std::string> ids;
  for (const auto& c : r.checks) ids.insert(c.id);
  CHECK(ids.size() == r.checks.size());
  CHECK(ids.count("symbols/D4-count"));
  // reruns and thread counts give the same canonical report
  Options o4 = o;
  o4.threads = 4;
  Report r2 = run(o), r4 = run(o4);
  CHECK(to_json(r, false).dump() == to_json(r2, false).dump());
  CHECK(to_json(r, false)["checks"] == to_json(r4, false)["checks"]);
}

TEST_CASE("crg rows in markdown") {
  Options o;
  o.suite = "crg";
  o.table = 1;
  o.row = 8;
  Report r = run(o);
  REQUIRE(r.checks.size() == 1);
  CHECK(r.checks[0].id == "table1-row8");
  CHECK(r.checks[0].status == "pass");
  std::string md = to_markdown(r);
  CHECK(md.find("## Table 1") != std::string::npos);
  CHECK(md.find("G(4,2,2).3") != std::string::npos);
}

TEST_CASE("tits suite on one case") {
  Options o;
  o.suite = "tits";
  o.rank = 2;
  o.d = 4;
  o.q = 5;
  Report r = run(o);
  CHECK(r.fail == 0);
  bool eq105 = false;
  for (const auto& c : r.checks) eq105 = eq105 || c.id == "tits/B2/q5/d4/eq10.5";
  CHECK(eq105);
  o.q = 7;  // no 4th root of unity
  Report s = run(o);
  CHECK(s.skipped == 1);
  CHECK_FALSE(s.checks.back().reason.empty());
}
