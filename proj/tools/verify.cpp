#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "mckay/suites.hpp"

int main(int argc, char** argv) {
  mckay::Options o;
  std::string out, format = "json";
  CLI::App app{"Exact finite verification suites"};
  app.add_option("suite", o.suite, "descent, tits, clifford-b, symbols, crg, torus or all")
      ->check(CLI::IsMember(mckay::suite_names()));
  app.add_option("--type", o.type, "root system type for tits / clifford-b (A or B)");
  app.add_option("--rank", o.rank, "rank l");
  app.add_option("--d", o.d, "d (divisor of 2l for type B)");
  app.add_option("--q", o.q, "field size (tits, clifford-b) or base prime q1 (descent)");
  app.add_option("--m", o.m, "descent degree m, or cyclic order m for the wreath grid");
  app.add_option("--threads", o.threads, "worker threads")->check(CLI::PositiveNumber);
  app.add_option("--seed", o.seed, "seed for randomized sub-tests");
  app.add_option("--out", out, "report path (default: stdout)");
  app.add_option("--format", format, "json or md")->check(CLI::IsMember({"json", "md"}));
  app.add_option("--case", o.case_name, "crg: e7-d4, tables or groups");
  app.add_option("--table", o.table, "crg: table 1 or 2");
  app.add_option("--row", o.row, "crg: row of the table");
  app.add_option("--max-rank", o.max_rank, "symbols: largest rank");
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  mckay::Report report;
  try {
    // reject bad parameters and paths before any work
    mckay::plan(o);
    if (!out.empty()) {
      std::ofstream probe(out, std::ios::app);
      if (!probe) throw mckay::UsageError("cannot write " + out);
    }
    report = mckay::run(o);
  } catch (const mckay::UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  }

  std::string text = format == "json" ? mckay::to_json(report).dump(2) + "\n" : mckay::to_markdown(report);
  if (out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out, std::ios::trunc);
    f << text;
    if (!f) {
      std::cerr << "error: failed writing " << out << "\n";
      return 2;
    }
  }
  std::cerr << report.pass << " pass, " << report.fail << " fail, " << report.skipped << " skipped\n";
  return report.fail ? 1 : 0;
}
