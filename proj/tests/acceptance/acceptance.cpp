// Runs the eleven acceptance criteria and prints one PASS/FAIL line each.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "mh/blocks.hpp"
#include "mh/catalog.hpp"
#include "mh/harness.hpp"
#include "mh/lemma_suites.hpp"
#include "mh/partition.hpp"
#include "oracles.hpp"

using namespace mh;

namespace {

struct Outcome
{
  bool passed = false;
  std::string detail;
};

std::string suite_detail(std::vector<SuiteResult> const &results)
{
  std::ostringstream s;
  for (auto const &r : results) {
    s << r.name << ' ' << (r.cases.size() - r.failures()) << '/' << r.cases.size() << ' ';
    for (auto const &c : r.cases)
      if (!c.passed)
        std::cerr << "  " << r.name << ": " << c.instance << ' ' << c.detail << '\n';
  }
  auto out = s.str();
  if (!out.empty())
    out.pop_back();
  return out;
}

Outcome suites_pass(std::vector<std::string> const &names)
{
  std::vector<SuiteResult> results;
  bool ok = true;
  for (auto const &n : names) {
    results.push_back(run_suite(n));
    ok = ok && results.back().passed();
  }
  return {ok, suite_detail(results)};
}

bool has(EmRun const &run, std::string const &name, std::uint64_t p)
{
  return std::any_of(run.reports.begin(), run.reports.end(), [&](EmReport const &r) {
    return r.name == name && r.p == p && r.hypothesis_holds && r.theorem_holds == true;
  });
}

Outcome criterion1()
{
  std::size_t groups = 0, bad = 0;
  for (auto const &e : builtin_catalog()) {
    if (*e.expected_order > 2000)
      continue;
    ++groups;
    auto const t = character_table(build_validated(e));
    auto const r = verify_orthogonality(t);
    if (!r.ok()) {
      ++bad;
      std::cerr << "  orthogonality fails for " << e.name << '\n';
    }
  }
  return {groups >= 50 && bad == 0,
          std::to_string(groups) + " groups of order <= 2000, " + std::to_string(bad) +
              " failures"};
}

Outcome criterion2(EmRun const &run)
{
  std::size_t instances = 0, held = 0, inequality = 0;
  for (auto const &r : run.reports) {
    if (r.hypothesis_holds) {
      ++instances;
      held += r.theorem_holds == true;
    }
    inequality += r.mh_inequality();
  }
  std::vector<std::pair<std::string, std::uint64_t>> required{
      {"sym4", 2},           {"sl2_3", 2},          {"dihedral8", 2},
      {"quaternion8", 2},    {"extraspecial_3_plus", 3}, {"extraspecial_3_minus", 3},
      {"extraspecial_5_plus", 5}, {"extraspecial_5_minus", 5}, {"c2_wr_s3", 2},
      {"c3_wr_c3", 3},       {"agl2_3", 3},         {"asl2_3", 2}};
  std::size_t missing = 0;
  for (auto const &[n, p] : required)
    if (!has(run, n, p)) {
      ++missing;
      std::cerr << "  required instance missing or failing: " << n << " p=" << p << '\n';
    }
  for (auto const &e : run.errors)
    std::cerr << "  error: " << e << '\n';
  bool const ok = instances >= 30 && held == instances && inequality == run.reports.size() &&
                  missing == 0 && run.errors.empty();
  return {ok, std::to_string(held) + "/" + std::to_string(instances) +
                  " hypothesis instances with a witness, mh_B0 <= mh_P in " +
                  std::to_string(inequality) + "/" + std::to_string(run.reports.size())};
}

Outcome criterion3(EmRun const &run)
{
  std::size_t solvable = 0, good = 0;
  for (auto const &r : run.reports)
    if (r.solvable && r.hypothesis_holds) {
      ++solvable;
      good += r.theorem_holds == true && r.witness_in_p_prime_quotient == true;
    }
  auto suite = suites_pass({"solvable_witness"});
  return {solvable > 0 && good == solvable && suite.passed,
          std::to_string(good) + "/" + std::to_string(solvable) +
              " solvable instances with witness in Irr(G/O_p'(G)); " + suite.detail};
}

Outcome criterion4(EmRun const &run)
{
  std::size_t abelian = 0, zero = 0;
  for (auto const &r : run.reports)
    if (r.order <= 2000 && r.cd_P == std::vector<std::uint64_t>{1}) {
      ++abelian;
      zero += r.abelian_sylow_heights_zero == true;
    }
  return {abelian > 0 && zero == abelian,
          std::to_string(zero) + "/" + std::to_string(abelian) +
              " abelian-Sylow pairs with all heights zero in B0"};
}

Outcome criterion5()
{
  // direct block checks against integer central characters
  auto blocks_of = [](PermGroup const &G, std::uint64_t p) {
    auto const t = character_table(G);
    return std::pair{t, block_distribution(t, p)};
  };
  bool direct = true;
  {
    auto const [t, b] = blocks_of(groups::sym(3), 2);
    auto two = std::find(t.degrees().begin(), t.degrees().end(), 2u) - t.degrees().begin();
    direct = direct && b.count() == 2 && b.blocks[b.block_of[two]].size() == 1 &&
             b.defect[b.block_of[two]] == 0;
  }
  direct = direct && blocks_of(groups::sym(3), 3).second.count() == 1;
  direct = direct && blocks_of(groups::sym(4), 2).second.count() == 1;
  auto suites = suites_pass({"blocks", "principal_cover", "constrained_blocks"});
  return {direct && suites.passed,
          std::string(direct ? "S3/2, S3/3, S4/2 block counts ok; " : "block counts wrong; ") +
              suites.detail};
}

Outcome criterion8()
{
  auto suite = suites_pass({"hook_partitions"});
  std::size_t checked = 0, bad = 0;
  for (unsigned n = 1; n <= 12; ++n)
    for (auto const &lambda : partitions_of(n)) {
      ++checked;
      if (lambda.hook_degree() != oracle::count_standard_tableaux(lambda.parts())) {
        ++bad;
        std::cerr << "  hook formula disagrees on " << lambda.to_string() << '\n';
      }
    }
  return {suite.passed && bad == 0, suite.detail + "; hook degree = #SYT on " +
                                        std::to_string(checked) + " partitions"};
}

Outcome criterion11(EmRun const &serial)
{
  EmOptions o;
  o.jobs = 4;
  auto const parallel = run_em(builtin_catalog(), o);
  auto const a = reports_to_json(serial.reports);
  auto const b = reports_to_json(parallel.reports);
  return {a == b, std::to_string(a.size()) + " bytes, serial and 4 workers " +
                      (a == b ? "identical" : "differ")};
}

} // namespace

int main()
{
  using clock = std::chrono::steady_clock;
  int failed = 0;
  auto report = [&](int k, std::string const &title, std::function<Outcome()> const &f) {
    auto const start = clock::now();
    Outcome o;
    try {
      o = f();
    } catch (std::exception const &e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double const secs = std::chrono::duration<double>(clock::now() - start).count();
    std::printf("%s criterion %2d  %-28s %s [%.2fs]\n", o.passed ? "PASS" : "FAIL", k,
                title.c_str(), o.detail.c_str(), secs);
    std::fflush(stdout);
    failed += !o.passed;
  };

  EmRun serial;
  report(1, "character tables", criterion1);
  report(2, "principal block witnesses", [&] {
    serial = run_em(builtin_catalog(), EmOptions{});
    return criterion2(serial);
  });
  report(3, "solvable case", [&] { return criterion3(serial); });
  report(4, "abelian Sylow heights", [&] { return criterion4(serial); });
  report(5, "blocks", criterion5);
  report(6, "p-concealed groups", [] { return suites_pass({"concealed_groups", "concealed_characters"}); });
  report(7, "p-exceptional modules", [] { return suites_pass({"exceptional_modules"}); });
  report(8, "hook partitions", criterion8);
  report(9, "regular partitions", [] { return suites_pass({"regular_partitions"}); });
  report(10, "Sylow intersections", [] { return suites_pass({"sylow_intersections"}); });
  report(11, "determinism", [&] { return criterion11(serial); });

  std::printf("%d of 11 criteria failed\n", failed);
  return failed ? 1 : 0;
}
