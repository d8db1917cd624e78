#include <cstdlib>

#include <gtest/gtest.h>

#include "json.hpp"
#include "mh/catalog.hpp"
#include "mh/errors.hpp"
#include "mh/group_io.hpp"
#include "mh/harness.hpp"
#include "mh/lemma_suites.hpp"

using namespace mh;
using namespace mh::groups;

namespace {

std::vector<CatalogEntry> small_catalog()
{
  std::vector<CatalogEntry> out;
  for (auto const &e : builtin_catalog())
    if (*e.expected_order <= 200)
      out.push_back(e);
  return out;
}

} // namespace

TEST(Hypothesis, Examples)
{
  EXPECT_EQ(check_hypothesis(sym(4), 2), (std::pair{true, std::optional<unsigned>{1}}));
  auto c12 = check_hypothesis(cyclic(12), 2);
  EXPECT_FALSE(c12.first);
  EXPECT_FALSE(c12.second);
  // a Sylow 3-subgroup of Sym(9) is C3 wr C3, whose abelian base has index 3
  EXPECT_EQ(check_hypothesis(sym(9), 3), (std::pair{true, std::optional<unsigned>{1}}));
  EXPECT_EQ(check_hypothesis(wreath(cyclic(3), cyclic(3)), 3),
            (std::pair{true, std::optional<unsigned>{1}}));
  // cd(Q16) = {1, 2}, cd(C2 wr C2 wr C2) = {1, 2, 4}
  EXPECT_TRUE(check_hypothesis(quaternion(16), 2).first);
  EXPECT_FALSE(check_hypothesis(wreath(wreath(cyclic(2), cyclic(2)), cyclic(2)), 2).first);
}

TEST(MinimalHeights, Examples)
{
  auto s4 = check_minimal_heights("sym4", sym(4), 2);
  EXPECT_TRUE(s4.hypothesis_holds);
  EXPECT_EQ(s4.witness_degree, 2u);
  EXPECT_EQ(s4.mh_B0, 1u);
  EXPECT_EQ(s4.mh_P, 1u);
  EXPECT_EQ(s4.theorem_holds, true);
  EXPECT_TRUE(s4.passed());

  auto d8 = check_minimal_heights("dihedral8", dihedral(8), 2);
  EXPECT_EQ(d8.witness_degree, 2u);
  EXPECT_TRUE(d8.em_equality_observed);
  EXPECT_EQ(d8.block_count, 1u);

  auto sl = check_minimal_heights("sl2_3", load_perm_group(fixture_dir() / "sl2_3.pgrp"), 2);
  EXPECT_EQ(sl.witness_degree, 2u);
  EXPECT_EQ(sl.mh_B0, 1u);
  EXPECT_EQ(sl.mh_P, 1u);
  EXPECT_EQ(sl.witness_in_p_prime_quotient, true);

  auto a5 = check_minimal_heights("alt5", alt(5), 5);
  EXPECT_FALSE(a5.hypothesis_holds);
  EXPECT_FALSE(a5.theorem_holds);
  EXPECT_EQ(a5.abelian_sylow_heights_zero, true);
  EXPECT_TRUE(a5.mh_inequality());
}

TEST(Report, MhInequalityTreatsNulloptAsInfinity)
{
  EmReport r;
  EXPECT_TRUE(r.mh_inequality());
  r.mh_P = 1;
  EXPECT_FALSE(r.mh_inequality());
  r.mh_B0 = 1;
  EXPECT_TRUE(r.mh_inequality());
  r.mh_P.reset();
  EXPECT_TRUE(r.mh_inequality());
}

TEST(Report, JsonRoundTrip)
{
  EmOptions o;
  auto run = run_em(small_catalog(), o);
  ASSERT_FALSE(run.reports.empty());
  auto text = reports_to_json(run.reports);
  auto back = reports_from_json(text);
  ASSERT_EQ(back.size(), run.reports.size());
  EXPECT_EQ(reports_to_json(back), text);

  auto j = nlohmann::json::parse(text);
  EXPECT_EQ(j["schema_version"], report_schema_version);
  EXPECT_FALSE(j["reports"][0].contains("elapsed_ms"));
  j["schema_version"] = 99;
  EXPECT_THROW(reports_from_json(j.dump()), InvalidArgument);
  EXPECT_THROW(reports_from_json("[1,2]"), InvalidArgument);
}

TEST(Report, CsvHasOneLinePerReport)
{
  auto run = run_em(small_catalog(), {});
  auto csv = reports_to_csv(run.reports);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), std::ptrdiff_t(run.reports.size() + 1));
  EXPECT_EQ(csv.rfind("name,order,p,", 0), 0u);
}

TEST(Harness, EnvironmentOverrides)
{
  EmOptions o;
  setenv("EM_MAX_ORDER", "500", 1);
  setenv("EM_JOBS", "3", 1);
  apply_environment(o);
  EXPECT_EQ(o.max_order, 500u);
  EXPECT_EQ(o.jobs, 3u);
  setenv("EM_JOBS", "three", 1);
  EXPECT_THROW(apply_environment(o), InvalidArgument);
  unsetenv("EM_MAX_ORDER");
  unsetenv("EM_JOBS");
  EmOptions d;
  apply_environment(d);
  EXPECT_EQ(d.max_order, 20000u);
  EXPECT_EQ(d.jobs, 1u);
}

TEST(Harness, RunIsDeterministicAcrossJobCounts)
{
  auto c = small_catalog();
  EmOptions serial, parallel;
  parallel.jobs = 3;
  EXPECT_EQ(reports_to_json(run_em(c, serial).reports),
            reports_to_json(run_em(c, parallel).reports));
}

TEST(Harness, SkipsAndCollectsErrors)
{
  std::vector<CatalogEntry> c{
      {"sym4", [] { return sym(4); }, 24, {}},
      {"sym7", [] { return sym(7); }, 5040, {}},
      {"broken", [] { return sym(3); }, 5, {}},
  };
  EmOptions o;
  o.max_order = 1000;
  o.prime = 2;
  auto run = run_em(c, o);
  EXPECT_EQ(run.skipped, std::vector<std::string>{"sym7"});
  ASSERT_EQ(run.errors.size(), 1u);
  EXPECT_EQ(run.errors[0].rfind("broken", 0), 0u);
  ASSERT_EQ(run.reports.size(), 1u);
  EXPECT_EQ(run.reports[0].p, 2u);
  EXPECT_FALSE(run.passed());
}

TEST(Suites, NamesAndUnknown)
{
  EXPECT_EQ(suite_names().size(), 14u);
  EXPECT_THROW(run_suite("nonsense"), InvalidArgument);
  auto r = run_suite("blocks");
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.cases.size(), 3u);
}
