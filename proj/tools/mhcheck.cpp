#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "mh/blocks.hpp"
#include "mh/catalog.hpp"
#include "mh/errors.hpp"
#include "mh/group_io.hpp"
#include "mh/harness.hpp"
#include "mh/lemma_suites.hpp"
#include "mh/numtheory.hpp"
#include "mh/partition.hpp"
#include "mh/set_actions.hpp"

using namespace mh;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_failed = 1;
constexpr int exit_usage = 2;

std::string heights_text(std::optional<unsigned> const &h)
{
  return h ? std::to_string(*h) : "infinity";
}

void require_prime(std::uint64_t p)
{
  if (!is_prime(p))
    throw InvalidArgument(std::to_string(p) + " is not prime");
}

int cmd_chartab(std::string const &file, bool json)
{
  auto const G = load_perm_group(file);
  auto const t = character_table(G);
  if (json)
    std::cout << table_to_json(t, 2) << '\n';
  else
    std::cout << format_table(t);
  auto const check = verify_orthogonality(t);
  if (!check.ok()) {
    std::cerr << "orthogonality check failed\n";
    return exit_failed;
  }
  return exit_ok;
}

int cmd_blocks(std::string const &file, std::uint64_t p, bool json)
{
  require_prime(p);
  auto const G = load_perm_group(file);
  auto const t = character_table(G);
  auto const blocks = block_distribution(t, p);
  auto const P = sylow(G, p);
  auto const heights = height_profile(t, blocks, character_table(P, {P.order_u64(), 512}));
  if (json) {
    std::cout << blocks_to_json(t, blocks, heights, 2) << '\n';
    return exit_ok;
  }
  std::cout << "|G| = " << G.order() << ", p = " << p << ", |G|_p = p^" << blocks.a << '\n';
  for (std::size_t b = 0; b < blocks.count(); ++b) {
    std::cout << (b == blocks.principal_id ? "B0" : "B" + std::to_string(b)) << "  defect "
              << blocks.defect[b] << "  degrees";
    for (auto row : blocks.blocks[b])
      std::cout << ' ' << t.degree(row) << "[h" << heights.heights[row] << ']';
    std::cout << '\n';
  }
  return exit_ok;
}

int cmd_mh(std::string const &file, std::uint64_t p)
{
  require_prime(p);
  auto const G = load_perm_group(file);
  auto const r = check_minimal_heights(std::filesystem::path(file).stem().string(), G, p);
  std::cout << "|G| = " << r.order << ", |P| = " << r.sylow_order << ", cd(P) = {";
  for (std::size_t i = 0; i < r.cd_P.size(); ++i)
    std::cout << (i ? "," : "") << r.cd_P[i];
  std::cout << "}\n"
            << "mh(B0) = " << heights_text(r.mh_B0) << "\n"
            << "mh(P) = " << heights_text(r.mh_P) << '\n';
  if (r.hypothesis_holds) {
    std::cout << "cd(P) = {1,p^" << *r.a << "}: ";
    if (r.witness_degree)
      std::cout << "witness in B0 of degree " << *r.witness_degree << '\n';
    else
      std::cout << "NO witness in B0\n";
  } else {
    std::cout << "cd(P) does not have exactly two elements\n";
  }
  if (!r.passed()) {
    std::cerr << "verification failed for " << r.name << " at p = " << p << '\n';
    return exit_failed;
  }
  return exit_ok;
}

int cmd_concealed(std::string const &file, std::uint64_t p)
{
  require_prime(p);
  auto const H = load_perm_group(file);
  auto const r = is_p_concealed(H, p);
  std::cout << "p-concealed: " << (r.holds ? "yes" : "no") << '\n';
  if (!r.p_divides_order)
    std::cout << p << " does not divide |H| = " << H.order() << '\n';
  else if (r.offending) {
    std::vector<std::vector<Point>> parts(1);
    for (Point x = 0; x < H.degree(); ++x)
      if ((*r.offending >> x) & 1u)
        parts[0].push_back(x);
    std::cout << "subset " << OrderedSetPartition{H.degree(), parts}.to_string()
              << " has orbit size " << r.offending_orbit_size << '\n';
  }
  std::cout << r.orbit_count << " orbits on subsets\n";
  return exit_ok;
}

int cmd_exceptional(std::string const &file, std::uint64_t max_vectors)
{
  SpaceLimits const limits{max_vectors};
  auto const M = load_mat_group(file, MatParseOptions{true, limits});
  auto const r = is_p_exceptional(M, limits);
  std::cout << "p = " << M.prime() << ", |G| = " << r.order << '\n'
            << "p-exceptional: " << (r.holds ? "yes" : "no") << '\n'
            << "orbit sizes:";
  for (auto const &o : r.orbits)
    std::cout << ' ' << o.size;
  std::cout << '\n';
  if (r.offending)
    std::cout << "orbit of size divisible by p through vector code " << *r.offending << '\n';
  return exit_ok;
}

int cmd_hooks(unsigned n, unsigned p)
{
  auto const lambda = partition_with_p_part_p(n, p);
  auto const d = lambda.hook_degree();
  std::cout << "lambda = " << lambda.to_string() << ", degree " << d << ", " << p << "-part "
            << ipow(p, p_valuation(d, p)) << '\n';
  return exit_ok;
}

std::filesystem::path csv_path(std::filesystem::path out)
{
  return out.replace_extension(".csv");
}

int cmd_verify_em(std::string const &catalog_arg, std::optional<std::uint64_t> prime,
                  std::optional<std::uint64_t> max_order, std::optional<unsigned> jobs,
                  std::string const &out, bool large, bool timings)
{
  EmOptions options;
  if (large)
    options.max_order = 50000;
  apply_environment(options);
  if (max_order)
    options.max_order = *max_order;
  if (jobs)
    options.jobs = *jobs;
  if (prime) {
    require_prime(*prime);
    options.prime = prime;
  }
  options.timings = timings;

  auto const catalog = catalog_arg == "builtin" ? builtin_catalog() : directory_catalog(catalog_arg);
  auto const run = run_em(catalog, options);

  for (auto const &name : run.skipped)
    std::cerr << "skipped " << name << ": order above " << options.max_order << '\n';
  for (auto const &e : run.errors)
    std::cerr << "error: " << e << '\n';

  auto const json = reports_to_json(run.reports, timings);
  if (!out.empty()) {
    std::ofstream(out) << json;
    std::ofstream(csv_path(out)) << reports_to_csv(run.reports, timings);
  } else {
    std::cout << json;
  }

  std::size_t failed = 0;
  for (auto const &r : run.reports)
    if (!r.passed()) {
      ++failed;
      std::cerr << "FAILED " << r.name << " p=" << r.p << '\n';
    }
  std::cerr << run.reports.size() << " reports, " << run.hypothesis_count()
            << " with cd(P) = {1,p^a}, " << failed << " failed\n";
  return run.passed() ? exit_ok : exit_failed;
}

int cmd_verify_lemmas(std::string const &suite, bool large)
{
  SuiteOptions options;
  options.large = large;
  std::vector<std::string> names;
  if (suite == "all")
    names = suite_names();
  else
    names = {suite};
  bool all_passed = true;
  for (auto const &name : names) {
    auto const r = run_suite(name, options);
    for (auto const &c : r.cases)
      if (!c.passed)
        std::cout << "  FAIL " << c.instance << (c.detail.empty() ? "" : ": " + c.detail) << '\n';
    std::cout << (r.passed() ? "PASS " : "FAIL ") << name << " (" << r.cases.size()
              << " cases)\n";
    all_passed = all_passed && r.passed();
  }
  return all_passed ? exit_ok : exit_failed;
}

} // namespace

int main(int argc, char **argv)
{
  CLI::App app{"Character tables, p-blocks and minimal heights of finite groups"};
  app.require_subcommand(1);

  std::string file;
  std::uint64_t p = 0;
  bool json = false;

  auto *chartab = app.add_subcommand("chartab", "print the character table of a permutation group");
  chartab->add_option("FILE", file, "permutation group file")->required();
  chartab->add_flag("--json", json, "emit JSON");

  auto *blocks = app.add_subcommand("blocks", "p-block distribution with heights");
  blocks->add_option("FILE", file, "permutation group file")->required();
  blocks->add_option("-p", p, "prime")->required();
  blocks->add_flag("--json", json, "emit JSON");

  auto *mh = app.add_subcommand("mh", "mh(B0(G)) and mh(P) for a Sylow p-subgroup P");
  mh->add_option("FILE", file, "permutation group file")->required();
  mh->add_option("-p", p, "prime")->required();

  auto *concealed = app.add_subcommand("concealed", "orbits on the power set");
  concealed->add_option("FILE", file, "permutation group file")->required();
  concealed->add_option("-p", p, "prime")->required();

  std::uint64_t max_vectors = 729;
  auto *exceptional = app.add_subcommand("exceptional", "orbits on the natural module");
  exceptional->add_option("MATFILE", file, "matrix group file")->required();
  exceptional->add_option("--max-vectors", max_vectors, "bound on p^n")->capture_default_str();

  unsigned hook_n = 0, hook_p = 0;
  auto *hooks = app.add_subcommand("hooks", "partition of n with degree of p-part p");
  hooks->add_option("N", hook_n)->required();
  hooks->add_option("P", hook_p)->required();

  auto *verify = app.add_subcommand("verify", "catalog sweeps");
  verify->require_subcommand(1);

  std::string catalog = "builtin", out;
  std::optional<std::uint64_t> prime, max_order;
  std::optional<unsigned> jobs;
  bool all_primes = false, large = false, timings = false;
  auto *em = verify->add_subcommand("em", "minimal heights over the catalog");
  em->add_option("--catalog", catalog, "builtin or a directory of .pgrp files")
      ->capture_default_str();
  auto *prime_opt = em->add_option("-p", prime, "only this prime");
  em->add_flag("--all-primes", all_primes, "every prime dividing |G| (default)")
      ->excludes(prime_opt);
  em->add_option("--max-order", max_order, "skip groups above this order (default 20000)");
  em->add_option("--jobs", jobs, "worker threads");
  em->add_option("--out", out, "JSON report path; a CSV is written next to it");
  em->add_flag("--large", large, "raise the default order bound to 50000");
  em->add_flag("--timings", timings, "include elapsed_ms in the report");

  std::string suite = "all";
  auto *lemmas = verify->add_subcommand("lemmas", "lemma property suites");
  lemmas->add_option("--suite", suite, "suite name or all")->capture_default_str();
  lemmas->add_flag("--large", large, "include the 2048-vector module");

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const &e) {
    return app.exit(e) == 0 ? exit_ok : exit_usage;
  }

  try {
    if (*chartab)
      return cmd_chartab(file, json);
    if (*blocks)
      return cmd_blocks(file, p, json);
    if (*mh)
      return cmd_mh(file, p);
    if (*concealed)
      return cmd_concealed(file, p);
    if (*exceptional)
      return cmd_exceptional(file, max_vectors);
    if (*hooks)
      return cmd_hooks(hook_n, hook_p);
    if (*em)
      return cmd_verify_em(catalog, prime, max_order, jobs, out, large, timings);
    if (*lemmas)
      return cmd_verify_lemmas(suite, large);
  } catch (Error const &e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  }
  return exit_usage;
}
