#include "mh/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <thread>

#include "mh/errors.hpp"
#include "mh/numtheory.hpp"

namespace mh {

namespace {

// p-groups in the catalog have far more classes than the default allows
ChartabLimits sylow_limits(std::uint64_t order)
{
  return ChartabLimits{std::max<std::uint64_t>(order, 1), 512};
}

std::uint64_t parse_positive(char const *name, char const *text)
{
  try {
    std::size_t used = 0;
    auto const v = std::stoull(text, &used);
    if (used == std::string(text).size() && v > 0)
      return v;
  } catch (std::exception const &) {
  }
  throw InvalidArgument(std::string(name) + " must be a positive integer, got '" + text + "'");
}

} // namespace

std::pair<bool, std::optional<unsigned>> check_hypothesis(CharacterTable const &sylow_table,
                                                          std::uint64_t p)
{
  auto const cd = char_degrees(sylow_table).cd;
  if (cd.size() != 2)
    return {false, std::nullopt};
  auto const top = *cd.rbegin();
  auto const a = p_valuation(top, p);
  if (p_part(top, p) != top)
    throw std::logic_error("degree of a p-group is not a p-power");
  return {true, static_cast<unsigned>(a)};
}

std::pair<bool, std::optional<unsigned>> check_hypothesis(PermGroup const &G, std::uint64_t p)
{
  auto const P = sylow(G, p);
  return check_hypothesis(character_table(P, sylow_limits(P.order_u64())), p);
}

EmReport check_minimal_heights(std::string const &name, CharacterTable const &table, std::uint64_t p)
{
  if (!is_prime(p))
    throw InvalidArgument(std::to_string(p) + " is not prime");
  auto const &G = table.group();
  EmReport r;
  r.name = name;
  r.order = G.order_u64();
  r.p = p;
  r.solvable = is_solvable(G);

  auto const P = sylow(G, p);
  auto const tP = character_table(P, sylow_limits(P.order_u64()));
  r.sylow_order = P.order_u64();
  auto const cd = char_degrees(tP).cd;
  r.cd_P.assign(cd.begin(), cd.end());
  std::tie(r.hypothesis_holds, r.a) = check_hypothesis(tP, p);

  auto const blocks = block_distribution(table, p);
  auto const heights = height_profile(table, blocks, tP);
  r.block_count = blocks.count();
  r.principal_block_size = blocks.principal().size();
  r.mh_B0 = heights.mh_B0;
  r.mh_P = heights.mh_D;
  r.em_equality_observed = heights.mh_B0 == heights.mh_D;

  if (r.hypothesis_holds) {
    std::optional<std::size_t> witness;
    for (auto row : blocks.principal()) {
      auto const v = p_valuation(table.degree(row), p);
      if (v >= 1 && v <= *r.a) {
        witness = row;
        break;
      }
    }
    r.theorem_holds = witness.has_value();
    if (witness) {
      r.witness_degree = table.degree(*witness);
      if (r.solvable) {
        auto const quotient = characters_with_kernel_containing(table, p_prime_core(G, p));
        r.witness_in_p_prime_quotient =
            std::find(quotient.begin(), quotient.end(), *witness) != quotient.end();
      }
    }
  }
  if (cd.size() == 1) {
    bool zero = true;
    for (auto row : blocks.principal())
      zero = zero && heights.heights[row] == 0;
    r.abelian_sylow_heights_zero = zero;
  }
  return r;
}

EmReport check_minimal_heights(std::string const &name, PermGroup const &G, std::uint64_t p,
                         ChartabLimits const &limits)
{
  return check_minimal_heights(name, character_table(G, limits), p);
}

void apply_environment(EmOptions &options)
{
  if (auto const *v = std::getenv("EM_MAX_ORDER"); v && *v)
    options.max_order = parse_positive("EM_MAX_ORDER", v);
  if (auto const *v = std::getenv("EM_JOBS"); v && *v)
    options.jobs = static_cast<unsigned>(parse_positive("EM_JOBS", v));
}

std::size_t EmRun::hypothesis_count() const
{
  return static_cast<std::size_t>(std::count_if(
      reports.begin(), reports.end(), [](EmReport const &r) { return r.hypothesis_holds; }));
}

bool EmRun::passed() const
{
  return errors.empty() &&
         std::all_of(reports.begin(), reports.end(), [](EmReport const &r) { return r.passed(); });
}

EmRun run_em(std::vector<CatalogEntry> const &catalog, EmOptions const &options)
{
  struct Slot
  {
    std::vector<EmReport> reports;
    bool skipped = false;
    std::string error;
  };
  std::vector<Slot> slots(catalog.size());
  std::atomic<std::size_t> next{0};

  auto const work = [&] {
    for (auto i = next++; i < catalog.size(); i = next++) {
      auto const &entry = catalog[i];
      auto &slot = slots[i];
      if (entry.expected_order && *entry.expected_order > options.max_order) {
        slot.skipped = true;
        continue;
      }
      try {
        auto const start = std::chrono::steady_clock::now();
        auto const G = build_validated(entry);
        if (G.order() > options.max_order) {
          slot.skipped = true;
          continue;
        }
        auto const table =
            character_table(G, ChartabLimits{options.max_order, ChartabLimits{}.max_classes});
        std::vector<std::uint64_t> primes;
        if (options.prime)
          primes.push_back(*options.prime);
        else
          primes = prime_divisors(G.order_u64());
        for (auto p : primes) {
          auto r = check_minimal_heights(entry.name, table, p);
          if (options.timings)
            r.elapsed_ms = std::chrono::duration<double, std::milli>(
                               std::chrono::steady_clock::now() - start)
                               .count();
          slot.reports.push_back(std::move(r));
        }
      } catch (std::exception const &e) {
        slot.error = e.what();
      }
    }
  };

  auto const jobs = std::max(1u, options.jobs);
  std::vector<std::jthread> pool;
  for (unsigned t = 1; t < jobs; ++t)
    pool.emplace_back(work);
  work();
  pool.clear();

  EmRun run;
  for (std::size_t i = 0; i < catalog.size(); ++i) {
    auto &slot = slots[i];
    if (slot.skipped)
      run.skipped.push_back(catalog[i].name);
    if (!slot.error.empty())
      run.errors.push_back(catalog[i].name + ": " + slot.error);
    for (auto &r : slot.reports)
      run.reports.push_back(std::move(r));
  }
  sort_reports(run.reports);
  return run;
}

} // namespace mh
