#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mh/blocks.hpp"
#include "mh/catalog.hpp"
#include "mh/report.hpp"

namespace mh {

/// Whether cd(P) = {1, p^a} with a >= 1, and the exponent a.
std::pair<bool, std::optional<unsigned>> check_hypothesis(CharacterTable const &sylow_table,
                                                          std::uint64_t p);
std::pair<bool, std::optional<unsigned>> check_hypothesis(PermGroup const &G, std::uint64_t p);

/// Fills every report field for one prime, given the table of G.
EmReport check_minimal_heights(std::string const &name, CharacterTable const &table,
                         std::uint64_t p);
EmReport check_minimal_heights(std::string const &name, PermGroup const &G, std::uint64_t p,
                         ChartabLimits const &limits = {});

struct EmOptions
{
  std::optional<std::uint64_t> prime;   // unset: every prime dividing |G|
  std::uint64_t max_order = 20000;
  unsigned jobs = 1;
  bool timings = false;
};

/// EM_MAX_ORDER and EM_JOBS, when set, replace the corresponding fields.
/// Throws InvalidArgument on unparsable values.
void apply_environment(EmOptions &options);

struct EmRun
{
  std::vector<EmReport> reports;           // sorted by (name, p)
  std::vector<std::string> skipped;        // entries above the order bound
  std::vector<std::string> errors;         // "name: message"

  std::size_t hypothesis_count() const;
  bool passed() const;
};

/// Runs every catalog entry, distributing entries over options.jobs workers.
EmRun run_em(std::vector<CatalogEntry> const &catalog, EmOptions const &options);

} // namespace mh
