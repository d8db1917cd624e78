#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace mh {

inline constexpr int report_schema_version = 1;

/// Outcome of checking one (group, prime) pair. Optional heights use
/// nullopt for infinity; other optionals are absent when not applicable.
struct EmReport
{
  std::string name;
  std::uint64_t order = 0;
  std::uint64_t p = 0;
  std::uint64_t sylow_order = 1;
  std::vector<std::uint64_t> cd_P;
  bool solvable = false;
  bool hypothesis_holds = false;
  std::optional<unsigned> a;
  std::optional<unsigned> mh_B0;
  std::optional<unsigned> mh_P;
  std::optional<std::uint64_t> witness_degree;
  std::optional<bool> theorem_holds;
  bool em_equality_observed = false;
  std::optional<bool> witness_in_p_prime_quotient;   // solvable hypothesis instances
  std::optional<bool> abelian_sylow_heights_zero;    // abelian Sylow instances
  std::size_t block_count = 0;
  std::size_t principal_block_size = 0;
  std::optional<double> elapsed_ms;

  /// mh_B0 <= mh_P with infinity above every integer.
  bool mh_inequality() const;
  /// Every check this report carries passed.
  bool passed() const;
};

/// Sorts by (name, p).
void sort_reports(std::vector<EmReport> &reports);

std::string reports_to_json(std::vector<EmReport> const &reports, bool with_timings = false);
std::string reports_to_csv(std::vector<EmReport> const &reports, bool with_timings = false);

/// Inverse of reports_to_json. Throws InvalidArgument on schema mismatch.
std::vector<EmReport> reports_from_json(std::string const &text);

} // namespace mh
