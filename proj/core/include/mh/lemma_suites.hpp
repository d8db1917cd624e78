#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "mh/perm_group.hpp"

namespace mh {

struct CaseResult
{
  std::string instance;
  bool passed = false;
  std::string detail;
};

struct SuiteResult
{
  std::string name;
  std::vector<CaseResult> cases;

  bool passed() const;
  std::size_t failures() const;
};

struct SuiteOptions
{
  bool large = false;   // include the M23 module (2048 vectors) and similar
  std::filesystem::path fixtures;   // empty: fixture_dir()
};

/// Suite names in run order.
std::vector<std::string> const &suite_names();

/// Throws InvalidArgument for an unknown name.
SuiteResult run_suite(std::string const &name, SuiteOptions const &options = {});

/// The list of p-concealed primitive groups: A_n <= H with n = a p^s - 1
/// (s >= 1, 1 <= a < p, (a,s) != (1,1), H != A_3 when p = 2), AGL_3(2) and
/// AGammaL_1(8) for (n,p) = (8,3), and D_10 for (n,p) = (5,2). H must be
/// primitive of order divisible by p.
bool concealed_by_classification(PermGroup const &H, std::uint64_t p);

} // namespace mh
