#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "mh/mat_group.hpp"
#include "mh/perm_group.hpp"

namespace mh {

// Permutation groups:
//   degree n
//   gen (1,2,3)(4,5)        cycles, 1-based
//   gen [2,1,4,3]           image list, 1-based
//   order 24                optional, checked on load
// Matrix groups:
//   dim n
//   prime p
//   gen [[1,1],[0,1]]
//   order 5040              optional, checked on load
//   orbits 1,22,220         optional, orbit sizes on F_p^n checked on load
// '#' starts a comment.

PermGroup parse_perm_group(std::string const &text);

struct MatParseOptions
{
  bool validate = true;
  SpaceLimits limits;
};

MatGroup parse_mat_group(std::string const &text, MatParseOptions const &options = {});

std::string serialize_perm_group(PermGroup const &G);
std::string serialize_mat_group(MatGroup const &M);

std::string read_text_file(std::filesystem::path const &path);
PermGroup load_perm_group(std::filesystem::path const &path);
MatGroup load_mat_group(std::filesystem::path const &path, MatParseOptions const &options = {});

} // namespace mh
