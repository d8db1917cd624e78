#pragma once

#include <cstdint>
#include <vector>

#include "mh/perm_group.hpp"

namespace mh {

/// Smallest block of the transitive group G containing the points a and b,
/// sorted.
std::vector<Point> minimal_block(PermGroup const &G, Point a, Point b);

/// Throws InvalidArgument when G is intransitive.
bool is_primitive(PermGroup const &G);

struct BlockSystem
{
  std::vector<std::vector<Point>> blocks;   // blocks[0] contains point 0; others by smallest point
  PermGroup kernel;                         // intersection of the block stabilizers
  PermGroup induced;                        // action on the blocks
  bool induced_primitive = false;
};

/// A block system whose blocks have the largest proper size; among blocks of
/// that size containing 0 the lexicographically smallest is used. Throws
/// InvalidArgument when G is intransitive or primitive.
BlockSystem maximal_block_system(PermGroup const &G, Limits const &limits = {});

struct BlockQuotientResult
{
  bool group_concealed = false;
  bool induced_concealed = false;
  bool implication_holds = true;
  BlockSystem system;
};

/// If G is p-concealed, so is its action on a maximal block system.
BlockQuotientResult block_quotient_check(PermGroup const &G, std::uint64_t p,
                              Limits const &limits = {});

} // namespace mh
