#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mh/perm_group.hpp"

namespace mh {

/// Subsets of {0,...,n-1} as bitmasks, n <= 24.
using Subset = std::uint32_t;

inline constexpr std::size_t max_power_set_degree = 24;

struct ConcealedReport
{
  bool holds = false;
  bool p_divides_order = false;
  std::optional<Subset> offending;        // a subset whose orbit size is divisible by p
  std::uint64_t offending_orbit_size = 0;
  std::uint64_t orbit_count = 0;          // number of orbits on the power set
};

/// p | |H| and every orbit of H on the power set has size prime to p.
ConcealedReport is_p_concealed(PermGroup const &H, std::uint64_t p);

/// Orbit sizes of H on the power set, one entry per orbit, in order of the
/// smallest subset of each orbit.
std::vector<std::uint64_t> power_set_orbit_sizes(PermGroup const &H);

/// An ordered tuple of k pairwise disjoint subsets covering the domain;
/// empty parts allowed.
struct OrderedSetPartition
{
  std::size_t degree = 0;
  std::vector<std::vector<Point>> parts;

  /// Part index of every point.
  std::vector<unsigned> labels() const;
  static OrderedSetPartition from_labels(std::vector<unsigned> const &labels, unsigned k);

  std::string to_string(bool one_based = true) const;
  friend bool operator==(OrderedSetPartition const &, OrderedSetPartition const &) = default;
};

/// Labelings are read as base-k integers with point 0 the least significant
/// digit; the first labeling in increasing order whose stabilizer in P is
/// trivial is returned. Requires k^n <= max_labelings.
std::optional<OrderedSetPartition>
regular_orbit_on_partitions(PermGroup const &P, unsigned k,
                            std::uint64_t max_labelings = 43'046'721);

/// Stabilizer of the partition in G is trivial.
bool is_regular_partition(PermGroup const &G, OrderedSetPartition const &part,
                          Limits const &limits = {});

} // namespace mh
