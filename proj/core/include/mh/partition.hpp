#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace mh {

/// Integer partition with weakly decreasing positive parts.
class Partition
{
public:
  Partition() = default;
  explicit Partition(std::vector<unsigned> parts);

  std::vector<unsigned> const &parts() const { return parts_; }
  unsigned size() const { return n_; }

  /// Conjugate partition (column lengths).
  Partition conjugate() const;

  /// Hook lengths row by row.
  std::vector<std::vector<unsigned>> hook_lengths() const;

  /// Degree of the corresponding irreducible character of Sym(n):
  /// n! over the product of hook lengths.
  mpz_class hook_degree() const;

  std::string to_string() const;

  friend bool operator==(Partition const &, Partition const &) = default;
  friend auto operator<=>(Partition const &, Partition const &) = default;

private:
  std::vector<unsigned> parts_;
  unsigned n_ = 0;
};

/// All partitions of n in reverse lexicographic order, (n) first.
std::vector<Partition> partitions_of(unsigned n);

/// For odd p with p <= n < p^2, n > 4 and (n,p) != (6,3), writing n = ap + b:
/// (ap, 1^b) when b > 0 and (ap-2, 2) when b = 0. The degree then has p-part p.
/// Throws InvalidArgument outside that range.
Partition partition_with_p_part_p(unsigned n, unsigned p);

} // namespace mh
