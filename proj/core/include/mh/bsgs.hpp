#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "mh/perm.hpp"

namespace mh {

/// One level of a stabilizer chain: the basic orbit of base_point under the
/// stabilizer of all earlier base points, with an explicit transversal.
struct StabilizerLevel
{
  Point base_point = 0;
  std::vector<Perm> generators;
  std::vector<Point> orbit;
  std::vector<std::int32_t> position;   // point -> index in orbit, or -1
  std::vector<Perm> transversal;         // base_point^transversal[i] == orbit[i]
  std::vector<Perm> inverse_transversal;
};

/// Base and strong generating set built by deterministic Schreier-Sims.
/// Base points are always the smallest point moved by the element that
/// forces a new level.
class Bsgs
{
public:
  static Bsgs build(std::size_t degree, std::vector<Perm> const &generators);

  std::size_t degree() const { return degree_; }
  std::vector<Point> base() const;
  std::vector<StabilizerLevel> const &levels() const { return levels_; }
  std::vector<Perm> strong_generators() const;

  mpz_class const &order() const { return order_; }

  /// Strips g through levels [from, depth). Returns the residue and the level
  /// at which stripping stopped (depth when every level was passed).
  std::pair<Perm, std::size_t> strip(Perm g, std::size_t from = 0) const;

  bool contains(Perm const &g) const;

  /// Mixed-radix index of a group element in [0, order). Requires the order
  /// to fit into 64 bits. Rank 0 is the identity.
  std::optional<std::uint64_t> try_rank(Perm const &g) const;
  std::uint64_t rank(Perm const &g) const;
  Perm unrank(std::uint64_t r) const;

  bool enumerable() const { return enumerable_; }

private:
  std::size_t degree_ = 0;
  std::vector<StabilizerLevel> levels_;
  mpz_class order_ = 1;
  bool enumerable_ = true;
};

} // namespace mh
