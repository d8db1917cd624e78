#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "mh/bsgs.hpp"
#include "mh/perm.hpp"

namespace mh {

/// Bound on the number of group elements any enumeration-based routine may
/// walk through.
struct Limits
{
  std::uint64_t max_order = 1'000'000;
};

/// A permutation group given by generators. The stabilizer chain is built on
/// first use under a one-time guard; copies share it, and all queries are
/// const, so values may be shared freely between threads.
class PermGroup
{
public:
  PermGroup();
  PermGroup(std::size_t degree, std::vector<Perm> generators);

  static PermGroup trivial(std::size_t degree);

  std::size_t degree() const { return degree_; }
  std::vector<Perm> const &generators() const { return generators_; }

  Bsgs const &bsgs() const;
  mpz_class const &order() const { return bsgs().order(); }
  std::uint64_t order_u64() const;

  bool contains(Perm const &g) const { return bsgs().contains(g); }
  bool is_trivial() const { return order() == 1; }
  bool is_subgroup_of(PermGroup const &other) const;
  bool same_elements(PermGroup const &other) const;

  Perm identity() const { return Perm(degree_); }

  /// Visits every element in rank order. Throws BoundExceeded when the order
  /// exceeds limits.max_order.
  void for_each_element(std::function<void(std::uint64_t rank, Perm const &)> const &f,
                        Limits const &limits = {}) const;
  std::vector<Perm> elements(Limits const &limits = {}) const;

  /// The subgroup generated by this group's generators and extra.
  PermGroup extended_by(std::vector<Perm> const &extra) const;

  std::string to_string() const;

private:
  struct Lazy;

  std::size_t degree_ = 0;
  std::vector<Perm> generators_;
  std::shared_ptr<Lazy> lazy_;
};

void check_enumerable(PermGroup const &G, Limits const &limits);

} // namespace mh
