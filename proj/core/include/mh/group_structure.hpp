#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "mh/perm_group.hpp"

namespace mh {

// --- orbits and elementwise queries -------------------------------------

std::vector<Point> orbit(PermGroup const &G, Point x);
std::vector<std::vector<Point>> orbits(PermGroup const &G);
bool is_transitive(PermGroup const &G);

PermGroup subgroup_generated(std::size_t degree, std::vector<Perm> const &elements);

/// Subgroup of all elements of G satisfying pred; pred must describe a
/// subgroup. Walks all of G.
PermGroup filter_subgroup(PermGroup const &G,
                          std::function<bool(Perm const &)> const &pred,
                          Limits const &limits = {});

/// Every subgroup of a small group, ordered by order and then by the ranks
/// of their elements; the trivial group comes first and G last.
std::vector<PermGroup> all_subgroups(PermGroup const &G, Limits const &limits = {4096});

PermGroup setwise_stabilizer(PermGroup const &G, std::vector<Point> const &set,
                             Limits const &limits = {});
PermGroup centralizer(PermGroup const &G, std::vector<Perm> const &elements,
                      Limits const &limits = {});
PermGroup centralizer(PermGroup const &G, PermGroup const &H,
                      Limits const &limits = {});
PermGroup normalizer(PermGroup const &G, PermGroup const &H,
                     Limits const &limits = {});
PermGroup center(PermGroup const &G, Limits const &limits = {});

PermGroup normal_closure(PermGroup const &G, std::vector<Perm> const &elements);
PermGroup derived_subgroup(PermGroup const &G);

bool is_abelian(PermGroup const &G);
bool is_solvable(PermGroup const &G);
bool is_p_group(PermGroup const &G, std::uint64_t p);
bool is_normal(PermGroup const &G, PermGroup const &N);

// --- conjugacy classes ----------------------------------------------------

/// Conjugacy classes of an enumerable group. Class 0 is the identity class;
/// the remaining classes are ordered by the rank of their first element, and
/// each representative is that first element.
class ConjugacyClasses
{
public:
  ConjugacyClasses(PermGroup G, Limits const &limits = {});

  PermGroup const &group() const { return group_; }
  std::size_t size() const { return representatives_.size(); }

  std::vector<Perm> const &representatives() const { return representatives_; }
  std::vector<std::uint64_t> const &sizes() const { return sizes_; }
  std::vector<std::uint64_t> const &element_orders() const { return orders_; }

  std::size_t class_of(Perm const &g) const;
  std::size_t class_of_rank(std::uint64_t r) const { return class_of_rank_[r]; }

  /// Class of rep(i)^k.
  std::size_t power_class(std::size_t i, std::int64_t k) const;
  std::size_t inverse_class(std::size_t i) const { return inverse_[i]; }

  std::uint64_t centralizer_order(std::size_t i) const;

  /// Lowest common multiple of all element orders.
  std::uint64_t exponent() const;

private:
  PermGroup group_;
  std::vector<Perm> representatives_;
  std::vector<std::uint64_t> sizes_;
  std::vector<std::uint64_t> orders_;
  std::vector<std::uint32_t> class_of_rank_;
  std::vector<std::size_t> inverse_;
};

// --- Sylow subgroups, normal subgroups and series -------------------------

/// Sylow p-subgroup; trivial when p does not divide |G|.
PermGroup sylow(PermGroup const &G, std::uint64_t p, Limits const &limits = {});

/// All normal subgroups as unions of conjugacy classes, ordered by order
/// (trivial group first, G last).
struct NormalSubgroupLattice
{
  std::vector<PermGroup> subgroups;
  std::vector<std::vector<bool>> class_masks;
  std::vector<std::uint64_t> orders;

  /// Index of the normal subgroup with the given class mask.
  std::optional<std::size_t> find(std::vector<bool> const &mask) const;
  std::size_t index_of(PermGroup const &N, ConjugacyClasses const &classes) const;
  bool contains(std::size_t big, std::size_t small) const;
};

NormalSubgroupLattice normal_subgroup_lattice(ConjugacyClasses const &classes);

std::vector<PermGroup> normal_subgroups(PermGroup const &G, Limits const &limits = {});
std::vector<PermGroup> minimal_normal_subgroups(PermGroup const &G,
                                                Limits const &limits = {});

std::vector<bool> class_mask(ConjugacyClasses const &classes, PermGroup const &N);

PermGroup p_core(PermGroup const &G, std::uint64_t p, Limits const &limits = {});
PermGroup p_prime_core(PermGroup const &G, std::uint64_t p, Limits const &limits = {});

/// O^{p'}(G): normal closure of a Sylow p-subgroup.
PermGroup p_residual(PermGroup const &G, std::uint64_t p, Limits const &limits = {});

enum class FactorKind { p, p_prime };

/// Ascending (p,p')-series 1 = K_0 < O_p < O_{p,p'} < ..., trivial steps
/// omitted. reaches_group is true exactly when G is p-solvable.
struct SubnormalSeries
{
  std::vector<PermGroup> terms;
  std::vector<FactorKind> kinds;   // kinds[i] describes terms[i+1] / terms[i]
  bool reaches_group = false;
  unsigned p_length = 0;
};

SubnormalSeries pp_series(PermGroup const &G, std::uint64_t p,
                          Limits const &limits = {});
bool is_p_solvable(PermGroup const &G, std::uint64_t p, Limits const &limits = {});

// --- quotients ------------------------------------------------------------

/// Permutation action of G on the cosets of a normal subgroup N.
struct CosetAction
{
  PermGroup source;
  PermGroup image;
  std::vector<Perm> generator_images;   // images of source.generators()
  std::vector<Perm> coset_representatives;
  std::vector<std::uint32_t> coset_of_rank;

  std::size_t coset_of(Perm const &g) const;
  Perm image_of(Perm const &g) const;
};

CosetAction coset_action(PermGroup const &G, PermGroup const &N,
                         Limits const &limits = {});

} // namespace mh
