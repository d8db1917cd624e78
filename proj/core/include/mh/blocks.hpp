#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mh/char_table.hpp"
#include "mh/galois_field.hpp"

namespace mh {

/// Ring homomorphism from Z[zeta_e] onto a finite field of characteristic p:
/// with e = p^c e', zeta_e goes to a fixed element of order e' in F_{p^m},
/// m the order of p modulo e'.
class PReduction
{
public:
  /// variant 0 uses the standard element z of order e'; variant 1 uses z^r
  /// for the smallest r coprime to e' outside the subgroup generated by p
  /// modulo e', which corresponds to a different prime ideal when one exists.
  PReduction(unsigned conductor, std::uint64_t p, unsigned variant = 0);

  std::uint64_t characteristic() const { return p_; }
  unsigned conductor() const { return e_; }
  GaloisField const &field() const { return field_; }
  /// Whether variant 1 found a second prime ideal.
  bool distinct_ideal() const { return distinct_; }

  /// Image of an algebraic integer written over a divisor of the conductor.
  /// Throws std::logic_error for non-integral input.
  GaloisField::Element reduce(Cyclotomic const &x) const;

private:
  std::uint64_t p_;
  unsigned e_;
  GaloisField field_;
  bool distinct_ = false;
  std::vector<GaloisField::Element> basis_images_;   // images of zeta^i, i < phi(e)
};

struct BlockPartition
{
  std::uint64_t p = 2;
  unsigned a = 0;                          // p^a = |G|_p
  std::vector<std::size_t> block_of;       // row -> block
  std::vector<std::vector<std::size_t>> blocks;   // principal block first, then by first row
  std::vector<unsigned> defect;
  std::size_t principal_id = 0;

  std::size_t count() const { return blocks.size(); }
  std::vector<std::size_t> const &principal() const { return blocks[principal_id]; }
};

/// Rows share a block iff their central characters agree under the
/// reduction on every class.
BlockPartition block_distribution(CharacterTable const &table, std::uint64_t p,
                                  unsigned reduction_variant = 0);

struct HeightProfile
{
  std::vector<unsigned> heights;
  std::optional<unsigned> mh_B0;   // nullopt = infinity
  std::optional<unsigned> mh_D;
};

/// mh of a p-group: least log_p of a nonlinear degree.
std::optional<unsigned> minimal_nonlinear_height(CharacterTable const &p_group_table,
                                                 std::uint64_t p);

HeightProfile height_profile(CharacterTable const &table, BlockPartition const &partition,
                             CharacterTable const &sylow_table);

/// covers[B][b]: block B of G covers block b of N.
std::vector<std::vector<bool>> covering_blocks(CharacterTable const &table_G,
                                               BlockPartition const &blocks_G,
                                               CharacterTable const &table_N,
                                               BlockPartition const &blocks_N);

struct PrincipalCoverResult
{
  bool hypothesis = false;                     // C_G(Q) <= N for Q in Syl_p(N)
  std::vector<std::size_t> covering_principal; // blocks of G covering B_0(N)
  bool unique_principal_cover = false;
  bool quotient_in_principal = false;          // Irr(G/N) inside B_0(G)
  bool implication_holds = true;
};

PrincipalCoverResult principal_cover_check(CharacterTable const &table_G, CharacterTable const &table_N,
                            std::uint64_t p);

struct ConstrainedResult
{
  bool hypothesis = false;   // O_p'(G) = 1 and C_G(O_p(G)) <= O_p(G)
  std::optional<bool> single_block;
  std::size_t block_count = 0;
};

ConstrainedResult is_p_constrained_single_block(CharacterTable const &table, std::uint64_t p);

std::string blocks_to_json(CharacterTable const &table, BlockPartition const &partition,
                           HeightProfile const &heights, int indent = -1);

} // namespace mh
