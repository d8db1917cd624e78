#include <algorithm>

#include <gtest/gtest.h>

#include "json.hpp"
#include "mh/blocks.hpp"
#include "mh/catalog.hpp"
#include "mh/group_io.hpp"
#include "mh/numtheory.hpp"
#include "oracles.hpp"

using namespace mh;
using namespace mh::groups;

namespace {

std::size_t row_of_degree(CharacterTable const &t, std::uint64_t d)
{
  return std::find(t.degrees().begin(), t.degrees().end(), d) - t.degrees().begin();
}

HeightProfile heights(PermGroup const &G, CharacterTable const &t, BlockPartition const &b)
{
  auto P = sylow(G, b.p);
  return height_profile(t, b, character_table(P, {P.order_u64(), 512}));
}

/// Same partition of rows, ignoring block labels.
bool same_partition(std::vector<std::size_t> const &a, std::vector<int> const &b)
{
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      if ((a[i] == a[j]) != (b[i] == b[j]))
        return false;
  return true;
}

} // namespace

TEST(PReduction, IsRingHomomorphism)
{
  PReduction red(12, 5);
  auto const &F = red.field();
  std::vector<Cyclotomic> xs;
  for (int k = 0; k < 12; ++k)
    xs.push_back(Cyclotomic::zeta_power(12, k) + Cyclotomic(k % 3));
  for (auto const &x : xs)
    for (auto const &y : xs) {
      EXPECT_EQ(red.reduce(x * y), F.mul(red.reduce(x), red.reduce(y)));
      EXPECT_EQ(red.reduce(x + y), F.add(red.reduce(x), red.reduce(y)));
    }
  EXPECT_EQ(red.reduce(Cyclotomic::zeta_power(12, 12)), F.one());
}

TEST(PReduction, SecondIdeal)
{
  // 2 has order 3 mod 7, so there are two prime ideals over 2 in Z[zeta_7]
  EXPECT_TRUE(PReduction(7, 2, 1).distinct_ideal());
  // 3 is a primitive root mod 7: a single ideal
  EXPECT_FALSE(PReduction(7, 3, 1).distinct_ideal());
}

TEST(Blocks, Sym3AndSym4)
{
  auto t3 = character_table(sym(3));
  auto b2 = block_distribution(t3, 2);
  ASSERT_EQ(b2.count(), 2u);
  auto two = row_of_degree(t3, 2);
  EXPECT_EQ(b2.principal().size(), 2u);
  EXPECT_NE(b2.block_of[two], b2.principal_id);
  EXPECT_EQ(b2.defect[b2.block_of[two]], 0u);
  EXPECT_EQ(b2.defect[b2.principal_id], 1u);

  EXPECT_EQ(block_distribution(t3, 3).count(), 1u);
  auto b4 = block_distribution(character_table(sym(4)), 2);
  EXPECT_EQ(b4.count(), 1u);
  EXPECT_EQ(b4.principal().size(), 5u);
}

TEST(Blocks, RationalTablesAgainstIntegerCentralCharacters)
{
  for (auto const &G : {sym(3), sym(4), sym(5), sym(6), dihedral(8), quaternion(8),
                        direct_product(sym(3), cyclic(2)), wreath(sym(3), cyclic(2))}) {
    auto t = character_table(G);
    std::vector<std::vector<long>> rows;
    bool rational = true;
    for (std::size_t r = 0; r < t.size(); ++r) {
      rows.emplace_back();
      for (std::size_t k = 0; k < t.size(); ++k) {
        rational = rational && t.value(r, k).is_integer();
        if (rational)
          rows.back().push_back(t.value(r, k).rational_value().get_num().get_si());
      }
    }
    ASSERT_TRUE(rational);
    std::vector<long> sizes(t.classes().sizes().begin(), t.classes().sizes().end());
    for (long p : {2, 3, 5}) {
      if (G.order_u64() % p)
        continue;
      auto b = block_distribution(t, p);
      EXPECT_TRUE(same_partition(b.block_of, oracle::rational_blocks(rows, sizes, p)))
          << G.order() << " p=" << p;
    }
  }
}

TEST(Blocks, VariantsAgree)
{
  for (auto const &e : builtin_catalog()) {
    if (*e.expected_order > 1000)
      continue;
    auto t = character_table(e.build());
    for (auto p : prime_divisors(*e.expected_order)) {
      auto a = block_distribution(t, p, 0);
      auto b = block_distribution(t, p, 1);
      EXPECT_EQ(a.blocks, b.blocks) << e.name << " p=" << p;
      EXPECT_EQ(a.defect, b.defect) << e.name << " p=" << p;
    }
  }
}

TEST(Blocks, DefectZeroCountsMatchDegrees)
{
  for (auto const &e : builtin_catalog()) {
    if (*e.expected_order > 1000)
      continue;
    auto t = character_table(e.build());
    for (auto p : prime_divisors(*e.expected_order)) {
      auto b = block_distribution(t, p);
      auto full = oracle::p_part(*e.expected_order, p);
      std::size_t zero_defect = 0, full_degree = 0;
      for (std::size_t i = 0; i < b.count(); ++i)
        if (b.defect[i] == 0) {
          ++zero_defect;
          EXPECT_EQ(b.blocks[i].size(), 1u) << e.name;
        }
      for (auto d : t.degrees())
        full_degree += oracle::p_part(d, p) == full;
      EXPECT_EQ(zero_defect, full_degree) << e.name << " p=" << p;
      EXPECT_EQ(b.block_of[0], b.principal_id);
      EXPECT_EQ(b.defect[b.principal_id], b.a);
    }
  }
}

TEST(Heights, Sym4AtTwo)
{
  auto G = sym(4);
  auto t = character_table(G);
  auto b = block_distribution(t, 2);
  auto h = heights(G, t, b);
  for (std::size_t r = 0; r < t.size(); ++r)
    EXPECT_EQ(h.heights[r], t.degree(r) == 2 ? 1u : 0u);
  EXPECT_EQ(h.mh_B0, 1u);
  EXPECT_EQ(h.mh_D, 1u);
}

TEST(Heights, AbelianSylowGivesInfinity)
{
  auto G = alt(5);
  auto t = character_table(G);
  for (std::uint64_t p : {2, 3, 5}) {
    auto h = heights(G, t, block_distribution(t, p));
    EXPECT_FALSE(h.mh_D);
    EXPECT_FALSE(h.mh_B0);
  }
  EXPECT_FALSE(minimal_nonlinear_height(character_table(cyclic(12)), 2));
}

TEST(Heights, SL23RegularAtTwo)
{
  auto G = load_perm_group(fixture_dir() / "sl2_3.pgrp");
  ASSERT_EQ(G.order(), 24);
  auto t = character_table(G);
  auto b = block_distribution(t, 2);
  EXPECT_EQ(b.count(), 1u);
  auto h = heights(G, t, b);
  for (std::size_t r = 0; r < t.size(); ++r)
    if (t.degree(r) == 2)
      EXPECT_EQ(h.heights[r], 1u);
  EXPECT_EQ(h.mh_B0, 1u);
  EXPECT_EQ(minimal_nonlinear_height(character_table(quaternion(8)), 2), 1u);
}

TEST(Covering, Examples)
{
  auto G = sym(4);
  auto t = character_table(G);
  auto b = block_distribution(t, 2);
  auto self = covering_blocks(t, b, t, b);
  for (std::size_t i = 0; i < b.count(); ++i)
    for (std::size_t j = 0; j < b.count(); ++j)
      EXPECT_EQ(self[i][j], i == j);

  auto V4 = p_core(G, 2);
  auto tn = character_table(V4);
  auto bn = block_distribution(tn, 2);
  auto cov = covering_blocks(t, b, tn, bn);
  for (std::size_t i = 0; i < b.count(); ++i)
    EXPECT_TRUE(cov[i][bn.principal_id]);

  auto r = principal_cover_check(character_table(sym(3)), character_table(alt(3)), 3);
  EXPECT_TRUE(r.hypothesis);
  EXPECT_EQ(r.covering_principal.size(), 1u);
  EXPECT_TRUE(r.unique_principal_cover);
  EXPECT_TRUE(r.quotient_in_principal);
  EXPECT_TRUE(r.implication_holds);
}

TEST(Constrained, Examples)
{
  auto s4 = is_p_constrained_single_block(character_table(sym(4)), 2);
  EXPECT_TRUE(s4.hypothesis);
  EXPECT_EQ(s4.single_block, true);
  auto a5 = is_p_constrained_single_block(character_table(alt(5)), 2);
  EXPECT_FALSE(a5.hypothesis);
  EXPECT_FALSE(a5.single_block);
  auto ex = is_p_constrained_single_block(
      character_table(extraspecial(3, ExtraspecialType::minus)), 3);
  EXPECT_TRUE(ex.hypothesis);
  EXPECT_EQ(ex.single_block, true);
}

TEST(Blocks, JsonShape)
{
  auto G = sym(4);
  auto t = character_table(G);
  auto b = block_distribution(t, 3);
  auto j = nlohmann::json::parse(blocks_to_json(t, b, heights(G, t, b)));
  EXPECT_TRUE(j.is_object());
}
