#include <set>

#include <gtest/gtest.h>

#include "mh/block_systems.hpp"
#include "mh/catalog.hpp"
#include "mh/errors.hpp"
#include "mh/group_io.hpp"
#include "mh/lemma_suites.hpp"
#include "mh/numtheory.hpp"
#include "mh/partition.hpp"
#include "mh/set_actions.hpp"
#include "oracles.hpp"

using namespace mh;
using namespace mh::groups;

TEST(Partition, HookDegreeExamples)
{
  EXPECT_EQ(Partition({7}).hook_degree(), 1);
  EXPECT_EQ(Partition({5, 2}).hook_degree(), 14);
  EXPECT_EQ(Partition({5, 1, 1, 1}).hook_degree(), 35);
  EXPECT_EQ(Partition({3, 2}).conjugate(), Partition({2, 2, 1}));
  EXPECT_EQ(Partition({5, 1, 1, 1}).to_string(), "(5,1,1,1)");
}

TEST(Partition, HookDegreeMatchesTableauxCount)
{
  for (unsigned n = 1; n <= 12; ++n) {
    auto all = partitions_of(n);
    EXPECT_EQ(all.size(), oracle::partitions(n).size());
    for (auto const &lambda : all)
      EXPECT_EQ(lambda.hook_degree(), oracle::count_standard_tableaux(lambda.parts()))
          << lambda.to_string();
  }
}

TEST(Partition, SumOfSquaredDegreesIsFactorial)
{
  for (unsigned n = 1; n <= 10; ++n) {
    mpz_class s = 0;
    for (auto const &lambda : partitions_of(n))
      s += lambda.hook_degree() * lambda.hook_degree();
    EXPECT_EQ(s, factorial(n));
  }
}

TEST(PartitionWithPPartP, Examples)
{
  EXPECT_EQ(partition_with_p_part_p(7, 7), Partition({5, 2}));
  EXPECT_EQ(partition_with_p_part_p(8, 5), Partition({5, 1, 1, 1}));
  EXPECT_THROW(partition_with_p_part_p(6, 3), InvalidArgument);
  EXPECT_THROW(partition_with_p_part_p(4, 3), InvalidArgument);
  EXPECT_THROW(partition_with_p_part_p(9, 3), InvalidArgument);
}

TEST(PartitionWithPPartP, PPartIsExactlyP)
{
  for (unsigned p : {3u, 5u, 7u})
    for (unsigned n = std::max(p, 5u); n < p * p; ++n) {
      if (n == 6 && p == 3)
        continue;
      auto lambda = partition_with_p_part_p(n, p);
      EXPECT_EQ(lambda.size(), n);
      auto d = lambda.hook_degree();
      EXPECT_EQ(p_valuation(d, p), 1u) << n << ' ' << p;
      EXPECT_EQ(d, oracle::count_standard_tableaux(lambda.parts()));
    }
}

TEST(Concealed, Examples)
{
  auto fx = [](std::string const &n) { return load_perm_group(fixture_dir() / (n + ".pgrp")); };
  EXPECT_TRUE(is_p_concealed(fx("d10"), 2).holds);
  EXPECT_TRUE(is_p_concealed(fx("agl3_2"), 3).holds);
  EXPECT_TRUE(is_p_concealed(fx("agammal1_8"), 3).holds);
  EXPECT_TRUE(is_p_concealed(alt(5), 3).holds);
  EXPECT_TRUE(is_p_concealed(sym(8), 3).holds);

  auto s5 = is_p_concealed(fx("sym5"), 2);
  EXPECT_FALSE(s5.holds);
  ASSERT_TRUE(s5.offending);
  EXPECT_EQ(s5.offending_orbit_size % 2, 0u);

  auto c = is_p_concealed(cyclic(6), 5);
  EXPECT_FALSE(c.holds);
  EXPECT_FALSE(c.p_divides_order);
}

TEST(Concealed, PowerSetOrbitsAgainstBruteForce)
{
  for (auto const &H : {sym(4), dihedral(10), agl1(7), psl2(5), wreath(cyclic(2), cyclic(3))}) {
    auto sizes = power_set_orbit_sizes(H);
    std::uint64_t total = 0;
    for (auto s : sizes)
      total += s;
    EXPECT_EQ(total, std::uint64_t{1} << H.degree());

    auto elems = H.elements();
    std::set<Subset> seen;
    std::vector<std::uint64_t> brute;
    for (Subset s = 0; s < (Subset{1} << H.degree()); ++s) {
      if (seen.count(s))
        continue;
      std::set<Subset> orbit;
      for (auto const &g : elems) {
        Subset img = 0;
        for (std::size_t x = 0; x < H.degree(); ++x)
          if ((s >> x) & 1u)
            img |= Subset{1} << g[x];
        orbit.insert(img);
      }
      seen.insert(orbit.begin(), orbit.end());
      brute.push_back(orbit.size());
    }
    EXPECT_EQ(sizes, brute);
  }
}

TEST(Concealed, ClassificationAgreesOnSmallPrimitiveGroups)
{
  EXPECT_TRUE(concealed_by_classification(dihedral(10), 2));
  EXPECT_TRUE(concealed_by_classification(agl(3, 2), 3));
  EXPECT_FALSE(concealed_by_classification(sym(5), 2));
  for (auto const &H : {sym(5), alt(5), psl2(7), agl1(7), sym(7), alt(6), psl2(8)})
    for (auto p : prime_divisors(H.order()))
      EXPECT_EQ(concealed_by_classification(H, p), is_p_concealed(H, p).holds)
          << H.order() << " p=" << p;
}

TEST(RegularPartitions, Examples)
{
  PermGroup C3(3, {Perm::from_cycles(3, {{0, 1, 2}})});
  auto w = regular_orbit_on_partitions(C3, 2);
  ASSERT_TRUE(w);
  EXPECT_TRUE(is_regular_partition(C3, *w));

  auto D8 = dihedral(8);
  EXPECT_FALSE(regular_orbit_on_partitions(D8, 2));
  auto w3 = regular_orbit_on_partitions(D8, 3);
  ASSERT_TRUE(w3);
  EXPECT_TRUE(is_regular_partition(D8, *w3));
  EXPECT_TRUE(is_regular_partition(D8, OrderedSetPartition{4, {{0}, {1}, {2, 3}}}));
  EXPECT_FALSE(is_regular_partition(D8, OrderedSetPartition{4, {{0, 2}, {1, 3}}}));
}

TEST(RegularPartitions, LabelsRoundTrip)
{
  auto part = OrderedSetPartition{5, {{0, 3}, {}, {1, 2, 4}}};
  auto back = OrderedSetPartition::from_labels(part.labels(), 3);
  EXPECT_EQ(back, part);
  EXPECT_EQ(part.to_string(), "({1,4},{},{2,3,5})");
}

TEST(BlockSystems, Examples)
{
  auto d8 = maximal_block_system(dihedral(8));
  EXPECT_EQ(d8.blocks, (std::vector<std::vector<Point>>{{0, 2}, {1, 3}}));
  EXPECT_EQ(d8.induced.order(), 2);
  EXPECT_TRUE(d8.induced_primitive);

  auto c6 = maximal_block_system(cyclic(6));
  EXPECT_EQ(c6.blocks.size(), 2u);
  EXPECT_EQ(c6.blocks[0].size(), 3u);
  EXPECT_EQ(c6.induced.order(), 2);

  EXPECT_THROW(maximal_block_system(sym(4)), InvalidArgument);
  EXPECT_EQ(minimal_block(dihedral(8), 0, 2), (std::vector<Point>{0, 2}));
}

TEST(BlockSystems, Primitivity)
{
  EXPECT_TRUE(is_primitive(sym(4)));
  EXPECT_FALSE(is_primitive(dihedral(8)));
  EXPECT_TRUE(is_primitive(cyclic(5)));
  EXPECT_FALSE(is_primitive(cyclic(6)));
  EXPECT_TRUE(is_primitive(psl2(7)));
  EXPECT_THROW(is_primitive(direct_product(cyclic(2), cyclic(3))), InvalidArgument);
}

TEST(BlockSystems, QuotientOfWreath)
{
  auto r = block_quotient_check(wreath(cyclic(2), dihedral(10)), 2);
  EXPECT_TRUE(r.implication_holds);
  EXPECT_EQ(r.system.blocks.size(), 5u);
  // vacuous for a group that is not p-concealed
  auto s = block_quotient_check(wreath(sym(3), cyclic(2)), 2);
  EXPECT_FALSE(s.group_concealed);
  EXPECT_TRUE(s.implication_holds);
}
