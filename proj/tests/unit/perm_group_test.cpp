#include <set>

#include <gtest/gtest.h>

#include "mh/catalog.hpp"
#include "mh/errors.hpp"
#include "mh/group_structure.hpp"
#include "oracles.hpp"

using namespace mh;
using namespace mh::groups;

namespace {

std::vector<std::uint64_t> orders_of(std::vector<PermGroup> const &gs)
{
  std::vector<std::uint64_t> out;
  for (auto const &g : gs)
    out.push_back(g.order_u64());
  return out;
}

} // namespace

TEST(PermGroup, OrderExamples)
{
  EXPECT_EQ(PermGroup::trivial(3).order(), 1);
  EXPECT_EQ(sym(4).order(), 24);
  auto L = psl2(7);
  EXPECT_EQ(L.degree(), 8u);
  EXPECT_EQ(L.order(), 168);
  EXPECT_EQ(oracle::closure(L.degree(), L.generators()).size(), 168u);
}

TEST(PermGroup, OrderMatchesClosureAcrossCatalog)
{
  for (auto const &e : builtin_catalog()) {
    if (*e.expected_order > 400)
      continue;
    auto G = e.build();
    EXPECT_EQ(G.order_u64(), oracle::closure(G.degree(), G.generators()).size()) << e.name;
  }
}

TEST(PermGroup, RankUnrankRoundTrip)
{
  auto G = agl1(8);
  std::set<Perm> seen;
  G.for_each_element([&](std::uint64_t r, Perm const &g) {
    EXPECT_EQ(G.bsgs().rank(g), r);
    EXPECT_EQ(G.bsgs().unrank(r), g);
    seen.insert(g);
  });
  EXPECT_EQ(seen.size(), 56u);
  EXPECT_FALSE(G.contains(Perm::from_cycles(8, {{0, 1}})));
}

TEST(PermGroup, EnumerationBound)
{
  EXPECT_THROW(sym(8).elements(Limits{1000}), BoundExceeded);
}

TEST(ConjugacyClasses, Examples)
{
  ConjugacyClasses s3(sym(3));
  auto sizes = s3.sizes();
  std::sort(sizes.begin(), sizes.end());
  EXPECT_EQ(sizes, (std::vector<std::uint64_t>{1, 2, 3}));
  EXPECT_EQ(s3.sizes()[0], 1u);
  EXPECT_TRUE(s3.representatives()[0].is_identity());

  EXPECT_EQ(ConjugacyClasses(quaternion(8)).size(), 5u);
  ConjugacyClasses e(elementary_abelian(2, 3));
  EXPECT_EQ(e.size(), 8u);
  for (auto s : e.sizes())
    EXPECT_EQ(s, 1u);
}

TEST(ConjugacyClasses, MatchBruteForce)
{
  for (auto const &e : builtin_catalog()) {
    if (*e.expected_order > 200)
      continue;
    auto G = e.build();
    ConjugacyClasses cc(G);
    auto sizes = cc.sizes();
    std::sort(sizes.begin(), sizes.end());
    EXPECT_EQ(sizes, oracle::class_sizes(oracle::closure(G.degree(), G.generators())))
        << e.name;
    for (std::size_t i = 0; i < cc.size(); ++i) {
      EXPECT_EQ(cc.element_orders()[i], cc.representatives()[i].order());
      EXPECT_EQ(cc.class_of(cc.representatives()[i]), i);
      EXPECT_EQ(cc.centralizer_order(i) * cc.sizes()[i], G.order_u64());
    }
  }
}

TEST(Sylow, Examples)
{
  auto P = sylow(sym(4), 2);
  EXPECT_EQ(P.order(), 8);
  EXPECT_FALSE(is_abelian(P));
  EXPECT_EQ(sylow(sym(4), 3).order(), 3);
  EXPECT_EQ(sylow(alt(5), 5).order(), 5);
  EXPECT_TRUE(sylow(alt(5), 7).is_trivial());
}

TEST(Sylow, OrderIsFullPPart)
{
  for (auto const &e : builtin_catalog()) {
    if (*e.expected_order > 20000)
      continue;
    auto G = e.build();
    for (std::uint64_t p : {2, 3, 5, 7}) {
      auto P = sylow(G, p);
      EXPECT_EQ(P.order_u64(), oracle::p_part(G.order_u64(), p)) << e.name << " p=" << p;
      EXPECT_TRUE(P.is_subgroup_of(G));
      EXPECT_TRUE(P.is_trivial() || is_p_group(P, p));
    }
  }
}

TEST(Cores, Examples)
{
  auto S4 = sym(4);
  auto O2 = p_core(S4, 2);
  EXPECT_EQ(O2.order(), 4);
  EXPECT_TRUE(is_abelian(O2));
  EXPECT_TRUE(is_normal(S4, O2));
  EXPECT_TRUE(p_prime_core(S4, 2).is_trivial());
  EXPECT_EQ(p_prime_core(direct_product(alt(4), cyclic(3)), 2).order(), 3);

  EXPECT_EQ(p_residual(sym(3), 3).order(), 3);
  EXPECT_TRUE(p_residual(S4, 2).same_elements(S4));
  EXPECT_EQ(p_residual(cyclic(6), 2).order(), 2);
}

TEST(PPSeries, Examples)
{
  auto s = pp_series(sym(4), 2);
  EXPECT_EQ(orders_of(s.terms), (std::vector<std::uint64_t>{1, 4, 12, 24}));
  EXPECT_TRUE(s.reaches_group);
  EXPECT_EQ(s.p_length, 2u);

  auto q = pp_series(quaternion(8), 2);
  EXPECT_EQ(orders_of(q.terms), (std::vector<std::uint64_t>{1, 8}));
  EXPECT_EQ(q.p_length, 1u);

  auto a = pp_series(alt(5), 2);
  EXPECT_FALSE(a.reaches_group);
  EXPECT_EQ(orders_of(a.terms), (std::vector<std::uint64_t>{1}));
  EXPECT_FALSE(is_p_solvable(alt(5), 2));
  EXPECT_TRUE(is_p_solvable(alt(5), 7));
}

TEST(NormalSubgroups, Examples)
{
  EXPECT_EQ(orders_of(normal_subgroups(sym(4))), (std::vector<std::uint64_t>{1, 4, 12, 24}));
  EXPECT_EQ(orders_of(normal_subgroups(alt(5))), (std::vector<std::uint64_t>{1, 60}));
  EXPECT_EQ(normal_subgroups(elementary_abelian(2, 2)).size(), 5u);

  EXPECT_EQ(orders_of(minimal_normal_subgroups(sym(4))), (std::vector<std::uint64_t>{4}));
  auto c6 = orders_of(minimal_normal_subgroups(cyclic(6)));
  std::sort(c6.begin(), c6.end());
  EXPECT_EQ(c6, (std::vector<std::uint64_t>{2, 3}));
  EXPECT_EQ(orders_of(minimal_normal_subgroups(alt(5))), (std::vector<std::uint64_t>{60}));
}

TEST(NormalSubgroups, AreNormalAndClosedUnderConjugation)
{
  for (auto const &name : {"sym4", "dihedral16", "sl2_3", "s3_x_s3"}) {
    auto c = builtin_catalog();
    auto it = std::find_if(c.begin(), c.end(), [&](auto const &e) { return e.name == name; });
    ASSERT_NE(it, c.end());
    auto G = it->build();
    for (auto const &N : normal_subgroups(G)) {
      for (auto const &g : G.generators())
        for (auto const &n : N.generators())
          EXPECT_TRUE(N.contains(n.conjugate(g))) << name;
      EXPECT_EQ(G.order_u64() % N.order_u64(), 0u);
    }
  }
}

TEST(CosetAction, Examples)
{
  auto S4 = sym(4);
  auto V4 = p_core(S4, 2);
  auto q = coset_action(S4, V4);
  EXPECT_EQ(q.image.order(), 6);
  EXPECT_FALSE(is_abelian(q.image));
  EXPECT_TRUE(coset_action(S4, S4).image.is_trivial());
  EXPECT_EQ(coset_action(S4, alt(4)).image.order(), 2);
  EXPECT_THROW(coset_action(S4, sylow(S4, 3)), NotNormal);
}

TEST(CosetAction, IsHomomorphism)
{
  auto G = sym(4);
  auto q = coset_action(G, p_core(G, 2));
  auto elems = G.elements();
  for (auto const &a : elems)
    for (auto const &b : elems)
      ASSERT_EQ(q.image_of(a * b), q.image_of(a) * q.image_of(b));
}

TEST(Structure, SolvableAndNormalizer)
{
  EXPECT_TRUE(is_solvable(sym(4)));
  EXPECT_FALSE(is_solvable(alt(5)));
  auto S4 = sym(4);
  PermGroup C4(4, {Perm::from_cycles(4, {{0, 1, 2, 3}})});
  auto N = normalizer(S4, C4);
  EXPECT_EQ(N.order(), 8);

  // brute force: g normalizes C4 iff it conjugates the generator into C4
  std::uint64_t count = 0;
  for (auto const &g : S4.elements())
    if (C4.contains(C4.generators()[0].conjugate(g)))
      ++count;
  EXPECT_EQ(N.order_u64(), count);
}

TEST(Structure, CenterAndCentralizer)
{
  EXPECT_EQ(center(quaternion(8)).order(), 2);
  EXPECT_TRUE(center(sym(4)).is_trivial());
  EXPECT_EQ(center(extraspecial(3, ExtraspecialType::plus)).order(), 3);
  auto S4 = sym(4);
  auto t = Perm::from_cycles(4, {{0, 1}});
  EXPECT_EQ(centralizer(S4, std::vector<Perm>{t}).order(), 4);
}

TEST(AllSubgroups, MatchPairClosures)
{
  // every subgroup of Sym(4) is generated by two elements
  auto S4 = sym(4);
  auto elems = S4.elements();
  std::set<std::set<oracle::Images>> brute;
  for (auto const &a : elems)
    for (auto const &b : elems)
      brute.insert(oracle::closure(4, {a, b}));
  auto subs = all_subgroups(S4);
  EXPECT_EQ(subs.size(), brute.size());
  EXPECT_EQ(subs.size(), 30u);
  EXPECT_TRUE(subs.front().is_trivial());
  EXPECT_EQ(all_subgroups(elementary_abelian(2, 2)).size(), 5u);
}
