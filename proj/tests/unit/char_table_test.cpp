#include <algorithm>

#include <gtest/gtest.h>

#include "json.hpp"
#include "mh/catalog.hpp"
#include "mh/char_table.hpp"
#include "mh/errors.hpp"
#include "oracles.hpp"

using namespace mh;
using namespace mh::groups;

namespace {

std::size_t class_with(ConjugacyClasses const &cc, std::uint64_t order, std::uint64_t size)
{
  for (std::size_t i = 0; i < cc.size(); ++i)
    if (cc.element_orders()[i] == order && cc.sizes()[i] == size)
      return i;
  throw std::logic_error("no such class");
}

std::set<oracle::Images> class_elements(PermGroup const &G, Perm const &rep)
{
  std::vector<mh::Point> r(rep.images().begin(), rep.images().end());
  return oracle::conjugacy_class(oracle::closure(G.degree(), G.generators()), r);
}

std::vector<std::uint64_t> sorted_degrees(CharacterTable const &t)
{
  auto d = t.degrees();
  std::sort(d.begin(), d.end());
  return d;
}

} // namespace

TEST(ClassMultiplication, IdentityClassIsDelta)
{
  ConjugacyClasses cc(sym(4));
  auto a = class_mult_coefficients(cc);
  for (std::size_t j = 0; j < cc.size(); ++j)
    for (std::size_t k = 0; k < cc.size(); ++k)
      EXPECT_EQ(a(0, j, k), j == k ? 1u : 0u);
}

TEST(ClassMultiplication, Sym3AgainstBruteForce)
{
  auto G = sym(3);
  ConjugacyClasses cc(G);
  auto a = class_mult_coefficients(cc);
  auto t = class_with(cc, 2, 3), c = class_with(cc, 3, 2);
  auto T = class_elements(G, cc.representatives()[t]);
  auto C = class_elements(G, cc.representatives()[c]);
  for (auto [i, j, k, Ki, Kj, zk] :
       {std::tuple{t, t, c, &T, &T, cc.representatives()[c]},
        std::tuple{t, c, t, &T, &C, cc.representatives()[t]},
        std::tuple{c, c, c, &C, &C, cc.representatives()[c]}}) {
    std::vector<mh::Point> z(zk.images().begin(), zk.images().end());
    EXPECT_EQ(a(i, j, k), oracle::class_product_count(*Ki, *Kj, z));
  }
  // transposition times 3-cycle landing on a fixed transposition
  EXPECT_EQ(a(t, c, t), 2u);
  EXPECT_EQ(a(t, t, c), 3u);
}

TEST(ClassMultiplication, CountingIdentity)
{
  for (auto const &G : {sym(4), quaternion(8), psl2(7), agl1(7)}) {
    ConjugacyClasses cc(G);
    auto a = class_mult_coefficients(cc);
    auto const &s = cc.sizes();
    for (std::size_t i = 0; i < cc.size(); ++i)
      for (std::size_t j = 0; j < cc.size(); ++j) {
        std::uint64_t lhs = 0;
        for (std::size_t k = 0; k < cc.size(); ++k)
          lhs += a(i, j, k) * s[k];
        EXPECT_EQ(lhs, s[i] * s[j]);
      }
  }
}

TEST(ClassMultiplication, IndependentOfRepresentative)
{
  auto G = sym(4);
  ConjugacyClasses cc(G);
  auto a = class_mult_coefficients(cc);
  for (auto const &z : G.elements()) {
    auto k = cc.class_of(z);
    auto col = class_mult_column(cc, z);
    for (std::size_t i = 0; i < cc.size(); ++i)
      for (std::size_t j = 0; j < cc.size(); ++j)
        ASSERT_EQ(col[i * cc.size() + j], a(i, j, k));
  }
}

TEST(CharacterTable, CyclicTwo)
{
  auto t = character_table(cyclic(2));
  ASSERT_EQ(t.size(), 2u);
  EXPECT_EQ(t.value(0, 0), Cyclotomic(1));
  EXPECT_EQ(t.value(0, 1), Cyclotomic(1));
  EXPECT_EQ(t.value(1, 0), Cyclotomic(1));
  EXPECT_EQ(t.value(1, 1), Cyclotomic(-1));
}

TEST(CharacterTable, DegreeExamples)
{
  EXPECT_EQ(sorted_degrees(character_table(sym(4))), (std::vector<std::uint64_t>{1, 1, 2, 3, 3}));
  EXPECT_EQ(sorted_degrees(character_table(quaternion(8))),
            (std::vector<std::uint64_t>{1, 1, 1, 1, 2}));
  auto a5 = character_table(alt(5));
  EXPECT_EQ(a5.conductor() % 5, 0u);
  EXPECT_EQ(sorted_degrees(a5), (std::vector<std::uint64_t>{1, 3, 3, 4, 5}));
}

TEST(CharacterTable, DegreeSets)
{
  auto d8 = char_degrees(character_table(dihedral(8)));
  EXPECT_EQ(d8.cd, (std::set<std::uint64_t>{1, 2}));
  EXPECT_EQ(d8.b, 2u);
  EXPECT_EQ(char_degrees(character_table(extraspecial(3, ExtraspecialType::plus))).cd,
            (std::set<std::uint64_t>{1, 3}));
  EXPECT_EQ(char_degrees(character_table(cyclic(12))).cd, (std::set<std::uint64_t>{1}));
}

TEST(CharacterTable, PermutationCharacterMinusTrivialIsARow)
{
  // fix(g) - 1 is irreducible for doubly transitive groups
  for (auto const &G : {sym(4), sym(5), alt(5), psl2(7), agl1(7)}) {
    auto t = character_table(G);
    std::vector<Cyclotomic> chi;
    for (auto const &r : t.classes().representatives()) {
      long fixed = 0;
      for (std::size_t x = 0; x < r.degree(); ++x)
        fixed += r[x] == x;
      chi.emplace_back(mpq_class(fixed - 1));
    }
    EXPECT_EQ(inner_product(t, chi, chi), 1);
    bool found = false;
    for (std::size_t r = 0; r < t.size(); ++r)
      found = found || t.row(r) == chi;
    EXPECT_TRUE(found);
  }
}

TEST(CharacterTable, OrthogonalityOnSmallCatalogGroups)
{
  for (auto const &e : builtin_catalog()) {
    if (*e.expected_order > 500)
      continue;
    auto t = character_table(e.build());
    EXPECT_TRUE(verify_orthogonality(t).ok()) << e.name;
    for (std::size_t r = 0; r < t.size(); ++r) {
      EXPECT_EQ(*e.expected_order % t.degree(r), 0u) << e.name;
      for (std::size_t k = 0; k < t.size(); ++k)
        EXPECT_TRUE(t.value(r, k).is_algebraic_integer()) << e.name;
    }
    EXPECT_EQ(t.row(0), std::vector<Cyclotomic>(t.size(), Cyclotomic(1)));
  }
}

TEST(CharacterTable, Bounds)
{
  EXPECT_THROW(character_table(sym(8)), BoundExceeded);
  EXPECT_THROW(character_table(sym(5), ChartabLimits{20000, 5}), BoundExceeded);
}

TEST(CharacterTable, RestrictionConstituents)
{
  auto S3 = sym(3);
  auto tG = character_table(S3);
  auto tN = character_table(alt(3));
  auto m = restriction_constituents(tG, tN);
  std::size_t two = std::find(tG.degrees().begin(), tG.degrees().end(), 2u) - tG.degrees().begin();
  EXPECT_EQ(m[0], (std::vector<std::uint64_t>{1, 0, 0}));
  EXPECT_EQ(m[two], (std::vector<std::uint64_t>{0, 1, 1}));

  auto Q = quaternion(8);
  auto tq = character_table(Q);
  auto tz = character_table(center(Q));
  auto mq = restriction_constituents(tq, tz);
  std::size_t d2 = std::find(tq.degrees().begin(), tq.degrees().end(), 2u) - tq.degrees().begin();
  EXPECT_EQ(mq[d2], (std::vector<std::uint64_t>{0, 2}));

  EXPECT_THROW(restriction_constituents(character_table(sym(4)), character_table(sylow(sym(4), 3))),
               NotNormal);
}

TEST(CharacterTable, KernelContaining)
{
  auto S4 = sym(4);
  auto t = character_table(S4);
  auto rows = characters_with_kernel_containing(t, p_core(S4, 2));
  std::vector<std::uint64_t> d;
  for (auto r : rows)
    d.push_back(t.degree(r));
  std::sort(d.begin(), d.end());
  EXPECT_EQ(d, (std::vector<std::uint64_t>{1, 1, 2}));
  EXPECT_EQ(characters_with_kernel_containing(t, PermGroup::trivial(4)).size(), 5u);
  EXPECT_EQ(characters_with_kernel_containing(t, alt(4)).size(), 2u);
}

TEST(CharacterTable, JsonIsCanonical)
{
  auto t = character_table(alt(5));
  auto a = table_to_json(t);
  EXPECT_EQ(a, table_to_json(character_table(alt(5))));
  auto j = nlohmann::json::parse(a);
  EXPECT_TRUE(j.is_object());
  EXPECT_FALSE(format_table(t).empty());
}
