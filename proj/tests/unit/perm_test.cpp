#include <gtest/gtest.h>

#include "mh/errors.hpp"
#include "mh/perm.hpp"
#include "oracles.hpp"

using mh::Perm;

TEST(Perm, ProductComposesLeftToRight)
{
  auto a = Perm::from_cycles(3, {{0, 1}});
  auto b = Perm::from_cycles(3, {{1, 2}});
  auto ab = a * b;
  // 0 -> 1 under a, then 1 -> 2 under b
  EXPECT_EQ(ab[0], 2);
  EXPECT_EQ(ab[1], 0);
  EXPECT_EQ(ab[2], 1);
  EXPECT_EQ(ab.to_string(), "(1,3,2)");
}

TEST(Perm, ConjugateIsInverseTimesSelfTimes)
{
  auto x = Perm::from_cycles(5, {{0, 1, 2}});
  auto h = Perm::from_cycles(5, {{2, 3, 4}, {0, 1}});
  EXPECT_EQ(x.conjugate(h), h.inverse() * x * h);
  // conjugation relabels the cycle through h
  EXPECT_EQ(x.conjugate(h), Perm::from_cycles(5, {{h[0], h[1], h[2]}}));
}

TEST(Perm, RejectsNonBijection)
{
  EXPECT_THROW(Perm(std::vector<mh::Point>{0, 0, 1}), mh::InvalidArgument);
}

TEST(Perm, OrderAndPower)
{
  auto g = Perm::from_cycles(7, {{0, 1, 2}, {3, 4, 5, 6}});
  EXPECT_EQ(g.order(), 12u);
  EXPECT_TRUE(g.pow(12).is_identity());
  EXPECT_EQ(g.pow(-1), g.inverse());
  EXPECT_EQ(g.pow(5), g * g * g * g * g);
  std::vector<mh::Point> img(g.images().begin(), g.images().end());
  EXPECT_EQ(oracle::element_order(img), g.order());
}

TEST(Perm, CyclesAndString)
{
  auto g = Perm::from_cycles(6, {{4, 2}, {0, 5, 1}});
  EXPECT_EQ(g.to_string(), "(1,6,2)(3,5)");
  EXPECT_EQ(g.to_string(false), "(0,5,1)(2,4)");
  EXPECT_EQ(Perm(4).to_string(), "()");
  EXPECT_EQ(g.smallest_moved_point(), 0);
  EXPECT_FALSE(Perm(3).smallest_moved_point());
}

TEST(Perm, MultiplyIntoMatchesOperator)
{
  auto a = Perm::from_cycles(5, {{0, 3, 4}});
  auto b = Perm::from_cycles(5, {{1, 3}, {2, 4}});
  std::vector<mh::Point> out;
  mh::multiply_into(a, b, out);
  EXPECT_EQ(Perm(out), a * b);
}
