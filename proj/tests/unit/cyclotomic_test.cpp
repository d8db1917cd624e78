#include <numeric>

#include <gtest/gtest.h>

#include "mh/cyclotomic.hpp"
#include "mh/numtheory.hpp"

using mh::Cyclotomic;

namespace {

int mobius(unsigned n)
{
  int mu = 1;
  for (auto [p, k] : mh::factorize(n)) {
    if (k > 1)
      return 0;
    mu = -mu;
  }
  return mu;
}

} // namespace

TEST(Cyclotomic, PolynomialsOfSmallConductor)
{
  using V = std::vector<mpz_class>;
  EXPECT_EQ(mh::cyclotomic_polynomial(1), (V{-1, 1}));
  EXPECT_EQ(mh::cyclotomic_polynomial(4), (V{1, 0, 1}));
  EXPECT_EQ(mh::cyclotomic_polynomial(6), (V{1, -1, 1}));
  EXPECT_EQ(mh::cyclotomic_polynomial(12), (V{1, 0, -1, 0, 1}));
}

TEST(Cyclotomic, RootsOfUnity)
{
  for (unsigned e : {3u, 4u, 5u, 8u, 12u, 15u, 21u}) {
    auto z = Cyclotomic::zeta_power(e, 1);
    Cyclotomic acc(1);
    Cyclotomic sum;
    for (unsigned k = 0; k < e; ++k) {
      EXPECT_EQ(acc, Cyclotomic::zeta_power(e, k));
      if (std::gcd(k, e) == 1)
        sum += acc;
      acc = acc * z;
    }
    EXPECT_EQ(acc, Cyclotomic(1));
    // sum of primitive e-th roots is the Mobius function
    EXPECT_TRUE(sum.is_rational());
    EXPECT_EQ(sum.rational_value(), mobius(e)) << e;
  }
}

TEST(Cyclotomic, ConjugationAndNorms)
{
  auto z = Cyclotomic::zeta_power(5, 1);
  EXPECT_EQ(z * z.conj(), Cyclotomic(1));
  auto x = z + Cyclotomic::zeta_power(5, 4);   // 2 cos(2 pi / 5)
  EXPECT_EQ(x * x + x, Cyclotomic(1));
  EXPECT_EQ(x.conj(), x);
  EXPECT_TRUE(x.is_algebraic_integer());
  EXPECT_FALSE((x * mpq_class(1, 2)).is_algebraic_integer());
}

TEST(Cyclotomic, EmbedIntoLargerConductor)
{
  auto w = Cyclotomic::zeta_power(3, 1);
  auto big = w.embed(12);
  EXPECT_EQ(big.conductor(), 12u);
  EXPECT_EQ(big, Cyclotomic::zeta_power(12, 4));
  // mixed conductors combine over the lcm
  auto i = Cyclotomic::zeta_power(4, 1);
  auto s = w + i;
  EXPECT_EQ(s.conductor() % 12, 0u);
  EXPECT_EQ(s - i, w);
}

TEST(Cyclotomic, SqrtMinusThree)
{
  auto w = Cyclotomic::zeta_power(3, 1);
  auto r = w - w.conj();
  EXPECT_EQ(r * r, Cyclotomic(-3));
  EXPECT_FALSE(r.is_rational());
  EXPECT_TRUE((r * r).is_integer());
}
