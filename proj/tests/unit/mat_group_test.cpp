#include <gtest/gtest.h>

#include "mh/catalog.hpp"
#include "mh/errors.hpp"
#include "mh/galois_field.hpp"
#include "mh/group_io.hpp"
#include "mh/mat_group.hpp"
#include "oracles.hpp"

using namespace mh;

namespace {

std::vector<std::uint64_t> sizes(std::vector<VectorOrbit> const &orbits)
{
  std::vector<std::uint64_t> out;
  for (auto const &o : orbits)
    out.push_back(o.size);
  return out;
}

MatGroup fixture(std::string const &name)
{
  return load_mat_group(fixture_dir() / (name + ".mgrp"));
}

} // namespace

TEST(FpMatrix, ActionIsOnTheRight)
{
  FpMatrix A(3, {{1, 2, 0}, {0, 1, 1}, {2, 0, 1}});
  FpMatrix B(3, {{0, 1, 0}, {1, 0, 0}, {0, 0, 2}});
  for (std::uint64_t v = 0; v < 27; ++v)
    EXPECT_EQ(B.apply(A.apply(v)), (A * B).apply(v));
  // row vector e_0 times A is the first row of A
  EXPECT_EQ(decode_vector(A.apply(1), 3, 3), (std::vector<unsigned>{1, 2, 0}));
}

TEST(FpMatrix, InverseAndDeterminant)
{
  FpMatrix A(5, {{1, 2, 3}, {0, 4, 1}, {2, 2, 2}});
  ASSERT_TRUE(A.is_invertible());
  EXPECT_EQ(A * A.inverse(), FpMatrix::identity(3, 5));
  FpMatrix S(3, {{1, 2}, {2, 1}});
  EXPECT_EQ(S.determinant(), 0u);
  EXPECT_EQ(A.transpose().determinant(), A.determinant());
}

TEST(FpMatrix, VectorCodes)
{
  EXPECT_EQ(encode_vector({2, 0, 1}, 3), 2u + 9u);
  for (std::uint64_t v = 0; v < 81; ++v)
    EXPECT_EQ(encode_vector(decode_vector(v, 4, 3), 3), v);
}

TEST(GaloisField, FieldAxiomsOnF8AndF9)
{
  for (auto [p, m] : {std::pair{2u, 3u}, std::pair{3u, 2u}}) {
    GaloisField F(p, m);
    auto q = F.size_u64();
    EXPECT_TRUE(is_irreducible_mod_p(F.modulus(), p));
    for (std::uint64_t a = 1; a < q; ++a) {
      auto x = F.element(a);
      EXPECT_EQ(F.index(F.mul(x, F.inv(x))), F.index(F.one()));
      EXPECT_EQ(F.index(F.pow(x, q - 1)), F.index(F.one()));
    }
    EXPECT_EQ(F.order_dividing(F.primitive_element(), q - 1), q - 1);
  }
  EXPECT_FALSE(is_irreducible_mod_p({1, 0, 1}, 2));   // x^2 + 1 = (x + 1)^2
  EXPECT_TRUE(is_irreducible_mod_p({1, 1, 1}, 2));
}

TEST(VectorOrbits, Examples)
{
  EXPECT_EQ(sizes(vector_orbits(groups::gl_mat(2, 3))), (std::vector<std::uint64_t>{1, 8}));
  MatGroup trivial(2, 3, {});
  auto t = sizes(vector_orbits(trivial));
  EXPECT_EQ(t, std::vector<std::uint64_t>(9, 1));
  EXPECT_EQ(sizes(vector_orbits(fixture("sl2_5_gl4_3"))),
            (std::vector<std::uint64_t>{1, 40, 40}));
}

TEST(VectorOrbits, SumToSpaceAndDivideOrder)
{
  for (auto const &M : {groups::gl_mat(2, 3), groups::sl_mat(2, 5), groups::gammal1_mat(2, 3),
                        fixture("gl1_3_wr_s2_gl2_3")}) {
    auto orbits = vector_orbits(M);
    std::uint64_t total = 0;
    auto order = M.order();
    for (auto const &o : orbits) {
      total += o.size;
      EXPECT_EQ(mpz_class(order % o.size), 0);
    }
    EXPECT_EQ(mpz_class(total), M.space_size());
  }
}

TEST(Exceptional, Examples)
{
  auto gl = is_p_exceptional(groups::gl_mat(2, 3));
  EXPECT_TRUE(gl.holds);
  EXPECT_EQ(gl.order, 48);

  auto tv = is_p_exceptional(MatGroup(2, 3, {FpMatrix(3, {{1, 1}, {0, 1}})}));
  EXPECT_FALSE(tv.holds);
  ASSERT_TRUE(tv.offending);
  EXPECT_EQ(sizes(tv.orbits), (std::vector<std::uint64_t>{1, 1, 1, 3, 3}));

  auto m11 = is_p_exceptional(fixture("m11_gl5_3"), {243});
  EXPECT_TRUE(m11.holds);
  EXPECT_EQ(m11.order, 7920);
  EXPECT_EQ(sizes(m11.orbits), (std::vector<std::uint64_t>{1, 22, 220}));
}

TEST(Irreducible, Examples)
{
  EXPECT_TRUE(is_irreducible(groups::gl_mat(2, 3)));
  MatGroup diag(2, 3, {FpMatrix(3, {{2, 0}, {0, 1}}), FpMatrix(3, {{1, 0}, {0, 2}})});
  EXPECT_FALSE(is_irreducible(diag));
  auto psl = fixture("psl2_11_gl5_3");
  EXPECT_TRUE(is_irreducible(psl, {243}));
  EXPECT_EQ(sizes(vector_orbits(psl, {243})), (std::vector<std::uint64_t>{1, 22, 110, 110}));
  EXPECT_EQ(spin_dimension(diag, {1}), 1u);
  EXPECT_EQ(spin_dimension(diag, {1, 3}), 2u);
}

TEST(AsPermGroup, Examples)
{
  auto g = groups::gl_mat(2, 2).as_perm_group();
  EXPECT_EQ(g.degree(), 4u);
  EXPECT_EQ(g.order(), 6);
  EXPECT_TRUE(MatGroup(2, 3, {}).as_perm_group().is_trivial());
  auto s = groups::sl_mat(2, 3).as_perm_group();
  EXPECT_EQ(s.degree(), 9u);
  EXPECT_EQ(s.order(), 24);
  EXPECT_THROW(groups::gl_mat(3, 11).as_perm_group(), BoundExceeded);
}

TEST(Imprimitive, CoordinateLinesOfMonomialGroup)
{
  auto r = check_imprimitive_decomposition(fixture("gl1_3_wr_s2_gl2_3"), {{1}, {3}});
  EXPECT_TRUE(r.stabilizer_transitive);
  EXPECT_TRUE(r.induced_transitive);
  EXPECT_EQ(r.induced.order(), 2);
  EXPECT_EQ(r.part_vectors[0].size(), 3u);   // a line over F_3, zero included
}

TEST(Imprimitive, PrimitiveGroupRejected)
{
  EXPECT_THROW(check_imprimitive_decomposition(groups::gl_mat(2, 3), {{1}, {3}}),
               InvalidArgument);
  EXPECT_THROW(check_imprimitive_decomposition(groups::gl_mat(2, 3), {{1}, {2}}),
               InvalidArgument);
}

TEST(Imprimitive, WreathFixtureOverThreeBlocks)
{
  auto M = fixture("gl2_2_wr_s3_gl6_2");
  EXPECT_EQ(M.order(), 1296);
  auto r = check_imprimitive_decomposition(M, {{1, 2}, {4, 8}, {16, 32}});
  EXPECT_TRUE(r.stabilizer_transitive);
  EXPECT_TRUE(r.induced_transitive);
  EXPECT_TRUE(r.induced_primitive);
  EXPECT_TRUE(r.induced_p_concealed);
  EXPECT_EQ(r.induced.order(), 6);
}
