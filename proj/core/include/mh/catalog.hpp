#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "mh/mat_group.hpp"
#include "mh/perm_group.hpp"

namespace mh::groups {

PermGroup sym(unsigned n);
PermGroup alt(unsigned n);
PermGroup cyclic(unsigned n);
/// Dihedral group of the given order 2n acting on n >= 3 points.
PermGroup dihedral(unsigned order);
/// Dicyclic group of order 4m in its regular representation; order 8 is Q8.
PermGroup dicyclic(unsigned order);
PermGroup quaternion(unsigned order = 8);
/// Regular representation of (C_p)^k on p^k points.
PermGroup elementary_abelian(unsigned p, unsigned k);

enum class ExtraspecialType { plus, minus };

/// Extraspecial group of order p^3. For p = 2: plus is D8, minus is Q8. For
/// odd p: plus has exponent p (Heisenberg group on F_p^3), minus has
/// exponent p^2 (acting on Z/p^2).
PermGroup extraspecial(unsigned p, ExtraspecialType type);

/// Imprimitive wreath product: A on each of b blocks of size a, permuted by B.
/// Point i of block j is i + a*j.
PermGroup wreath(PermGroup const &A, PermGroup const &B);
PermGroup direct_product(PermGroup const &A, PermGroup const &B);

MatGroup gl_mat(unsigned n, unsigned p);
MatGroup sl_mat(unsigned n, unsigned p);
/// Multiplications and Frobenius of F_{p^m} as m x m matrices over F_p.
MatGroup gammal1_mat(unsigned p, unsigned m);
/// The semilinear group without the Frobenius.
MatGroup gl1_mat(unsigned p, unsigned m);

/// Affine extension of a linear group: the linear maps plus translations,
/// acting on all p^n vectors.
PermGroup affine(MatGroup const &M);
PermGroup agl(unsigned n, unsigned p);
PermGroup asl(unsigned n, unsigned p);
/// x -> ax + b (and x -> x^p for the semilinear version) on F_q, q a prime power.
PermGroup agl1(unsigned q);
PermGroup agammal1(unsigned q);

/// SL_2(q) on the q^2 - 1 nonzero vectors and PSL_2(q) on the q + 1 points
/// of the projective line, q a prime power at most 13.
PermGroup sl2(unsigned q);
PermGroup psl2(unsigned q);

PermGroup mathieu11();

} // namespace mh::groups

namespace mh {

struct CatalogEntry
{
  std::string name;
  std::function<PermGroup()> build;
  std::optional<std::uint64_t> expected_order;
  std::vector<std::string> tags;

  bool has_tag(std::string const &t) const;
};

/// Builds and checks the expected order. Throws Error on mismatch.
PermGroup build_validated(CatalogEntry const &entry);

/// The default verification catalog.
std::vector<CatalogEntry> builtin_catalog();

/// One entry per *.pgrp file, sorted by file name.
std::vector<CatalogEntry> directory_catalog(std::filesystem::path const &dir);

/// Fixture directory: $MH_FIXTURE_DIR when set, else the configured default.
std::filesystem::path fixture_dir();

} // namespace mh
