#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "mh/perm_group.hpp"

namespace mh {

/// Square matrix over F_p, p a prime below 256. Vectors are rows and act on
/// the right: v -> vA, so (vA)B = v(AB).
class FpMatrix
{
public:
  FpMatrix() = default;
  FpMatrix(unsigned dim, unsigned p);   // zero matrix
  FpMatrix(unsigned p, std::vector<std::vector<unsigned>> const &rows);

  static FpMatrix identity(unsigned dim, unsigned p);

  unsigned dim() const { return dim_; }
  unsigned prime() const { return p_; }

  unsigned at(unsigned i, unsigned j) const { return entries_[i * dim_ + j]; }
  void set(unsigned i, unsigned j, unsigned v);

  std::vector<std::vector<unsigned>> rows() const;

  FpMatrix operator*(FpMatrix const &rhs) const;
  friend bool operator==(FpMatrix const &, FpMatrix const &) = default;

  unsigned determinant() const;
  bool is_invertible() const { return determinant() != 0; }
  FpMatrix inverse() const;
  FpMatrix transpose() const;

  /// Image of the vector with code v (coordinate i has weight p^i).
  std::uint64_t apply(std::uint64_t v) const;

  std::string to_string() const;

private:
  unsigned dim_ = 0;
  unsigned p_ = 2;
  std::vector<std::uint8_t> entries_;
};

/// Coordinates of F_p^n packed into integers, coordinate i having weight p^i.
std::vector<unsigned> decode_vector(std::uint64_t code, unsigned dim, unsigned p);
std::uint64_t encode_vector(std::vector<unsigned> const &coords, unsigned p);

/// Bound on p^n for routines that walk the whole natural module.
struct SpaceLimits
{
  std::uint64_t max_vectors = 729;
};

struct VectorOrbit
{
  std::uint64_t representative;   // smallest code in the orbit
  std::uint64_t size;
};

class MatGroup
{
public:
  MatGroup(unsigned dim, unsigned p, std::vector<FpMatrix> generators);

  unsigned dim() const { return dim_; }
  unsigned prime() const { return p_; }
  std::vector<FpMatrix> const &generators() const { return generators_; }

  mpz_class space_size() const;

  /// Faithful action on all p^n vectors; the zero vector is point 0.
  PermGroup as_perm_group(SpaceLimits const &limits = {}) const;

  mpz_class order(SpaceLimits const &limits = {}) const;

private:
  unsigned dim_;
  unsigned p_;
  std::vector<FpMatrix> generators_;
};

/// Orbits on the natural module, zero vector included, sorted by
/// (size, representative).
std::vector<VectorOrbit> vector_orbits(MatGroup const &M, SpaceLimits const &limits = {});

struct ExceptionalReport
{
  bool holds = false;
  bool p_divides_order = false;
  mpz_class order;
  std::vector<VectorOrbit> orbits;
  std::optional<std::uint64_t> offending;   // representative of an orbit of size divisible by p
};

ExceptionalReport is_p_exceptional(MatGroup const &M, SpaceLimits const &limits = {});

/// Decided by spinning every line: irreducible iff each nonzero vector
/// generates the whole module.
bool is_irreducible(MatGroup const &M, SpaceLimits const &limits = {});

/// Dimension of the submodule generated by the given vectors.
unsigned spin_dimension(MatGroup const &M, std::vector<std::uint64_t> const &vectors);

struct ImprimitivityReport
{
  std::vector<std::vector<std::uint64_t>> part_vectors;   // all vectors of each part
  PermGroup induced;              // action on the parts
  bool stabilizer_transitive = false;
  bool induced_transitive = false;
  bool induced_primitive = false;
  bool induced_p_concealed = false;
};

/// Checks a supplied decomposition V = V_1 + ... + V_r (each part given by a
/// spanning set of vector codes). Throws InvalidArgument when the parts do
/// not form a direct sum or are not permuted by the group.
ImprimitivityReport check_imprimitive_decomposition(
  MatGroup const &M, std::vector<std::vector<std::uint64_t>> const &parts,
  SpaceLimits const &limits = {});

} // namespace mh
