#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "mh/cyclotomic.hpp"
#include "mh/group_structure.hpp"

namespace mh {

struct ChartabLimits
{
  std::uint64_t max_order = 20000;
  std::size_t max_classes = 60;
};

/// a(i,j,k) = #{(x,y) in K_i x K_j : xy = z} for a fixed z in K_k.
class ClassMultiplication
{
public:
  explicit ClassMultiplication(std::size_t k) : k_(k), a_(k * k * k, 0) {}

  std::size_t size() const { return k_; }
  std::uint32_t operator()(std::size_t i, std::size_t j, std::size_t k) const
  {
    return a_[(i * k_ + j) * k_ + k];
  }
  std::uint32_t &at(std::size_t i, std::size_t j, std::size_t k)
  {
    return a_[(i * k_ + j) * k_ + k];
  }

private:
  std::size_t k_;
  std::vector<std::uint32_t> a_;
};

ClassMultiplication class_mult_coefficients(ConjugacyClasses const &classes);

/// Same counts, but with z taken as the given element of class k. Used to
/// check independence of the representative.
std::vector<std::uint32_t> class_mult_column(ConjugacyClasses const &classes, Perm const &z);

/// Irreducible characters as rows over the classes. Row 0 is the trivial
/// character; the others are ordered by degree, then by the eigenvalue
/// multiplicities of their representations class by class.
class CharacterTable
{
public:
  ConjugacyClasses const &classes() const { return classes_; }
  PermGroup const &group() const { return classes_.group(); }

  std::size_t size() const { return values_.size(); }
  unsigned conductor() const { return conductor_; }

  Cyclotomic const &value(std::size_t row, std::size_t cls) const { return values_[row][cls]; }
  std::vector<Cyclotomic> const &row(std::size_t r) const { return values_[r]; }

  std::uint64_t degree(std::size_t row) const { return degrees_[row]; }
  std::vector<std::uint64_t> const &degrees() const { return degrees_; }

  /// Working prime of the modular computation.
  std::uint64_t working_prime() const { return prime_; }

  /// Multiplicity of zeta_o^t as an eigenvalue of the representation at the
  /// class representative of order o, t = 0..o-1.
  std::vector<std::uint32_t> const &spectrum(std::size_t row, std::size_t cls) const
  {
    return spectra_[row][cls];
  }

  friend CharacterTable character_table(ConjugacyClasses classes, ChartabLimits const &limits);

private:
  explicit CharacterTable(ConjugacyClasses classes) : classes_(std::move(classes)) {}

  ConjugacyClasses classes_;
  unsigned conductor_ = 1;
  std::uint64_t prime_ = 0;
  std::vector<std::vector<Cyclotomic>> values_;
  std::vector<std::uint64_t> degrees_;
  std::vector<std::vector<std::vector<std::uint32_t>>> spectra_;
};

CharacterTable character_table(ConjugacyClasses classes, ChartabLimits const &limits = {});
CharacterTable character_table(PermGroup const &G, ChartabLimits const &limits = {});

struct OrthogonalityReport
{
  bool rows = false;
  bool columns = false;
  bool degree_squares = false;   // sum of squared degrees is |G|
  bool square = false;           // as many rows as classes
  bool trivial_first = false;

  bool ok() const { return rows && columns && degree_squares && square && trivial_first; }
};

/// Exact check of both orthogonality relations.
OrthogonalityReport verify_orthogonality(CharacterTable const &table);

/// (1/|G|) sum_j |K_j| a_j conj(b_j) for class functions a, b.
mpq_class inner_product(CharacterTable const &table, std::vector<Cyclotomic> const &a,
                        std::vector<Cyclotomic> const &b);

struct CharDegrees
{
  std::vector<std::uint64_t> multiset;   // ascending
  std::set<std::uint64_t> cd;
  std::uint64_t b = 1;
};

CharDegrees char_degrees(CharacterTable const &table);

/// For each class of N (a subgroup of G on the same points), the class of G
/// containing its representative.
std::vector<std::size_t> class_fusion(CharacterTable const &table_N,
                                      CharacterTable const &table_G);

/// m[chi][theta] = <chi|_N, theta>_N. Throws NotNormal unless N is normal in G.
std::vector<std::vector<std::uint64_t>>
restriction_constituents(CharacterTable const &table_G, CharacterTable const &table_N);

/// Rows whose kernel contains N, that is chi(g) = chi(1) for all g in N.
std::vector<std::size_t> characters_with_kernel_containing(CharacterTable const &table,
                                                           PermGroup const &N);

/// Rows chi with chi(g) = chi(1) on every class of the given mask.
std::vector<std::size_t> characters_trivial_on(CharacterTable const &table,
                                               std::vector<bool> const &class_mask);

std::string format_table(CharacterTable const &table);

/// Canonical JSON: class data, degrees and values as power-basis coefficient
/// vectors over the conductor.
std::string table_to_json(CharacterTable const &table, int indent = -1);

} // namespace mh
