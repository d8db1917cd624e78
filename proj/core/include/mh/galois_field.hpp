#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace mh {

/// The field F_{p^m} realised as F_p[x]/(f) for the smallest monic
/// irreducible f of degree m, where polynomials are ordered by their
/// coefficient vector read as a base-p number (constant term least
/// significant). Elements are coefficient vectors of length m; the same
/// base-p reading gives each element an index in [0, p^m).
class GaloisField
{
public:
  using Element = std::vector<std::uint32_t>;

  GaloisField(std::uint64_t p, unsigned m);

  std::uint64_t characteristic() const { return p_; }
  unsigned degree() const { return m_; }
  mpz_class const &size() const { return size_; }
  std::uint64_t size_u64() const;

  /// Coefficients of the defining polynomial, constant term first, monic.
  std::vector<std::uint32_t> const &modulus() const { return modulus_; }

  Element zero() const { return Element(m_, 0); }
  Element one() const;
  Element from_int(std::int64_t c) const;
  Element element(std::uint64_t index) const;
  std::uint64_t index(Element const &a) const;

  bool is_zero(Element const &a) const;

  Element add(Element const &a, Element const &b) const;
  Element sub(Element const &a, Element const &b) const;
  Element neg(Element const &a) const;
  Element mul(Element const &a, Element const &b) const;
  Element scale(Element const &a, std::uint64_t c) const;
  Element pow(Element const &a, mpz_class const &e) const;
  Element pow(Element const &a, std::uint64_t e) const;
  Element inv(Element const &a) const;

  /// Multiplicative order of a nonzero element whose order divides n.
  std::uint64_t order_dividing(Element const &a, std::uint64_t n) const;

  /// c^((q-1)/n) for the smallest-index c for which this has order exactly n.
  /// Requires n | q - 1.
  Element element_of_order(std::uint64_t n) const;

  /// Smallest-index generator of the multiplicative group.
  Element primitive_element() const;

private:
  std::uint64_t p_;
  unsigned m_;
  mpz_class size_;
  std::vector<std::uint32_t> modulus_;
};

/// Rabin's irreducibility test over F_p. Coefficients constant term first.
bool is_irreducible_mod_p(std::vector<std::uint32_t> const &poly, std::uint64_t p);

} // namespace mh
