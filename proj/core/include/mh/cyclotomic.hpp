#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace mh {

/// Q(zeta_e) with power basis 1, z, ..., z^(phi(e)-1) modulo the cyclotomic
/// polynomial. Instances are cached and shared per conductor.
class CyclotomicField
{
public:
  static std::shared_ptr<CyclotomicField const> get(unsigned conductor);

  unsigned conductor() const { return e_; }
  unsigned degree() const { return phi_; }

  /// Coefficients of Phi_e, constant term first, monic.
  std::vector<mpz_class> const &polynomial() const { return poly_; }

  /// Power-basis coordinates of z^j, 0 <= j < e (all integral).
  std::vector<mpz_class> const &power(unsigned j) const { return powers_[j % e_]; }

  explicit CyclotomicField(unsigned conductor);

private:
  unsigned e_;
  unsigned phi_;
  std::vector<mpz_class> poly_;
  std::vector<std::vector<mpz_class>> powers_;
};

/// Integer coefficients of the e-th cyclotomic polynomial, constant term first.
std::vector<mpz_class> cyclotomic_polynomial(unsigned e);

/// Exact element of Q(zeta_e) in reduced power-basis form.
class Cyclotomic
{
public:
  Cyclotomic();   // zero in Q
  Cyclotomic(mpq_class const &r, unsigned conductor = 1);

  static Cyclotomic zeta_power(unsigned conductor, std::int64_t k);

  /// sum_j coeffs[j] * zeta_e^j for j < e (group ring element reduced).
  static Cyclotomic from_group_ring(unsigned conductor, std::vector<mpz_class> const &coeffs);
  static Cyclotomic from_coefficients(unsigned conductor, std::vector<mpq_class> coeffs);

  unsigned conductor() const { return field_->conductor(); }
  std::vector<mpq_class> const &coefficients() const { return c_; }

  Cyclotomic operator+(Cyclotomic const &rhs) const;
  Cyclotomic operator-(Cyclotomic const &rhs) const;
  Cyclotomic operator-() const;
  Cyclotomic operator*(Cyclotomic const &rhs) const;
  Cyclotomic operator*(mpq_class const &r) const;
  Cyclotomic &operator+=(Cyclotomic const &rhs) { return *this = *this + rhs; }

  Cyclotomic conj() const;

  /// The same number written over a multiple of the conductor.
  Cyclotomic embed(unsigned conductor) const;

  bool is_zero() const;
  bool is_rational() const;
  bool is_integer() const;
  /// Integrality of the power-basis coordinates, which form a Z-basis of
  /// the ring of integers.
  bool is_algebraic_integer() const;
  mpq_class rational_value() const;   // requires is_rational()

  std::string to_string() const;

  friend bool operator==(Cyclotomic const &a, Cyclotomic const &b);

private:
  Cyclotomic(std::shared_ptr<CyclotomicField const> field, std::vector<mpq_class> c);

  std::shared_ptr<CyclotomicField const> field_;
  std::vector<mpq_class> c_;
};

/// Common conductor for binary operations.
unsigned common_conductor(unsigned a, unsigned b);

} // namespace mh
