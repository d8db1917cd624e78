#include "mh/galois_field.hpp"

#include <algorithm>

#include "mh/errors.hpp"
#include "mh/numtheory.hpp"

namespace mh {

namespace {

using Poly = std::vector<std::uint64_t>;

void trim(Poly &a)
{
  while (!a.empty() && a.back() == 0)
    a.pop_back();
}

Poly poly_mod(Poly a, Poly const &f, std::uint64_t p)
{
  trim(a);
  auto const df = f.size() - 1;
  auto const lead_inv = invmod(f.back(), p);
  while (a.size() > df) {
    auto const shift = a.size() - 1 - df;
    auto const c = a.back() * lead_inv % p;
    for (std::size_t i = 0; i <= df; ++i)
      a[shift + i] = (a[shift + i] + (p - c) * f[i]) % p;
    trim(a);
  }
  return a;
}

Poly poly_mulmod(Poly const &a, Poly const &b, Poly const &f, std::uint64_t p)
{
  if (a.empty() || b.empty())
    return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0)
      continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  return poly_mod(std::move(r), f, p);
}

Poly poly_powmod(Poly base, std::uint64_t e, Poly const &f, std::uint64_t p)
{
  Poly r{1};
  base = poly_mod(std::move(base), f, p);
  while (e > 0) {
    if (e & 1u)
      r = poly_mulmod(r, base, f, p);
    base = poly_mulmod(base, base, f, p);
    e >>= 1;
  }
  return r;
}

Poly poly_gcd(Poly a, Poly b, std::uint64_t p)
{
  trim(a);
  trim(b);
  while (!b.empty()) {
    a = poly_mod(std::move(a), b, p);
    std::swap(a, b);
  }
  return a;
}

Poly poly_sub(Poly a, Poly const &b, std::uint64_t p)
{
  a.resize(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < b.size(); ++i)
    a[i] = (a[i] + p - b[i]) % p;
  trim(a);
  return a;
}

} // namespace

bool is_irreducible_mod_p(std::vector<std::uint32_t> const &poly, std::uint64_t p)
{
  Poly f(poly.begin(), poly.end());
  trim(f);
  if (f.size() < 2)
    return false;
  auto const m = static_cast<unsigned>(f.size() - 1);
  if (m == 1)
    return true;
  Poly const x{0, 1};

  // x^(p^k) mod f for k = 0..m
  std::vector<Poly> frob{poly_mod(x, f, p)};
  for (unsigned k = 1; k <= m; ++k)
    frob.push_back(poly_powmod(frob.back(), p, f, p));

  if (!poly_sub(frob[m], poly_mod(x, f, p), p).empty())
    return false;
  for (auto const &[r, e] : factorize(m)) {
    auto const g = poly_gcd(f, poly_sub(frob[m / r], poly_mod(x, f, p), p), p);
    if (g.size() != 1)
      return false;
  }
  return true;
}

GaloisField::GaloisField(std::uint64_t p, unsigned m) : p_(p), m_(m)
{
  if (!is_prime(p) || p >= (1u << 16))
    throw InvalidArgument("GaloisField: characteristic must be a prime below 2^16");
  if (m == 0)
    throw InvalidArgument("GaloisField: degree must be positive");
  mpz_ui_pow_ui(size_.get_mpz_t(), p, m);

  std::vector<std::uint32_t> f(m + 1, 0);
  f[m] = 1;
  for (;;) {
    if (is_irreducible_mod_p(f, p))
      break;
    // next candidate in base-p order of the lower coefficients
    unsigned i = 0;
    while (i < m && f[i] == p - 1)
      f[i++] = 0;
    if (i == m)
      throw std::logic_error("GaloisField: no irreducible polynomial found");
    ++f[i];
  }
  modulus_ = std::move(f);
}

std::uint64_t GaloisField::size_u64() const { return to_u64(size_); }

GaloisField::Element GaloisField::one() const
{
  Element e(m_, 0);
  e[0] = 1;
  return e;
}

GaloisField::Element GaloisField::from_int(std::int64_t c) const
{
  Element e(m_, 0);
  auto const pp = static_cast<std::int64_t>(p_);
  e[0] = static_cast<std::uint32_t>(((c % pp) + pp) % pp);
  return e;
}

GaloisField::Element GaloisField::element(std::uint64_t index) const
{
  Element e(m_, 0);
  for (unsigned i = 0; i < m_; ++i) {
    e[i] = static_cast<std::uint32_t>(index % p_);
    index /= p_;
  }
  return e;
}

std::uint64_t GaloisField::index(Element const &a) const
{
  std::uint64_t r = 0;
  for (unsigned i = m_; i-- > 0;)
    r = r * p_ + a[i];
  return r;
}

bool GaloisField::is_zero(Element const &a) const
{
  return std::all_of(a.begin(), a.end(), [](std::uint32_t c) { return c == 0; });
}

GaloisField::Element GaloisField::add(Element const &a, Element const &b) const
{
  Element r(m_);
  for (unsigned i = 0; i < m_; ++i)
    r[i] = static_cast<std::uint32_t>((a[i] + b[i]) % p_);
  return r;
}

GaloisField::Element GaloisField::sub(Element const &a, Element const &b) const
{
  Element r(m_);
  for (unsigned i = 0; i < m_; ++i)
    r[i] = static_cast<std::uint32_t>((a[i] + p_ - b[i]) % p_);
  return r;
}

GaloisField::Element GaloisField::neg(Element const &a) const
{
  return sub(zero(), a);
}

GaloisField::Element GaloisField::mul(Element const &a, Element const &b) const
{
  std::vector<std::uint64_t> r(2 * m_ - 1, 0);
  for (unsigned i = 0; i < m_; ++i) {
    if (a[i] == 0)
      continue;
    for (unsigned j = 0; j < m_; ++j)
      r[i + j] = (r[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p_;
  }
  // modulus is monic: x^m = -(f_0 + ... + f_{m-1} x^{m-1})
  for (std::size_t k = r.size(); k-- > m_;) {
    auto const c = r[k];
    if (c == 0)
      continue;
    r[k] = 0;
    for (unsigned i = 0; i < m_; ++i)
      r[k - m_ + i] = (r[k - m_ + i] + (p_ - c) * modulus_[i]) % p_;
  }
  Element out(m_);
  for (unsigned i = 0; i < m_; ++i)
    out[i] = static_cast<std::uint32_t>(r[i]);
  return out;
}

GaloisField::Element GaloisField::scale(Element const &a, std::uint64_t c) const
{
  Element r(m_);
  for (unsigned i = 0; i < m_; ++i)
    r[i] = static_cast<std::uint32_t>(a[i] * (c % p_) % p_);
  return r;
}

GaloisField::Element GaloisField::pow(Element const &a, mpz_class const &e) const
{
  Element r = one();
  auto const bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    r = mul(r, r);
    if (mpz_tstbit(e.get_mpz_t(), i))
      r = mul(r, a);
  }
  return r;
}

GaloisField::Element GaloisField::pow(Element const &a, std::uint64_t e) const
{
  return pow(a, mpz_class(static_cast<unsigned long>(e)));
}

GaloisField::Element GaloisField::inv(Element const &a) const
{
  if (is_zero(a))
    throw InvalidArgument("GaloisField: inverse of zero");
  return pow(a, mpz_class(size_ - 2));
}

std::uint64_t GaloisField::order_dividing(Element const &a, std::uint64_t n) const
{
  std::uint64_t order = n;
  for (auto const &[r, e] : factorize(n)) {
    for (unsigned i = 0; i < e; ++i) {
      if (pow(a, order / r) == one())
        order /= r;
      else
        break;
    }
  }
  return order;
}

GaloisField::Element GaloisField::element_of_order(std::uint64_t n) const
{
  mpz_class const q1 = size_ - 1;
  if (mpz_divisible_ui_p(q1.get_mpz_t(), n) == 0)
    throw InvalidArgument("element_of_order: order does not divide q - 1");
  mpz_class const cofactor = q1 / static_cast<unsigned long>(n);
  for (std::uint64_t idx = 1;; ++idx) {
    auto z = pow(element(idx), cofactor);
    if (order_dividing(z, n) == n)
      return z;
  }
}

GaloisField::Element GaloisField::primitive_element() const
{
  auto const q1 = to_u64(size_ - 1);
  for (std::uint64_t idx = 1;; ++idx) {
    auto c = element(idx);
    if (order_dividing(c, q1) == q1)
      return c;
  }
}

} // namespace mh
