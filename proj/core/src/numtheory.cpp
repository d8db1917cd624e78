#include "mh/numtheory.hpp"

#include <cmath>
#include <numeric>

#include "mh/errors.hpp"

namespace mh {

bool is_prime(u64 n)
{
  if (n < 2)
    return false;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d == 0)
      return false;
  }
  return true;
}

std::vector<std::pair<u64, unsigned>> factorize(u64 n)
{
  std::vector<std::pair<u64, unsigned>> result;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d != 0)
      continue;
    unsigned e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    result.emplace_back(d, e);
  }
  if (n > 1)
    result.emplace_back(n, 1);
  return result;
}

std::vector<u64> prime_divisors(u64 n)
{
  std::vector<u64> result;
  for (auto const &[p, e] : factorize(n))
    result.push_back(p);
  return result;
}

std::vector<u64> prime_divisors(mpz_class const &n)
{
  std::vector<u64> result;
  mpz_class m = n;
  for (u64 d = 2; mpz_class(d) * d <= m; ++d) {
    if (mpz_divisible_ui_p(m.get_mpz_t(), d) == 0)
      continue;
    result.push_back(d);
    while (mpz_divisible_ui_p(m.get_mpz_t(), d) != 0)
      m /= d;
  }
  if (m > 1)
    result.push_back(to_u64(m));
  return result;
}

unsigned p_valuation(u64 n, u64 p)
{
  unsigned v = 0;
  while (n != 0 && n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

unsigned p_valuation(mpz_class const &n, u64 p)
{
  if (n == 0)
    return 0;
  mpz_class m = n;
  unsigned v = 0;
  while (mpz_divisible_ui_p(m.get_mpz_t(), p) != 0) {
    m /= p;
    ++v;
  }
  return v;
}

u64 p_part(u64 n, u64 p) { return ipow(p, p_valuation(n, p)); }

u64 ipow(u64 base, unsigned exp)
{
  u64 r = 1;
  while (exp-- > 0)
    r *= base;
  return r;
}

u64 mulmod(u64 a, u64 b, u64 m)
{
  return static_cast<u64>(static_cast<unsigned __int128>(a) * b % m);
}

u64 powmod(u64 base, u64 exp, u64 m)
{
  u64 r = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1u)
      r = mulmod(r, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return r;
}

u64 invmod(u64 a, u64 m)
{
  // extended Euclid on signed 128-bit to stay exact
  __int128 t = 0, new_t = 1;
  __int128 r = m, new_r = a % m;
  while (new_r != 0) {
    __int128 q = r / new_r;
    t -= q * new_t;
    std::swap(t, new_t);
    r -= q * new_r;
    std::swap(r, new_r);
  }
  if (r != 1)
    throw InvalidArgument("invmod: not invertible");
  if (t < 0)
    t += m;
  return static_cast<u64>(t);
}

u64 multiplicative_order(u64 a, u64 m)
{
  if (m == 1)
    return 1;
  if (std::gcd(a, m) != 1)
    throw InvalidArgument("multiplicative_order: gcd(a, m) != 1");
  u64 order = 1;
  u64 x = a % m;
  while (x != 1) {
    x = mulmod(x, a, m);
    ++order;
  }
  return order;
}

u64 primitive_root(u64 p)
{
  auto const primes = prime_divisors(p - 1);
  for (u64 g = 1; g < p; ++g) {
    bool ok = true;
    for (u64 q : primes) {
      if (powmod(g, (p - 1) / q, p) == 1) {
        ok = false;
        break;
      }
    }
    if (ok)
      return g;
  }
  throw InvalidArgument("primitive_root: argument not prime");
}

u64 smallest_prime_congruent_one(u64 modulus, u64 lower_bound)
{
  u64 l = (lower_bound + modulus - 1) / modulus * modulus + 1;
  while (!is_prime(l))
    l += modulus;
  return l;
}

u64 isqrt(u64 n)
{
  auto r = static_cast<u64>(std::sqrt(static_cast<long double>(n)));
  while (r * r > n)
    --r;
  while ((r + 1) * (r + 1) <= n)
    ++r;
  return r;
}

mpz_class factorial(unsigned n)
{
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

u64 to_u64(mpz_class const &n)
{
  if (n < 0 || mpz_sizeinbase(n.get_mpz_t(), 2) > 64)
    throw BoundExceeded("integer does not fit into 64 bits");
  u64 r = 0;
  mpz_export(&r, nullptr, -1, sizeof(r), 0, 0, n.get_mpz_t());
  return r;
}

} // namespace mh
