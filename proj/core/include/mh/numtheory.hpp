#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace mh {

using u64 = std::uint64_t;

bool is_prime(u64 n);

/// Prime factorization by trial division, primes ascending.
std::vector<std::pair<u64, unsigned>> factorize(u64 n);

std::vector<u64> prime_divisors(u64 n);
std::vector<u64> prime_divisors(mpz_class const &n);

/// Largest k with p^k | n. n must be nonzero.
unsigned p_valuation(u64 n, u64 p);
unsigned p_valuation(mpz_class const &n, u64 p);

u64 p_part(u64 n, u64 p);

u64 ipow(u64 base, unsigned exp);

u64 mulmod(u64 a, u64 b, u64 m);
u64 powmod(u64 base, u64 exp, u64 m);
u64 invmod(u64 a, u64 m);

/// Multiplicative order of a modulo m, gcd(a, m) = 1, m >= 1.
u64 multiplicative_order(u64 a, u64 m);

/// Smallest primitive root modulo the prime p.
u64 primitive_root(u64 p);

/// Smallest prime l with l = 1 (mod modulus) and l > lower_bound.
u64 smallest_prime_congruent_one(u64 modulus, u64 lower_bound);

u64 isqrt(u64 n);

mpz_class factorial(unsigned n);

/// Fits-in-u64 conversion; throws BoundExceeded otherwise.
u64 to_u64(mpz_class const &n);

} // namespace mh
