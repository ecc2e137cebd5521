#pragma once

#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace prescount {

using Int = mpz_class;
using Rat = mpq_class;

// Execution policy for the data-parallel kernels. `serial` is the reference
// path; `parallel` uses OpenMP. Both produce identical results.
enum class Exec { serial, parallel };

namespace nt {

bool is_prime(std::int64_t n);

// prime factorization of n > 0 as (prime, multiplicity) pairs, ascending
std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n);

// Moebius function: (-1)^k for squarefree with k prime factors, else 0
int mobius(std::int64_t n);

// inverse of a modulo m, gcd(a, m) = 1
std::int64_t mod_inverse(std::int64_t a, std::int64_t m);

std::int64_t lcm(std::int64_t a, std::int64_t b);

// base^e as a bignum
Int pow_int(std::int64_t base, unsigned long e);

// divisors of n in ascending order
std::vector<std::int64_t> divisors(std::int64_t n);

}  // namespace nt

// Exact rational from a bignum integer.
inline Rat rat(const Int& z) { return Rat(z); }

}  // namespace prescount
