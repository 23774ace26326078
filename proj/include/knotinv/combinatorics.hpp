#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

namespace knotinv {

// Exact C(n, k) by the running product C(n,k) = prod_{i<=k} (n-k+i)/i.
// Every prefix of the product is itself a binomial coefficient, so each
// division is exact and intermediates never exceed the result.
// Throws std::domain_error if k > n or an argument is negative.
mpz_class binomial(const mpz_class& n, const mpz_class& k);
mpz_class binomial(std::uint64_t n, std::uint64_t k);

// Sum of the base-`base` digits of t >= 0.  Base 2 is the bit population
// count and reads the machine representation directly.
std::uint64_t digit_sum(const mpz_class& t, unsigned base = 2);
std::uint64_t digit_sum(std::uint64_t t, unsigned base = 2);

// Exponent of the prime p in t!, via the Legendre floor sums
// sum_{i>=1} floor(t/p^i).  No digit arithmetic is involved, so this is an
// independent route to the "t - b(t)" identity checked in the test suite.
mpz_class factorial_valuation(const mpz_class& t, const mpz_class& p);
std::uint64_t factorial_valuation(std::uint64_t t, std::uint64_t p);

// Exponent of the prime p in C(n, k), as the difference of factorial
// valuations.  Requires k <= n.
mpz_class binomial_valuation(const mpz_class& n, const mpz_class& k, const mpz_class& p);
std::uint64_t binomial_valuation(std::uint64_t n, std::uint64_t k, std::uint64_t p);

// u in [1, m) with a*u == 1 (mod m), for m >= 2.
// Throws NonInvertibleError when gcd(a, m) != 1.
mpz_class mod_inverse(const mpz_class& a, const mpz_class& m);

// Binary digits eps_0 ... eps_J of a natural number, least significant
// first.  No leading zeros are stored; zero has an empty digit vector.
struct BinaryExpansion {
  std::vector<std::uint8_t> digits;

  explicit BinaryExpansion(const mpz_class& source);

  mpz_class value() const;
  std::uint64_t ones() const;
};

}  // namespace knotinv
