#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

namespace knotinv {

// A number is well-spaced when its binary expansion has no two adjacent
// ones.  0 is well-spaced by convention (the condition is vacuous).
bool is_well_spaced(std::uint64_t n);
bool is_well_spaced(const mpz_class& n);

// The odd well-spaced numbers up to `limit`, increasing:
// 1, 5, 9, 17, 21, 33, 37, 41, ...
struct WellSpacedSet {
  std::uint64_t limit;
  std::vector<std::uint64_t> members;
};

WellSpacedSet enumerate_well_spaced_odd(std::uint64_t limit);

// Count of odd well-spaced w with w | r1 and r1/w squarefree, plus the
// parity of that count.  Requires r1 odd.
struct DivisorParity {
  std::uint64_t count;
  bool even;
};

DivisorParity wellspaced_parity(std::uint64_t r1);

// The bit-and-divisor side of the integrality criterion for n_r / r:
// true iff r is odd, or r = 2^k * r1 with r1 odd and wellspaced_parity(r1)
// even.  Never touches big integers.
bool predict_integral(std::uint64_t r);

// For an odd prime p: whether 2*b(p) == b(3p-1) + 1, with b the binary
// digit sum.  Coincides with is_well_spaced(p) on primes; the test suite
// checks that equivalence, so this is computed from digit sums alone.
bool prime_digit_criterion(std::uint64_t p);

// All primes p <= limit passing prime_digit_criterion; exactly the primes
// with n_{2p}/(2p) integral.
std::vector<std::uint64_t> primes_with_integral_n2p(std::uint64_t limit);

}  // namespace knotinv
