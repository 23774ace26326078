#include "knotinv/wellspaced.hpp"

#include <stdexcept>

#include "knotinv/combinatorics.hpp"
#include "knotinv/multiplicative.hpp"

namespace knotinv {

bool is_well_spaced(std::uint64_t n) { return (n & (n >> 1)) == 0; }

bool is_well_spaced(const mpz_class& n) {
  if (n < 0) throw std::domain_error("is_well_spaced: negative argument");
  mpz_class shifted = n >> 1;
  mpz_class overlap;
  mpz_and(overlap.get_mpz_t(), n.get_mpz_t(), shifted.get_mpz_t());
  return overlap == 0;
}

WellSpacedSet enumerate_well_spaced_odd(std::uint64_t limit) {
  if (limit == 0) throw std::domain_error("enumerate_well_spaced_odd: limit must be >= 1");
  WellSpacedSet set{limit, {}};
  for (std::uint64_t n = 1; n <= limit; n += 2) {
    if (is_well_spaced(n)) set.members.push_back(n);
  }
  return set;
}

DivisorParity wellspaced_parity(std::uint64_t r1) {
  if (r1 == 0 || r1 % 2 == 0) {
    throw std::domain_error("wellspaced_parity: r1 must be odd and >= 1");
  }
  std::uint64_t count = 0;
  for (std::uint64_t w : divisors(r1)) {
    if (is_well_spaced(w) && is_squarefree(r1 / w)) ++count;
  }
  return {count, count % 2 == 0};
}

bool predict_integral(std::uint64_t r) {
  if (r == 0) throw std::domain_error("predict_integral: r must be >= 1");
  if (r % 2 == 1) return true;
  return wellspaced_parity(two_adic_split(r).odd).even;
}

bool prime_digit_criterion(std::uint64_t p) {
  if (p < 3 || p % 2 == 0 || !is_prime(p)) {
    throw std::domain_error("prime_digit_criterion: p must be an odd prime");
  }
  return 2 * digit_sum(p) == digit_sum(3 * p - 1) + 1;
}

std::vector<std::uint64_t> primes_with_integral_n2p(std::uint64_t limit) {
  if (limit < 2) throw std::domain_error("primes_with_integral_n2p: limit must be >= 2");
  std::vector<std::uint64_t> hits;
  for (std::uint64_t p : primes_up_to(limit)) {
    if (p > 2 && prime_digit_criterion(p)) hits.push_back(p);
  }
  return hits;
}

}  // namespace knotinv
