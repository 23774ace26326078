#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "knotinv/multiplicative.hpp"

namespace knotinv {

// Outcome of one identity check.  For residue identities, lhs/rhs are
// residues in [0, modulus).  modulus == 0 marks an exact (non-residue)
// comparison, e.g. of a 2-adic valuation against its predicted value.
// holds is lhs == rhs by construction.
struct CongruenceReport {
  std::string identity;
  std::uint64_t p = 0;
  std::uint64_t k = 0;
  std::uint64_t d = 0;
  mpz_class modulus;
  mpz_class lhs;
  mpz_class rhs;
  bool holds = false;
};

// prod_{j<=d*p^k, p∤j} (x+j) * j^{-1} mod p^{3k}, with x = 2*p^k*d.
// For odd p the product is 1 mod p^{3k}; for p = 2 it is 1 + 2^{3k-1}
// exactly.  Requires p prime, k >= 1, p coprime to d.
CongruenceReport verify_product_congruence(std::uint64_t p, unsigned k,
                                           std::uint64_t d);

// The bracket C(3*2^k d-1, 2^k d-1) / C(3*2^{k-1} d-1, 2^{k-1} d-1) - 1
// has 2-adic valuation exactly 3k-1 (d odd).  Computed from the exact big
// integers: v2(N - D) - v2(D).
CongruenceReport verify_two_case_residue(unsigned k, std::uint64_t d);

// sum_{j<=d*p^k, p∤j} j^{-1} reduced mod p^modulus_exponent.
// Requires p an odd prime, p coprime to d, 1 <= modulus_exponent <= 2k.
// The pairing j <-> d*p^k - j forces the sum to vanish mod p^k; whether it
// also vanishes mod p^{2k} is reported by the tests but not asserted.
mpz_class harmonic_sum_mod(std::uint64_t p, unsigned k, std::uint64_t d,
                           unsigned modulus_exponent);

// sum_{i<j<=d*p^k, p∤ij} (ij)^{-1} mod p^k, via (S1^2 - S2)/2 with
// S1 = sum 1/j and S2 = sum 1/j^2 carried mod p^{2k} before reduction.
mpz_class second_symmetric_sum_mod(std::uint64_t p, unsigned k,
                                   std::uint64_t d);

// The three claims of the 2-adic valuation lemma at d:
//   (a) v2(C(3d-1,d-1)) == v2(C(6d-1,2d-1)) == b(d-1) + b(d) - b(3d-1),
//   (b) that common value is never 1,
//   (c) it is 0 exactly when d is well-spaced.
// Valuations come from Legendre floor sums, the formula from digit sums;
// the two routes share no code.
struct ValuationLemmaReport {
  std::uint64_t d = 0;
  std::uint64_t v_small = 0;      // v2 of C(3d-1, d-1)
  std::uint64_t v_large = 0;      // v2 of C(6d-1, 2d-1)
  std::int64_t digit_formula = 0; // b(d-1) + b(d) - b(3d-1)
  bool well_spaced = false;
  bool equal_valuations = false;
  bool never_one = false;
  bool zero_iff_well_spaced = false;
  bool holds = false;             // all three claims
};

ValuationLemmaReport verify_valuation_lemma(std::uint64_t d);

// C(6d-1, 2d-1) - C(3d-1, d-1) mod 8 is 4 exactly when d is odd and
// well-spaced, else 0.  Residue route, no big integers.
CongruenceReport verify_mod8_difference(std::uint64_t d);

// C(n, k) mod 8 in O(log n): Legendre 2-valuation plus the odd part
// assembled from products of odd blocks, whose residues mod 8 repeat with
// period 8 (1*3*5*7 == 1 mod 8) and are self-inverse mod 8.
std::uint32_t binomial_mod8(std::uint64_t n, std::uint64_t k);

// Reduction step for even r: the grouped sum at (2, k, r1) minus
// 2^{3k-1} * sum_{d|r1} mu(r1/d) * C(3*2^{k-1} d-1, 2^{k-1} d-1)
// vanishes mod 2^{3k}.  Requires k >= 1, r1 odd, mobius.limit() >= r1.
CongruenceReport verify_reduction(unsigned k, std::uint64_t r1,
                                  const MobiusTable& mobius);

}  // namespace knotinv
