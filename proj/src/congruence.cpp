#include "knotinv/congruence.hpp"

#include <cstdint>
#include <stdexcept>

#include "knotinv/combinatorics.hpp"
#include "knotinv/invariants.hpp"
#include "knotinv/wellspaced.hpp"

namespace knotinv {

namespace {

std::uint64_t checked_pow(std::uint64_t base, unsigned exp) {
  std::uint64_t v = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (v > UINT64_MAX / base) throw std::overflow_error("power overflows 64 bits");
    v *= base;
  }
  return v;
}

mpz_class mpz_pow(std::uint64_t base, unsigned exp) {
  mpz_class m;
  mpz_ui_pow_ui(m.get_mpz_t(), base, exp);
  return m;
}

std::uint64_t v2_exact(const mpz_class& x) {
  if (x == 0) throw std::domain_error("v2 of zero");
  mpz_class a = abs(x);
  return mpz_scan1(a.get_mpz_t(), 0);
}

}  // namespace

CongruenceReport verify_product_congruence(std::uint64_t p, unsigned k, std::uint64_t d) {
  if (!is_prime(p)) throw std::domain_error("verify_product_congruence: p not prime");
  if (k == 0) throw std::domain_error("verify_product_congruence: k must be >= 1");
  if (d == 0 || d % p == 0) throw std::domain_error("verify_product_congruence: p divides d");

  const std::uint64_t pk = checked_pow(p, k);
  if (d > UINT64_MAX / pk / 4) throw std::overflow_error("verify_product_congruence: range too large");
  const std::uint64_t bound = d * pk;
  const mpz_class modulus = mpz_pow(p, 3 * k);
  const mpz_class x = 2 * mpz_class(pk) * mpz_class(d);

  mpz_class num = 1, den = 1;
  for (std::uint64_t j = 1; j <= bound; ++j) {
    if (j % p == 0) continue;
    num = num * ((x + j) % modulus) % modulus;
    den = den * j % modulus;
  }

  CongruenceReport rep;
  rep.identity = "product";
  rep.p = p;
  rep.k = k;
  rep.d = d;
  rep.modulus = modulus;
  rep.lhs = num * mod_inverse(den, modulus) % modulus;
  // Odd p: the product collapses to 1.  p = 2: it overshoots 1 by exactly
  // 2^{3k-1}, the deviation that costs the lone factor of 2 in 2n_r/r.
  rep.rhs = (p == 2) ? mpz_class(1 + mpz_pow(2, 3 * k - 1)) % modulus : mpz_class(1);
  rep.holds = rep.lhs == rep.rhs;
  return rep;
}

CongruenceReport verify_two_case_residue(unsigned k, std::uint64_t d) {
  if (k == 0) throw std::domain_error("verify_two_case_residue: k must be >= 1");
  if (d == 0 || d % 2 == 0) throw std::domain_error("verify_two_case_residue: d must be odd");

  const std::uint64_t scale = checked_pow(2, k - 1);
  if (d > UINT64_MAX / 6 / scale) throw std::overflow_error("verify_two_case_residue: range too large");
  const std::uint64_t half = scale * d;  // 2^{k-1} d
  const mpz_class larger = binomial(6 * half - 1, 2 * half - 1);
  const mpz_class smaller = binomial(3 * half - 1, half - 1);

  CongruenceReport rep;
  rep.identity = "two-case";
  rep.p = 2;
  rep.k = k;
  rep.d = d;
  rep.modulus = 0;  // exact valuation comparison
  rep.lhs = mpz_class(v2_exact(larger - smaller)) - mpz_class(v2_exact(smaller));
  rep.rhs = 3 * static_cast<unsigned long>(k) - 1;
  rep.holds = rep.lhs == rep.rhs;
  return rep;
}

mpz_class harmonic_sum_mod(std::uint64_t p, unsigned k, std::uint64_t d,
                           unsigned modulus_exponent) {
  if (p == 2) throw std::domain_error("harmonic_sum_mod: p = 2 handled separately");
  if (!is_prime(p)) throw std::domain_error("harmonic_sum_mod: p not prime");
  if (k == 0) throw std::domain_error("harmonic_sum_mod: k must be >= 1");
  if (d == 0 || d % p == 0) throw std::domain_error("harmonic_sum_mod: p divides d");
  if (modulus_exponent == 0 || modulus_exponent > 2 * k) {
    throw std::domain_error("harmonic_sum_mod: modulus exponent outside [1, 2k]");
  }

  const std::uint64_t bound = d * checked_pow(p, k);
  const mpz_class modulus = mpz_pow(p, modulus_exponent);
  mpz_class sum = 0;
  for (std::uint64_t j = 1; j <= bound; ++j) {
    if (j % p == 0) continue;
    sum = (sum + mod_inverse(j, modulus)) % modulus;
  }
  return sum;
}

mpz_class second_symmetric_sum_mod(std::uint64_t p, unsigned k, std::uint64_t d) {
  if (p == 2) throw std::domain_error("second_symmetric_sum_mod: p = 2 handled separately");
  if (!is_prime(p)) throw std::domain_error("second_symmetric_sum_mod: p not prime");
  if (k == 0) throw std::domain_error("second_symmetric_sum_mod: k must be >= 1");
  if (d == 0 || d % p == 0) throw std::domain_error("second_symmetric_sum_mod: p divides d");

  const std::uint64_t bound = d * checked_pow(p, k);
  const mpz_class wide = mpz_pow(p, 2 * k);  // carry mod p^{2k}, reduce at the end
  mpz_class s1 = 0, s2 = 0;
  for (std::uint64_t j = 1; j <= bound; ++j) {
    if (j % p == 0) continue;
    const mpz_class inv = mod_inverse(j, wide);
    s1 = (s1 + inv) % wide;
    s2 = (s2 + inv * inv) % wide;
  }
  mpz_class paired = (s1 * s1 - s2) % wide;
  paired = paired * mod_inverse(2, wide) % wide;
  if (paired < 0) paired += wide;
  return paired % mpz_pow(p, k);
}

ValuationLemmaReport verify_valuation_lemma(std::uint64_t d) {
  if (d == 0) throw std::domain_error("verify_valuation_lemma: d must be >= 1");

  ValuationLemmaReport rep;
  rep.d = d;
  rep.v_small = binomial_valuation(3 * d - 1, d - 1, std::uint64_t{2});
  rep.v_large = binomial_valuation(6 * d - 1, 2 * d - 1, std::uint64_t{2});
  rep.digit_formula = static_cast<std::int64_t>(digit_sum(d - 1) + digit_sum(d)) -
                      static_cast<std::int64_t>(digit_sum(3 * d - 1));
  rep.well_spaced = is_well_spaced(d);
  rep.equal_valuations =
      rep.digit_formula >= 0 &&
      rep.v_small == static_cast<std::uint64_t>(rep.digit_formula) &&
      rep.v_large == static_cast<std::uint64_t>(rep.digit_formula);
  rep.never_one = rep.digit_formula != 1;
  rep.zero_iff_well_spaced = (rep.digit_formula == 0) == rep.well_spaced;
  rep.holds = rep.equal_valuations && rep.never_one && rep.zero_iff_well_spaced;
  return rep;
}

std::uint32_t binomial_mod8(std::uint64_t n, std::uint64_t k) {
  if (k > n) throw std::domain_error("binomial_mod8: k > n");

  const std::uint64_t v =
      factorial_valuation(n, std::uint64_t{2}) - factorial_valuation(k, std::uint64_t{2}) -
      factorial_valuation(n - k, std::uint64_t{2});
  if (v >= 3) return 0;
  if (v == 2) return 4;

  // Odd part of m! mod 8: peel factors of 2 via m -> m/2 and take the
  // product of odd j <= m at each level.  Odd residues repeat with period
  // 8 and a full block multiplies to 1, so only m mod 8 matters.
  static constexpr std::uint32_t block[8] = {1, 1, 1, 3, 3, 7, 7, 1};
  auto odd_factorial = [](std::uint64_t m) {
    std::uint32_t r = 1;
    for (; m > 0; m >>= 1) r = r * block[m % 8] % 8;
    return r;
  };

  // x^2 == 1 mod 8 for odd x, so dividing by the denominators' odd parts
  // is the same as multiplying by them.
  const std::uint32_t odd =
      odd_factorial(n) * odd_factorial(k) % 8 * odd_factorial(n - k) % 8;
  return (odd << v) % 8;
}

CongruenceReport verify_mod8_difference(std::uint64_t d) {
  if (d == 0) throw std::domain_error("verify_mod8_difference: d must be >= 1");

  CongruenceReport rep;
  rep.identity = "mod8";
  rep.p = 2;
  rep.k = 0;
  rep.d = d;
  rep.modulus = 8;
  rep.lhs = (binomial_mod8(6 * d - 1, 2 * d - 1) + 8 - binomial_mod8(3 * d - 1, d - 1)) % 8;
  rep.rhs = (d % 2 == 1 && is_well_spaced(d)) ? 4 : 0;
  rep.holds = rep.lhs == rep.rhs;
  return rep;
}

CongruenceReport verify_reduction(unsigned k, std::uint64_t r1, const MobiusTable& mobius) {
  if (k == 0) throw std::domain_error("verify_reduction: k must be >= 1");
  if (r1 == 0 || r1 % 2 == 0) throw std::domain_error("verify_reduction: r1 must be odd");

  const std::uint64_t half = checked_pow(2, k - 1);
  if (r1 > UINT64_MAX / 6 / half) throw std::overflow_error("verify_reduction: range too large");
  mpz_class tail = 0;  // sum_{d|r1} mu(r1/d) C(3*2^{k-1}d - 1, 2^{k-1}d - 1)
  for (std::uint64_t d : divisors(r1)) {
    const int mu = mobius(r1 / d);
    if (mu == 0) continue;
    const mpz_class term = binomial(3 * half * d - 1, half * d - 1);
    if (mu > 0) {
      tail += term;
    } else {
      tail -= term;
    }
  }

  const mpz_class modulus = mpz_pow(2, 3 * k);
  mpz_class remainder =
      grouped_sum(2, k, r1, mobius) - mpz_pow(2, 3 * k - 1) * tail;

  CongruenceReport rep;
  rep.identity = "reduction";
  rep.p = 2;
  rep.k = k;
  rep.d = r1;
  rep.modulus = modulus;
  mpz_mod(rep.lhs.get_mpz_t(), remainder.get_mpz_t(), modulus.get_mpz_t());
  rep.rhs = 0;
  rep.holds = rep.lhs == rep.rhs;
  return rep;
}

}  // namespace knotinv
