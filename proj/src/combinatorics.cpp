#include "knotinv/combinatorics.hpp"

#include <stdexcept>

#include "knotinv/errors.hpp"
#include "knotinv/multiplicative.hpp"

namespace knotinv {

namespace {

void require_prime(const mpz_class& p) {
  if (!mpz_fits_ulong_p(p.get_mpz_t()) || !is_prime(mpz_get_ui(p.get_mpz_t()))) {
    throw std::domain_error("p must be a prime (trial-division range)");
  }
}

}  // namespace

mpz_class binomial(const mpz_class& n, const mpz_class& k) {
  if (n < 0 || k < 0) throw std::domain_error("binomial: negative argument");
  if (k > n) throw std::domain_error("binomial: k > n");

  mpz_class kk = k;
  mpz_class other = n - k;
  if (other < kk) kk = other;  // symmetry keeps the loop short

  mpz_class result = 1;
  mpz_class factor = n - kk;
  for (mpz_class i = 1; i <= kk; ++i) {
    ++factor;  // n - kk + i
    result *= factor;
    mpz_divexact(result.get_mpz_t(), result.get_mpz_t(), i.get_mpz_t());
  }
  return result;
}

mpz_class binomial(std::uint64_t n, std::uint64_t k) {
  return binomial(mpz_class(n), mpz_class(k));
}

std::uint64_t digit_sum(const mpz_class& t, unsigned base) {
  if (base < 2) throw std::domain_error("digit_sum: base must be >= 2");
  if (t < 0) throw std::domain_error("digit_sum: negative argument");
  if (base == 2) return mpz_popcount(t.get_mpz_t());

  std::uint64_t sum = 0;
  mpz_class q = t;
  while (q > 0) {
    sum += mpz_tdiv_q_ui(q.get_mpz_t(), q.get_mpz_t(), base);
  }
  return sum;
}

std::uint64_t digit_sum(std::uint64_t t, unsigned base) {
  if (base < 2) throw std::domain_error("digit_sum: base must be >= 2");
  if (base == 2) {
    std::uint64_t sum = 0;
    for (; t; t &= t - 1) ++sum;
    return sum;
  }
  std::uint64_t sum = 0;
  for (; t; t /= base) sum += t % base;
  return sum;
}

mpz_class factorial_valuation(const mpz_class& t, const mpz_class& p) {
  if (t < 0) throw std::domain_error("factorial_valuation: negative argument");
  require_prime(p);

  mpz_class v = 0;
  mpz_class x = t;
  while (x > 0) {
    x /= p;  // floor division of nonnegatives
    v += x;
  }
  return v;
}

std::uint64_t factorial_valuation(std::uint64_t t, std::uint64_t p) {
  if (!is_prime(p)) throw std::domain_error("factorial_valuation: p not prime");
  std::uint64_t v = 0;
  while (t > 0) {
    t /= p;
    v += t;
  }
  return v;
}

mpz_class binomial_valuation(const mpz_class& n, const mpz_class& k, const mpz_class& p) {
  if (k > n) throw std::domain_error("binomial_valuation: k > n");
  return factorial_valuation(n, p) - factorial_valuation(k, p) -
         factorial_valuation(n - k, p);
}

std::uint64_t binomial_valuation(std::uint64_t n, std::uint64_t k, std::uint64_t p) {
  if (k > n) throw std::domain_error("binomial_valuation: k > n");
  return factorial_valuation(n, p) - factorial_valuation(k, p) -
         factorial_valuation(n - k, p);
}

mpz_class mod_inverse(const mpz_class& a, const mpz_class& m) {
  if (m < 2) throw std::domain_error("mod_inverse: modulus must be >= 2");
  mpz_class u;
  if (mpz_invert(u.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0) {
    throw NonInvertibleError("mod_inverse: gcd(a, m) != 1");
  }
  return u;  // mpz_invert yields the least positive representative
}

BinaryExpansion::BinaryExpansion(const mpz_class& source) {
  if (source < 0) throw std::domain_error("BinaryExpansion: negative source");
  const std::size_t bits = mpz_sizeinbase(source.get_mpz_t(), 2);
  if (source == 0) return;  // empty: no leading zeros, not even one
  digits.resize(bits);
  for (std::size_t j = 0; j < bits; ++j) {
    digits[j] = static_cast<std::uint8_t>(mpz_tstbit(source.get_mpz_t(), j));
  }
}

mpz_class BinaryExpansion::value() const {
  mpz_class v = 0;
  for (std::size_t j = digits.size(); j-- > 0;) {
    v <<= 1;
    v += digits[j];
  }
  return v;
}

std::uint64_t BinaryExpansion::ones() const {
  std::uint64_t sum = 0;
  for (auto d : digits) sum += d;
  return sum;
}

}  // namespace knotinv
