#include "knotinv/invariants.hpp"

#include <climits>
#include <stdexcept>

#include "knotinv/combinatorics.hpp"
#include "knotinv/errors.hpp"

namespace knotinv {

mpz_class TermCache::term(std::uint64_t d) {
  if (d == 0) throw std::domain_error("TermCache: d must be >= 1");
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = memo_.find(d);
    if (it != memo_.end()) return it->second;
  }
  mpz_class value = binomial(3 * d - 1, d - 1);  // computed outside the lock
  std::lock_guard<std::mutex> lock(mutex_);
  return memo_.emplace(d, std::move(value)).first->second;
}

namespace {

mpz_class term_for(std::uint64_t d, TermCache* cache) {
  return cache ? cache->term(d) : binomial(3 * d - 1, d - 1);
}

}  // namespace

mpz_class weighted_sum(std::uint64_t r, const MobiusTable& mobius, TermCache* cache) {
  if (r == 0) throw std::domain_error("weighted_sum: r must be >= 1");
  if (mobius.limit() < r) throw std::domain_error("weighted_sum: Mobius table too small");

  mpz_class sum = 0;
  for (std::uint64_t d : divisors(r)) {
    const int mu = mobius(r / d);
    if (mu == 0) continue;  // never materialize the binomial
    if (mu > 0) {
      sum += term_for(d, cache);
    } else {
      sum -= term_for(d, cache);
    }
  }
  return sum;
}

mpz_class invariant(std::uint64_t r, const MobiusTable& mobius, TermCache* cache) {
  const mpz_class sum = weighted_sum(r, mobius, cache);
  const mpz_class r_squared = mpz_class(r) * mpz_class(r);
  if (!mpz_divisible_p(sum.get_mpz_t(), r_squared.get_mpz_t())) {
    throw IntegrityError("r^2 does not divide the weighted sum at r=" + std::to_string(r));
  }
  mpz_class n;
  mpz_divexact(n.get_mpz_t(), sum.get_mpz_t(), r_squared.get_mpz_t());
  return n;
}

mpz_class grouped_sum(std::uint64_t p, unsigned k, std::uint64_t r1,
                      const MobiusTable& mobius) {
  if (!is_prime(p)) throw std::domain_error("grouped_sum: p must be prime");
  if (k == 0) throw std::domain_error("grouped_sum: k must be >= 1");
  if (r1 == 0) throw std::domain_error("grouped_sum: r1 must be >= 1");
  if (r1 % p == 0) throw std::domain_error("grouped_sum: p divides r1");
  if (mobius.limit() < r1) throw std::domain_error("grouped_sum: Mobius table too small");

  std::uint64_t pk1 = 1;  // p^{k-1}
  for (unsigned i = 1; i < k; ++i) {
    if (pk1 > UINT64_MAX / p) throw std::overflow_error("grouped_sum: p^k overflows");
    pk1 *= p;
  }
  if (pk1 > UINT64_MAX / p) throw std::overflow_error("grouped_sum: p^k overflows");
  const std::uint64_t pk = pk1 * p;

  if (r1 > (UINT64_MAX / 3 - 1) / pk) throw std::overflow_error("grouped_sum: 3*p^k*r1 overflows");

  mpz_class sum = 0;
  for (std::uint64_t d : divisors(r1)) {
    const int mu = mobius(r1 / d);
    if (mu == 0) continue;
    const mpz_class bracket =
        binomial(3 * pk * d - 1, pk * d - 1) - binomial(3 * pk1 * d - 1, pk1 * d - 1);
    if (mu > 0) {
      sum += bracket;
    } else {
      sum -= bracket;
    }
  }
  return sum;
}

InvariantRecord integrality_report(std::uint64_t r, const MobiusTable& mobius,
                                   Predictor predictor, TermCache* cache) {
  if (predictor == nullptr) throw std::domain_error("integrality_report: null predictor");

  InvariantRecord rec;
  rec.r = r;

  const mpz_class sum = weighted_sum(r, mobius, cache);
  const mpz_class r_squared = mpz_class(r) * mpz_class(r);
  if (!mpz_divisible_p(sum.get_mpz_t(), r_squared.get_mpz_t())) {
    throw IntegrityError("r^2 does not divide the weighted sum at r=" + std::to_string(r));
  }
  mpz_divexact(rec.n_r.get_mpz_t(), sum.get_mpz_t(), r_squared.get_mpz_t());

  const mpz_class r_big(r);
  const mpz_class twice = 2 * rec.n_r;
  rec.two_nr_over_r_integral = mpz_divisible_p(twice.get_mpz_t(), r_big.get_mpz_t()) != 0;
  if (!rec.two_nr_over_r_integral) {
    throw IntegrityError("r does not divide 2*n_r at r=" + std::to_string(r));
  }
  rec.nr_over_r_integral = mpz_divisible_p(rec.n_r.get_mpz_t(), r_big.get_mpz_t()) != 0;

  if (sum == 0) {
    rec.v2_weighted_sum = ULONG_MAX;  // v2(0) sentinel; never observed
  } else {
    mpz_class abs_sum = abs(sum);
    rec.v2_weighted_sum = mpz_scan1(abs_sum.get_mpz_t(), 0);
  }

  rec.predictor_verdict = predictor(r);
  rec.agreement = rec.nr_over_r_integral == rec.predictor_verdict;
  return rec;
}

}  // namespace knotinv
