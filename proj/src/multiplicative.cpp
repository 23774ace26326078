#include "knotinv/multiplicative.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace knotinv {

MobiusTable::MobiusTable(std::vector<std::int8_t> values) : mu_(std::move(values)) {
  if (mu_.size() < 2) throw std::domain_error("MobiusTable: empty table");
}

int MobiusTable::operator()(std::uint64_t n) const {
  if (n == 0 || n > limit()) {
    throw std::domain_error("MobiusTable: index outside [1, limit]");
  }
  return mu_[n];
}

MobiusTable sieve_mobius(std::uint64_t limit) {
  if (limit == 0) throw std::domain_error("sieve_mobius: limit must be >= 1");

  std::vector<std::int8_t> mu(limit + 1, 0);
  std::vector<std::uint64_t> primes;
  std::vector<bool> composite(limit + 1, false);
  mu[1] = 1;
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (!composite[i]) {
      primes.push_back(i);
      mu[i] = -1;
    }
    for (std::uint64_t p : primes) {
      if (p > limit / i) break;
      composite[i * p] = true;
      if (i % p == 0) {
        mu[i * p] = 0;  // p^2 divides
        break;
      }
      mu[i * p] = static_cast<std::int8_t>(-mu[i]);
    }
  }
  return MobiusTable(std::move(mu));
}

std::uint64_t Factorization::value() const {
  std::uint64_t v = 1;
  for (auto [p, e] : factors) {
    for (unsigned i = 0; i < e; ++i) v *= p;
  }
  return v;
}

Factorization factorize(std::uint64_t n) {
  if (n == 0) throw std::domain_error("factorize: n must be >= 1");
  Factorization f;
  for (std::uint64_t p = 2; p <= n / p; p += (p == 2) ? 1 : 2) {
    if (n % p != 0) continue;
    unsigned e = 0;
    do {
      n /= p;
      ++e;
    } while (n % p == 0);
    f.factors.emplace_back(p, e);
  }
  if (n > 1) f.factors.emplace_back(n, 1);
  return f;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  const Factorization f = factorize(n);  // validates n >= 1
  std::vector<std::uint64_t> divs{1};
  for (auto [p, e] : f.factors) {
    const std::size_t base_count = divs.size();
    std::uint64_t pe = 1;
    for (unsigned i = 0; i < e; ++i) {
      pe *= p;
      for (std::size_t j = 0; j < base_count; ++j) divs.push_back(divs[j] * pe);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

bool is_squarefree(std::uint64_t n) {
  const Factorization f = factorize(n);
  for (auto [p, e] : f.factors) {
    if (e > 1) return false;
  }
  return true;
}

TwoAdicSplit two_adic_split(std::uint64_t r) {
  if (r == 0) throw std::domain_error("two_adic_split: r must be >= 1");
  const unsigned k = static_cast<unsigned>(std::countr_zero(r));
  return {k, r >> k};
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d <= n / d; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit) {
  std::vector<std::uint64_t> primes;
  if (limit < 2) return primes;
  std::vector<bool> composite(limit + 1, false);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return primes;
}

}  // namespace knotinv
