#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace knotinv {

// mu(n) for 1 <= n <= limit, built once by a linear sieve.
class MobiusTable {
 public:
  explicit MobiusTable(std::vector<std::int8_t> values);

  std::uint64_t limit() const { return mu_.size() - 1; }
  // mu(n) in {-1, 0, 1}; throws std::domain_error outside [1, limit].
  int operator()(std::uint64_t n) const;

 private:
  std::vector<std::int8_t> mu_;  // index 0 unused
};

MobiusTable sieve_mobius(std::uint64_t limit);

// Prime factorization with strictly increasing primes, empty for n = 1.
struct Factorization {
  std::vector<std::pair<std::uint64_t, unsigned>> factors;

  std::uint64_t value() const;  // product of p^e
};

Factorization factorize(std::uint64_t n);

// All divisors of n >= 1 in increasing order.
std::vector<std::uint64_t> divisors(std::uint64_t n);

bool is_squarefree(std::uint64_t n);

struct TwoAdicSplit {
  unsigned k;         // exponent of 2
  std::uint64_t odd;  // n / 2^k
};

TwoAdicSplit two_adic_split(std::uint64_t r);

// Deterministic trial division; everything in scope is desk-sized.
bool is_prime(std::uint64_t n);

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit);

}  // namespace knotinv
