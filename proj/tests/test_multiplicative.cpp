#include <doctest.h>

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "knotinv/multiplicative.hpp"

using namespace knotinv;

namespace {

int mobius_from_factorization(std::uint64_t n) {
  const Factorization f = factorize(n);
  for (auto [p, e] : f.factors) {
    if (e > 1) return 0;
  }
  return f.factors.size() % 2 == 0 ? 1 : -1;
}

}  // namespace

TEST_CASE("sieve agrees with factorization-based mu") {
  const MobiusTable mobius = sieve_mobius(5000);
  CHECK(mobius(1) == 1);
  CHECK(mobius(5) == -1);
  CHECK(mobius(10) == 1);
  CHECK(mobius(12) == 0);
  for (std::uint64_t n = 1; n <= 5000; ++n) {
    REQUIRE(mobius(n) == mobius_from_factorization(n));
  }
  CHECK_THROWS_AS(mobius(0), std::domain_error);
  CHECK_THROWS_AS(mobius(5001), std::domain_error);
  CHECK_THROWS_AS(sieve_mobius(0), std::domain_error);
}

TEST_CASE("mu sums to zero over the divisors of n >= 2") {
  const MobiusTable mobius = sieve_mobius(2000);
  for (std::uint64_t n = 2; n <= 2000; ++n) {
    int sum = 0;
    for (std::uint64_t d : divisors(n)) sum += mobius(d);
    REQUIRE(sum == 0);
  }
}

TEST_CASE("factorize basics") {
  CHECK(factorize(1).factors.empty());
  CHECK(factorize(12).factors ==
        std::vector<std::pair<std::uint64_t, unsigned>>{{2, 2}, {3, 1}});
  CHECK(factorize(1097).factors ==
        std::vector<std::pair<std::uint64_t, unsigned>>{{1097, 1}});
  CHECK(is_prime(1097));
  CHECK_THROWS_AS(factorize(0), std::domain_error);

  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const std::uint64_t n = 1 + rng() % 1000000;
    const Factorization f = factorize(n);
    CHECK(f.value() == n);
    for (std::size_t i = 0; i < f.factors.size(); ++i) {
      CHECK(is_prime(f.factors[i].first));
      if (i > 0) CHECK(f.factors[i - 1].first < f.factors[i].first);
    }
  }
}

TEST_CASE("divisors are sorted and counted by the exponent product") {
  CHECK(divisors(10) == std::vector<std::uint64_t>{1, 2, 5, 10});
  CHECK(divisors(1) == std::vector<std::uint64_t>{1});
  CHECK(divisors(12) == std::vector<std::uint64_t>{1, 2, 3, 4, 6, 12});
  for (std::uint64_t n = 1; n <= 2000; ++n) {
    const auto divs = divisors(n);
    std::uint64_t expected = 1;
    for (auto [p, e] : factorize(n).factors) expected *= e + 1;
    REQUIRE(divs.size() == expected);
    for (std::size_t i = 1; i < divs.size(); ++i) REQUIRE(divs[i - 1] < divs[i]);
    for (std::uint64_t d : divs) REQUIRE(n % d == 0);
  }
}

TEST_CASE("Mobius inversion round-trips") {
  const MobiusTable mobius = sieve_mobius(500);
  std::mt19937_64 rng(99);
  std::vector<std::int64_t> g(501);
  for (auto& v : g) v = static_cast<std::int64_t>(rng() % 2001) - 1000;

  // f(n) = sum_{d|n} g(d); recover g via sum mu(n/d) f(d).
  std::vector<std::int64_t> f(501, 0);
  for (std::uint64_t n = 1; n <= 500; ++n) {
    for (std::uint64_t d : divisors(n)) f[n] += g[d];
  }
  for (std::uint64_t n = 1; n <= 500; ++n) {
    std::int64_t recovered = 0;
    for (std::uint64_t d : divisors(n)) recovered += mobius(n / d) * f[d];
    REQUIRE(recovered == g[n]);
  }
}

TEST_CASE("squarefree test") {
  CHECK_FALSE(is_squarefree(18));
  CHECK(is_squarefree(1));
  CHECK(is_squarefree(30));
  const MobiusTable mobius = sieve_mobius(3000);
  for (std::uint64_t n = 1; n <= 3000; ++n) {
    REQUIRE(is_squarefree(n) == (mobius(n) != 0));
  }
}

TEST_CASE("two_adic_split") {
  CHECK(two_adic_split(12).k == 2);
  CHECK(two_adic_split(12).odd == 3);
  CHECK(two_adic_split(7).k == 0);
  CHECK(two_adic_split(7).odd == 7);
  CHECK(two_adic_split(2048).k == 11);
  CHECK(two_adic_split(2048).odd == 1);
  CHECK_THROWS_AS(two_adic_split(0), std::domain_error);
  for (std::uint64_t r = 1; r <= 4096; ++r) {
    const TwoAdicSplit s = two_adic_split(r);
    REQUIRE(s.odd % 2 == 1);
    REQUIRE((std::uint64_t{1} << s.k) * s.odd == r);
  }
}

TEST_CASE("primality by trial division") {
  CHECK_FALSE(is_prime(0));
  CHECK_FALSE(is_prime(1));
  CHECK(is_prime(2));
  CHECK(is_prime(3));
  CHECK_FALSE(is_prime(1093 * 1093));
  const auto primes = primes_up_to(1000);
  CHECK(primes.size() == 168);
  CHECK(primes.front() == 2);
  CHECK(primes.back() == 997);
  for (std::uint64_t p : primes) CHECK(is_prime(p));
}
