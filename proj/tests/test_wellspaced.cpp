#include <doctest.h>
#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "knotinv/combinatorics.hpp"
#include "knotinv/multiplicative.hpp"
#include "knotinv/wellspaced.hpp"

using namespace knotinv;

namespace {

// First 55 members of the odd well-spaced set, through 681.
const std::vector<std::uint64_t> kOddWellSpaced681 = {
    1,   5,   9,   17,  21,  33,  37,  41,  65,  69,  73,  81,  85,  129,
    133, 137, 145, 149, 161, 165, 169, 257, 261, 265, 273, 277, 289, 293,
    297, 321, 325, 329, 337, 341, 513, 517, 521, 529, 533, 545, 549, 553,
    577, 581, 585, 593, 597, 641, 645, 649, 657, 661, 673, 677, 681};

std::uint64_t fibonacci(unsigned m) {
  std::uint64_t a = 1, b = 1;  // F(1), F(2)
  for (unsigned i = 2; i <= m; ++i) {
    const std::uint64_t c = a + b;
    a = b;
    b = c;
  }
  return m <= 1 ? 1 : a;
}

}  // namespace

TEST_CASE("well-spaced membership") {
  CHECK(is_well_spaced(std::uint64_t{1097}));
  CHECK_FALSE(is_well_spaced(std::uint64_t{281}));
  CHECK(is_well_spaced(std::uint64_t{0}));
  CHECK(is_well_spaced(mpz_class(1097)));
  CHECK_FALSE(is_well_spaced(mpz_class(281)));
  // agree with the digit-vector definition
  for (std::uint64_t n = 0; n <= 5000; ++n) {
    const BinaryExpansion e{mpz_class(n)};
    bool ok = true;
    for (std::size_t j = 0; j + 1 < e.digits.size(); ++j) {
      if (e.digits[j] && e.digits[j + 1]) ok = false;
    }
    REQUIRE(is_well_spaced(n) == ok);
  }
}

TEST_CASE("odd well-spaced enumeration reproduces the published prefix") {
  CHECK(enumerate_well_spaced_odd(41).members ==
        std::vector<std::uint64_t>{1, 5, 9, 17, 21, 33, 37, 41});
  CHECK(enumerate_well_spaced_odd(4).members == std::vector<std::uint64_t>{1});
  const WellSpacedSet set = enumerate_well_spaced_odd(681);
  CHECK(set.members == kOddWellSpaced681);
  CHECK(set.members.back() == 681);
  CHECK_THROWS_AS(enumerate_well_spaced_odd(0), std::domain_error);
}

TEST_CASE("enumeration count follows the Fibonacci recurrence up to 2^24") {
  // Odd well-spaced w < 2^m are exactly 4t+1 with t well-spaced < 2^{m-2},
  // and all well-spaced values below 2^n number F(n+2); so the odd count
  // below 2^m is F(m).
  for (unsigned m = 1; m <= 24; ++m) {
    const std::uint64_t limit = (std::uint64_t{1} << m) - 1;
    REQUIRE(enumerate_well_spaced_odd(limit).members.size() == fibonacci(m));
  }
}

TEST_CASE("wellspaced_parity") {
  CHECK(wellspaced_parity(5).count == 2);
  CHECK(wellspaced_parity(5).even);
  CHECK(wellspaced_parity(3).count == 1);
  CHECK_FALSE(wellspaced_parity(3).even);
  CHECK(wellspaced_parity(1).count == 1);
  CHECK_FALSE(wellspaced_parity(1).even);
  CHECK_THROWS_AS(wellspaced_parity(6), std::domain_error);
  CHECK_THROWS_AS(wellspaced_parity(0), std::domain_error);
}

TEST_CASE("predictor basics") {
  for (std::uint64_t r = 1; r <= 999; r += 2) CHECK(predict_integral(r));
  CHECK(predict_integral(10));
  CHECK_FALSE(predict_integral(6));
  CHECK_FALSE(predict_integral(2));
  CHECK_THROWS_AS(predict_integral(0), std::domain_error);
}

TEST_CASE("predictor never reads the power of two") {
  for (std::uint64_t r1 = 1; r1 <= 2001; r1 += 2) {
    const bool k1 = predict_integral(2 * r1);
    CHECK(predict_integral(4 * r1) == k1);
    CHECK(predict_integral(8 * r1) == k1);
  }
}

TEST_CASE("prime digit criterion") {
  CHECK(prime_digit_criterion(5));
  CHECK_FALSE(prime_digit_criterion(3));
  CHECK(prime_digit_criterion(1097));
  CHECK_THROWS_AS(prime_digit_criterion(2), std::domain_error);
  CHECK_THROWS_AS(prime_digit_criterion(9), std::domain_error);
}

TEST_CASE("digit criterion coincides with well-spacedness on odd primes to 1e5") {
  for (std::uint64_t p : primes_up_to(100000)) {
    if (p == 2) continue;
    REQUIRE(prime_digit_criterion(p) == is_well_spaced(p));
  }
}

TEST_CASE("tripling digit identity splits on well-spacedness") {
  for (std::uint64_t d = 1; d <= 100000; ++d) {
    if (is_well_spaced(d)) {
      REQUIRE(digit_sum(3 * d) == 2 * digit_sum(d));
    } else {
      REQUIRE(digit_sum(3 * d) < 2 * digit_sum(d) - 1);
    }
  }
}

TEST_CASE("primes with integral n_2p / 2p") {
  const std::vector<std::uint64_t> expected = {
      5,   17,  37,  41,  73,  137, 149, 257, 277, 293,  337,
      521, 577, 593, 641, 661, 673, 677, 1033, 1061, 1093, 1097};
  CHECK(primes_with_integral_n2p(1100) == expected);
  CHECK(primes_with_integral_n2p(20) == std::vector<std::uint64_t>{5, 17});
  CHECK(primes_with_integral_n2p(4).empty());
  CHECK_THROWS_AS(primes_with_integral_n2p(1), std::domain_error);
}
