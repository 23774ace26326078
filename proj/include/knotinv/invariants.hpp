#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <mutex>
#include <unordered_map>

#include "knotinv/multiplicative.hpp"

namespace knotinv {

// Everything known about one r: the exact invariant
//   n_r = r^{-2} * sum_{d|r} mu(r/d) * C(3d-1, d-1),
// its divisibility flags, and whether the bit-level predictor agrees with
// the exact arithmetic.
struct InvariantRecord {
  std::uint64_t r = 0;
  mpz_class n_r;
  bool nr_over_r_integral = false;
  bool two_nr_over_r_integral = false;
  // 2-adic valuation of the weighted sum r^2 * n_r.  ULONG_MAX sentinel if
  // the sum were zero (never observed at any tested r).
  std::uint64_t v2_weighted_sum = 0;
  bool predictor_verdict = false;
  bool agreement = false;
};

// Memo for the sum terms C(3d-1, d-1): the same d divides every multiple
// of d in a range scan.  Safe for concurrent use; a lost insertion race
// only costs a recomputation of the identical value.
class TermCache {
 public:
  // C(3d-1, d-1) for d >= 1.
  mpz_class term(std::uint64_t d);

 private:
  std::mutex mutex_;
  std::unordered_map<std::uint64_t, mpz_class> memo_;
};

// The Mobius-weighted sum r^2 * n_r = sum_{d|r} mu(r/d) * C(3d-1, d-1).
// Requires mobius.limit() >= r.
mpz_class weighted_sum(std::uint64_t r, const MobiusTable& mobius,
                       TermCache* cache = nullptr);

// n_r itself.  The division by r^2 is checked exactly; a remainder would
// falsify the integrality proposition and raises IntegrityError.
mpz_class invariant(std::uint64_t r, const MobiusTable& mobius,
                    TermCache* cache = nullptr);

// The same sum regrouped along the exact prime power p^k || r, r = p^k*r1:
//   sum_{d|r1} mu(r1/d) * (C(3p^k d-1, p^k d-1) - C(3p^{k-1} d-1, p^{k-1} d-1)).
// Equals weighted_sum(p^k * r1); the test suite holds the two routes
// against each other.  Requires p prime, k >= 1, p coprime to r1.
mpz_class grouped_sum(std::uint64_t p, unsigned k, std::uint64_t r1,
                      const MobiusTable& mobius);

using Predictor = bool (*)(std::uint64_t);

// Full record for one r.  Raises IntegrityError if r^2 does not divide the
// weighted sum or r does not divide 2*n_r (either would falsify the
// theorem; neither is ever expected).
InvariantRecord integrality_report(std::uint64_t r, const MobiusTable& mobius,
                                   Predictor predictor,
                                   TermCache* cache = nullptr);

}  // namespace knotinv
