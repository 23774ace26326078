#pragma once

#include <stdexcept>

namespace knotinv {

// An exactness guarantee failed: a division that the theory says is exact
// left a remainder, or a divisibility the main theorem promises does not
// hold.  Distinct from domain_error so callers can tell "bad input" from
// "the mathematics broke".
class IntegrityError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

class NonInvertibleError : public std::domain_error {
  using std::domain_error::domain_error;
};

}  // namespace knotinv
