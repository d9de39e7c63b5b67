#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "agcb/divisor.hpp"

namespace agcb {

/// Raised for classes C ~ 0 (L(-C) != 0), whose refined treatment is not implemented.
class UnsupportedClass : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// G = A + B + Z with optional auxiliary divisors used by the mixed bounds.
struct Decomposition {
  TwoPointDivisor A, B, Z;
  std::optional<TwoPointDivisor> A_prime, B_prime;
};

struct BoundReport {
  std::string name;
  int value = 0;
  std::optional<Decomposition> witness;
  /// Order bounds: shift lambda of the minimizing vertex C + lambda, and the
  /// point sequence of the aggregation path ("PQQ...").
  std::optional<TwoPointDivisor> lambda;
  std::optional<std::string> path;
  /// Points the evaluation divisor D must avoid.
  PointSet avoid_set;

  nlohmann::json to_json() const;
};

}  // namespace agcb
