#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace agcb {

// Elements are encoded as integers 0..q-1: the base-p digits are the
// coefficients of the polynomial representative, low degree first.
// 0 is the additive identity and 1 the multiplicative identity.
using Elem = std::uint8_t;

/// Exact arithmetic in F_{p^k} for q = p^k <= 81 (so every element fits a byte
/// and full addition tables stay small). Multiplication goes through
/// log/antilog tables built from a primitive polynomial found by search.
class SmallField {
 public:
  SmallField(int p, int k);

  int characteristic() const { return p_; }
  int degree() const { return k_; }
  int order() const { return q_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }

  Elem add(Elem a, Elem b) const { return add_[a * q_ + b]; }
  Elem neg(Elem a) const { return neg_[a]; }
  Elem sub(Elem a, Elem b) const { return add_[a * q_ + neg_[b]]; }
  Elem mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, long long e) const;

  /// Discrete log with respect to the primitive element; a must be nonzero.
  int log(Elem a) const;
  Elem primitive_power(long long e) const;

  /// Coefficients (low first) of the primitive polynomial defining the field.
  const std::vector<int>& modulus() const { return modulus_; }

  std::string to_string(Elem a) const;

 private:
  int p_;
  int k_;
  int q_;
  std::vector<int> modulus_;
  std::vector<Elem> add_;
  std::vector<Elem> neg_;
  std::vector<Elem> exp_;  // doubled so log sums index directly
  std::vector<int> log_;
};

}  // namespace agcb
