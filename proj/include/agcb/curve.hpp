#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "agcb/field.hpp"
#include "agcb/poly.hpp"

namespace agcb {

/// Element of F[x,y]/(F) written as sum_j f_j(x) y^j with j < deg_y F.
/// The zero element has an empty coefficient list.
struct BivariateElement {
  std::vector<PolyX> coeffs;  // coeffs[j] multiplies y^j

  bool is_zero() const { return coeffs.empty(); }
  void normalize();
};

/// Plane model y^n + sum_{j<n} c_j(x) y^j = 0 over a small constant field,
/// with the distinguished places P (unique place over x = infinity) and
/// Q (the affine point (0,0)).
class CurvePreset {
 public:
  static CurvePreset hermitian(int q);
  /// Suzuki curve y^q + y = x^{q0} (x^q + x) with q = 2 q0^2.
  static CurvePreset suzuki(int q0);
  /// Looks up "hermitian2", "hermitian3", "hermitian4", "suzuki8", "suzuki32".
  static CurvePreset from_id(std::string_view id);
  static std::vector<std::string> ids();

  const std::string& id() const { return id_; }
  const SmallField& field() const { return field_; }
  int y_degree() const { return static_cast<int>(tail_.size()); }
  /// c_j(x) for j < y_degree(); the y^n coefficient is 1.
  const std::vector<PolyX>& tail() const { return tail_; }
  int declared_genus() const { return declared_genus_; }

  Elem eval(Elem x, Elem y) const;
  Elem eval_dx(Elem x, Elem y) const;
  Elem eval_dy(Elem x, Elem y) const;

  /// Throws std::invalid_argument when the origin is not a smooth point
  /// with x as uniformizer, or when an affine rational point is singular.
  void validate() const;

  // Ring arithmetic modulo the defining polynomial.
  BivariateElement constant(Elem c) const;
  BivariateElement x_power(int i) const;
  BivariateElement y_power(int j) const;
  BivariateElement add(const BivariateElement& a, const BivariateElement& b) const;
  BivariateElement scale(const BivariateElement& a, Elem c) const;
  BivariateElement times_x_power(const BivariateElement& a, int i) const;
  BivariateElement times_y(const BivariateElement& a) const;
  BivariateElement mul(const BivariateElement& a, const BivariateElement& b) const;
  Elem eval(const BivariateElement& g, Elem x, Elem y) const;

 private:
  CurvePreset(std::string id, SmallField field, std::vector<PolyX> tail, int genus);

  std::string id_;
  SmallField field_;
  std::vector<PolyX> tail_;
  int declared_genus_;
};

}  // namespace agcb
