#pragma once

#include <stdexcept>
#include <vector>

#include "agcb/curve.hpp"

namespace agcb {

/// Power series in the uniformizer t = x at the origin, truncated at
/// t^precision. coeffs[i] is the coefficient of t^i (i < precision).
struct TruncatedSeries {
  std::vector<Elem> coeffs;
  int precision = 0;

  /// Index of the first nonzero coefficient, or precision for the
  /// zero-to-precision element.
  int valuation() const;
  bool is_zero_to_precision() const { return valuation() == precision; }
};

/// Basis of the functions regular away from P over F[x], with pairwise
/// distinct pole orders modulo deg_y F. Its weights are the Apery set of the
/// Weierstrass semigroup at P with respect to the pole order of x.
struct ReducedBasis {
  std::vector<BivariateElement> elements;
  std::vector<int> weights;

  int genus(int y_degree) const;
};

/// Function u with div(u) = order * (Q - P), order minimal.
struct TorsionUnit {
  int order = 0;
  BivariateElement unit;
};

class KernelRangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

TruncatedSeries expand_series_at_origin(const CurvePreset& curve, int precision);

/// v_P(g) via the degree of the norm Res_y(F, g); throws std::domain_error for g = 0.
int valuation_at_infinity(const CurvePreset& curve, const BivariateElement& g);

ReducedBasis reduced_infinity_basis(const CurvePreset& curve);

/// Substitutes the origin expansion of y into g.
TruncatedSeries expand_at_origin(const CurvePreset& curve, const BivariateElement& g,
                                 const TruncatedSeries& y_series);

/// Exact Riemann-Roch data for divisors aP + bQ on one curve preset.
/// Immutable after construction; all queries are const and thread-safe.
class FunctionFieldKernel {
 public:
  /// window <= 0 selects the default |a|, |b| <= 6g + e.
  explicit FunctionFieldKernel(CurvePreset curve, int window = 0);

  const CurvePreset& curve() const { return curve_; }
  const ReducedBasis& basis() const { return basis_; }
  const TorsionUnit& torsion() const { return torsion_; }
  int genus() const { return genus_; }
  int torsion_order() const { return torsion_.order; }
  int window() const { return window_; }

  /// l(aP + bQ).
  int riemann_roch_dim(int a, int b) const;

  /// Basis of L(aP + bQ): each element is numerators[i] / u^unit_power.
  struct SpaceBasis {
    std::vector<BivariateElement> numerators;
    int unit_power = 0;
  };
  SpaceBasis riemann_roch_basis(int a, int b) const;

  /// Orders of vanishing at Q realized by nonzero elements of L(aP), a >= 0.
  std::vector<int> origin_orders(int a) const;

  /// Least e <= search_cap with an element of L(eP) vanishing to order
  /// exactly e at Q; throws std::runtime_error if none exists.
  TorsionUnit class_torsion_order(int search_cap) const;

 private:
  struct EchelonRow {
    int pole_order;
    int lead;
    std::vector<Elem> series;
    BivariateElement function;
  };

  void extend_echelon(int max_pole);
  void check_window(int a, int b) const;
  /// Shift k >= 0 so that (a + ek, b - ek) has a' >= 0, b' <= 0.
  int shift_for(int a, int b) const;

  CurvePreset curve_;
  ReducedBasis basis_;
  int genus_ = 0;
  TorsionUnit torsion_;
  int window_ = 0;
  int max_pole_ = -1;
  int precision_ = 0;
  TruncatedSeries y_series_;
  std::vector<TruncatedSeries> basis_series_;
  std::vector<EchelonRow> rows_;  // sorted by pole order
  std::vector<int> row_of_lead_;  // lead -> row index, -1 if none
};

}  // namespace agcb
