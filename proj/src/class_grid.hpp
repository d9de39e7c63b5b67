#pragma once

// Divisor classes of degree lo..hi, indexed by (degree, b mod e). Every
// two-point divisor aP + bQ is equivalent to the representative
// (d - r)P + rQ with d = a + b and r = b mod e.

#include "agcb/tables.hpp"

namespace agcb::detail {

inline int mod(int a, int m) { return ((a % m) + m) % m; }

struct ClassGrid {
  int e = 1;
  int lo = 0;
  int hi = -1;

  ClassGrid(int torsion, int deg_lo, int deg_hi) : e(torsion), lo(deg_lo), hi(deg_hi) {}

  int size() const { return (hi - lo + 1) * e; }
  bool contains_degree(int d) const { return d >= lo && d <= hi; }
  int index(int d, int r) const { return (d - lo) * e + r; }
  int index_of(const TwoPointDivisor& X) const { return index(X.degree(), mod(X.b, e)); }
  bool contains(const TwoPointDivisor& X) const { return contains_degree(X.degree()); }
  int degree(int idx) const { return lo + idx / e; }
  int residue(int idx) const { return idx % e; }
  TwoPointDivisor rep(int idx) const { return {degree(idx) - residue(idx), residue(idx)}; }
  /// Index of X - pt, or -1 below the grid.
  int minus(int idx, Point pt) const {
    const int d = degree(idx) - 1;
    if (d < lo) return -1;
    return index(d, pt == Point::P ? residue(idx) : mod(residue(idx) - 1, e));
  }
  /// Index of X + pt, or -1 above the grid.
  int plus(int idx, Point pt) const {
    const int d = degree(idx) + 1;
    if (d > hi) return -1;
    return index(d, pt == Point::P ? residue(idx) : mod(residue(idx) + 1, e));
  }
};

}  // namespace agcb::detail
