#pragma once

#include <compare>
#include <string>
#include <string_view>

namespace agcb {

enum class Point { P, Q };

inline char point_name(Point pt) { return pt == Point::P ? 'P' : 'Q'; }
inline Point other(Point pt) { return pt == Point::P ? Point::Q : Point::P; }

/// aP + bQ.
struct TwoPointDivisor {
  int a = 0;
  int b = 0;

  int degree() const { return a + b; }
  bool is_effective() const { return a >= 0 && b >= 0; }
  bool is_zero() const { return a == 0 && b == 0; }
  /// Componentwise partial order.
  bool leq(const TwoPointDivisor& o) const { return a <= o.a && b <= o.b; }

  friend TwoPointDivisor operator+(TwoPointDivisor x, TwoPointDivisor y) { return {x.a + y.a, x.b + y.b}; }
  friend TwoPointDivisor operator-(TwoPointDivisor x, TwoPointDivisor y) { return {x.a - y.a, x.b - y.b}; }
  friend TwoPointDivisor operator-(TwoPointDivisor x) { return {-x.a, -x.b}; }
  friend TwoPointDivisor operator*(int k, TwoPointDivisor x) { return {k * x.a, k * x.b}; }
  friend bool operator==(const TwoPointDivisor&, const TwoPointDivisor&) = default;
  friend auto operator<=>(const TwoPointDivisor&, const TwoPointDivisor&) = default;

  static TwoPointDivisor unit(Point pt) { return pt == Point::P ? TwoPointDivisor{1, 0} : TwoPointDivisor{0, 1}; }
  int coefficient(Point pt) const { return pt == Point::P ? a : b; }

  /// "13P", "-4P+6Q", "2Q", "0".
  std::string to_string() const;
  /// Grammar [-]<int>P[+[-]<int>Q] (either term may be omitted, whitespace ignored).
  static TwoPointDivisor parse(std::string_view text);
};

/// Subset of {P, Q}.
struct PointSet {
  bool p = false;
  bool q = false;

  static PointSet none() { return {}; }
  static PointSet both() { return {true, true}; }
  static PointSet of(Point pt) { return pt == Point::P ? PointSet{true, false} : PointSet{false, true}; }
  /// Points in the support of an effective divisor.
  static PointSet support(const TwoPointDivisor& z) { return {z.a != 0, z.b != 0}; }

  bool contains(Point pt) const { return pt == Point::P ? p : q; }
  int size() const { return int(p) + int(q); }
  bool empty() const { return !p && !q; }
  bool subset_of(const PointSet& o) const { return (!p || o.p) && (!q || o.q); }
  PointSet unite(const PointSet& o) const { return {p || o.p, q || o.q}; }
  friend bool operator==(const PointSet&, const PointSet&) = default;

  /// "{}", "{P}", "{Q}", "{P,Q}".
  std::string to_string() const;
};

}  // namespace agcb
