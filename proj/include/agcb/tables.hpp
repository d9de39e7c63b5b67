#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "agcb/divisor.hpp"
#include "agcb/kernel.hpp"

namespace agcb {

class TableRangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

class CacheError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Rectangle [a_lo, a_hi] x [b_lo, b_hi] of coefficient pairs.
struct TableWindow {
  int a_lo = 0, a_hi = 0, b_lo = 0, b_hi = 0;

  bool contains(int a, int b) const { return a >= a_lo && a <= a_hi && b >= b_lo && b <= b_hi; }
  int width() const { return a_hi - a_lo + 1; }
  int height() const { return b_hi - b_lo + 1; }
  friend bool operator==(const TableWindow&, const TableWindow&) = default;

  /// a, b in [-(2g+e), (2g-1) + 2g + e].
  static TableWindow for_bounds(int genus, int torsion);
};

/// l(aP + bQ) over a window, plus the class data every bound needs.
/// Queries outside the window fall back to deg < 0 -> 0,
/// deg > 2g-2 -> deg + 1 - g, and otherwise a torsion shift into the window.
/// Immutable once built.
class DimensionTable {
 public:
  DimensionTable(const FunctionFieldKernel& kernel, TableWindow window);

  const std::string& curve_id() const { return curve_id_; }
  int genus() const { return genus_; }
  int torsion_order() const { return torsion_; }
  const TableWindow& window() const { return window_; }
  /// K represented as (2g-2)P; certified by l((2g-2)P) = g at build time.
  TwoPointDivisor canonical() const { return {2 * genus_ - 2, 0}; }

  int l(const TwoPointDivisor& A) const;
  int l(int a, int b) const { return l(TwoPointDivisor{a, b}); }
  /// True when A lies in the window or one of the fallbacks resolves it.
  bool resolvable(const TwoPointDivisor& A) const;

  /// A in Gamma_pt, i.e. L(A) != L(A - pt).
  bool gamma(const TwoPointDivisor& A, Point pt) const { return l(A) != l(A - TwoPointDivisor::unit(pt)); }
  /// Greedy stripping of P then Q to a fixed point; throws std::domain_error if l(A) = 0.
  TwoPointDivisor floor(const TwoPointDivisor& A) const;
  /// Same, restricted to stripping the points in `allowed`.
  TwoPointDivisor floor_within(const TwoPointDivisor& A, PointSet allowed) const;
  int ceiling_extent(const TwoPointDivisor& A, Point pt) const;

  std::uint64_t checksum() const { return checksum_; }

  nlohmann::json to_json() const;
  /// Rejects a cache whose checksum or header does not match its payload.
  static DimensionTable from_json(const nlohmann::json& j);
  void save(const std::string& path) const;
  static DimensionTable load(const std::string& path);
  /// "a,b,l" rows in row-major order with a header line.
  void write_csv(std::ostream& out) const;

 private:
  DimensionTable() = default;
  std::uint64_t compute_checksum() const;
  int stored(int a, int b) const { return values_[(b - window_.b_lo) * window_.width() + (a - window_.a_lo)]; }

  std::string curve_id_;
  int genus_ = 0;
  int torsion_ = 0;
  TableWindow window_;
  std::vector<std::int16_t> values_;  // row-major in b
  std::uint64_t checksum_ = 0;
};

DimensionTable build_dimension_table(const FunctionFieldKernel& kernel, TableWindow window);
DimensionTable build_dimension_table(const FunctionFieldKernel& kernel);

inline bool gamma_membership(const DimensionTable& t, const TwoPointDivisor& A, Point pt) { return t.gamma(A, pt); }
inline TwoPointDivisor two_point_floor(const DimensionTable& t, const TwoPointDivisor& A) { return t.floor(A); }
inline int ceiling_extent(const DimensionTable& t, const TwoPointDivisor& A, Point pt) {
  return t.ceiling_extent(A, pt);
}

/// Closed-form count for the Hermitian curve y^q + y = x^{q+1}: the functions
/// x^i y^j (0 <= i <= q, j in Z) have distinct pole orders iq + j(q+1) at P and
/// are regular away from P and Q, so
///   l(aP + bQ) = #{(i, j) : 0 <= i <= q, iq + j(q+1) <= a, i + j(q+1) >= -b}.
int hermitian_closed_form_dim(int q, int a, int b);

}  // namespace agcb
