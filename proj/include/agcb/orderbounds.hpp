#pragma once

#include <map>
#include <string>
#include <vector>

#include "agcb/report.hpp"
#include "agcb/tables.hpp"

namespace agcb {

/// A_0 = start, A_i = A_{i-1} + steps[i-1].
struct GridPath {
  TwoPointDivisor start;
  std::vector<Point> steps;

  /// start, then `count` steps along pt.
  static GridPath line(const TwoPointDivisor& start, Point pt, int count);
  GridPath& then(Point pt, int count);
  TwoPointDivisor at(int i) const;
  std::vector<TwoPointDivisor> divisors() const;
  std::string step_string() const;
};

/// Index sets over 1..n for a path with n steps.
struct MtsOutcome {
  std::vector<int> delta, delta_prime, in_S, in_S_prime;
  int value = 0;
};

/// Main theorem evaluation along an explicit path.
MtsOutcome mts_evaluate(const DimensionTable& t, const TwoPointDivisor& C, PointSet S, PointSet S_prime,
                        const GridPath& path);

/// |Delta| - |Delta'| == deg C; throws std::invalid_argument if the path does
/// not start below min(0, deg C) and end above max(2g-2, 2g-2+deg C).
bool duality_check(const DimensionTable& t, const TwoPointDivisor& C, const GridPath& path);

enum class GridFamily {
  free,          // all monotone paths
  single_coset,  // all paths; S' = {pt} (the +1 rule only fires on pt-steps)
  line,          // straight pt-lines
  bent_line,     // pt-line, run of other-point steps, pt-line
  origin_line,   // the pt-line through 0
};

/// Best lower bound for gamma(C; S, S') from the main theorem over a path
/// family. Paths live in the degree band [min(0, deg C) - 1,
/// max(2g-2, 2g-2+deg C) + 1]: +1 edges need 0 <= deg A <= deg C + 2g - 1,
/// so optima are captured there. For single_coset S' must be {pt}.
int gamma_grid(const DimensionTable& t, const TwoPointDivisor& C, PointSet S, PointSet S_prime, GridFamily family,
               Point pt = Point::P);

/// Which main-theorem estimate labels the edges (C, C + Q).
enum class Estimator {
  free_grid,     // gamma(C; S, S') over all paths (vertex label, d_DK)
  single_coset,  // gamma(C; S, Q) over all paths (d_DP)
  line,          // gamma(C; S_Q, Q) over Q-lines (d_B)
  bent_line,     // gamma(C; S, Q) over bent Q-lines (d_ABZ')
  origin_line,   // gamma(C; Q, Q) on the Q-line through 0 (d_FR)
};

/// Shared label cache for many divisor classes on one table. Not thread-safe;
/// use one engine per worker.
class OrderBoundEngine {
 public:
  /// beelen_full_S: line labels use S = {P, Q} instead of S = {edge point}.
  explicit OrderBoundEngine(const DimensionTable& t, bool beelen_full_S = false);

  const DimensionTable& table() const { return t_; }

  /// Edge label gamma_*(C; S, pt) for the given estimator.
  int edge_label(Estimator est, const TwoPointDivisor& C, PointSet S, Point pt);
  /// Vertex label gamma_DK(C; S, S').
  int vertex_label(const TwoPointDivisor& C, PointSet S, PointSet S_prime);

  /// min over lambda in <S'> of the vertex label (free_grid) or of the max
  /// edge label over S' (other estimators).
  BoundReport aggregate_semigroup(const TwoPointDivisor& C, PointSet S, PointSet S_prime, Estimator est);
  /// d(C) = max_{Q in S'} min(d(C + Q), gamma_*(C; S, Q)), computed by a
  /// sweep in decreasing degree.
  BoundReport aggregate_sequence(const TwoPointDivisor& C, PointSet S, PointSet S_prime, Estimator est);
  /// Follows the edge of largest label at every vertex (P on ties).
  BoundReport aggregate_sequence_greedy(const TwoPointDivisor& C, PointSet S, PointSet S_prime, Estimator est);
  /// min_j gamma_*(C + j pt; S, pt): the constant sequence pt, pt, pt, ...
  BoundReport aggregate_constant(const TwoPointDivisor& C, PointSet S, Point pt, Estimator est);

  /// Vertices of degree >= top_degree(C) are seeded with deg C'.
  int top_degree(const TwoPointDivisor& C) const;

  /// d_FR, d_CMST, d_B, d_ABZ', d_DP, d_DK. Throws UnsupportedClass for L(-C) != 0.
  std::map<std::string, BoundReport> suite(const TwoPointDivisor& C);

 private:
  int label_uncached(Estimator est, const TwoPointDivisor& C, PointSet S, PointSet S_prime, Point pt) const;
  PointSet line_S(Point pt) const { return beelen_full_S_ ? PointSet::both() : PointSet::of(pt); }

  const DimensionTable& t_;
  bool beelen_full_S_;
  std::map<std::tuple<int, int, int, int, int, int>, int> cache_;
};

inline BoundReport aggregate_semigroup(const DimensionTable& t, const TwoPointDivisor& C, PointSet S,
                                       PointSet S_prime, Estimator est) {
  return OrderBoundEngine(t).aggregate_semigroup(C, S, S_prime, est);
}
inline BoundReport aggregate_sequence_greedy(const DimensionTable& t, const TwoPointDivisor& C, PointSet S,
                                             PointSet S_prime, Estimator est) {
  return OrderBoundEngine(t).aggregate_sequence_greedy(C, S, S_prime, est);
}
inline std::map<std::string, BoundReport> order_bound_suite(const DimensionTable& t, const TwoPointDivisor& C) {
  return OrderBoundEngine(t).suite(C);
}

}  // namespace agcb
