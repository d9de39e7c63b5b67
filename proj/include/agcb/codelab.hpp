#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "agcb/divisor.hpp"
#include "agcb/kernel.hpp"

namespace agcb {

/// Raised instead of returning an estimate when an exact computation would
/// exceed its budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct AffinePoint {
  Elem x = 0, y = 0;
  friend bool operator==(const AffinePoint&, const AffinePoint&) = default;
};

/// Affine rational points sorted by (x, y) with 0 first and nonzero elements
/// in discrete-log order; the place at infinity P is always present too.
struct RationalPointList {
  std::vector<AffinePoint> affine;
  int size() const { return static_cast<int>(affine.size()) + 1; }
};

RationalPointList rational_points(const CurvePreset& curve);

/// Affine points minus the origin Q when G has a Q-part (P is never in D).
std::vector<AffinePoint> default_evaluation_set(const RationalPointList& pts, const TwoPointDivisor& G);
/// Affine points minus the origin: disjoint from {P, Q}, so every avoid set is met.
std::vector<AffinePoint> evaluation_set_avoiding_pq(const RationalPointList& pts);

enum class CodeKind { L, Omega };

using Matrix = std::vector<std::vector<Elem>>;

struct LinearCode {
  SmallField field;
  Matrix generator;  // k rows of length n, full rank
  int n = 0;
  int k = 0;
  std::string curve_id;
  std::vector<AffinePoint> D;
  TwoPointDivisor G;
  CodeKind kind = CodeKind::L;
};

/// Evaluation vectors at D of a basis of L(aP + bQ).
Matrix evaluate_space(const FunctionFieldKernel& kernel, const std::vector<AffinePoint>& D, const TwoPointDivisor& A);

/// C_L(D, G), or C_Omega(D, G) as its dual. Throws std::invalid_argument when
/// D contains the origin and G has a Q-part.
LinearCode build_code(const FunctionFieldKernel& kernel, const std::vector<AffinePoint>& D, const TwoPointDivisor& G,
                      CodeKind kind);

// Dense linear algebra over a small field.
Matrix row_echelon(const SmallField& F, Matrix m);  // reduced, zero rows dropped
int rank(const SmallField& F, const Matrix& m);
Matrix null_space(const SmallField& F, const Matrix& m, int ncols);

struct DistanceBudget {
  long long codewords = 20'000'000;  // q^k limit for direct enumeration
  long long nodes = 200'000'000;     // column-subset search nodes
};

/// Exact minimum weight: enumerates codewords when q^k fits the budget,
/// otherwise finds the smallest linearly dependent set of parity-check
/// columns. Throws BudgetExceeded when neither fits; a code with k = 0
/// throws std::invalid_argument.
int exact_min_distance(const LinearCode& code, const DistanceBudget& budget = {});

/// AB check for G = A + B + Z: every product of basis functions of L(A) and
/// L(B) is orthogonal to C_Omega(D, G), and wt(c) >= dim(c*C_L(D,A)) +
/// dim(c*C_L(D,B)) for every codeword c (enumeration within budget).
/// Throws std::invalid_argument unless Z >= 0 and D avoids supp of A, B, Z.
bool star_product_check(const FunctionFieldKernel& kernel, const std::vector<AffinePoint>& D,
                        const TwoPointDivisor& A, const TwoPointDivisor& B, const TwoPointDivisor& Z,
                        long long codeword_budget = 20'000'000);

struct AuditRow {
  TwoPointDivisor C, G;
  int n = 0, k = 0;
  std::optional<int> d_exact;  // empty: skipped(budget)
  std::vector<std::pair<std::string, int>> bounds;
  std::vector<std::string> violations;  // bounds above d_exact
  bool d_B_exact = false;
};

struct AuditReport {
  std::string curve_id;
  int max_degc = 0;
  std::vector<AuditRow> rows;

  int violation_count() const;
  int skipped_count() const;
  int d_B_mismatch_count() const;
  /// Header "G,C,n,k,d_exact,<bounds...>,safe,d_B_exact".
  void write_csv(std::ostream& os) const;
};

/// Every class C with 0 < deg C <= max_degc (C = (deg - r)P + rQ, 0 <= r < e),
/// code C_Omega(D, K + C) with D the affine points minus the origin.
AuditReport audit_bounds(const FunctionFieldKernel& kernel, int max_degc, const DistanceBudget& budget = {});

}  // namespace agcb
