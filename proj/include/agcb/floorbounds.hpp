#pragma once

#include <optional>

#include "agcb/report.hpp"
#include "agcb/tables.hpp"

namespace agcb {

// All bounds are for C_Omega(D, G) with G = K + C, K = (2g-2)P. Searches run
// over every two-point divisor (equivalently every divisor class in the
// degree band where the objective is not constant); values never depend on
// the tie-breaking, which prefers a smaller avoid set, then smaller deg Z,
// then a smaller P-coefficient of Z.

int goppa_bound(const TwoPointDivisor& C);

/// deg C + 1 when C has a base point at P or Q, else deg C.
/// Throws UnsupportedClass when l(-C) != 0.
int base_point_bound(const DimensionTable& t, const TwoPointDivisor& C);

BoundReport lm_bound(const DimensionTable& t, const TwoPointDivisor& C);
BoundReport gst_bound(const DimensionTable& t, const TwoPointDivisor& C);
/// `allowed` restricts supp Z (used to certify the avoid-set alternatives).
BoundReport abz_bound(const DimensionTable& t, const TwoPointDivisor& C, PointSet allowed = PointSet::both());

enum class AbzPlusMode { full, gst2 };
BoundReport abz_plus_bound(const DimensionTable& t, const TwoPointDivisor& C, AbzPlusMode mode);

// Witness evaluators. Each takes an explicit decomposition K + C = A + B + Z.

/// l(A) - l(A-C) + l(B) - l(B-C).
int abz_objective(const DimensionTable& t, const TwoPointDivisor& C, const TwoPointDivisor& A,
                  const TwoPointDivisor& B);
/// deg C + l(B+Z-C) - l(B+Z) + l(B) - l(B-C).
int abz_objective_eq2(const DimensionTable& t, const TwoPointDivisor& C, const TwoPointDivisor& B,
                      const TwoPointDivisor& Z);
/// deg C + deg Z + l(A) - l(A+Z) + l(B) - l(B+Z).
int abz_objective_eq3(const DimensionTable& t, const TwoPointDivisor& C, const TwoPointDivisor& A,
                      const TwoPointDivisor& B, const TwoPointDivisor& Z);

/// deg C + deg Z when L(A+Z) = L(A) and L(B+Z) = L(B).
std::optional<int> lm_value(const DimensionTable& t, const TwoPointDivisor& C, const TwoPointDivisor& A,
                            const TwoPointDivisor& B, const TwoPointDivisor& Z);

/// G = Abar + B with L(Abar) = L(Abar - Z), L(B) = L(B + Z), L(C') = L(B):
/// deg G - (2g-2) + deg Z + i(Abar) - i(G - C').
std::optional<int> gst_corollary_value(const DimensionTable& t, const TwoPointDivisor& G,
                                       const TwoPointDivisor& Abar, const TwoPointDivisor& B,
                                       const TwoPointDivisor& Z, const TwoPointDivisor& Cprime);

/// delta(A) in {0, 1} for the given A' (checked against both conditions).
bool abz_plus_delta(const DimensionTable& t, const TwoPointDivisor& C, const TwoPointDivisor& A,
                    const TwoPointDivisor& A_prime, const TwoPointDivisor& Z);

/// Re-evaluates any floor or mixed bound witness: abz objective plus the
/// delta gains of the auxiliary divisors that are present.
int evaluate_witness(const DimensionTable& t, const TwoPointDivisor& C, const Decomposition& w);

}  // namespace agcb
