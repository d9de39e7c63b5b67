#pragma once

#include <vector>

#include "agcb/field.hpp"

namespace agcb {

/// Univariate polynomial in x, coefficients low degree first. The zero
/// polynomial is the empty vector; nonzero polynomials carry no trailing zeros.
using PolyX = std::vector<Elem>;

namespace poly {

void trim(PolyX& a);
int degree(const PolyX& a);  // -1 for zero
PolyX add(const SmallField& F, const PolyX& a, const PolyX& b);
PolyX sub(const SmallField& F, const PolyX& a, const PolyX& b);
PolyX mul(const SmallField& F, const PolyX& a, const PolyX& b);
PolyX scale(const SmallField& F, const PolyX& a, Elem c);
PolyX shift(const PolyX& a, int k);  // multiply by x^k, k >= 0
PolyX monomial(Elem c, int k);
/// Exact division; throws if b does not divide a.
PolyX div_exact(const SmallField& F, const PolyX& a, const PolyX& b);
Elem eval(const SmallField& F, const PolyX& a, Elem x);

/// Determinant of a square matrix over F[x] by fraction-free elimination.
PolyX determinant(const SmallField& F, std::vector<std::vector<PolyX>> m);

}  // namespace poly
}  // namespace agcb
