#include <doctest.h>

#include <sstream>

#include "agcb/codelab.hpp"
#include "oracles.hpp"

using namespace agcb;

namespace {

const FunctionFieldKernel& hermitian2() {
  static const FunctionFieldKernel k(CurvePreset::hermitian(2));
  return k;
}

const FunctionFieldKernel& hermitian3() {
  static const FunctionFieldKernel k(CurvePreset::hermitian(3));
  return k;
}

std::vector<AffinePoint> all_affine(const FunctionFieldKernel& k) { return rational_points(k.curve()).affine; }

bool orthogonal(const SmallField& F, const Matrix& a, const Matrix& b) {
  for (const auto& r : a)
    for (const auto& s : b) {
      Elem acc = 0;
      for (size_t i = 0; i < r.size(); ++i) acc = F.add(acc, F.mul(r[i], s[i]));
      if (acc != 0) return false;
    }
  return true;
}

}  // namespace

TEST_CASE("rational point counts") {
  CHECK(rational_points(CurvePreset::hermitian(2)).size() == 9);
  CHECK(rational_points(CurvePreset::hermitian(3)).size() == 28);
  CHECK(rational_points(CurvePreset::from_id("suzuki8")).size() == 65);
  const CurvePreset c = CurvePreset::hermitian(3);
  const RationalPointList pts = rational_points(c);
  CHECK(pts.affine.front() == AffinePoint{0, 0});
  for (const auto& p : pts.affine) CHECK(c.eval(p.x, p.y) == 0);
}

TEST_CASE("evaluation sets") {
  const RationalPointList pts = rational_points(CurvePreset::hermitian(2));
  CHECK(default_evaluation_set(pts, {2, 0}).size() == 8);
  CHECK(default_evaluation_set(pts, {2, 1}).size() == 7);
  CHECK(evaluation_set_avoiding_pq(pts).size() == 7);
}

TEST_CASE("small Hermitian codes") {
  const auto& k = hermitian2();
  const auto D = all_affine(k);
  const LinearCode c = build_code(k, D, {2, 0}, CodeKind::L);
  CHECK(c.n == 8);
  CHECK(c.k == 2);
  CHECK(exact_min_distance(c) == 6);
  CHECK(oracle::brute_min_distance(c.field, c.generator) == 6);
  const LinearCode constants = build_code(k, D, {0, 0}, CodeKind::L);
  CHECK(constants.k == 1);
  CHECK(exact_min_distance(constants) == 8);
  CHECK_THROWS_AS(build_code(k, D, {2, 1}, CodeKind::L), std::invalid_argument);
}

TEST_CASE("Omega codes are duals") {
  for (const FunctionFieldKernel* k : {&hermitian2(), &hermitian3()}) {
    const auto D = evaluation_set_avoiding_pq(rational_points(k->curve()));
    for (TwoPointDivisor G : {TwoPointDivisor{2, 0}, {3, 1}, {1, 2}, {5, 1}}) {
      const LinearCode l = build_code(*k, D, G, CodeKind::L);
      const LinearCode o = build_code(*k, D, G, CodeKind::Omega);
      CHECK(l.k + o.k == l.n);
      CHECK(rank(l.field, l.generator) == l.k);
      CHECK(orthogonal(l.field, l.generator, o.generator));
    }
  }
}

TEST_CASE("linear algebra") {
  SmallField F(3, 1);
  const Matrix m{{1, 2, 0}, {2, 1, 0}, {0, 0, 1}};
  CHECK(rank(F, m) == 2);
  const Matrix ns = null_space(F, m, 3);
  REQUIRE(ns.size() == 1);
  CHECK(orthogonal(F, m, ns));
  CHECK(row_echelon(F, m).size() == 2);
}

TEST_CASE("exact distance agrees with the brute-force oracle") {
  const auto& k3 = hermitian3();
  const auto D3 = evaluation_set_avoiding_pq(rational_points(k3.curve()));
  for (TwoPointDivisor G : {TwoPointDivisor{3, 0}, {4, 1}, {6, 2}, {8, 0}}) {
    const LinearCode l = build_code(k3, D3, G, CodeKind::L);
    REQUIRE(l.k <= 6);
    CHECK(exact_min_distance(l) == oracle::brute_min_distance(l.field, l.generator));
  }
  // the parity-check column search, forced by a zero enumeration budget
  const auto& k2 = hermitian2();
  const auto D2 = evaluation_set_avoiding_pq(rational_points(k2.curve()));
  for (int a = 0; a <= 7; ++a)
    for (int b = 0; b <= 2; ++b)
      for (CodeKind kind : {CodeKind::L, CodeKind::Omega}) {
        const LinearCode c = build_code(k2, D2, {a, b}, kind);
        if (c.k == 0) continue;
        CHECK(exact_min_distance(c, {1, 100'000'000}) == oracle::brute_min_distance(c.field, c.generator));
      }
}

TEST_CASE("distance budgets refuse rather than estimate") {
  const auto& k = hermitian3();
  const auto D = evaluation_set_avoiding_pq(rational_points(k.curve()));
  const LinearCode o = build_code(k, D, {10, 0}, CodeKind::Omega);
  CHECK_THROWS_AS(exact_min_distance(o, {10, 10}), BudgetExceeded);
}

TEST_CASE("star product lemma") {
  const auto& k = hermitian2();
  const auto D = evaluation_set_avoiding_pq(rational_points(k.curve()));
  CHECK(star_product_check(k, D, {1, 0}, {1, 0}, {0, 0}));
  CHECK(star_product_check(k, D, {1, 0}, {1, 0}, {0, 1}));
  CHECK(star_product_check(k, D, {2, 0}, {1, 1}, {1, 0}));
  CHECK_THROWS_AS(star_product_check(k, D, {1, 0}, {1, 0}, {0, -1}), std::invalid_argument);
  CHECK_THROWS_AS(star_product_check(k, all_affine(k), {1, 0}, {0, 1}, {0, 0}), std::invalid_argument);
}

TEST_CASE("audit on hermitian2") {
  const AuditReport rep = audit_bounds(hermitian2(), 6);
  CHECK(rep.rows.size() == 18);
  CHECK(rep.violation_count() == 0);
  CHECK(rep.skipped_count() == 0);
  for (const auto& row : rep.rows) {
    REQUIRE(row.d_exact);
    CHECK(*row.d_exact == oracle::brute_min_distance(SmallField(2, 2), build_code(hermitian2(),
                              evaluation_set_avoiding_pq(rational_points(hermitian2().curve())), row.G,
                              CodeKind::Omega).generator));
  }
  // The two dimension-one codes where the exact distance n = 7 exceeds
  // d_B = 6; every class-based bound gives 6 there.
  CHECK(rep.d_B_mismatch_count() == 2);
  for (const auto& row : rep.rows)
    if (!row.d_B_exact) CHECK((row.G == TwoPointDivisor{5, 1} || row.G == TwoPointDivisor{4, 2}));
  std::ostringstream os;
  rep.write_csv(os);
  CHECK(os.str().rfind("G,C,n,k,d_exact,", 0) == 0);
  CHECK(audit_bounds(hermitian2(), 0).rows.empty());
}

TEST_CASE("audit on hermitian3") {
  const AuditReport rep = audit_bounds(hermitian3(), 8);
  CHECK(rep.rows.size() == 32);
  CHECK(rep.violation_count() == 0);
  CHECK(rep.skipped_count() == 0);
  CHECK(rep.d_B_mismatch_count() == 0);
}
