#include <doctest.h>

#include "agcb/floorbounds.hpp"
#include "fixtures.hpp"

using namespace agcb;

namespace {
// C = G - K with K = 26P.
TwoPointDivisor code(int a, int b) { return {a - 26, b}; }
}  // namespace

TEST_CASE("basic bounds") {
  const auto& t = suzuki8_table();
  CHECK(goppa_bound({4, 2}) == 6);
  CHECK(goppa_bound({0, 0}) == 0);
  CHECK(goppa_bound({-4, 6}) == 2);
  CHECK(base_point_bound(t, {1, 0}) == 2);
  CHECK(base_point_bound(t, {13, 0}) == 13);
  CHECK_THROWS_AS(base_point_bound(t, {0, 0}), UnsupportedClass);
  CHECK_THROWS_AS(base_point_bound(t, {13, -13}), UnsupportedClass);
}

TEST_CASE("floor bound examples") {
  const auto& t = suzuki8_table();
  CHECK(lm_bound(t, {4, 1}).value == 7);
  CHECK(lm_bound(t, code(22, 6)).value == 5);
  CHECK(lm_bound(t, code(28, 2)).value == 8);
  CHECK(gst_bound(t, code(22, 6)).value == 6);
  CHECK(gst_bound(t, {4, 1}).value == 7);
  CHECK(gst_bound(t, {3, 1}).value == 6);
  CHECK(abz_bound(t, {4, 1}).value == 8);
  CHECK(abz_bound(t, {4, 2}).value == 10);
  CHECK(abz_bound(t, {3, 1}).value == 6);
}

TEST_CASE("mixed bound examples") {
  const auto& t = suzuki8_table();
  CHECK(abz_plus_bound(t, {3, 1}, AbzPlusMode::full).value == 8);
  CHECK(abz_plus_bound(t, {1, 1}, AbzPlusMode::full).value == 6);
  CHECK(abz_plus_bound(t, {3, 1}, AbzPlusMode::gst2).value == 6);
  CHECK(abz_plus_bound(t, code(24, 4), AbzPlusMode::gst2).value == 5);
  // a pure P-shift A' = A - kP only needs condition 2 at P
  CHECK(abz_plus_bound(t, code(27, 2), AbzPlusMode::full).value == 8);
}

TEST_CASE("witness of the 4P+Q example") {
  const auto& t = suzuki8_table();
  CHECK(abz_objective(t, {4, 1}, {13, 0}, {13, 0}) == 8);
  const BoundReport lm = lm_bound(t, {4, 1});
  REQUIRE(lm.witness);
  CHECK(lm_value(t, {4, 1}, lm.witness->A, lm.witness->B, lm.witness->Z) == 7);
}

TEST_CASE("avoid sets for G = 22P+6Q") {
  const auto& t = suzuki8_table();
  const TwoPointDivisor C = code(22, 6);
  const BoundReport q_only = abz_bound(t, C, PointSet::of(Point::Q));
  CHECK(q_only.value == 6);
  CHECK(q_only.avoid_set == PointSet::of(Point::Q));
  CHECK(abz_objective(t, C, {14, 0}, {8, 0}) == 6);
  CHECK(abz_objective_eq3(t, C, {14, 0}, {8, 0}, {0, 6}) == 6);
  CHECK(abz_objective_eq3(t, C, {13, 0}, {8, 0}, {1, 6}) == 6);
  CHECK(abz_bound(t, C).value == 6);
  CHECK(abz_bound(t, C).avoid_set == PointSet::of(Point::Q));
}

TEST_CASE("witnesses re-evaluate and the three ABZ forms agree") {
  const auto& t = suzuki8_table();
  const TwoPointDivisor K = t.canonical();
  for (int d = 1; d <= 27; ++d)
    for (int r = 0; r < 13; ++r) {
      const TwoPointDivisor C{d - r, r};
      const BoundReport abz = abz_bound(t, C);
      REQUIRE(abz.witness);
      const Decomposition& w = *abz.witness;
      CHECK(w.A + w.B + w.Z == K + C);
      CHECK(w.Z.is_effective());
      CHECK(PointSet::support(w.Z).subset_of(abz.avoid_set));
      CHECK(abz_objective(t, C, w.A, w.B) == abz.value);
      CHECK(abz_objective_eq2(t, C, w.B, w.Z) == abz.value);
      CHECK(abz_objective_eq3(t, C, w.A, w.B, w.Z) == abz.value);
      for (auto mode : {AbzPlusMode::full, AbzPlusMode::gst2}) {
        const BoundReport p = abz_plus_bound(t, C, mode);
        REQUIRE(p.witness);
        CHECK(evaluate_witness(t, C, *p.witness) == p.value);
      }
      const BoundReport lm = lm_bound(t, C);
      REQUIRE(lm.witness);
      CHECK(lm.value == C.degree() + lm.witness->Z.degree());
      CHECK(lm_value(t, C, lm.witness->A, lm.witness->B, lm.witness->Z) == lm.value);
    }
}

TEST_CASE("Z = 0 degenerates to the Goppa bound") {
  const auto& t = suzuki8_table();
  for (int d = 1; d <= 27; d += 2)
    for (int r = 0; r < 13; ++r) {
      const TwoPointDivisor C{d - r, r};
      CHECK(abz_bound(t, C, PointSet::none()).value == C.degree());
    }
}

TEST_CASE("report serialization") {
  const BoundReport r = abz_bound(suzuki8_table(), {4, 1});
  const auto j = r.to_json();
  CHECK(j["name"] == "d_ABZ");
  CHECK(j["value"] == 8);
  CHECK(j["witness"].contains("A"));
  CHECK(j.contains("avoid_set"));
}
