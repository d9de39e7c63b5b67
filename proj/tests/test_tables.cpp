#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "agcb/tables.hpp"
#include "fixtures.hpp"

using namespace agcb;

namespace {
const TwoPointDivisor P{1, 0}, Q{0, 1};
}

TEST_CASE("divisor strings") {
  CHECK(TwoPointDivisor::parse("28P+2Q") == TwoPointDivisor{28, 2});
  CHECK(TwoPointDivisor::parse(" -4P + 6Q ") == TwoPointDivisor{-4, 6});
  CHECK(TwoPointDivisor::parse("30P") == TwoPointDivisor{30, 0});
  CHECK(TwoPointDivisor::parse("2Q") == TwoPointDivisor{0, 2});
  CHECK(TwoPointDivisor::parse("27P+-1Q") == TwoPointDivisor{27, -1});
  CHECK_THROWS(TwoPointDivisor::parse("28X"));
  CHECK_THROWS(TwoPointDivisor::parse(""));
  for (TwoPointDivisor d : {TwoPointDivisor{13, 0}, {-4, 6}, {0, 2}, {0, 0}, {5, -3}})
    CHECK(TwoPointDivisor::parse(d.to_string()) == d);
  CHECK(PointSet::both().to_string() == "{P,Q}");
  CHECK(PointSet::support({0, 3}) == PointSet::of(Point::Q));
}

TEST_CASE("table examples") {
  const auto& t = suzuki8_table();
  CHECK(t.l({26, 0}) == 14);
  CHECK(t.l({0, 0}) == 1);
  CHECK(t.l({-1, 0}) == 0);
  CHECK(t.l({8, 0}) == 2);
  CHECK(gamma_membership(t, {0, 0}, Point::P));
  CHECK(gamma_membership(t, {8, 0}, Point::P));
  CHECK_FALSE(gamma_membership(t, {11, -6}, Point::P));
}

TEST_CASE("floors and ceilings") {
  const auto& t = suzuki8_table();
  CHECK(two_point_floor(t, {14, 0}) == TwoPointDivisor{13, 0});
  CHECK(two_point_floor(t, {0, 0}) == TwoPointDivisor{0, 0});
  CHECK(two_point_floor(t, {8, 0}) == TwoPointDivisor{8, 0});
  CHECK_THROWS_AS(two_point_floor(t, {-3, 0}), std::domain_error);
  CHECK(ceiling_extent(t, {0, 0}, Point::P) == 7);
  // 26P is canonical and 27P is not special, so l(27P) = l(26P) = 14
  CHECK(ceiling_extent(t, {26, 0}, Point::P) == 1);
  CHECK(ceiling_extent(t, {27, 0}, Point::P) == 0);
  for (int a = 27; a < 40; ++a) CHECK(ceiling_extent(t, {a, -3}, Point::Q) == 0);
}

TEST_CASE("floor invariants over the bound range") {
  const auto& t = suzuki8_table();
  for (int a = -10; a <= 45; ++a)
    for (int b = -10; b <= 20; ++b) {
      const TwoPointDivisor A{a, b};
      if (t.l(A) == 0) continue;
      const TwoPointDivisor f = t.floor(A);
      CHECK(f.leq(A));
      CHECK(t.l(f) == t.l(A));
      CHECK(t.floor(f) == f);
      CHECK(t.l(f - P) < t.l(f));
      CHECK(t.l(f - Q) < t.l(f));
      // stripping Q first reaches the same divisor
      TwoPointDivisor g = t.floor_within(A, PointSet::of(Point::Q));
      g = t.floor(g);
      CHECK(g == f);
    }
}

TEST_CASE("fallbacks outside the window") {
  const auto& t = suzuki8_table();
  const TableWindow& w = t.window();
  CHECK(t.l({w.a_hi + 5, 0}) == w.a_hi + 5 + 1 - 14);
  CHECK(t.l({w.a_lo - 5, 3}) == 0);
  CHECK(t.gamma({w.a_hi + 3, 1}, Point::P));
  CHECK_FALSE(t.gamma({-w.a_hi, 1}, Point::Q));
  // torsion shift resolves a divisor of middle degree outside the window
  CHECK(t.l({w.a_hi + 13, -w.a_hi}) == suzuki8_kernel().riemann_roch_dim(w.a_hi + 13, -w.a_hi));
}

TEST_CASE("table agrees with the kernel and survives a cache round trip") {
  const auto& k = suzuki8_kernel();
  const auto& t = suzuki8_table();
  const TableWindow& w = t.window();
  for (int a = w.a_lo; a <= w.a_hi; a += 3)
    for (int b = w.b_lo; b <= w.b_hi; b += 5) CHECK(t.l(a, b) == k.riemann_roch_dim(a, b));

  const auto path = std::filesystem::temp_directory_path() / "agcb_test_table.json";
  t.save(path.string());
  const DimensionTable r = DimensionTable::load(path.string());
  CHECK(r.checksum() == t.checksum());
  CHECK(r.window() == w);
  CHECK(r.l(13, 4) == t.l(13, 4));

  nlohmann::json j = t.to_json();
  j["values"][5] = j["values"][5].get<int>() + 1;
  CHECK_THROWS_AS(DimensionTable::from_json(j), CacheError);
  {
    std::ofstream out(path);
    out << "{ not json";
  }
  CHECK_THROWS_AS(DimensionTable::load(path.string()), CacheError);
  std::filesystem::remove(path);
}

TEST_CASE("csv export") {
  FunctionFieldKernel k(CurvePreset::hermitian(2));
  const DimensionTable t = build_dimension_table(k, TableWindow{0, 2, 0, 1});
  std::ostringstream os;
  t.write_csv(os);
  CHECK(os.str() == "a,b,l\n0,0,1\n1,0,1\n2,0,2\n0,1,1\n1,1,2\n2,1,3\n");
}
