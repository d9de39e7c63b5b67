#include <doctest.h>

#include <stdexcept>

#include "agcb/curve.hpp"
#include "agcb/field.hpp"
#include "agcb/poly.hpp"

using namespace agcb;

TEST_CASE("field axioms hold exhaustively for small fields") {
  for (auto [p, k] : {std::pair{2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}, {2, 4}, {5, 1}}) {
    SmallField F(p, k);
    const int q = F.order();
    CHECK(F.characteristic() == p);
    for (int a = 0; a < q; ++a) {
      const Elem x = static_cast<Elem>(a);
      CHECK(F.add(x, F.neg(x)) == 0);
      CHECK(F.mul(x, 1) == x);
      if (x != 0) CHECK(F.mul(x, F.inv(x)) == 1);
      CHECK(F.pow(x, q) == x);
      for (int b = 0; b < q; ++b) {
        const Elem y = static_cast<Elem>(b);
        CHECK(F.add(x, y) == F.add(y, x));
        CHECK(F.mul(x, y) == F.mul(y, x));
        for (int c = 0; c < q; c += 3) {
          const Elem z = static_cast<Elem>(c);
          CHECK(F.mul(x, F.add(y, z)) == F.add(F.mul(x, y), F.mul(x, z)));
        }
      }
    }
  }
}

TEST_CASE("primitive element generates the multiplicative group") {
  SmallField F(2, 3);
  std::vector<bool> seen(8, false);
  for (int e = 0; e < 7; ++e) seen[F.primitive_power(e)] = true;
  for (int a = 1; a < 8; ++a) {
    CHECK(seen[a]);
    CHECK(F.primitive_power(F.log(static_cast<Elem>(a))) == a);
  }
}

TEST_CASE("polynomial arithmetic") {
  SmallField F(2, 1);
  const PolyX a{1, 1};  // 1 + x
  const PolyX sq = poly::mul(F, a, a);
  CHECK(sq == PolyX{1, 0, 1});
  CHECK(poly::div_exact(F, sq, a) == a);
  CHECK(poly::degree(PolyX{}) == -1);
  CHECK(poly::add(F, a, a).empty());
  CHECK(poly::eval(F, sq, 1) == 0);
  CHECK_THROWS(poly::div_exact(F, PolyX{1, 0, 1}, PolyX{0, 1}));
  // det [[x, 1], [1, x]] = x^2 + 1 in characteristic 2
  CHECK(poly::determinant(F, {{PolyX{0, 1}, PolyX{1}}, {PolyX{1}, PolyX{0, 1}}}) == PolyX{1, 0, 1});
}

TEST_CASE("curve presets") {
  for (const auto& id : CurvePreset::ids()) {
    const CurvePreset c = CurvePreset::from_id(id);
    CHECK(c.id() == id);
    CHECK_NOTHROW(c.validate());
  }
  CHECK_THROWS_AS(CurvePreset::from_id("nosuch"), std::invalid_argument);
  const CurvePreset h = CurvePreset::hermitian(2);
  CHECK(h.y_degree() == 2);
  CHECK(h.eval(0, 0) == 0);
  // y^2 + y = x^3 has 8 affine points over F4
  int count = 0;
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y) count += h.eval(static_cast<Elem>(x), static_cast<Elem>(y)) == 0;
  CHECK(count == 8);
}

TEST_CASE("ring arithmetic reduces modulo the curve") {
  const CurvePreset h = CurvePreset::hermitian(2);
  // y^2 = y + x^3 in characteristic 2
  const BivariateElement y2 = h.mul(h.y_power(1), h.y_power(1));
  const BivariateElement rhs = h.add(h.y_power(1), h.x_power(3));
  CHECK(h.add(y2, rhs).is_zero());
}
