#include <doctest.h>

#include <random>

#include "agcb/floorbounds.hpp"
#include "agcb/reproduce.hpp"
#include "agcb/selftest.hpp"
#include "fixtures.hpp"

using namespace agcb;

namespace {

const PointSet SPQ = PointSet::both();

// Every nondegenerate class of the Table 6 enumeration.
std::vector<TwoPointDivisor> classes() {
  std::vector<TwoPointDivisor> out;
  for (int d = 0; d <= 27; ++d)
    for (int r = 0; r < 13; ++r) {
      const TwoPointDivisor C{d - r, r};
      if (suzuki8_table().l(-C) == 0) out.push_back(C);
    }
  return out;
}

}  // namespace

TEST_CASE("bound chains") {
  auto& eng = suzuki8_engine();
  const auto cs = classes();
  CHECK(cs.size() == 363);
  for (const auto& C : cs) {
    auto v = [&](const char* n) { return compute_bound(eng, n, C).value; };
    INFO(C.to_string());
    const int gop = v("d_GOP"), lm = v("d_LM"), gst = v("d_GST"), abz = v("d_ABZ"), abzp = v("d_ABZ+"),
              abzq = v("d_ABZ'"), dp = v("d_DP"), dk = v("d_DK"), b = v("d_B"), gst2 = v("d_GST2");
    CHECK(gop <= lm);
    CHECK(lm <= gst);
    CHECK(gst <= abz);
    CHECK(abz <= abzp);
    CHECK(abzp <= abzq);
    CHECK(abzq <= dp);
    CHECK(dp <= dk);
    CHECK(b <= abzq);
    CHECK(lm <= gst2);
    CHECK(gst2 <= abzp);
    CHECK(v("d_FR") <= v("d_CMST"));
    CHECK(v("d_CMST") <= b);
  }
}

TEST_CASE("sequence, semigroup and greedy aggregations agree") {
  auto& eng = suzuki8_engine();
  for (Estimator est : {Estimator::single_coset, Estimator::line, Estimator::bent_line, Estimator::origin_line})
    for (const auto& C : classes()) {
      INFO(C.to_string() << " estimator " << static_cast<int>(est));
      const int seq = eng.aggregate_sequence(C, SPQ, SPQ, est).value;
      CHECK(eng.aggregate_semigroup(C, SPQ, SPQ, est).value == seq);
      CHECK(eng.aggregate_sequence_greedy(C, SPQ, SPQ, est).value == seq);
    }
}

TEST_CASE("Z = 0 bent lines are lines") {
  // the bent-line family contains every straight line
  auto& eng = suzuki8_engine();
  for (const auto& C : classes())
    for (Point pt : {Point::P, Point::Q})
      CHECK(eng.edge_label(Estimator::bent_line, C, PointSet::of(pt), pt) >=
            eng.edge_label(Estimator::line, C, PointSet::of(pt), pt));
  for (const auto& C : classes()) {
    const auto s = eng.suite(C);
    CHECK(s.at("d_B").value <= s.at("d_ABZ'").value);
  }
}

TEST_CASE("base points decide the best S for effective C") {
  const auto& t = suzuki8_table();
  auto& eng = suzuki8_engine();
  for (int a = 0; a <= 20; ++a)
    for (int b = 0; b <= 8; ++b) {
      const TwoPointDivisor C{a, b};
      if (C.is_zero()) continue;
      PointSet base;
      base.p = t.l(C) == t.l(C - TwoPointDivisor{1, 0});
      base.q = t.l(C) == t.l(C - TwoPointDivisor{0, 1});
      INFO(C.to_string());
      CHECK(eng.vertex_label(C, base, SPQ) == eng.vertex_label(C, SPQ, SPQ));
    }
}

TEST_CASE("explicit paths never beat the grid optimum") {
  const auto& t = suzuki8_table();
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const TwoPointDivisor C{static_cast<int>(rng() % 28) - 6, static_cast<int>(rng() % 13)};
    if (t.l(-C) != 0) continue;
    const int lo = std::min(0, C.degree()) - 1;
    GridPath p;
    p.start = {lo - static_cast<int>(rng() % 5), static_cast<int>(rng() % 9) - 4};
    p.start.a = lo - p.start.b;
    const int hi = std::max(26, 26 + C.degree()) + 1;
    while (p.at(static_cast<int>(p.steps.size())).degree() < hi) p.steps.push_back(rng() % 2 ? Point::P : Point::Q);
    CHECK(mts_evaluate(t, C, SPQ, SPQ, p).value <= gamma_grid(t, C, SPQ, SPQ, GridFamily::free));
    CHECK(duality_check(t, C, GridPath{{p.start.a - 1, p.start.b}, [&] {
                                         auto s = p.steps;
                                         s.insert(s.begin(), Point::P);
                                         s.push_back(Point::Q);
                                         return s;
                                       }()}));
  }
}

TEST_CASE("selftest suites pass") {
  for (const char* id : {"suzuki8", "hermitian2", "hermitian3"}) {
    const FunctionFieldKernel k(CurvePreset::from_id(id));
    for (const auto& s : run_selftest(k)) {
      INFO(id << " " << s.name << ": " << s.detail);
      CHECK(s.pass);
    }
  }
}
