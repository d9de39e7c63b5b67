#include "agcb/floorbounds.hpp"

#include <algorithm>
#include <array>
#include <vector>

#include "class_grid.hpp"

namespace agcb {

using detail::ClassGrid;

namespace {

const TwoPointDivisor kP{1, 0};
const TwoPointDivisor kQ{0, 1};

void require_supported(const DimensionTable& t, const TwoPointDivisor& C) {
  if (t.l(-C) != 0) throw UnsupportedClass("class " + C.to_string() + " has L(-C) != 0");
}

// Band outside which every objective is constant, widened by 2g + e + 2 on
// both sides so that complements K + C - W of band classes stay inside.
ClassGrid mixed_grid(const DimensionTable& t, const TwoPointDivisor& C) {
  const int g = t.genus();
  const int pad = 2 * g + t.torsion_order() + 2;
  return ClassGrid(t.torsion_order(), std::min(0, C.degree()) - pad, std::max(2 * g - 2, 2 * g - 2 + C.degree()) + pad);
}

// Candidate ordering shared by the floor searches: larger value, then smaller
// avoid set ({P} before {Q}), then smaller deg Z, then smaller Z.a.
struct Rank {
  int value;
  PointSet avoid;
  TwoPointDivisor Z;

  bool better_than(const Rank& o) const {
    if (value != o.value) return value > o.value;
    if (avoid.size() != o.avoid.size()) return avoid.size() < o.avoid.size();
    if (avoid.p != o.avoid.p) return avoid.p;
    if (Z.degree() != o.Z.degree()) return Z.degree() < o.Z.degree();
    return Z.a < o.Z.a;
  }
};

// The nonempty supports, smallest first.
const std::array<PointSet, 3> kSupports = {PointSet{true, false}, PointSet{false, true}, PointSet{true, true}};

TwoPointDivisor support_unit(PointSet s) { return {s.p ? 1 : 0, s.q ? 1 : 0}; }

// Best of g over the cone X - iP - jQ (i, j >= 0, restricted to s); ties
// prefer the smaller offset.
struct ConeBest {
  int value = 0;
  TwoPointDivisor offset;
};

// Points where condition 2 of the delta gain is checked, for supp Z = s and
// supp(A - A') = T. In general that is all of s; for a pure P-shift
// A' = A - kP only P is needed (the published gain for G = 27P+2Q, with
// A' = 11P, relies on this).
PointSet cond2_points(PointSet s, PointSet T) { return T == PointSet::of(Point::P) ? T : s; }

struct MixedSearch {
  const DimensionTable& t;
  TwoPointDivisor C;
  bool with_delta;
  ClassGrid grid;
  std::vector<int> f;

  MixedSearch(const DimensionTable& table, const TwoPointDivisor& c, bool delta)
      : t(table), C(c), with_delta(delta), grid(mixed_grid(table, c)) {
    f.resize(grid.size());
    for (int i = 0; i < grid.size(); ++i) {
      const TwoPointDivisor X = grid.rep(i);
      f[i] = t.l(X) - t.l(X - C);
    }
  }

  // delta for supp Z = s: some A' = A - lambda with supp lambda = T within s
  // meets condition 1 at a point of s, and L(A - C) != L(A - C - pt) for the
  // points of cond2_points(s, T). ok[i] says class i qualifies; off[i] is the
  // offset lambda of the chosen A'.
  struct DeltaData {
    std::vector<char> ok;
    std::vector<TwoPointDivisor> off;
  };

  DeltaData delta_data(PointSet s) const {
    const int n = grid.size();
    std::vector<char> cond1(n, 0);
    for (int i = 0; i < n; ++i) {
      const TwoPointDivisor X = grid.rep(i);
      for (Point pt : {Point::P, Point::Q})
        if (s.contains(pt) && t.gamma(X - C, pt) && !t.gamma(X, pt)) cond1[i] = 1;
    }
    DeltaData d;
    d.ok.assign(n, 0);
    d.off.assign(n, {});
    // Candidate sets T in order of preference; the cone reach for T is a
    // sweep in increasing degree.
    for (PointSet T : {PointSet::none(), PointSet::of(Point::P), PointSet::of(Point::Q), PointSet::both()}) {
      if (!T.subset_of(s)) continue;
      std::vector<char> reach(n, 0);
      std::vector<TwoPointDivisor> off(n);
      for (int i = 0; i < n; ++i) {
        if (cond1[i]) {
          reach[i] = 1;
          continue;
        }
        for (Point pt : {Point::P, Point::Q}) {
          if (!T.contains(pt)) continue;
          const int j = grid.minus(i, pt);
          if (j < 0 || !reach[j]) continue;
          const TwoPointDivisor cand = off[j] + TwoPointDivisor::unit(pt);
          if (!reach[i] || cand.degree() < off[i].degree() ||
              (cand.degree() == off[i].degree() && cand.a < off[i].a)) {
            reach[i] = 1;
            off[i] = cand;
          }
        }
      }
      for (int i = 0; i < n; ++i) {
        if (d.ok[i] || !reach[i]) continue;
        const TwoPointDivisor X = grid.rep(i);
        bool c2 = true;
        const PointSet need = cond2_points(s, PointSet::support(off[i]));
        for (Point pt : {Point::P, Point::Q})
          if (need.contains(pt) && !t.gamma(X - C, pt)) c2 = false;
        if (c2) {
          d.ok[i] = 1;
          d.off[i] = off[i];
        }
      }
    }
    return d;
  }

  BoundReport run(const std::string& name, PointSet allowed) const {
    const TwoPointDivisor G = t.canonical() + C;
    Rank best{C.degree(), PointSet::none(), {}};
    Decomposition best_w{G, {0, 0}, {0, 0}, std::nullopt, std::nullopt};

    for (PointSet s : kSupports) {
      if (!s.subset_of(allowed)) continue;
      DeltaData dd;
      if (with_delta) dd = delta_data(s);
      auto delta = [&](int i) { return with_delta && dd.ok[i] ? 1 : 0; };

      std::vector<ConeBest> H(grid.size());
      for (int i = 0; i < grid.size(); ++i) {
        ConeBest h{f[i] + delta(i), {}};
        for (Point pt : {Point::P, Point::Q}) {
          if (!s.contains(pt)) continue;
          const int j = grid.minus(i, pt);
          if (j < 0) continue;
          const ConeBest& c = H[j];
          const TwoPointDivisor off = c.offset + TwoPointDivisor::unit(pt);
          if (c.value > h.value ||
              (c.value == h.value && (off.degree() < h.offset.degree() ||
                                      (off.degree() == h.offset.degree() && off.a < h.offset.a))))
            h = {c.value, off};
        }
        H[i] = h;
      }

      const TwoPointDivisor unit = support_unit(s);
      for (int w = 0; w < grid.size(); ++w) {
        if (grid.degree(w) - unit.degree() < grid.lo) continue;
        const int below = grid.index_of(grid.rep(w) - unit);
        const TwoPointDivisor W = grid.rep(w);
        const TwoPointDivisor A = G - W;
        if (!grid.contains(A)) continue;
        const int ia = grid.index_of(A);
        const int value = C.degree() - f[w] + delta(ia) + H[below].value;
        const TwoPointDivisor Z = H[below].offset + unit;
        const Rank r{value, s, Z};
        if (!r.better_than(best)) continue;
        best = r;
        const TwoPointDivisor B = W - Z;
        Decomposition dec{A, B, Z, std::nullopt, std::nullopt};
        if (delta(ia)) dec.A_prime = A - dd.off[ia];
        const int ib = grid.index_of(B);
        if (delta(ib)) dec.B_prime = B - dd.off[ib];
        best_w = dec;
      }
    }
    BoundReport rep;
    rep.name = name;
    rep.value = best.value;
    rep.witness = best_w;
    rep.avoid_set = best.avoid;
    return rep;
  }
};

}  // namespace

int goppa_bound(const TwoPointDivisor& C) { return C.degree(); }

int base_point_bound(const DimensionTable& t, const TwoPointDivisor& C) {
  require_supported(t, C);
  const int lc = t.l(C);
  if (lc >= 1 && (t.l(C - kP) == lc || t.l(C - kQ) == lc)) return C.degree() + 1;
  return C.degree();
}

BoundReport abz_bound(const DimensionTable& t, const TwoPointDivisor& C, PointSet allowed) {
  return MixedSearch(t, C, false).run("d_ABZ", allowed);
}

BoundReport lm_bound(const DimensionTable& t, const TwoPointDivisor& C) {
  const TwoPointDivisor G = t.canonical() + C;
  const ClassGrid grid = mixed_grid(t, C);
  const int cap = grid.hi - grid.lo;
  Rank best{C.degree(), PointSet::none(), {}};
  Decomposition best_w{G, {0, 0}, {0, 0}, std::nullopt, std::nullopt};

  // Both conditions L(W) = L(W - Z) and L(X + Z) = L(X), X = K + C - W, are
  // down-closed in Z, so the feasible Z form a staircase.
  for (int w = 0; w < grid.size(); ++w) {
    const TwoPointDivisor W = grid.rep(w);
    const TwoPointDivisor X = G - W;
    const int lw = t.l(W), lx = t.l(X);
    auto feasible = [&](const TwoPointDivisor& Z) { return t.l(W - Z) == lw && t.l(X + Z) == lx; };
    for (int i = 0; i <= cap; ++i) {
      if (!feasible({i, 0})) break;
      for (int j = 0; j <= cap; ++j) {
        const TwoPointDivisor Z{i, j};
        if (j > 0 && !feasible(Z)) break;
        const Rank r{C.degree() + Z.degree(), PointSet::support(Z), Z};
        if (r.better_than(best)) {
          best = r;
          best_w = {X, W - Z, Z, std::nullopt, std::nullopt};
        }
      }
    }
  }
  BoundReport rep;
  rep.name = "d_LM";
  rep.value = best.value;
  rep.witness = best_w;
  rep.avoid_set = best.avoid;
  return rep;
}

BoundReport gst_bound(const DimensionTable& t, const TwoPointDivisor& C) {
  const TwoPointDivisor G = t.canonical() + C;
  const int g = t.genus(), e = t.torsion_order();
  Rank best{C.degree(), PointSet::none(), {}};
  Decomposition best_w{G, {0, 0}, {0, 0}, std::nullopt, std::nullopt};

  // Divisors of degree >= 2g are their own floor.
  for (int d = 0; d <= 2 * g - 1; ++d)
    for (int r = 0; r < e; ++r) {
      const TwoPointDivisor B{d - r, r};
      if (t.l(B) == 0) continue;
      const int top = t.l(B - C);
      for (PointSet s : kSupports) {
        const TwoPointDivisor low = t.floor_within(B, s);
        if (low == B) continue;
        const TwoPointDivisor Z = B - low;
        const Rank cand{C.degree() + top - t.l(low - C), PointSet::support(Z), Z};
        if (cand.better_than(best)) {
          best = cand;
          best_w = {G - B, low, Z, std::nullopt, std::nullopt};
        }
      }
    }
  BoundReport rep;
  rep.name = "d_GST";
  rep.value = best.value;
  rep.witness = best_w;
  rep.avoid_set = best.avoid;
  return rep;
}

namespace {

// Best decomposition satisfying the d_GST2 hypotheses: Abar + B ~ G with
// Y = Abar - B effective, supp Z = supp Y, Z + P <= Y for some P in supp Z,
// L(Abar) = L(Abar - Z) and L(B) = L(B + Z + Q) for Q in supp Z.
// Value deg C + deg Z + 1. The support conditions only see the
// representative, and G may be replaced by any G + k e (P - Q) (equivalent
// codes for D away from P and Q), so Y runs over every effective
// representative of the class G - 2B.
std::optional<std::pair<Rank, Decomposition>> gst2_corollary(const DimensionTable& t, const TwoPointDivisor& C) {
  const TwoPointDivisor G = t.canonical() + C;
  const int g = t.genus(), e = t.torsion_order();
  // deg B <= 2g - 3 because B + P <= Abar - Z with deg(Abar - Z) <= 2g - 2;
  // the lower end is generous (see the decisions notes).
  const int deg_hi = 2 * g - 3;
  const int deg_lo = G.degree() - 4 * g - 2 * e;

  std::optional<std::pair<Rank, Decomposition>> best;
  for (int dB = deg_lo; dB <= deg_hi; ++dB) {
    const int dY = G.degree() - 2 * dB;
    if (dY <= 0) continue;
    for (int r = 0; r < e; ++r) {
      const TwoPointDivisor B{dB - r, r};
      const int lb = t.l(B);
      for (int y2 = detail::mod(G.b - 2 * r, e); y2 <= dY; y2 += e) {
        const TwoPointDivisor Y{dY - y2, y2};
        const TwoPointDivisor Abar = B + Y;
        const PointSet s = PointSet::support(Y);
        const int la = t.l(Abar);
        auto feasible = [&](const TwoPointDivisor& Z) {
          if (t.l(Abar - Z) != la) return false;
          for (Point pt : {Point::P, Point::Q})
            if (s.contains(pt) && t.l(B + Z + TwoPointDivisor::unit(pt)) != lb) return false;
          return true;
        };
        const int i0 = s.p ? 1 : 0, j0 = s.q ? 1 : 0;
        for (int i = i0; i <= Y.a; ++i) {
          if (!feasible({i, j0})) break;
          for (int j = j0; j <= Y.b; ++j) {
            const TwoPointDivisor Z{i, j};
            if (j > j0 && !feasible(Z)) break;
            // Z + P <= Y for some P in supp Z.
            std::optional<Point> slack;
            if (s.p && Z.a + 1 <= Y.a) slack = Point::P;
            else if (s.q && Z.b + 1 <= Y.b) slack = Point::Q;
            if (!slack) continue;
            const Rank rank{C.degree() + Z.degree() + 1, s, Z};
            if (!best || rank.better_than(best->first)) {
              Decomposition dec{Abar - Z, B, Z, B + TwoPointDivisor::unit(*slack), std::nullopt};
              best = {{rank, dec}};
            }
          }
        }
      }
    }
  }
  return best;
}

}  // namespace

BoundReport abz_plus_bound(const DimensionTable& t, const TwoPointDivisor& C, AbzPlusMode mode) {
  if (mode == AbzPlusMode::full) return MixedSearch(t, C, true).run("d_ABZ+", PointSet::both());

  BoundReport rep = lm_bound(t, C);
  rep.name = "d_GST2";
  if (auto cor = gst2_corollary(t, C)) {
    const Rank lm_rank{rep.value, rep.avoid_set, rep.witness->Z};
    if (cor->first.better_than(lm_rank)) {
      rep.value = cor->first.value;
      rep.avoid_set = cor->first.avoid;
      rep.witness = cor->second;
    }
  }
  return rep;
}

int abz_objective(const DimensionTable& t, const TwoPointDivisor& C, const TwoPointDivisor& A,
                  const TwoPointDivisor& B) {
  return t.l(A) - t.l(A - C) + t.l(B) - t.l(B - C);
}

int abz_objective_eq2(const DimensionTable& t, const TwoPointDivisor& C, const TwoPointDivisor& B,
                      const TwoPointDivisor& Z) {
  return C.degree() + t.l(B + Z - C) - t.l(B + Z) + t.l(B) - t.l(B - C);
}

int abz_objective_eq3(const DimensionTable& t, const TwoPointDivisor& C, const TwoPointDivisor& A,
                      const TwoPointDivisor& B, const TwoPointDivisor& Z) {
  return C.degree() + Z.degree() + t.l(A) - t.l(A + Z) + t.l(B) - t.l(B + Z);
}

std::optional<int> lm_value(const DimensionTable& t, const TwoPointDivisor& C, const TwoPointDivisor& A,
                            const TwoPointDivisor& B, const TwoPointDivisor& Z) {
  if (!Z.is_effective() || A + B + Z != t.canonical() + C) return std::nullopt;
  if (t.l(A + Z) != t.l(A) || t.l(B + Z) != t.l(B)) return std::nullopt;
  return C.degree() + Z.degree();
}

std::optional<int> gst_corollary_value(const DimensionTable& t, const TwoPointDivisor& G,
                                       const TwoPointDivisor& Abar, const TwoPointDivisor& B,
                                       const TwoPointDivisor& Z, const TwoPointDivisor& Cprime) {
  if (!Z.is_effective() || Abar + B != G) return std::nullopt;
  if (t.l(Abar) != t.l(Abar - Z) || t.l(B) != t.l(B + Z) || t.l(Cprime) != t.l(B)) return std::nullopt;
  const TwoPointDivisor K = t.canonical();
  auto i = [&](const TwoPointDivisor& X) { return t.l(K - X); };
  return G.degree() - K.degree() + Z.degree() + i(Abar) - i(G - Cprime);
}

bool abz_plus_delta(const DimensionTable& t, const TwoPointDivisor& C, const TwoPointDivisor& A,
                    const TwoPointDivisor& A_prime, const TwoPointDivisor& Z) {
  const PointSet s = PointSet::support(Z);
  if (s.empty()) return false;
  const TwoPointDivisor diff = A - A_prime;
  if (!diff.is_effective() || !PointSet::support(diff).subset_of(s)) return false;
  const PointSet need = cond2_points(s, PointSet::support(diff));
  bool c1 = false;
  for (Point pt : {Point::P, Point::Q}) {
    if (need.contains(pt) && !t.gamma(A - C, pt)) return false;
    if (s.contains(pt) && t.gamma(A_prime - C, pt) && !t.gamma(A_prime, pt)) c1 = true;
  }
  return c1;
}

int evaluate_witness(const DimensionTable& t, const TwoPointDivisor& C, const Decomposition& w) {
  int v = abz_objective(t, C, w.A, w.B);
  if (w.A_prime && abz_plus_delta(t, C, w.A, *w.A_prime, w.Z)) ++v;
  if (w.B_prime && abz_plus_delta(t, C, w.B, *w.B_prime, w.Z)) ++v;
  return v;
}

}  // namespace agcb
