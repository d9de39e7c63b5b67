#include "agcb/orderbounds.hpp"

#include <algorithm>
#include <climits>
#include <stdexcept>

#include "class_grid.hpp"

namespace agcb {

using detail::ClassGrid;

GridPath GridPath::line(const TwoPointDivisor& start, Point pt, int count) {
  GridPath p{start, {}};
  return p.then(pt, count);
}

GridPath& GridPath::then(Point pt, int count) {
  steps.insert(steps.end(), count, pt);
  return *this;
}

TwoPointDivisor GridPath::at(int i) const {
  TwoPointDivisor d = start;
  for (int k = 0; k < i; ++k) d = d + TwoPointDivisor::unit(steps[k]);
  return d;
}

std::vector<TwoPointDivisor> GridPath::divisors() const {
  std::vector<TwoPointDivisor> out{start};
  for (Point pt : steps) out.push_back(out.back() + TwoPointDivisor::unit(pt));
  return out;
}

std::string GridPath::step_string() const {
  std::string s;
  for (Point pt : steps) s += point_name(pt);
  return s;
}

namespace {

// Edge weight for arriving at A via pt, anchored at the arrival divisor:
// +1 if pt in S' and A in Gamma_pt, A - C not in Gamma_pt;
// -1 if pt not in S and A not in Gamma_pt, A - C in Gamma_pt.
int edge_weight(const DimensionTable& t, const TwoPointDivisor& C, PointSet S, PointSet Sp,
                const TwoPointDivisor& A, Point pt) {
  const bool ga = t.gamma(A, pt);
  const bool gac = t.gamma(A - C, pt);
  if (ga && !gac) return Sp.contains(pt) ? 1 : 0;
  if (!ga && gac) return S.contains(pt) ? 0 : -1;
  return 0;
}

struct Band {
  ClassGrid grid;
  std::vector<int> wP, wQ;  // weight of the edge arriving at each class

  Band(const DimensionTable& t, const TwoPointDivisor& C, PointSet S, PointSet Sp)
      : grid(t.torsion_order(), std::min(0, C.degree()) - 1,
             std::max(2 * t.genus() - 2, 2 * t.genus() - 2 + C.degree()) + 1) {
    wP.resize(grid.size());
    wQ.resize(grid.size());
    for (int i = 0; i < grid.size(); ++i) {
      const TwoPointDivisor A = grid.rep(i);
      wP[i] = edge_weight(t, C, S, Sp, A, Point::P);
      wQ[i] = edge_weight(t, C, S, Sp, A, Point::Q);
    }
  }

  const std::vector<int>& w(Point pt) const { return pt == Point::P ? wP : wQ; }

  // Class of degree d on a pt-line. P-lines keep the residue, Q-lines keep
  // residue - degree.
  int on_line(Point pt, int line, int d) const {
    const int r = pt == Point::P ? line : detail::mod(line + d, grid.e);
    return grid.index(d, r);
  }
  int line_id(Point pt, int d, int r) const { return pt == Point::P ? r : detail::mod(r - d, grid.e); }

  int free_best() const {
    std::vector<int> best(grid.size(), 0);
    int overall = 0;
    for (int i = 0; i < grid.size(); ++i) {
      int b = 0;
      for (Point pt : {Point::P, Point::Q}) {
        const int j = grid.minus(i, pt);
        const int from = j >= 0 ? best[j] : 0;
        b = std::max(b, from + w(pt)[i]);
      }
      best[i] = b;
      overall = std::max(overall, b);
    }
    return overall;
  }

  // Sum of pt-edge weights arriving at degrees lo..d on the line.
  std::vector<int> prefix(Point pt, int line) const {
    std::vector<int> pre(grid.hi - grid.lo + 2, 0);  // pre[k] covers degrees < lo + k
    for (int d = grid.lo; d <= grid.hi; ++d) pre[d - grid.lo + 1] = pre[d - grid.lo] + w(pt)[on_line(pt, line, d)];
    return pre;
  }

  int line_total(Point pt, int line) const { return prefix(pt, line).back(); }

  int best_line(Point pt) const {
    int best = INT_MIN;
    for (int line = 0; line < grid.e; ++line) best = std::max(best, line_total(pt, line));
    return best;
  }

  int bent_best(Point pt) const {
    const Point o = other(pt);
    std::vector<std::vector<int>> pre(grid.e);
    for (int line = 0; line < grid.e; ++line) pre[line] = prefix(pt, line);
    const int span = grid.hi - grid.lo + 1;
    const int step_r = o == Point::Q ? 1 : 0;
    int best = INT_MIN;
    // Bend at the class (d, r); d = lo - 1 means the path enters the band on
    // the other-point run.
    for (int d = grid.lo - 1; d <= grid.hi; ++d)
      for (int r0 = 0; r0 < grid.e; ++r0) {
        const int head = pre[line_id(pt, d, r0)][d - grid.lo + 1];
        int bend = 0;
        int r = r0;
        for (int m = 0; d + m <= grid.hi; ++m) {
          const int dm = d + m;
          if (m > 0) {
            r = detail::mod(r + step_r, grid.e);
            bend += w(o)[grid.index(dm, r)];
          }
          const int tail = pre[line_id(pt, dm, r)][span] - pre[line_id(pt, dm, r)][dm - grid.lo + 1];
          best = std::max(best, head + bend + tail);
        }
      }
    return best;
  }

  int origin_line(Point pt) const {
    return line_total(pt, line_id(pt, 0, 0));
  }
};

}  // namespace

MtsOutcome mts_evaluate(const DimensionTable& t, const TwoPointDivisor& C, PointSet S, PointSet S_prime,
                        const GridPath& path) {
  MtsOutcome out;
  TwoPointDivisor A = path.start;
  for (size_t k = 0; k < path.steps.size(); ++k) {
    const Point pt = path.steps[k];
    A = A + TwoPointDivisor::unit(pt);
    const int i = static_cast<int>(k) + 1;
    const bool ga = t.gamma(A, pt);
    const bool gac = t.gamma(A - C, pt);
    if (ga && !gac) out.delta.push_back(i);
    if (!ga && gac) out.delta_prime.push_back(i);
    if (S.contains(pt)) out.in_S.push_back(i);
    if (S_prime.contains(pt)) out.in_S_prime.push_back(i);
  }
  auto count_in = [](const std::vector<int>& a, const std::vector<int>& b) {
    int c = 0;
    for (int x : a)
      if (std::binary_search(b.begin(), b.end(), x)) ++c;
    return c;
  };
  out.value = count_in(out.delta, out.in_S_prime) + count_in(out.delta_prime, out.in_S) -
              static_cast<int>(out.delta_prime.size());
  return out;
}

bool duality_check(const DimensionTable& t, const TwoPointDivisor& C, const GridPath& path) {
  const int g = t.genus();
  const TwoPointDivisor last = path.at(static_cast<int>(path.steps.size()));
  if (!(path.start.degree() < std::min(0, C.degree()) && last.degree() > std::max(2 * g - 2, 2 * g - 2 + C.degree())))
    throw std::invalid_argument("duality check needs a path spanning the band");
  const MtsOutcome m = mts_evaluate(t, C, PointSet::none(), PointSet::none(), path);
  return static_cast<int>(m.delta.size()) - static_cast<int>(m.delta_prime.size()) == C.degree();
}

int gamma_grid(const DimensionTable& t, const TwoPointDivisor& C, PointSet S, PointSet S_prime, GridFamily family,
               Point pt) {
  if (family == GridFamily::single_coset && !(S_prime == PointSet::of(pt)))
    throw std::invalid_argument("single_coset family needs S' = {pt}");
  const Band band(t, C, S, S_prime);
  switch (family) {
    case GridFamily::free:
    case GridFamily::single_coset:
      return band.free_best();
    case GridFamily::line:
      return band.best_line(pt);
    case GridFamily::bent_line:
      return band.bent_best(pt);
    case GridFamily::origin_line:
      return band.origin_line(pt);
  }
  throw std::invalid_argument("unknown grid family");
}

OrderBoundEngine::OrderBoundEngine(const DimensionTable& t, bool beelen_full_S) : t_(t), beelen_full_S_(beelen_full_S) {}

int OrderBoundEngine::top_degree(const TwoPointDivisor& C) const {
  const int g = t_.genus();
  return std::max(C.degree() + 2 * g + 2, 2 * g);
}

int OrderBoundEngine::label_uncached(Estimator est, const TwoPointDivisor& C, PointSet S, PointSet Sp,
                                     Point pt) const {
  switch (est) {
    case Estimator::free_grid:
      return gamma_grid(t_, C, S, Sp, GridFamily::free);
    case Estimator::single_coset:
      return gamma_grid(t_, C, S, PointSet::of(pt), GridFamily::single_coset, pt);
    case Estimator::line:
      return gamma_grid(t_, C, S, PointSet::of(pt), GridFamily::line, pt);
    case Estimator::bent_line:
      return gamma_grid(t_, C, S, PointSet::of(pt), GridFamily::bent_line, pt);
    case Estimator::origin_line:
      return gamma_grid(t_, C, S, PointSet::of(pt), GridFamily::origin_line, pt);
  }
  throw std::invalid_argument("unknown estimator");
}

namespace {
int bits(PointSet s) { return (s.p ? 1 : 0) | (s.q ? 2 : 0); }
}  // namespace

int OrderBoundEngine::edge_label(Estimator est, const TwoPointDivisor& C, PointSet S, Point pt) {
  if (est == Estimator::line) S = line_S(pt);
  const int e = t_.torsion_order();
  const auto key = std::make_tuple(static_cast<int>(est), C.degree(), detail::mod(C.b, e), bits(S),
                                   bits(PointSet::of(pt)), static_cast<int>(pt));
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;
  const int v = label_uncached(est, C, S, PointSet::of(pt), pt);
  cache_.emplace(key, v);
  return v;
}

int OrderBoundEngine::vertex_label(const TwoPointDivisor& C, PointSet S, PointSet Sp) {
  const int e = t_.torsion_order();
  const auto key = std::make_tuple(static_cast<int>(Estimator::free_grid), C.degree(), detail::mod(C.b, e), bits(S),
                                   bits(Sp), -1);
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;
  const int v = label_uncached(Estimator::free_grid, C, S, Sp, Point::P);
  cache_.emplace(key, v);
  return v;
}

namespace {

// Vertices C + iP + jQ of degree below the top, indexed as a class grid.
ClassGrid cone_grid(const DimensionTable& t, const TwoPointDivisor& C, int top) {
  return ClassGrid(t.torsion_order(), C.degree(), top);
}

TwoPointDivisor lambda_for(const DimensionTable& t, const TwoPointDivisor& C, const TwoPointDivisor& X) {
  // Some lambda >= 0 with C + lambda ~ X: write the class difference with a
  // Q-part in [0, e).
  const int e = t.torsion_order();
  const TwoPointDivisor diff = X - C;
  const int j = detail::mod(diff.b, e);
  return {diff.degree() - j, j};
}

}  // namespace

BoundReport OrderBoundEngine::aggregate_semigroup(const TwoPointDivisor& C, PointSet S, PointSet Sp, Estimator est) {
  if (t_.l(-C) != 0) throw UnsupportedClass("class " + C.to_string() + " has L(-C) != 0");
  const int top = top_degree(C);
  const ClassGrid grid = cone_grid(t_, C, top);
  const TwoPointDivisor C0{C.degree() - detail::mod(C.b, t_.torsion_order()), detail::mod(C.b, t_.torsion_order())};
  std::vector<int> V(grid.size());
  std::vector<int> arg(grid.size());
  for (int i = grid.size() - 1; i >= 0; --i) {
    const TwoPointDivisor X = grid.rep(i);
    if (grid.degree(i) == top) {
      V[i] = top;
      arg[i] = i;
      continue;
    }
    int label;
    if (est == Estimator::free_grid) {
      label = vertex_label(X, S, Sp);
    } else {
      label = INT_MIN;
      for (Point pt : {Point::P, Point::Q})
        if (Sp.contains(pt)) label = std::max(label, edge_label(est, X, S, pt));
    }
    V[i] = label;
    arg[i] = i;
    for (Point pt : {Point::P, Point::Q}) {
      if (!Sp.contains(pt)) continue;
      const int j = grid.plus(i, pt);
      if (V[j] < V[i]) {
        V[i] = V[j];
        arg[i] = arg[j];
      }
    }
  }
  const int start = grid.index_of(C0);
  BoundReport rep;
  rep.value = V[start];
  rep.lambda = lambda_for(t_, C0, grid.rep(arg[start]));
  rep.avoid_set = S.unite(Sp);
  return rep;
}

BoundReport OrderBoundEngine::aggregate_sequence(const TwoPointDivisor& C, PointSet S, PointSet Sp, Estimator est) {
  if (t_.l(-C) != 0) throw UnsupportedClass("class " + C.to_string() + " has L(-C) != 0");
  const int top = top_degree(C);
  const ClassGrid grid = cone_grid(t_, C, top);
  std::vector<int> d(grid.size());
  std::vector<char> choice(grid.size(), 'P');
  for (int i = grid.size() - 1; i >= 0; --i) {
    if (grid.degree(i) == top) {
      d[i] = top;
      continue;
    }
    const TwoPointDivisor X = grid.rep(i);
    int best = INT_MIN;
    for (Point pt : {Point::P, Point::Q}) {
      if (!Sp.contains(pt)) continue;
      const int v = std::min(d[grid.plus(i, pt)], edge_label(est, X, S, pt));
      if (v > best) {
        best = v;
        choice[i] = point_name(pt);
      }
    }
    d[i] = best;
  }
  BoundReport rep;
  int i = grid.index_of(C);
  rep.value = d[i];
  std::string path;
  while (grid.degree(i) < top) {
    path += choice[i];
    i = grid.plus(i, choice[i] == 'P' ? Point::P : Point::Q);
  }
  rep.path = path;
  rep.avoid_set = S.unite(Sp);
  return rep;
}

BoundReport OrderBoundEngine::aggregate_sequence_greedy(const TwoPointDivisor& C, PointSet S, PointSet Sp,
                                                        Estimator est) {
  if (t_.l(-C) != 0) throw UnsupportedClass("class " + C.to_string() + " has L(-C) != 0");
  const int top = top_degree(C);
  TwoPointDivisor X = C;
  int value = INT_MAX;
  std::string path;
  while (X.degree() < top) {
    int best = INT_MIN;
    Point pick = Point::P;
    for (Point pt : {Point::P, Point::Q}) {
      if (!Sp.contains(pt)) continue;
      const int v = est == Estimator::free_grid ? vertex_label(X, S, PointSet::of(pt)) : edge_label(est, X, S, pt);
      if (v > best) {
        best = v;
        pick = pt;
      }
    }
    value = std::min(value, best);
    path += point_name(pick);
    X = X + TwoPointDivisor::unit(pick);
  }
  BoundReport rep;
  rep.value = std::min(value, X.degree());
  rep.path = path;
  rep.avoid_set = S.unite(Sp);
  return rep;
}

BoundReport OrderBoundEngine::aggregate_constant(const TwoPointDivisor& C, PointSet S, Point pt, Estimator est) {
  if (t_.l(-C) != 0) throw UnsupportedClass("class " + C.to_string() + " has L(-C) != 0");
  const int top = top_degree(C);
  TwoPointDivisor X = C;
  int value = INT_MAX;
  while (X.degree() < top) {
    value = std::min(value, edge_label(est, X, S, pt));
    X = X + TwoPointDivisor::unit(pt);
  }
  BoundReport rep;
  rep.value = std::min(value, X.degree());
  rep.path = std::string(static_cast<size_t>(top - C.degree()), point_name(pt));
  rep.avoid_set = S.unite(PointSet::of(pt));
  return rep;
}

std::map<std::string, BoundReport> OrderBoundEngine::suite(const TwoPointDivisor& C) {
  const PointSet both = PointSet::both();
  std::map<std::string, BoundReport> out;
  auto put = [&](const std::string& name, BoundReport r) {
    r.name = name;
    r.avoid_set = both;
    out[name] = std::move(r);
  };
  put("d_FR", aggregate_constant(C, PointSet::of(Point::P), Point::P, Estimator::origin_line));
  put("d_CMST", aggregate_constant(C, PointSet::of(Point::P), Point::P, Estimator::line));
  put("d_B", aggregate_sequence(C, both, both, Estimator::line));
  put("d_ABZ'", aggregate_sequence(C, both, both, Estimator::bent_line));
  put("d_DP", aggregate_sequence(C, both, both, Estimator::single_coset));
  put("d_DK", aggregate_semigroup(C, both, both, Estimator::free_grid));
  return out;
}

}  // namespace agcb
