#include "agcb/kernel.hpp"

#include <algorithm>
#include <string>

namespace agcb {

namespace {

using Series = std::vector<Elem>;

Series series_mul(const SmallField& F, const Series& a, const Series& b, int prec) {
  Series r(prec, 0);
  for (int i = 0; i < prec && i < static_cast<int>(a.size()); ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; i + j < prec && j < static_cast<int>(b.size()); ++j) {
      if (b[j] == 0) continue;
      r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
    }
  }
  return r;
}

Series series_from_poly(const PolyX& p, int prec) {
  Series r(prec, 0);
  for (int i = 0; i < prec && i < static_cast<int>(p.size()); ++i) r[i] = p[i];
  return r;
}

// Inverse of a series with nonzero constant term.
Series series_inv(const SmallField& F, const Series& a, int prec) {
  Series r(prec, 0);
  const Elem c0inv = F.inv(a[0]);
  r[0] = c0inv;
  for (int n = 1; n < prec; ++n) {
    Elem s = 0;
    for (int i = 1; i <= n && i < static_cast<int>(a.size()); ++i) s = F.add(s, F.mul(a[i], r[n - i]));
    r[n] = F.neg(F.mul(s, c0inv));
  }
  return r;
}

int ceil_div(int a, int b) {
  // b > 0
  return a >= 0 ? (a + b - 1) / b : -((-a) / b);
}

}  // namespace

int TruncatedSeries::valuation() const {
  for (int i = 0; i < precision && i < static_cast<int>(coeffs.size()); ++i)
    if (coeffs[i] != 0) return i;
  return precision;
}

int ReducedBasis::genus(int y_degree) const {
  int g = 0;
  for (int w : weights) g += w / y_degree;
  return g;
}

TruncatedSeries expand_series_at_origin(const CurvePreset& curve, int precision) {
  if (precision < 1) throw std::invalid_argument("precision must be at least 1");
  const SmallField& F = curve.field();
  const auto& tail = curve.tail();
  const int n = curve.y_degree();
  if (curve.eval(0, 0) != 0 || curve.eval_dy(0, 0) == 0)
    throw std::invalid_argument(curve.id() + ": origin is not a smooth point with x as uniformizer");

  // c_1(t) y = -(c_0(t) + sum_{j>=2} c_j(t) y^j + y^n); iterate to the t-adic fixed point.
  const Series minus_inv_c1 = [&] {
    Series inv = series_inv(F, series_from_poly(tail[1], precision), precision);
    for (auto& c : inv) c = F.neg(c);
    return inv;
  }();
  std::vector<Series> c(n);
  for (int j = 0; j < n; ++j) c[j] = series_from_poly(tail[j], precision);

  Series y(precision, 0);
  for (int iter = 0; iter <= precision + 1; ++iter) {
    Series rhs = c[0];
    Series yj = y;  // y^1
    for (int j = 2; j <= n; ++j) {
      yj = series_mul(F, yj, y, precision);
      const Series term = (j == n) ? yj : series_mul(F, c[j], yj, precision);
      for (int i = 0; i < precision; ++i) rhs[i] = F.add(rhs[i], term[i]);
    }
    Series next = series_mul(F, minus_inv_c1, rhs, precision);
    if (next == y) break;
    y = std::move(next);
  }
  return TruncatedSeries{std::move(y), precision};
}

TruncatedSeries expand_at_origin(const CurvePreset& curve, const BivariateElement& g,
                                 const TruncatedSeries& y_series) {
  const SmallField& F = curve.field();
  const int prec = y_series.precision;
  Series acc(prec, 0);
  Series ypow(prec, 0);
  ypow[0] = 1;
  for (size_t j = 0; j < g.coeffs.size(); ++j) {
    if (j > 0) ypow = series_mul(F, ypow, y_series.coeffs, prec);
    if (g.coeffs[j].empty()) continue;
    Series term = series_mul(F, series_from_poly(g.coeffs[j], prec), ypow, prec);
    for (int i = 0; i < prec; ++i) acc[i] = F.add(acc[i], term[i]);
  }
  return TruncatedSeries{std::move(acc), prec};
}

int valuation_at_infinity(const CurvePreset& curve, const BivariateElement& g) {
  if (g.is_zero()) throw std::domain_error("valuation of zero");
  const int n = curve.y_degree();
  // Matrix of multiplication by g on the F[x]-basis 1, y, ..., y^{n-1}.
  std::vector<std::vector<PolyX>> m(n, std::vector<PolyX>(n));
  BivariateElement col = g;
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n && i < static_cast<int>(col.coeffs.size()); ++i) m[i][j] = col.coeffs[i];
    col = curve.times_y(col);
  }
  PolyX norm = poly::determinant(curve.field(), std::move(m));
  return -poly::degree(norm);
}

ReducedBasis reduced_infinity_basis(const CurvePreset& curve) {
  const int n = curve.y_degree();
  const SmallField& F = curve.field();
  ReducedBasis rb;
  for (int j = 0; j < n; ++j) {
    rb.elements.push_back(curve.y_power(j));
    rb.weights.push_back(-valuation_at_infinity(curve, rb.elements.back()));
  }
  long long cap = 0;
  for (int w : rb.weights) cap += w;

  for (long long iter = 0;; ++iter) {
    if (iter > cap) throw std::logic_error(curve.id() + ": basis reduction did not terminate");
    int hi = -1, lo = -1;
    for (int i = 0; i < n && hi < 0; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        if (rb.weights[i] >= rb.weights[j] && (rb.weights[i] - rb.weights[j]) % n == 0) {
          hi = i;
          lo = j;
          break;
        }
      }
    if (hi < 0) break;
    const int shift = (rb.weights[hi] - rb.weights[lo]) / n;
    const BivariateElement step = curve.times_x_power(rb.elements[lo], shift);
    bool reduced = false;
    for (int c = 1; c < F.order(); ++c) {
      BivariateElement cand = curve.add(rb.elements[hi], curve.scale(step, static_cast<Elem>(c)));
      if (cand.is_zero()) continue;
      const int w = -valuation_at_infinity(curve, cand);
      if (w < rb.weights[hi]) {
        rb.elements[hi] = std::move(cand);
        rb.weights[hi] = w;
        reduced = true;
        break;
      }
    }
    if (!reduced) throw std::logic_error(curve.id() + ": no reducing scalar found");
  }

  // Order by weight so b_0 = 1.
  std::vector<int> idx(n);
  for (int i = 0; i < n; ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](int a, int b) { return rb.weights[a] < rb.weights[b]; });
  ReducedBasis sorted;
  for (int i : idx) {
    sorted.elements.push_back(rb.elements[i]);
    sorted.weights.push_back(rb.weights[i]);
  }
  return sorted;
}

FunctionFieldKernel::FunctionFieldKernel(CurvePreset curve, int window) : curve_(std::move(curve)) {
  curve_.validate();
  basis_ = reduced_infinity_basis(curve_);
  genus_ = basis_.genus(curve_.y_degree());

  const int search_cap = 4 * genus_ + 4;
  extend_echelon(search_cap);
  torsion_ = class_torsion_order(search_cap);

  window_ = window > 0 ? window : 6 * genus_ + torsion_.order;
  extend_echelon(2 * window_ + torsion_.order);
}

void FunctionFieldKernel::extend_echelon(int max_pole) {
  if (max_pole <= max_pole_) return;
  // Expansions are rebuilt at the new precision; any nonzero f in L(aP)
  // vanishes at Q to order at most a, so precision max_pole + 1 suffices.
  precision_ = max_pole + 1;
  max_pole_ = max_pole;
  y_series_ = expand_series_at_origin(curve_, precision_);
  basis_series_.clear();
  for (const auto& b : basis_.elements) basis_series_.push_back(expand_at_origin(curve_, b, y_series_));
  rows_.clear();
  row_of_lead_.assign(precision_ + 1, -1);

  const SmallField& F = curve_.field();
  const int n = curve_.y_degree();
  for (int m = 0; m <= max_pole; ++m) {
    int jb = -1;
    for (int j = 0; j < n; ++j)
      if (basis_.weights[j] <= m && (m - basis_.weights[j]) % n == 0) jb = j;
    if (jb < 0) continue;  // gap
    const int i = (m - basis_.weights[jb]) / n;
    EchelonRow row;
    row.pole_order = m;
    row.function = curve_.times_x_power(basis_.elements[jb], i);
    row.series.assign(precision_, 0);
    for (int t = 0; t + i < precision_; ++t) row.series[t + i] = basis_series_[jb].coeffs[t];

    auto lead_of = [&](const std::vector<Elem>& s) {
      for (int t = 0; t < precision_; ++t)
        if (s[t] != 0) return t;
      return precision_;
    };
    int lead = lead_of(row.series);
    while (lead < precision_ && row_of_lead_[lead] >= 0) {
      const EchelonRow& piv = rows_[row_of_lead_[lead]];
      const Elem c = F.div(row.series[lead], piv.series[lead]);
      for (int t = lead; t < precision_; ++t) row.series[t] = F.sub(row.series[t], F.mul(c, piv.series[t]));
      row.function = curve_.add(row.function, curve_.scale(piv.function, F.neg(c)));
      lead = lead_of(row.series);
    }
    if (lead >= precision_) throw std::logic_error("expansion precision exhausted");
    row.lead = lead;
    row_of_lead_[lead] = static_cast<int>(rows_.size());
    rows_.push_back(std::move(row));
  }
}

TorsionUnit FunctionFieldKernel::class_torsion_order(int search_cap) const {
  if (search_cap > max_pole_) throw KernelRangeError("torsion search beyond expansion range");
  for (const auto& row : rows_) {
    if (row.pole_order > search_cap) break;
    if (row.pole_order >= 1 && row.lead == row.pole_order) return TorsionUnit{row.pole_order, row.function};
  }
  throw std::runtime_error(curve_.id() + ": torsion not found up to " + std::to_string(search_cap));
}

void FunctionFieldKernel::check_window(int a, int b) const {
  if (std::abs(a) > window_ || std::abs(b) > window_)
    throw KernelRangeError("divisor (" + std::to_string(a) + ", " + std::to_string(b) +
                           ") outside kernel window " + std::to_string(window_));
}

int FunctionFieldKernel::shift_for(int a, int b) const {
  const int e = torsion_.order;
  return std::max({0, ceil_div(b, e), ceil_div(-a, e)});
}

int FunctionFieldKernel::riemann_roch_dim(int a, int b) const {
  check_window(a, b);
  if (a + b < 0) return 0;
  const int e = torsion_.order;
  const int k = shift_for(a, b);
  const int ap = a + e * k;
  const int bp = b - e * k;
  int count = 0;
  for (const auto& row : rows_) {
    if (row.pole_order > ap) break;
    if (row.lead >= -bp) ++count;
  }
  return count;
}

FunctionFieldKernel::SpaceBasis FunctionFieldKernel::riemann_roch_basis(int a, int b) const {
  check_window(a, b);
  SpaceBasis out;
  if (a + b < 0) return out;
  const int e = torsion_.order;
  const int k = shift_for(a, b);
  const int ap = a + e * k;
  const int bp = b - e * k;
  out.unit_power = k;
  for (const auto& row : rows_) {
    if (row.pole_order > ap) break;
    if (row.lead >= -bp) out.numerators.push_back(row.function);
  }
  return out;
}

std::vector<int> FunctionFieldKernel::origin_orders(int a) const {
  if (a < 0) return {};
  if (a > max_pole_) throw KernelRangeError("origin orders beyond expansion range");
  std::vector<int> out;
  for (const auto& row : rows_) {
    if (row.pole_order > a) break;
    out.push_back(row.lead);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace agcb
