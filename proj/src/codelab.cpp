#include "agcb/codelab.hpp"

#include <algorithm>
#include <ostream>

#include "agcb/floorbounds.hpp"
#include "agcb/orderbounds.hpp"
#include "agcb/tables.hpp"

namespace agcb {

namespace {

// 0 first, then nonzero elements by discrete log.
int log_key(const SmallField& F, Elem a) { return a == 0 ? 0 : F.log(a) + 1; }

bool contains_origin(const std::vector<AffinePoint>& D) {
  return std::find(D.begin(), D.end(), AffinePoint{0, 0}) != D.end();
}

long long power_capped(long long base, int exp, long long cap) {
  long long r = 1;
  for (int i = 0; i < exp; ++i) {
    r *= base;
    if (r > cap) return cap + 1;
  }
  return r;
}

// Calls visit(c) once for every codeword up to scalars (first nonzero
// coefficient equal to 1).
template <class Visit>
void for_each_projective_codeword(const SmallField& F, const Matrix& gen, Visit visit) {
  const int k = static_cast<int>(gen.size());
  if (k == 0) return;
  const int n = static_cast<int>(gen[0].size());
  const int q = F.order();
  for (int lead = 0; lead < k; ++lead) {
    std::vector<Elem> c = gen[lead];
    std::vector<int> digit(k, 0);
    visit(c);
    while (true) {
      int j = k - 1;
      // Increment the mixed-radix counter over positions lead+1..k-1.
      while (j > lead && digit[j] == q - 1) {
        const Elem delta = F.sub(0, static_cast<Elem>(q - 1));
        for (int i = 0; i < n; ++i) c[i] = F.add(c[i], F.mul(delta, gen[j][i]));
        digit[j] = 0;
        --j;
      }
      if (j == lead) break;
      const Elem delta = F.sub(static_cast<Elem>(digit[j] + 1), static_cast<Elem>(digit[j]));
      for (int i = 0; i < n; ++i) c[i] = F.add(c[i], F.mul(delta, gen[j][i]));
      ++digit[j];
      visit(c);
    }
  }
}

int weight(const std::vector<Elem>& c) {
  return static_cast<int>(std::count_if(c.begin(), c.end(), [](Elem x) { return x != 0; }));
}

// Smallest number of linearly dependent columns of H (r x n).
class DependentColumnSearch {
 public:
  DependentColumnSearch(const SmallField& F, const Matrix& H, long long node_budget)
      : F_(F), r_(static_cast<int>(H.size())), n_(H.empty() ? 0 : static_cast<int>(H[0].size())), budget_(node_budget) {
    // Residual column j lives at [j * r, (j + 1) * r) of a per-depth buffer.
    levels_.assign(r_ + 2, std::vector<Elem>(static_cast<size_t>(n_) * r_));
    for (int i = 0; i < r_; ++i)
      for (int j = 0; j < n_; ++j) levels_[0][j * r_ + i] = H[i][j];
  }

  int run() {
    // Any r + 1 columns are dependent; a zero column is a circuit of size 1.
    for (int w = 1; w <= r_; ++w) {
      target_ = w;
      if (dfs(0, 0)) return w;
    }
    return r_ + 1;
  }

 private:
  // levels_[size] holds every column j >= from reduced against the `size`
  // chosen columns (all with index < from). Looks for a circuit of size target_.
  bool dfs(int from, int size) {
    if (++nodes_ > budget_) throw BudgetExceeded("column search exceeded " + std::to_string(budget_) + " nodes");
    const std::vector<Elem>& res = levels_[size];
    if (size == target_ - 1) {
      for (int j = from; j < n_; ++j)
        if (is_zero(&res[j * r_])) return true;
      return false;
    }
    std::vector<Elem>& next = levels_[size + 1];
    for (int c = from; c < n_; ++c) {
      const Elem* v = &res[c * r_];
      int p = 0;
      while (p < r_ && v[p] == 0) ++p;
      if (p == r_) continue;  // dependent already: found at a smaller size
      const Elem inv = F_.inv(v[p]);
      for (int j = c + 1; j < n_; ++j) {
        const Elem* src = &res[j * r_];
        Elem* dst = &next[j * r_];
        const Elem f = F_.mul(src[p], inv);
        for (int i = 0; i < r_; ++i) dst[i] = f == 0 ? src[i] : F_.sub(src[i], F_.mul(f, v[i]));
      }
      if (dfs(c + 1, size + 1)) return true;
    }
    return false;
  }

  bool is_zero(const Elem* v) const {
    return std::all_of(v, v + r_, [](Elem x) { return x == 0; });
  }

  const SmallField& F_;
  int r_, n_;
  long long budget_;
  long long nodes_ = 0;
  int target_ = 0;
  std::vector<std::vector<Elem>> levels_;
};

}  // namespace

RationalPointList rational_points(const CurvePreset& curve) {
  const SmallField& F = curve.field();
  RationalPointList out;
  for (int x = 0; x < F.order(); ++x)
    for (int y = 0; y < F.order(); ++y)
      if (curve.eval(static_cast<Elem>(x), static_cast<Elem>(y)) == 0)
        out.affine.push_back({static_cast<Elem>(x), static_cast<Elem>(y)});
  std::sort(out.affine.begin(), out.affine.end(), [&](const AffinePoint& a, const AffinePoint& b) {
    return std::pair(log_key(F, a.x), log_key(F, a.y)) < std::pair(log_key(F, b.x), log_key(F, b.y));
  });
  return out;
}

std::vector<AffinePoint> default_evaluation_set(const RationalPointList& pts, const TwoPointDivisor& G) {
  if (G.b == 0) return pts.affine;
  return evaluation_set_avoiding_pq(pts);
}

std::vector<AffinePoint> evaluation_set_avoiding_pq(const RationalPointList& pts) {
  std::vector<AffinePoint> D;
  for (const auto& p : pts.affine)
    if (!(p == AffinePoint{0, 0})) D.push_back(p);
  return D;
}

Matrix row_echelon(const SmallField& F, Matrix m) {
  if (m.empty()) return m;
  const int cols = static_cast<int>(m[0].size());
  int row = 0;
  for (int c = 0; c < cols && row < static_cast<int>(m.size()); ++c) {
    int piv = row;
    while (piv < static_cast<int>(m.size()) && m[piv][c] == 0) ++piv;
    if (piv == static_cast<int>(m.size())) continue;
    std::swap(m[row], m[piv]);
    const Elem inv = F.inv(m[row][c]);
    for (auto& x : m[row]) x = F.mul(x, inv);
    for (int i = 0; i < static_cast<int>(m.size()); ++i) {
      if (i == row || m[i][c] == 0) continue;
      const Elem f = m[i][c];
      for (int j = 0; j < cols; ++j) m[i][j] = F.sub(m[i][j], F.mul(f, m[row][j]));
    }
    ++row;
  }
  m.resize(row);
  return m;
}

int rank(const SmallField& F, const Matrix& m) { return static_cast<int>(row_echelon(F, m).size()); }

Matrix null_space(const SmallField& F, const Matrix& m, int ncols) {
  const Matrix e = row_echelon(F, m);
  std::vector<int> pivot_of_row;
  std::vector<bool> is_pivot(ncols, false);
  for (const auto& row : e) {
    int c = 0;
    while (row[c] == 0) ++c;
    pivot_of_row.push_back(c);
    is_pivot[c] = true;
  }
  Matrix basis;
  for (int f = 0; f < ncols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Elem> v(ncols, 0);
    v[f] = 1;
    for (size_t r = 0; r < e.size(); ++r) v[pivot_of_row[r]] = F.neg(e[r][f]);
    basis.push_back(std::move(v));
  }
  return basis;
}

Matrix evaluate_space(const FunctionFieldKernel& kernel, const std::vector<AffinePoint>& D, const TwoPointDivisor& A) {
  const CurvePreset& curve = kernel.curve();
  const SmallField& F = curve.field();
  const auto basis = kernel.riemann_roch_basis(A.a, A.b);
  std::vector<Elem> unit_inv(D.size(), 1);
  if (basis.unit_power > 0)
    for (size_t i = 0; i < D.size(); ++i) {
      const Elem u = curve.eval(kernel.torsion().unit, D[i].x, D[i].y);
      if (u == 0) throw std::invalid_argument("evaluation point is a zero of the torsion unit");
      unit_inv[i] = F.pow(F.inv(u), basis.unit_power);
    }
  Matrix rows;
  for (const auto& num : basis.numerators) {
    std::vector<Elem> row(D.size());
    for (size_t i = 0; i < D.size(); ++i) row[i] = F.mul(curve.eval(num, D[i].x, D[i].y), unit_inv[i]);
    rows.push_back(std::move(row));
  }
  return rows;
}

LinearCode build_code(const FunctionFieldKernel& kernel, const std::vector<AffinePoint>& D, const TwoPointDivisor& G,
                      CodeKind kind) {
  if (G.b != 0 && contains_origin(D)) throw std::invalid_argument("D meets supp G at Q");
  const SmallField& F = kernel.curve().field();
  const int n = static_cast<int>(D.size());
  Matrix gen = row_echelon(F, evaluate_space(kernel, D, G));
  if (kind == CodeKind::Omega) gen = row_echelon(F, null_space(F, gen, n));
  LinearCode code{F, std::move(gen), n, 0, kernel.curve().id(), D, G, kind};
  code.k = static_cast<int>(code.generator.size());
  return code;
}

int exact_min_distance(const LinearCode& code, const DistanceBudget& budget) {
  if (code.k == 0) throw std::invalid_argument("minimum distance of the zero code is undefined");
  const SmallField& F = code.field;
  if (power_capped(F.order(), code.k, budget.codewords) <= budget.codewords) {
    int best = code.n;
    for_each_projective_codeword(F, code.generator, [&](const std::vector<Elem>& c) { best = std::min(best, weight(c)); });
    return best;
  }
  const Matrix H = null_space(F, code.generator, code.n);
  if (H.empty()) return 1;  // the full space
  return DependentColumnSearch(F, H, budget.nodes).run();
}

bool star_product_check(const FunctionFieldKernel& kernel, const std::vector<AffinePoint>& D,
                        const TwoPointDivisor& A, const TwoPointDivisor& B, const TwoPointDivisor& Z,
                        long long codeword_budget) {
  if (!Z.is_effective()) throw std::invalid_argument("star product check needs Z >= 0");
  if ((A.b != 0 || B.b != 0 || Z.b != 0) && contains_origin(D))
    throw std::invalid_argument("D meets the support of A, B or Z");
  const SmallField& F = kernel.curve().field();
  const TwoPointDivisor G = A + B + Z;
  const LinearCode code = build_code(kernel, D, G, CodeKind::Omega);
  const Matrix ea = evaluate_space(kernel, D, A);
  const Matrix eb = evaluate_space(kernel, D, B);
  for (const auto& fa : ea)
    for (const auto& fb : eb)
      for (const auto& c : code.generator) {
        Elem s = 0;
        for (int i = 0; i < code.n; ++i) s = F.add(s, F.mul(c[i], F.mul(fa[i], fb[i])));
        if (s != 0) return false;
      }
  if (power_capped(F.order(), code.k, codeword_budget) > codeword_budget)
    throw BudgetExceeded("codeword enumeration exceeds the budget");
  bool ok = true;
  auto star_dim = [&](const std::vector<Elem>& c, const Matrix& rows) {
    Matrix m = rows;
    for (auto& r : m)
      for (int i = 0; i < code.n; ++i) r[i] = F.mul(r[i], c[i]);
    return rank(F, m);
  };
  for_each_projective_codeword(F, code.generator, [&](const std::vector<Elem>& c) {
    if (ok && weight(c) < star_dim(c, ea) + star_dim(c, eb)) ok = false;
  });
  return ok;
}

int AuditReport::violation_count() const {
  int n = 0;
  for (const auto& r : rows) n += static_cast<int>(r.violations.size());
  return n;
}

int AuditReport::skipped_count() const {
  return static_cast<int>(std::count_if(rows.begin(), rows.end(), [](const AuditRow& r) { return !r.d_exact; }));
}

int AuditReport::d_B_mismatch_count() const {
  return static_cast<int>(
      std::count_if(rows.begin(), rows.end(), [](const AuditRow& r) { return r.d_exact && !r.d_B_exact; }));
}

void AuditReport::write_csv(std::ostream& os) const {
  os << "G,C,n,k,d_exact";
  if (!rows.empty())
    for (const auto& [name, v] : rows.front().bounds) os << ',' << name;
  os << ",safe,d_B_exact\n";
  for (const auto& r : rows) {
    os << r.G.to_string() << ',' << r.C.to_string() << ',' << r.n << ',' << r.k << ',';
    if (r.d_exact)
      os << *r.d_exact;
    else
      os << "skipped(budget)";
    for (const auto& [name, v] : r.bounds) os << ',' << v;
    if (r.d_exact)
      os << ',' << (r.violations.empty() ? "pass" : "FAIL") << ',' << (r.d_B_exact ? "yes" : "no") << '\n';
    else
      os << ",skipped,skipped\n";
  }
}

AuditReport audit_bounds(const FunctionFieldKernel& kernel, int max_degc, const DistanceBudget& budget) {
  const DimensionTable t = build_dimension_table(kernel);
  OrderBoundEngine engine(t);
  const auto D = evaluation_set_avoiding_pq(rational_points(kernel.curve()));
  const int e = t.torsion_order();
  AuditReport report{kernel.curve().id(), max_degc, {}};
  for (int d = 1; d <= max_degc; ++d)
    for (int r = 0; r < e; ++r) {
      AuditRow row;
      row.C = {d - r, r};
      row.G = t.canonical() + row.C;
      const LinearCode code = build_code(kernel, D, row.G, CodeKind::Omega);
      row.n = code.n;
      row.k = code.k;
      if (code.k == 0) continue;
      row.bounds = {{"d_GOP", goppa_bound(row.C)},
                    {"d_BPT", base_point_bound(t, row.C)},
                    {"d_LM", lm_bound(t, row.C).value},
                    {"d_GST", gst_bound(t, row.C).value},
                    {"d_ABZ", abz_bound(t, row.C).value},
                    {"d_GST2", abz_plus_bound(t, row.C, AbzPlusMode::gst2).value},
                    {"d_ABZ+", abz_plus_bound(t, row.C, AbzPlusMode::full).value}};
      for (const auto& [name, rep] : engine.suite(row.C)) row.bounds.emplace_back(name, rep.value);
      try {
        row.d_exact = exact_min_distance(code, budget);
      } catch (const BudgetExceeded&) {
      }
      if (row.d_exact) {
        for (const auto& [name, v] : row.bounds)
          if (v > *row.d_exact) row.violations.push_back(name);
        for (const auto& [name, v] : row.bounds)
          if (name == "d_B") row.d_B_exact = v == *row.d_exact;
      }
      report.rows.push_back(std::move(row));
    }
  return report;
}

}  // namespace agcb
