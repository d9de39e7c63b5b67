#include "agcb/tables.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

namespace agcb {

namespace {

constexpr int kFormatVersion = 1;

int floor_div(int a, int b) {
  // b > 0
  return a >= 0 ? a / b : -((-a + b - 1) / b);
}

std::uint64_t fnv1a(std::uint64_t h, std::int64_t v) {
  for (int i = 0; i < 8; ++i) {
    h ^= static_cast<std::uint64_t>(v >> (8 * i)) & 0xffu;
    h *= 1099511628211ull;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

}  // namespace

TableWindow TableWindow::for_bounds(int genus, int torsion) {
  const int lo = -(2 * genus + torsion);
  const int hi = (2 * genus - 1) + 2 * genus + torsion;
  return {lo, hi, lo, hi};
}

DimensionTable::DimensionTable(const FunctionFieldKernel& kernel, TableWindow window)
    : curve_id_(kernel.curve().id()), genus_(kernel.genus()), torsion_(kernel.torsion_order()), window_(window) {
  if (window.a_lo > window.a_hi || window.b_lo > window.b_hi) throw std::invalid_argument("empty table window");
  const int kw = kernel.window();
  if (std::max({-window.a_lo, window.a_hi, -window.b_lo, window.b_hi}) > kw)
    throw KernelRangeError("table window exceeds kernel window " + std::to_string(kw));

  values_.assign(static_cast<size_t>(window.width()) * window.height(), 0);
  // Sweep in increasing b then a; each value is checked against its P and Q
  // predecessors as it is filled in.
  for (int b = window.b_lo; b <= window.b_hi; ++b)
    for (int a = window.a_lo; a <= window.a_hi; ++a) {
      const int v = kernel.riemann_roch_dim(a, b);
      values_[(b - window.b_lo) * window.width() + (a - window.a_lo)] = static_cast<std::int16_t>(v);
      if (a > window.a_lo) {
        const int d = v - stored(a - 1, b);
        if (d < 0 || d > 1) throw std::logic_error("dimension jump along P at " + TwoPointDivisor{a, b}.to_string());
      }
      if (b > window.b_lo) {
        const int d = v - stored(a, b - 1);
        if (d < 0 || d > 1) throw std::logic_error("dimension jump along Q at " + TwoPointDivisor{a, b}.to_string());
      }
    }
  if (genus_ > 0 && kernel.riemann_roch_dim(2 * genus_ - 2, 0) != genus_)
    throw std::logic_error(curve_id_ + ": (2g-2)P is not canonical");
  checksum_ = compute_checksum();
}

bool DimensionTable::resolvable(const TwoPointDivisor& A) const {
  if (window_.contains(A.a, A.b)) return true;
  const int d = A.degree();
  if (d < 0 || d > 2 * genus_ - 2) return true;
  const int b = ((A.b % torsion_) + torsion_) % torsion_;
  return window_.contains(d - b, b);
}

int DimensionTable::l(const TwoPointDivisor& A) const {
  if (window_.contains(A.a, A.b)) return stored(A.a, A.b);
  const int d = A.degree();
  if (d < 0) return 0;
  if (d > 2 * genus_ - 2) return d + 1 - genus_;
  // Torsion shift: (a, b) ~ (a + ek, b - ek).
  const int k = floor_div(A.b, torsion_);
  const int a = A.a + torsion_ * k;
  const int b = A.b - torsion_ * k;
  if (!window_.contains(a, b)) throw TableRangeError("divisor " + A.to_string() + " not resolvable by table");
  return stored(a, b);
}

TwoPointDivisor DimensionTable::floor_within(const TwoPointDivisor& A, PointSet allowed) const {
  const int dim = l(A);
  if (dim == 0) throw std::domain_error("floor undefined for " + A.to_string() + ": l = 0");
  TwoPointDivisor cur = A;
  for (bool changed = true; changed;) {
    changed = false;
    if (allowed.p)
      while (l(cur - TwoPointDivisor{1, 0}) == dim) {
        cur.a -= 1;
        changed = true;
      }
    if (allowed.q)
      while (l(cur - TwoPointDivisor{0, 1}) == dim) {
        cur.b -= 1;
        changed = true;
      }
  }
  return cur;
}

TwoPointDivisor DimensionTable::floor(const TwoPointDivisor& A) const { return floor_within(A, PointSet::both()); }

int DimensionTable::ceiling_extent(const TwoPointDivisor& A, Point pt) const {
  const int dim = l(A);
  const TwoPointDivisor step = TwoPointDivisor::unit(pt);
  int k = 0;
  TwoPointDivisor cur = A + step;
  // Terminates: once deg > 2g - 2 every step adds one.
  while (l(cur) == dim) {
    ++k;
    cur = cur + step;
  }
  return k;
}

std::uint64_t DimensionTable::compute_checksum() const {
  std::uint64_t h = 1469598103934665603ull;
  for (char c : curve_id_) h = fnv1a(h, c);
  for (int v : {kFormatVersion, genus_, torsion_, window_.a_lo, window_.a_hi, window_.b_lo, window_.b_hi})
    h = fnv1a(h, v);
  for (auto v : values_) h = fnv1a(h, v);
  return h;
}

nlohmann::json DimensionTable::to_json() const {
  nlohmann::json j;
  j["format_version"] = kFormatVersion;
  j["curve"] = curve_id_;
  j["genus"] = genus_;
  j["torsion"] = torsion_;
  j["window"] = {window_.a_lo, window_.a_hi, window_.b_lo, window_.b_hi};
  j["values"] = values_;
  j["checksum"] = hex64(checksum_);
  return j;
}

DimensionTable DimensionTable::from_json(const nlohmann::json& j) {
  DimensionTable t;
  try {
    if (j.at("format_version").get<int>() != kFormatVersion) throw CacheError("unsupported cache format version");
    t.curve_id_ = j.at("curve").get<std::string>();
    t.genus_ = j.at("genus").get<int>();
    t.torsion_ = j.at("torsion").get<int>();
    const auto w = j.at("window").get<std::vector<int>>();
    if (w.size() != 4) throw CacheError("malformed cache window");
    t.window_ = {w[0], w[1], w[2], w[3]};
    t.values_ = j.at("values").get<std::vector<std::int16_t>>();
  } catch (const nlohmann::json::exception& e) {
    throw CacheError(std::string("malformed cache: ") + e.what());
  }
  if (t.window_.a_lo > t.window_.a_hi || t.window_.b_lo > t.window_.b_hi ||
      t.values_.size() != static_cast<size_t>(t.window_.width()) * t.window_.height())
    throw CacheError("cache payload does not match its window");
  t.checksum_ = t.compute_checksum();
  if (hex64(t.checksum_) != j.value("checksum", std::string())) throw CacheError("cache checksum mismatch");
  return t;
}

void DimensionTable::save(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << to_json().dump() << '\n';
}

DimensionTable DimensionTable::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CacheError("cannot read " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw CacheError(std::string("unparseable cache: ") + e.what());
  }
  return from_json(j);
}

void DimensionTable::write_csv(std::ostream& out) const {
  out << "a,b,l\n";
  for (int b = window_.b_lo; b <= window_.b_hi; ++b)
    for (int a = window_.a_lo; a <= window_.a_hi; ++a) out << a << ',' << b << ',' << stored(a, b) << '\n';
}

DimensionTable build_dimension_table(const FunctionFieldKernel& kernel, TableWindow window) {
  return DimensionTable(kernel, window);
}

DimensionTable build_dimension_table(const FunctionFieldKernel& kernel) {
  return DimensionTable(kernel, TableWindow::for_bounds(kernel.genus(), kernel.torsion_order()));
}

int hermitian_closed_form_dim(int q, int a, int b) {
  int count = 0;
  for (int i = 0; i <= q; ++i) {
    // iq + j(q+1) <= a  and  i + j(q+1) >= -b
    const int jmax = floor_div(a - i * q, q + 1);
    const int jmin = -floor_div(b + i, q + 1);  // ceil((-b - i) / (q+1))
    if (jmax >= jmin) count += jmax - jmin + 1;
  }
  return count;
}

}  // namespace agcb
