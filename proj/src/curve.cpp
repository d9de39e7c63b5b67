#include "agcb/curve.hpp"

#include <stdexcept>

namespace agcb {

void BivariateElement::normalize() {
  for (auto& c : coeffs) poly::trim(c);
  while (!coeffs.empty() && coeffs.back().empty()) coeffs.pop_back();
}

CurvePreset::CurvePreset(std::string id, SmallField field, std::vector<PolyX> tail, int genus)
    : id_(std::move(id)), field_(std::move(field)), tail_(std::move(tail)), declared_genus_(genus) {}

CurvePreset CurvePreset::hermitian(int q) {
  int p = 0;
  int k = 0;
  for (int cand = 2; cand <= q; ++cand) {
    int t = q;
    int e = 0;
    while (t % cand == 0) {
      t /= cand;
      ++e;
    }
    if (t == 1) {
      p = cand;
      k = e;
      break;
    }
  }
  if (p == 0) throw std::invalid_argument("hermitian: q must be a prime power");
  SmallField F(p, 2 * k);
  // y^q + y - x^{q+1}
  std::vector<PolyX> tail(q);
  tail[1] = {1};
  tail[0] = poly::monomial(F.neg(1), q + 1);
  return CurvePreset("hermitian" + std::to_string(q), F, std::move(tail), q * (q - 1) / 2);
}

CurvePreset CurvePreset::suzuki(int q0) {
  const int q = 2 * q0 * q0;
  int k = 0;
  for (int t = q; t > 1; t /= 2) ++k;
  SmallField F(2, k);
  // y^q + y - x^{q+q0} - x^{q0+1}; characteristic 2 so signs vanish
  std::vector<PolyX> tail(q);
  tail[1] = {1};
  tail[0] = poly::add(F, poly::monomial(1, q + q0), poly::monomial(1, q0 + 1));
  return CurvePreset("suzuki" + std::to_string(q), F, std::move(tail), q0 * (q - 1));
}

CurvePreset CurvePreset::from_id(std::string_view id) {
  if (id == "hermitian2") return hermitian(2);
  if (id == "hermitian3") return hermitian(3);
  if (id == "hermitian4") return hermitian(4);
  if (id == "suzuki8") return suzuki(2);
  if (id == "suzuki32") return suzuki(4);
  throw std::invalid_argument("unknown curve id: " + std::string(id));
}

std::vector<std::string> CurvePreset::ids() {
  return {"hermitian2", "hermitian3", "hermitian4", "suzuki8", "suzuki32"};
}

Elem CurvePreset::eval(Elem x, Elem y) const {
  const int n = y_degree();
  Elem r = 1;  // leading coefficient of y^n
  for (int j = n - 1; j >= 0; --j) r = field_.add(field_.mul(r, y), poly::eval(field_, tail_[j], x));
  return r;
}

Elem CurvePreset::eval_dx(Elem x, Elem y) const {
  Elem r = 0;
  Elem yj = 1;
  for (int j = 0; j < y_degree(); ++j) {
    const PolyX& c = tail_[j];
    Elem d = 0;
    Elem xi = 1;
    for (size_t i = 1; i < c.size(); ++i) {
      Elem term = field_.mul(c[i], xi);
      // multiply by the integer i in the prime field
      Elem scaled = 0;
      for (size_t t = 0; t < i % field_.characteristic(); ++t) scaled = field_.add(scaled, term);
      d = field_.add(d, scaled);
      xi = field_.mul(xi, x);
    }
    r = field_.add(r, field_.mul(d, yj));
    yj = field_.mul(yj, y);
  }
  return r;
}

Elem CurvePreset::eval_dy(Elem x, Elem y) const {
  const int n = y_degree();
  const int p = field_.characteristic();
  auto times_int = [&](Elem v, int m) {
    Elem s = 0;
    for (int t = 0; t < m % p; ++t) s = field_.add(s, v);
    return s;
  };
  Elem r = times_int(field_.pow(y, n - 1), n);
  for (int j = 1; j < n; ++j)
    r = field_.add(r, times_int(field_.mul(poly::eval(field_, tail_[j], x), field_.pow(y, j - 1)), j));
  return r;
}

void CurvePreset::validate() const {
  if (eval(0, 0) != 0) throw std::invalid_argument(id_ + ": origin is not on the curve");
  if (eval_dy(0, 0) == 0) throw std::invalid_argument(id_ + ": origin is singular or ramified over x");
  const int q = field_.order();
  for (int x = 0; x < q; ++x)
    for (int y = 0; y < q; ++y) {
      Elem ex = static_cast<Elem>(x), ey = static_cast<Elem>(y);
      if (eval(ex, ey) == 0 && eval_dx(ex, ey) == 0 && eval_dy(ex, ey) == 0)
        throw std::invalid_argument(id_ + ": singular affine point");
    }
}

BivariateElement CurvePreset::constant(Elem c) const {
  BivariateElement r;
  if (c != 0) r.coeffs = {PolyX{c}};
  return r;
}

BivariateElement CurvePreset::x_power(int i) const {
  BivariateElement r;
  r.coeffs = {poly::monomial(1, i)};
  return r;
}

BivariateElement CurvePreset::y_power(int j) const {
  BivariateElement r = constant(1);
  for (int t = 0; t < j; ++t) r = times_y(r);
  return r;
}

BivariateElement CurvePreset::add(const BivariateElement& a, const BivariateElement& b) const {
  BivariateElement r;
  r.coeffs.resize(std::max(a.coeffs.size(), b.coeffs.size()));
  for (size_t j = 0; j < r.coeffs.size(); ++j) {
    const PolyX empty;
    r.coeffs[j] = poly::add(field_, j < a.coeffs.size() ? a.coeffs[j] : empty,
                            j < b.coeffs.size() ? b.coeffs[j] : empty);
  }
  r.normalize();
  return r;
}

BivariateElement CurvePreset::scale(const BivariateElement& a, Elem c) const {
  BivariateElement r;
  if (c == 0) return r;
  r.coeffs.reserve(a.coeffs.size());
  for (const auto& p : a.coeffs) r.coeffs.push_back(poly::scale(field_, p, c));
  return r;
}

BivariateElement CurvePreset::times_x_power(const BivariateElement& a, int i) const {
  BivariateElement r;
  r.coeffs.reserve(a.coeffs.size());
  for (const auto& p : a.coeffs) r.coeffs.push_back(poly::shift(p, i));
  return r;
}

BivariateElement CurvePreset::times_y(const BivariateElement& a) const {
  if (a.is_zero()) return a;
  const int n = y_degree();
  std::vector<PolyX> c(n);
  for (size_t j = 0; j < a.coeffs.size(); ++j) {
    if (static_cast<int>(j) + 1 < n) {
      c[j + 1] = poly::add(field_, c[j + 1], a.coeffs[j]);
    } else {
      // y^n = -sum_k tail_k y^k
      for (int k = 0; k < n; ++k)
        c[k] = poly::sub(field_, c[k], poly::mul(field_, a.coeffs[j], tail_[k]));
    }
  }
  BivariateElement r{std::move(c)};
  r.normalize();
  return r;
}

BivariateElement CurvePreset::mul(const BivariateElement& a, const BivariateElement& b) const {
  BivariateElement acc;
  BivariateElement shifted = a;  // a * y^j
  for (size_t j = 0; j < b.coeffs.size(); ++j) {
    if (!b.coeffs[j].empty()) {
      BivariateElement term;
      for (const auto& p : shifted.coeffs) term.coeffs.push_back(poly::mul(field_, p, b.coeffs[j]));
      term.normalize();
      acc = add(acc, term);
    }
    shifted = times_y(shifted);
  }
  return acc;
}

Elem CurvePreset::eval(const BivariateElement& g, Elem x, Elem y) const {
  Elem r = 0;
  for (int j = static_cast<int>(g.coeffs.size()) - 1; j >= 0; --j)
    r = field_.add(field_.mul(r, y), poly::eval(field_, g.coeffs[j], x));
  return r;
}

}  // namespace agcb
