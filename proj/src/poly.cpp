#include "agcb/poly.hpp"

#include <stdexcept>
#include <utility>

namespace agcb::poly {

void trim(PolyX& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int degree(const PolyX& a) { return static_cast<int>(a.size()) - 1; }

PolyX add(const SmallField& F, const PolyX& a, const PolyX& b) {
  PolyX r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] = F.add(r[i], b[i]);
  trim(r);
  return r;
}

PolyX sub(const SmallField& F, const PolyX& a, const PolyX& b) {
  PolyX r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] = F.sub(r[i], b[i]);
  trim(r);
  return r;
}

PolyX mul(const SmallField& F, const PolyX& a, const PolyX& b) {
  if (a.empty() || b.empty()) return {};
  PolyX r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) {
      if (b[j] == 0) continue;
      r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
    }
  }
  trim(r);
  return r;
}

PolyX scale(const SmallField& F, const PolyX& a, Elem c) {
  if (c == 0) return {};
  PolyX r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = F.mul(a[i], c);
  return r;
}

PolyX shift(const PolyX& a, int k) {
  if (a.empty()) return {};
  PolyX r(k, 0);
  r.insert(r.end(), a.begin(), a.end());
  return r;
}

PolyX monomial(Elem c, int k) {
  if (c == 0) return {};
  PolyX r(k + 1, 0);
  r[k] = c;
  return r;
}

PolyX div_exact(const SmallField& F, const PolyX& a, const PolyX& b) {
  if (b.empty()) throw std::domain_error("polynomial division by zero");
  if (a.empty()) return {};
  PolyX rem = a;
  const int db = degree(b);
  if (degree(a) < db) throw std::logic_error("inexact polynomial division");
  PolyX quo(degree(a) - db + 1, 0);
  const Elem lead_inv = F.inv(b.back());
  for (int i = degree(rem); i >= db; --i) {
    Elem c = F.mul(rem[i], lead_inv);
    quo[i - db] = c;
    if (c == 0) continue;
    for (int j = 0; j <= db; ++j) rem[i - db + j] = F.sub(rem[i - db + j], F.mul(c, b[j]));
  }
  trim(rem);
  if (!rem.empty()) throw std::logic_error("inexact polynomial division");
  trim(quo);
  return quo;
}

Elem eval(const SmallField& F, const PolyX& a, Elem x) {
  Elem r = 0;
  for (int i = degree(a); i >= 0; --i) r = F.add(F.mul(r, x), a[i]);
  return r;
}

PolyX determinant(const SmallField& F, std::vector<std::vector<PolyX>> m) {
  const size_t n = m.size();
  if (n == 0) return {1};
  PolyX prev = {1};
  bool negate = false;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].empty()) {
      size_t piv = k + 1;
      while (piv < n && m[piv][k].empty()) ++piv;
      if (piv == n) return {};
      std::swap(m[k], m[piv]);
      negate = !negate;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        PolyX t = sub(F, mul(F, m[i][j], m[k][k]), mul(F, m[i][k], m[k][j]));
        m[i][j] = div_exact(F, t, prev);
      }
      m[i][k].clear();
    }
    prev = m[k][k];
  }
  PolyX det = m[n - 1][n - 1];
  if (negate) det = scale(F, det, F.neg(1));
  return det;
}

}  // namespace agcb::poly
