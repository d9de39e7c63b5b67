#include "agcb/field.hpp"

#include <stdexcept>

namespace agcb {

namespace {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Digits of the encoded element as a polynomial over F_p.
std::vector<int> digits(int v, int p, int k) {
  std::vector<int> d(k);
  for (int i = 0; i < k; ++i) {
    d[i] = v % p;
    v /= p;
  }
  return d;
}

int encode(const std::vector<int>& d, int p) {
  int v = 0;
  for (int i = static_cast<int>(d.size()) - 1; i >= 0; --i) v = v * p + d[i];
  return v;
}

// Multiply the encoded element by the generator x modulo the monic modulus.
int times_x(int v, const std::vector<int>& modulus, int p, int k) {
  std::vector<int> d = digits(v, p, k);
  int top = d[k - 1];
  for (int i = k - 1; i > 0; --i) d[i] = d[i - 1];
  d[0] = 0;
  for (int i = 0; i < k; ++i) d[i] = ((d[i] - top * modulus[i]) % p + p) % p;
  return encode(d, p);
}

}  // namespace

SmallField::SmallField(int p, int k) : p_(p), k_(k), q_(1) {
  if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime");
  if (k < 1) throw std::invalid_argument("extension degree must be positive");
  for (int i = 0; i < k; ++i) q_ *= p;
  if (q_ > 81) throw std::invalid_argument("field order exceeds 81");

  add_.assign(q_ * q_, 0);
  neg_.assign(q_, 0);
  for (int a = 0; a < q_; ++a) {
    auto da = digits(a, p, k);
    std::vector<int> dn(k);
    for (int i = 0; i < k; ++i) dn[i] = (p - da[i]) % p;
    neg_[a] = static_cast<Elem>(encode(dn, p));
    for (int b = 0; b < q_; ++b) {
      auto db = digits(b, p, k);
      std::vector<int> ds(k);
      for (int i = 0; i < k; ++i) ds[i] = (da[i] + db[i]) % p;
      add_[a * q_ + b] = static_cast<Elem>(encode(ds, p));
    }
  }

  // Search monic degree-k polynomials (modulus[0..k-1] are the low
  // coefficients) for one whose root x has multiplicative order q-1.
  const int n = q_ - 1;
  for (int code = 0; code < q_; ++code) {
    std::vector<int> low = digits(code, p, k);
    if (low[0] == 0 && k > 1) continue;
    std::vector<int> ex(2 * n + 1);
    int v = (k == 1) ? 0 : p;  // encoded x
    if (k == 1) {
      // In F_p the "generator" is the scalar -low[0].
      v = (p - low[0]) % p;
      if (v == 0) continue;
    }
    bool ok = true;
    int cur = 1;
    std::vector<bool> seen(q_, false);
    for (int i = 0; i < n; ++i) {
      if (seen[cur] || cur == 0) {
        ok = false;
        break;
      }
      seen[cur] = true;
      ex[i] = cur;
      if (k == 1) {
        cur = (cur * v) % p;
      } else {
        cur = times_x(cur, low, p, k);
      }
    }
    if (!ok || cur != 1) continue;
    modulus_ = low;
    modulus_.push_back(1);
    exp_.assign(2 * n + 1, 0);
    log_.assign(q_, -1);
    for (int i = 0; i < n; ++i) {
      exp_[i] = static_cast<Elem>(ex[i]);
      exp_[i + n] = static_cast<Elem>(ex[i]);
      log_[ex[i]] = i;
    }
    exp_[2 * n] = static_cast<Elem>(ex[0]);
    return;
  }
  throw std::logic_error("no primitive polynomial found");
}

Elem SmallField::inv(Elem a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  const int n = q_ - 1;
  return exp_[(n - log_[a]) % n];
}

Elem SmallField::pow(Elem a, long long e) const {
  if (a == 0) {
    if (e == 0) return 1;
    if (e < 0) throw std::domain_error("negative power of zero");
    return 0;
  }
  const long long n = q_ - 1;
  long long r = (static_cast<long long>(log_[a]) * (e % n)) % n;
  if (r < 0) r += n;
  return exp_[r];
}

int SmallField::log(Elem a) const {
  if (a == 0) throw std::domain_error("log of zero");
  return log_[a];
}

Elem SmallField::primitive_power(long long e) const {
  const long long n = q_ - 1;
  long long r = e % n;
  if (r < 0) r += n;
  return exp_[r];
}

std::string SmallField::to_string(Elem a) const {
  if (k_ == 1) return std::to_string(a);
  if (a == 0) return "0";
  return "g^" + std::to_string(log_[a]);
}

}  // namespace agcb
