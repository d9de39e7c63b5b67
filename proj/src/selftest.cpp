#include "agcb/selftest.hpp"

#include <string>

#include "agcb/tables.hpp"

namespace agcb {

namespace {

std::string at(int a, int b) { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }

}  // namespace

std::vector<SuiteResult> run_selftest(const FunctionFieldKernel& k) {
  std::vector<SuiteResult> out;
  const int g = k.genus();
  const int e = k.torsion_order();
  const int w = k.window();

  {
    const int from_weights = k.basis().genus(k.curve().y_degree());
    out.push_back({"genus", from_weights == k.curve().declared_genus() && g == from_weights,
                   "g=" + std::to_string(g) + " from weights, declared " + std::to_string(k.curve().declared_genus())});
  }
  {
    const int lk = k.riemann_roch_dim(2 * g - 2, 0);
    const int lk1 = k.riemann_roch_dim(2 * g - 1, 0);
    // l(K) = g and K + P is nonspecial of degree 2g - 1.
    out.push_back({"canonical", lk == g && lk1 == g,
                   "l(" + std::to_string(2 * g - 2) + "P)=" + std::to_string(lk)});
  }
  {
    bool ok = k.riemann_roch_dim(e, -e) == 1;
    for (int j = 1; j < e && ok; ++j) ok = k.riemann_roch_dim(j, -j) == 0;
    out.push_back({"torsion", ok, "e=" + std::to_string(e)});
  }
  {
    std::string bad;
    int checked = 0;
    for (int a = 2 * g - 2 - w; a <= w && bad.empty(); ++a)
      for (int b = -w; b <= w; ++b) {
        if (a < -w) continue;
        ++checked;
        if (k.riemann_roch_dim(a, b) - k.riemann_roch_dim(2 * g - 2 - a, -b) != a + b + 1 - g) {
          bad = at(a, b);
          break;
        }
      }
    out.push_back({"riemann_roch", bad.empty(), bad.empty() ? std::to_string(checked) + " pairs" : "fails at " + bad});
  }
  {
    std::string bad;
    for (int a = -w; a <= w && bad.empty(); ++a)
      for (int b = -w; b <= w; ++b)
        if (k.riemann_roch_dim(a, b) != k.riemann_roch_dim(b, a)) {
          bad = at(a, b);
          break;
        }
    out.push_back({"symmetry", bad.empty(), bad.empty() ? "l(aP+bQ) = l(bP+aQ)" : "fails at " + bad});
  }
  const std::string& id = k.curve().id();
  if (id.rfind("hermitian", 0) == 0) {
    const int q = std::stoi(id.substr(9));
    std::string bad;
    for (int a = -w; a <= w && bad.empty(); ++a)
      for (int b = -w; b <= w; ++b)
        if (k.riemann_roch_dim(a, b) != hermitian_closed_form_dim(q, a, b)) {
          bad = at(a, b);
          break;
        }
    out.push_back({"hermitian_closed_form", bad.empty(), bad.empty() ? "window matches" : "fails at " + bad});
  }
  return out;
}

}  // namespace agcb
