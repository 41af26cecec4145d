#include "fatpoints/ledger.hpp"

#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace fatpoints::ledger {

BigInt binom_ext(int x, int d) {
  if (d < 0) throw std::invalid_argument("negative binomial order");
  BigInt num = 1, den = 1;
  for (int i = 1; i <= d; ++i) {
    num *= BigInt(x + i);
    den *= i;
  }
  return num / den;  // exact: product of d consecutive integers
}

BigInt basis(int c, int d, int m, int n) { return binom_ext(m, c) * binom_ext(n, d); }

BigInt floor_div(const BigInt& a, const BigInt& b) {
  if (b <= 0) throw std::invalid_argument("floor_div needs a positive divisor");
  BigInt q = a / b;  // truncates toward zero
  if (a % b != 0 && a < 0) q -= 1;
  return q;
}

BigInt ceil_div(const BigInt& a, const BigInt& b) { return -floor_div(-a, b); }

namespace {

void check_mn(int m, int n) {
  if (m < -1 || n < -1 || m + n < 0)
    throw std::domain_error("(m, n) = (" + std::to_string(m) + ", " + std::to_string(n) + ") out of range");
}

void require(bool ok, const char* what) {
  if (!ok) throw std::domain_error(std::string("argument out of range for ") + what);
}

}  // namespace

BigInt r_star(int c, int d, int m, int n) {
  check_mn(m, n);
  return ceil_div(basis(c, d, m, n), m + n + 1);
}
BigInt r_low(int c, int d, int m, int n) {
  check_mn(m, n);
  return floor_div(basis(c, d, m, n), m + n + 1);
}
BigInt k_star(int c, int d, int m, int n) { return r_star(c, d, m, n) - (m + n + 1); }
BigInt k_low(int c, int d, int m, int n) { return r_low(c, d, m, n) - (m + n + 1); }

BigInt f(int m, int n) {
  require(m >= 1 && n >= 1, "f");
  return 1 + k_star(3, 3, m, n) - k_star(3, 3, m - 1, n);
}
BigInt ell(int m, int n) {
  require(m >= 1 && n >= 1, "ell");
  return k_low(3, 3, m, n) - k_low(3, 3, m - 1, n);
}
BigInt s(int n) {
  require(n >= 0, "s");
  return BigInt(n) * (n + 3) / 2;
}
BigInt b(int n) {
  require(n >= 0, "b");
  return k_low(3, 3, 2, n) - k_low(3, 3, 2, n - 1);
}
BigInt u(int m, int n) {
  require(m >= 1 && n >= 1, "u");
  return k_star(3, 4, m, n) - k_star(3, 4, m, n - 1);
}
BigInt h(int m, int n) {
  require(m >= 1 && n >= 1, "h");
  return 1 + k_low(3, 4, m, n) - k_low(3, 4, m, n - 1);
}
BigInt v(int n) {
  require(n >= 1, "v");
  return BigInt(10) * (n + 1) - BigInt(n + 3) * (1 + b(n)) + BigInt(n + 2) * b(n - 1);
}
BigInt w(int m, int n) {
  require(m >= 1 && n >= 1, "w");
  return k_star(4, 4, m, n) - k_star(4, 4, m - 1, n);
}
BigInt j(int m) {
  require(m >= 1, "j");
  return k_low(3, 4, m, 2) - k_low(3, 4, m - 1, 2);
}

namespace {

using G = std::pair<int, BigInt>;

// vdim of general points via the fat-point module, the single source of truth for condition counts.
BigInt vd(std::vector<int> dims, std::vector<int> degs, std::vector<G> groups) {
  SchemeType t;
  for (const auto& [a, count] : groups) {
    if (count < 0) throw std::domain_error("negative point count " + count.str());
    if (count > 0) t.groups.push_back({a, static_cast<std::int64_t>(count)});
  }
  return virtual_dim(dims, degs, t);
}

BigInt C(int top, int k) { return binom_ext(top - k, k); }  // ordinary binom(top, k), top >= k - 1

bool ge2(int m, int n) { return n >= m && m >= 2; }

std::vector<Lemma> build() {
  std::vector<Lemma> L;
  auto add = [&](std::string id, std::string st, Vars vars, std::function<bool(int, int)> hyp,
                 std::function<bool(int, int)> holds, std::vector<std::pair<int, int>> excl = {}) {
    L.push_back({std::move(id), std::move(st), vars, std::move(hyp), std::move(excl), std::move(holds)});
  };
  const auto any = [](int, int) { return true; };

  // (3,3)
  add("kup33-diff-bcc", "2<=m<=n: k*(3,3;m,n)-k*(3,3;m-1,n) >= ceil((m+1)binom(n+3,3)/(m+n+1)) + m", Vars::MN,
      ge2, [](int m, int n) {
        return k_star(3, 3, m, n) - k_star(3, 3, m - 1, n) >= ceil_div((m + 1) * C(n + 3, 3), m + n + 1) + m;
      });
  add("vdim23-kup33-diff", "m,n>=1: vdim L^{2,3}_{mxn}(2^{1+k*(3,3;m,n)-k*(3,3;m-1,n)}) >= k*(3,3;m-1,n)",
      Vars::MN, any, [](int m, int n) {
        return vd({m, n}, {2, 3}, {{2, 1 + k_star(3, 3, m, n) - k_star(3, 3, m - 1, n)}}) >= k_star(3, 3, m - 1, n);
      });
  add("vdim31-kup33-1xn", "n>=2: vdim L^{3,1}_{1xn}(1,2^{k*(3,3;1,n)-k*(3,3;1,n-1)}) <= 0", Vars::N,
      [](int, int n) { return n >= 2; },
      [](int, int n) {
        return vd({1, n}, {3, 1}, {{1, 1}, {2, k_star(3, 3, 1, n) - k_star(3, 3, 1, n - 1)}}) <= 0;
      });
  add("ell-vdim", "2<=m<=n: vdim L^3_n(1,2^{ell(m,n)-ell(m-1,n)}) <= 0", Vars::MN, ge2,
      [](int m, int n) { return vd({n}, {3}, {{1, 1}, {2, ell(m, n) - ell(m - 1, n)}}) <= 0; });
  add("ell-monotone", "2<=m<=n: ell(m-1,n) <= ell(m,n)", Vars::MN, ge2,
      [](int m, int n) { return ell(m - 1, n) <= ell(m, n); });
  add("f-vdim", "2<=m<=n: vdim L^3_n(2^{f(m,n)-f(m-1,n)}) <= 0", Vars::MN, ge2,
      [](int m, int n) { return vd({n}, {3}, {{2, f(m, n) - f(m - 1, n)}}) <= 0; });
  add("f-monotone", "2<=m<=n: f(m-1,n) <= f(m,n)", Vars::MN, ge2,
      [](int m, int n) { return f(m - 1, n) <= f(m, n); });
  add("f-vdim23", "2<=m<=n: vdim L^{2,3}_{mxn}(2^{f(m,n)}) >= 0", Vars::MN, ge2,
      [](int m, int n) { return vd({m, n}, {2, 3}, {{2, f(m, n)}}) >= 0; });
  add("f-diff-upper", "2<=m<=n: f(m,n)-f(m-1,n) <= floor((m+1)binom(n+3,3)/(m+n+1)) - m", Vars::MN, ge2,
      [](int m, int n) { return f(m, n) - f(m - 1, n) <= floor_div((m + 1) * C(n + 3, 3), m + n + 1) - m; });
  add("ell-diff-upper", "2<=m<=n: 1+ell(m,n)-ell(m-1,n) <= floor((m+1)binom(n+3,3)/(m+n+1)) - m", Vars::MN, ge2,
      [](int m, int n) {
        return 1 + ell(m, n) - ell(m - 1, n) <= floor_div((m + 1) * C(n + 3, 3), m + n + 1) - m;
      });
  add("f-vdim13", "2<=m<=n: vdim L^{1,3}_{mxn}(2^{f(m,n)-f(m-1,n)}) >= f(m-1,n)", Vars::MN, ge2,
      [](int m, int n) { return vd({m, n}, {1, 3}, {{2, f(m, n) - f(m - 1, n)}}) >= f(m - 1, n); });
  add("triple-vdim23", "2<=m<=n: vdim L^{2,3}_{mxn}(3,2^{k_*(3,3;m,n)-k_*(3,3;m-1,n)}) <= k_*(3,3;m-1,n)",
      Vars::MN, ge2, [](int m, int n) {
        return vd({m, n}, {2, 3}, {{3, 1}, {2, k_low(3, 3, m, n) - k_low(3, 3, m - 1, n)}}) <= k_low(3, 3, m - 1, n);
      });
  add("klow33-diff-bcc", "2<=m<=n: 1+k_*(3,3;m,n)-k_*(3,3;m-1,n) >= ceil((m+1)binom(n+3,3)/(m+n+1)) + m",
      Vars::MN, ge2, [](int m, int n) {
        return 1 + k_low(3, 3, m, n) - k_low(3, 3, m - 1, n) >= ceil_div((m + 1) * C(n + 3, 3), m + n + 1) + m;
      });
  add("triple-vdim32-2xn", "n>=2: vdim L^{3,2}_{2xn}(3,2^{b(n)}) <= k_*(3,3;2,n-1)", Vars::N,
      [](int, int n) { return n >= 2; },
      [](int, int n) { return vd({2, n}, {3, 2}, {{3, 1}, {2, b(n)}}) <= k_low(3, 3, 2, n - 1); });
  add("klow33-2xn-bcc", "n>=2: 1+b(n) >= ceil(10(n+1)/(n+3)) + n", Vars::N, [](int, int n) { return n >= 2; },
      [](int, int n) { return 1 + b(n) >= ceil_div(BigInt(10) * (n + 1), n + 3) + n; });
  add("ell-vdim13", "2<=m<=n: vdim L^{1,3}_{mxn}(2^{1+ell(m,n)-ell(m-1,n)}) >= ell(m-1,n)", Vars::MN, ge2,
      [](int m, int n) { return vd({m, n}, {1, 3}, {{2, 1 + ell(m, n) - ell(m - 1, n)}}) >= ell(m - 1, n); });
  add("s-bcc", "n>=3: 1+ell(2,n)-s(n) <= floor(3 binom(n+3,3)/(n+3)) - 2", Vars::N,
      [](int, int n) { return n >= 3; },
      [](int, int n) { return 1 + ell(2, n) - s(n) <= floor_div(3 * C(n + 3, 3), n + 3) - 2; });
  add("s-below-ell", "n>=3: ell(2,n)-s(n) >= ceil((binom(n+3,3)-1)/(n+1)), hence s(n) <= ell(2,n)", Vars::N,
      [](int, int n) { return n >= 3; },
      [](int, int n) {
        return ell(2, n) - s(n) >= ceil_div(C(n + 3, 3) - 1, n + 1) && s(n) <= ell(2, n);
      });
  add("s-below-ell-vdim", "n>=3: vdim L^3_n(1,2^{ell(2,n)-s(n)}) <= 0", Vars::N,
      [](int, int n) { return n >= 3; },
      [](int, int n) { return vd({n}, {3}, {{1, 1}, {2, ell(2, n) - s(n)}}) <= 0; });
  add("s-vdim13", "n>=3: vdim L^{1,3}_{2xn}(2^{1+ell(2,n)-s(n)}) >= s(n)", Vars::N,
      [](int, int n) { return n >= 3; },
      [](int, int n) { return vd({2, n}, {1, 3}, {{2, 1 + ell(2, n) - s(n)}}) >= s(n); });
  add("b-diff-mod3", "n>=3: b(n)-b(n-1) = 4 if n = 1 mod 3, else 3", Vars::N, [](int, int n) { return n >= 3; },
      [](int, int n) { return b(n) - b(n - 1) == (n % 3 == 1 ? 4 : 3); });
  add("b-diff3", "n>=4: b(n)-b(n-3) = 10", Vars::N, [](int, int n) { return n >= 4; },
      [](int, int n) { return b(n) - b(n - 3) == 10; });
  add("v-diff-mod3", "n>=4: v(n)-v(n-3) = 5 if n = 1 mod 3, else 8", Vars::N, [](int, int n) { return n >= 4; },
      [](int, int n) { return v(n) - v(n - 3) == (n % 3 == 1 ? 5 : 8); });

  // (3,4)
  add("u-vdim33", "m,n>=1: vdim L^{3,3}_{mxn}(2^{1+u(m,n)}) >= k*(3,4;m,n-1)", Vars::MN, any,
      [](int m, int n) { return vd({m, n}, {3, 3}, {{2, 1 + u(m, n)}}) >= k_star(3, 4, m, n - 1); });
  add("u-vdim32", "m,n>=1: vdim L^{3,2}_{mxn}(1,2^{u(m,n)}) <= 0", Vars::MN, any,
      [](int m, int n) { return vd({m, n}, {3, 2}, {{1, 1}, {2, u(m, n)}}) <= 0; });
  add("kup34-mx1", "m>=1: 1+k*(3,4;m,1)-k*(3,4;m-1,1) <= 2(m+1)", Vars::M, any,
      [](int m, int) { return 1 + k_star(3, 4, m, 1) - k_star(3, 4, m - 1, 1) <= 2 * (m + 1); });
  add("u-mx1-bcc", "m>=1: u(m,1) >= ceil(3 binom(m+3,3)/(m+2))", Vars::M, any,
      [](int m, int) { return u(m, 1) >= ceil_div(3 * C(m + 3, 3), m + 2); });
  add("kup34-mx1-vdim24", "m>=1: vdim L^{2,4}_{mx1}(2^{1+k*(3,4;m,1)-k*(3,4;m-1,1)}) >= k*(3,4;m-1,1)", Vars::M,
      any, [](int m, int) {
        return vd({m, 1}, {2, 4}, {{2, 1 + k_star(3, 4, m, 1) - k_star(3, 4, m - 1, 1)}}) >= k_star(3, 4, m - 1, 1);
      });
  add("kup34-mx1-vdim14", "m>=1: vdim L^{1,4}_{mx1}(1,2^{k*(3,4;m,1)-k*(3,4;m-1,1)}) <= 0", Vars::M, any,
      [](int m, int) {
        return vd({m, 1}, {1, 4}, {{1, 1}, {2, k_star(3, 4, m, 1) - k_star(3, 4, m - 1, 1)}}) <= 0;
      });
  add("u-diff-bcc", "m,n>=2: u(m,n)-u(m,n-1) >= ceil(binom(m+3,3)(n+1)/(m+n+1)) + n", Vars::MN,
      [](int m, int n) { return m >= 2 && n >= 2; },
      [](int m, int n) { return u(m, n) - u(m, n - 1) >= ceil_div(C(m + 3, 3) * (n + 1), m + n + 1) + n; });
  add("h-diff-bcc", "m,n>=2: h(m,n)-h(m,n-1) >= ceil((n+1)binom(m+3,3)/(m+n+1)) + n", Vars::MN,
      [](int m, int n) { return m >= 2 && n >= 2; },
      [](int m, int n) { return h(m, n) - h(m, n - 1) >= ceil_div((n + 1) * C(m + 3, 3), m + n + 1) + n; });
  add("u-1xn-bcc", "n>=2: u(1,n)-u(1,n-1) >= ceil(4(n+1)/(n+2))", Vars::N, [](int, int n) { return n >= 2; },
      [](int, int n) { return u(1, n) - u(1, n - 1) >= ceil_div(BigInt(4) * (n + 1), n + 2); });
  add("kdown34-vs-kup33", "n>=3, (m,n)!=(1,3): k_*(3,4;m,n)-k_*(3,4;m,n-1) <= k*(3,3;m,n)", Vars::MN,
      [](int, int n) { return n >= 3; },
      [](int m, int n) { return k_low(3, 4, m, n) - k_low(3, 4, m, n - 1) <= k_star(3, 3, m, n); }, {{1, 3}});
  add("triple-vdim33-klow34", "n>=3, m>=1: vdim L^{3,3}_{mxn}(3,2^{k_*(3,4;m,n)-k_*(3,4;m,n-1)}) <= k_*(3,4;m,n-1)",
      Vars::MN, [](int, int n) { return n >= 3; },
      [](int m, int n) {
        return vd({m, n}, {3, 3}, {{3, 1}, {2, k_low(3, 4, m, n) - k_low(3, 4, m, n - 1)}}) <= k_low(3, 4, m, n - 1);
      });
  add("h-vdim32-1xn", "n>=1: vdim L^{3,2}_{1xn}(2^{h(1,n)}) <= 0", Vars::N, any,
      [](int, int n) { return vd({1, n}, {3, 2}, {{2, h(1, n)}}) <= 0; });
  add("h-vdim32-mx1", "m>=1: vdim L^{3,2}_{mx1}(2^{h(m,1)}) <= 0", Vars::M, any,
      [](int m, int) { return vd({m, 1}, {3, 2}, {{2, h(m, 1)}}) <= 0; });
  add("klow34-mx2-closed", "m>=1: 2 k_*(3,4;m,2) = 5m^2+13m+4", Vars::M, any,
      [](int m, int) { return 2 * k_low(3, 4, m, 2) == BigInt(5) * m * m + 13 * m + 4; });
  add("klow34-mx2-vdim24", "m>=1: vdim L^{2,4}_{mx2}(3,2^{j(m)},1^{k_*(3,4;m-1,2)}) <= 0", Vars::M, any,
      [](int m, int) { return vd({m, 2}, {2, 4}, {{3, 1}, {2, j(m)}, {1, k_low(3, 4, m - 1, 2)}}) <= 0; });
  add("j-closed", "m>=1: j(m) = 5m+4", Vars::M, any, [](int m, int) { return j(m) == 5 * m + 4; });
  add("j-diff", "m>=2: j(m)-j(m-1) = 5", Vars::M, [](int m, int) { return m >= 2; },
      [](int m, int) { return j(m) - j(m - 1) == 5; });
  add("j-vdim14", "m>=2: vdim L^{1,4}_{mx2}(2,2^5,1^{j(m-1)}) >= 0", Vars::M, [](int m, int) { return m >= 2; },
      [](int m, int) { return vd({m, 2}, {1, 4}, {{2, 1}, {2, 5}, {1, j(m - 1)}}) >= 0; });
  add("j-bcc", "m>=2: 1+j(m) >= ceil(15(m+1)/(m+3)) + m", Vars::M, [](int m, int) { return m >= 2; },
      [](int m, int) { return 1 + j(m) >= ceil_div(BigInt(15) * (m + 1), m + 3) + m; });

  // (4,4)
  add("kup44-vdim34", "m,n>=1: vdim L^{3,4}_{mxn}(2,2^{k*(4,4;m,n)-k*(4,4;m-1,n)},1^{k*(4,4;m-1,n)}) >= 0",
      Vars::MN, any, [](int m, int n) {
        return vd({m, n}, {3, 4},
                  {{2, 1}, {2, k_star(4, 4, m, n) - k_star(4, 4, m - 1, n)}, {1, k_star(4, 4, m - 1, n)}}) >= 0;
      });
  add("kup44-vdim43-1xn", "n>=1: vdim L^{4,3}_{1xn}(2,2^{k*(4,4;1,n)-k*(4,4;1,n-1)},1^{k*(4,4;1,n-1)}) >= 0",
      Vars::N, any, [](int, int n) {
        return vd({1, n}, {4, 3},
                  {{2, 1}, {2, k_star(4, 4, 1, n) - k_star(4, 4, 1, n - 1)}, {1, k_star(4, 4, 1, n - 1)}}) >= 0;
      });
  add("klow44-vdim34", "m,n>=1: vdim L^{3,4}_{mxn}(3,2^{k_*(4,4;m,n)-k_*(4,4;m-1,n)},1^{k_*(4,4;m-1,n)}) <= 0",
      Vars::MN, any, [](int m, int n) {
        return vd({m, n}, {3, 4},
                  {{3, 1}, {2, k_low(4, 4, m, n) - k_low(4, 4, m - 1, n)}, {1, k_low(4, 4, m - 1, n)}}) <= 0;
      });
  add("w-mx1", "m>=2: vdim L^{2,4}_{mx1}(2^{w(m,1)}) <= 0 and w(m,1) > 3m+2", Vars::M,
      [](int m, int) { return m >= 2; },
      [](int m, int) { return vd({m, 1}, {2, 4}, {{2, w(m, 1)}}) <= 0 && w(m, 1) > 3 * m + 2; });
  add("w-1xn", "n>=1: vdim L^{2,4}_{1xn}(2^{w(1,n)}) <= 0", Vars::N, any,
      [](int, int n) { return vd({1, n}, {2, 4}, {{2, w(1, n)}}) <= 0; });
  add("w-diff-bcc", "m,n>=2: w(m,n)-w(m-1,n) >= ceil((m+1)binom(n+4,4)/(m+n+1)) + m", Vars::MN,
      [](int m, int n) { return m >= 2 && n >= 2; },
      [](int m, int n) { return w(m, n) - w(m - 1, n) >= ceil_div((m + 1) * C(n + 4, 4), m + n + 1) + m; });
  add("kdown44-vs-kup34", "2<=m<=n, (m,n)!=(2,2): k_*(4,4;m,n)-k_*(4,4;m-1,n) <= k*(3,4;m,n)", Vars::MN, ge2,
      [](int m, int n) { return k_low(4, 4, m, n) - k_low(4, 4, m - 1, n) <= k_star(3, 4, m, n); }, {{2, 2}});
  add("klow44-vs-kup44", "m,n>=1: 1+k_*(4,4;m,n)-k_*(4,4;m-1,n) >= k*(4,4;m,n)-k*(4,4;m-1,n)", Vars::MN, any,
      [](int m, int n) {
        return 1 + k_low(4, 4, m, n) - k_low(4, 4, m - 1, n) >= k_star(4, 4, m, n) - k_star(4, 4, m - 1, n);
      });
  add("klow44-vs-kup44-1xn", "n>=1: 1+k_*(4,4;1,n)-k_*(4,4;1,n-1) >= k*(4,4;1,n)-k*(4,4;1,n-1)", Vars::N, any,
      [](int, int n) {
        return 1 + k_low(4, 4, 1, n) - k_low(4, 4, 1, n - 1) >= k_star(4, 4, 1, n) - k_star(4, 4, 1, n - 1);
      });
  add("klow44-1xn-vs-kup43", "n>=4: k_*(4,4;1,n)-k_*(4,4;1,n-1) <= k*(4,3;1,n)", Vars::N,
      [](int, int n) { return n >= 4; },
      [](int, int n) { return k_low(4, 4, 1, n) - k_low(4, 4, 1, n - 1) <= k_star(4, 3, 1, n); });
  add("triple-vdim43-1xn", "n>=2: vdim L^{4,3}_{1xn}(3,2^{k_*(4,4;1,n)-k_*(4,4;1,n-1)}) <= k_*(4,4;1,n-1)",
      Vars::N, [](int, int n) { return n >= 2; },
      [](int, int n) {
        return vd({1, n}, {4, 3}, {{3, 1}, {2, k_low(4, 4, 1, n) - k_low(4, 4, 1, n - 1)}}) <= k_low(4, 4, 1, n - 1);
      });

  // Point counts of the coordinate specializations used by the base-case fixtures.
  add("v-is-vdim", "n>=1: v(n) = vdim L^{3,1}_{2xn}(2^{1+b(n)-b(n-1)},1^{b(n-1)})", Vars::N, any,
      [](int, int n) { return v(n) == vd({2, n}, {3, 1}, {{2, 1 + b(n) - b(n - 1)}, {1, b(n - 1)}}); });
  add("spec31-doubles", "n>=4: b(n)-b(n-1) = b(n-3)-b(n-4)", Vars::N, [](int, int n) { return n >= 4; },
      [](int, int n) { return b(n) - b(n - 1) == b(n - 3) - b(n - 4); });
  add("spec31-simples-on-D", "n>=4: b(n-1) = b(n-4) + 10", Vars::N, [](int, int n) { return n >= 4; },
      [](int, int n) { return b(n - 1) == b(n - 4) + 10; });
  add("spec-s-A", "n>=2: s(n) = s(n-2) + (2n+1)", Vars::N, [](int, int n) { return n >= 2; },
      [](int, int n) { return s(n) == s(n - 2) + (2 * n + 1); });
  add("spec-s-AB", "n>=4: s(n) = s(n-4) + 2(2n-3) + 4", Vars::N, [](int, int n) { return n >= 4; },
      [](int, int n) { return s(n) == s(n - 4) + 2 * (2 * n - 3) + 4; });
  add("spec-s-ABC", "n>=6: s(n) = s(n-6) + 3(2n-7) + 3*4", Vars::N, [](int, int n) { return n >= 6; },
      [](int, int n) { return s(n) == s(n - 6) + 3 * (2 * n - 7) + 12; });
  add("vdim23-s", "n>=1: vdim L^{2,3}_{1xn}(3,2^{s(n)}) = 0", Vars::N, any,
      [](int, int n) { return vd({1, n}, {2, 3}, {{3, 1}, {2, s(n)}}) == 0; });
  return L;
}

}  // namespace

const std::vector<Lemma>& lemmas() {
  static const std::vector<Lemma> all = build();
  return all;
}

const Lemma& find_lemma(const std::string& id) {
  for (const auto& l : lemmas())
    if (l.id == id) return l;
  throw std::invalid_argument("unknown lemma '" + id + "'");
}

LemmaResult verify_lemma(const std::string& id, Range range) {
  const Lemma& L = find_lemma(id);
  LemmaResult r{id, range, 0, {}};
  auto visit = [&](int m, int n) {
    if (!L.hypothesis(m, n)) return;
    if (range.honor_exclusions)
      for (const auto& e : L.excluded)
        if (e == std::pair<int, int>{m, n}) return;
    ++r.checked;
    try {
      if (!L.holds(m, n)) r.counterexamples.push_back({m, n, "inequality fails"});
    } catch (const std::exception& e) {
      r.counterexamples.push_back({m, n, e.what()});
    }
  };
  for (int a = range.lo; a <= range.hi; ++a) {
    switch (L.vars) {
      case Vars::M: visit(a, 0); break;
      case Vars::N: visit(0, a); break;
      case Vars::MN:
        for (int c = range.lo; c <= range.hi; ++c) visit(a, c);
        break;
    }
  }
  return r;
}

std::vector<LemmaResult> verify_all(Range range) {
  std::vector<LemmaResult> out;
  for (const auto& l : lemmas()) out.push_back(verify_lemma(l.id, range));
  return out;
}

Json result_json(const LemmaResult& r) {
  Json j;
  j["lemma_id"] = r.id;
  j["statement"] = find_lemma(r.id).statement;
  j["range"] = Json::array({r.range.lo, r.range.hi});
  j["checked"] = r.checked;
  j["status"] = r.ok() ? "verified" : "counterexamples";
  Json ce = Json::array();
  for (const auto& c : r.counterexamples) {
    const Vars vars = find_lemma(r.id).vars;
    Json e;
    if (vars != Vars::N) e["m"] = c.m;
    if (vars != Vars::M) e["n"] = c.n;
    e["detail"] = c.detail;
    ce.push_back(std::move(e));
  }
  j["counterexamples"] = std::move(ce);
  return j;
}

std::string result_table(const std::vector<LemmaResult>& rows) {
  std::ostringstream os;
  os << std::left << std::setw(24) << "lemma_id" << std::setw(10) << "range" << std::setw(9) << "checked"
     << "status\n";
  for (const auto& r : rows) {
    os << std::setw(24) << r.id << std::setw(10) << (std::to_string(r.range.lo) + ".." + std::to_string(r.range.hi))
       << std::setw(9) << r.checked;
    if (r.ok())
      os << "verified\n";
    else
      os << r.counterexamples.size() << " counterexample(s)\n";
  }
  return os.str();
}

}  // namespace fatpoints::ledger
