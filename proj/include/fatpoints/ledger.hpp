#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "fatpoints/json_io.hpp"
#include "fatpoints/scheme.hpp"

namespace fatpoints::ledger {

// binom(x + d, d) as a polynomial in x: (x+1)(x+2)...(x+d)/d!. Equals the usual binomial for x >= 0
// and vanishes at x = -1, ..., -d.
BigInt binom_ext(int x, int d);
// binom(m+c, m) * binom(n+d, n), with the polynomial extension in m and n.
BigInt basis(int c, int d, int m, int n);

BigInt floor_div(const BigInt& a, const BigInt& b);
BigInt ceil_div(const BigInt& a, const BigInt& b);

// Defined for m, n >= -1 with m + n >= 0.
BigInt r_star(int c, int d, int m, int n);  // ceiling
BigInt r_low(int c, int d, int m, int n);   // floor
BigInt k_star(int c, int d, int m, int n);  // r_star - (m+n+1)
BigInt k_low(int c, int d, int m, int n);   // r_low - (m+n+1)

BigInt f(int m, int n);    // 1 + k*(3,3;m,n) - k*(3,3;m-1,n),   m,n >= 1
BigInt ell(int m, int n);  // k_*(3,3;m,n) - k_*(3,3;m-1,n),     m,n >= 1
BigInt s(int n);           // n(n+3)/2,                           n >= 0
BigInt b(int n);           // k_*(3,3;2,n) - k_*(3,3;2,n-1),      n >= 0
BigInt u(int m, int n);    // k*(3,4;m,n) - k*(3,4;m,n-1),        m,n >= 1
BigInt h(int m, int n);    // 1 + k_*(3,4;m,n) - k_*(3,4;m,n-1),  m,n >= 1
BigInt v(int n);           // 10(n+1) - (n+3)(1+b(n)) + (n+2)b(n-1), n >= 1
BigInt w(int m, int n);    // k*(4,4;m,n) - k*(4,4;m-1,n),        m,n >= 1
BigInt j(int m);           // k_*(3,4;m,2) - k_*(3,4;m-1,2),      m >= 1

enum class Vars { M, N, MN };

struct Lemma {
  std::string id;
  std::string statement;
  Vars vars = Vars::MN;
  std::function<bool(int, int)> hypothesis;
  std::vector<std::pair<int, int>> excluded;
  std::function<bool(int, int)> holds;
};

struct Range {
  int lo = 1;
  int hi = 40;
  bool honor_exclusions = true;
};

struct Counterexample {
  int m = 0;
  int n = 0;
  std::string detail;
};

struct LemmaResult {
  std::string id;
  Range range;
  long checked = 0;
  std::vector<Counterexample> counterexamples;
  bool ok() const { return counterexamples.empty(); }
};

const std::vector<Lemma>& lemmas();
const Lemma& find_lemma(const std::string& id);
LemmaResult verify_lemma(const std::string& id, Range range = {});
std::vector<LemmaResult> verify_all(Range range = {});

Json result_json(const LemmaResult& r);
std::string result_table(const std::vector<LemmaResult>& rows);

}  // namespace fatpoints::ledger
