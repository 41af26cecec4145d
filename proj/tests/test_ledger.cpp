#include <doctest.h>

#include <chrono>

#include "fatpoints/ledger.hpp"

using namespace fatpoints;
using namespace fatpoints::ledger;

namespace {

// Independent evaluation with 128-bit integers for small arguments.
__int128 binom128(int n, int k) {
  if (k < 0 || n < k) return 0;
  __int128 r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

__int128 kfloor(int c, int d, int m, int n) {
  const __int128 B = binom128(m + c, m) * binom128(n + d, n);
  return B / (m + n + 1) - (m + n + 1);
}

__int128 kceil(int c, int d, int m, int n) {
  const __int128 B = binom128(m + c, m) * binom128(n + d, n);
  return (B + m + n) / (m + n + 1) - (m + n + 1);
}

}  // namespace

TEST_CASE("defining values") {
  CHECK(r_star(3, 3, 1, 1) == 6);
  CHECK(r_low(3, 3, 1, 1) == 5);
  CHECK(k_star(3, 3, 1, 1) == 3);
  CHECK(k_low(3, 3, 1, 1) == 2);
  CHECK(k_low(4, 4, 2, 2) == 40);
  CHECK(s(2) == 5);
  CHECK(s(3) == 9);
  for (int m = 1; m <= 10; ++m) CHECK(2 * k_low(3, 4, m, 2) == BigInt(5 * m * m + 13 * m + 4));
  for (int m = 1; m <= 20; ++m) CHECK(j(m) == 5 * m + 4);
  for (int n = 4; n <= 60; ++n) CHECK(b(n) - b(n - 3) == 10);
}

TEST_CASE("b and v on the first values") {
  std::vector<int> bs{6, 9, 12, 16, 19};
  for (int n = 1; n <= 5; ++n) CHECK(b(n) == bs[n - 1]);
  CHECK(v(3) == 7);
  CHECK(v(4) == 3);
  CHECK(v(5) == 12);
  // Polynomial extension at n = 0 and n = -1.
  CHECK(binom_ext(-1, 3) == 0);
  CHECK(k_low(3, 3, 2, -1) == -2);
  CHECK(b(0) == 2);
  CHECK(v(1) == -2);
}

TEST_CASE("k functions agree with an independent 128-bit evaluation") {
  for (int c = 1; c <= 5; ++c)
    for (int d = 1; d <= 5; ++d)
      for (int m = 0; m <= 12; ++m)
        for (int n = 0; n <= 12; ++n) {
          if (m + n == 0) continue;
          bool ok = k_low(c, d, m, n) == BigInt(static_cast<long long>(kfloor(c, d, m, n))) &&
                    k_star(c, d, m, n) == BigInt(static_cast<long long>(kceil(c, d, m, n)));
          if (!ok) CHECK_MESSAGE(ok, c << d << m << n);
        }
}

TEST_CASE("ceiling and floor differ by at most one, and are symmetric") {
  for (int c = 0; c <= 5; ++c)
    for (int d = 0; d <= 5; ++d)
      for (int m = 0; m <= 15; ++m)
        for (int n = 0; n <= 15; ++n) {
          if (m + n == 0) continue;
          const BigInt diff = k_star(c, d, m, n) - k_low(c, d, m, n);
          const bool divides = basis(c, d, m, n) % (m + n + 1) == 0;
          bool ok = (diff == 0) == divides && (diff == 0 || diff == 1);
          ok = ok && k_star(c, d, m, n) == k_star(d, c, n, m) && k_low(c, d, m, n) == k_low(d, c, n, m);
          if (!ok) CHECK_MESSAGE(ok, c << d << m << n);
        }
}

TEST_CASE("big binomials do not overflow") {
  const BigInt big = basis(20, 20, 40, 40);
  CHECK(big == BigInt(binom128(60, 20)) * BigInt(binom128(60, 20)));
  CHECK(big > BigInt(std::numeric_limits<std::int64_t>::max()));
}

TEST_CASE("floor and ceiling division with negative numerators") {
  CHECK(floor_div(-7, 2) == -4);
  CHECK(ceil_div(-7, 2) == -3);
  CHECK(floor_div(7, 2) == 3);
  CHECK(ceil_div(7, 2) == 4);
  CHECK(floor_div(-6, 3) == -2);
  CHECK_THROWS(floor_div(1, 0));
}

TEST_CASE("out-of-range arguments are rejected") {
  CHECK_THROWS_AS(f(0, 3), std::domain_error);
  CHECK_THROWS_AS(b(-1), std::domain_error);
  CHECK_THROWS_AS(v(0), std::domain_error);
  CHECK_THROWS_AS(k_low(3, 3, -1, 0), std::domain_error);
  CHECK_THROWS_AS(find_lemma("no-such-lemma"), std::invalid_argument);
}

TEST_CASE("every registered lemma verifies on 1..40") {
  const auto start = std::chrono::steady_clock::now();
  auto rows = verify_all({1, 40, true});
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  for (const auto& r : rows) {
    CHECK_MESSAGE(r.ok(), r.id << " " << (r.ok() ? "" : r.counterexamples[0].detail) << " at m="
                                << (r.ok() ? 0 : r.counterexamples[0].m) << " n="
                                << (r.ok() ? 0 : r.counterexamples[0].n));
    CHECK(r.checked > 0);
  }
  CHECK(rows.size() >= 40);
  CHECK(secs < 5.0);
}

TEST_CASE("patterns over long ranges") {
  CHECK(verify_lemma("b-diff-mod3", {3, 60}).ok());
  CHECK(verify_lemma("v-diff-mod3", {4, 60}).ok());
  CHECK(verify_lemma("b-diff3", {4, 60}).ok());
}

TEST_CASE("excluded pairs genuinely violate their inequalities") {
  auto r = verify_lemma("kdown44-vs-kup34", {1, 40, false});
  REQUIRE(r.counterexamples.size() == 1);
  CHECK(r.counterexamples[0].m == 2);
  CHECK(r.counterexamples[0].n == 2);
  CHECK(k_low(4, 4, 2, 2) - k_low(4, 4, 1, 2) == 26);
  CHECK(k_star(3, 4, 2, 2) == 25);

  auto q = verify_lemma("kdown34-vs-kup33", {1, 40, false});
  REQUIRE(q.counterexamples.size() == 1);
  CHECK(q.counterexamples[0].m == 1);
  CHECK(q.counterexamples[0].n == 3);
}

TEST_CASE("vdim lemmas read the same virtual dimension as the scheme module") {
  for (int m = 1; m <= 6; ++m)
    for (int n = 1; n <= 6; ++n) {
      const BigInt kk = 1 + k_star(3, 3, m, n) - k_star(3, 3, m - 1, n);
      MultiProjectiveSpace sp({m, n});
      auto sch = make_scheme(sp, SchemeType{{{2, static_cast<std::int64_t>(kk)}}});
      CHECK(BigInt(virtual_dim(sp, Multidegree({2, 3}), sch)) ==
            virtual_dim({m, n}, {2, 3}, SchemeType{{{2, static_cast<std::int64_t>(kk)}}}));
    }
}

TEST_CASE("ledger output") {
  auto r = verify_lemma("j-closed", {1, 5});
  auto j = result_json(r);
  CHECK(j["status"] == "verified");
  CHECK(j["checked"] == 5);
  auto t = result_table({r});
  CHECK(t.find("j-closed") != std::string::npos);
}
