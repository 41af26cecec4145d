#include "fatpoints/modp.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace fatpoints {

PrimeField::PrimeField(std::uint64_t p) : p_(p), m_(0) {
  if (p < 3 || p >= (1ULL << 31) || p % 2 == 0)
    throw std::invalid_argument("prime must be odd and below 2^31, got " + std::to_string(p));
  m_ = ~0ULL / p;
}

std::uint64_t PrimeField::from_signed(std::int64_t x) const {
  std::int64_t r = x % static_cast<std::int64_t>(p_);
  if (r < 0) r += static_cast<std::int64_t>(p_);
  return static_cast<std::uint64_t>(r);
}

std::uint64_t PrimeField::pow(std::uint64_t a, std::uint64_t e) const {
  std::uint64_t r = 1;
  a %= p_;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

std::uint64_t PrimeField::inv(std::uint64_t a) const {
  if (a % p_ == 0) throw std::domain_error("inverse of zero");
  return pow(a, p_ - 2);
}

bool is_probable_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % q == 0) return n == q;
  }
  auto mulmod = [n](std::uint64_t a, std::uint64_t b) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % n);
  };
  auto powmod = [&](std::uint64_t a, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e) {
      if (e & 1) r = mulmod(r, a);
      a = mulmod(a, a);
      e >>= 1;
    }
    return r;
  };
  std::uint64_t d = n - 1;
  int s = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++s;
  }
  // Deterministic witness set for 64-bit inputs.
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

int rank_fp(ModMatrix m, const PrimeField& field) {
  const int R = m.rows, C = m.cols;
  const std::uint64_t p = field.prime();
  std::vector<int> order(R);
  std::iota(order.begin(), order.end(), 0);
  int rank = 0;
  for (int c = 0; c < C && rank < R; ++c) {
    int found = -1;
    for (int i = rank; i < R; ++i)
      if (m.row(order[i])[c] != 0) {
        found = i;
        break;
      }
    if (found < 0) continue;
    // Keep the remaining rows in their original relative order.
    int piv = order[found];
    for (int i = found; i > rank; --i) order[i] = order[i - 1];
    order[rank] = piv;

    std::uint32_t* prow = m.row(piv);
    const std::uint64_t inv = field.inv(prow[c]);
    for (int k = c; k < C; ++k) prow[k] = static_cast<std::uint32_t>(field.mul(prow[k], inv));
    for (int i = rank + 1; i < R; ++i) {
      std::uint32_t* r = m.row(order[i]);
      const std::uint64_t e = r[c];
      if (e == 0) continue;
      const std::uint64_t neg = p - e;
      r[c] = 0;
      for (int k = c + 1; k < C; ++k) {
        if (prow[k] == 0) continue;
        r[k] = static_cast<std::uint32_t>(field.reduce(r[k] + neg * prow[k]));
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace fatpoints
