#pragma once

#include <cstdint>
#include <vector>

namespace fatpoints {

// Arithmetic in F_p for odd p < 2^31, with Barrett reduction of 62-bit products.
class PrimeField {
 public:
  explicit PrimeField(std::uint64_t p);

  std::uint64_t prime() const { return p_; }

  std::uint64_t reduce(std::uint64_t x) const {
    std::uint64_t q = static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * m_) >> 64);
    std::uint64_t r = x - q * p_;
    return r >= p_ ? r - p_ : r;
  }
  std::uint64_t from_signed(std::int64_t x) const;
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return a >= b ? a - b : a + p_ - b; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return reduce(a * b); }
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;
  std::uint64_t inv(std::uint64_t a) const;

 private:
  std::uint64_t p_;
  std::uint64_t m_;  // floor(2^64 / p)
};

bool is_probable_prime(std::uint64_t n);

// Row-major dense matrix over F_p.
struct ModMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<std::uint32_t> data;

  ModMatrix() = default;
  ModMatrix(int r, int c) : rows(r), cols(c), data(static_cast<std::size_t>(r) * c, 0) {}
  std::uint32_t* row(int i) { return data.data() + static_cast<std::size_t>(i) * cols; }
  const std::uint32_t* row(int i) const { return data.data() + static_cast<std::size_t>(i) * cols; }
  std::uint32_t& at(int i, int j) { return data[static_cast<std::size_t>(i) * cols + j]; }
  std::uint32_t at(int i, int j) const { return data[static_cast<std::size_t>(i) * cols + j]; }
};

// Gaussian elimination, columns left to right; the pivot is the first remaining row
// (smallest index) with a nonzero entry in the current column.
int rank_fp(ModMatrix m, const PrimeField& field);

}  // namespace fatpoints
