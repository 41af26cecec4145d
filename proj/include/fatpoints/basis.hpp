#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace fatpoints {

// P^{n_1} x ... x P^{n_k}.
struct MultiProjectiveSpace {
  std::vector<int> factor_dims;

  MultiProjectiveSpace() = default;
  explicit MultiProjectiveSpace(std::vector<int> dims);

  int factors() const { return static_cast<int>(factor_dims.size()); }
  int ambient_dim() const;
  int point_coordinate_count() const;
  // "1x2" style label.
  std::string label() const;
  static MultiProjectiveSpace parse(const std::string& text);

  bool operator==(const MultiProjectiveSpace&) const = default;
};

struct Multidegree {
  std::vector<int> degrees;

  Multidegree() = default;
  explicit Multidegree(std::vector<int> degs);

  std::string label() const;
  static Multidegree parse(const std::string& text);

  bool operator==(const Multidegree&) const = default;
};

void require_match(const MultiProjectiveSpace& space, const Multidegree& deg);

struct Monomial {
  // exponents[i] has length n_i + 1 and sums to d_i.
  std::vector<std::vector<int>> exponents;

  std::string to_string() const;
  auto operator<=>(const Monomial&) const = default;
};

struct CoordinateSubvariety {
  // vanishing[i]: sorted coordinate indices of factor i that vanish.
  std::vector<std::vector<int>> vanishing;

  CoordinateSubvariety() = default;
  explicit CoordinateSubvariety(std::vector<std::vector<int>> v);

  int codimension() const;
  bool vanishes(int factor, int coord) const;
  // Throws std::invalid_argument if the description does not fit the space.
  void validate(const MultiProjectiveSpace& space) const;
  // Contained in other, i.e. every coordinate vanishing on other also vanishes here.
  bool inside(const CoordinateSubvariety& other) const;

  // "0.1+1.0" : factor.coordinate terms joined by '+'.
  std::string label() const;
  static CoordinateSubvariety parse(const std::string& text, int factors);

  bool operator==(const CoordinateSubvariety&) const = default;
};

std::int64_t binomial(std::int64_t n, std::int64_t k);

// Closed-form basis size, prod binom(n_i + d_i, n_i).
std::int64_t basis_size(const MultiProjectiveSpace& space, const Multidegree& deg);

// Factor-major; within a factor lexicographic from coordinate 0 (x_0^d first).
std::vector<Monomial> monomial_basis(const MultiProjectiveSpace& space, const Multidegree& deg);

bool in_ideal(const Monomial& m, const CoordinateSubvariety& sub);

// Monomials of the basis lying in the intersection of the ideals; an empty list gives the full basis.
std::vector<Monomial> ideal_basis(const MultiProjectiveSpace& space, const Multidegree& deg,
                                  const std::vector<CoordinateSubvariety>& subs);

}  // namespace fatpoints
