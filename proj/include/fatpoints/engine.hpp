#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "fatpoints/json_io.hpp"
#include "fatpoints/modp.hpp"
#include "fatpoints/scheme.hpp"

namespace fatpoints {

inline constexpr std::uint64_t kDefaultPrime = 2147483647ULL;
inline constexpr std::uint64_t kAlternatePrime = 2147483629ULL;
inline constexpr int kMaxColumns = 4096;

struct PrimeFieldConfig {
  std::uint64_t prime = kDefaultPrime;
  std::uint64_t seed = 1;
  int retries = 3;
  std::vector<std::uint64_t> alternate_primes{kAlternatePrime};

  void validate() const;
};

enum class Status { Regular, Zero, SpecialCandidate, Inconclusive };
std::string to_string(Status s);
Status status_from_string(const std::string& s);

struct RowProvenance {
  int point = -1;          // index into scheme.points, -1 for a jet row
  std::vector<int> beta;   // derivative multi-index over the chart's affine coordinates
  int jet = -1;            // index into scheme.jets, -1 for a derivative row
};

struct InterpolationMatrix {
  ModMatrix matrix;
  std::vector<RowProvenance> provenance;
  std::uint64_t prime = 0;
  std::uint64_t seed = 0;

  int rows() const { return matrix.rows; }
  int cols() const { return matrix.cols; }
};

struct Certificate {
  std::uint64_t prime = 0;
  std::uint64_t seed = 0;
  int rows = 0;
  int cols = 0;
  int rank = 0;
  int retry_count = 0;
  double elapsed_ms = 0;
};

struct DimensionVerdict {
  std::int64_t computed_dim = 0;
  std::int64_t virtual_dim = 0;
  std::int64_t expected_dim = 0;
  Status status = Status::Inconclusive;
  Certificate certificate;
  std::vector<std::int64_t> run_dims;  // one entry per attempt, in order

  bool certified() const { return status == Status::Regular || status == Status::Zero; }
  // Regular is also satisfied by an empty system with vdim 0.
  bool certifies(Status expected) const;
};

// Seed used by retry attempt i (attempt 0 uses the configured seed itself).
std::uint64_t attempt_seed(std::uint64_t seed, int attempt);

// Uniform draw in [0, bound), portable across standard libraries.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

// Normalized coordinates of every point (first nonzero coordinate of each factor is 1).
using PointCoords = std::vector<std::vector<std::uint64_t>>;
std::vector<PointCoords> point_coordinates(const MultiProjectiveSpace& space, const FatPointScheme& scheme,
                                           const PrimeField& field, std::uint64_t seed);

// Pins every unpinned point to the coordinates the engine would draw from (prime, seed).
FatPointScheme concretize(const MultiProjectiveSpace& space, const FatPointScheme& scheme,
                          std::uint64_t prime, std::uint64_t seed);

std::vector<Monomial> system_basis(const MultiProjectiveSpace& space, const Multidegree& deg,
                                   const FatPointScheme& scheme);

InterpolationMatrix build_matrix(const MultiProjectiveSpace& space, const Multidegree& deg,
                                 const FatPointScheme& scheme, std::uint64_t prime, std::uint64_t seed);
InterpolationMatrix build_matrix(const MultiProjectiveSpace& space, const Multidegree& deg,
                                 const FatPointScheme& scheme, const PrimeFieldConfig& config);

int rank_fp(const InterpolationMatrix& m);

// Retries with fresh seeds, then the alternate primes; reports the minimum over all runs.
DimensionVerdict dimension(const MultiProjectiveSpace& space, const Multidegree& deg,
                           const FatPointScheme& scheme, const PrimeFieldConfig& config);

// {space, degree, scheme_type, strata, computed_dim, vdim, status, prime, seed, rank, rows, cols[, elapsed_ms]}
Json verdict_json(const MultiProjectiveSpace& space, const Multidegree& deg, const FatPointScheme& scheme,
                  const DimensionVerdict& v, bool include_timing);

}  // namespace fatpoints
