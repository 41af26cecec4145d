#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "fatpoints/engine.hpp"

namespace fatpoints {

struct SecantQuery {
  MultiProjectiveSpace space;
  Multidegree degree;
  std::int64_t r = 1;
};

struct SecantVerdict {
  std::int64_t r = 0;
  std::int64_t expected_dim = 0;
  std::int64_t actual_dim = 0;
  std::int64_t defect = 0;
  bool defective = false;
  // False when the underlying verdict is only evidence (SpecialCandidate or Inconclusive).
  bool certified = false;
  DimensionVerdict system;  // L(2^r)
};

std::int64_t secant_expected_dim(const SecantQuery& q);
// Terracini: dim sigma_r = (basis - 1) - dim L(2^r).
SecantVerdict secant_dim(const SecantQuery& q, const PrimeFieldConfig& config);

// r_low = max s with vdim L(2^s) >= 0, r_high = r_low + 1.
std::pair<std::int64_t, std::int64_t> critical_r(const MultiProjectiveSpace& space, const Multidegree& deg);

enum class Defectivity { NonDefective, Defective, Undetermined };
std::string to_string(Defectivity d);

struct DefectivityReport {
  Defectivity verdict = Defectivity::Undetermined;
  std::int64_t r_low = 0;
  std::int64_t r_high = 0;
  SecantVerdict low;
  SecantVerdict high;
  std::optional<std::int64_t> failing_r;

  bool certified_non_defective() const { return verdict == Defectivity::NonDefective; }
};

// Certified non-defective iff L(2^{r_low}) is Regular and L(2^{r_high}) is Zero.
// The two systems run concurrently when parallel is set.
DefectivityReport is_defective(const MultiProjectiveSpace& space, const Multidegree& deg,
                               const PrimeFieldConfig& config, bool parallel = true);

struct HypothesisCheck {
  std::int64_t r = 0;
  bool applicable = false;  // r >= N + 1
  bool triple_regular = false;   // (1)
  bool quadruple_zero = false;   // (2)
  std::optional<DimensionVerdict> triple;
  std::optional<DimensionVerdict> quadruple;
};

struct HypothesisReport {
  std::int64_t ambient_dim = 0;
  std::int64_t basis = 0;
  std::int64_t dim_triple = 0;     // dim L(3)
  std::int64_t dim_quadruple = 0;  // dim L(4)
  bool jet_room = false;           // (3) dim L(3) - dim L(4) >= binom(N+1, 2)
  bool large_enough = false;       // (4) basis >= (N+1)^2
  std::vector<HypothesisCheck> per_r;

  bool pass() const;
};

HypothesisReport theorem_hypotheses(const MultiProjectiveSpace& space, const Multidegree& deg,
                                    const PrimeFieldConfig& config);

Json secant_json(const SecantQuery& q, const SecantVerdict& v, bool include_timing);
Json defectivity_json(const MultiProjectiveSpace& space, const Multidegree& deg, const DefectivityReport& r,
                      bool include_timing);
Json hypotheses_json(const MultiProjectiveSpace& space, const Multidegree& deg, const HypothesisReport& h);

}  // namespace fatpoints
