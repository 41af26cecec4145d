#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "fatpoints/basis.hpp"

namespace fatpoints {

using BigInt = boost::multiprecision::cpp_int;

struct PointSpec {
  std::optional<CoordinateSubvariety> stratum;
  // Projective coordinates per factor; entries are integers (reduced mod p by the engine).
  std::optional<std::vector<std::vector<std::int64_t>>> coords;

  bool on(const CoordinateSubvariety& sub) const { return stratum && stratum->inside(sub); }
  bool operator==(const PointSpec&) const = default;
};

struct FatPoint {
  PointSpec spec;
  int multiplicity = 1;
  bool operator==(const FatPoint&) const = default;
};

// Degree-`order` Taylor part at points[point] vanishes at `direction`, a vector over the
// affine coordinates of the point's chart (factor-major, chart coordinate skipped).
struct JetCondition {
  std::size_t point = 0;
  std::vector<std::int64_t> direction;
  int order = 3;
  bool operator==(const JetCondition&) const = default;
};

struct FatPointScheme {
  std::vector<FatPoint> points;
  std::vector<JetCondition> jets;
  std::vector<CoordinateSubvariety> contained;

  void validate(const MultiProjectiveSpace& space) const;
  bool operator==(const FatPointScheme&) const = default;
};

// (a_1^{e_1}, ...): groups in order; repeated multiplicities stay separate groups.
struct SchemeType {
  struct Group {
    int multiplicity = 1;
    std::int64_t count = 1;
    bool operator==(const Group&) const = default;
  };
  std::vector<Group> groups;

  std::int64_t point_count() const;
  std::string to_string() const;
  // Grammar: "3,2^15,1^6", optional surrounding parentheses; "" is the empty type.
  static SchemeType parse(const std::string& text);
  bool operator==(const SchemeType&) const = default;
};

// Type of a scheme, merging consecutive points of equal multiplicity and stratum.
SchemeType scheme_type(const FatPointScheme& scheme);

std::int64_t conditions_of_fat_point(int a, int N);

std::int64_t virtual_dim(const MultiProjectiveSpace& space, const Multidegree& deg,
                         const FatPointScheme& scheme);
std::int64_t expected_dim(const MultiProjectiveSpace& space, const Multidegree& deg,
                          const FatPointScheme& scheme);

// Arbitrary-precision form for general points of the given type (no jets, no contained set).
// A factor of dimension 0 contributes binom(d, 0) = 1 to the basis and 0 to the ambient dimension.
BigInt virtual_dim(const std::vector<int>& factor_dims, const std::vector<int>& degrees,
                   const SchemeType& type);

// strata[g] places every point of group g on that subvariety; missing entries mean general.
FatPointScheme make_scheme(const MultiProjectiveSpace& space, const SchemeType& type,
                           const std::vector<std::optional<CoordinateSubvariety>>& strata = {});

}  // namespace fatpoints
