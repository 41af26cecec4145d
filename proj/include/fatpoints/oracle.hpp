#pragma once

#include <cstdint>

#include "fatpoints/scheme.hpp"

namespace fatpoints {

// Rank over Q of the conditions imposed by a scheme whose points are all pinned.
// Fat points use every homogeneous partial derivative of order < a evaluated at the
// unnormalized integer coordinates; jets use exact rational chart coordinates.
// Independent of the modular engine; intended for tests and provenance checks.
std::int64_t exact_rank_oracle(const MultiProjectiveSpace& space, const Multidegree& deg,
                               const FatPointScheme& scheme);

// cols - rank for the same system.
std::int64_t exact_dimension(const MultiProjectiveSpace& space, const Multidegree& deg,
                             const FatPointScheme& scheme);

}  // namespace fatpoints
