#pragma once

#include <cstdint>
#include <vector>

namespace cspline {

/// A location in the (x, y) plane.
struct Point {
    double x = 0.0;
    double y = 0.0;
};

/// One observed triple (x, y, z).
struct Observation {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

using Dataset = std::vector<Observation>;

/// Relative threshold used by all rank-revealing factorizations unless overridden.
inline constexpr double kDefaultTol = 1e-10;

/// Fixed seed for every internal sample-point generator; surfaced as a CLI flag.
inline constexpr std::uint64_t kDefaultSeed = 987654321;

}  // namespace cspline
