#pragma once

#include "cspline/types.hpp"

namespace cspline {

/// Rectangular partitioning of the domain [a_x, b_x] x [a_y, b_y] into
/// I x J equally sized cells. Cells are addressed either by axis indices
/// (i, j), both 1-based, or by the linear index k = (i-1)*J + j.
struct GridSpec {
    double a_x, b_x;
    double a_y, b_y;
    int I, J;

    /// Throws std::invalid_argument unless a_x < b_x, a_y < b_y, I >= 1, J >= 1.
    GridSpec(double ax, double bx, double ay, double by, int nx, int ny);

    double dx() const { return (b_x - a_x) / I; }
    double dy() const { return (b_y - a_y) / J; }
    int cell_count() const { return I * J; }

    bool contains(double x, double y) const {
        return a_x <= x && x <= b_x && a_y <= y && y <= b_y;
    }

    bool operator==(const GridSpec&) const = default;
};

/// Cell address in both index systems; k = (i-1)*J + j always holds.
struct PartitionId {
    int i;
    int j;
    int k;
};

/// Linear cell number for axis indices (i, j). Throws std::out_of_range
/// unless 1 <= i <= I and 1 <= j <= J.
int partition_index(int i, int j, const GridSpec& grid);

/// Inverse of partition_index. Throws std::out_of_range unless 1 <= k <= I*J.
PartitionId partition_coords(int k, const GridSpec& grid);

/// Cell containing (x, y): i = ceil((x - a_x)/dx) clamped to [1, I], likewise j.
/// A point exactly on an interior boundary belongs to the lower-index cell.
/// Without `clamp`, points outside the closed domain raise std::domain_error;
/// with it, indices are clamped to the nearest cell (extrapolation).
PartitionId locate(double x, double y, const GridSpec& grid, bool clamp = false);

}  // namespace cspline
