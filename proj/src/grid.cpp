#include "cspline/grid.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace cspline {

GridSpec::GridSpec(double ax, double bx, double ay, double by, int nx, int ny)
    : a_x(ax), b_x(bx), a_y(ay), b_y(by), I(nx), J(ny) {
    if (!(a_x < b_x) || !(a_y < b_y)) {
        throw std::invalid_argument("grid: domain bounds must satisfy a_x < b_x and a_y < b_y");
    }
    if (I < 1 || J < 1) {
        throw std::invalid_argument("grid: cell counts I and J must be at least 1");
    }
}

int partition_index(int i, int j, const GridSpec& grid) {
    if (i < 1 || i > grid.I || j < 1 || j > grid.J) {
        std::ostringstream msg;
        msg << "grid: cell (" << i << ", " << j << ") outside 1.." << grid.I
            << " x 1.." << grid.J;
        throw std::out_of_range(msg.str());
    }
    return (i - 1) * grid.J + j;
}

PartitionId partition_coords(int k, const GridSpec& grid) {
    if (k < 1 || k > grid.cell_count()) {
        std::ostringstream msg;
        msg << "grid: cell number " << k << " outside 1.." << grid.cell_count();
        throw std::out_of_range(msg.str());
    }
    const int i = (k - 1) / grid.J + 1;
    const int j = (k - 1) % grid.J + 1;
    return {i, j, k};
}

namespace {

// ceil of the scaled offset, clamped to [1, n]. No epsilon snapping: a point
// exactly on an interior boundary yields an exact integer and lands in the
// lower cell; the domain's low edge clamps up to 1. Clamping happens on the
// double so far-out values never overflow the int cast.
int axis_cell(double value, double low, double width, int n) {
    const double raw = std::ceil((value - low) / width);
    if (!(raw > 1)) return 1;
    if (!(raw < n)) return n;
    return static_cast<int>(raw);
}

}  // namespace

PartitionId locate(double x, double y, const GridSpec& grid, bool clamp) {
    if (!std::isfinite(x) || !std::isfinite(y)) {
        throw std::invalid_argument("grid: point coordinates must be finite");
    }
    if (!clamp && !grid.contains(x, y)) {
        std::ostringstream msg;
        msg << "grid: point (" << x << ", " << y << ") outside domain ["
            << grid.a_x << ", " << grid.b_x << "] x [" << grid.a_y << ", " << grid.b_y << "]";
        throw std::domain_error(msg.str());
    }
    const int i = axis_cell(x, grid.a_x, grid.dx(), grid.I);
    const int j = axis_cell(y, grid.a_y, grid.dy(), grid.J);
    return {i, j, (i - 1) * grid.J + j};
}

}  // namespace cspline
