#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "cspline/basis.hpp"
#include "cspline/grid.hpp"
#include "cspline/types.hpp"

namespace cspline::oracle {

/// One local monomial x~^p * y~^q attached to cell k, where (x~, y~) are the
/// coordinates relative to that cell's low corner.
struct LocalMonomial {
    int k;
    int p;
    int q;
};

/// The raw per-cell polynomial base: K blocks of (d+1)(d+2)/2 local
/// monomials, ordered block by block, within a block by total degree
/// ascending then x exponent descending (1, x, y, x^2, xy, y^2, ...).
struct PiecewiseBaseLayout {
    GridSpec grid;
    int degree;
    std::vector<LocalMonomial> columns;

    int dimension() const { return static_cast<int>(columns.size()); }
    int block_size() const { return (degree + 1) * (degree + 2) / 2; }
};

PiecewiseBaseLayout piecewise_layout(const GridSpec& grid, int degree);

/// Row of the per-cell base at (x, y) forced onto cell k: local monomials of
/// block k evaluated at the shifted coordinates, zeros in every other block.
Eigen::VectorXd piecewise_base_row(double x, double y, int k,
                                   const PiecewiseBaseLayout& layout);

/// Same with the analytic partial derivative d^s/dx^s d^t/dy^t applied.
Eigen::VectorXd piecewise_base_row_deriv(double x, double y, int k, int s, int t,
                                         const PiecewiseBaseLayout& layout);

/// Where a constraint row came from: the boundary between cell (i, j) and its
/// neighbour to the right (vertical) or above (horizontal), the order of the
/// matched normal derivative, and the matched power of the variable running
/// along the boundary.
struct ConstraintInfo {
    bool vertical;
    int i;
    int j;
    int deriv_order;
    int matched_power;
};

/// Cross-boundary smoothness constraints on the stacked per-cell coefficients.
///
/// For each interior boundary and each normal-derivative order s = 0..r, the
/// polynomial identity "left limit equals right limit for every position along
/// the boundary" is split into one numeric row per power of the
/// boundary-parallel variable. H0 holds an orthonormal null-space basis of H;
/// any coefficient vector in its column span is C^r across every boundary.
struct SmoothnessSystem {
    GridSpec grid;
    SplineConfig config;
    PiecewiseBaseLayout base;
    Eigen::MatrixXd H;
    std::vector<ConstraintInfo> rows;
    Eigen::MatrixXd H0;
};

/// Builds H and its row bookkeeping; H0 is left empty.
SmoothnessSystem smoothness_matrix(const GridSpec& grid, const SplineConfig& config);

/// smoothness_matrix plus the null-space basis H0 at the given tolerance.
SmoothnessSystem smoothness_system(const GridSpec& grid, const SplineConfig& config,
                                   double tol = kDefaultTol);

/// Evaluates the constrained base B0 = (per-cell base) * H0 at the sample
/// points, one row per point, the point's own cell selecting the block.
Eigen::MatrixXd null_base_eval(const SmoothnessSystem& system,
                               const std::vector<Point>& samples);

/// Outcome of the three-rank span comparison.
struct SpanReport {
    int rank_a = 0;
    int rank_b = 0;
    int rank_joint = 0;
    bool equivalent = false;
};

/// True iff rank(A) == rank(B) == rank([A | B]) at tolerance tol. Requires at
/// least twice as many rows as the wider matrix has columns; fewer samples
/// would make the rank comparison unreliable and raise std::invalid_argument.
SpanReport span_equivalent(const Eigen::MatrixXd& A, const Eigen::MatrixXd& B,
                           double tol = kDefaultTol);

/// Largest left-right mismatch found for one boundary and derivative pair,
/// maximized over basis columns and sampled boundary points.
struct BoundaryGap {
    bool vertical;
    int i;
    int j;
    int s;
    int t;
    double max_gap;
    int worst_column;
};

struct ContinuityReport {
    double tol = 0.0;
    double max_gap = 0.0;
    bool vacuous = false;  ///< no interior boundaries to check
    bool passed = false;
    std::vector<BoundaryGap> gaps;
};

/// Compares analytic one-sided limits of every basis column across every
/// interior boundary for all derivative pairs (s, t) with s + t <= r, at
/// seeded sample points along each boundary.
ContinuityReport continuity_audit(const BasisLayout& layout, double tol,
                                  int samples_per_boundary,
                                  std::uint64_t seed = kDefaultSeed);

}  // namespace cspline::oracle
