#pragma once

#include <utility>
#include <vector>

#include <Eigen/Core>

#include "cspline/grid.hpp"
#include "cspline/types.hpp"

namespace cspline {

/// Piecewise-polynomial degree d and continuity order r, 0 <= r <= d.
struct SplineConfig {
    int degree;
    int continuity;

    /// Throws std::invalid_argument unless 0 <= continuity <= degree.
    SplineConfig(int d, int r);

    bool operator==(const SplineConfig&) const = default;
};

/// Marks a column factor as the global (untruncated) block for its axis.
inline constexpr int kGlobalPiece = 0;

/// One basis column: the product u^p * v^q of two building blocks.
///
/// The x-factor u is either the global block (x - a_x) - (I-1)*dx, written
/// x_piece == kGlobalPiece, or the truncated block (x - a_x) - i*dx that is
/// active only on cells with x-index <= i. Global factors appear when the
/// exponent does not exceed the continuity order (p <= r); truncated factors
/// carry one column per piece. The y-factor mirrors this with J, dy, q.
struct ColumnDescriptor {
    int p;        ///< x exponent
    int q;        ///< y exponent
    int x_piece;  ///< kGlobalPiece or 1..I
    int y_piece;  ///< kGlobalPiece or 1..J

    bool x_global() const { return x_piece == kGlobalPiece; }
    bool y_global() const { return y_piece == kGlobalPiece; }

    bool operator==(const ColumnDescriptor&) const = default;
};

/// The full ordered column set of a smooth piecewise-polynomial base.
///
/// Column order is canonical and frozen: terms (p, q) by total degree
/// ascending then p ascending; within a term, x pieces vary slower than
/// y pieces. Serialized models rely on this order.
struct BasisLayout {
    GridSpec grid;
    SplineConfig config;
    std::vector<ColumnDescriptor> columns;

    int dimension() const { return static_cast<int>(columns.size()); }
};

/// Value of the x building block u_i at x: (x - a_x) - i*dx for i < I and
/// (x - a_x) - (I-1)*dx for the global block i = I. Vanishes at the i-th
/// interior break. Throws std::out_of_range unless 1 <= i <= I.
double u_value(int i, double x, const GridSpec& grid);

/// y-axis analogue of u_value.
double v_value(int j, double y, const GridSpec& grid);

/// Whether block u_i contributes on cell row k, i.e. k <= i*J (equivalently
/// the x-index of cell k is <= i). The i = I block is active on every row.
bool u_active(int k, int i, const GridSpec& grid);

/// Whether block v_j contributes on cell row k: the y-index of cell k is <= j.
bool v_active(int k, int j, const GridSpec& grid);

/// Number of columns: sum over 0 <= p+q <= d of (p <= r ? 1 : I)*(q <= r ? 1 : J).
int basis_dimension(const GridSpec& grid, const SplineConfig& config);

/// Builds the canonical ordered column list for (grid, config).
BasisLayout column_layout(const GridSpec& grid, const SplineConfig& config);

/// Row k of the base evaluated at (x, y): entry u^p * v^q per column, with
/// inactive blocks contributing 0 and 0^0 == 1. Any k in 1..K may be forced,
/// e.g. to take one-sided limits at a cell boundary.
Eigen::VectorXd eval_row(double x, double y, int k, const BasisLayout& layout);

/// Row of the partial derivative d^s/dx^s d^t/dy^t of every column at (x, y),
/// on cell row k. Entries are p!/(p-s)! u^(p-s) * q!/(q-t)! v^(q-t) for active
/// columns with p >= s and q >= t, else 0.
Eigen::VectorXd eval_row_deriv(double x, double y, int k, int s, int t,
                               const BasisLayout& layout);

/// N x m design matrix: row n is eval_row at data point n on its own cell,
/// plus the per-point cell numbers. Throws std::domain_error (naming the
/// 1-based point) if a point falls outside the closed domain.
std::pair<Eigen::MatrixXd, std::vector<int>> design_matrix(const Dataset& data,
                                                           const GridSpec& grid,
                                                           const BasisLayout& layout);

}  // namespace cspline
