#include "cspline/basis.hpp"

#include <sstream>
#include <stdexcept>

namespace cspline {

namespace {

double ipow(double base, int n) {
    double result = 1.0;
    for (; n > 0; --n) result *= base;
    return result;
}

// p! / (p - s)!, the coefficient picked up by differentiating x^p s times.
double falling_factorial(int p, int s) {
    double result = 1.0;
    for (int f = p; f > p - s; --f) result *= f;
    return result;
}

void check_block_index(int idx, int n, char axis) {
    if (idx < 1 || idx > n) {
        std::ostringstream msg;
        msg << "basis: " << axis << " block index " << idx << " outside 1.." << n;
        throw std::out_of_range(msg.str());
    }
}

}  // namespace

SplineConfig::SplineConfig(int d, int r) : degree(d), continuity(r) {
    if (d < 0) throw std::invalid_argument("basis: degree must be non-negative");
    if (r < 0) throw std::invalid_argument("basis: continuity order must be non-negative");
    if (r > d) throw std::invalid_argument("basis: continuity order must not exceed degree");
}

double u_value(int i, double x, const GridSpec& grid) {
    check_block_index(i, grid.I, 'x');
    const int shift = (i == grid.I) ? grid.I - 1 : i;
    return (x - grid.a_x) - shift * grid.dx();
}

double v_value(int j, double y, const GridSpec& grid) {
    check_block_index(j, grid.J, 'y');
    const int shift = (j == grid.J) ? grid.J - 1 : j;
    return (y - grid.a_y) - shift * grid.dy();
}

bool u_active(int k, int i, const GridSpec& grid) {
    check_block_index(i, grid.I, 'x');
    if (k < 1 || k > grid.cell_count()) throw std::out_of_range("basis: cell row out of range");
    return k <= i * grid.J;
}

bool v_active(int k, int j, const GridSpec& grid) {
    check_block_index(j, grid.J, 'y');
    if (k < 1 || k > grid.cell_count()) throw std::out_of_range("basis: cell row out of range");
    return partition_coords(k, grid).j <= j;
}

int basis_dimension(const GridSpec& grid, const SplineConfig& config) {
    int m = 0;
    for (int total = 0; total <= config.degree; ++total) {
        for (int p = 0; p <= total; ++p) {
            const int q = total - p;
            m += (p <= config.continuity ? 1 : grid.I) * (q <= config.continuity ? 1 : grid.J);
        }
    }
    return m;
}

BasisLayout column_layout(const GridSpec& grid, const SplineConfig& config) {
    BasisLayout layout{grid, config, {}};
    layout.columns.reserve(static_cast<size_t>(basis_dimension(grid, config)));
    for (int total = 0; total <= config.degree; ++total) {
        for (int p = 0; p <= total; ++p) {
            const int q = total - p;
            const bool pg = p <= config.continuity;
            const bool qg = q <= config.continuity;
            // x pieces vary slower than y pieces
            for (int xi = pg ? 0 : 1; xi <= (pg ? 0 : grid.I); ++xi) {
                for (int yj = qg ? 0 : 1; yj <= (qg ? 0 : grid.J); ++yj) {
                    layout.columns.push_back({p, q, xi, yj});
                }
            }
        }
    }
    return layout;
}

Eigen::VectorXd eval_row(double x, double y, int k, const BasisLayout& layout) {
    return eval_row_deriv(x, y, k, 0, 0, layout);
}

Eigen::VectorXd eval_row_deriv(double x, double y, int k, int s, int t,
                               const BasisLayout& layout) {
    if (s < 0 || t < 0) throw std::invalid_argument("basis: derivative orders must be non-negative");
    const GridSpec& grid = layout.grid;
    if (k < 1 || k > grid.cell_count()) throw std::out_of_range("basis: cell row out of range");

    Eigen::VectorXd row(layout.dimension());
    for (int c = 0; c < layout.dimension(); ++c) {
        const ColumnDescriptor& col = layout.columns[static_cast<size_t>(c)];
        const int iu = col.x_global() ? grid.I : col.x_piece;
        const int jv = col.y_global() ? grid.J : col.y_piece;
        if (col.p < s || col.q < t || !u_active(k, iu, grid) || !v_active(k, jv, grid)) {
            row(c) = 0.0;
            continue;
        }
        const double u = u_value(iu, x, grid);
        const double v = v_value(jv, y, grid);
        row(c) = falling_factorial(col.p, s) * ipow(u, col.p - s) *
                 falling_factorial(col.q, t) * ipow(v, col.q - t);
    }
    return row;
}

std::pair<Eigen::MatrixXd, std::vector<int>> design_matrix(const Dataset& data,
                                                           const GridSpec& grid,
                                                           const BasisLayout& layout) {
    const auto n = static_cast<Eigen::Index>(data.size());
    Eigen::MatrixXd matrix(n, layout.dimension());
    std::vector<int> rows(data.size());
    for (Eigen::Index idx = 0; idx < n; ++idx) {
        const Observation& obs = data[static_cast<size_t>(idx)];
        if (!grid.contains(obs.x, obs.y)) {
            std::ostringstream msg;
            msg << "basis: data point " << idx + 1 << " of " << data.size() << " at ("
                << obs.x << ", " << obs.y << ") lies outside the domain";
            throw std::domain_error(msg.str());
        }
        const int k = locate(obs.x, obs.y, grid).k;
        rows[static_cast<size_t>(idx)] = k;
        matrix.row(idx) = eval_row(obs.x, obs.y, k, layout);
    }
    return {std::move(matrix), std::move(rows)};
}

}  // namespace cspline
