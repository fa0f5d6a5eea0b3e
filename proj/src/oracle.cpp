#include "cspline/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "cspline/linalg.hpp"

namespace cspline::oracle {

namespace {

double ipow(double base, int n) {
    double result = 1.0;
    for (; n > 0; --n) result *= base;
    return result;
}

double falling_factorial(int p, int s) {
    double result = 1.0;
    for (int f = p; f > p - s; --f) result *= f;
    return result;
}

}  // namespace

PiecewiseBaseLayout piecewise_layout(const GridSpec& grid, int degree) {
    if (degree < 0) throw std::invalid_argument("oracle: degree must be non-negative");
    PiecewiseBaseLayout layout{grid, degree, {}};
    for (int k = 1; k <= grid.cell_count(); ++k) {
        for (int total = 0; total <= degree; ++total) {
            for (int p = total; p >= 0; --p) {
                layout.columns.push_back({k, p, total - p});
            }
        }
    }
    return layout;
}

Eigen::VectorXd piecewise_base_row(double x, double y, int k,
                                   const PiecewiseBaseLayout& layout) {
    return piecewise_base_row_deriv(x, y, k, 0, 0, layout);
}

Eigen::VectorXd piecewise_base_row_deriv(double x, double y, int k, int s, int t,
                                         const PiecewiseBaseLayout& layout) {
    const GridSpec& grid = layout.grid;
    const PartitionId cell = partition_coords(k, grid);
    const double lx = x - (grid.a_x + (cell.i - 1) * grid.dx());
    const double ly = y - (grid.a_y + (cell.j - 1) * grid.dy());

    Eigen::VectorXd row = Eigen::VectorXd::Zero(layout.dimension());
    const int block = layout.block_size();
    const int offset = (k - 1) * block;
    for (int c = 0; c < block; ++c) {
        const LocalMonomial& mono = layout.columns[static_cast<size_t>(offset + c)];
        if (mono.p < s || mono.q < t) continue;
        row(offset + c) = falling_factorial(mono.p, s) * ipow(lx, mono.p - s) *
                          falling_factorial(mono.q, t) * ipow(ly, mono.q - t);
    }
    return row;
}

namespace {

// Appends the rows matching d^order/dn^order across one boundary, where n is
// the normal axis. The left cell is evaluated at local offset `width` on that
// axis, the right cell at 0; both share the boundary-parallel coordinate.
// Matching per power of the parallel variable turns the polynomial identity
// into numeric rows: for parallel power w,
//   sum_{n_exp >= order} c_left[n_exp, w] * n_exp!/(n_exp-order)! * width^(n_exp-order)
//     - order! * c_right[order, w] = 0.
void append_boundary_rows(std::vector<Eigen::RowVectorXd>& rows,
                          std::vector<ConstraintInfo>& infos,
                          const PiecewiseBaseLayout& base, bool vertical, int i, int j,
                          int k_left, int k_right, double width, int degree,
                          int continuity) {
    const int block = base.block_size();
    const int left_off = (k_left - 1) * block;
    const int right_off = (k_right - 1) * block;

    for (int order = 0; order <= continuity; ++order) {
        for (int w = 0; w <= degree - order; ++w) {
            Eigen::RowVectorXd row = Eigen::RowVectorXd::Zero(base.dimension());
            for (int c = 0; c < block; ++c) {
                const LocalMonomial& mono = base.columns[static_cast<size_t>(left_off + c)];
                const int n_exp = vertical ? mono.p : mono.q;
                const int w_exp = vertical ? mono.q : mono.p;
                if (w_exp != w || n_exp < order) continue;
                row(left_off + c) += falling_factorial(n_exp, order) * ipow(width, n_exp - order);
            }
            for (int c = 0; c < block; ++c) {
                const LocalMonomial& mono = base.columns[static_cast<size_t>(right_off + c)];
                const int n_exp = vertical ? mono.p : mono.q;
                const int w_exp = vertical ? mono.q : mono.p;
                if (n_exp == order && w_exp == w) {
                    row(right_off + c) -= falling_factorial(order, order);
                }
            }
            rows.push_back(std::move(row));
            infos.push_back({vertical, i, j, order, w});
        }
    }
}

}  // namespace

SmoothnessSystem smoothness_matrix(const GridSpec& grid, const SplineConfig& config) {
    SmoothnessSystem system{grid, config, piecewise_layout(grid, config.degree),
                            Eigen::MatrixXd(), {}, Eigen::MatrixXd()};
    std::vector<Eigen::RowVectorXd> rows;

    for (int i = 1; i < grid.I; ++i) {
        for (int j = 1; j <= grid.J; ++j) {
            append_boundary_rows(rows, system.rows, system.base, true, i, j,
                                 partition_index(i, j, grid), partition_index(i + 1, j, grid),
                                 grid.dx(), config.degree, config.continuity);
        }
    }
    for (int i = 1; i <= grid.I; ++i) {
        for (int j = 1; j < grid.J; ++j) {
            append_boundary_rows(rows, system.rows, system.base, false, i, j,
                                 partition_index(i, j, grid), partition_index(i, j + 1, grid),
                                 grid.dy(), config.degree, config.continuity);
        }
    }

    system.H.resize(static_cast<Eigen::Index>(rows.size()), system.base.dimension());
    for (Eigen::Index r = 0; r < system.H.rows(); ++r) {
        system.H.row(r) = rows[static_cast<size_t>(r)];
    }
    return system;
}

SmoothnessSystem smoothness_system(const GridSpec& grid, const SplineConfig& config,
                                   double tol) {
    SmoothnessSystem system = smoothness_matrix(grid, config);
    system.H0 = null_space(system.H, tol);
    return system;
}

Eigen::MatrixXd null_base_eval(const SmoothnessSystem& system,
                               const std::vector<Point>& samples) {
    if (system.H0.rows() != system.base.dimension()) {
        throw std::logic_error("oracle: null-space basis not computed");
    }
    Eigen::MatrixXd raw(static_cast<Eigen::Index>(samples.size()), system.base.dimension());
    for (Eigen::Index n = 0; n < raw.rows(); ++n) {
        const Point& pt = samples[static_cast<size_t>(n)];
        const int k = locate(pt.x, pt.y, system.grid).k;
        raw.row(n) = piecewise_base_row(pt.x, pt.y, k, system.base);
    }
    return raw * system.H0;
}

SpanReport span_equivalent(const Eigen::MatrixXd& A, const Eigen::MatrixXd& B, double tol) {
    if (A.rows() != B.rows()) {
        throw std::invalid_argument("oracle: span comparison needs matching sample rows");
    }
    const Eigen::Index needed = 2 * std::max(A.cols(), B.cols());
    if (A.rows() < needed) {
        throw std::invalid_argument("oracle: too few sample rows for a reliable span test");
    }
    Eigen::MatrixXd joint(A.rows(), A.cols() + B.cols());
    joint << A, B;

    SpanReport report;
    report.rank_a = numerical_rank(A, tol);
    report.rank_b = numerical_rank(B, tol);
    report.rank_joint = numerical_rank(joint, tol);
    report.equivalent = report.rank_a == report.rank_b && report.rank_b == report.rank_joint;
    return report;
}

ContinuityReport continuity_audit(const BasisLayout& layout, double tol,
                                  int samples_per_boundary, std::uint64_t seed) {
    if (samples_per_boundary < 1) {
        throw std::invalid_argument("oracle: need at least one sample per boundary");
    }
    const GridSpec& grid = layout.grid;
    const int r = layout.config.continuity;
    std::mt19937_64 rng(seed);

    ContinuityReport report;
    report.tol = tol;

    auto audit_boundary = [&](bool vertical, int i, int j) {
        const int k_lo = partition_index(i, j, grid);
        const int k_hi = vertical ? partition_index(i + 1, j, grid)
                                  : partition_index(i, j + 1, grid);
        // Sample along the boundary segment owned by this cell pair.
        const double fix = vertical ? grid.a_x + i * grid.dx() : grid.a_y + j * grid.dy();
        const double lo = vertical ? grid.a_y + (j - 1) * grid.dy()
                                   : grid.a_x + (i - 1) * grid.dx();
        const double hi = vertical ? grid.a_y + j * grid.dy() : grid.a_x + i * grid.dx();
        std::uniform_real_distribution<double> along(lo, hi);

        for (int s = 0; s <= r; ++s) {
            for (int t = 0; s + t <= r; ++t) {
                BoundaryGap gap{vertical, i, j, s, t, 0.0, -1};
                for (int n = 0; n < samples_per_boundary; ++n) {
                    const double pos = along(rng);
                    const double x = vertical ? fix : pos;
                    const double y = vertical ? pos : fix;
                    const Eigen::VectorXd left = eval_row_deriv(x, y, k_lo, s, t, layout);
                    const Eigen::VectorXd right = eval_row_deriv(x, y, k_hi, s, t, layout);
                    for (int c = 0; c < layout.dimension(); ++c) {
                        const double diff = std::abs(left(c) - right(c));
                        if (diff > gap.max_gap) {
                            gap.max_gap = diff;
                            gap.worst_column = c;
                        }
                    }
                }
                report.max_gap = std::max(report.max_gap, gap.max_gap);
                report.gaps.push_back(gap);
            }
        }
    };

    for (int i = 1; i < grid.I; ++i) {
        for (int j = 1; j <= grid.J; ++j) audit_boundary(true, i, j);
    }
    for (int i = 1; i <= grid.I; ++i) {
        for (int j = 1; j < grid.J; ++j) audit_boundary(false, i, j);
    }

    report.vacuous = report.gaps.empty();
    report.passed = report.max_gap <= tol;
    return report;
}

}  // namespace cspline::oracle
