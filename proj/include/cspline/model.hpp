#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "cspline/basis.hpp"
#include "cspline/grid.hpp"
#include "cspline/types.hpp"

namespace cspline {

/// Thrown when a point falls outside the model domain; point_index is 1-based.
struct OutOfDomainError : std::domain_error {
    OutOfDomainError(const std::string& what, std::size_t index)
        : std::domain_error(what), point_index(index) {}
    std::size_t point_index;
};

struct FitMeta {
    int effective_rank = 0;
    double residual_norm = 0.0;
    std::size_t n_used = 0;
    /// Cells that contained no data, as (i, j) pairs. An empty cell leaves its
    /// piece columns unsupported, so the fit falls back to the minimum-norm
    /// solution; the list keeps that visible.
    std::vector<std::pair<int, int>> empty_cells;
};

/// A fitted surface: coefficients over the canonical column layout.
struct CSplineModel {
    GridSpec grid;
    SplineConfig config;
    BasisLayout layout;
    Eigen::VectorXd coefficients;
    FitMeta meta;

    /// Estimate at a single point; k forced from locate (clamped if asked).
    double evaluate(double x, double y, bool clamp = false) const;

    bool rank_deficient() const { return meta.effective_rank < layout.dimension(); }
};

/// Least-squares fit of the smooth piecewise base to the data. Throws on an
/// empty dataset, non-finite values, or out-of-domain points; a cell without
/// data is not an error but is reported through meta.empty_cells.
CSplineModel fit(const Dataset& data, const GridSpec& grid, const SplineConfig& config,
                 double tol = kDefaultTol);

struct PredictionResult {
    Eigen::VectorXd values;
    /// 1-based indices of points that fell outside the domain and were
    /// evaluated on the nearest cell (only with extrapolate = true).
    std::vector<std::size_t> extrapolated;
};

/// Estimates at the given points, preserving order. Out-of-domain points
/// raise OutOfDomainError unless extrapolate is set.
PredictionResult predict(const CSplineModel& model, const std::vector<Point>& points,
                         bool extrapolate = false);

inline constexpr int kModelSchemaVersion = 1;

/// Writes the model as a self-describing JSON document (schema v1) whose
/// numbers round-trip bit-exactly.
std::string serialize(const CSplineModel& model);
void save_model(const CSplineModel& model, const std::string& path);

/// Parses and validates a model document. Throws std::runtime_error on an
/// unsupported schema version, a coefficient count that disagrees with the
/// grid and configuration, or any violated invariant.
CSplineModel deserialize(const std::string& document);
CSplineModel load_model(const std::string& path);

/// Hash of the canonical column layout, stored in model documents to guard
/// against column-order drift.
std::string layout_hash(const BasisLayout& layout);

}  // namespace cspline
