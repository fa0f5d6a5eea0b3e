#include "cspline/model.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "cspline/io.hpp"
#include "cspline/linalg.hpp"

namespace cspline {

double CSplineModel::evaluate(double x, double y, bool clamp) const {
    const int k = locate(x, y, grid, clamp).k;
    return eval_row(x, y, k, layout).dot(coefficients);
}

CSplineModel fit(const Dataset& data, const GridSpec& grid, const SplineConfig& config,
                 double tol) {
    if (data.empty()) throw std::invalid_argument("model: cannot fit an empty dataset");
    for (std::size_t n = 0; n < data.size(); ++n) {
        if (!std::isfinite(data[n].x) || !std::isfinite(data[n].y) || !std::isfinite(data[n].z)) {
            std::ostringstream msg;
            msg << "model: data point " << n + 1 << " has a non-finite value";
            throw std::invalid_argument(msg.str());
        }
    }

    BasisLayout layout = column_layout(grid, config);
    auto [matrix, cells] = design_matrix(data, grid, layout);

    Eigen::VectorXd z(static_cast<Eigen::Index>(data.size()));
    for (Eigen::Index n = 0; n < z.size(); ++n) z(n) = data[static_cast<size_t>(n)].z;

    LeastSquaresResult solved = least_squares(matrix, z, tol);

    FitMeta meta;
    meta.effective_rank = solved.effective_rank;
    meta.residual_norm = solved.residual_norm;
    meta.n_used = data.size();
    std::set<int> occupied(cells.begin(), cells.end());
    for (int k = 1; k <= grid.cell_count(); ++k) {
        if (!occupied.count(k)) {
            const PartitionId id = partition_coords(k, grid);
            meta.empty_cells.emplace_back(id.i, id.j);
        }
    }

    return CSplineModel{grid, config, std::move(layout), std::move(solved.solution), std::move(meta)};
}

PredictionResult predict(const CSplineModel& model, const std::vector<Point>& points,
                         bool extrapolate) {
    PredictionResult result;
    result.values.resize(static_cast<Eigen::Index>(points.size()));
    for (std::size_t n = 0; n < points.size(); ++n) {
        const Point& pt = points[n];
        if (!std::isfinite(pt.x) || !std::isfinite(pt.y)) {
            std::ostringstream msg;
            msg << "model: point " << n + 1 << " has a non-finite coordinate";
            throw std::invalid_argument(msg.str());
        }
        if (!model.grid.contains(pt.x, pt.y)) {
            if (!extrapolate) {
                std::ostringstream msg;
                msg << "model: point " << n + 1 << " at (" << pt.x << ", " << pt.y
                    << ") lies outside the domain";
                throw OutOfDomainError(msg.str(), n + 1);
            }
            result.extrapolated.push_back(n + 1);
        }
        result.values(static_cast<Eigen::Index>(n)) = model.evaluate(pt.x, pt.y, extrapolate);
    }
    return result;
}

std::string layout_hash(const BasisLayout& layout) {
    // FNV-1a over the layout-defining integers.
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](std::uint64_t value) {
        for (int byte = 0; byte < 8; ++byte) {
            h ^= (value >> (8 * byte)) & 0xff;
            h *= 1099511628211ull;
        }
    };
    mix(static_cast<std::uint64_t>(layout.grid.I));
    mix(static_cast<std::uint64_t>(layout.grid.J));
    mix(static_cast<std::uint64_t>(layout.config.degree));
    mix(static_cast<std::uint64_t>(layout.config.continuity));
    for (const ColumnDescriptor& col : layout.columns) {
        mix(static_cast<std::uint64_t>(col.p));
        mix(static_cast<std::uint64_t>(col.q));
        mix(static_cast<std::uint64_t>(col.x_piece));
        mix(static_cast<std::uint64_t>(col.y_piece));
    }
    std::ostringstream out;
    out << std::hex << h;
    return out.str();
}

std::string serialize(const CSplineModel& model) {
    nlohmann::json doc;
    doc["schema_version"] = kModelSchemaVersion;
    doc["a_x"] = model.grid.a_x;
    doc["b_x"] = model.grid.b_x;
    doc["a_y"] = model.grid.a_y;
    doc["b_y"] = model.grid.b_y;
    doc["I"] = model.grid.I;
    doc["J"] = model.grid.J;
    doc["d"] = model.config.degree;
    doc["r"] = model.config.continuity;
    doc["coefficients"] = std::vector<double>(
        model.coefficients.data(), model.coefficients.data() + model.coefficients.size());
    doc["effective_rank"] = model.meta.effective_rank;
    doc["residual_norm"] = model.meta.residual_norm;
    doc["n_points"] = model.meta.n_used;
    doc["layout_hash"] = layout_hash(model.layout);
    return doc.dump(2) + "\n";
}

CSplineModel deserialize(const std::string& document) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(document);
    } catch (const nlohmann::json::exception& err) {
        throw std::runtime_error(std::string("model: malformed document: ") + err.what());
    }

    try {
        const int version = doc.at("schema_version").get<int>();
        if (version != kModelSchemaVersion) {
            std::ostringstream msg;
            msg << "model: unsupported schema version " << version << " (expected "
                << kModelSchemaVersion << ")";
            throw std::runtime_error(msg.str());
        }

        GridSpec grid(doc.at("a_x").get<double>(), doc.at("b_x").get<double>(),
                      doc.at("a_y").get<double>(), doc.at("b_y").get<double>(),
                      doc.at("I").get<int>(), doc.at("J").get<int>());
        SplineConfig config(doc.at("d").get<int>(), doc.at("r").get<int>());
        BasisLayout layout = column_layout(grid, config);

        const auto coeffs = doc.at("coefficients").get<std::vector<double>>();
        if (static_cast<int>(coeffs.size()) != layout.dimension()) {
            std::ostringstream msg;
            msg << "model: document has " << coeffs.size() << " coefficients, expected "
                << layout.dimension();
            throw std::runtime_error(msg.str());
        }
        for (double c : coeffs) {
            if (!std::isfinite(c)) throw std::runtime_error("model: non-finite coefficient");
        }
        if (doc.contains("layout_hash") &&
            doc.at("layout_hash").get<std::string>() != layout_hash(layout)) {
            throw std::runtime_error("model: layout hash mismatch, column order differs");
        }

        CSplineModel model{std::move(grid), config, std::move(layout),
                           Eigen::Map<const Eigen::VectorXd>(
                               coeffs.data(), static_cast<Eigen::Index>(coeffs.size())),
                           FitMeta{}};
        model.meta.effective_rank = doc.at("effective_rank").get<int>();
        model.meta.residual_norm = doc.at("residual_norm").get<double>();
        model.meta.n_used = doc.at("n_points").get<std::size_t>();
        return model;
    } catch (const nlohmann::json::exception& err) {
        throw std::runtime_error(std::string("model: invalid document: ") + err.what());
    } catch (const std::invalid_argument& err) {
        throw std::runtime_error(std::string("model: invalid document: ") + err.what());
    } catch (const std::out_of_range& err) {
        throw std::runtime_error(std::string("model: invalid document: ") + err.what());
    }
}

void save_model(const CSplineModel& model, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw io::FileError("model: cannot open '" + path + "' for writing");
    out << serialize(model);
    if (!out) throw io::FileError("model: failed writing '" + path + "'");
}

CSplineModel load_model(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io::FileError("model: cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return deserialize(buffer.str());
}

}  // namespace cspline
