// Command-line front end: fit piecewise-polynomial surfaces, predict from
// saved models, inspect basis layouts, and run the self-verification sweep.
//
// Exit codes: 0 success, 1 I/O failure, 2 validation failure,
// 3 verification failure. Every error is a single "error: ..." line on
// stderr.

#include <cstdint>
#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cspline/basis.hpp"
#include "cspline/grid.hpp"
#include "cspline/io.hpp"
#include "cspline/model.hpp"
#include "cspline/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitValidation = 2;
constexpr int kExitVerifyFailed = 3;

struct DomainFlags {
    double ax = 0, bx = 0, ay = 0, by = 0;
    int I = 0, J = 0;
    int degree = 0, smoothness = 0;

    void attach(CLI::App& cmd) {
        cmd.add_option("--ax", ax, "lower x bound")->required();
        cmd.add_option("--bx", bx, "upper x bound")->required();
        cmd.add_option("--ay", ay, "lower y bound")->required();
        cmd.add_option("--by", by, "upper y bound")->required();
        cmd.add_option("--I", I, "number of cells along x")->required();
        cmd.add_option("--J", J, "number of cells along y")->required();
        cmd.add_option("--degree", degree, "piecewise polynomial degree")->required();
        cmd.add_option("--smoothness", smoothness, "continuity order across boundaries")
            ->required();
    }

    cspline::GridSpec grid() const { return {ax, bx, ay, by, I, J}; }
    cspline::SplineConfig config() const { return {degree, smoothness}; }
};

void warn_on_cell_scale(const cspline::GridSpec& grid) {
    auto check = [](const char* name, double width) {
        if (width > 1e3 || width < 1e-3) {
            std::cerr << "warning: cell width " << name << "=" << width
                      << " is far from 1; rescaling inputs improves conditioning\n";
        }
    };
    check("dx", grid.dx());
    check("dy", grid.dy());
}

int run_fit(const DomainFlags& flags, const std::string& input, const std::string& output,
            double tol) {
    const cspline::GridSpec grid = flags.grid();
    const cspline::SplineConfig config = flags.config();
    warn_on_cell_scale(grid);

    const cspline::io::TableXYZ table = cspline::io::read_xyz(input);
    if (table.data.empty()) {
        std::cerr << "error: " << input << " holds no data rows\n";
        return kExitValidation;
    }
    for (std::size_t n = 0; n < table.data.size(); ++n) {
        if (!grid.contains(table.data[n].x, table.data[n].y)) {
            std::cerr << "error: " << input << ": line " << table.lines[n]
                      << ": point outside the domain\n";
            return kExitValidation;
        }
    }

    const cspline::CSplineModel model = cspline::fit(table.data, grid, config, tol);
    cspline::save_model(model, output);

    std::cout << "n_points " << model.meta.n_used << "\n";
    std::cout << "columns " << model.layout.dimension() << "\n";
    std::cout << "effective_rank " << model.meta.effective_rank << "\n";
    std::cout << "residual_norm " << cspline::io::format_double(model.meta.residual_norm)
              << "\n";
    if (model.rank_deficient()) {
        std::cout << "warning: rank deficient (" << model.meta.effective_rank << " < "
                  << model.layout.dimension() << "); minimum-norm coefficients returned\n";
    }
    if (!model.meta.empty_cells.empty()) {
        std::cout << "warning: cells without data:";
        for (const auto& [i, j] : model.meta.empty_cells) {
            std::cout << " (" << i << "," << j << ")";
        }
        std::cout << "\n";
    }
    std::cout << "model written to " << output << "\n";
    return kExitOk;
}

int run_predict(const std::string& model_path, const std::string& input,
                const std::string& output, bool extrapolate) {
    const cspline::CSplineModel model = cspline::load_model(model_path);
    const cspline::io::TableXY table = cspline::io::read_xy(input);

    cspline::PredictionResult result;
    try {
        result = cspline::predict(model, table.points, extrapolate);
    } catch (const cspline::OutOfDomainError& err) {
        std::cerr << "error: " << input << ": line " << table.lines[err.point_index - 1]
                  << ": point outside the domain (pass --extrapolate to evaluate anyway)\n";
        return kExitValidation;
    }

    std::vector<double> values(result.values.data(), result.values.data() + result.values.size());
    cspline::io::write_values(output, values);

    std::cout << "predicted " << values.size() << " points\n";
    if (!result.extrapolated.empty()) {
        std::cout << "warning: " << result.extrapolated.size()
                  << " points outside the domain were extrapolated\n";
    }
    std::cout << "predictions written to " << output << "\n";
    return kExitOk;
}

int run_info(const DomainFlags& flags) {
    const cspline::GridSpec grid = flags.grid();
    const cspline::SplineConfig config = flags.config();
    warn_on_cell_scale(grid);
    const cspline::BasisLayout layout = cspline::column_layout(grid, config);

    std::cout << "domain x [" << grid.a_x << ", " << grid.b_x << "] cells " << grid.I
              << " dx " << cspline::io::format_double(grid.dx()) << "\n";
    std::cout << "domain y [" << grid.a_y << ", " << grid.b_y << "] cells " << grid.J
              << " dy " << cspline::io::format_double(grid.dy()) << "\n";
    std::cout << "partitions " << grid.cell_count() << "\n";
    std::cout << "degree " << config.degree << "\n";
    std::cout << "continuity " << config.continuity << "\n";
    std::cout << "columns " << layout.dimension() << "\n";
    std::cout << "col   p   q   x_piece   y_piece\n";
    for (int c = 0; c < layout.dimension(); ++c) {
        const cspline::ColumnDescriptor& col = layout.columns[static_cast<size_t>(c)];
        std::cout << c + 1 << "   " << col.p << "   " << col.q << "   ";
        if (col.x_global()) std::cout << "global";
        else std::cout << col.x_piece;
        std::cout << "   ";
        if (col.y_global()) std::cout << "global";
        else std::cout << col.y_piece;
        std::cout << "\n";
    }
    return kExitOk;
}

int run_verify(const cspline::VerifyOptions& options) {
    const cspline::VerifyReport report = cspline::run_verification(options);
    cspline::write_report(report, std::cout);
    return report.all_passed ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Piecewise-polynomial surface fitting on rectangular grids"};
    app.require_subcommand(1);

    // fit
    auto* fit_cmd = app.add_subcommand("fit", "fit a model to (x, y, z) data");
    DomainFlags fit_flags;
    fit_flags.attach(*fit_cmd);
    std::string fit_input, fit_output;
    double fit_tol = cspline::kDefaultTol;
    fit_cmd->add_option("--input", fit_input, "data file with x,y,z rows")->required();
    fit_cmd->add_option("--output", fit_output, "model document to write")->required();
    fit_cmd->add_option("--tol", fit_tol, "rank threshold for the solver");

    // predict
    auto* predict_cmd = app.add_subcommand("predict", "evaluate a saved model at points");
    std::string predict_model, predict_input, predict_output;
    bool extrapolate = false;
    predict_cmd->add_option("--model", predict_model, "model document")->required();
    predict_cmd->add_option("--input", predict_input, "points file with x,y rows")->required();
    predict_cmd->add_option("--output", predict_output, "estimates file to write")->required();
    predict_cmd->add_flag("--extrapolate", extrapolate,
                          "evaluate out-of-domain points on the nearest cell");

    // info
    auto* info_cmd = app.add_subcommand("info", "print the basis layout for a configuration");
    DomainFlags info_flags;
    info_flags.attach(*info_cmd);

    // verify
    auto* verify_cmd =
        app.add_subcommand("verify", "cross-check the direct basis construction against "
                                     "the constraint null-space route");
    cspline::VerifyOptions verify_options;
    verify_cmd->add_option("--max-I", verify_options.max_I, "sweep upper bound for I");
    verify_cmd->add_option("--max-J", verify_options.max_J, "sweep upper bound for J");
    verify_cmd->add_option("--max-degree", verify_options.max_degree,
                           "sweep upper bound for the degree");
    verify_cmd->add_option("--samples", verify_options.samples,
                           "sample points per configuration");
    verify_cmd->add_option("--boundary-samples", verify_options.boundary_samples,
                           "samples per boundary in the continuity audit");
    verify_cmd->add_option("--tol", verify_options.rank_tol, "rank tolerance");
    verify_cmd->add_option("--continuity-tol", verify_options.continuity_tol,
                           "continuity tolerance");
    verify_cmd->add_option("--seed", verify_options.seed, "sample generator seed");
    verify_cmd->add_flag("--self-test-fault", verify_options.inject_fault,
                         "corrupt one basis column to prove the span test catches it");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& help) {
        return app.exit(help);
    } catch (const CLI::ParseError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitValidation;
    }

    try {
        if (*fit_cmd) return run_fit(fit_flags, fit_input, fit_output, fit_tol);
        if (*predict_cmd)
            return run_predict(predict_model, predict_input, predict_output, extrapolate);
        if (*info_cmd) return run_info(info_flags);
        if (*verify_cmd) return run_verify(verify_options);
    } catch (const cspline::io::FileError& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitIo;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitValidation;
    }
    return kExitOk;
}
