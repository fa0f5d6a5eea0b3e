#include "cspline/verify.hpp"

#include <cstdio>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "cspline/basis.hpp"
#include "cspline/linalg.hpp"

namespace cspline {

namespace {

std::vector<Point> sample_points(const GridSpec& grid, int count, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> ux(grid.a_x, grid.b_x);
    std::uniform_real_distribution<double> uy(grid.a_y, grid.b_y);
    std::vector<Point> points(static_cast<size_t>(count));
    for (Point& pt : points) pt = {ux(rng), uy(rng)};
    return points;
}

Eigen::MatrixXd eval_direct_base(const BasisLayout& layout, const std::vector<Point>& points) {
    Eigen::MatrixXd out(static_cast<Eigen::Index>(points.size()), layout.dimension());
    for (Eigen::Index n = 0; n < out.rows(); ++n) {
        const Point& pt = points[static_cast<size_t>(n)];
        out.row(n) = eval_row(pt.x, pt.y, locate(pt.x, pt.y, layout.grid).k, layout);
    }
    return out;
}

// The fault target: a fixed mid-sweep configuration if the sweep reaches it,
// otherwise the very first one.
bool is_fault_target(const VerifyOptions& opt, int I, int J, int d, int r) {
    if (opt.max_I >= 2) return I == 2 && J == 1 && d == 1 && r == 0;
    return I == 1 && J == 1 && d == 1 && r == 0;
}

// Decorrelates configurations so results do not depend on sweep order.
std::uint64_t config_seed(std::uint64_t base, int I, int J, int d, int r) {
    std::uint64_t h = base ^ 0x9e3779b97f4a7c15ull;
    for (int v : {I, J, d, r}) {
        h ^= static_cast<std::uint64_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
}

std::string format_gap(double gap) {
    char buffer[32];
    std::snprintf(buffer, sizeof(buffer), "%.3e", gap);
    return buffer;
}

}  // namespace

std::string ConfigResult::label() const {
    std::ostringstream out;
    out << "I=" << I << " J=" << J << " d=" << d << " r=" << r;
    return out.str();
}

VerifyReport run_verification(const VerifyOptions& options) {
    if (options.max_I < 1 || options.max_J < 1 || options.max_degree < 1) {
        throw std::invalid_argument("verify: sweep bounds must be at least 1");
    }
    if (options.samples < 1 || options.boundary_samples < 1) {
        throw std::invalid_argument("verify: sample counts must be at least 1");
    }

    VerifyReport report;
    report.options = options;
    report.all_passed = true;

    for (int I = 1; I <= options.max_I; ++I) {
        for (int J = 1; J <= options.max_J; ++J) {
            for (int d = 1; d <= options.max_degree; ++d) {
                for (int r = 0; r <= d; ++r) {
                    // unit cells keep the smoothness matrix well conditioned
                    const GridSpec grid(0.0, I, 0.0, J, I, J);
                    const SplineConfig config(d, r);
                    const BasisLayout layout = column_layout(grid, config);

                    ConfigResult res;
                    res.I = I;
                    res.J = J;
                    res.d = d;
                    res.r = r;
                    res.m = layout.dimension();

                    const auto system = oracle::smoothness_system(grid, config, options.rank_tol);
                    res.rank_H = numerical_rank(system.H, options.rank_tol);
                    res.nullity = static_cast<int>(system.H0.cols());
                    res.nullity_ok = res.nullity == system.base.dimension() - res.rank_H &&
                                     res.nullity == res.m;

                    std::mt19937_64 rng(config_seed(options.seed, I, J, d, r));
                    const auto points = sample_points(grid, options.samples, rng);
                    Eigen::MatrixXd via_null_space = oracle::null_base_eval(system, points);
                    Eigen::MatrixXd direct = eval_direct_base(layout, points);

                    if (options.inject_fault && is_fault_target(options, I, J, d, r) &&
                        direct.cols() > 0) {
                        std::normal_distribution<double> noise(0.0, 1.0);
                        const Eigen::Index col = direct.cols() - 1;
                        for (Eigen::Index row = 0; row < direct.rows(); ++row) {
                            direct(row, col) = noise(rng);
                        }
                        res.fault_injected = true;
                    }

                    res.span = oracle::span_equivalent(via_null_space, direct, options.rank_tol);
                    res.span_ok = res.span.equivalent;

                    const auto audit = oracle::continuity_audit(
                        layout, options.continuity_tol, options.boundary_samples, options.seed);
                    res.continuity_max_gap = audit.max_gap;
                    res.continuity_vacuous = audit.vacuous;
                    res.continuity_ok = audit.passed;

                    report.all_passed = report.all_passed && res.passed();
                    report.configs.push_back(res);
                }
            }
        }
    }
    return report;
}

void write_report(const VerifyReport& report, std::ostream& out) {
    const VerifyOptions& opt = report.options;
    out << "c-spline verification report\n";
    out << "seed " << opt.seed << "\n";
    out << "rank_tol " << format_gap(opt.rank_tol) << "\n";
    out << "continuity_tol " << format_gap(opt.continuity_tol) << "\n";
    out << "samples " << opt.samples << "\n";
    out << "boundary_samples " << opt.boundary_samples << "\n";
    out << "sweep I=1.." << opt.max_I << " J=1.." << opt.max_J
        << " d=1.." << opt.max_degree << " r=0..d\n";
    if (opt.inject_fault) out << "self-test fault injection enabled\n";
    out << "\n";

    int failed = 0;
    for (const ConfigResult& res : report.configs) {
        out << res.label() << ": m=" << res.m << " rank_H=" << res.rank_H
            << " nullity=" << res.nullity
            << " nullity_check=" << (res.nullity_ok ? "ok" : "MISMATCH")
            << " span=" << (res.span_ok ? "ok" : "MISMATCH")
            << " (" << res.span.rank_a << "/" << res.span.rank_b << "/" << res.span.rank_joint << ")"
            << " continuity=";
        if (res.continuity_vacuous) {
            out << "no interior boundaries";
        } else {
            out << (res.continuity_ok ? "ok" : "FAILED") << " max_gap="
                << format_gap(res.continuity_max_gap);
        }
        if (res.fault_injected) out << " [fault injected]";
        out << (res.passed() ? " PASS" : " FAIL") << "\n";
        if (!res.passed()) ++failed;
    }

    out << "\nconfigurations " << report.configs.size() << " failed " << failed << "\n";
    if (failed > 0) {
        for (const ConfigResult& res : report.configs) {
            if (!res.passed()) out << "failing configuration: " << res.label() << "\n";
        }
    }
    out << "result " << (report.all_passed ? "PASS" : "FAIL") << "\n";
}

}  // namespace cspline
