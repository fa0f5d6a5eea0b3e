#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "cspline/oracle.hpp"
#include "cspline/types.hpp"

namespace cspline {

/// Settings for the self-verification sweep. Every configuration
/// I = 1..max_I, J = 1..max_J, d = 1..max_degree, r = 0..d runs on the
/// unit-cell grid [0, I] x [0, J].
struct VerifyOptions {
    int max_I = 3;
    int max_J = 3;
    int max_degree = 3;
    int samples = 200;            ///< sample points per configuration for span tests
    int boundary_samples = 50;    ///< samples per boundary for the continuity audit
    double rank_tol = 1e-8;
    double continuity_tol = 1e-10;
    std::uint64_t seed = kDefaultSeed;
    /// Self-test: corrupt one basis column of one swept configuration; the
    /// span test must then fail and the report must name the configuration.
    bool inject_fault = false;
};

/// Results for one swept configuration.
struct ConfigResult {
    int I = 0, J = 0, d = 0, r = 0;
    int m = 0;             ///< direct-construction column count
    int rank_H = 0;        ///< rank of the smoothness matrix
    int nullity = 0;       ///< null-space dimension of H
    bool nullity_ok = false;
    oracle::SpanReport span;
    bool span_ok = false;
    double continuity_max_gap = 0.0;
    bool continuity_vacuous = false;
    bool continuity_ok = false;
    bool fault_injected = false;

    bool passed() const { return nullity_ok && span_ok && continuity_ok; }
    std::string label() const;
};

struct VerifyReport {
    VerifyOptions options;
    std::vector<ConfigResult> configs;
    bool all_passed = false;
};

/// Runs the null-space construction against the direct construction over the
/// sweep: per configuration, the null-space dimension must match the
/// closed-form column count, the two evaluated bases must span the same
/// column space, and every basis column must be C^r across every boundary.
VerifyReport run_verification(const VerifyOptions& options);

/// Plain-text report, one line per configuration, deterministic for a seed.
void write_report(const VerifyReport& report, std::ostream& out);

}  // namespace cspline
