#include <doctest.h>

#include <sstream>

#include "cspline/verify.hpp"

using namespace cspline;

TEST_SUITE_BEGIN("verify");

TEST_CASE("small sweep passes every check") {
    VerifyOptions options;
    options.max_I = 2;
    options.max_J = 2;
    options.max_degree = 2;
    options.samples = 80;
    options.boundary_samples = 15;
    const VerifyReport report = run_verification(options);
    CHECK(report.all_passed);
    CHECK(report.configs.size() == 2u * 2u * (2u + 3u));  // d=1: r=0,1; d=2: r=0,1,2
    for (const ConfigResult& res : report.configs) {
        CHECK(res.nullity_ok);
        CHECK(res.span_ok);
        CHECK(res.continuity_ok);
        CHECK(res.m == res.nullity);
        if (res.I == 1 && res.J == 1) CHECK(res.continuity_vacuous);
    }
}

TEST_CASE("fault injection is caught and named") {
    VerifyOptions options;
    options.max_I = 2;
    options.max_J = 1;
    options.max_degree = 1;
    options.samples = 50;
    options.boundary_samples = 10;
    options.inject_fault = true;
    const VerifyReport report = run_verification(options);
    CHECK_FALSE(report.all_passed);

    int failing = 0;
    for (const ConfigResult& res : report.configs) {
        if (!res.passed()) {
            ++failing;
            CHECK(res.fault_injected);
            CHECK_FALSE(res.span_ok);
            CHECK(res.label() == "I=2 J=1 d=1 r=0");
        }
    }
    CHECK(failing == 1);

    std::ostringstream out;
    write_report(report, out);
    CHECK(out.str().find("failing configuration: I=2 J=1 d=1 r=0") != std::string::npos);
    CHECK(out.str().find("result FAIL") != std::string::npos);
}

TEST_CASE("reports are deterministic for a fixed seed") {
    VerifyOptions options;
    options.max_I = 2;
    options.max_J = 1;
    options.max_degree = 2;
    options.samples = 60;
    options.boundary_samples = 10;

    std::ostringstream first, second;
    write_report(run_verification(options), first);
    write_report(run_verification(options), second);
    CHECK(first.str() == second.str());

    options.seed = 5;
    std::ostringstream reseeded;
    write_report(run_verification(options), reseeded);
    CHECK(reseeded.str().find("seed 5") != std::string::npos);
}

TEST_CASE("invalid options are rejected") {
    VerifyOptions options;
    options.max_I = 0;
    CHECK_THROWS_AS(run_verification(options), std::invalid_argument);
    options.max_I = 2;
    options.samples = 0;
    CHECK_THROWS_AS(run_verification(options), std::invalid_argument);
}

TEST_SUITE_END();
