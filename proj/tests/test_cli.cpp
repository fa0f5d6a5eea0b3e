// End-to-end tests driving the installed binary. The first argument is the
// path to the CLI executable; everything after "--" goes to doctest.
#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>
#include <vector>

namespace {

std::string g_cli;
std::filesystem::path g_scratch;

struct RunResult {
    int exit_code = -1;
    std::string output;  // stdout and stderr combined
};

RunResult run_cli(const std::string& args) {
    const std::string command = "'" + g_cli + "' " + args + " 2>&1";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult result;
    char buffer[512];
    while (fgets(buffer, sizeof(buffer), pipe)) result.output += buffer;
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::filesystem::path write_file(const std::string& name, const std::string& contents) {
    const std::filesystem::path path = g_scratch / name;
    std::ofstream out(path);
    out << contents;
    return path;
}

std::vector<double> read_column(const std::filesystem::path& path) {
    std::ifstream in(path);
    std::vector<double> values;
    double v;
    while (in >> v) values.push_back(v);
    return values;
}

const char* kFivePoints =
    "x,y,z\n"
    "1.1,0.3,2.0\n"
    "1.2,0.7,1.0\n"
    "0.1,0.3,0.5\n"
    "0.5,0.1,-0.3\n"
    "1.7,0.8,4.0\n";

const char* kGridFlags = "--ax 0 --bx 2 --ay 0 --by 1 --I 2 --J 1";

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("info prints the layout summary") {
    auto result = run_cli(std::string("info ") + kGridFlags + " --degree 1 --smoothness 0");
    CHECK(result.exit_code == 0);
    CHECK(result.output.find("columns 4") != std::string::npos);
    CHECK(result.output.find("partitions 2") != std::string::npos);

    result = run_cli(std::string("info ") + kGridFlags + " --degree 1 --smoothness 1");
    CHECK(result.exit_code == 0);
    CHECK(result.output.find("columns 3") != std::string::npos);

    result = run_cli("info --ax 0 --bx 3 --ay 0 --by 2 --I 3 --J 2 --degree 2 --smoothness 1");
    CHECK(result.exit_code == 0);
    CHECK(result.output.find("columns 9") != std::string::npos);
}

TEST_CASE("fit writes a model and reports the dimensions") {
    const auto data = write_file("five.csv", kFivePoints);
    const auto model = g_scratch / "five.model.json";
    const auto result = run_cli("fit --input '" + data.string() + "' " + kGridFlags +
                                " --degree 1 --smoothness 0 --output '" + model.string() + "'");
    CHECK(result.exit_code == 0);
    CHECK(result.output.find("n_points 5") != std::string::npos);
    CHECK(result.output.find("columns 4") != std::string::npos);
    CHECK(result.output.find("effective_rank 4") != std::string::npos);
    CHECK(std::filesystem::exists(model));
}

TEST_CASE("fit rejects a continuity order above the degree") {
    const auto data = write_file("five2.csv", kFivePoints);
    const auto result = run_cli("fit --input '" + data.string() + "' " + kGridFlags +
                                " --degree 1 --smoothness 2 --output '" +
                                (g_scratch / "unused.json").string() + "'");
    CHECK(result.exit_code == 2);
    CHECK(result.output.find("error:") != std::string::npos);
    CHECK(result.output.find("continuity order must not exceed degree") != std::string::npos);
}

TEST_CASE("fit errors name the offending input line") {
    const auto data = write_file("bad_domain.csv", "x,y,z\n0.5,0.5,1\n7.0,0.5,2\n");
    const auto result = run_cli("fit --input '" + data.string() + "' " + kGridFlags +
                                " --degree 1 --smoothness 0 --output '" +
                                (g_scratch / "unused2.json").string() + "'");
    CHECK(result.exit_code == 2);
    CHECK(result.output.find("line 3") != std::string::npos);
}

TEST_CASE("fit warns when a cell holds no data") {
    const auto data = write_file("gappy.csv",
                                 "0.2,0.4,1.0\n0.4,0.2,2.0\n0.6,0.7,0.5\n0.3,0.9,1.2\n");
    const auto model = g_scratch / "gappy.model.json";
    const auto result = run_cli("fit --input '" + data.string() + "' " + kGridFlags +
                                " --degree 1 --smoothness 0 --output '" + model.string() + "'");
    CHECK(result.exit_code == 0);
    CHECK(result.output.find("warning:") != std::string::npos);
    CHECK(result.output.find("(2,1)") != std::string::npos);
}

TEST_CASE("missing input file is an I/O failure") {
    const auto result = run_cli(std::string("fit --input /does/not/exist.csv ") + kGridFlags +
                                " --degree 1 --smoothness 0 --output '" +
                                (g_scratch / "unused3.json").string() + "'");
    CHECK(result.exit_code == 1);
    CHECK(result.output.find("error:") != std::string::npos);
}

TEST_CASE("predict round-trips an exact fit") {
    // z = 1 + x + 2y: linear data on a linear base fits exactly
    std::string rows = "x,y,z\n";
    const double xs[] = {0.2, 0.6, 1.1, 1.6, 0.9, 1.3};
    const double ys[] = {0.1, 0.8, 0.2, 0.9, 0.5, 0.6};
    for (int n = 0; n < 6; ++n) {
        rows += std::to_string(xs[n]) + "," + std::to_string(ys[n]) + "," +
                std::to_string(1.0 + xs[n] + 2.0 * ys[n]) + "\n";
    }
    const auto data = write_file("linear.csv", rows);
    const auto model = g_scratch / "linear.model.json";
    auto result = run_cli("fit --input '" + data.string() + "' " + kGridFlags +
                          " --degree 1 --smoothness 0 --output '" + model.string() + "'");
    REQUIRE(result.exit_code == 0);

    const auto points = write_file("probe.csv", "0.2,0.1\n1.6,0.9\n1.0,0.5\n");
    const auto estimates = g_scratch / "estimates.txt";
    result = run_cli("predict --model '" + model.string() + "' --input '" + points.string() +
                     "' --output '" + estimates.string() + "'");
    CHECK(result.exit_code == 0);
    CHECK(result.output.find("predicted 3 points") != std::string::npos);

    const std::vector<double> values = read_column(estimates);
    REQUIRE(values.size() == 3);
    CHECK(values[0] == doctest::Approx(1.0 + 0.2 + 2.0 * 0.1).epsilon(1e-8));
    CHECK(values[1] == doctest::Approx(1.0 + 1.6 + 2.0 * 0.9).epsilon(1e-8));
    CHECK(values[2] == doctest::Approx(1.0 + 1.0 + 2.0 * 0.5).epsilon(1e-8));
}

TEST_CASE("predict handles domain violations by line") {
    const auto data = write_file("five3.csv", kFivePoints);
    const auto model = g_scratch / "five3.model.json";
    REQUIRE(run_cli("fit --input '" + data.string() + "' " + kGridFlags +
                    " --degree 1 --smoothness 0 --output '" + model.string() + "'")
                .exit_code == 0);

    const auto points = write_file("outside.csv", "0.5,0.5\n3.5,0.5\n");
    const auto estimates = g_scratch / "outside.txt";
    auto result = run_cli("predict --model '" + model.string() + "' --input '" +
                          points.string() + "' --output '" + estimates.string() + "'");
    CHECK(result.exit_code == 2);
    CHECK(result.output.find("line 2") != std::string::npos);

    result = run_cli("predict --model '" + model.string() + "' --input '" + points.string() +
                     "' --output '" + estimates.string() + "' --extrapolate");
    CHECK(result.exit_code == 0);
    CHECK(result.output.find("extrapolated") != std::string::npos);
    CHECK(read_column(estimates).size() == 2);
}

TEST_CASE("predict on an empty points file writes an empty output") {
    const auto data = write_file("five4.csv", kFivePoints);
    const auto model = g_scratch / "five4.model.json";
    REQUIRE(run_cli("fit --input '" + data.string() + "' " + kGridFlags +
                    " --degree 1 --smoothness 0 --output '" + model.string() + "'")
                .exit_code == 0);
    const auto points = write_file("empty.csv", "");
    const auto estimates = g_scratch / "empty_out.txt";
    const auto result = run_cli("predict --model '" + model.string() + "' --input '" +
                                points.string() + "' --output '" + estimates.string() + "'");
    CHECK(result.exit_code == 0);
    CHECK(result.output.find("predicted 0 points") != std::string::npos);
    CHECK(read_column(estimates).empty());
}

TEST_CASE("verify passes on a small sweep and is byte-stable") {
    const std::string flags = "verify --max-I 2 --max-J 2 --max-degree 2 --samples 60 "
                              "--boundary-samples 10";
    const auto first = run_cli(flags);
    CHECK(first.exit_code == 0);
    CHECK(first.output.find("result PASS") != std::string::npos);
    CHECK(first.output.find("seed 987654321") != std::string::npos);

    const auto second = run_cli(flags);
    CHECK(second.output == first.output);
}

TEST_CASE("verify self-test fault exits with the verification code") {
    const auto result = run_cli("verify --max-I 2 --max-J 1 --max-degree 1 --samples 50 "
                                "--boundary-samples 10 --self-test-fault");
    CHECK(result.exit_code == 3);
    CHECK(result.output.find("failing configuration: I=2 J=1 d=1 r=0") != std::string::npos);
}

TEST_CASE("bad flags exit with the validation code") {
    CHECK(run_cli("fit --nonsense").exit_code == 2);
    CHECK(run_cli("info --ax 0 --bx 1 --ay 0 --by 1 --I 0 --J 1 --degree 1 --smoothness 0")
              .exit_code == 2);
}

TEST_CASE("extreme cell widths trigger a conditioning warning") {
    const auto result =
        run_cli("info --ax 0 --bx 1e7 --ay 0 --by 1 --I 2 --J 1 --degree 1 --smoothness 0");
    CHECK(result.exit_code == 0);
    CHECK(result.output.find("warning: cell width dx") != std::string::npos);
    CHECK(result.output.find("conditioning") != std::string::npos);
}

TEST_SUITE_END();

int main(int argc, char** argv) {
    if (argc < 2) {
        std::fprintf(stderr, "usage: cli_tests <path-to-cspline-binary> [-- doctest args]\n");
        return 2;
    }
    g_cli = argv[1];

    g_scratch = std::filesystem::temp_directory_path() /
                ("cspline_cli_tests_" + std::to_string(::getpid()));
    std::filesystem::create_directories(g_scratch);

    doctest::Context context;
    context.applyCommandLine(argc - 1, argv + 1);
    const int rc = context.run();

    std::error_code ec;
    std::filesystem::remove_all(g_scratch, ec);
    return rc;
}
