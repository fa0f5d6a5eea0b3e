#include <doctest.h>

#include <charconv>
#include <sstream>

#include "cspline/io.hpp"

using namespace cspline;

TEST_SUITE_BEGIN("io");

TEST_CASE("read_records parses delimited numeric text") {
    SUBCASE("comma separated") {
        std::istringstream in("1,2,3\n4,5,6\n");
        const auto records = io::read_records(in, 3);
        REQUIRE(records.size() == 2);
        CHECK(records[0].fields == std::vector<double>{1, 2, 3});
        CHECK(records[1].line == 2);
    }
    SUBCASE("whitespace and mixed delimiters") {
        std::istringstream in("1 2\t3\n4;5, 6\n");
        const auto records = io::read_records(in, 3);
        REQUIRE(records.size() == 2);
        CHECK(records[1].fields == std::vector<double>{4, 5, 6});
    }
    SUBCASE("header row is skipped") {
        std::istringstream in("x,y,z\n0.25,0.5,1.5\n");
        const auto records = io::read_records(in, 3);
        REQUIRE(records.size() == 1);
        CHECK(records[0].fields == std::vector<double>{0.25, 0.5, 1.5});
        CHECK(records[0].line == 2);
    }
    SUBCASE("blank lines are ignored") {
        std::istringstream in("\n1,2,3\n\n\n4,5,6\n");
        CHECK(io::read_records(in, 3).size() == 2);
    }
    SUBCASE("empty input yields no records") {
        std::istringstream in("");
        CHECK(io::read_records(in, 3).empty());
    }
}

TEST_CASE("read_records rejects malformed rows with the line number") {
    SUBCASE("wrong field count") {
        std::istringstream in("1,2,3\n4,5\n");
        CHECK_THROWS_WITH_AS(io::read_records(in, 3), doctest::Contains("line 2"),
                             io::ParseError);
    }
    SUBCASE("non-numeric field after the header") {
        std::istringstream in("x,y,z\n1,2,3\n4,oops,6\n");
        CHECK_THROWS_WITH_AS(io::read_records(in, 3), doctest::Contains("line 3"),
                             io::ParseError);
    }
    SUBCASE("non-finite value") {
        std::istringstream in("1,2,inf\n");
        CHECK_THROWS_WITH_AS(io::read_records(in, 3), doctest::Contains("non-finite"),
                             io::ParseError);
    }
    SUBCASE("nan value") {
        std::istringstream in("1,nan,3\n");
        CHECK_THROWS_AS(io::read_records(in, 3), io::ParseError);
    }
}

TEST_CASE("missing files raise FileError") {
    CHECK_THROWS_AS(io::read_records_file("/no/such/file.csv", 3), io::FileError);
}

TEST_CASE("format_double round-trips exactly") {
    for (double v : {0.1, -0.9, 1.0 / 3.0, 1e-300, 2.5e17, 0.0, -123.456789012345678}) {
        const std::string text = io::format_double(v);
        double back = 0;
        const auto result = std::from_chars(text.data(), text.data() + text.size(), back);
        REQUIRE(result.ec == std::errc());
        CHECK(back == v);
    }
}

TEST_SUITE_END();
