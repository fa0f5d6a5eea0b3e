#pragma once

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "cspline/types.hpp"

namespace cspline::io {

/// Filesystem-level failure: file missing, unreadable, or unwritable.
struct FileError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed file contents; the message names the offending line.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// One parsed numeric record with its source line (1-based) for error reports.
struct Record {
    std::vector<double> fields;
    std::size_t line = 0;
};

/// Reads delimited numeric text: fields split on commas, semicolons, or
/// whitespace; blank lines skipped; a first row with any non-numeric field is
/// treated as a header. Every remaining row must hold exactly
/// fields_per_record finite numbers; anything else raises std::runtime_error
/// naming the line.
std::vector<Record> read_records(std::istream& in, std::size_t fields_per_record);
std::vector<Record> read_records_file(const std::string& path, std::size_t fields_per_record);

/// (x, y, z) rows for fitting; records keep their line numbers.
struct TableXYZ {
    Dataset data;
    std::vector<std::size_t> lines;
};
TableXYZ read_xyz(const std::string& path);

/// (x, y) rows for prediction.
struct TableXY {
    std::vector<Point> points;
    std::vector<std::size_t> lines;
};
TableXY read_xy(const std::string& path);

/// Shortest decimal form that parses back to exactly the same double.
std::string format_double(double value);

/// Writes one value per line in round-trip form.
void write_values(const std::string& path, const std::vector<double>& values);

}  // namespace cspline::io
