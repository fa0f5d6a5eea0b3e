#include "cspline/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string_view>

namespace cspline::io {

namespace {

bool is_delimiter(char c) {
    return c == ',' || c == ';' || c == ' ' || c == '\t' || c == '\r';
}

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t pos = 0;
    while (pos < line.size()) {
        while (pos < line.size() && is_delimiter(line[pos])) ++pos;
        std::size_t start = pos;
        while (pos < line.size() && !is_delimiter(line[pos])) ++pos;
        if (pos > start) fields.push_back(line.substr(start, pos - start));
    }
    return fields;
}

bool parse_double(std::string_view text, double& out) {
    const char* first = text.data();
    const char* last = text.data() + text.size();
    auto [end, ec] = std::from_chars(first, last, out);
    return ec == std::errc() && end == last;
}

}  // namespace

std::vector<Record> read_records(std::istream& in, std::size_t fields_per_record) {
    std::vector<Record> records;
    std::string line;
    std::size_t line_no = 0;
    bool first_content_line = true;

    while (std::getline(in, line)) {
        ++line_no;
        const auto fields = split_fields(line);
        if (fields.empty()) continue;

        std::vector<double> values(fields.size());
        bool all_numeric = true;
        for (std::size_t f = 0; f < fields.size(); ++f) {
            if (!parse_double(fields[f], values[f])) {
                all_numeric = false;
                break;
            }
        }

        if (first_content_line && !all_numeric) {
            first_content_line = false;  // header row
            continue;
        }
        first_content_line = false;

        if (!all_numeric) {
            std::ostringstream msg;
            msg << "line " << line_no << ": non-numeric field";
            throw ParseError(msg.str());
        }
        if (values.size() != fields_per_record) {
            std::ostringstream msg;
            msg << "line " << line_no << ": expected " << fields_per_record
                << " fields, found " << values.size();
            throw ParseError(msg.str());
        }
        for (double v : values) {
            if (!std::isfinite(v)) {
                std::ostringstream msg;
                msg << "line " << line_no << ": non-finite value";
                throw ParseError(msg.str());
            }
        }
        records.push_back({std::move(values), line_no});
    }
    return records;
}

std::vector<Record> read_records_file(const std::string& path, std::size_t fields_per_record) {
    std::ifstream in(path);
    if (!in) throw FileError("cannot open '" + path + "'");
    try {
        return read_records(in, fields_per_record);
    } catch (const ParseError& err) {
        throw ParseError(path + ": " + err.what());
    }
}

TableXYZ read_xyz(const std::string& path) {
    TableXYZ table;
    for (const Record& rec : read_records_file(path, 3)) {
        table.data.push_back({rec.fields[0], rec.fields[1], rec.fields[2]});
        table.lines.push_back(rec.line);
    }
    return table;
}

TableXY read_xy(const std::string& path) {
    TableXY table;
    for (const Record& rec : read_records_file(path, 2)) {
        table.points.push_back({rec.fields[0], rec.fields[1]});
        table.lines.push_back(rec.line);
    }
    return table;
}

std::string format_double(double value) {
    char buffer[64];
    auto [end, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
    if (ec != std::errc()) throw std::runtime_error("failed to format value");
    return std::string(buffer, end);
}

void write_values(const std::string& path, const std::vector<double>& values) {
    std::ofstream out(path);
    if (!out) throw FileError("cannot open '" + path + "' for writing");
    for (double v : values) out << format_double(v) << '\n';
    if (!out) throw FileError("failed writing '" + path + "'");
}

}  // namespace cspline::io
