#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace icurisk::csv {

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

// RFC-4180: comma-delimited, one header row, double-quote quoting with ""
// escapes, CRLF or LF line endings.
Table parse(std::string_view text);
Table read_file(const std::string& path);

std::string escape_field(std::string_view field);
void write_file(const std::string& path, const Table& table);

// 17 significant digits: enough for doubles to round-trip bit-exactly.
std::string format_double(double v);

} // namespace icurisk::csv
