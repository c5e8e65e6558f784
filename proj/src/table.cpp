#include "icurisk/table.hpp"

#include <cstdio>
#include <sstream>

namespace icurisk::table {

std::string render(const std::vector<std::string>& header,
                   const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> widths(header.size(), 0);
    for (std::size_t c = 0; c < header.size(); ++c) widths[c] = header[c].size();
    for (const auto& row : rows) {
        for (std::size_t c = 0; c < row.size() && c < widths.size(); ++c) {
            widths[c] = std::max(widths[c], row[c].size());
        }
    }
    std::ostringstream os;
    auto emit = [&](const std::vector<std::string>& row) {
        for (std::size_t c = 0; c < widths.size(); ++c) {
            if (c) os << " | ";
            const std::string& cell = c < row.size() ? row[c] : std::string();
            os << cell << std::string(widths[c] - cell.size(), ' ');
        }
        os << '\n';
    };
    emit(header);
    std::size_t total = 0;
    for (std::size_t c = 0; c < widths.size(); ++c)
        total += widths[c] + (c ? 3 : 0);
    os << std::string(total, '-') << '\n';
    for (const auto& row : rows) emit(row);
    return os.str();
}

std::string format_fixed(double v, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", decimals, v);
    return buf;
}

std::string format_ci(double value, double lo, double hi) {
    return format_fixed(value, 3) + " (" + format_fixed(lo, 3) + "--" +
           format_fixed(hi, 3) + ")";
}

std::string format_mean_sd(double mean, double sd) {
    return format_fixed(mean, 2) + " (" + format_fixed(sd, 2) + ")";
}

std::string format_p(double p) {
    if (p < 0.001) return "< 0.001";
    return format_fixed(p, 3);
}

} // namespace icurisk::table
