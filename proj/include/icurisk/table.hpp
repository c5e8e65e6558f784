#pragma once

#include <string>
#include <vector>

namespace icurisk::table {

// Aligned text table with " | " separators and a dashed rule under the header.
std::string render(const std::vector<std::string>& header,
                   const std::vector<std::vector<std::string>>& rows);

std::string format_fixed(double v, int decimals);

// "0.825 (0.779--0.867)"
std::string format_ci(double value, double lo, double hi);

// "-1.12 (1.35)"
std::string format_mean_sd(double mean, double sd);

// "0.818", or "< 0.001" below that resolution.
std::string format_p(double p);

} // namespace icurisk::table
