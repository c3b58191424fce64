#pragma once

#include <string>
#include <vector>

namespace orthomean {

// Shortest decimal representation that round-trips to the same double.
std::string format_double(double x);

// Minimal CSV writer: header line plus rows of preformatted cells.
void write_csv(const std::string& path, const std::string& header,
               const std::vector<std::vector<std::string>>& rows);

// Reads a CSV file with a header line; returns rows of cells.
std::vector<std::vector<std::string>> read_csv(const std::string& path);

}  // namespace orthomean
