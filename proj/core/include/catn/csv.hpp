#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "catn/grid.hpp"

namespace catn {

struct CsvMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<double> values;  // row-major
};

// Numeric CSV, one line per row, values formatted with 17 significant digits
// so doubles round-trip exactly.
void write_matrix_csv(const std::filesystem::path& path, int rows, int cols,
                      std::span<const double> values);
CsvMatrix read_matrix_csv(const std::filesystem::path& path);

std::string format_double(double v);  // %.17g

// Probability maps are laid out one CSV line per grid row.
void write_probability_csv(const std::filesystem::path& path, const ProbabilityMap& map);
ProbabilityMap read_probability_csv(const std::filesystem::path& path);

} // namespace catn
