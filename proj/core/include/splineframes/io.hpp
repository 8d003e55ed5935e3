#pragma once

#include <filesystem>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "splineframes/windows.hpp"

namespace splineframes {

/// Shortest round-trip decimal form of v ("0.1", "1e-20", "-0").
std::string format_double(double v);

/// Parses "1.25", "-3e-4" or a rational "35/36". Throws DomainError.
double parse_real(std::string_view text);

struct CsvTable {
  std::vector<std::string> comments;  // '#' lines, without the leading '#'
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

/// Comma-separated, first non-comment line is the header. Blank lines skipped.
CsvTable read_csv(std::istream& is);

/// Two-column (x, value) file with header, x in [-N/2, 0].
Window load_tabulated_window(const std::filesystem::path& path,
                             double support_length);

}  // namespace splineframes
