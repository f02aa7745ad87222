#pragma once

// File writers for experiment outputs: JSON, and a minimal log-log SVG plot.

#include <filesystem>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace frl::report {

struct Series {
  std::vector<double> x;
  std::vector<double> y;
  std::string label;
  bool as_line = false;  // polyline instead of point markers
};

/// Log-log scatter/line plot; non-positive values are skipped.
void write_loglog_svg(std::ostream& os, const std::vector<Series>& series, std::string_view title,
                      std::string_view x_label, std::string_view y_label);

/// Writes `text` to `path`, creating parent directories.
void write_text(const std::filesystem::path& path, std::string_view text);
void write_json(const std::filesystem::path& path, const nlohmann::json& j);

}  // namespace frl::report
