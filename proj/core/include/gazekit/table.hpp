#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace gazekit {

/// Reals in every emitted table are printed with 9 significant digits.
std::string format_g9(double value);

/// Header plus uniform numeric rows, rendered as comma-separated text.
struct TextTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};

std::string render_table(const TextTable& table);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view content);

std::vector<std::string> split_csv_line(std::string_view line);
double parse_double(std::string_view token, const std::string& context);

}  // namespace gazekit
