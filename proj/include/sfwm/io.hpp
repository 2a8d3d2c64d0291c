#pragma once
#include <cstdint>
#include <string>
#include <vector>

namespace sfwm {

// 17 significant digits, scientific: lossless double round-trip and byte
// stable across runs.
std::string format_g17(double v);

struct CsvTable {
  std::vector<std::string> header;  // column names carry units
  std::vector<std::vector<std::string>> rows;
};

void write_csv(const std::string& path, const CsvTable& table);

std::uint64_t fnv1a64(const std::string& data);

}  // namespace sfwm
