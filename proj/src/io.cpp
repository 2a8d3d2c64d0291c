#include "sfwm/io.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace sfwm {

std::string format_g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.16e", v);
  return buf;
}

void write_csv(const std::string& path, const CsvTable& table) {
  std::ofstream f(path, std::ios::binary);  // binary: stable line endings
  if (!f) throw std::runtime_error("cannot open for writing: " + path);
  for (size_t i = 0; i < table.header.size(); ++i)
    f << (i ? "," : "") << table.header[i];
  f << "\n";
  for (const auto& row : table.rows) {
    for (size_t i = 0; i < row.size(); ++i) f << (i ? "," : "") << row[i];
    f << "\n";
  }
}

std::uint64_t fnv1a64(const std::string& data) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace sfwm
