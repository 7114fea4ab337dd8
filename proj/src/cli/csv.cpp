#include "fractree/cli/csv.hpp"

#include <charconv>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

#include "fractree/error.hpp"

namespace fractree::cli {

std::string format_value(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

void write_csv(std::ostream& out, const Table& table) {
  for (std::size_t k = 0; k < table.header.size(); ++k) out << (k ? "," : "") << table.header[k];
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t k = 0; k < row.size(); ++k) out << (k ? "," : "") << format_value(row[k]);
    out << '\n';
  }
}

Table read_csv(std::istream& in) {
  Table table;
  std::string line;
  if (!std::getline(in, line)) throw Error(ErrorCode::InvalidConfig, "empty CSV");
  {
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) table.header.push_back(cell);
  }
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::vector<double> row;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
      double value = 0.0;
      const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), value);
      if (ec != std::errc() || ptr != cell.data() + cell.size()) {
        throw Error(ErrorCode::InvalidConfig, "bad number '" + cell + "' on CSV line " + std::to_string(line_no));
      }
      row.push_back(value);
    }
    if (row.size() != table.header.size()) {
      throw Error(ErrorCode::InvalidConfig, "CSV line " + std::to_string(line_no) + " has the wrong column count");
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

}  // namespace fractree::cli
