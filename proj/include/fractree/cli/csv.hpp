#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fractree::cli {

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};

// 17 significant digits, so that reading a value back gives the same double.
std::string format_value(double value);

void write_csv(std::ostream& out, const Table& table);
Table read_csv(std::istream& in);

}  // namespace fractree::cli
