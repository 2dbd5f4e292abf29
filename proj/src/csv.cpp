// Copyright 2026 The Spinsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "spinsim/csv.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace spinsim {

std::string csv_number(double x) {
  char buf[64];
  if (x != 0.0 && std::abs(x) < 1e-4)
    std::snprintf(buf, sizeof(buf), "%.11e", x);
  else
    std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

CsvWriter::CsvWriter(std::vector<std::string> columns,
                     std::vector<std::string> comments)
    : n_columns_(columns.size()) {
  if (columns.empty()) throw std::invalid_argument("CsvWriter: no columns");
  for (const std::string& c : comments) text_ += "# " + c + "\n";
  for (std::size_t i = 0; i < columns.size(); ++i) {
    if (i) text_ += ",";
    text_ += columns[i];
  }
  text_ += "\n";
}

void CsvWriter::add_row(const std::vector<double>& values) {
  std::vector<std::string> cells;
  cells.reserve(values.size());
  for (double v : values) cells.push_back(csv_number(v));
  add_row(cells);
}

void CsvWriter::add_row(const std::vector<std::string>& values) {
  if (values.size() != n_columns_)
    throw std::invalid_argument("CsvWriter: row width mismatch");
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) text_ += ",";
    text_ += values[i];
  }
  text_ += "\n";
}

void CsvWriter::write(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("CsvWriter: cannot write " + path);
  out << text_;
}

}  // namespace spinsim
