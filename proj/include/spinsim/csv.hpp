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

#ifndef SPINSIM_CSV_HPP
#define SPINSIM_CSV_HPP

#include <string>
#include <vector>

namespace spinsim {

// Deterministic CSV formatting: decimal point, 12 significant digits,
// exponent notation for 0 < |x| < 1e-4.
std::string csv_number(double x);

class CsvWriter {
 public:
  // `comment` lines (seed, parameters, units) are emitted as '# ' lines
  // before the header row.
  CsvWriter(std::vector<std::string> columns, std::vector<std::string> comments = {});

  void add_row(const std::vector<double>& values);
  void add_row(const std::vector<std::string>& values);

  const std::string& text() const { return text_; }
  void write(const std::string& path) const;

 private:
  std::size_t n_columns_;
  std::string text_;
};

}  // namespace spinsim

#endif  // SPINSIM_CSV_HPP
