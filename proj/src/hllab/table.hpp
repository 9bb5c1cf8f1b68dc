// Copyright 2026 The hllab Authors
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

#ifndef HLLAB_TABLE_HPP
#define HLLAB_TABLE_HPP

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace hllab {

using Cell = std::variant<std::int64_t, double, std::string, bool>;

/// In-memory result table, written out once at the end of a run so file
/// content never depends on scheduling. CSV uses a mandatory header row,
/// '.' decimal separator and shortest round-trip decimals for doubles
/// ("inf" for infinities).
class Table {
 public:
  explicit Table(std::vector<std::string> columns);

  const std::vector<std::string>& columns() const { return columns_; }
  std::size_t row_count() const { return rows_.size(); }

  /// Rejects rows whose width differs from the header.
  void add_row(std::vector<Cell> row);
  const std::vector<std::vector<Cell>>& rows() const { return rows_; }

  std::string to_csv() const;

 private:
  std::vector<std::string> columns_;
  std::vector<std::vector<Cell>> rows_;
};

/// Shortest decimal string that parses back to exactly the same double.
std::string format_double(double v);

}  // namespace hllab

#endif
