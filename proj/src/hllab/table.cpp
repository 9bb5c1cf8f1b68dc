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

#include "hllab/table.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

namespace hllab {

Table::Table(std::vector<std::string> columns) : columns_(std::move(columns)) {
  if (columns_.empty()) throw std::invalid_argument("a table needs at least one column");
}

void Table::add_row(std::vector<Cell> row) {
  if (row.size() != columns_.size())
    throw std::invalid_argument("row width does not match the header");
  rows_.push_back(std::move(row));
}

std::string format_double(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (std::isnan(v)) return "nan";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

namespace {

void append_csv_escaped(std::string& out, const std::string& s) {
  const bool needs_quotes = s.find_first_of(",\"\n") != std::string::npos;
  if (!needs_quotes) {
    out += s;
    return;
  }
  out += '"';
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
}

}  // namespace

std::string Table::to_csv() const {
  std::string out;
  for (std::size_t c = 0; c < columns_.size(); ++c) {
    if (c) out += ',';
    append_csv_escaped(out, columns_[c]);
  }
  out += '\n';
  for (const auto& row : rows_) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out += ',';
      const Cell& cell = row[c];
      if (std::holds_alternative<std::int64_t>(cell)) {
        out += std::to_string(std::get<std::int64_t>(cell));
      } else if (std::holds_alternative<double>(cell)) {
        out += format_double(std::get<double>(cell));
      } else if (std::holds_alternative<bool>(cell)) {
        out += std::get<bool>(cell) ? "true" : "false";
      } else {
        append_csv_escaped(out, std::get<std::string>(cell));
      }
    }
    out += '\n';
  }
  return out;
}

}  // namespace hllab
