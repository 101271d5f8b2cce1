// Copyright 2026 The Arasent Authors.
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

#include "arasent/csv.h"

#include "arasent/error.h"

namespace arasent::csv {

std::vector<Row> Parse(std::string_view text) {
  if (text.starts_with("\xEF\xBB\xBF")) text.remove_prefix(3);

  std::vector<Row> rows;
  Row row;
  std::string field;
  size_t line = 1;
  size_t i = 0;
  const size_t n = text.size();
  bool row_started = false;

  auto end_row = [&] {
    row.push_back(std::move(field));
    field.clear();
    rows.push_back(std::move(row));
    row.clear();
    row_started = false;
  };

  while (i < n) {
    const char c = text[i];
    if (c == '"' && field.empty()) {
      // Quoted field.
      row_started = true;
      const size_t open_line = line;
      ++i;
      bool closed = false;
      while (i < n) {
        if (text[i] == '"') {
          if (i + 1 < n && text[i + 1] == '"') {
            field += '"';
            i += 2;
            continue;
          }
          ++i;
          closed = true;
          break;
        }
        if (text[i] == '\n') ++line;
        field += text[i++];
      }
      if (!closed) {
        throw Error(ErrorCode::kCsvError,
                    "unterminated quoted field starting on line " +
                        std::to_string(open_line));
      }
      if (i < n && text[i] != ',' && text[i] != '\n' && text[i] != '\r') {
        throw Error(ErrorCode::kCsvError,
                    "unexpected character after closing quote on line " +
                        std::to_string(line));
      }
      continue;
    }
    if (c == ',') {
      row.push_back(std::move(field));
      field.clear();
      row_started = true;
      ++i;
    } else if (c == '\r' && i + 1 < n && text[i + 1] == '\n') {
      end_row();
      i += 2;
      ++line;
    } else if (c == '\n') {
      end_row();
      ++i;
      ++line;
    } else {
      field += c;
      row_started = true;
      ++i;
    }
  }
  if (row_started || !field.empty()) end_row();
  return rows;
}

std::string EscapeField(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) {
    return std::string(field);
  }
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string FormatRow(const Row& row) {
  std::string out;
  for (size_t i = 0; i < row.size(); ++i) {
    if (i > 0) out += ',';
    out += EscapeField(row[i]);
  }
  out += '\n';
  return out;
}

Table Table::FromText(std::string_view text) {
  std::vector<Row> all = Parse(text);
  if (all.empty()) throw Error(ErrorCode::kCsvError, "missing header row");
  Table table;
  table.header_ = std::move(all.front());
  for (size_t i = 0; i < table.header_.size(); ++i) {
    table.index_.emplace(table.header_[i], i);
  }
  for (auto it = all.begin() + 1; it != all.end(); ++it) {
    if (it->size() == 1 && it->front().empty()) continue;  // blank line
    table.rows_.push_back(std::move(*it));
  }
  return table;
}

std::optional<size_t> Table::ColumnIndex(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

size_t Table::RequireColumn(std::string_view name) const {
  auto index = ColumnIndex(name);
  if (!index) {
    throw Error(ErrorCode::kMissingColumn,
                "missing column '" + std::string(name) + "'");
  }
  return *index;
}

const std::string& Table::Cell(size_t row, size_t column) const {
  static const std::string kEmpty;
  const Row& r = rows_.at(row);
  return column < r.size() ? r[column] : kEmpty;
}

}  // namespace arasent::csv
