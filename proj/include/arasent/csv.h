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

#ifndef ARASENT_CSV_H_
#define ARASENT_CSV_H_

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace arasent::csv {

using Row = std::vector<std::string>;

// RFC 4180 reader: comma separated, '"' quoting with '""' escapes, quoted
// fields may span lines. Accepts LF or CRLF line ends and strips a leading
// UTF-8 BOM. Throws Error(kCsvError) on an unterminated quote or stray
// characters after a closing quote.
std::vector<Row> Parse(std::string_view text);

// Quotes a field only when it contains ',', '"', CR or LF.
std::string EscapeField(std::string_view field);

// Joins fields with ',' and terminates with '\n'.
std::string FormatRow(const Row& row);

// Header-indexed view of a parsed table.
class Table {
 public:
  // Throws Error(kCsvError) when text has no header row.
  static Table FromText(std::string_view text);

  const Row& header() const { return header_; }
  const std::vector<Row>& rows() const { return rows_; }

  std::optional<size_t> ColumnIndex(std::string_view name) const;
  // Throws Error(kMissingColumn).
  size_t RequireColumn(std::string_view name) const;

  // Empty string for short rows.
  const std::string& Cell(size_t row, size_t column) const;

 private:
  Row header_;
  std::vector<Row> rows_;
  std::unordered_map<std::string, size_t> index_;
};

}  // namespace arasent::csv

#endif  // ARASENT_CSV_H_
