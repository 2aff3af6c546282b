// Copyright 2026 The riskatlas Authors
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

#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace riskatlas {

/// A parsed CSV file. Every row has exactly header.size() fields; the
/// reader rejects ragged rows with a diagnostic naming file and line.
struct CsvTable {
    std::string source;
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
    // 1-based line number of each row in the source file, for diagnostics.
    std::vector<size_t> line_numbers;

    size_t column(const std::string& name) const;               // throws MissingColumn
    std::optional<size_t> find_column(const std::string& name) const;
};

/// Reads a UTF-8 CSV file with a mandatory header row. Handles quoted
/// fields, embedded commas/quotes/newlines, and CRLF line endings.
/// Lines starting with '#' before the header are skipped.
CsvTable read_csv(const std::filesystem::path& path);

/// Parses CSV from an in-memory string; `source` is used in diagnostics.
CsvTable parse_csv(const std::string& text, const std::string& source);

/// Parses a decimal field, rejecting non-numeric and non-finite input.
double parse_number(const CsvTable& table, size_t row, size_t col);

/// Deterministic CSV writer: quotes only when needed, LF line endings.
class CsvWriter {
public:
    explicit CsvWriter(const std::filesystem::path& path);
    ~CsvWriter();

    void comment(const std::string& text);                      // writes "# text"
    void row(const std::vector<std::string>& fields);

private:
    struct Impl;
    Impl* impl_;
};

/// Formats a double with 12 significant digits (output-table convention).
std::string fmt_sig12(double v);

} // namespace riskatlas
