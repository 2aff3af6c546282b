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

#include "riskatlas/csv.hpp"
#include "riskatlas/errors.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace riskatlas {

namespace {

std::string trim(const std::string& s)
{
    size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

// Splits one logical CSV record. `pos` points at the record start and is
// advanced past the trailing newline. Quoted fields may span lines.
std::vector<std::string> split_record(const std::string& text, size_t& pos, size_t& line,
                                      const std::string& source)
{
    std::vector<std::string> fields;
    std::string field;
    bool quoted = false;
    const size_t n = text.size();

    while (pos < n) {
        char c = text[pos];
        if (quoted) {
            if (c == '"') {
                if (pos + 1 < n && text[pos + 1] == '"') {
                    field += '"';
                    pos += 2;
                } else {
                    quoted = false;
                    ++pos;
                }
            } else {
                if (c == '\n') ++line;
                field += c;
                ++pos;
            }
        } else if (c == '"') {
            if (!field.empty())
                fail(Err::ParseError, source + ":" + std::to_string(line) +
                                          ": quote inside unquoted field");
            quoted = true;
            ++pos;
        } else if (c == ',') {
            fields.push_back(field);
            field.clear();
            ++pos;
        } else if (c == '\n') {
            ++pos;
            ++line;
            break;
        } else if (c == '\r') {
            ++pos; // swallow; the '\n' ends the record
        } else {
            field += c;
            ++pos;
        }
    }
    if (quoted)
        fail(Err::ParseError, source + ":" + std::to_string(line) + ": unterminated quote");
    fields.push_back(field);
    return fields;
}

} // namespace

size_t CsvTable::column(const std::string& name) const
{
    if (auto c = find_column(name)) return *c;
    fail(Err::MissingColumn, source + ": missing column '" + name + "'");
}

std::optional<size_t> CsvTable::find_column(const std::string& name) const
{
    for (size_t i = 0; i < header.size(); ++i)
        if (header[i] == name) return i;
    return std::nullopt;
}

CsvTable parse_csv(const std::string& text, const std::string& source)
{
    CsvTable table;
    table.source = source;

    size_t pos = 0;
    size_t line = 1;

    // Skip blank and '#' comment lines ahead of the header.
    while (pos < text.size()) {
        size_t eol = text.find('\n', pos);
        std::string raw = text.substr(pos, eol == std::string::npos ? eol : eol - pos);
        std::string t = trim(raw);
        if (t.empty() || t[0] == '#') {
            if (eol == std::string::npos) { pos = text.size(); break; }
            pos = eol + 1;
            ++line;
        } else {
            break;
        }
    }
    if (pos >= text.size())
        fail(Err::ParseError, source + ": empty file, header row required");

    size_t header_line = line;
    table.header = split_record(text, pos, line, source);
    for (auto& h : table.header) h = trim(h);
    if (table.header.empty() || (table.header.size() == 1 && table.header[0].empty()))
        fail(Err::ParseError, source + ":" + std::to_string(header_line) + ": empty header row");

    while (pos < text.size()) {
        // Skip blank lines between records.
        if (text[pos] == '\n') { ++pos; ++line; continue; }
        if (text[pos] == '\r' && pos + 1 < text.size() && text[pos + 1] == '\n') {
            pos += 2;
            ++line;
            continue;
        }
        size_t row_line = line;
        auto fields = split_record(text, pos, line, source);
        if (fields.size() == 1 && trim(fields[0]).empty()) continue;
        if (fields.size() != table.header.size())
            fail(Err::ParseError, source + ":" + std::to_string(row_line) + ": expected " +
                                      std::to_string(table.header.size()) + " fields, got " +
                                      std::to_string(fields.size()));
        for (auto& f : fields) f = trim(f);
        table.rows.push_back(std::move(fields));
        table.line_numbers.push_back(row_line);
    }
    return table;
}

CsvTable read_csv(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(Err::IoError, "cannot open '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_csv(buf.str(), path.string());
}

double parse_number(const CsvTable& table, size_t row, size_t col)
{
    const std::string& s = table.rows[row][col];
    const size_t line = table.line_numbers[row];
    if (s.empty())
        fail(Err::ParseError, table.source + ":" + std::to_string(line) + ": empty numeric field");
    char* end = nullptr;
    double v = std::strtod(s.c_str(), &end);
    if (end != s.c_str() + s.size())
        fail(Err::ParseError,
             table.source + ":" + std::to_string(line) + ": not a number: '" + s + "'");
    if (!std::isfinite(v))
        fail(Err::ParseError,
             table.source + ":" + std::to_string(line) + ": non-finite value: '" + s + "'");
    return v;
}

struct CsvWriter::Impl {
    std::ofstream out;
};

CsvWriter::CsvWriter(const std::filesystem::path& path) : impl_(new Impl)
{
    impl_->out.open(path, std::ios::binary);
    if (!impl_->out) {
        delete impl_;
        fail(Err::IoError, "cannot write '" + path.string() + "'");
    }
}

CsvWriter::~CsvWriter() { delete impl_; }

void CsvWriter::comment(const std::string& text) { impl_->out << "# " << text << "\n"; }

void CsvWriter::row(const std::vector<std::string>& fields)
{
    for (size_t i = 0; i < fields.size(); ++i) {
        const std::string& f = fields[i];
        bool needs_quote = f.find_first_of(",\"\n\r") != std::string::npos;
        if (i) impl_->out << ',';
        if (needs_quote) {
            impl_->out << '"';
            for (char c : f) {
                if (c == '"') impl_->out << "\"\"";
                else impl_->out << c;
            }
            impl_->out << '"';
        } else {
            impl_->out << f;
        }
    }
    impl_->out << "\n";
}

std::string fmt_sig12(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

} // namespace riskatlas
