// Copyright 2026 The binassoc Authors
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

#include "binassoc/io.hpp"

#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <unordered_map>
#include <utility>
#include <vector>

#include "binassoc/error.hpp"

namespace binassoc {

namespace {

// Minimal RFC 4180 record reader. Returns false at end of input. Records are
// LF-terminated; a trailing CR is stripped; quoted fields may span lines.
// `line` counts physical lines for error messages.
bool read_csv_record(std::istream& in, std::vector<std::string>& fields,
                     std::size_t& line) {
  fields.clear();
  int c = in.get();
  if (c == EOF) return false;

  std::string field;
  bool quoted = false;
  const std::size_t start_line = line;
  while (true) {
    if (c == EOF) {
      if (quoted)
        throw ParseError(start_line, "unterminated quoted field");
      fields.push_back(std::move(field));
      return true;
    }
    if (quoted) {
      if (c == '"') {
        const int next = in.get();
        if (next == '"') {
          field.push_back('"');
        } else {
          quoted = false;
          c = next;
          continue;
        }
      } else {
        if (c == '\n') ++line;
        field.push_back(static_cast<char>(c));
      }
    } else if (c == '"' && field.empty()) {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(field));
      field.clear();
    } else if (c == '\n') {
      ++line;
      if (!field.empty() && field.back() == '\r') field.pop_back();
      fields.push_back(std::move(field));
      return true;
    } else {
      field.push_back(static_cast<char>(c));
    }
    c = in.get();
  }
}

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoFailure("cannot open " + path.string() + " for reading");
  return in;
}

std::ofstream open_output(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoFailure("cannot open " + path.string() + " for writing");
  return out;
}

void flush_or_throw(std::ostream& out, const std::filesystem::path& path) {
  out.flush();
  if (!out) throw IoFailure("write to " + path.string() + " failed");
}

}  // namespace

std::string csv_quote(std::string_view field) {
  const bool needs_quotes =
      field.find_first_of(",\"\r\n") != std::string_view::npos;
  if (!needs_quotes) return std::string(field);
  std::string out;
  out.reserve(field.size() + 2);
  out.push_back('"');
  for (char c : field) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::string format_weight(double w) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", w);
  return buf;
}

BinaryMatrix read_membership_pairs(std::istream& in) {
  std::vector<std::string> fields;
  std::size_t line = 1;
  if (!read_csv_record(in, fields, line)) throw EmptyInput("empty pair list");
  if (fields.size() != 2 || fields[0] != "member_id" || fields[1] != "group_id")
    throw ParseError(1, "expected header `member_id,group_id`");

  std::vector<MembershipRecord> records;
  while (true) {
    const std::size_t record_line = line;
    if (!read_csv_record(in, fields, line)) break;
    if (fields.size() == 1 && fields[0].empty()) continue;  // blank line
    if (fields.size() != 2)
      throw ParseError(record_line, "expected 2 fields, got " +
                                        std::to_string(fields.size()));
    if (fields[0].empty() || fields[1].empty())
      throw ParseError(record_line, "member_id and group_id must be non-empty");
    records.push_back({std::move(fields[0]), std::move(fields[1])});
  }
  if (records.empty()) throw EmptyInput("pair list has no records");

  std::unordered_map<std::string, std::size_t> member_index;
  std::unordered_map<std::string, std::size_t> group_index;
  std::vector<std::string> group_labels;
  for (const auto& r : records) {
    member_index.emplace(r.member_id, member_index.size());
    if (group_index.emplace(r.group_id, group_index.size()).second)
      group_labels.push_back(r.group_id);
  }

  BinaryMatrix m(member_index.size(), std::move(group_labels));
  for (const auto& r : records)
    m.set(member_index.at(r.member_id), group_index.at(r.group_id));
  return m;
}

BinaryMatrix read_membership_pairs(const std::filesystem::path& path) {
  auto in = open_input(path);
  return read_membership_pairs(in);
}

BinaryMatrix read_dense_csv(std::istream& in) {
  std::vector<std::string> fields;
  std::size_t line = 1;
  if (!read_csv_record(in, fields, line)) throw EmptyInput("empty matrix file");
  std::vector<std::string> labels = fields;

  std::vector<std::vector<bool>> rows;
  while (true) {
    const std::size_t record_line = line;
    if (!read_csv_record(in, fields, line)) break;
    if (fields.size() == 1 && fields[0].empty()) continue;
    if (fields.size() != labels.size())
      throw ParseError(record_line,
                       "expected " + std::to_string(labels.size()) +
                           " cells, got " + std::to_string(fields.size()));
    std::vector<bool> row(labels.size());
    for (std::size_t c = 0; c < fields.size(); ++c) {
      if (fields[c] == "0") {
        row[c] = false;
      } else if (fields[c] == "1") {
        row[c] = true;
      } else {
        throw ParseError(record_line, "cell in column " + std::to_string(c) +
                                          " is not 0 or 1: `" + fields[c] + "`");
      }
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw EmptyInput("matrix file has no data rows");

  BinaryMatrix m(rows.size(), std::move(labels));
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c)
      if (rows[r][c]) m.set(r, c);
  return m;
}

BinaryMatrix read_dense_csv(const std::filesystem::path& path) {
  auto in = open_input(path);
  return read_dense_csv(in);
}

void write_dense_csv(const BinaryMatrix& m, std::ostream& out) {
  for (std::size_t c = 0; c < m.n_cols(); ++c) {
    if (c) out << ',';
    out << csv_quote(m.label(c));
  }
  out << '\n';
  for (std::size_t r = 0; r < m.n_rows(); ++r) {
    for (std::size_t c = 0; c < m.n_cols(); ++c) {
      if (c) out << ',';
      out << (m.test(r, c) ? '1' : '0');
    }
    out << '\n';
  }
}

void write_dense_csv(const BinaryMatrix& m, const std::filesystem::path& path) {
  auto out = open_output(path);
  write_dense_csv(m, out);
  flush_or_throw(out, path);
}

void write_membership_pairs(const BinaryMatrix& m, std::ostream& out) {
  out << "member_id,group_id\n";
  for (std::size_t r = 0; r < m.n_rows(); ++r)
    for (std::size_t c = 0; c < m.n_cols(); ++c)
      if (m.test(r, c))
        out << r << ',' << csv_quote(m.label(c)) << '\n';
}

void write_membership_pairs(const BinaryMatrix& m,
                            const std::filesystem::path& path) {
  auto out = open_output(path);
  write_membership_pairs(m, out);
  flush_or_throw(out, path);
}

BinaryMatrix filter_min_degree(const BinaryMatrix& m, std::size_t min_members) {
  std::vector<std::size_t> keep;
  for (std::size_t c = 0; c < m.n_cols(); ++c)
    if (m.column_popcount(c) >= min_members) keep.push_back(c);
  if (keep.empty()) throw AllColumnsDropped(min_members);
  if (keep.size() == m.n_cols()) return m;
  return m.select_columns(keep);
}

}  // namespace binassoc
