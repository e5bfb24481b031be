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

// Matrix ingestion and serialization. Two input encodings are supported:
// membership pair lists (member_id,group_id) and dense 0/1 matrices with a
// label header. All files are UTF-8 CSV: comma separated, double-quote
// escaped, LF records (CRLF tolerated on input).

#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "binassoc/binary_matrix.hpp"

namespace binassoc {

// One membership record: which member belongs to which group. Both ids are
// non-empty strings.
struct MembershipRecord {
  std::string member_id;
  std::string group_id;
};

// Reads a `member_id,group_id` pair list. Rows of the result are the
// distinct member ids in first-appearance order, columns the distinct group
// ids in first-appearance order; duplicated records are idempotent.
BinaryMatrix read_membership_pairs(std::istream& in);
BinaryMatrix read_membership_pairs(const std::filesystem::path& path);

// Reads a dense matrix: first record is the column labels, every following
// record is a row of 0/1 cells.
BinaryMatrix read_dense_csv(std::istream& in);
BinaryMatrix read_dense_csv(const std::filesystem::path& path);

void write_dense_csv(const BinaryMatrix& m, std::ostream& out);
void write_dense_csv(const BinaryMatrix& m, const std::filesystem::path& path);

// Writes one record per set bit, with the row index as the member id.
// Reading the result back reproduces the matrix as long as no row or column
// is all zero.
void write_membership_pairs(const BinaryMatrix& m, std::ostream& out);
void write_membership_pairs(const BinaryMatrix& m,
                            const std::filesystem::path& path);

// Keeps only the columns with at least min_members set rows, preserving
// label order. Throws AllColumnsDropped if nothing survives.
BinaryMatrix filter_min_degree(const BinaryMatrix& m, std::size_t min_members);

// CSV field quoting (RFC 4180 style): quotes the field when it contains a
// comma, quote or newline, doubling embedded quotes.
std::string csv_quote(std::string_view field);

// Renders a double with 17 significant digits, enough to round-trip binary64
// exactly and keep file output byte-stable.
std::string format_weight(double w);

}  // namespace binassoc
