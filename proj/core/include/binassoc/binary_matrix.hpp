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

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace binassoc {

// N x K binary observation matrix with labelled columns. Columns are
// bit-packed into 64-bit words because every downstream counting operation
// is a column-pair intersection (word AND + popcount). Padding bits past
// n_rows are always zero.
//
// Fill the matrix with set() right after construction and treat it as
// immutable afterwards; a fully built matrix is safe to share across
// threads.
class BinaryMatrix {
public:
  // Builds an all-zero matrix. Labels must be unique and non-empty,
  // n_rows >= 1, labels.size() >= 1.
  BinaryMatrix(std::size_t n_rows, std::vector<std::string> labels);

  std::size_t n_rows() const { return n_rows_; }
  std::size_t n_cols() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t col) const { return labels_[col]; }

  void set(std::size_t row, std::size_t col, bool value = true);
  bool test(std::size_t row, std::size_t col) const;

  std::size_t words_per_column() const { return words_per_col_; }
  std::span<const std::uint64_t> column_words(std::size_t col) const;

  // Number of set bits in a column (the column marginal count).
  std::size_t column_popcount(std::size_t col) const;

  // New matrix keeping the given columns, in the given order. Rows are
  // preserved. Indices must be in range and distinct.
  BinaryMatrix select_columns(const std::vector<std::size_t>& cols) const;

private:
  void check_cell(std::size_t row, std::size_t col) const;

  std::size_t n_rows_ = 0;
  std::size_t words_per_col_ = 0;
  std::vector<std::string> labels_;
  std::vector<std::uint64_t> words_;  // column-major blocks of words_per_col_
};

}  // namespace binassoc
