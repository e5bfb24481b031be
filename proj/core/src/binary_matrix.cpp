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

#include "binassoc/binary_matrix.hpp"

#include <bit>
#include <unordered_set>

#include "binassoc/error.hpp"

namespace binassoc {

BinaryMatrix::BinaryMatrix(std::size_t n_rows, std::vector<std::string> labels)
    : n_rows_(n_rows),
      words_per_col_((n_rows + 63) / 64),
      labels_(std::move(labels)) {
  if (n_rows_ == 0) throw DataError("matrix needs at least one row");
  if (labels_.empty()) throw DataError("matrix needs at least one column");
  std::unordered_set<std::string_view> seen;
  for (const auto& l : labels_) {
    if (l.empty()) throw DataError("column labels must be non-empty");
    if (!seen.insert(l).second)
      throw DataError("duplicate column label: " + l);
  }
  words_.assign(words_per_col_ * labels_.size(), 0);
}

void BinaryMatrix::check_cell(std::size_t row, std::size_t col) const {
  if (col >= n_cols())
    throw IndexOutOfRange("column " + std::to_string(col) + " out of range [0, " +
                          std::to_string(n_cols()) + ")");
  if (row >= n_rows_)
    throw IndexOutOfRange("row " + std::to_string(row) + " out of range [0, " +
                          std::to_string(n_rows_) + ")");
}

void BinaryMatrix::set(std::size_t row, std::size_t col, bool value) {
  check_cell(row, col);
  std::uint64_t& word = words_[col * words_per_col_ + row / 64];
  const std::uint64_t mask = std::uint64_t{1} << (row % 64);
  if (value) {
    word |= mask;
  } else {
    word &= ~mask;
  }
}

bool BinaryMatrix::test(std::size_t row, std::size_t col) const {
  check_cell(row, col);
  const std::uint64_t word = words_[col * words_per_col_ + row / 64];
  return (word >> (row % 64)) & 1;
}

std::span<const std::uint64_t> BinaryMatrix::column_words(std::size_t col) const {
  if (col >= n_cols())
    throw IndexOutOfRange("column " + std::to_string(col) + " out of range [0, " +
                          std::to_string(n_cols()) + ")");
  return {words_.data() + col * words_per_col_, words_per_col_};
}

std::size_t BinaryMatrix::column_popcount(std::size_t col) const {
  std::size_t count = 0;
  for (std::uint64_t w : column_words(col)) count += std::popcount(w);
  return count;
}

BinaryMatrix BinaryMatrix::select_columns(
    const std::vector<std::size_t>& cols) const {
  std::vector<std::string> labels;
  labels.reserve(cols.size());
  for (std::size_t c : cols) {
    if (c >= n_cols())
      throw IndexOutOfRange("column " + std::to_string(c) +
                            " out of range [0, " + std::to_string(n_cols()) + ")");
    labels.push_back(labels_[c]);
  }
  BinaryMatrix out(n_rows_, std::move(labels));
  for (std::size_t k = 0; k < cols.size(); ++k) {
    auto src = column_words(cols[k]);
    std::copy(src.begin(), src.end(),
              out.words_.begin() + static_cast<std::ptrdiff_t>(k * words_per_col_));
  }
  return out;
}

}  // namespace binassoc
