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

// All-pairs contingency counting over a bit-packed matrix: the engine that
// turns an N x K matrix into K(K-1)/2 association weights. The sweep costs
// Theta(K^2 * N / 64) word operations.

#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "binassoc/binary_matrix.hpp"
#include "binassoc/measures.hpp"

namespace binassoc {

// Unordered pairs (i, j), i < j, in lexicographic order:
// (0,1), (0,2), ..., (0,K-1), (1,2), ...
std::size_t pair_count(std::size_t n_cols);
std::size_t pair_index(std::size_t i, std::size_t j, std::size_t n_cols);
std::pair<std::size_t, std::size_t> pair_from_index(std::size_t index,
                                                    std::size_t n_cols);

// Dense storage for one weight per unordered column pair, plus a bitmask of
// entries whose value came from a degenerate-input convention.
class WeightTable {
public:
  WeightTable(std::size_t n_cols, MeasureKind kind);

  std::size_t n_cols() const { return n_cols_; }
  MeasureKind kind() const { return kind_; }
  std::size_t size() const { return values_.size(); }

  double value(std::size_t i, std::size_t j) const;
  double value_at(std::size_t pair) const { return values_[pair]; }
  bool degenerate(std::size_t i, std::size_t j) const;
  bool degenerate_at(std::size_t pair) const;

  AssociationWeight at(std::size_t i, std::size_t j) const;

  void set(std::size_t pair, double value, bool degenerate);

  const std::vector<double>& values() const { return values_; }
  const std::vector<std::uint64_t>& degenerate_words() const {
    return degenerate_words_;
  }

private:
  std::size_t n_cols_;
  MeasureKind kind_;
  std::vector<double> values_;
  std::vector<std::uint64_t> degenerate_words_;
};

// 2x2 cell counts for columns (i, j): n11 by AND+popcount over the packed
// words, the rest from the column marginals and N. Throws SamePair when
// i == j and IndexOutOfRange for bad indices.
ContingencyCounts pair_counts(const BinaryMatrix& m, std::size_t i,
                              std::size_t j);

// Popcount of every column.
std::vector<std::size_t> column_marginals(const BinaryMatrix& m);

// Evaluates one closed-form measure for every pair. n_threads == 0 picks the
// hardware concurrency; the result is identical for any thread count. Throws
// UnsupportedKind for ConditionalRegression (see conditional_edge_weights).
WeightTable all_pairs(const BinaryMatrix& m, MeasureKind kind,
                      unsigned n_threads = 0);

}  // namespace binassoc
