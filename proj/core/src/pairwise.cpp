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

#include "binassoc/pairwise.hpp"

#include <algorithm>
#include <bit>
#include <thread>

#include "binassoc/error.hpp"

namespace binassoc {

std::size_t pair_count(std::size_t n_cols) {
  return n_cols * (n_cols - 1) / 2;
}

std::size_t pair_index(std::size_t i, std::size_t j, std::size_t n_cols) {
  if (i >= j)
    throw IndexOutOfRange("pair_index requires i < j, got (" +
                          std::to_string(i) + ", " + std::to_string(j) + ")");
  if (j >= n_cols)
    throw IndexOutOfRange("column " + std::to_string(j) + " out of range [0, " +
                          std::to_string(n_cols) + ")");
  // Offset of row i in the flattened upper triangle, then the column offset.
  return i * (2 * n_cols - i - 1) / 2 + (j - i - 1);
}

std::pair<std::size_t, std::size_t> pair_from_index(std::size_t index,
                                                    std::size_t n_cols) {
  if (index >= pair_count(n_cols))
    throw IndexOutOfRange("pair index " + std::to_string(index) +
                          " out of range");
  std::size_t i = 0;
  std::size_t row_len = n_cols - 1;
  while (index >= row_len) {
    index -= row_len;
    --row_len;
    ++i;
  }
  return {i, i + 1 + index};
}

WeightTable::WeightTable(std::size_t n_cols, MeasureKind kind)
    : n_cols_(n_cols),
      kind_(kind),
      values_(pair_count(n_cols), 0.0),
      degenerate_words_((pair_count(n_cols) + 63) / 64, 0) {}

double WeightTable::value(std::size_t i, std::size_t j) const {
  return values_[pair_index(i, j, n_cols_)];
}

bool WeightTable::degenerate_at(std::size_t pair) const {
  return (degenerate_words_[pair / 64] >> (pair % 64)) & 1;
}

bool WeightTable::degenerate(std::size_t i, std::size_t j) const {
  return degenerate_at(pair_index(i, j, n_cols_));
}

AssociationWeight WeightTable::at(std::size_t i, std::size_t j) const {
  const std::size_t p = pair_index(i, j, n_cols_);
  return {i, j, kind_, values_[p], degenerate_at(p)};
}

void WeightTable::set(std::size_t pair, double value, bool degenerate) {
  values_[pair] = value;
  if (degenerate) {
    degenerate_words_[pair / 64] |= std::uint64_t{1} << (pair % 64);
  } else {
    degenerate_words_[pair / 64] &= ~(std::uint64_t{1} << (pair % 64));
  }
}

namespace {

std::uint64_t intersection_count(std::span<const std::uint64_t> a,
                                 std::span<const std::uint64_t> b) {
  std::uint64_t count = 0;
  for (std::size_t w = 0; w < a.size(); ++w)
    count += std::popcount(a[w] & b[w]);
  return count;
}

}  // namespace

ContingencyCounts pair_counts(const BinaryMatrix& m, std::size_t i,
                              std::size_t j) {
  if (i == j) throw SamePair(i);
  const std::uint64_t n11 =
      intersection_count(m.column_words(i), m.column_words(j));
  const std::uint64_t ci = m.column_popcount(i);
  const std::uint64_t cj = m.column_popcount(j);
  ContingencyCounts c;
  c.n11 = n11;
  c.n10 = ci - n11;
  c.n01 = cj - n11;
  c.n_total = m.n_rows();
  c.n00 = c.n_total - c.n11 - c.n10 - c.n01;
  return c;
}

std::vector<std::size_t> column_marginals(const BinaryMatrix& m) {
  std::vector<std::size_t> counts(m.n_cols());
  for (std::size_t c = 0; c < m.n_cols(); ++c)
    counts[c] = m.column_popcount(c);
  return counts;
}

WeightTable all_pairs(const BinaryMatrix& m, MeasureKind kind,
                      unsigned n_threads) {
  if (kind == MeasureKind::ConditionalRegression)
    throw UnsupportedKind(
        "all_pairs computes closed-form measures; use "
        "conditional_edge_weights for the regression kind");

  const std::size_t k = m.n_cols();
  const std::size_t total = pair_count(k);
  WeightTable table(k, kind);
  if (total == 0) return table;

  const std::vector<std::size_t> marginals = column_marginals(m);
  const double n = static_cast<double>(m.n_rows());

  auto sweep = [&](std::size_t first, std::size_t last) {
    auto [i, j] = pair_from_index(first, k);
    auto left = m.column_words(i);
    for (std::size_t p = first; p < last; ++p) {
      const std::uint64_t n11 = intersection_count(left, m.column_words(j));
      PairProportions prop;
      prop.p11 = static_cast<double>(n11) / n;
      prop.p10 = static_cast<double>(marginals[i] - n11) / n;
      prop.p01 = static_cast<double>(marginals[j] - n11) / n;
      // Summed as N + n11 - ci - cj; every intermediate stays nonnegative.
      prop.p00 = static_cast<double>(m.n_rows() + n11 - marginals[i] -
                                     marginals[j]) /
                 n;
      const MeasureValue v = evaluate_measure(kind, prop);
      table.set(p, v.value, v.degenerate);
      if (++j == k) {
        ++i;
        j = i + 1;
        if (j < k) left = m.column_words(i);
      }
    }
  };

  unsigned hw = n_threads != 0 ? n_threads : std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  // Chunks are aligned to 64 pairs so each worker owns whole words of the
  // degenerate bitmask; values and flags are then written race-free, and the
  // output is independent of the schedule.
  const std::size_t chunk = ((total + hw - 1) / hw + 63) / 64 * 64;
  std::vector<std::thread> workers;
  for (std::size_t start = 0; start < total; start += chunk) {
    const std::size_t stop = std::min(start + chunk, total);
    workers.emplace_back(sweep, start, stop);
  }
  for (auto& t : workers) t.join();
  return table;
}

}  // namespace binassoc
