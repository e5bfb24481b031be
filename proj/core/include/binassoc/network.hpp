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

// Turns weight tables into network objects: thresholding, top-k edge
// ranking, and side-by-side measure comparison tables.

#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "binassoc/binary_matrix.hpp"
#include "binassoc/pairwise.hpp"
#include "binassoc/regression.hpp"

namespace binassoc {

// Edge selection rule. Signed kinds (phi, conditional) are compared by
// absolute value; the sign is kept on the edge.
struct EdgeRule {
  enum class Kind { Threshold, TopK };

  static EdgeRule threshold(double tau);
  static EdgeRule top_k(std::size_t m);

  std::string describe() const;

  Kind kind = Kind::Threshold;
  double tau = 0.0;
  std::size_t m = 0;
};

struct NetworkEdge {
  std::size_t i = 0;  // i < j
  std::size_t j = 0;
  double weight = 0.0;
  MeasureKind kind = MeasureKind::CoOccurrenceP11;
  bool degenerate = false;
};

// Node labels plus a weighted undirected edge list in canonical (i, j)
// order, with a record of the rule that selected the edges.
struct WeightedNetwork {
  std::vector<std::string> labels;
  std::vector<NetworkEdge> edges;
  std::string construction;
};

bool operator==(const NetworkEdge& a, const NetworkEdge& b);
bool operator==(const WeightedNetwork& a, const WeightedNetwork& b);

// Applies the rule to a weight table. Degenerate-flagged pairs are excluded
// unless include_degenerate is set. Empty networks are valid.
WeightedNetwork build_network(const WeightTable& w,
                              const std::vector<std::string>& labels,
                              const EdgeRule& rule,
                              bool include_degenerate = false);

struct RankedEdge {
  std::string label_i;
  std::string label_j;
  std::size_t i = 0;
  std::size_t j = 0;
  double weight = 0.0;
  bool degenerate = false;
};

// rank_edges output: the top-m ranking, plus the degenerate pairs that were
// held out of it (capped at m as well). With include_degenerate the flagged
// pairs compete in the main ranking and `excluded` stays empty.
struct RankedEdges {
  std::vector<RankedEdge> edges;
  std::vector<RankedEdge> excluded;
};

// Descending by |weight| for signed kinds and by weight otherwise; ties
// break lexicographically on (label_i, label_j). The order is total, so the
// result is deterministic for any input permutation.
RankedEdges rank_edges(const WeightTable& w,
                       const std::vector<std::string>& labels, std::size_t m,
                       bool include_degenerate = false);

// One weight column per requested measure, one row per unordered pair in
// canonical order. The conditional column is passed through
// signed_log_magnitude; closed-form columns are raw.
struct ComparisonTable {
  std::vector<std::string> labels;
  std::size_t n_cols = 0;
  std::vector<MeasureKind> kinds;
  std::vector<std::vector<double>> columns;  // columns[kind][pair]
};

// Computes every requested measure over the matrix. `method` is required
// exactly when ConditionalRegression is requested. Kinds must be non-empty
// and distinct.
ComparisonTable compare_measures(
    const BinaryMatrix& m, const std::vector<MeasureKind>& kinds,
    const std::optional<RegressionMethod>& method = std::nullopt,
    unsigned n_threads = 0);

// CSV with header i,j,label_i,label_j,<kind>,... and one row per pair.
void write_comparison_csv(const ComparisonTable& table, std::ostream& out);

}  // namespace binassoc
