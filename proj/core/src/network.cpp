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

#include "binassoc/network.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <set>

#include "binassoc/error.hpp"
#include "binassoc/io.hpp"

namespace binassoc {

EdgeRule EdgeRule::threshold(double tau) {
  if (std::isnan(tau)) throw ConfigError("threshold must not be NaN");
  EdgeRule r;
  r.kind = Kind::Threshold;
  r.tau = tau;
  return r;
}

EdgeRule EdgeRule::top_k(std::size_t m) {
  EdgeRule r;
  r.kind = Kind::TopK;
  r.m = m;
  return r;
}

std::string EdgeRule::describe() const {
  if (kind == Kind::Threshold) return "threshold=" + format_weight(tau);
  return "top_k=" + std::to_string(m);
}

bool operator==(const NetworkEdge& a, const NetworkEdge& b) {
  return a.i == b.i && a.j == b.j && a.weight == b.weight && a.kind == b.kind &&
         a.degenerate == b.degenerate;
}

bool operator==(const WeightedNetwork& a, const WeightedNetwork& b) {
  return a.labels == b.labels && a.edges == b.edges &&
         a.construction == b.construction;
}

namespace {

// Ranking key: magnitude for signed kinds, raw value otherwise.
double rank_key(MeasureKind kind, double value) {
  return is_signed_kind(kind) ? std::abs(value) : value;
}

void check_labels(const WeightTable& w, const std::vector<std::string>& labels) {
  if (labels.size() != w.n_cols())
    throw ConfigError("label count " + std::to_string(labels.size()) +
                      " does not match table columns " +
                      std::to_string(w.n_cols()));
}

std::vector<RankedEdge> collect_edges(const WeightTable& w,
                                      const std::vector<std::string>& labels,
                                      bool want_degenerate) {
  std::vector<RankedEdge> out;
  std::size_t pair = 0;
  for (std::size_t i = 0; i < w.n_cols(); ++i) {
    for (std::size_t j = i + 1; j < w.n_cols(); ++j, ++pair) {
      if (w.degenerate_at(pair) != want_degenerate) continue;
      out.push_back({labels[i], labels[j], i, j, w.value_at(pair),
                     w.degenerate_at(pair)});
    }
  }
  return out;
}

void sort_ranked(std::vector<RankedEdge>& edges, MeasureKind kind) {
  std::sort(edges.begin(), edges.end(),
            [kind](const RankedEdge& a, const RankedEdge& b) {
              const double ka = rank_key(kind, a.weight);
              const double kb = rank_key(kind, b.weight);
              if (ka != kb) return ka > kb;
              // Ties break on the unordered label pair so the order does
              // not depend on column numbering.
              const auto& [a_lo, a_hi] = std::minmax(a.label_i, a.label_j);
              const auto& [b_lo, b_hi] = std::minmax(b.label_i, b.label_j);
              if (a_lo != b_lo) return a_lo < b_lo;
              return a_hi < b_hi;
            });
}

}  // namespace

WeightedNetwork build_network(const WeightTable& w,
                              const std::vector<std::string>& labels,
                              const EdgeRule& rule, bool include_degenerate) {
  check_labels(w, labels);
  WeightedNetwork net;
  net.labels = labels;
  net.construction = rule.describe();

  if (rule.kind == EdgeRule::Kind::Threshold) {
    std::size_t pair = 0;
    for (std::size_t i = 0; i < w.n_cols(); ++i) {
      for (std::size_t j = i + 1; j < w.n_cols(); ++j, ++pair) {
        const bool deg = w.degenerate_at(pair);
        if (deg && !include_degenerate) continue;
        if (rank_key(w.kind(), w.value_at(pair)) >= rule.tau)
          net.edges.push_back({i, j, w.value_at(pair), w.kind(), deg});
      }
    }
    return net;
  }

  RankedEdges ranked = rank_edges(w, labels, rule.m, include_degenerate);
  for (const RankedEdge& e : ranked.edges)
    net.edges.push_back({e.i, e.j, e.weight, w.kind(), e.degenerate});
  std::sort(net.edges.begin(), net.edges.end(),
            [](const NetworkEdge& a, const NetworkEdge& b) {
              return a.i != b.i ? a.i < b.i : a.j < b.j;
            });
  return net;
}

RankedEdges rank_edges(const WeightTable& w,
                       const std::vector<std::string>& labels, std::size_t m,
                       bool include_degenerate) {
  check_labels(w, labels);
  RankedEdges result;
  result.edges = collect_edges(w, labels, /*want_degenerate=*/false);
  if (include_degenerate) {
    auto flagged = collect_edges(w, labels, /*want_degenerate=*/true);
    result.edges.insert(result.edges.end(), flagged.begin(), flagged.end());
  }
  sort_ranked(result.edges, w.kind());
  if (result.edges.size() > m) result.edges.resize(m);

  if (!include_degenerate) {
    result.excluded = collect_edges(w, labels, /*want_degenerate=*/true);
    sort_ranked(result.excluded, w.kind());
    if (result.excluded.size() > m) result.excluded.resize(m);
  }
  return result;
}

ComparisonTable compare_measures(const BinaryMatrix& m,
                                 const std::vector<MeasureKind>& kinds,
                                 const std::optional<RegressionMethod>& method,
                                 unsigned n_threads) {
  if (kinds.empty()) throw ConfigError("at least one measure kind is required");
  std::set<MeasureKind> distinct(kinds.begin(), kinds.end());
  if (distinct.size() != kinds.size())
    throw ConfigError("measure kinds must be distinct");

  ComparisonTable table;
  table.labels = m.labels();
  table.n_cols = m.n_cols();
  table.kinds = kinds;
  for (MeasureKind kind : kinds) {
    if (kind == MeasureKind::ConditionalRegression) {
      if (!method)
        throw ConfigError(
            "the conditional kind requires a regression method");
      const WeightTable wt = conditional_edge_weights(m, *method, n_threads);
      std::vector<double> column(wt.size());
      for (std::size_t p = 0; p < wt.size(); ++p)
        column[p] = signed_log_magnitude(wt.value_at(p));
      table.columns.push_back(std::move(column));
    } else {
      table.columns.push_back(all_pairs(m, kind, n_threads).values());
    }
  }
  return table;
}

void write_comparison_csv(const ComparisonTable& table, std::ostream& out) {
  out << "i,j,label_i,label_j";
  for (MeasureKind kind : table.kinds) out << ',' << to_string(kind);
  out << '\n';
  std::size_t pair = 0;
  for (std::size_t i = 0; i < table.n_cols; ++i) {
    for (std::size_t j = i + 1; j < table.n_cols; ++j, ++pair) {
      out << i << ',' << j << ',' << csv_quote(table.labels[i]) << ','
          << csv_quote(table.labels[j]);
      for (const auto& column : table.columns)
        out << ',' << format_weight(column[pair]);
      out << '\n';
    }
  }
}

}  // namespace binassoc
