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

#include "binassoc/measures.hpp"

#include <algorithm>
#include <cmath>

#include "binassoc/error.hpp"

namespace binassoc {

std::string_view to_string(MeasureKind kind) {
  switch (kind) {
    case MeasureKind::CoOccurrenceP11: return "p11";
    case MeasureKind::Agreement: return "agreement";
    case MeasureKind::Jaccard: return "jaccard";
    case MeasureKind::Simpson: return "simpson";
    case MeasureKind::PearsonPhi: return "phi";
    case MeasureKind::ConditionalRegression: return "conditional";
  }
  return "unknown";
}

std::optional<MeasureKind> measure_kind_from_string(std::string_view name) {
  if (name == "p11") return MeasureKind::CoOccurrenceP11;
  if (name == "agreement") return MeasureKind::Agreement;
  if (name == "jaccard") return MeasureKind::Jaccard;
  if (name == "simpson") return MeasureKind::Simpson;
  if (name == "phi") return MeasureKind::PearsonPhi;
  if (name == "conditional") return MeasureKind::ConditionalRegression;
  return std::nullopt;
}

bool is_signed_kind(MeasureKind kind) {
  return kind == MeasureKind::PearsonPhi ||
         kind == MeasureKind::ConditionalRegression;
}

PairProportions proportions_from_counts(const ContingencyCounts& c) {
  if (c.n_total == 0) throw ZeroSample{};
  const double n = static_cast<double>(c.n_total);
  PairProportions p;
  p.p00 = static_cast<double>(c.n00) / n;
  p.p01 = static_cast<double>(c.n01) / n;
  p.p10 = static_cast<double>(c.n10) / n;
  p.p11 = static_cast<double>(c.n11) / n;
  return p;
}

double p11_weight(const PairProportions& p) { return p.p11; }

double agreement_weight(const PairProportions& p) { return p.p00 + p.p11; }

MeasureValue jaccard(const PairProportions& p) {
  // p01 + p10 is summed first so the result is exactly symmetric in the
  // pair roles.
  const double denom = p.p11 + (p.p01 + p.p10);
  if (denom == 0.0) return {0.0, true};
  return {p.p11 / denom, false};
}

MeasureValue simpson(const PairProportions& p) {
  const double denom = p.p11 + std::min(p.p10, p.p01);
  if (denom == 0.0) return {0.0, true};
  return {p.p11 / denom, false};
}

MeasureValue pearson_phi(const PairProportions& p) {
  const double px = p.p10 + p.p11;
  const double py = p.p01 + p.p11;
  const double var = (px * (1.0 - px)) * (py * (1.0 - py));
  if (var <= 0.0) return {0.0, true};
  const double value = (p.p11 - px * py) / std::sqrt(var);
  return {std::clamp(value, -1.0, 1.0), false};
}

MeasureValue evaluate_measure(MeasureKind kind, const PairProportions& p) {
  switch (kind) {
    case MeasureKind::CoOccurrenceP11: return {p11_weight(p), false};
    case MeasureKind::Agreement: return {agreement_weight(p), false};
    case MeasureKind::Jaccard: return jaccard(p);
    case MeasureKind::Simpson: return simpson(p);
    case MeasureKind::PearsonPhi: return pearson_phi(p);
    case MeasureKind::ConditionalRegression: break;
  }
  throw UnsupportedKind(
      "conditional regression weights are produced by "
      "conditional_edge_weights, not from a 2x2 table");
}

}  // namespace binassoc
