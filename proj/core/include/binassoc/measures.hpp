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

// Closed-form association measures on 2x2 contingency data for a pair of
// binary variables. All measures are pure functions of the cell proportions;
// degenerate inputs (0/0 denominators, constant margins) are resolved by a
// fixed convention and flagged instead of raising.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

namespace binassoc {

// Raw 2x2 cell counts. Invariant: n00 + n01 + n10 + n11 == n_total.
struct ContingencyCounts {
  std::uint64_t n00 = 0;
  std::uint64_t n01 = 0;
  std::uint64_t n10 = 0;
  std::uint64_t n11 = 0;
  std::uint64_t n_total = 0;
};

// Cell proportions p_ij = n_ij / N. Each lies in [0, 1] and they sum to 1.
// p10 is the proportion with the first variable 1 and the second 0.
struct PairProportions {
  double p00 = 0.0;
  double p01 = 0.0;
  double p10 = 0.0;
  double p11 = 0.0;
};

enum class MeasureKind {
  CoOccurrenceP11,
  Agreement,
  Jaccard,
  Simpson,
  PearsonPhi,
  ConditionalRegression,
};

// Canonical lowercase names, used for CLI flags and CSV column headers.
std::string_view to_string(MeasureKind kind);
std::optional<MeasureKind> measure_kind_from_string(std::string_view name);

// Signed kinds range over the reals (or [-1, 1]); they are ranked and
// thresholded by absolute value. The co-occurrence kinds live in [0, 1].
bool is_signed_kind(MeasureKind kind);

// A measure value plus whether it came from a degenerate-input convention
// rather than the defining formula.
struct MeasureValue {
  double value = 0.0;
  bool degenerate = false;
};

// One weight for one unordered column pair, i < j.
struct AssociationWeight {
  std::size_t i = 0;
  std::size_t j = 0;
  MeasureKind kind = MeasureKind::CoOccurrenceP11;
  double value = 0.0;
  bool degenerate = false;
};

// p_ij = n_ij / n_total. Throws ZeroSample when n_total == 0.
PairProportions proportions_from_counts(const ContingencyCounts& c);

// The plain "both 1" proportion p11.
double p11_weight(const PairProportions& p);

// Fraction of observations where the pair takes the same value: p00 + p11.
double agreement_weight(const PairProportions& p);

// J = p11 / (p11 + p01 + p10). When both variables are constant zero the
// denominator vanishes; the convention value is 0, flagged degenerate.
MeasureValue jaccard(const PairProportions& p);

// S = p11 / (p11 + min(p10, p01)). Equals 1 whenever one variable's support
// contains the other's (with p11 > 0). The 0/0 case returns 0, flagged.
MeasureValue simpson(const PairProportions& p);

// Pearson correlation of the two indicator variables,
//   phi = (p11 - px*py) / sqrt(px (1-px) py (1-py)),  px = p10+p11, py = p01+p11.
// Constant variables (a margin of 0 or 1) are flagged and map to 0, the same
// convention the always-agree pair gets. The result is clamped to [-1, 1].
MeasureValue pearson_phi(const PairProportions& p);

// Dispatch over the five closed-form kinds. ConditionalRegression is not a
// closed-form measure and throws UnsupportedKind.
MeasureValue evaluate_measure(MeasureKind kind, const PairProportions& p);

}  // namespace binassoc
