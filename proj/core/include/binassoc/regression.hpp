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

// Conditional-independence edge weights via leave-one-out nodewise
// regression: each column is regressed on all the others, coefficients are
// standardized by their standard errors, and the two directed t-statistics
// of a pair are averaged into one symmetric weight.

#pragma once

#include <cstddef>
#include <vector>

#include "binassoc/binary_matrix.hpp"
#include "binassoc/pairwise.hpp"

namespace binassoc {

struct RegressionMethod {
  enum class Family { LinearOls, LogisticIrls, LinearLasso };

  Family family = Family::LinearOls;
  double lambda = 0.0;  // L1 penalty, LinearLasso only

  static RegressionMethod ols() { return {Family::LinearOls, 0.0}; }
  static RegressionMethod logistic() { return {Family::LogisticIrls, 0.0}; }
  static RegressionMethod lasso(double lambda);
};

// Fit of one response column on all remaining columns plus an intercept.
// coefficients/std_errors align with predictor_columns (ascending original
// column index). Dropped predictors keep a 0 coefficient, a NaN standard
// error and an entry in dropped_predictors.
struct RegressionFit {
  std::size_t response = 0;
  double intercept = 0.0;
  std::vector<std::size_t> predictor_columns;
  std::vector<double> coefficients;
  std::vector<double> std_errors;
  std::vector<std::size_t> dropped_predictors;
  double residual_variance = 0.0;
  bool rank_deficient = false;
  bool has_std_errors = true;  // false under the lasso
  int iterations = 0;          // IRLS / coordinate-descent sweeps

  bool dropped(std::size_t column) const;
  // coefficient / std_error for one predictor column; NaN when dropped or
  // when the fit carries no standard errors.
  double t_statistic(std::size_t column) const;
  double coefficient(std::size_t column) const;
};

// Regresses column `response` on every other column plus an intercept.
// Needs K >= 2 and a non-constant response (ConstantResponse otherwise).
//
// LinearOls     least squares via a rank-revealing (column-pivoted)
//               orthogonal factorization. Collinear predictors are dropped
//               rather than producing inflated coefficients; classical
//               homoskedastic standard errors on the retained set.
// LogisticIrls  maximum-likelihood logit fit by iteratively reweighted least
//               squares; standard errors from the observed information.
//               Throws NoConvergence after 100 iterations or when complete
//               separation drives a coefficient past 30 on the logit scale.
// LinearLasso   cyclic coordinate descent on
//                 (1/2N) * ||y - b0 - X b||^2 + lambda * ||b||_1
//               (intercept unpenalized). No standard errors; zeroed
//               coefficients are reported in dropped_predictors.
//
// Throws RankDeficient when fewer observations than retained parameters
// leave no residual degrees of freedom.
RegressionFit nodewise_fit(const BinaryMatrix& m, std::size_t response,
                           const RegressionMethod& method);

// Symmetric pair weights 0.5 * (t_ij + t_ji) from the K nodewise fits
// (raw-coefficient averages under the lasso, which has no standard errors).
// Per-column failures (constant response, no convergence) and dropped or
// exactly-fitted predictors do not abort the table: the touched pairs get
// weight 0 with the degenerate flag set. Any |t| >= 1e6 is likewise treated
// as a collinearity artifact and flagged. Fits run in parallel; the result
// does not depend on the thread count.
WeightTable conditional_edge_weights(const BinaryMatrix& m,
                                     const RegressionMethod& method,
                                     unsigned n_threads = 0);

// sign(w) * log10(1 + |w|): odd, monotone in |w|, finite on [0,1) inputs.
// Used to compress regression weights for comparison tables. Throws
// NonFinite on NaN or infinite input.
double signed_log_magnitude(double w);

}  // namespace binassoc
