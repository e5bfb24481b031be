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

#include "binassoc/regression.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <thread>

#include <Eigen/Dense>

#include "binassoc/error.hpp"

namespace binassoc {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// t-statistics at or past this magnitude are numerical collinearity
// artifacts, not estimates; the pair gets flagged instead.
constexpr double kArtifactT = 1e6;

constexpr int kIrlsMaxIterations = 100;
constexpr double kIrlsRelTol = 1e-10;
constexpr double kSeparationLogit = 30.0;

constexpr int kLassoMaxSweeps = 200000;
constexpr double kLassoTol = 1e-13;

struct Design {
  Eigen::MatrixXd x;  // N x (p+1), column 0 is the intercept
  Eigen::VectorXd y;
  std::vector<std::size_t> predictor_columns;  // matrix column per design col 1..p
};

Design build_design(const BinaryMatrix& m, std::size_t response) {
  Design d;
  const auto n = static_cast<Eigen::Index>(m.n_rows());
  const std::size_t k = m.n_cols();
  d.x.resize(n, static_cast<Eigen::Index>(k));  // intercept + (k-1) predictors
  d.y.resize(n);
  d.x.col(0).setOnes();
  d.predictor_columns.reserve(k - 1);
  Eigen::Index out = 1;
  for (std::size_t c = 0; c < k; ++c) {
    if (c == response) {
      for (std::size_t r = 0; r < m.n_rows(); ++r)
        d.y[static_cast<Eigen::Index>(r)] = m.test(r, c) ? 1.0 : 0.0;
      continue;
    }
    d.predictor_columns.push_back(c);
    for (std::size_t r = 0; r < m.n_rows(); ++r)
      d.x(static_cast<Eigen::Index>(r), out) = m.test(r, c) ? 1.0 : 0.0;
    ++out;
  }
  return d;
}

// Rank-revealing split of the design columns into retained and dropped, in
// pivot order (retained[t] is the design column at pivoted position t).
struct RankSplit {
  std::vector<Eigen::Index> retained;
  std::vector<Eigen::Index> dropped;
};

RankSplit rank_split(const Eigen::ColPivHouseholderQR<Eigen::MatrixXd>& qr) {
  RankSplit split;
  const Eigen::Index rank = qr.rank();
  const auto& perm = qr.colsPermutation().indices();
  for (Eigen::Index t = 0; t < perm.size(); ++t) {
    if (t < rank) {
      split.retained.push_back(perm[t]);
    } else {
      split.dropped.push_back(perm[t]);
    }
  }
  return split;
}

void record_dropped(RegressionFit& fit, const Design& d,
                    const std::vector<Eigen::Index>& dropped_design_cols) {
  for (Eigen::Index dc : dropped_design_cols) {
    if (dc == 0) continue;  // intercept aliased by a constant predictor
    fit.dropped_predictors.push_back(d.predictor_columns[dc - 1]);
  }
  std::sort(fit.dropped_predictors.begin(), fit.dropped_predictors.end());
}

void scatter_solution(RegressionFit& fit, const Design& d,
                      const Eigen::VectorXd& beta,
                      const Eigen::VectorXd& se_by_design_col) {
  fit.intercept = beta[0];
  const std::size_t p = d.predictor_columns.size();
  fit.predictor_columns = d.predictor_columns;
  fit.coefficients.resize(p);
  fit.std_errors.resize(p);
  for (std::size_t j = 0; j < p; ++j) {
    fit.coefficients[j] = beta[static_cast<Eigen::Index>(j + 1)];
    fit.std_errors[j] = se_by_design_col[static_cast<Eigen::Index>(j + 1)];
  }
}

RegressionFit fit_ols(const BinaryMatrix& m, std::size_t response) {
  const Design d = build_design(m, response);
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(d.x);
  const Eigen::Index rank = qr.rank();
  const RankSplit split = rank_split(qr);

  const Eigen::Index dof = d.x.rows() - rank;
  if (rank == 0 || dof <= 0)
    throw RankDeficient("no residual degrees of freedom (" +
                            std::to_string(d.x.rows()) + " rows, rank " +
                            std::to_string(rank) + ")",
                        {});

  const Eigen::VectorXd beta = qr.solve(d.y);  // dropped columns get 0
  const double rss = (d.y - d.x * beta).squaredNorm();
  const double sigma2 = rss / static_cast<double>(dof);

  // (Xr' Xr)^-1 diagonal from the R factor: row norms of R11^-1, indexed by
  // pivot position.
  const Eigen::MatrixXd r11 = qr.matrixQR()
                                  .topLeftCorner(rank, rank)
                                  .template triangularView<Eigen::Upper>();
  const Eigen::MatrixXd rinv =
      r11.triangularView<Eigen::Upper>().solve(
          Eigen::MatrixXd::Identity(rank, rank));

  Eigen::VectorXd se(d.x.cols());
  se.setConstant(kNaN);
  for (Eigen::Index t = 0; t < rank; ++t)
    se[split.retained[static_cast<std::size_t>(t)]] =
        std::sqrt(sigma2 * rinv.row(t).squaredNorm());

  RegressionFit fit;
  fit.response = response;
  fit.residual_variance = sigma2;
  fit.rank_deficient = rank < d.x.cols();
  scatter_solution(fit, d, beta, se);
  record_dropped(fit, d, split.dropped);
  return fit;
}

double log_sigmoid_likelihood(const Eigen::VectorXd& y,
                              const Eigen::VectorXd& eta) {
  double ll = 0.0;
  for (Eigen::Index i = 0; i < y.size(); ++i) {
    const double e = eta[i];
    const double softplus =
        e > 0.0 ? e + std::log1p(std::exp(-e)) : std::log1p(std::exp(e));
    ll += y[i] * e - softplus;
  }
  return ll;
}

RegressionFit fit_logistic(const BinaryMatrix& m, std::size_t response) {
  const Design d = build_design(m, response);

  // Reuse the linear rank screen so collinear predictors are dropped the
  // same way as under OLS.
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(d.x);
  const Eigen::Index rank = qr.rank();
  const RankSplit split = rank_split(qr);
  if (rank == 0 || d.x.rows() <= rank)
    throw RankDeficient("no residual degrees of freedom for the logit fit", {});

  Eigen::MatrixXd xr(d.x.rows(), rank);
  for (Eigen::Index t = 0; t < rank; ++t)
    xr.col(t) = d.x.col(split.retained[static_cast<std::size_t>(t)]);

  Eigen::VectorXd beta = Eigen::VectorXd::Zero(rank);
  double ll_old = log_sigmoid_likelihood(d.y, xr * beta);
  Eigen::MatrixXd info;
  int iterations = 0;
  bool converged = false;
  while (iterations < kIrlsMaxIterations) {
    ++iterations;
    const Eigen::VectorXd eta = xr * beta;
    const Eigen::VectorXd mu =
        eta.unaryExpr([](double e) { return 1.0 / (1.0 + std::exp(-e)); });
    const Eigen::VectorXd w = mu.array() * (1.0 - mu.array());
    info = xr.transpose() * w.asDiagonal() * xr;
    const Eigen::VectorXd grad = xr.transpose() * (d.y - mu);
    const Eigen::LDLT<Eigen::MatrixXd> ldlt(info);
    if (ldlt.info() != Eigen::Success)
      throw NoConvergence("IRLS information matrix is not factorizable",
                          iterations);
    beta += ldlt.solve(grad);

    if (beta.cwiseAbs().maxCoeff() > kSeparationLogit)
      throw NoConvergence(
          "separation detected: a coefficient passed " +
              std::to_string(kSeparationLogit) + " on the logit scale",
          iterations);

    const double ll = log_sigmoid_likelihood(d.y, xr * beta);
    if (std::abs(ll - ll_old) < kIrlsRelTol * (std::abs(ll_old) + 1.0)) {
      converged = true;
      ll_old = ll;
      break;
    }
    ll_old = ll;
  }
  if (!converged)
    throw NoConvergence("IRLS did not converge", kIrlsMaxIterations);

  // Observed information at the optimum gives the standard errors.
  const Eigen::MatrixXd cov =
      info.ldlt().solve(Eigen::MatrixXd::Identity(rank, rank));

  Eigen::VectorXd beta_full = Eigen::VectorXd::Zero(d.x.cols());
  Eigen::VectorXd se(d.x.cols());
  se.setConstant(kNaN);
  for (Eigen::Index t = 0; t < rank; ++t) {
    const Eigen::Index dc = split.retained[static_cast<std::size_t>(t)];
    beta_full[dc] = beta[t];
    se[dc] = std::sqrt(cov(t, t));
  }

  RegressionFit fit;
  fit.response = response;
  fit.residual_variance = 0.0;  // no dispersion parameter in the logit model
  fit.rank_deficient = rank < d.x.cols();
  fit.iterations = iterations;
  scatter_solution(fit, d, beta_full, se);
  record_dropped(fit, d, split.dropped);
  return fit;
}

double soft_threshold(double v, double lambda) {
  if (v > lambda) return v - lambda;
  if (v < -lambda) return v + lambda;
  return 0.0;
}

RegressionFit fit_lasso(const BinaryMatrix& m, std::size_t response,
                        double lambda) {
  const Design d = build_design(m, response);
  const auto n = static_cast<double>(d.x.rows());
  const Eigen::Index p = d.x.cols() - 1;

  Eigen::VectorXd col_scale(p);  // (x_j . x_j) / N
  for (Eigen::Index j = 0; j < p; ++j)
    col_scale[j] = d.x.col(j + 1).squaredNorm() / n;

  Eigen::VectorXd beta = Eigen::VectorXd::Zero(p);
  double intercept = d.y.mean();
  Eigen::VectorXd resid = d.y.array() - intercept;

  int sweeps = 0;
  while (sweeps < kLassoMaxSweeps) {
    ++sweeps;
    double max_delta = 0.0;
    const double mean_resid = resid.mean();
    intercept += mean_resid;
    resid.array() -= mean_resid;
    max_delta = std::abs(mean_resid);
    for (Eigen::Index j = 0; j < p; ++j) {
      if (col_scale[j] == 0.0) continue;  // all-zero predictor
      const double rho = d.x.col(j + 1).dot(resid) / n + col_scale[j] * beta[j];
      const double updated = soft_threshold(rho, lambda) / col_scale[j];
      const double delta = updated - beta[j];
      if (delta != 0.0) {
        resid -= delta * d.x.col(j + 1);
        beta[j] = updated;
        max_delta = std::max(max_delta, std::abs(delta));
      }
    }
    if (max_delta < kLassoTol) break;
  }

  RegressionFit fit;
  fit.response = response;
  fit.has_std_errors = false;
  fit.iterations = sweeps;
  fit.residual_variance = resid.squaredNorm() / n;
  Eigen::VectorXd beta_full(p + 1);
  beta_full[0] = intercept;
  beta_full.tail(p) = beta;
  Eigen::VectorXd se(p + 1);
  se.setConstant(kNaN);
  scatter_solution(fit, d, beta_full, se);
  for (Eigen::Index j = 0; j < p; ++j)
    if (beta[j] == 0.0)
      fit.dropped_predictors.push_back(
          d.predictor_columns[static_cast<std::size_t>(j)]);
  return fit;
}

}  // namespace

RegressionMethod RegressionMethod::lasso(double lambda) {
  if (!(std::isfinite(lambda) && lambda >= 0.0))
    throw ConfigError("lasso penalty must be finite and nonnegative");
  return {Family::LinearLasso, lambda};
}

bool RegressionFit::dropped(std::size_t column) const {
  return std::binary_search(dropped_predictors.begin(),
                            dropped_predictors.end(), column);
}

double RegressionFit::coefficient(std::size_t column) const {
  const auto it = std::lower_bound(predictor_columns.begin(),
                                   predictor_columns.end(), column);
  if (it == predictor_columns.end() || *it != column)
    throw IndexOutOfRange("column " + std::to_string(column) +
                          " is not a predictor of this fit");
  return coefficients[static_cast<std::size_t>(
      it - predictor_columns.begin())];
}

double RegressionFit::t_statistic(std::size_t column) const {
  const auto it = std::lower_bound(predictor_columns.begin(),
                                   predictor_columns.end(), column);
  if (it == predictor_columns.end() || *it != column)
    throw IndexOutOfRange("column " + std::to_string(column) +
                          " is not a predictor of this fit");
  if (!has_std_errors) return kNaN;
  const auto idx = static_cast<std::size_t>(it - predictor_columns.begin());
  return coefficients[idx] / std_errors[idx];
}

RegressionFit nodewise_fit(const BinaryMatrix& m, std::size_t response,
                           const RegressionMethod& method) {
  if (response >= m.n_cols())
    throw IndexOutOfRange("response column " + std::to_string(response) +
                          " out of range [0, " + std::to_string(m.n_cols()) +
                          ")");
  if (m.n_cols() < 2)
    throw DataError("nodewise regression needs at least two columns");
  const std::size_t ones = m.column_popcount(response);
  if (ones == 0 || ones == m.n_rows()) throw ConstantResponse(response);

  switch (method.family) {
    case RegressionMethod::Family::LinearOls:
      return fit_ols(m, response);
    case RegressionMethod::Family::LogisticIrls:
      return fit_logistic(m, response);
    case RegressionMethod::Family::LinearLasso:
      if (!(std::isfinite(method.lambda) && method.lambda >= 0.0))
        throw ConfigError("lasso penalty must be finite and nonnegative");
      return fit_lasso(m, response, method.lambda);
  }
  throw ConfigError("unknown regression method");
}

WeightTable conditional_edge_weights(const BinaryMatrix& m,
                                     const RegressionMethod& method,
                                     unsigned n_threads) {
  const std::size_t k = m.n_cols();
  if (k < 2) throw DataError("conditional weights need at least two columns");

  std::vector<RegressionFit> fits(k);
  std::vector<std::uint8_t> failed(k, 0);
  std::exception_ptr unexpected;

  unsigned hw = n_threads != 0 ? n_threads : std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  hw = static_cast<unsigned>(std::min<std::size_t>(hw, k));
  std::vector<std::thread> workers;
  std::mutex mu;
  for (unsigned t = 0; t < hw; ++t) {
    workers.emplace_back([&, t] {
      for (std::size_t col = t; col < k; col += hw) {
        try {
          fits[col] = nodewise_fit(m, col, method);
        } catch (const NumericError&) {
          failed[col] = 1;
        } catch (...) {
          failed[col] = 1;
          std::lock_guard<std::mutex> lock(mu);
          if (!unexpected) unexpected = std::current_exception();
        }
      }
    });
  }
  for (auto& w : workers) w.join();
  if (unexpected) std::rethrow_exception(unexpected);

  const bool use_t = method.family != RegressionMethod::Family::LinearLasso;
  WeightTable table(k, MeasureKind::ConditionalRegression);
  std::size_t pair = 0;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j, ++pair) {
      if (failed[i] || failed[j]) {
        table.set(pair, 0.0, true);
        continue;
      }
      if (use_t) {
        // Dropped predictors carry NaN standard errors, so their t is NaN
        // and the pair lands in the degenerate branch below.
        const double tij = fits[i].t_statistic(j);
        const double tji = fits[j].t_statistic(i);
        const double weight = 0.5 * (tij + tji);
        const bool artifact = !std::isfinite(weight) ||
                              std::abs(tij) >= kArtifactT ||
                              std::abs(tji) >= kArtifactT;
        table.set(pair, artifact ? 0.0 : weight, artifact);
      } else {
        // Lasso: no standard errors; average the raw coefficients. A zeroed
        // coefficient is the estimator's selection result, not an artifact.
        const double weight =
            0.5 * (fits[i].coefficient(j) + fits[j].coefficient(i));
        table.set(pair, weight, false);
      }
    }
  }
  return table;
}

double signed_log_magnitude(double w) {
  if (!std::isfinite(w))
    throw NonFinite("signed log magnitude requires a finite weight");
  return std::copysign(std::log10(1.0 + std::abs(w)), w);
}

}  // namespace binassoc
