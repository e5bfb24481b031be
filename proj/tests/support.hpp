// Shared test fixtures and independent oracles. Everything here is
// deliberately written without the library's fast paths (per-row scans,
// hand-rolled Gauss-Jordan, plain gradient descent) so tests compare two
// genuinely different routes to the same numbers.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "binassoc/binary_matrix.hpp"
#include "binassoc/io.hpp"
#include "binassoc/measures.hpp"

namespace testsupport {

inline double uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Random cell proportions from the interior of the 3-simplex (normalized
// exponentials, i.e. a flat Dirichlet).
inline binassoc::PairProportions random_table(std::mt19937_64& rng) {
  double e[4];
  double sum = 0.0;
  for (double& v : e) {
    v = -std::log(1.0 - uniform(rng));
    sum += v;
  }
  return {e[0] / sum, e[1] / sum, e[2] / sum, e[3] / sum};
}

inline binassoc::BinaryMatrix random_matrix(std::size_t rows, std::size_t cols,
                                            double density,
                                            std::mt19937_64& rng) {
  std::vector<std::string> labels;
  for (std::size_t c = 0; c < cols; ++c)
    labels.push_back("c" + std::to_string(c));
  binassoc::BinaryMatrix m(rows, std::move(labels));
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (uniform(rng) < density) m.set(r, c);
  return m;
}

// Per-row scan over single bits: the counting oracle all word-level
// arithmetic is checked against.
inline binassoc::ContingencyCounts naive_pair_counts(
    const binassoc::BinaryMatrix& m, std::size_t i, std::size_t j) {
  binassoc::ContingencyCounts c;
  c.n_total = m.n_rows();
  for (std::size_t r = 0; r < m.n_rows(); ++r) {
    const bool a = m.test(r, i);
    const bool b = m.test(r, j);
    if (a && b) {
      ++c.n11;
    } else if (a) {
      ++c.n10;
    } else if (b) {
      ++c.n01;
    } else {
      ++c.n00;
    }
  }
  return c;
}

// The worked 4-member / 8-group example matrix, dense encoding.
inline const char* kToyDenseCsv =
    "Software Dev,Big Data,C++,Tech Meetup,Web Design,Poker,Musician,Jazz\n"
    "1,1,1,0,0,1,0,0\n"
    "1,0,1,1,0,0,0,0\n"
    "0,0,0,0,1,1,1,0\n"
    "0,0,0,0,0,1,1,1\n";

// The same memberships as a pair list (first-appearance column order
// differs from the dense encoding).
inline const char* kToyPairsCsv =
    "member_id,group_id\n"
    "A,Software Development\n"
    "A,Big Data\n"
    "A,Learn C++\n"
    "A,Poker Nights\n"
    "B,Technology Meetup\n"
    "B,Learn C++\n"
    "B,Software Development\n"
    "C,Web Designing\n"
    "C,Poker Nights\n"
    "C,Local Musicians\n"
    "D,Poker Nights\n"
    "D,Local Musicians\n"
    "D,Jazz Band\n";

inline binassoc::BinaryMatrix toy_matrix() {
  std::istringstream in(kToyDenseCsv);
  return binassoc::read_dense_csv(in);
}

// Row-major design matrix for regressing `response` on all other columns:
// intercept first, then the remaining columns in ascending index order.
inline std::vector<std::vector<double>> design_rows(
    const binassoc::BinaryMatrix& m, std::size_t response,
    std::vector<double>& y) {
  std::vector<std::vector<double>> x(m.n_rows());
  y.resize(m.n_rows());
  for (std::size_t r = 0; r < m.n_rows(); ++r) {
    x[r].push_back(1.0);
    for (std::size_t c = 0; c < m.n_cols(); ++c) {
      if (c == response) {
        y[r] = m.test(r, c) ? 1.0 : 0.0;
      } else {
        x[r].push_back(m.test(r, c) ? 1.0 : 0.0);
      }
    }
  }
  return x;
}

// Gauss-Jordan inverse with partial pivoting. Returns false when singular.
inline bool invert_matrix(std::vector<std::vector<double>> a,
                          std::vector<std::vector<double>>& inv) {
  const std::size_t n = a.size();
  inv.assign(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1.0;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(a[r][col]) > std::abs(a[pivot][col])) pivot = r;
    if (std::abs(a[pivot][col]) < 1e-12) return false;
    std::swap(a[pivot], a[col]);
    std::swap(inv[pivot], inv[col]);
    const double d = a[col][col];
    for (std::size_t c = 0; c < n; ++c) {
      a[col][c] /= d;
      inv[col][c] /= d;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      const double f = a[r][col];
      if (f == 0.0) continue;
      for (std::size_t c = 0; c < n; ++c) {
        a[r][c] -= f * a[col][c];
        inv[r][c] -= f * inv[col][c];
      }
    }
  }
  return true;
}

struct OlsOracle {
  std::vector<double> beta;  // intercept first
  std::vector<double> se;
  double sigma2 = 0.0;
};

// Textbook normal-equations least squares: beta = (X'X)^-1 X'y with
// classical standard errors. Only valid on full-rank designs.
inline bool ols_normal_equations(const std::vector<std::vector<double>>& x,
                                 const std::vector<double>& y, OlsOracle& out) {
  const std::size_t n = x.size();
  const std::size_t p = x[0].size();
  std::vector<std::vector<double>> xtx(p, std::vector<double>(p, 0.0));
  std::vector<double> xty(p, 0.0);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t a = 0; a < p; ++a) {
      xty[a] += x[r][a] * y[r];
      for (std::size_t b = 0; b < p; ++b) xtx[a][b] += x[r][a] * x[r][b];
    }
  }
  std::vector<std::vector<double>> inv;
  if (!invert_matrix(xtx, inv)) return false;
  out.beta.assign(p, 0.0);
  for (std::size_t a = 0; a < p; ++a)
    for (std::size_t b = 0; b < p; ++b) out.beta[a] += inv[a][b] * xty[b];
  double rss = 0.0;
  for (std::size_t r = 0; r < n; ++r) {
    double fit = 0.0;
    for (std::size_t a = 0; a < p; ++a) fit += x[r][a] * out.beta[a];
    rss += (y[r] - fit) * (y[r] - fit);
  }
  out.sigma2 = rss / static_cast<double>(n - p);
  out.se.assign(p, 0.0);
  for (std::size_t a = 0; a < p; ++a)
    out.se[a] = std::sqrt(out.sigma2 * inv[a][a]);
  return true;
}

// Logistic maximum likelihood by BFGS with Armijo backtracking: a generic
// quasi-Newton convex optimizer whose curvature comes from gradient
// differences, not the analytic XtWX Hessian the IRLS path solves with.
// Returns false if the gradient tolerance is not reached.
inline bool logistic_mle_oracle(const std::vector<std::vector<double>>& x,
                                const std::vector<double>& y,
                                std::vector<double>& beta,
                                double grad_tol = 1e-10,
                                int max_iters = 5000) {
  const std::size_t n = x.size();
  const std::size_t p = x[0].size();
  beta.assign(p, 0.0);

  auto negloglik = [&](const std::vector<double>& b) {
    double ll = 0.0;
    for (std::size_t r = 0; r < n; ++r) {
      double eta = 0.0;
      for (std::size_t a = 0; a < p; ++a) eta += x[r][a] * b[a];
      const double softplus = eta > 0.0 ? eta + std::log1p(std::exp(-eta))
                                        : std::log1p(std::exp(eta));
      ll += y[r] * eta - softplus;
    }
    return -ll;
  };
  auto gradient = [&](const std::vector<double>& b, std::vector<double>& g) {
    std::fill(g.begin(), g.end(), 0.0);
    for (std::size_t r = 0; r < n; ++r) {
      double eta = 0.0;
      for (std::size_t a = 0; a < p; ++a) eta += x[r][a] * b[a];
      const double mu = 1.0 / (1.0 + std::exp(-eta));
      for (std::size_t a = 0; a < p; ++a) g[a] -= x[r][a] * (y[r] - mu);
    }
  };

  std::vector<std::vector<double>> h(p, std::vector<double>(p, 0.0));
  for (std::size_t i = 0; i < p; ++i) h[i][i] = 1.0;
  std::vector<double> g(p), g_next(p), dir(p), s(p), yv(p), hy(p), trial(p);

  double f = negloglik(beta);
  gradient(beta, g);
  for (int it = 0; it < max_iters; ++it) {
    double gmax = 0.0;
    for (double v : g) gmax = std::max(gmax, std::abs(v));
    if (gmax < grad_tol) return true;

    double dir_dot_g = 0.0;
    for (std::size_t i = 0; i < p; ++i) {
      dir[i] = 0.0;
      for (std::size_t j = 0; j < p; ++j) dir[i] -= h[i][j] * g[j];
    }
    for (std::size_t i = 0; i < p; ++i) dir_dot_g += dir[i] * g[i];
    if (dir_dot_g >= 0.0) {  // lost positive definiteness; restart
      for (std::size_t i = 0; i < p; ++i) {
        std::fill(h[i].begin(), h[i].end(), 0.0);
        h[i][i] = 1.0;
        dir[i] = -g[i];
      }
      dir_dot_g = 0.0;
      for (double v : g) dir_dot_g -= v * v;
    }

    // Armijo with a floating-noise allowance: near the optimum the true
    // decrease per step is below the rounding error of the objective, so a
    // strict test would stall before the gradient tolerance is reached.
    const double slack =
        64.0 * std::numeric_limits<double>::epsilon() * (std::abs(f) + 1.0);
    double t = 1.0;
    double f_trial;
    while (true) {
      for (std::size_t i = 0; i < p; ++i) trial[i] = beta[i] + t * dir[i];
      f_trial = negloglik(trial);
      if (f_trial <= f + 1e-4 * t * dir_dot_g + slack) break;
      t *= 0.5;
      if (t < 1e-20) return false;
    }
    for (std::size_t i = 0; i < p; ++i) s[i] = t * dir[i];
    beta = trial;
    f = f_trial;
    gradient(beta, g_next);
    double sy = 0.0;
    for (std::size_t i = 0; i < p; ++i) {
      yv[i] = g_next[i] - g[i];
      sy += s[i] * yv[i];
    }
    if (sy > 1e-14) {
      double yhy = 0.0;
      for (std::size_t i = 0; i < p; ++i) {
        hy[i] = 0.0;
        for (std::size_t j = 0; j < p; ++j) hy[i] += h[i][j] * yv[j];
        yhy += yv[i] * hy[i];
      }
      const double c = (sy + yhy) / (sy * sy);
      for (std::size_t i = 0; i < p; ++i)
        for (std::size_t j = 0; j < p; ++j)
          h[i][j] += c * s[i] * s[j] - (s[i] * hy[j] + hy[i] * s[j]) / sy;
    }
    g = g_next;
  }
  return false;
}

}  // namespace testsupport
