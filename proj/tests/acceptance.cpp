// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// fails. Pass the CLI path as argv[1] (or via BINASSOC_BIN) so the
// determinism criterion can spawn real commands.

#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "binassoc/error.hpp"
#include "binassoc/io.hpp"
#include "binassoc/measures.hpp"
#include "binassoc/network.hpp"
#include "binassoc/pairwise.hpp"
#include "binassoc/regression.hpp"
#include "binassoc/synthetic.hpp"
#include "support.hpp"

using namespace binassoc;
namespace fs = std::filesystem;

namespace {

std::string g_cli_path;

struct Criterion {
  int number;
  std::string description;
  double time_limit_s;  // 0 = no limit enforced
  std::function<bool(std::string&)> run;
};

bool close_rel(double a, double b, double tol) {
  return std::abs(a - b) <= tol * (1.0 + std::max(std::abs(a), std::abs(b)));
}

// --- criterion 1: the voting worked example -------------------------------

bool voting_example(std::string& detail) {
  const MeasureValue j_xy = jaccard({0.0, 0.0, 0.3, 0.7});
  const MeasureValue j_ab = jaccard({0.3, 0.0, 0.0, 0.7});
  detail = "J_XY=" + format_weight(j_xy.value) +
           " J_AB=" + format_weight(j_ab.value);
  return j_xy.value == 0.7 && j_ab.value == 1.0 && !j_xy.degenerate &&
         !j_ab.degenerate;
}

// --- criterion 2: measure ordering ----------------------------------------

bool ordering_suite(std::string& detail) {
  std::mt19937_64 rng(1);
  int violations = 0;
  int checked = 0;
  while (checked < 10000) {
    const PairProportions p = testsupport::random_table(rng);
    if (p.p11 <= 0.0) continue;
    ++checked;
    const double j = jaccard(p).value;
    const double s = simpson(p).value;
    if (!(0.0 <= p.p11 && p.p11 <= j && j <= s && s <= 1.0)) ++violations;
  }
  detail = std::to_string(checked) + " tables, " + std::to_string(violations) +
           " violations";
  return violations == 0;
}

// --- criterion 3: phi conventions and bounds ------------------------------

bool phi_conventions(std::string& detail) {
  const MeasureValue always_yes = pearson_phi({0.0, 0.0, 0.0, 1.0});
  const MeasureValue always_no = pearson_phi({1.0, 0.0, 0.0, 0.0});
  const MeasureValue one_constant = pearson_phi({0.0, 0.0, 0.5, 0.5});
  if (always_yes.value != 0.0 || !always_yes.degenerate) return false;
  if (always_no.value != 0.0 || !always_no.degenerate) return false;
  if (one_constant.value != 0.0 || !one_constant.degenerate) return false;

  std::mt19937_64 rng(2);
  for (int t = 0; t < 10000; ++t) {
    const PairProportions p = testsupport::random_table(rng);
    const double phi = pearson_phi(p).value;
    if (!(phi >= -1.0 && phi <= 1.0)) return false;
  }
  double worst = 0.0;
  for (int t = 0; t < 10000; ++t) {
    const double px = 0.02 + 0.96 * testsupport::uniform(rng);
    const double py = 0.02 + 0.96 * testsupport::uniform(rng);
    const double p11 = px * py;
    const MeasureValue v =
        pearson_phi({(1.0 - px) * (1.0 - py), py - p11, px - p11, p11});
    worst = std::max(worst, std::abs(v.value));
  }
  detail = "conventions hold; |phi| at exact independence <= " +
           format_weight(worst);
  return worst < 1e-12;
}

// --- criterion 4: counting oracle -----------------------------------------

bool counting_oracle(std::string& detail) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 50; ++t) {
    const double density = 0.02 + 0.9 * testsupport::uniform(rng);
    const BinaryMatrix m = testsupport::random_matrix(200, 50, density, rng);
    const WeightTable w = all_pairs(m, MeasureKind::CoOccurrenceP11);
    for (std::size_t i = 0; i < m.n_cols(); ++i) {
      for (std::size_t j = i + 1; j < m.n_cols(); ++j) {
        const ContingencyCounts fast = pair_counts(m, i, j);
        const ContingencyCounts slow = testsupport::naive_pair_counts(m, i, j);
        if (fast.n00 != slow.n00 || fast.n01 != slow.n01 ||
            fast.n10 != slow.n10 || fast.n11 != slow.n11 ||
            fast.n_total != slow.n_total)
          return false;
        const double expected = p11_weight(proportions_from_counts(slow));
        if (w.value(i, j) != expected) return false;
      }
    }
  }
  detail = "50 matrices, 61250 pairs, bit-for-bit equal";
  return true;
}

// --- criterion 5: feasibility envelopes -----------------------------------

bool envelopes(std::string& detail) {
  const FeasibleEnvelope p11_env = feasible_envelope(EnvelopeAbscissa::P11, 129);
  const FeasibleEnvelope j_env =
      feasible_envelope(EnvelopeAbscissa::Jaccard, 129);

  std::mt19937_64 rng(4);
  int escapes = 0;
  for (int t = 0; t < 10000; ++t) {
    const PairProportions p = testsupport::random_table(rng);
    const MeasureValue phi = pearson_phi(p);
    if (phi.degenerate) continue;

    const std::size_t gp = p11_env.nearest_index(p.p11);
    if (phi.value < p11_env.min_corr[gp] - 0.01 ||
        phi.value > p11_env.max_corr[gp] + 0.01)
      ++escapes;

    const MeasureValue j = jaccard(p);
    if (!j.degenerate) {
      const std::size_t gj = j_env.nearest_index(j.value);
      if (phi.value < j_env.min_corr[gj] - 0.01 ||
          phi.value > j_env.max_corr[gj] + 0.01)
        ++escapes;
    }
  }

  bool monotone = true;
  for (std::size_t g = 1; g < p11_env.abscissa.size(); ++g)
    if (p11_env.min_corr[g] < p11_env.min_corr[g - 1]) monotone = false;

  detail = std::to_string(escapes) + " escapes; min_corr monotone=" +
           (monotone ? "yes" : "no");
  return escapes == 0 && monotone;
}

// --- criterion 6: conditional vs marginal separation ----------------------

bool confounder_separation(std::string& detail) {
  int phi_ok = 0;
  int conditional_null = 0;
  const int seeds = 20;
  for (int s = 0; s < seeds; ++s) {
    const BinaryMatrix m =
        sample_confounder(10000, 0.2, 1000 + static_cast<std::uint64_t>(s));
    const WeightTable phi = all_pairs(m, MeasureKind::PearsonPhi);
    if (phi.value(1, 2) > 0.3) ++phi_ok;
    const WeightTable cond =
        conditional_edge_weights(m, RegressionMethod::ols());
    if (!cond.degenerate(1, 2) && std::abs(cond.value(1, 2)) < 3.0)
      ++conditional_null;
  }
  detail = "phi(B,C)>0.3 in " + std::to_string(phi_ok) + "/20; |weight|<3 in " +
           std::to_string(conditional_null) + "/20";
  return phi_ok == seeds && conditional_null >= 19;
}

// --- criterion 7: regression oracles --------------------------------------

bool regression_oracles(std::string& detail) {
  std::mt19937_64 rng(5);
  for (int instance = 0; instance < 10; ++instance) {
    BinaryMatrix m = testsupport::random_matrix(200, 6, 0.5, rng);
    bool ok = true;
    for (std::size_t c = 0; c < m.n_cols(); ++c) {
      const std::size_t pop = m.column_popcount(c);
      ok = ok && pop > 0 && pop < m.n_rows();
    }
    if (!ok) {
      --instance;
      continue;
    }
    const std::size_t response = instance % m.n_cols();

    std::vector<double> y;
    const auto x = testsupport::design_rows(m, response, y);

    // OLS vs dense normal equations.
    const RegressionFit ols = nodewise_fit(m, response, RegressionMethod::ols());
    testsupport::OlsOracle oracle;
    if (!testsupport::ols_normal_equations(x, y, oracle)) return false;
    if (!close_rel(ols.intercept, oracle.beta[0], 1e-8)) return false;
    for (std::size_t j = 0; j < ols.coefficients.size(); ++j) {
      if (!close_rel(ols.coefficients[j], oracle.beta[j + 1], 1e-8))
        return false;
      if (!close_rel(ols.std_errors[j], oracle.se[j + 1], 1e-8)) return false;
    }

    // Lasso at zero penalty reproduces OLS.
    const RegressionFit lasso =
        nodewise_fit(m, response, RegressionMethod::lasso(0.0));
    if (!close_rel(lasso.intercept, ols.intercept, 1e-8)) return false;
    for (std::size_t j = 0; j < ols.coefficients.size(); ++j)
      if (!close_rel(lasso.coefficients[j], ols.coefficients[j], 1e-8))
        return false;

    // Logistic IRLS vs a quasi-Newton convex optimizer.
    const RegressionFit logit =
        nodewise_fit(m, response, RegressionMethod::logistic());
    std::vector<double> qn;
    if (!testsupport::logistic_mle_oracle(x, y, qn)) return false;
    if (std::abs(logit.intercept - qn[0]) >= 1e-6) return false;
    for (std::size_t j = 0; j < logit.coefficients.size(); ++j)
      if (std::abs(logit.coefficients[j] - qn[j + 1]) >= 1e-6) return false;
  }
  detail = "10 instances: OLS rel 1e-8, lasso(0) rel 1e-8, logit abs 1e-6";
  return true;
}

// --- criterion 8: collinearity hygiene ------------------------------------

bool collinearity_hygiene(std::string& detail) {
  std::mt19937_64 rng(6);
  BinaryMatrix m(80, {"a", "b", "c", "dup_a"});
  for (std::size_t r = 0; r < 80; ++r) {
    const bool a = testsupport::uniform(rng) < 0.5;
    if (a) {
      m.set(r, 0);
      m.set(r, 3);
    }
    if (testsupport::uniform(rng) < 0.4) m.set(r, 1);
    if (testsupport::uniform(rng) < 0.6) m.set(r, 2);
  }

  for (const RegressionMethod method :
       {RegressionMethod::ols(), RegressionMethod::logistic()}) {
    const WeightTable w = conditional_edge_weights(m, method);
    if (!w.degenerate(0, 3)) return false;
    for (std::size_t p = 0; p < w.size(); ++p) {
      if (!std::isfinite(w.value_at(p))) return false;
      if (std::abs(w.value_at(p)) >= 1e6) return false;
    }
  }
  detail = "duplicate pair flagged; all weights finite and < 1e6";
  return true;
}

// --- criterion 9: performance smoke ---------------------------------------

bool performance_smoke(std::string& detail) {
  const std::vector<double> marginals(1000, 0.1);
  const BinaryMatrix m = sample_dyadic_independent(marginals, 10000, 7);
  const auto start = std::chrono::steady_clock::now();
  const WeightTable w = all_pairs(m, MeasureKind::CoOccurrenceP11);
  const std::chrono::duration<double> elapsed =
      std::chrono::steady_clock::now() - start;
  detail = "K=1000, N=10000: " + std::to_string(w.size()) + " pairs in " +
           std::to_string(elapsed.count()) + " s";
  return elapsed.count() < 10.0 && w.size() == 499500;
}

// --- criterion 10: CLI determinism ----------------------------------------

int run_cli(const std::string& args) {
  const int status = std::system((g_cli_path + " " + args).c_str());
  return status == -1 ? -1 : WEXITSTATUS(status);
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool cli_determinism(std::string& detail) {
  if (g_cli_path.empty()) {
    detail = "CLI path not provided (argv[1] or BINASSOC_BIN)";
    return false;
  }
  const fs::path dir =
      fs::temp_directory_path() / ("binassoc_accept_" + std::to_string(getpid()));
  fs::create_directories(dir);
  const auto p = [&](const std::string& name) { return (dir / name).string(); };
  const std::string null_redirect = " > /dev/null 2>&1";

  bool ok = true;
  auto expect_same = [&](const std::string& first, const std::string& second) {
    const std::string a = slurp(first);
    ok = ok && !a.empty() && a == slurp(second);
  };

  // simulate, twice with the same seed.
  ok = ok && run_cli("simulate --rows 400 --cols 30 --marginal-range 0.05 0.5 "
                     "--seed 77 --out " + p("sim1.csv") + null_redirect) == 0;
  ok = ok && run_cli("simulate --rows 400 --cols 30 --marginal-range 0.05 0.5 "
                     "--seed 77 --out " + p("sim2.csv") + null_redirect) == 0;
  expect_same(p("sim1.csv"), p("sim2.csv"));

  // measure under different thread counts.
  ok = ok && run_cli("measure --input " + p("sim1.csv") +
                     " --kind phi --threads 1 --out " + p("m1.csv") +
                     null_redirect) == 0;
  ok = ok && run_cli("measure --input " + p("sim1.csv") +
                     " --kind phi --threads 8 --out " + p("m8.csv") +
                     null_redirect) == 0;
  expect_same(p("m1.csv"), p("m8.csv"));

  // rank, twice.
  ok = ok && run_cli("rank --input " + p("sim1.csv") +
                     " --kind jaccard --top 10 --out " + p("r1.csv") +
                     null_redirect) == 0;
  ok = ok && run_cli("rank --input " + p("sim1.csv") +
                     " --kind jaccard --top 10 --out " + p("r2.csv") +
                     null_redirect) == 0;
  expect_same(p("r1.csv"), p("r2.csv"));

  // compare with a conditional column under different thread counts.
  ok = ok && run_cli("compare --input " + p("sim1.csv") +
                     " --kind p11 --kind jaccard --kind conditional "
                     "--method ols --threads 2 --out " + p("c1.csv") +
                     null_redirect) == 0;
  ok = ok && run_cli("compare --input " + p("sim1.csv") +
                     " --kind p11 --kind jaccard --kind conditional "
                     "--method ols --threads 6 --out " + p("c2.csv") +
                     null_redirect) == 0;
  expect_same(p("c1.csv"), p("c2.csv"));

  // filter, twice.
  ok = ok && run_cli("filter --input " + p("sim1.csv") +
                     " --min-members 5 --out " + p("f1.csv") + null_redirect) == 0;
  ok = ok && run_cli("filter --input " + p("sim1.csv") +
                     " --min-members 5 --out " + p("f2.csv") + null_redirect) == 0;
  expect_same(p("f1.csv"), p("f2.csv"));

  // export in every format, twice.
  for (const std::string format : {"edgelist", "dot", "json"}) {
    ok = ok && run_cli("export --input " + p("sim1.csv") +
                       " --kind phi --top 15 --graph-format " + format +
                       " --out " + p("g1." + format) + null_redirect) == 0;
    ok = ok && run_cli("export --input " + p("sim1.csv") +
                       " --kind phi --top 15 --graph-format " + format +
                       " --out " + p("g2." + format) + null_redirect) == 0;
    expect_same(p("g1." + format), p("g2." + format));
  }

  fs::remove_all(dir);
  detail = "simulate/measure/rank/compare/filter/export byte-identical";
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) {
    g_cli_path = argv[1];
  } else if (const char* env = std::getenv("BINASSOC_BIN")) {
    g_cli_path = env;
  }

  const std::vector<Criterion> criteria{
      {1, "voting worked example (J = 0.7 and J = 1.0)", 0.0, voting_example},
      {2, "ordering suite: 0 <= p11 <= J <= S <= 1 on 10000 tables", 1.0,
       ordering_suite},
      {3, "phi conventions, bounds and exact independence", 1.0,
       phi_conventions},
      {4, "counting oracle: word-parallel equals per-row scan", 5.0,
       counting_oracle},
      {5, "feasibility envelopes contain 10000 random tables", 30.0, envelopes},
      {6, "planted confounder: marginal signal, conditional null", 30.0,
       confounder_separation},
      {7, "regression oracles (OLS, lasso at 0, logistic)", 30.0,
       regression_oracles},
      {8, "collinearity hygiene: flags instead of inflated weights", 0.0,
       collinearity_hygiene},
      {9, "performance smoke: all-pairs p11 on 1000x10000", 10.0,
       performance_smoke},
      {10, "CLI determinism across reruns and thread counts", 0.0,
       cli_determinism},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    std::string detail;
    const auto start = std::chrono::steady_clock::now();
    bool passed = false;
    try {
      passed = c.run(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    const std::chrono::duration<double> elapsed =
        std::chrono::steady_clock::now() - start;
    if (c.time_limit_s > 0.0 && elapsed.count() >= c.time_limit_s) {
      passed = false;
      detail += " [time limit " + std::to_string(c.time_limit_s) + " s exceeded]";
    }
    std::printf("[%s] criterion %2d: %s (%.2f s)%s%s\n",
                passed ? "PASS" : "FAIL", c.number, c.description.c_str(),
                elapsed.count(), detail.empty() ? "" : " -- ",
                detail.c_str());
    if (!passed) ++failures;
  }
  std::printf("%d/%zu acceptance criteria passed\n",
              static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures;
}
