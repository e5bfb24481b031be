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

// binassoc: association networks from binary observation matrices.
//
// Subcommands compose through files for reproducible runs: `simulate` and
// `filter` emit matrices, `measure`/`rank`/`compare` emit weight tables and
// rankings, `export` emits graph files. Every command is deterministic given
// its input bytes, flags and seed.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "binassoc/error.hpp"
#include "binassoc/graph_export.hpp"
#include "binassoc/io.hpp"
#include "binassoc/network.hpp"
#include "binassoc/pairwise.hpp"
#include "binassoc/regression.hpp"
#include "binassoc/synthetic.hpp"

namespace {

using namespace binassoc;

struct InputOptions {
  std::string path;
  std::string format = "dense";
  std::optional<std::size_t> min_members;
};

struct MethodOptions {
  std::string method = "ols";
  std::optional<double> lambda;
};

void add_input_options(CLI::App* cmd, InputOptions& in) {
  cmd->add_option("--input", in.path, "input matrix file")->required();
  cmd->add_option("--format", in.format, "input encoding")
      ->check(CLI::IsMember({"pairs", "dense"}));
  cmd->add_option("--min-members", in.min_members,
                  "drop columns with fewer set rows than this");
}

void add_method_options(CLI::App* cmd, MethodOptions& mo) {
  cmd->add_option("--method", mo.method, "regression method")
      ->check(CLI::IsMember({"ols", "logistic", "lasso"}));
  cmd->add_option("--lambda", mo.lambda, "lasso L1 penalty");
}

BinaryMatrix load_matrix(const InputOptions& in) {
  BinaryMatrix m = in.format == "pairs" ? read_membership_pairs(in.path)
                                        : read_dense_csv(in.path);
  if (in.min_members) m = filter_min_degree(m, *in.min_members);
  return m;
}

MeasureKind parse_kind(const std::string& name) {
  const auto kind = measure_kind_from_string(name);
  if (!kind)
    throw ConfigError("unknown measure kind `" + name +
                      "` (expected p11, agreement, jaccard, simpson, phi or "
                      "conditional)");
  return *kind;
}

RegressionMethod parse_method(const MethodOptions& mo) {
  if (mo.method == "lasso")
    return RegressionMethod::lasso(mo.lambda.value_or(0.0));
  if (mo.lambda)
    throw ConfigError("--lambda is only meaningful with --method lasso");
  if (mo.method == "logistic") return RegressionMethod::logistic();
  return RegressionMethod::ols();
}

WeightTable compute_table(const BinaryMatrix& m, MeasureKind kind,
                          const MethodOptions& mo, unsigned threads) {
  if (kind == MeasureKind::ConditionalRegression)
    return conditional_edge_weights(m, parse_method(mo), threads);
  if (mo.lambda)
    throw ConfigError("--lambda is only meaningful with --method lasso");
  return all_pairs(m, kind, threads);
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoFailure("cannot open " + path + " for writing");
  return out;
}

void finish_out(std::ofstream& out, const std::string& path) {
  out.flush();
  if (!out) throw IoFailure("write to " + path + " failed");
}

void write_weight_csv(const WeightTable& w,
                      const std::vector<std::string>& labels,
                      std::ostream& out) {
  out << "i,j,label_i,label_j,weight,degenerate\n";
  std::size_t pair = 0;
  for (std::size_t i = 0; i < w.n_cols(); ++i) {
    for (std::size_t j = i + 1; j < w.n_cols(); ++j, ++pair) {
      out << i << ',' << j << ',' << csv_quote(labels[i]) << ','
          << csv_quote(labels[j]) << ',' << format_weight(w.value_at(pair))
          << ',' << (w.degenerate_at(pair) ? 1 : 0) << '\n';
    }
  }
}

int cmd_measure(const InputOptions& in, const std::string& kind_name,
                const MethodOptions& mo, unsigned threads,
                const std::string& out_path) {
  const BinaryMatrix m = load_matrix(in);
  const WeightTable w = compute_table(m, parse_kind(kind_name), mo, threads);
  auto out = open_out(out_path);
  write_weight_csv(w, m.labels(), out);
  finish_out(out, out_path);
  return 0;
}

int cmd_rank(const InputOptions& in, const std::string& kind_name,
             const MethodOptions& mo, std::size_t top, bool include_degenerate,
             unsigned threads, const std::string& out_path) {
  if (top < 1) throw ConfigError("--top must be at least 1");
  const BinaryMatrix m = load_matrix(in);
  const WeightTable w = compute_table(m, parse_kind(kind_name), mo, threads);
  const RankedEdges ranked = rank_edges(w, m.labels(), top, include_degenerate);

  std::printf("%-5s %-22s %s\n", "rank", "weight", "pair");
  for (std::size_t r = 0; r < ranked.edges.size(); ++r) {
    const RankedEdge& e = ranked.edges[r];
    std::printf("%-5zu %-22s %s -- %s\n", r + 1,
                format_weight(e.weight).c_str(), e.label_i.c_str(),
                e.label_j.c_str());
  }
  if (!ranked.excluded.empty()) {
    std::printf("degenerate pairs (excluded; rerun with --include-degenerate "
                "to rank them):\n");
    for (const RankedEdge& e : ranked.excluded)
      std::printf("      %-22s %s -- %s\n", format_weight(e.weight).c_str(),
                  e.label_i.c_str(), e.label_j.c_str());
  }

  auto out = open_out(out_path);
  out << "rank,label_i,label_j,weight,degenerate\n";
  for (std::size_t r = 0; r < ranked.edges.size(); ++r) {
    const RankedEdge& e = ranked.edges[r];
    out << r + 1 << ',' << csv_quote(e.label_i) << ',' << csv_quote(e.label_j)
        << ',' << format_weight(e.weight) << ',' << (e.degenerate ? 1 : 0)
        << '\n';
  }
  finish_out(out, out_path);
  return 0;
}

int cmd_compare(const InputOptions& in, const std::vector<std::string>& kinds,
                const MethodOptions& mo, unsigned threads,
                const std::string& out_path) {
  if (kinds.size() < 2) throw ConfigError("compare needs at least two --kind");
  std::vector<MeasureKind> parsed;
  bool wants_conditional = false;
  for (const auto& name : kinds) {
    parsed.push_back(parse_kind(name));
    wants_conditional |= parsed.back() == MeasureKind::ConditionalRegression;
  }
  std::optional<RegressionMethod> method;
  if (wants_conditional) {
    method = parse_method(mo);
  } else if (mo.lambda) {
    throw ConfigError("--lambda is only meaningful with --method lasso");
  }
  const BinaryMatrix m = load_matrix(in);
  const ComparisonTable table = compare_measures(m, parsed, method, threads);
  auto out = open_out(out_path);
  write_comparison_csv(table, out);
  finish_out(out, out_path);
  return 0;
}

struct SimulateOptions {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::optional<double> marginal;
  std::vector<double> marginal_range;
  std::string preset;
  double flip_prob = 0.2;
  std::uint64_t seed = 0;
};

int cmd_simulate(const SimulateOptions& so, const std::string& out_path) {
  const int sources = (so.marginal ? 1 : 0) + (so.marginal_range.empty() ? 0 : 1) +
                      (so.preset.empty() ? 0 : 1);
  if (sources != 1)
    throw ConfigError(
        "choose exactly one of --marginal, --marginal-range or --preset");

  BinaryMatrix m = [&] {
    if (!so.preset.empty()) {
      if (so.preset != "confounder")
        throw ConfigError("unknown preset `" + so.preset + "`");
      return sample_confounder(so.rows, so.flip_prob, so.seed);
    }
    if (so.cols == 0) throw ConfigError("--cols is required");
    std::vector<double> marginals;
    if (so.marginal) {
      marginals.assign(so.cols, *so.marginal);
      return sample_dyadic_independent(marginals, so.rows, so.seed);
    }
    const double lo = so.marginal_range[0];
    const double hi = so.marginal_range[1];
    if (!(lo >= 0.0 && lo <= 1.0)) throw InvalidProbability(lo);
    if (!(hi >= lo && hi <= 1.0)) throw InvalidProbability(hi);
    // Per-column marginals drawn from [lo, hi] first, cells from a seed
    // derived off the same stream; everything is a function of --seed.
    std::mt19937_64 rng(so.seed);
    marginals.reserve(so.cols);
    for (std::size_t k = 0; k < so.cols; ++k) {
      const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      marginals.push_back(lo + (hi - lo) * u);
    }
    return sample_dyadic_independent(marginals, so.rows, rng());
  }();

  write_dense_csv(m, std::filesystem::path(out_path));
  return 0;
}

int cmd_filter(const InputOptions& in, const std::string& out_path) {
  if (!in.min_members) throw ConfigError("--min-members is required");
  const BinaryMatrix m = load_matrix(in);
  write_dense_csv(m, std::filesystem::path(out_path));
  return 0;
}

int cmd_export(const InputOptions& in, const std::string& kind_name,
               const MethodOptions& mo, std::optional<double> threshold,
               std::optional<std::size_t> top, const std::string& graph_format,
               bool include_degenerate, unsigned threads,
               const std::string& out_path) {
  if (threshold.has_value() == top.has_value())
    throw ConfigError("choose exactly one of --threshold or --top");
  const auto format = graph_format_from_string(graph_format);
  if (!format)
    throw ConfigError("unknown graph format `" + graph_format +
                      "` (expected edgelist, dot or json)");
  const BinaryMatrix m = load_matrix(in);
  const WeightTable w = compute_table(m, parse_kind(kind_name), mo, threads);
  const EdgeRule rule =
      threshold ? EdgeRule::threshold(*threshold) : EdgeRule::top_k(*top);
  const WeightedNetwork net =
      build_network(w, m.labels(), rule, include_degenerate);
  export_network(net, *format, out_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"association networks from binary observation matrices"};
  app.require_subcommand(1);

  InputOptions in;
  MethodOptions mo;
  unsigned threads = 0;
  std::string kind_name = "jaccard";
  std::vector<std::string> kind_names;
  std::string out_path;
  std::size_t top = 5;
  bool include_degenerate = false;
  std::optional<double> threshold;
  std::optional<std::size_t> top_opt;
  std::string graph_format = "edgelist";
  SimulateOptions so;

  CLI::App* measure = app.add_subcommand(
      "measure", "write the full weight table for one measure");
  add_input_options(measure, in);
  add_method_options(measure, mo);
  measure->add_option("--kind", kind_name, "measure kind")->required();
  measure->add_option("--threads", threads, "worker threads (0 = hardware)");
  measure->add_option("--out", out_path, "output CSV path")->required();

  CLI::App* rank =
      app.add_subcommand("rank", "rank the strongest edges of one measure");
  add_input_options(rank, in);
  add_method_options(rank, mo);
  rank->add_option("--kind", kind_name, "measure kind")->required();
  rank->add_option("--top", top, "number of edges to keep");
  rank->add_flag("--include-degenerate", include_degenerate,
                 "rank convention-valued pairs too");
  rank->add_option("--threads", threads, "worker threads (0 = hardware)");
  rank->add_option("--out", out_path, "machine-readable CSV path")->required();

  CLI::App* compare = app.add_subcommand(
      "compare", "tabulate several measures side by side, one row per pair");
  add_input_options(compare, in);
  add_method_options(compare, mo);
  compare->add_option("--kind", kind_names, "measure kind (repeatable)")
      ->required();
  compare->add_option("--threads", threads, "worker threads (0 = hardware)");
  compare->add_option("--out", out_path, "output CSV path")->required();

  CLI::App* simulate = app.add_subcommand(
      "simulate", "sample a synthetic matrix from an independence model");
  simulate->add_option("--rows", so.rows, "observations")->required();
  simulate->add_option("--cols", so.cols, "variables");
  simulate->add_option("--marginal", so.marginal,
                       "one Bernoulli marginal for every column");
  simulate->add_option("--marginal-range", so.marginal_range,
                       "low/high bounds for per-column marginals")
      ->expected(2);
  simulate->add_option("--preset", so.preset,
                       "named generator: confounder (A drives B and C)");
  simulate->add_option("--flip-prob", so.flip_prob,
                       "noise level for the confounder preset");
  simulate->add_option("--seed", so.seed, "RNG seed");
  simulate->add_option("--out", out_path, "output dense CSV path")->required();

  CLI::App* filter = app.add_subcommand(
      "filter", "drop low-membership columns and rewrite the matrix");
  add_input_options(filter, in);
  filter->add_option("--out", out_path, "output dense CSV path")->required();

  CLI::App* exporter =
      app.add_subcommand("export", "build a network and write a graph file");
  add_input_options(exporter, in);
  add_method_options(exporter, mo);
  exporter->add_option("--kind", kind_name, "measure kind")->required();
  exporter->add_option("--threshold", threshold, "keep edges with weight >= t");
  exporter->add_option("--top", top_opt, "keep the m strongest edges");
  exporter->add_option("--graph-format", graph_format,
                       "edgelist, dot or json");
  exporter->add_flag("--include-degenerate", include_degenerate,
                     "keep convention-valued pairs");
  exporter->add_option("--threads", threads, "worker threads (0 = hardware)");
  exporter->add_option("--out", out_path, "output path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (measure->parsed())
      return cmd_measure(in, kind_name, mo, threads, out_path);
    if (rank->parsed())
      return cmd_rank(in, kind_name, mo, top, include_degenerate, threads,
                      out_path);
    if (compare->parsed())
      return cmd_compare(in, kind_names, mo, threads, out_path);
    if (simulate->parsed()) return cmd_simulate(so, out_path);
    if (filter->parsed()) return cmd_filter(in, out_path);
    if (exporter->parsed())
      return cmd_export(in, kind_name, mo, threshold, top_opt, graph_format,
                        include_degenerate, threads, out_path);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 1;
  } catch (const DataError& e) {
    std::cerr << "data error: " << e.what() << '\n';
    return 2;
  } catch (const NumericError& e) {
    std::cerr << "numerical error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
  return 1;
}
