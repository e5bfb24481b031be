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

#include "binassoc/synthetic.hpp"

#include <cmath>
#include <limits>
#include <random>

#include "binassoc/error.hpp"
#include "binassoc/measures.hpp"

namespace binassoc {

namespace {

// Uniform double in [0, 1) from the top 53 bits of the generator output.
// Spelled out (rather than std::uniform_real_distribution) so sampled
// matrices are identical across standard library implementations.
double next_uniform(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

BinaryMatrix sample_dyadic_independent(const std::vector<double>& marginals,
                                       std::size_t n_rows, std::uint64_t seed) {
  for (double p : marginals)
    if (!(p >= 0.0 && p <= 1.0)) throw InvalidProbability(p);
  if (marginals.empty()) throw DataError("need at least one marginal");
  if (n_rows == 0) throw DataError("need at least one row");

  std::vector<std::string> labels;
  labels.reserve(marginals.size());
  for (std::size_t k = 0; k < marginals.size(); ++k)
    labels.push_back("v" + std::to_string(k));

  BinaryMatrix m(n_rows, std::move(labels));
  std::mt19937_64 rng(seed);
  for (std::size_t k = 0; k < marginals.size(); ++k) {
    const double p = marginals[k];
    for (std::size_t r = 0; r < n_rows; ++r)
      if (next_uniform(rng) < p) m.set(r, k);
  }
  return m;
}

BinaryMatrix sample_confounder(std::size_t n_rows, double flip_prob,
                               std::uint64_t seed) {
  if (!(flip_prob >= 0.0 && flip_prob <= 1.0))
    throw InvalidProbability(flip_prob);
  if (n_rows == 0) throw DataError("need at least one row");

  BinaryMatrix m(n_rows, {"A", "B", "C"});
  std::mt19937_64 rng(seed);
  for (std::size_t r = 0; r < n_rows; ++r) {
    const bool a = next_uniform(rng) < 0.5;
    const bool b = a != (next_uniform(rng) < flip_prob);
    const bool c = a != (next_uniform(rng) < flip_prob);
    if (a) m.set(r, 0);
    if (b) m.set(r, 1);
    if (c) m.set(r, 2);
  }
  return m;
}

std::size_t FeasibleEnvelope::nearest_index(double a) const {
  std::size_t best = 0;
  double best_dist = std::numeric_limits<double>::infinity();
  for (std::size_t g = 0; g < abscissa.size(); ++g) {
    const double d = std::abs(abscissa[g] - a);
    if (d < best_dist) {
      best_dist = d;
      best = g;
    }
  }
  return best;
}

namespace {

struct Bound {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  void update(double v) {
    if (v < lo) lo = v;
    if (v > hi) hi = v;
  }
  bool empty() const { return lo > hi; }
};

// phi for a table given as lattice integers; returns false for tables with a
// constant margin.
bool lattice_phi(std::size_t u11, std::size_t u10, std::size_t u01,
                 std::size_t steps, double& phi) {
  const std::size_t mx = u10 + u11;
  const std::size_t my = u01 + u11;
  if (mx == 0 || mx == steps || my == 0 || my == steps) return false;
  const double s = static_cast<double>(steps);
  const double p11 = static_cast<double>(u11) / s;
  const double px = static_cast<double>(mx) / s;
  const double py = static_cast<double>(my) / s;
  phi = (p11 - px * py) / std::sqrt((px * (1.0 - px)) * (py * (1.0 - py)));
  return true;
}

FeasibleEnvelope finalize(EnvelopeAbscissa kind, std::size_t grid_size,
                          const std::vector<Bound>& bounds) {
  FeasibleEnvelope env;
  env.kind = kind;
  for (std::size_t g = 0; g < grid_size; ++g) {
    if (bounds[g].empty()) continue;
    env.abscissa.push_back(static_cast<double>(g) /
                           static_cast<double>(grid_size - 1));
    env.min_corr.push_back(bounds[g].lo);
    env.max_corr.push_back(bounds[g].hi);
  }
  return env;
}

}  // namespace

FeasibleEnvelope feasible_envelope(EnvelopeAbscissa kind, std::size_t grid_size,
                                   std::size_t steps) {
  if (grid_size < 2) throw ConfigError("envelope grid needs at least 2 points");
  if (steps < 2) throw ConfigError("envelope lattice needs at least 2 steps");
  if (steps % (grid_size - 1) != 0)
    throw ConfigError("envelope lattice steps must be a multiple of grid_size-1");
  std::vector<Bound> bounds(grid_size);
  const double grid_scale = static_cast<double>(grid_size - 1);

  // Sweep the whole table lattice once; every valid table contributes to
  // the grid point nearest its abscissa value, so each point's bounds cover
  // a full half-step neighborhood rather than one exact slice. (The upper
  // phi bound is discontinuous at the abscissa extremes, so exact slices
  // would miss tables that fall between grid points.)
  for (std::size_t u11 = 0; u11 <= steps; ++u11) {
    for (std::size_t u10 = 0; u10 + u11 <= steps; ++u10) {
      for (std::size_t u01 = 0; u01 + u10 + u11 <= steps; ++u01) {
        double phi;
        if (!lattice_phi(u11, u10, u01, steps, phi)) continue;
        double a;
        if (kind == EnvelopeAbscissa::P11) {
          a = static_cast<double>(u11) / static_cast<double>(steps);
        } else {
          const std::size_t denom = u11 + u10 + u01;
          if (denom == 0) continue;
          a = static_cast<double>(u11) / static_cast<double>(denom);
        }
        const auto g = static_cast<std::size_t>(a * grid_scale + 0.5);
        bounds[g].update(phi);
      }
    }
  }
  return finalize(kind, grid_size, bounds);
}

}  // namespace binassoc
