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

// Seeded synthetic generators and the correlation feasibility envelopes.
// These exist mainly as test oracles: the sampler realizes the
// dyadic-independence null model (every cell an independent Bernoulli draw),
// the envelopes bound which (co-occurrence, correlation) combinations a
// valid 2x2 table can produce.

#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "binassoc/binary_matrix.hpp"

namespace binassoc {

// Each cell (r, k) is an independent Bernoulli(marginals[k]) draw; rows are
// i.i.d. realizations of a K-variate independent Bernoulli vector. The
// output is a pure function of (marginals, n_rows, seed). Columns are
// labelled v0..v{K-1}. Throws InvalidProbability for marginals outside [0,1].
BinaryMatrix sample_dyadic_independent(const std::vector<double>& marginals,
                                       std::size_t n_rows, std::uint64_t seed);

// Leader/subordinate model: column A ~ Bernoulli(0.5); B and C are
// independent noisy copies of A, each flipped with probability flip_prob.
// B and C are marginally associated but conditionally independent given A.
// Columns are labelled A, B, C.
BinaryMatrix sample_confounder(std::size_t n_rows, double flip_prob,
                               std::uint64_t seed);

enum class EnvelopeAbscissa { P11, Jaccard };

// Pointwise bounds on the Pearson phi coefficient as a function of an
// abscissa measure, computed by enumerating valid (p01, p10, p11) tables.
// Each grid point covers the tables whose abscissa is nearest to it; a grid
// point left with no valid non-degenerate table is omitted.
struct FeasibleEnvelope {
  EnvelopeAbscissa kind = EnvelopeAbscissa::P11;
  std::vector<double> abscissa;
  std::vector<double> min_corr;
  std::vector<double> max_corr;

  // Bounds at the populated grid point nearest to `a`.
  std::size_t nearest_index(double a) const;
};

// Enumerates tables on a lattice with `steps` subdivisions per free
// parameter (>= 512 for the documented +-0.01 bound accuracy) and records
// min/max phi for each of grid_size abscissa values spanning [0, 1].
// Constant-margin tables are excluded since phi is convention-valued there.
FeasibleEnvelope feasible_envelope(EnvelopeAbscissa kind, std::size_t grid_size,
                                   std::size_t steps = 512);

}  // namespace binassoc
