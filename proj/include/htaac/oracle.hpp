// Copyright 2026 The htaac authors
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

#pragma once

#include <cstdint>

#include "htaac/graph.hpp"
#include "htaac/solver.hpp"

namespace htaac::oracle {

// Exact maximum cut over all 2^(N-1) sign patterns (global flips quotiented
// out). Deterministic: the lowest pattern among ties wins. N <= 24.
CutSolution brute_force_maxcut(const Graph& g);

struct GWBaselineConfig {
  int rank = 0;             // 0 picks ceil(sqrt(2N))
  int iterations = 500;
  double learning_rate = 0.2;
  int rounding_samples = 100;
  std::uint64_t seed = 1;
};

// Low-rank factorized SDP baseline: minimize <W, V^T V> over unit-column V by
// projected gradient descent with backtracking, then round with random
// Gaussian hyperplanes and keep the best sampled cut.
CutSolution classical_gw(const Graph& g, const GWBaselineConfig& cfg);

// Objective <W, V^T V> and iterate trajectory, exposed for property tests.
struct GWRun {
  CutSolution solution;
  std::vector<double> objective_per_iteration;
  double max_column_norm_error = 0.0;
};

GWRun classical_gw_run(const Graph& g, const GWBaselineConfig& cfg);

}  // namespace htaac::oracle
