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

#include <span>
#include <string>
#include <vector>

#include "htaac/densemath.hpp"
#include "htaac/graph.hpp"

namespace htaac {

enum class WeightFamily {
  UniformPositive,   // weights ~ U[0, b]
  UniformSigned,     // weights ~ U[-b, b]
  NormalLargeMean,   // weights ~ N(mu, sigma^2), mu not << sigma
  NormalLargeSigma,  // weights ~ N(mu, sigma^2), sigma >> mu
};

std::string to_string(WeightFamily family);

struct BoundResult {
  double alpha_sq_bound = 0.0;
  WeightFamily family = WeightFamily::UniformPositive;
  // The signed-uniform criterion is only known to admit larger alpha than the
  // positive-uniform one; its value is reported as a conservative floor.
  bool conservative_floor = false;
  int n_vertices = 0;
  long long e = 0;
  double xi_used = 0.0;
  double scale = 0.0;  // b for uniform families, mu or sigma for normal
  double d = 0.0;

  double alpha_bound() const;
};

// Bound on alpha^2 below which Im[exp(i alpha W)] tracks alpha W:
// uniform families use 3N / (b^2 xi^3), normal families 6 / (N^2 scale^2 d^3).
// Set use_xi_max for graphs whose edge density concentrates on few vertices.
BoundResult alpha_upper_bound(const GraphStats& stats, double scale,
                              WeightFamily family, bool use_xi_max = false);

struct EncodingError {
  double alpha = 0.0;
  double rel_err_mean = 0.0;   // mean over nonzero W entries of |Im(U)/a - W| / |W|
  double rel_err_max = 0.0;
  double offsupport_max = 0.0; // max |Im(U)/a| over zero entries of W
  // mean |Im(U)/a - W| / mean |W| over the support: the expectation-level
  // dominance comparison, immune to the heavy tail of near-zero weights.
  double agg_rel_err = 0.0;
};

// Exact exponentials over an ascending alpha sweep, compared entrywise
// against alpha W on and off the support of W.
std::vector<EncodingError> encoding_error_sweep(const Matrix& w,
                                                std::span<const double> alphas);

// CSV rows (alpha, rel_err_mean, rel_err_max, offsupport_max).
std::string encoding_error_csv(std::span<const EncodingError> errors);

}  // namespace htaac
