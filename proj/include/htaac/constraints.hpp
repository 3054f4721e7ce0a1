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
#include <span>
#include <vector>

#include "htaac/densemath.hpp"
#include "htaac/graph.hpp"
#include "htaac/rng.hpp"
#include "htaac/state.hpp"

namespace htaac {

// z-axis Pauli string identified by its support bitmask (bit q = qubit q).
struct PauliZString {
  std::uint64_t mask = 0;

  int order() const;
  std::vector<int> support() const;
  static PauliZString from_support(std::span<const int> qubits, int n_qubits);
};

// All z-strings with 1 <= |support| <= k, ordered by increasing order and
// lexicographic support within each order.
std::vector<PauliZString> enumerate_zstrings(int n_qubits, int k);

// <Z_s> = sum_i p_i * (-1)^popcount(i & mask), one value per string.
std::vector<double> marginal_expectations(const Vector& probs,
                                          std::span<const PauliZString> strings);

// lambda * sum of squared expectations.
double penalty_term(std::span<const double> values, double lambda);

struct ConstraintReport {
  std::vector<double> values;
  double penalty = 0.0;
  double sigma_rho = 0.0;  // variance of p_i over the first N entries
};

ConstraintReport evaluate_constraints(const Vector& probs,
                                      std::span<const PauliZString> strings,
                                      double lambda, int n_vertices);

// Diagonal of the population-balancing generator: -(p_max - sum_j |w_ij|)
// for real vertices, -p_max for padded states.
Vector population_diagonal(const Graph& g, Eigen::Index dim);

// Dense diagonal matrix form of population_diagonal.
Matrix build_population_matrix(const Graph& g, Eigen::Index dim);

// <psi| O_x |psi> where O_x flips the qubits in support_mask; the bisection
// balance constraint drives this to zero.
double xstring_expectation(const StateVector& psi, std::uint64_t support_mask);

// Average of xstring_expectation over random non-empty supports, for graphs
// with correlated vertex encodings.
double mean_xstring_expectation(const StateVector& psi, int n_strings, Rng& rng);

}  // namespace htaac
