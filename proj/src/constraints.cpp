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

#include "htaac/constraints.hpp"

#include <bit>
#include <cmath>

namespace htaac {

int PauliZString::order() const { return std::popcount(mask); }

std::vector<int> PauliZString::support() const {
  std::vector<int> qubits;
  for (int q = 0; q < 64; ++q) {
    if (mask >> q & 1) qubits.push_back(q);
  }
  return qubits;
}

PauliZString PauliZString::from_support(std::span<const int> qubits,
                                        int n_qubits) {
  if (qubits.empty()) throw ValidationError("empty Pauli-z support");
  PauliZString s;
  for (int q : qubits) {
    if (q < 0 || q >= n_qubits) {
      throw ValidationError("qubit index out of range");
    }
    if (s.mask >> q & 1) throw ValidationError("repeated qubit in support");
    s.mask |= std::uint64_t{1} << q;
  }
  return s;
}

std::vector<PauliZString> enumerate_zstrings(int n_qubits, int k) {
  if (k < 1 || k > n_qubits) {
    throw ValidationError("constraint order k must satisfy 1 <= k <= n");
  }
  std::vector<PauliZString> out;
  std::vector<int> comb;
  for (int order = 1; order <= k; ++order) {
    comb.assign(order, 0);
    for (int i = 0; i < order; ++i) comb[i] = i;
    while (true) {
      out.push_back(PauliZString::from_support(comb, n_qubits));
      int i = order - 1;
      while (i >= 0 && comb[i] == n_qubits - order + i) --i;
      if (i < 0) break;
      ++comb[i];
      for (int j = i + 1; j < order; ++j) comb[j] = comb[j - 1] + 1;
    }
  }
  return out;
}

std::vector<double> marginal_expectations(const Vector& probs,
                                          std::span<const PauliZString> strings) {
  std::vector<double> values;
  values.reserve(strings.size());
  const auto dim = static_cast<std::uint64_t>(probs.size());
  for (const auto& s : strings) {
    double acc = 0;
    for (std::uint64_t i = 0; i < dim; ++i) {
      acc += std::popcount(i & s.mask) & 1 ? -probs[i] : probs[i];
    }
    values.push_back(acc);
  }
  return values;
}

double penalty_term(std::span<const double> values, double lambda) {
  if (lambda < 0) throw ValidationError("lambda must be >= 0");
  double acc = 0;
  for (double v : values) acc += v * v;
  return lambda * acc;
}

ConstraintReport evaluate_constraints(const Vector& probs,
                                      std::span<const PauliZString> strings,
                                      double lambda, int n_vertices) {
  ConstraintReport r;
  r.values = marginal_expectations(probs, strings);
  r.penalty = penalty_term(r.values, lambda);
  const Eigen::Index n = std::min<Eigen::Index>(n_vertices, probs.size());
  const double mean = probs.head(n).mean();
  r.sigma_rho = (probs.head(n).array() - mean).square().mean();
  return r;
}

Vector population_diagonal(const Graph& g, Eigen::Index dim) {
  if (dim < g.n_vertices()) {
    throw ValidationError("population matrix dimension below vertex count");
  }
  const auto strength = g.abs_strengths();
  double p_max = 0;
  for (double s : strength) p_max = std::max(p_max, s);
  Vector diag = Vector::Constant(dim, -p_max);
  for (int i = 0; i < g.n_vertices(); ++i) diag[i] = -(p_max - strength[i]);
  return diag;
}

Matrix build_population_matrix(const Graph& g, Eigen::Index dim) {
  return population_diagonal(g, dim).asDiagonal();
}

double xstring_expectation(const StateVector& psi, std::uint64_t support_mask) {
  if (support_mask == 0) throw ValidationError("empty Pauli-x support");
  const auto dim = static_cast<std::uint64_t>(psi.dim());
  if (support_mask >= dim) {
    throw ValidationError("Pauli-x support outside the register");
  }
  double acc = 0;
  for (std::uint64_t i = 0; i < dim; ++i) {
    acc += (std::conj(psi.amps[i]) * psi.amps[i ^ support_mask]).real();
  }
  return acc;
}

double mean_xstring_expectation(const StateVector& psi, int n_strings,
                                Rng& rng) {
  if (n_strings < 1) throw ValidationError("need at least one x-string");
  const std::uint64_t dim = static_cast<std::uint64_t>(psi.dim());
  double acc = 0;
  for (int s = 0; s < n_strings; ++s) {
    std::uint64_t mask = 0;
    while (mask == 0) mask = rng.integer(dim - 1) + 1;
    acc += xstring_expectation(psi, mask);
  }
  return acc / n_strings;
}

}  // namespace htaac
