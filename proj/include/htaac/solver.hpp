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
#include <string>
#include <utility>
#include <vector>

#include "htaac/graph.hpp"
#include "htaac/simulator.hpp"
#include "htaac/state.hpp"

namespace htaac {

struct SolverConfig {
  double alpha = 0.01;         // encoding phase of the objective unitary
  double beta = 1.0 / 1.2;     // population-balancing weight relative to the
                               // objective (U_P phase = alpha * beta); 0 disables
  double lambda_coeff = 100.0; // c in lambda = c * alpha / m
  int k = 2;                   // constraint order (clamped to n per instance)
  int layers = 120;
  double eta = 0.01;           // ADAM learning rate
  double adam_beta1 = 0.9;
  double adam_beta2 = 0.999;
  double adam_eps = 1e-8;
  int epochs = 2000;
  std::uint64_t seed = 1;
  long shots = 0;              // 0 = exact expectation values
  double init_angle_stddev = 0.01;
  bool include_objective = true;   // false isolates the constraint dynamics
  Eigen::Index dense_cutoff_dim = 2048;  // larger instances use the sparse
                                         // series form of sin(alpha W)
};

struct CutSolution {
  std::vector<int> signs;  // +1 / -1 per vertex
  double cut = 0.0;
};

struct EpochRecord {
  double obj_w = 0.0;
  double obj_p = 0.0;
  double penalty = 0.0;
  double loss = 0.0;
  double cq_est = 0.0;      // observable-estimated cut <C_Q>
  double cq_rounded = 0.0;  // cut of the sign-rounded state
  double sigma_rho = 0.0;   // var(|psi_i|^2) over the first N states
};

struct TrainTrace {
  SolverConfig config;
  int n_qubits = 0;
  int n_vertices = 0;
  std::size_t n_constraints = 0;
  double lambda = 0.0;
  std::vector<EpochRecord> epochs;
  CutSolution best;
  int best_epoch = -1;
  double wall_seconds = 0.0;
};

// Applies sin(phase * W) through the odd-power series of sparse matrix-vector
// products; exact to machine precision and independent of the dense
// eigendecomposition path.
class SparseSinOp final : public HermitianOp {
 public:
  SparseSinOp(const Graph& g, double phase, Eigen::Index dim);
  Eigen::Index dim() const override { return dim_; }
  void apply(std::span<const double> x, std::span<double> y) const override;

 private:
  std::vector<Edge> edges_;
  double phase_;
  Eigen::Index dim_;
};

// Rejects out-of-range hyperparameters; called by train and usable by
// front-ends before any output is created.
void validate_solver_config(const SolverConfig& cfg);

// One HTAAC-QSDP training run: per epoch, prepare |psi>, evaluate the loss
// (objective + balance Hadamard tests + Pauli-string penalty), take one ADAM
// step on the adjoint gradient, and record the rounded and estimated cuts.
TrainTrace train(const Graph& g, const SolverConfig& cfg);

// v_i = sign(psi_i) with sign(0) := +1; padded amplitudes beyond N ignored.
CutSolution round_solution(const Graph& g, const StateVector& psi);

// <C_Q> = (dim / 4 alpha) * (sigma_plus - sigma_psi), the quantum cut
// estimate; dim is the padded dimension 2^n.
double estimate_cq(double sigma_plus, double sigma_psi, Eigen::Index dim,
                   double alpha);

double cut_value(const Graph& g, std::span<const int> signs);

// Max-2-Sat reduction: returns the graph of W- = a - b (fed to train) and the
// sum over j < i of W+ = a + b that pairs with the cut estimate.
std::pair<Graph, double> maxsat_objective(const Matrix& a, const Matrix& b);

// CSV with one row per epoch: epoch, loss terms, cut estimates, sigma_rho.
std::string trace_csv(const TrainTrace& trace);

// JSON summary: config echo, best cut, seed, wall time.
std::string summary_json(const TrainTrace& trace);

}  // namespace htaac
