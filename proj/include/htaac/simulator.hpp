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

#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "htaac/constraints.hpp"
#include "htaac/densemath.hpp"
#include "htaac/rng.hpp"
#include "htaac/state.hpp"

namespace htaac {

// Layered Ry/CNOT-ring circuit. Each layer applies Ry rotations on every
// qubit, CNOTs on ring pairs with odd control and even target, a second Ry
// layer, then CNOTs with even control and odd target. Ring pairs are
// (q, (q+1) mod n); for odd n the unpairable qubit of a half-layer is skipped.
struct Ansatz {
  int n_qubits = 0;
  int layers = 0;
  std::vector<double> angles;  // layers * 2 * n_qubits, radians

  double& angle(int layer, int half, int qubit) {
    return angles[(static_cast<std::size_t>(layer) * 2 + half) * n_qubits + qubit];
  }
  double angle(int layer, int half, int qubit) const {
    return angles[(static_cast<std::size_t>(layer) * 2 + half) * n_qubits + qubit];
  }

  static Ansatz zeros(int n_qubits, int layers);
  // i.i.d. normal(0, stddev) angles.
  static Ansatz random_init(int n_qubits, int layers, double stddev, Rng& rng);
};

// |psi> = U_V |0...0>. The circuit is real-valued, so imaginary parts are
// exactly zero.
StateVector apply_ansatz(const Ansatz& a);

// Real-amplitude fast path used by the training loop.
std::vector<double> ansatz_state_real(const Ansatz& a);

// Im <psi| U |psi>, the exact infinite-shot Hadamard-test value.
double hadamard_test_im(const StateVector& psi, const CMatrix& u);

// Shot-sampled Hadamard test: prepares the ancilla as (|0> - i|1>)/sqrt(2),
// applies controlled-U and a Hadamard, and averages `shots` Pauli-z outcomes
// drawn from the exact Born distribution of the ancilla.
double hadamard_test_im(const StateVector& psi, const CMatrix& u, long shots,
                        Rng& rng);

// Im <+...+| U |+...+> with the uniform positive superposition as input.
double hadamard_test_on_plus(const CMatrix& u);

// p_i = |psi_i|^2.
Vector zbasis_probabilities(const StateVector& psi);

// Hermitian operator with real matrix elements in the computational basis;
// the only observable form required by the real-valued ansatz.
class HermitianOp {
 public:
  virtual ~HermitianOp() = default;
  virtual Eigen::Index dim() const = 0;
  // y = A x, overwriting y.
  virtual void apply(std::span<const double> x, std::span<double> y) const = 0;

  double expectation(std::span<const double> x) const;
};

class DenseHermitianOp final : public HermitianOp {
 public:
  explicit DenseHermitianOp(Matrix m);
  Eigen::Index dim() const override { return m_.rows(); }
  void apply(std::span<const double> x, std::span<double> y) const override;
  const Matrix& matrix() const { return m_; }

 private:
  Matrix m_;
};

class DiagonalHermitianOp final : public HermitianOp {
 public:
  explicit DiagonalHermitianOp(Vector d) : d_(std::move(d)) {}
  Eigen::Index dim() const override { return d_.size(); }
  void apply(std::span<const double> x, std::span<double> y) const override;
  const Vector& diagonal() const { return d_; }

 private:
  Vector d_;
};

// Hermitian part extracted from a unitary as (U - U^dagger) / 2i. For
// U = exp(i * phase * S) with real symmetric S this is sin(phase * S); inputs
// whose Hermitian part is not real are rejected.
Matrix hermitian_from_unitary(const CMatrix& u);

struct LossComponents {
  double obj_w = 0.0;    // <sigma_z> of the objective Hadamard test
  double obj_p = 0.0;    // <sigma_z> of the population-balancing test
  double penalty = 0.0;  // lambda-weighted Pauli-string penalty
  double total = 0.0;
};

// Loss assembled from real-representable operators; either objective slot
// may be null.
struct LossOperators {
  const HermitianOp* objective_w = nullptr;
  const HermitianOp* objective_p = nullptr;
  std::span<const PauliZString> strings{};
  double lambda = 0.0;
};

struct EpochEval {
  LossComponents loss;
  std::vector<double> psi;           // real amplitudes
  std::vector<double> string_values; // one expectation per constraint string
  std::vector<double> gradient;      // d total / d theta, 2*L*n entries
};

// Forward pass only: loss components, state, and string expectations.
EpochEval evaluate_loss(const Ansatz& a, const LossOperators& ops);

// Forward plus reverse (adjoint) sweep; one circuit execution each way,
// independent of the parameter count.
EpochEval evaluate_loss_and_gradient(const Ansatz& a, const LossOperators& ops);

// Loss specification in unitary form, mirroring the Hadamard-test layout.
struct GradientSpec {
  const CMatrix* u_w = nullptr;
  const CMatrix* u_p = nullptr;
  std::span<const PauliZString> strings{};
  double lambda = 0.0;
};

// Exact gradient of Im<psi|U_W|psi> + Im<psi|U_P|psi> + penalty with respect
// to every ansatz angle.
std::vector<double> adjoint_gradient(const Ansatz& a, const GradientSpec& spec);

}  // namespace htaac
