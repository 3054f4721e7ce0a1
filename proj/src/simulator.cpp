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

#include "htaac/simulator.hpp"

#include <bit>
#include <cmath>

namespace htaac {

namespace {

using Real = double;

// Ry(theta) = exp(-i theta Y / 2) = [[cos(t/2), -sin(t/2)], [sin(t/2), cos(t/2)]].
void apply_ry(std::vector<Real>& a, int qubit, double theta) {
  const double c = std::cos(theta / 2);
  const double s = std::sin(theta / 2);
  const std::size_t bit = std::size_t{1} << qubit;
  const std::size_t dim = a.size();
  for (std::size_t base = 0; base < dim; base += 2 * bit) {
    for (std::size_t i = base; i < base + bit; ++i) {
      const Real a0 = a[i];
      const Real a1 = a[i + bit];
      a[i] = c * a0 - s * a1;
      a[i + bit] = s * a0 + c * a1;
    }
  }
}

void apply_cnot(std::vector<Real>& a, int control, int target) {
  const std::size_t cbit = std::size_t{1} << control;
  const std::size_t tbit = std::size_t{1} << target;
  const std::size_t dim = a.size();
  for (std::size_t i = 0; i < dim; ++i) {
    if ((i & cbit) && !(i & tbit)) std::swap(a[i], a[i | tbit]);
  }
}

// d<lam|...|phi>/dtheta contribution of one Ry gate: with generator
// K = -iY/2 the derivative is 2 <lam|K|phi> = sum over qubit pairs of
// lam1*phi0 - lam0*phi1.
double ry_gradient_dot(const std::vector<Real>& lam,
                       const std::vector<Real>& phi, int qubit) {
  const std::size_t bit = std::size_t{1} << qubit;
  const std::size_t dim = lam.size();
  double acc = 0;
  for (std::size_t base = 0; base < dim; base += 2 * bit) {
    for (std::size_t i = base; i < base + bit; ++i) {
      acc += lam[i + bit] * phi[i] - lam[i] * phi[i + bit];
    }
  }
  return acc;
}

// Ring CNOT pairs (q, (q+1) mod n) whose control parity matches `odd_control`.
// For odd n the wraparound pair has equal parities and is skipped, leaving
// one idle qubit per half-layer.
std::vector<std::pair<int, int>> ring_pairs(int n, bool odd_control) {
  std::vector<std::pair<int, int>> pairs;
  if (n < 2) return pairs;
  for (int q = 0; q < n; ++q) {
    const int t = (q + 1) % n;
    if ((q % 2 == 1) == odd_control && t % 2 != q % 2) {
      pairs.emplace_back(q, t);
    }
  }
  return pairs;
}

void validate_ansatz(const Ansatz& a) {
  if (a.n_qubits < 1) throw ValidationError("ansatz needs at least one qubit");
  if (a.layers < 1) throw ValidationError("ansatz needs at least one layer");
  const std::size_t expected =
      static_cast<std::size_t>(a.layers) * 2 * a.n_qubits;
  if (a.angles.size() != expected) {
    throw ValidationError("ansatz angle count must be 2*L*n");
  }
  for (double t : a.angles) {
    if (!std::isfinite(t)) throw ValidationError("non-finite ansatz angle");
  }
}

struct HalfLayerPlan {
  std::vector<std::pair<int, int>> odd_even;  // after the first Ry sweep
  std::vector<std::pair<int, int>> even_odd;  // after the second Ry sweep
};

HalfLayerPlan make_plan(int n) {
  return {ring_pairs(n, /*odd_control=*/true), ring_pairs(n, /*odd_control=*/false)};
}

void forward_state(const Ansatz& a, const HalfLayerPlan& plan,
                   std::vector<Real>& state) {
  state.assign(std::size_t{1} << a.n_qubits, 0.0);
  state[0] = 1.0;
  for (int l = 0; l < a.layers; ++l) {
    for (int q = 0; q < a.n_qubits; ++q) apply_ry(state, q, a.angle(l, 0, q));
    for (auto [c, t] : plan.odd_even) apply_cnot(state, c, t);
    for (int q = 0; q < a.n_qubits; ++q) apply_ry(state, q, a.angle(l, 1, q));
    for (auto [c, t] : plan.even_odd) apply_cnot(state, c, t);
  }
}

}  // namespace

Ansatz Ansatz::zeros(int n_qubits, int layers) {
  Ansatz a;
  a.n_qubits = n_qubits;
  a.layers = layers;
  a.angles.assign(static_cast<std::size_t>(layers) * 2 * n_qubits, 0.0);
  return a;
}

Ansatz Ansatz::random_init(int n_qubits, int layers, double stddev, Rng& rng) {
  Ansatz a = zeros(n_qubits, layers);
  for (auto& t : a.angles) t = rng.normal(0.0, stddev);
  return a;
}

std::vector<double> ansatz_state_real(const Ansatz& a) {
  validate_ansatz(a);
  const auto plan = make_plan(a.n_qubits);
  std::vector<Real> state;
  forward_state(a, plan, state);
  return state;
}

StateVector apply_ansatz(const Ansatz& a) {
  return StateVector::from_real(a.n_qubits, ansatz_state_real(a));
}

double hadamard_test_im(const StateVector& psi, const CMatrix& u) {
  if (u.rows() != u.cols() || u.cols() != psi.dim()) {
    throw ValidationError("dimension mismatch in hadamard_test_im");
  }
  return (psi.amps.adjoint() * u * psi.amps)(0).imag();
}

double hadamard_test_im(const StateVector& psi, const CMatrix& u, long shots,
                        Rng& rng) {
  if (shots < 1) throw ValidationError("shots must be >= 1");
  if (u.rows() != u.cols() || u.cols() != psi.dim()) {
    throw ValidationError("dimension mismatch in hadamard_test_im");
  }
  // Joint register (psi (x) ancilla) after controlled-U and the final
  // Hadamard: upper block (I - iU)|psi>/2, lower block (I + iU)|psi>/2.
  const CVector upsi = u * psi.amps;
  const CVector upper =
      0.5 * (psi.amps - std::complex<double>(0, 1) * upsi);
  double p0 = upper.squaredNorm();
  p0 = std::min(1.0, std::max(0.0, p0));
  long ones = 0;
  for (long s = 0; s < shots; ++s) {
    if (rng.uniform01() < p0) ++ones;
  }
  return (2.0 * ones - shots) / static_cast<double>(shots);
}

double hadamard_test_on_plus(const CMatrix& u) {
  if (u.rows() != u.cols()) throw ValidationError("unitary must be square");
  return u.sum().imag() / static_cast<double>(u.rows());
}

Vector zbasis_probabilities(const StateVector& psi) {
  Vector p = psi.amps.cwiseAbs2();
  const double norm = p.sum();
  if (std::abs(norm - 1.0) > 1e-10) {
    throw ValidationError("statevector is not normalized");
  }
  return p;
}

double HermitianOp::expectation(std::span<const double> x) const {
  std::vector<double> y(x.size());
  apply(x, y);
  double acc = 0;
  for (std::size_t i = 0; i < x.size(); ++i) acc += x[i] * y[i];
  return acc;
}

DenseHermitianOp::DenseHermitianOp(Matrix m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols()) throw ValidationError("operator must be square");
}

void DenseHermitianOp::apply(std::span<const double> x,
                             std::span<double> y) const {
  Eigen::Map<const Vector> xv(x.data(), static_cast<Eigen::Index>(x.size()));
  Eigen::Map<Vector> yv(y.data(), static_cast<Eigen::Index>(y.size()));
  yv.noalias() = m_ * xv;
}

void DiagonalHermitianOp::apply(std::span<const double> x,
                                std::span<double> y) const {
  for (std::size_t i = 0; i < x.size(); ++i) y[i] = d_[i] * x[i];
}

Matrix hermitian_from_unitary(const CMatrix& u) {
  const CMatrix h = (u - u.adjoint()) / std::complex<double>(0, 2);
  if (h.imag().cwiseAbs().maxCoeff() > 1e-10) {
    throw ValidationError(
        "unitary's Hermitian part is not real in the computational basis");
  }
  return h.real();
}

namespace {

struct ForwardResult {
  std::vector<Real> psi;
  Vector probs;
  std::vector<double> string_values;
  LossComponents loss;
  // Per-state diagonal of the penalty gradient operator
  // 2 * lambda * sum_s v_s * sign_s(i), built only when differentiating.
  std::vector<Real> penalty_diag;
};

ForwardResult run_forward(const Ansatz& a, const LossOperators& ops,
                          const HalfLayerPlan& plan, bool want_penalty_diag,
                          std::vector<Real>& y_w, std::vector<Real>& y_p) {
  ForwardResult r;
  forward_state(a, plan, r.psi);
  const std::size_t dim = r.psi.size();

  if (ops.objective_w != nullptr) {
    if (static_cast<std::size_t>(ops.objective_w->dim()) != dim) {
      throw ValidationError("objective operator dimension mismatch");
    }
    y_w.resize(dim);
    ops.objective_w->apply(r.psi, y_w);
    for (std::size_t i = 0; i < dim; ++i) r.loss.obj_w += r.psi[i] * y_w[i];
  }
  if (ops.objective_p != nullptr) {
    if (static_cast<std::size_t>(ops.objective_p->dim()) != dim) {
      throw ValidationError("balance operator dimension mismatch");
    }
    y_p.resize(dim);
    ops.objective_p->apply(r.psi, y_p);
    for (std::size_t i = 0; i < dim; ++i) r.loss.obj_p += r.psi[i] * y_p[i];
  }

  if (!ops.strings.empty()) {
    r.probs.resize(static_cast<Eigen::Index>(dim));
    for (std::size_t i = 0; i < dim; ++i) r.probs[i] = r.psi[i] * r.psi[i];
    r.string_values = marginal_expectations(r.probs, ops.strings);
    r.loss.penalty = penalty_term(r.string_values, ops.lambda);
    if (want_penalty_diag) {
      r.penalty_diag.assign(dim, 0.0);
      for (std::size_t s = 0; s < ops.strings.size(); ++s) {
        const double coeff = 2.0 * ops.lambda * r.string_values[s];
        if (coeff == 0.0) continue;
        const std::uint64_t mask = ops.strings[s].mask;
        for (std::size_t i = 0; i < dim; ++i) {
          r.penalty_diag[i] +=
              std::popcount(i & mask) & 1 ? -coeff : coeff;
        }
      }
    }
  }
  r.loss.total = r.loss.obj_w + r.loss.obj_p + r.loss.penalty;
  return r;
}

}  // namespace

EpochEval evaluate_loss(const Ansatz& a, const LossOperators& ops) {
  validate_ansatz(a);
  const auto plan = make_plan(a.n_qubits);
  std::vector<Real> y_w, y_p;
  auto fwd = run_forward(a, ops, plan, /*want_penalty_diag=*/false, y_w, y_p);
  EpochEval out;
  out.loss = fwd.loss;
  out.psi = std::move(fwd.psi);
  out.string_values = std::move(fwd.string_values);
  return out;
}

EpochEval evaluate_loss_and_gradient(const Ansatz& a, const LossOperators& ops) {
  validate_ansatz(a);
  const auto plan = make_plan(a.n_qubits);
  std::vector<Real> y_w, y_p;
  auto fwd = run_forward(a, ops, plan, /*want_penalty_diag=*/true, y_w, y_p);
  const std::size_t dim = fwd.psi.size();

  // lam = H_eff |psi> with H_eff the Hermitian operator whose expectation is
  // the total loss at the current state (penalty linearized at psi).
  std::vector<Real> lam(dim, 0.0);
  if (ops.objective_w != nullptr) {
    for (std::size_t i = 0; i < dim; ++i) lam[i] += y_w[i];
  }
  if (ops.objective_p != nullptr) {
    for (std::size_t i = 0; i < dim; ++i) lam[i] += y_p[i];
  }
  if (!fwd.penalty_diag.empty()) {
    for (std::size_t i = 0; i < dim; ++i) {
      lam[i] += fwd.penalty_diag[i] * fwd.psi[i];
    }
  }

  std::vector<Real> phi = fwd.psi;
  std::vector<double> grad(a.angles.size(), 0.0);
  for (int l = a.layers - 1; l >= 0; --l) {
    for (auto [c, t] : plan.even_odd) {
      apply_cnot(phi, c, t);
      apply_cnot(lam, c, t);
    }
    for (int q = 0; q < a.n_qubits; ++q) {
      grad[(static_cast<std::size_t>(l) * 2 + 1) * a.n_qubits + q] =
          ry_gradient_dot(lam, phi, q);
    }
    for (int q = 0; q < a.n_qubits; ++q) {
      apply_ry(phi, q, -a.angle(l, 1, q));
      apply_ry(lam, q, -a.angle(l, 1, q));
    }
    for (auto [c, t] : plan.odd_even) {
      apply_cnot(phi, c, t);
      apply_cnot(lam, c, t);
    }
    for (int q = 0; q < a.n_qubits; ++q) {
      grad[(static_cast<std::size_t>(l) * 2) * a.n_qubits + q] =
          ry_gradient_dot(lam, phi, q);
    }
    for (int q = 0; q < a.n_qubits; ++q) {
      apply_ry(phi, q, -a.angle(l, 0, q));
      apply_ry(lam, q, -a.angle(l, 0, q));
    }
  }

  EpochEval out;
  out.loss = fwd.loss;
  out.psi = std::move(fwd.psi);
  out.string_values = std::move(fwd.string_values);
  out.gradient = std::move(grad);
  return out;
}

std::vector<double> adjoint_gradient(const Ansatz& a, const GradientSpec& spec) {
  std::unique_ptr<DenseHermitianOp> op_w, op_p;
  LossOperators ops;
  if (spec.u_w != nullptr) {
    op_w = std::make_unique<DenseHermitianOp>(hermitian_from_unitary(*spec.u_w));
    ops.objective_w = op_w.get();
  }
  if (spec.u_p != nullptr) {
    op_p = std::make_unique<DenseHermitianOp>(hermitian_from_unitary(*spec.u_p));
    ops.objective_p = op_p.get();
  }
  ops.strings = spec.strings;
  ops.lambda = spec.lambda;
  return evaluate_loss_and_gradient(a, ops).gradient;
}

}  // namespace htaac
