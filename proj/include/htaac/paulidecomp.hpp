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

namespace htaac {

// Tensor product of single-qubit Paulis; axes[q] in {I, X, Y, Z} acts on
// qubit q (basis-index bit q).
struct PauliString {
  std::string axes;
  double coeff = 0.0;

  int n_qubits() const { return static_cast<int>(axes.size()); }
};

// Dense matrix of one unnormalized Pauli word.
CMatrix pauli_matrix(const std::string& axes);

// W = sum_s c_s P_s with c_s = Tr[P_s W] / 2^n, computed by the qubit-wise
// Pauli transform in O(n 4^n). Terms with |c_s| < 1e-12 are dropped; output
// is sorted lexicographically by axes word. Bounded to n <= 12.
std::vector<PauliString> pauli_decompose(const Matrix& w);

// Sum of c_s P_s as a dense real matrix.
Matrix reconstruct_terms(std::span<const PauliString> terms, int n_qubits);

struct Truncation {
  std::vector<PauliString> kept;
  double achieved_error = 0.0;  // mean |W_approx - W| / mean |W| over support
};

// Greedily keeps the largest-coefficient terms until the mean absolute error
// over the nonzero entries of W drops to epsilon.
Truncation truncate_decomposition(std::span<const PauliString> terms,
                                  double epsilon);

struct Gate {
  enum class Kind { H, S, Sdg, Cx, Rz, Crz };
  Kind kind;
  int target = 0;
  int control = -1;     // CX partner or the ancilla for CRZ
  double angle = 0.0;   // RZ / CRZ only
};

struct GateSequence {
  int n_qubits = 0;  // target register width; the ancilla is qubit n_qubits
  int ancilla = 0;
  std::vector<Gate> gates;
};

// Line-per-gate export: "H q3", "CX q2 q3", "CRZ anc q3 -0.02".
std::string format_gate_sequence(const GateSequence& seq);

// controlled-exp(i * phase * coeff * P) conditioned on the ancilla: basis
// changes onto z, a CNOT ladder into the highest support qubit, one
// controlled-Rz(-2 * phase * coeff), and the mirrored conjugation.
GateSequence compile_controlled_gadget(const PauliString& p, double phase);

// First-order product of per-term gadgets in descending |coeff| order,
// approximating controlled-exp(i * phase * sum c_s P_s).
GateSequence trotterize(std::span<const PauliString> terms, double phase);

// Dense unitary of a gate sequence on n_qubits + 1 wires (ancilla = top bit).
// Verification path only; exponential in the qubit count.
CMatrix gate_sequence_unitary(const GateSequence& seq);

// Block unitary applying u to the target register when the ancilla is set.
CMatrix controlled_unitary(const CMatrix& u);

}  // namespace htaac
