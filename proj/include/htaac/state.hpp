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

#include <Eigen/Dense>
#include <complex>
#include <vector>

namespace htaac {

// n-qubit statevector. Basis index bit q holds qubit q.
struct StateVector {
  int n_qubits = 0;
  Eigen::VectorXcd amps;

  Eigen::Index dim() const { return amps.size(); }

  static StateVector zero_state(int n_qubits) {
    StateVector s;
    s.n_qubits = n_qubits;
    s.amps = Eigen::VectorXcd::Zero(Eigen::Index(1) << n_qubits);
    s.amps[0] = 1.0;
    return s;
  }

  static StateVector from_real(int n_qubits, const std::vector<double>& a) {
    StateVector s;
    s.n_qubits = n_qubits;
    s.amps.resize(static_cast<Eigen::Index>(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i) s.amps[i] = a[i];
    return s;
  }
};

}  // namespace htaac
