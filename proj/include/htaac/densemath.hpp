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

namespace htaac {

using Matrix = Eigen::MatrixXd;
using CMatrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXd;
using CVector = Eigen::VectorXcd;

// W = V diag(lambda) V^T with ascending eigenvalues and orthogonal V.
struct EighResult {
  Vector eigenvalues;
  Matrix eigenvectors;
};

// Rejects inputs that are not symmetric to machine precision.
EighResult sym_eigh(const Matrix& w);

// exp(i * phase * W) = V diag(exp(i * phase * lambda)) V^T.
CMatrix herm_expm(const Matrix& w, double phase);
CMatrix herm_expm(const EighResult& eig, double phase);

// Hermitian imaginary part of herm_expm: sin(phase * W), a real symmetric
// matrix. Equals (U - U^dagger) / 2i for U = herm_expm(w, phase).
Matrix herm_sin(const Matrix& w, double phase);
Matrix herm_sin(const EighResult& eig, double phase);

// Dense products with dimension checks. Output is not renormalized.
CVector mat_vec(const CMatrix& u, const CVector& psi);
Vector mat_vec(const Matrix& m, const Vector& x);

}  // namespace htaac
