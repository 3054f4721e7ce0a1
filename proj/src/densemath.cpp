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

#include "htaac/densemath.hpp"

#include <cmath>
#include <stdexcept>

#include "htaac/graph.hpp"

namespace htaac {

namespace {

void require_symmetric(const Matrix& w) {
  if (w.rows() != w.cols()) {
    throw ValidationError("matrix is not square");
  }
  const double scale = std::max(1.0, w.cwiseAbs().maxCoeff());
  const double skew = (w - w.transpose()).cwiseAbs().maxCoeff();
  if (skew > 1e-12 * scale) {
    throw ValidationError("matrix is not symmetric");
  }
}

}  // namespace

EighResult sym_eigh(const Matrix& w) {
  require_symmetric(w);
  Eigen::SelfAdjointEigenSolver<Matrix> solver(w);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("eigendecomposition failed to converge");
  }
  return {solver.eigenvalues(), solver.eigenvectors()};
}

CMatrix herm_expm(const EighResult& eig, double phase) {
  if (!std::isfinite(phase)) throw ValidationError("non-finite phase");
  const auto& v = eig.eigenvectors;
  CVector d(eig.eigenvalues.size());
  for (Eigen::Index k = 0; k < d.size(); ++k) {
    const double t = phase * eig.eigenvalues[k];
    d[k] = std::complex<double>(std::cos(t), std::sin(t));
  }
  return v.cast<std::complex<double>>() * d.asDiagonal() *
         v.transpose().cast<std::complex<double>>();
}

CMatrix herm_expm(const Matrix& w, double phase) {
  return herm_expm(sym_eigh(w), phase);
}

Matrix herm_sin(const EighResult& eig, double phase) {
  if (!std::isfinite(phase)) throw ValidationError("non-finite phase");
  const auto& v = eig.eigenvectors;
  Vector d = (phase * eig.eigenvalues.array()).sin();
  return v * d.asDiagonal() * v.transpose();
}

Matrix herm_sin(const Matrix& w, double phase) {
  return herm_sin(sym_eigh(w), phase);
}

CVector mat_vec(const CMatrix& u, const CVector& psi) {
  if (u.cols() != psi.size()) {
    throw ValidationError("dimension mismatch in mat_vec");
  }
  return u * psi;
}

Vector mat_vec(const Matrix& m, const Vector& x) {
  if (m.cols() != x.size()) {
    throw ValidationError("dimension mismatch in mat_vec");
  }
  return m * x;
}

}  // namespace htaac
