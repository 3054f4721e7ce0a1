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

#include "htaac/paulidecomp.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <complex>

#include "htaac/graph.hpp"

namespace htaac {

namespace {

using Complex = std::complex<double>;

constexpr double kCoeffCutoff = 1e-12;

std::string format_number(double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

void validate_axes(const std::string& axes) {
  if (axes.empty()) throw ValidationError("empty Pauli word");
  for (char c : axes) {
    if (c != 'I' && c != 'X' && c != 'Y' && c != 'Z') {
      throw ValidationError("Pauli letters must be one of I, X, Y, Z");
    }
  }
}

struct PauliMasks {
  std::uint64_t x = 0;      // bit-flip support (X and Y)
  std::uint64_t phase = 0;  // phase support (Z and Y)
  int y_count = 0;
};

PauliMasks masks_of(const std::string& axes) {
  PauliMasks m;
  for (std::size_t q = 0; q < axes.size(); ++q) {
    const std::uint64_t bit = std::uint64_t{1} << q;
    switch (axes[q]) {
      case 'X': m.x |= bit; break;
      case 'Y': m.x |= bit; m.phase |= bit; ++m.y_count; break;
      case 'Z': m.phase |= bit; break;
      default: break;
    }
  }
  return m;
}

Complex i_power(int k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    case 2: return {-1, 0};
    default: return {0, -1};
  }
}

int qubit_count_of(const Matrix& w) {
  const Eigen::Index dim = w.rows();
  if (dim < 2 || w.cols() != dim || (dim & (dim - 1)) != 0) {
    throw ValidationError("matrix dimension must be a power of two >= 2");
  }
  return std::countr_zero(static_cast<std::uint64_t>(dim));
}

}  // namespace

CMatrix pauli_matrix(const std::string& axes) {
  validate_axes(axes);
  const auto m = masks_of(axes);
  const Eigen::Index dim = Eigen::Index(1) << axes.size();
  CMatrix p = CMatrix::Zero(dim, dim);
  const Complex front = i_power(m.y_count);
  for (std::uint64_t b = 0; b < static_cast<std::uint64_t>(dim); ++b) {
    const double sign = std::popcount(b & m.phase) & 1 ? -1.0 : 1.0;
    p(static_cast<Eigen::Index>(b ^ m.x), static_cast<Eigen::Index>(b)) =
        front * sign;
  }
  return p;
}

std::vector<PauliString> pauli_decompose(const Matrix& w) {
  const int n = qubit_count_of(w);
  if (n > 12) {
    throw ValidationError("Pauli decomposition limited to 12 qubits");
  }
  const std::uint64_t dim = std::uint64_t{1} << n;

  // Qubit-wise transform: after processing qubit q, the (row-bit, col-bit)
  // pair at q indexes the Pauli letter (00 -> I, 01 -> X, 10 -> Y, 11 -> Z).
  std::vector<Complex> buf(dim * dim);
  for (std::uint64_t r = 0; r < dim; ++r) {
    for (std::uint64_t c = 0; c < dim; ++c) {
      buf[r * dim + c] = w(static_cast<Eigen::Index>(r),
                           static_cast<Eigen::Index>(c));
    }
  }
  const Complex half_i(0, 0.5);
  for (int q = 0; q < n; ++q) {
    const std::uint64_t bit = std::uint64_t{1} << q;
    for (std::uint64_t r = 0; r < dim; ++r) {
      if (r & bit) continue;
      for (std::uint64_t c = 0; c < dim; ++c) {
        if (c & bit) continue;
        const Complex m00 = buf[r * dim + c];
        const Complex m01 = buf[r * dim + (c | bit)];
        const Complex m10 = buf[(r | bit) * dim + c];
        const Complex m11 = buf[(r | bit) * dim + (c | bit)];
        buf[r * dim + c] = 0.5 * (m00 + m11);
        buf[r * dim + (c | bit)] = 0.5 * (m01 + m10);
        buf[(r | bit) * dim + c] = half_i * (m01 - m10);
        buf[(r | bit) * dim + (c | bit)] = 0.5 * (m00 - m11);
      }
    }
  }

  std::vector<PauliString> terms;
  for (std::uint64_t r = 0; r < dim; ++r) {
    for (std::uint64_t c = 0; c < dim; ++c) {
      const Complex v = buf[r * dim + c];
      if (std::abs(v) < kCoeffCutoff) continue;
      if (std::abs(v.imag()) > 1e-10 * std::max(1.0, std::abs(v.real()))) {
        throw ValidationError(
            "non-real Pauli coefficient; input is not real symmetric");
      }
      PauliString s;
      s.axes.resize(n);
      for (int q = 0; q < n; ++q) {
        const bool rb = r >> q & 1;
        const bool cb = c >> q & 1;
        s.axes[q] = rb ? (cb ? 'Z' : 'Y') : (cb ? 'X' : 'I');
      }
      s.coeff = v.real();
      terms.push_back(std::move(s));
    }
  }
  std::sort(terms.begin(), terms.end(),
            [](const PauliString& a, const PauliString& b) {
              return a.axes < b.axes;
            });
  return terms;
}

Matrix reconstruct_terms(std::span<const PauliString> terms, int n_qubits) {
  const std::uint64_t dim = std::uint64_t{1} << n_qubits;
  Matrix w = Matrix::Zero(static_cast<Eigen::Index>(dim),
                          static_cast<Eigen::Index>(dim));
  for (const auto& t : terms) {
    if (t.n_qubits() != n_qubits) {
      throw ValidationError("term width does not match qubit count");
    }
    validate_axes(t.axes);
    const auto m = masks_of(t.axes);
    if (m.y_count % 2 != 0) {
      throw ValidationError("odd Y count cannot reconstruct a real matrix");
    }
    const double front = (m.y_count / 2) % 2 ? -t.coeff : t.coeff;
    for (std::uint64_t b = 0; b < dim; ++b) {
      const double v = std::popcount(b & m.phase) & 1 ? -front : front;
      w(static_cast<Eigen::Index>(b ^ m.x), static_cast<Eigen::Index>(b)) += v;
    }
  }
  return w;
}

Truncation truncate_decomposition(std::span<const PauliString> terms,
                                  double epsilon) {
  if (terms.empty()) {
    throw ValidationError("cannot truncate an empty decomposition");
  }
  if (epsilon < 0) throw ValidationError("epsilon must be >= 0");
  const int n = terms.front().n_qubits();
  const std::uint64_t dim = std::uint64_t{1} << n;
  const Matrix w = reconstruct_terms(terms, n);

  const double w_scale = w.cwiseAbs().maxCoeff();
  std::vector<std::uint64_t> support;
  double abs_sum = 0;
  for (std::uint64_t r = 0; r < dim; ++r) {
    for (std::uint64_t c = 0; c < dim; ++c) {
      const double v = std::abs(w(static_cast<Eigen::Index>(r),
                                  static_cast<Eigen::Index>(c)));
      if (v > 1e-12 * std::max(1.0, w_scale)) {
        support.push_back(r * dim + c);
        abs_sum += v;
      }
    }
  }
  if (support.empty()) {
    throw ValidationError("reconstructed matrix has empty support");
  }
  const double mean_abs_w = abs_sum / support.size();

  std::vector<PauliString> sorted(terms.begin(), terms.end());
  std::sort(sorted.begin(), sorted.end(),
            [](const PauliString& a, const PauliString& b) {
              const double ma = std::abs(a.coeff), mb = std::abs(b.coeff);
              return ma != mb ? ma > mb : a.axes < b.axes;
            });

  std::vector<bool> on_support(dim * dim, false);
  for (auto idx : support) on_support[idx] = true;

  Matrix approx = Matrix::Zero(static_cast<Eigen::Index>(dim),
                               static_cast<Eigen::Index>(dim));
  double err_sum = abs_sum;  // approx = 0 initially
  double err = err_sum / support.size() / mean_abs_w;

  Truncation out;
  for (const auto& t : sorted) {
    if (err <= epsilon) break;
    const auto m = masks_of(t.axes);
    const double front = (m.y_count / 2) % 2 ? -t.coeff : t.coeff;
    for (std::uint64_t b = 0; b < dim; ++b) {
      const std::uint64_t r = b ^ m.x;
      const double v = std::popcount(b & m.phase) & 1 ? -front : front;
      const auto ri = static_cast<Eigen::Index>(r);
      const auto ci = static_cast<Eigen::Index>(b);
      if (on_support[r * dim + b]) {
        err_sum -= std::abs(approx(ri, ci) - w(ri, ci));
        approx(ri, ci) += v;
        err_sum += std::abs(approx(ri, ci) - w(ri, ci));
      } else {
        approx(ri, ci) += v;
      }
    }
    err = err_sum / support.size() / mean_abs_w;
    out.kept.push_back(t);
  }
  out.achieved_error = std::max(0.0, err);
  return out;
}

std::string format_gate_sequence(const GateSequence& seq) {
  std::string out;
  auto wire = [&](int q) {
    return q == seq.ancilla ? std::string("anc") : "q" + std::to_string(q);
  };
  for (const auto& g : seq.gates) {
    switch (g.kind) {
      case Gate::Kind::H: out += "H " + wire(g.target); break;
      case Gate::Kind::S: out += "S " + wire(g.target); break;
      case Gate::Kind::Sdg: out += "SDG " + wire(g.target); break;
      case Gate::Kind::Cx:
        out += "CX " + wire(g.control) + " " + wire(g.target);
        break;
      case Gate::Kind::Rz:
        out += "RZ " + wire(g.target) + " " + format_number(g.angle);
        break;
      case Gate::Kind::Crz:
        out += "CRZ " + wire(g.control) + " " + wire(g.target) + " " +
               format_number(g.angle);
        break;
    }
    out += "\n";
  }
  return out;
}

GateSequence compile_controlled_gadget(const PauliString& p, double phase) {
  validate_axes(p.axes);
  const int n = p.n_qubits();
  std::vector<int> support;
  for (int q = 0; q < n; ++q) {
    if (p.axes[q] != 'I') support.push_back(q);
  }
  if (support.empty()) {
    throw ValidationError("cannot compile a gadget for the identity string");
  }

  GateSequence seq;
  seq.n_qubits = n;
  seq.ancilla = n;

  auto basis_enter = [&](int q) {
    if (p.axes[q] == 'X') {
      seq.gates.push_back({Gate::Kind::H, q});
    } else if (p.axes[q] == 'Y') {
      seq.gates.push_back({Gate::Kind::Sdg, q});
      seq.gates.push_back({Gate::Kind::H, q});
    }
  };
  auto basis_exit = [&](int q) {
    if (p.axes[q] == 'X') {
      seq.gates.push_back({Gate::Kind::H, q});
    } else if (p.axes[q] == 'Y') {
      seq.gates.push_back({Gate::Kind::H, q});
      seq.gates.push_back({Gate::Kind::S, q});
    }
  };

  for (int q : support) basis_enter(q);
  for (std::size_t i = 0; i + 1 < support.size(); ++i) {
    seq.gates.push_back({Gate::Kind::Cx, support[i + 1], support[i]});
  }
  const int pivot = support.back();
  seq.gates.push_back(
      {Gate::Kind::Crz, pivot, seq.ancilla, -2.0 * phase * p.coeff});
  for (std::size_t i = support.size() - 1; i-- > 0;) {
    seq.gates.push_back({Gate::Kind::Cx, support[i + 1], support[i]});
  }
  for (auto it = support.rbegin(); it != support.rend(); ++it) basis_exit(*it);
  return seq;
}

GateSequence trotterize(std::span<const PauliString> terms, double phase) {
  if (terms.empty()) throw ValidationError("cannot trotterize an empty sum");
  std::vector<PauliString> sorted(terms.begin(), terms.end());
  std::sort(sorted.begin(), sorted.end(),
            [](const PauliString& a, const PauliString& b) {
              const double ma = std::abs(a.coeff), mb = std::abs(b.coeff);
              return ma != mb ? ma > mb : a.axes < b.axes;
            });
  GateSequence seq;
  seq.n_qubits = sorted.front().n_qubits();
  seq.ancilla = seq.n_qubits;
  for (const auto& t : sorted) {
    if (t.n_qubits() != seq.n_qubits) {
      throw ValidationError("mixed qubit counts in term list");
    }
    auto gadget = compile_controlled_gadget(t, phase);
    seq.gates.insert(seq.gates.end(), gadget.gates.begin(), gadget.gates.end());
  }
  return seq;
}

namespace {

void apply_gate(CMatrix& u, const Gate& g) {
  const Eigen::Index dim = u.rows();
  const std::uint64_t tbit = std::uint64_t{1} << g.target;
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  switch (g.kind) {
    case Gate::Kind::H:
      for (Eigen::Index col = 0; col < u.cols(); ++col) {
        for (std::uint64_t i = 0; i < static_cast<std::uint64_t>(dim); ++i) {
          if (i & tbit) continue;
          const Complex a0 = u(static_cast<Eigen::Index>(i), col);
          const Complex a1 = u(static_cast<Eigen::Index>(i | tbit), col);
          u(static_cast<Eigen::Index>(i), col) = inv_sqrt2 * (a0 + a1);
          u(static_cast<Eigen::Index>(i | tbit), col) = inv_sqrt2 * (a0 - a1);
        }
      }
      break;
    case Gate::Kind::S:
    case Gate::Kind::Sdg: {
      const Complex f = g.kind == Gate::Kind::S ? Complex(0, 1) : Complex(0, -1);
      for (Eigen::Index col = 0; col < u.cols(); ++col) {
        for (std::uint64_t i = 0; i < static_cast<std::uint64_t>(dim); ++i) {
          if (i & tbit) u(static_cast<Eigen::Index>(i), col) *= f;
        }
      }
      break;
    }
    case Gate::Kind::Cx: {
      const std::uint64_t cbit = std::uint64_t{1} << g.control;
      for (Eigen::Index col = 0; col < u.cols(); ++col) {
        for (std::uint64_t i = 0; i < static_cast<std::uint64_t>(dim); ++i) {
          if ((i & cbit) && !(i & tbit)) {
            std::swap(u(static_cast<Eigen::Index>(i), col),
                      u(static_cast<Eigen::Index>(i | tbit), col));
          }
        }
      }
      break;
    }
    case Gate::Kind::Rz:
    case Gate::Kind::Crz: {
      const Complex e0 = std::exp(Complex(0, -g.angle / 2));
      const Complex e1 = std::exp(Complex(0, g.angle / 2));
      const std::uint64_t cbit =
          g.kind == Gate::Kind::Crz ? std::uint64_t{1} << g.control : 0;
      for (Eigen::Index col = 0; col < u.cols(); ++col) {
        for (std::uint64_t i = 0; i < static_cast<std::uint64_t>(dim); ++i) {
          if (cbit && !(i & cbit)) continue;
          u(static_cast<Eigen::Index>(i), col) *= (i & tbit) ? e1 : e0;
        }
      }
      break;
    }
  }
}

}  // namespace

CMatrix gate_sequence_unitary(const GateSequence& seq) {
  if (seq.n_qubits < 1 || seq.n_qubits > 10) {
    throw ValidationError("dense gate simulation limited to 10 target qubits");
  }
  const Eigen::Index dim = Eigen::Index(1) << (seq.n_qubits + 1);
  CMatrix u = CMatrix::Identity(dim, dim);
  for (const auto& g : seq.gates) apply_gate(u, g);
  return u;
}

CMatrix controlled_unitary(const CMatrix& u) {
  const Eigen::Index dim = u.rows();
  if (u.cols() != dim) throw ValidationError("unitary must be square");
  CMatrix out = CMatrix::Identity(2 * dim, 2 * dim);
  out.block(dim, dim, dim, dim) = u;
  return out;
}

}  // namespace htaac
