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

#include "htaac/solver.hpp"

#include <charconv>
#include <chrono>
#include <cmath>
#include <limits>
#include <memory>

#include "htaac/constraints.hpp"
#include "htaac/densemath.hpp"
#include "htaac/rng.hpp"
#include "json.hpp"

namespace htaac {

namespace {

std::string format_number(double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

}  // namespace

void validate_solver_config(const SolverConfig& cfg) {
  if (!(cfg.alpha > 0) || !std::isfinite(cfg.alpha)) {
    throw ValidationError("alpha must be positive and finite");
  }
  if (!(cfg.beta >= 0) || cfg.beta >= 1.0) {
    throw ValidationError(
        "beta must satisfy 0 <= beta < 1 (diagonal terms are always "
        "satisfiable, so beta >= 1 lets balancing dominate the objective)");
  }
  if (cfg.lambda_coeff < 0) throw ValidationError("lambda coefficient must be >= 0");
  if (cfg.k < 1) throw ValidationError("constraint order k must be >= 1");
  if (cfg.layers < 1) throw ValidationError("need at least one ansatz layer");
  if (!(cfg.eta > 0)) throw ValidationError("learning rate must be positive");
  if (cfg.adam_beta1 < 0 || cfg.adam_beta1 >= 1 || cfg.adam_beta2 < 0 ||
      cfg.adam_beta2 >= 1) {
    throw ValidationError("ADAM betas must lie in [0, 1)");
  }
  if (cfg.epochs < 1) throw ValidationError("epochs must be >= 1");
  if (cfg.shots < 0) throw ValidationError("shots must be >= 0");
  if (!(cfg.init_angle_stddev >= 0)) {
    throw ValidationError("angle init stddev must be >= 0");
  }
}

namespace {

std::vector<int> sign_round(std::span<const double> psi, int n_vertices) {
  std::vector<int> signs(n_vertices);
  for (int i = 0; i < n_vertices; ++i) signs[i] = psi[i] < 0.0 ? -1 : 1;
  return signs;
}

// Empirical mean of `shots` +-1 ancilla outcomes with exact value x.
double sample_pm1_mean(double x, long shots, Rng& rng) {
  const double p0 = std::min(1.0, std::max(0.0, (1.0 + x) / 2.0));
  long ones = 0;
  for (long s = 0; s < shots; ++s) {
    if (rng.uniform01() < p0) ++ones;
  }
  return (2.0 * ones - shots) / static_cast<double>(shots);
}

constexpr std::uint64_t kStreamInit = 1;
constexpr std::uint64_t kStreamShots = 2;

}  // namespace

SparseSinOp::SparseSinOp(const Graph& g, double phase, Eigen::Index dim)
    : edges_(g.edges()), phase_(phase), dim_(dim) {
  if (dim_ < g.n_vertices()) {
    throw ValidationError("operator dimension below vertex count");
  }
}

void SparseSinOp::apply(std::span<const double> x, std::span<double> y) const {
  const std::size_t dim = static_cast<std::size_t>(dim_);
  auto matvec = [&](const std::vector<double>& in, std::vector<double>& out) {
    out.assign(dim, 0.0);
    for (const auto& e : edges_) {
      out[e.i] += phase_ * e.w * in[e.j];
      out[e.j] += phase_ * e.w * in[e.i];
    }
  };

  // sin(A) x = sum_m (-1)^m A^(2m+1) x / (2m+1)!  with A = phase * W.
  std::vector<double> cur(x.begin(), x.end());
  std::vector<double> tmp(dim);
  matvec(cur, tmp);
  cur = tmp;
  for (std::size_t i = 0; i < dim; ++i) y[i] = cur[i];
  for (int m = 1; m < 500; ++m) {
    matvec(cur, tmp);
    matvec(tmp, cur);
    const double scale = -1.0 / (2.0 * m * (2.0 * m + 1.0));
    double term_norm2 = 0;
    for (std::size_t i = 0; i < dim; ++i) {
      cur[i] *= scale;
      y[i] += cur[i];
      term_norm2 += cur[i] * cur[i];
    }
    if (!std::isfinite(term_norm2)) {
      throw std::runtime_error(
          "sin series diverged numerically; phase too large for the sparse path");
    }
    double y_norm2 = 0;
    for (std::size_t i = 0; i < dim; ++i) y_norm2 += y[i] * y[i];
    if (term_norm2 <= 1e-32 * std::max(y_norm2, 1e-300)) return;
  }
  throw std::runtime_error("sin series did not converge; phase too large");
}

CutSolution round_solution(const Graph& g, const StateVector& psi) {
  if (psi.dim() < g.n_vertices()) {
    throw ValidationError("state smaller than the vertex count");
  }
  std::vector<double> re(g.n_vertices());
  for (int i = 0; i < g.n_vertices(); ++i) re[i] = psi.amps[i].real();
  CutSolution sol;
  sol.signs = sign_round(re, g.n_vertices());
  sol.cut = cut_value(g, sol.signs);
  return sol;
}

double estimate_cq(double sigma_plus, double sigma_psi, Eigen::Index dim,
                   double alpha) {
  if (!(alpha > 0)) throw ValidationError("alpha must be positive");
  return static_cast<double>(dim) / (4.0 * alpha) * (sigma_plus - sigma_psi);
}

double cut_value(const Graph& g, std::span<const int> signs) {
  if (static_cast<int>(signs.size()) != g.n_vertices()) {
    throw ValidationError("sign vector length must equal the vertex count");
  }
  double acc = 0;
  for (const auto& e : g.edges()) {
    acc += e.w * (1 - signs[e.i] * signs[e.j]) / 2.0;
  }
  return acc;
}

std::pair<Graph, double> maxsat_objective(const Matrix& a, const Matrix& b) {
  if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows()) {
    throw ValidationError("coefficient matrices must be square and equal-sized");
  }
  auto check = [](const Matrix& m, const char* name) {
    if ((m - m.transpose()).cwiseAbs().maxCoeff() > 1e-12) {
      throw ValidationError(std::string(name) + " matrix must be symmetric");
    }
    if (m.diagonal().cwiseAbs().maxCoeff() > 0) {
      throw ValidationError(std::string(name) + " matrix must have zero diagonal");
    }
  };
  check(a, "a");
  check(b, "b");

  const int n = static_cast<int>(a.rows());
  std::vector<Edge> edges;
  double w_plus_sum = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double minus = a(i, j) - b(i, j);
      w_plus_sum += a(i, j) + b(i, j);
      if (minus != 0.0) edges.push_back({i, j, minus});
    }
  }
  return {Graph(n, std::move(edges)), w_plus_sum};
}

TrainTrace train(const Graph& g, const SolverConfig& cfg) {
  validate_solver_config(cfg);
  if (g.edges().empty()) {
    throw ValidationError("graph has no edges; nothing to optimize");
  }
  const auto t_start = std::chrono::steady_clock::now();

  const int n_vertices = g.n_vertices();
  const int n = qubits_for(n_vertices);
  const Eigen::Index dim = Eigen::Index(1) << n;
  const int k_eff = std::min(cfg.k, n);

  const auto strings = enumerate_zstrings(n, k_eff);
  const double lambda = cfg.lambda_coeff * cfg.alpha / strings.size();

  // Objective operators: sin(alpha W) and the diagonal sin(beta P). Small
  // instances go through the dense eigendecomposition, large ones through the
  // sparse series (identical values, no dense 2^n x 2^n storage).
  std::unique_ptr<HermitianOp> op_w;
  std::unique_ptr<DiagonalHermitianOp> op_p;
  double sigma_plus = 0;
  if (cfg.include_objective) {
    if (dim <= cfg.dense_cutoff_dim) {
      op_w = std::make_unique<DenseHermitianOp>(
          herm_sin(pad_to_qubits(g), cfg.alpha));
    } else {
      op_w = std::make_unique<SparseSinOp>(g, cfg.alpha, dim);
    }
    std::vector<double> plus(dim, 1.0 / std::sqrt(static_cast<double>(dim)));
    sigma_plus = op_w->expectation(plus);
    if (cfg.beta > 0) {
      // The balancing phase is alpha * beta: beta weights the population term
      // relative to the objective encoding, keeping sin() in its linear
      // regime even when P entries are large.
      Vector p = population_diagonal(g, dim);
      op_p = std::make_unique<DiagonalHermitianOp>(
          (cfg.alpha * cfg.beta * p.array()).sin().matrix());
    }
  }

  LossOperators ops;
  ops.objective_w = op_w.get();
  ops.objective_p = op_p.get();
  ops.strings = strings;
  ops.lambda = lambda;

  Rng init_rng(derive_seed(cfg.seed, kStreamInit));
  Ansatz ansatz =
      Ansatz::random_init(n, cfg.layers, cfg.init_angle_stddev, init_rng);
  Rng shot_rng(derive_seed(cfg.seed, kStreamShots));

  std::vector<double> adam_m(ansatz.angles.size(), 0.0);
  std::vector<double> adam_v(ansatz.angles.size(), 0.0);

  TrainTrace trace;
  trace.config = cfg;
  trace.n_qubits = n;
  trace.n_vertices = n_vertices;
  trace.n_constraints = strings.size();
  trace.lambda = lambda;
  trace.epochs.reserve(cfg.epochs);
  trace.best.cut = -std::numeric_limits<double>::infinity();

  for (int epoch = 0; epoch < cfg.epochs; ++epoch) {
    EpochEval eval = evaluate_loss_and_gradient(ansatz, ops);
    if (!std::isfinite(eval.loss.total)) {
      throw std::runtime_error(
          "non-finite loss at epoch " + std::to_string(epoch) +
          " (obj_w=" + format_number(eval.loss.obj_w) +
          ", obj_p=" + format_number(eval.loss.obj_p) +
          ", penalty=" + format_number(eval.loss.penalty) +
          "); lower lambda or beta");
    }

    EpochRecord rec;
    rec.obj_w = eval.loss.obj_w;
    rec.obj_p = eval.loss.obj_p;
    rec.penalty = eval.loss.penalty;
    if (cfg.shots > 0 && cfg.include_objective) {
      rec.obj_w = sample_pm1_mean(eval.loss.obj_w, cfg.shots, shot_rng);
      if (op_p != nullptr) {
        rec.obj_p = sample_pm1_mean(eval.loss.obj_p, cfg.shots, shot_rng);
      }
    }
    rec.loss = rec.obj_w + rec.obj_p + rec.penalty;

    const auto signs = sign_round(eval.psi, n_vertices);
    rec.cq_rounded = cut_value(g, signs);
    if (cfg.include_objective) {
      double plus_term = sigma_plus;
      if (cfg.shots > 0) {
        plus_term = sample_pm1_mean(sigma_plus, cfg.shots, shot_rng);
      }
      rec.cq_est = estimate_cq(plus_term, rec.obj_w, dim, cfg.alpha);
    }

    double mean_p = 0;
    for (int i = 0; i < n_vertices; ++i) mean_p += eval.psi[i] * eval.psi[i];
    mean_p /= n_vertices;
    double var_p = 0;
    for (int i = 0; i < n_vertices; ++i) {
      const double d = eval.psi[i] * eval.psi[i] - mean_p;
      var_p += d * d;
    }
    rec.sigma_rho = var_p / n_vertices;

    trace.epochs.push_back(rec);
    if (rec.cq_rounded > trace.best.cut) {
      trace.best.cut = rec.cq_rounded;
      trace.best.signs = signs;
      trace.best_epoch = epoch;
    }

    // ADAM step (bias-corrected, no weight decay or schedule).
    const double t = epoch + 1;
    const double c1 = 1.0 - std::pow(cfg.adam_beta1, t);
    const double c2 = 1.0 - std::pow(cfg.adam_beta2, t);
    for (std::size_t p = 0; p < ansatz.angles.size(); ++p) {
      const double grad = eval.gradient[p];
      adam_m[p] = cfg.adam_beta1 * adam_m[p] + (1 - cfg.adam_beta1) * grad;
      adam_v[p] = cfg.adam_beta2 * adam_v[p] + (1 - cfg.adam_beta2) * grad * grad;
      ansatz.angles[p] -=
          cfg.eta * (adam_m[p] / c1) / (std::sqrt(adam_v[p] / c2) + cfg.adam_eps);
    }
  }

  trace.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start)
          .count();
  return trace;
}

std::string trace_csv(const TrainTrace& trace) {
  std::string out = "epoch,obj_w,obj_p,penalty,loss,cq_est,cq_rounded,sigma_rho\n";
  for (std::size_t e = 0; e < trace.epochs.size(); ++e) {
    const auto& r = trace.epochs[e];
    out += std::to_string(e) + "," + format_number(r.obj_w) + "," +
           format_number(r.obj_p) + "," + format_number(r.penalty) + "," +
           format_number(r.loss) + "," + format_number(r.cq_est) + "," +
           format_number(r.cq_rounded) + "," + format_number(r.sigma_rho) + "\n";
  }
  return out;
}

std::string summary_json(const TrainTrace& trace) {
  nlohmann::json j;
  j["config"] = {{"alpha", trace.config.alpha},
                 {"beta", trace.config.beta},
                 {"lambda_coeff", trace.config.lambda_coeff},
                 {"k", trace.config.k},
                 {"layers", trace.config.layers},
                 {"eta", trace.config.eta},
                 {"adam_beta1", trace.config.adam_beta1},
                 {"adam_beta2", trace.config.adam_beta2},
                 {"epochs", trace.config.epochs},
                 {"seed", trace.config.seed},
                 {"shots", trace.config.shots},
                 {"include_objective", trace.config.include_objective}};
  j["n_qubits"] = trace.n_qubits;
  j["n_vertices"] = trace.n_vertices;
  j["n_constraints"] = trace.n_constraints;
  j["lambda"] = trace.lambda;
  j["best_cut"] = trace.best.cut;
  j["best_epoch"] = trace.best_epoch;
  j["wall_seconds"] = trace.wall_seconds;
  return j.dump(2);
}

}  // namespace htaac
