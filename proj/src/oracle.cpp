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

#include "htaac/oracle.hpp"

#include <bit>
#include <cmath>
#include <limits>
#include <thread>

#include "htaac/rng.hpp"

namespace htaac::oracle {

CutSolution brute_force_maxcut(const Graph& g) {
  const int n = g.n_vertices();
  if (n > 24) {
    throw ValidationError("brute force limited to 24 vertices");
  }
  const auto& edges = g.edges();
  const std::uint64_t patterns = n > 1 ? std::uint64_t{1} << (n - 1) : 1;

  // Vertex 0 is pinned to +1; pattern bit i-1 holds the sign of vertex i.
  auto cut_of = [&](std::uint64_t pat) {
    double cut = 0;
    for (const auto& e : edges) {
      const bool si = e.i != 0 && (pat >> (e.i - 1) & 1);
      const bool sj = e.j != 0 && (pat >> (e.j - 1) & 1);
      if (si != sj) cut += e.w;
    }
    return cut;
  };

  struct Best {
    double cut = -std::numeric_limits<double>::infinity();
    std::uint64_t pattern = 0;
  };
  auto scan = [&](std::uint64_t lo, std::uint64_t hi) {
    Best b;
    for (std::uint64_t pat = lo; pat < hi; ++pat) {
      const double c = cut_of(pat);
      if (c > b.cut) {
        b.cut = c;
        b.pattern = pat;
      }
    }
    return b;
  };

  Best best;
  const unsigned workers =
      n >= 20 ? std::max(1u, std::thread::hardware_concurrency()) : 1;
  if (workers == 1) {
    best = scan(0, patterns);
  } else {
    std::vector<Best> partial(workers);
    std::vector<std::thread> pool;
    const std::uint64_t chunk = (patterns + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
      const std::uint64_t lo = w * chunk;
      const std::uint64_t hi = std::min(patterns, lo + chunk);
      pool.emplace_back([&, w, lo, hi] {
        if (lo < hi) partial[w] = scan(lo, hi);
      });
    }
    for (auto& t : pool) t.join();
    // Ranges ascend with the worker index, so the lowest-pattern tie wins
    // regardless of the thread count.
    for (const auto& b : partial) {
      if (b.cut > best.cut) best = b;
    }
  }

  CutSolution sol;
  sol.signs.assign(n, 1);
  for (int i = 1; i < n; ++i) {
    sol.signs[i] = best.pattern >> (i - 1) & 1 ? -1 : 1;
  }
  sol.cut = cut_value(g, sol.signs);
  return sol;
}

GWRun classical_gw_run(const Graph& g, const GWBaselineConfig& cfg) {
  const int n = g.n_vertices();
  if (cfg.rounding_samples < 1) {
    throw ValidationError("need at least one rounding sample");
  }
  const int rank = cfg.rank > 0
                       ? cfg.rank
                       : static_cast<int>(std::ceil(std::sqrt(2.0 * n)));
  if (rank < 2) throw ValidationError("rank must be >= 2");

  Rng rng(derive_seed(cfg.seed, 0x6777ULL));
  Matrix v(rank, n);
  for (int i = 0; i < n; ++i) {
    for (int r = 0; r < rank; ++r) v(r, i) = rng.normal(0, 1);
    v.col(i).normalize();
  }

  const auto& edges = g.edges();
  auto objective = [&](const Matrix& m) {
    double acc = 0;
    for (const auto& e : edges) acc += 2.0 * e.w * m.col(e.i).dot(m.col(e.j));
    return acc;
  };

  GWRun run;
  double obj = objective(v);
  run.objective_per_iteration.push_back(obj);
  double step = cfg.learning_rate;
  Matrix grad(rank, n);
  for (int it = 0; it < cfg.iterations; ++it) {
    grad.setZero();
    for (const auto& e : edges) {
      grad.col(e.i) += 2.0 * e.w * v.col(e.j);
      grad.col(e.j) += 2.0 * e.w * v.col(e.i);
    }
    // Backtracking keeps <W, V^T V> non-increasing.
    for (;;) {
      Matrix trial = v - step * grad;
      for (int i = 0; i < n; ++i) trial.col(i).normalize();
      const double trial_obj = objective(trial);
      if (trial_obj <= obj + 1e-15 * std::abs(obj)) {
        v = std::move(trial);
        obj = trial_obj;
        break;
      }
      step /= 2;
      if (step < 1e-14) break;
    }
    run.objective_per_iteration.push_back(obj);
    for (int i = 0; i < n; ++i) {
      run.max_column_norm_error = std::max(
          run.max_column_norm_error, std::abs(v.col(i).norm() - 1.0));
    }
  }

  CutSolution best;
  best.cut = -std::numeric_limits<double>::infinity();
  std::vector<int> signs(n);
  Vector gauss(rank);
  for (int s = 0; s < cfg.rounding_samples; ++s) {
    for (int r = 0; r < rank; ++r) gauss[r] = rng.normal(0, 1);
    for (int i = 0; i < n; ++i) {
      signs[i] = v.col(i).dot(gauss) >= 0 ? 1 : -1;
    }
    const double c = cut_value(g, signs);
    if (c > best.cut) {
      best.cut = c;
      best.signs = signs;
    }
  }
  run.solution = std::move(best);
  return run;
}

CutSolution classical_gw(const Graph& g, const GWBaselineConfig& cfg) {
  return classical_gw_run(g, cfg).solution;
}

}  // namespace htaac::oracle
