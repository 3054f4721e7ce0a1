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

#include "htaac/alphabound.hpp"

#include <charconv>
#include <cmath>

namespace htaac {

namespace {

std::string format_number(double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

}  // namespace

std::string to_string(WeightFamily family) {
  switch (family) {
    case WeightFamily::UniformPositive: return "uniform_positive";
    case WeightFamily::UniformSigned: return "uniform_signed";
    case WeightFamily::NormalLargeMean: return "normal_large_mean";
    case WeightFamily::NormalLargeSigma: return "normal_large_sigma";
  }
  return "unknown";
}

double BoundResult::alpha_bound() const { return std::sqrt(alpha_sq_bound); }

BoundResult alpha_upper_bound(const GraphStats& stats, double scale,
                              WeightFamily family, bool use_xi_max) {
  if (stats.e == 0) {
    throw ValidationError("alpha bound undefined for a graph with no edges");
  }
  if (!(scale > 0)) throw ValidationError("weight scale must be positive");

  BoundResult r;
  r.family = family;
  r.e = stats.e;
  r.scale = scale;
  r.d = stats.d;
  r.xi_used = use_xi_max ? stats.xi_max : stats.xi;
  if (!(r.xi_used > 0)) throw ValidationError("xi must be positive");
  r.n_vertices = static_cast<int>(std::llround(stats.e / stats.xi));

  switch (family) {
    case WeightFamily::UniformPositive:
      r.alpha_sq_bound =
          3.0 * r.n_vertices / (scale * scale * std::pow(r.xi_used, 3));
      break;
    case WeightFamily::UniformSigned:
      // Signed weights cancel in the third-order term, so the positive-case
      // value underestimates the admissible range.
      r.alpha_sq_bound =
          3.0 * r.n_vertices / (scale * scale * std::pow(r.xi_used, 3));
      r.conservative_floor = true;
      break;
    case WeightFamily::NormalLargeMean:
    case WeightFamily::NormalLargeSigma: {
      double density = stats.d;
      if (use_xi_max) {
        // Densest-region density implied by xi_max: d = 2 xi / (N - 1).
        density = 2.0 * stats.xi_max / (r.n_vertices - 1);
      }
      r.d = density;
      r.alpha_sq_bound = 6.0 / (static_cast<double>(r.n_vertices) *
                                r.n_vertices * scale * scale *
                                std::pow(density, 3));
      break;
    }
  }
  return r;
}

std::vector<EncodingError> encoding_error_sweep(const Matrix& w,
                                                std::span<const double> alphas) {
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    if (!(alphas[i] > 0)) throw ValidationError("alphas must be positive");
    if (i > 0 && alphas[i] <= alphas[i - 1]) {
      throw ValidationError("alphas must be strictly ascending");
    }
  }
  const auto eig = sym_eigh(w);
  const Eigen::Index dim = w.rows();

  std::vector<EncodingError> out;
  out.reserve(alphas.size());
  for (double alpha : alphas) {
    const Matrix im = herm_sin(eig, alpha);
    EncodingError err;
    err.alpha = alpha;
    double acc = 0, abs_dev = 0, abs_w = 0;
    long long support = 0;
    for (Eigen::Index i = 0; i < dim; ++i) {
      for (Eigen::Index j = 0; j < dim; ++j) {
        const double scaled = im(i, j) / alpha;
        if (w(i, j) != 0.0) {
          const double rel = std::abs(scaled - w(i, j)) / std::abs(w(i, j));
          acc += rel;
          abs_dev += std::abs(scaled - w(i, j));
          abs_w += std::abs(w(i, j));
          err.rel_err_max = std::max(err.rel_err_max, rel);
          ++support;
        } else {
          err.offsupport_max = std::max(err.offsupport_max, std::abs(scaled));
        }
      }
    }
    if (support == 0) throw ValidationError("weight matrix has empty support");
    err.rel_err_mean = acc / support;
    err.agg_rel_err = abs_dev / abs_w;
    out.push_back(err);
  }
  return out;
}

std::string encoding_error_csv(std::span<const EncodingError> errors) {
  std::string out = "alpha,rel_err_mean,rel_err_max,offsupport_max,agg_rel_err\n";
  for (const auto& e : errors) {
    out += format_number(e.alpha) + "," + format_number(e.rel_err_mean) + "," +
           format_number(e.rel_err_max) + "," +
           format_number(e.offsupport_max) + "," +
           format_number(e.agg_rel_err) + "\n";
  }
  return out;
}

}  // namespace htaac
