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
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace htaac {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Weighted undirected edge, 0-indexed, normalized to i < j.
struct Edge {
  int i = 0;
  int j = 0;
  double w = 0.0;
};

// Sparse symmetric weighted graph. Edges are stored sorted by (i, j) with
// i < j, at most one edge per vertex pair and no self-loops.
class Graph {
 public:
  Graph(int n_vertices, std::vector<Edge> edges);

  int n_vertices() const { return n_vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }

  // Per-vertex count of incident non-zero edges.
  std::vector<int> degrees() const;
  // Per-vertex sum of |w| over incident edges.
  std::vector<double> abs_strengths() const;

 private:
  int n_vertices_;
  std::vector<Edge> edges_;
};

struct GraphStats {
  long long e = 0;     // non-zero edge count
  double d = 0.0;      // density e / (N(N-1)/2)
  double xi = 0.0;     // mean edges per vertex, e / N
  double xi_max = 0.0; // mean degree over the top-decile most-connected vertices
  double w_sum = 0.0;  // sum of edge weights over j < i
  double p_max = 0.0;  // max over vertices of the incident |w| sum
};

// Weight distribution for synthetic graph families.
struct WeightLaw {
  enum class Kind { UniformPositive, UniformSigned, Normal };
  Kind kind = Kind::UniformPositive;
  double b = 1.0;      // uniform half-width / upper bound
  double mu = 0.0;     // normal mean
  double sigma = 1.0;  // normal stddev

  static WeightLaw uniform(double b);
  static WeightLaw uniform_signed(double b);
  static WeightLaw normal(double mu, double sigma);
};

enum class SignLaw { RandomPm1, AllPlusOne };

// Parses the GSet text format: a header line "N E" followed by E lines
// "i j w" with 1-based vertex indices.
Graph parse_gset(std::istream& in);
Graph parse_gset(const std::string& text);
Graph load_gset_file(const std::string& path);

// Emits the canonical GSet form: edges sorted by (i, j), 1-based indices,
// shortest round-trip number formatting.
std::string emit_gset(const Graph& g);

GraphStats graph_stats(const Graph& g);

// Each unordered pair is included independently with probability `density`;
// weights are drawn i.i.d. from `law`.
Graph gen_erdos_renyi(int n_vertices, double density, const WeightLaw& law,
                      std::uint64_t seed);

// rows x cols torus with 4-neighbor connectivity (duplicate wraparound edges
// merged) and unit-magnitude weights signed per `law`.
Graph gen_toroid(int rows, int cols, SignLaw law, std::uint64_t seed);

// Smallest n with 2^n >= N (at least 1).
int qubits_for(int n_vertices);

// Zero-padded dense symmetric weight matrix of dimension 2^qubits_for(N).
// Bounded to n <= 12; larger instances must stay in sparse form.
Eigen::MatrixXd pad_to_qubits(const Graph& g);

}  // namespace htaac
