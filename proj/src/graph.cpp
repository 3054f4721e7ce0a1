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

#include "htaac/graph.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <set>
#include <sstream>

#include "htaac/rng.hpp"

namespace htaac {

namespace {

std::string format_number(double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

}  // namespace

Graph::Graph(int n_vertices, std::vector<Edge> edges)
    : n_vertices_(n_vertices), edges_(std::move(edges)) {
  if (n_vertices_ < 1) {
    throw ValidationError("graph must have at least one vertex");
  }
  for (auto& e : edges_) {
    if (e.i == e.j) {
      throw ValidationError("self-loop on vertex " + std::to_string(e.i));
    }
    if (e.i < 0 || e.j < 0 || e.i >= n_vertices_ || e.j >= n_vertices_) {
      throw ValidationError("edge (" + std::to_string(e.i) + "," +
                            std::to_string(e.j) + ") out of range for N=" +
                            std::to_string(n_vertices_));
    }
    if (e.i > e.j) std::swap(e.i, e.j);
    if (!std::isfinite(e.w)) {
      throw ValidationError("non-finite edge weight");
    }
  }
  std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
    return a.i != b.i ? a.i < b.i : a.j < b.j;
  });
  for (std::size_t k = 1; k < edges_.size(); ++k) {
    if (edges_[k].i == edges_[k - 1].i && edges_[k].j == edges_[k - 1].j) {
      throw ValidationError("duplicate edge (" + std::to_string(edges_[k].i) +
                            "," + std::to_string(edges_[k].j) + ")");
    }
  }
}

std::vector<int> Graph::degrees() const {
  std::vector<int> deg(n_vertices_, 0);
  for (const auto& e : edges_) {
    if (e.w != 0.0) {
      ++deg[e.i];
      ++deg[e.j];
    }
  }
  return deg;
}

std::vector<double> Graph::abs_strengths() const {
  std::vector<double> s(n_vertices_, 0.0);
  for (const auto& e : edges_) {
    s[e.i] += std::abs(e.w);
    s[e.j] += std::abs(e.w);
  }
  return s;
}

WeightLaw WeightLaw::uniform(double b) {
  if (!(b > 0)) throw ValidationError("uniform law requires b > 0");
  WeightLaw law;
  law.kind = Kind::UniformPositive;
  law.b = b;
  return law;
}

WeightLaw WeightLaw::uniform_signed(double b) {
  if (!(b > 0)) throw ValidationError("uniform law requires b > 0");
  WeightLaw law;
  law.kind = Kind::UniformSigned;
  law.b = b;
  return law;
}

WeightLaw WeightLaw::normal(double mu, double sigma) {
  if (!(sigma > 0)) throw ValidationError("normal law requires sigma > 0");
  WeightLaw law;
  law.kind = Kind::Normal;
  law.mu = mu;
  law.sigma = sigma;
  return law;
}

namespace {

struct LineTokens {
  std::vector<std::string> tokens;
  int line_no = 0;
};

// Returns the next non-blank line split on whitespace, or empty tokens at EOF.
LineTokens next_tokens(std::istream& in, int& line_no) {
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::vector<std::string> toks;
    std::string t;
    while (ls >> t) toks.push_back(t);
    if (!toks.empty()) return {std::move(toks), line_no};
  }
  return {{}, line_no};
}

long long parse_int_token(const std::string& t, int line_no) {
  long long v = 0;
  auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc() || ptr != t.data() + t.size()) {
    throw ParseError("line " + std::to_string(line_no) +
                     ": expected integer, got '" + t + "'");
  }
  return v;
}

double parse_real_token(const std::string& t, int line_no) {
  double v = 0;
  auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc() || ptr != t.data() + t.size()) {
    throw ParseError("line " + std::to_string(line_no) +
                     ": expected number, got '" + t + "'");
  }
  return v;
}

}  // namespace

Graph parse_gset(std::istream& in) {
  int line_no = 0;
  auto header = next_tokens(in, line_no);
  if (header.tokens.empty()) throw ParseError("empty input");
  if (header.tokens.size() != 2) {
    throw ParseError("line " + std::to_string(header.line_no) +
                     ": header must be 'N E'");
  }
  const long long n = parse_int_token(header.tokens[0], header.line_no);
  const long long m = parse_int_token(header.tokens[1], header.line_no);
  if (n < 1 || m < 0) {
    throw ParseError("line " + std::to_string(header.line_no) +
                     ": invalid header values");
  }

  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long k = 0; k < m; ++k) {
    auto row = next_tokens(in, line_no);
    if (row.tokens.empty()) {
      throw ParseError("unexpected end of input: expected " +
                       std::to_string(m) + " edges, got " + std::to_string(k));
    }
    if (row.tokens.size() != 3) {
      throw ParseError("line " + std::to_string(row.line_no) +
                       ": edge line must be 'i j w'");
    }
    const long long i = parse_int_token(row.tokens[0], row.line_no);
    const long long j = parse_int_token(row.tokens[1], row.line_no);
    const double w = parse_real_token(row.tokens[2], row.line_no);
    if (i < 1 || i > n || j < 1 || j > n) {
      throw ValidationError("line " + std::to_string(row.line_no) +
                            ": vertex index out of range [1," +
                            std::to_string(n) + "]");
    }
    if (i == j) {
      throw ValidationError("line " + std::to_string(row.line_no) +
                            ": self-loop");
    }
    edges.push_back({static_cast<int>(i - 1), static_cast<int>(j - 1), w});
  }
  return Graph(static_cast<int>(n), std::move(edges));
}

Graph parse_gset(const std::string& text) {
  std::istringstream in(text);
  return parse_gset(in);
}

Graph load_gset_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open graph file: " + path);
  return parse_gset(in);
}

std::string emit_gset(const Graph& g) {
  std::string out = std::to_string(g.n_vertices()) + " " +
                    std::to_string(g.edges().size()) + "\n";
  for (const auto& e : g.edges()) {
    out += std::to_string(e.i + 1) + " " + std::to_string(e.j + 1) + " " +
           format_number(e.w) + "\n";
  }
  return out;
}

GraphStats graph_stats(const Graph& g) {
  const int n = g.n_vertices();
  GraphStats s;
  for (const auto& e : g.edges()) {
    if (e.w != 0.0) ++s.e;
    s.w_sum += e.w;
  }
  const double total_pairs = static_cast<double>(n) * (n - 1) / 2.0;
  s.d = total_pairs > 0 ? static_cast<double>(s.e) / total_pairs : 0.0;
  s.xi = static_cast<double>(s.e) / n;

  auto deg = g.degrees();
  std::sort(deg.begin(), deg.end(), std::greater<int>());
  const int top = (n + 9) / 10;
  double acc = 0;
  for (int i = 0; i < top; ++i) acc += deg[i];
  s.xi_max = acc / top;

  for (double v : g.abs_strengths()) s.p_max = std::max(s.p_max, v);
  return s;
}

Graph gen_erdos_renyi(int n_vertices, double density, const WeightLaw& law,
                      std::uint64_t seed) {
  if (n_vertices < 2) throw ValidationError("erdos-renyi requires N >= 2");
  if (!(density > 0.0) || density > 1.0) {
    throw ValidationError("erdos-renyi requires 0 < density <= 1");
  }
  Rng rng(derive_seed(seed, 0x6572646f73ULL));
  std::vector<Edge> edges;
  for (int i = 0; i < n_vertices; ++i) {
    for (int j = i + 1; j < n_vertices; ++j) {
      if (density < 1.0 && rng.uniform01() >= density) continue;
      double w = 0;
      switch (law.kind) {
        case WeightLaw::Kind::UniformPositive:
          w = rng.uniform(0.0, law.b);
          break;
        case WeightLaw::Kind::UniformSigned:
          w = rng.uniform(-law.b, law.b);
          break;
        case WeightLaw::Kind::Normal:
          w = rng.normal(law.mu, law.sigma);
          break;
      }
      edges.push_back({i, j, w});
    }
  }
  return Graph(n_vertices, std::move(edges));
}

Graph gen_toroid(int rows, int cols, SignLaw law, std::uint64_t seed) {
  if (rows < 2 || cols < 2) throw ValidationError("toroid requires rows, cols >= 2");
  Rng rng(derive_seed(seed, 0x746f726f6964ULL));
  const auto id = [cols](int r, int c) { return r * cols + c; };
  std::set<std::pair<int, int>> seen;
  std::vector<Edge> edges;
  auto add = [&](int a, int b) {
    if (a > b) std::swap(a, b);
    if (a == b || !seen.insert({a, b}).second) return;
    const double w = law == SignLaw::AllPlusOne
                         ? 1.0
                         : static_cast<double>(rng.rademacher());
    edges.push_back({a, b, w});
  };
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      add(id(r, c), id((r + 1) % rows, c));
      add(id(r, c), id(r, (c + 1) % cols));
    }
  }
  return Graph(rows * cols, std::move(edges));
}

int qubits_for(int n_vertices) {
  int n = 1;
  while ((1LL << n) < n_vertices) ++n;
  return n;
}

Eigen::MatrixXd pad_to_qubits(const Graph& g) {
  const int n = qubits_for(g.n_vertices());
  if (n > 12) {
    throw ValidationError(
        "dense padding limited to 12 qubits (4096x4096); use the sparse path");
  }
  const int dim = 1 << n;
  Eigen::MatrixXd w = Eigen::MatrixXd::Zero(dim, dim);
  for (const auto& e : g.edges()) {
    w(e.i, e.j) = e.w;
    w(e.j, e.i) = e.w;
  }
  return w;
}

}  // namespace htaac
