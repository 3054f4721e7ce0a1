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

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"

#include "htaac/alphabound.hpp"
#include "htaac/graph.hpp"
#include "htaac/oracle.hpp"
#include "htaac/paulidecomp.hpp"
#include "htaac/solver.hpp"

namespace fs = std::filesystem;
using json = nlohmann::json;
using namespace htaac;

namespace {

constexpr const char* kArtifactVersion = "htaac 0.1.0";
constexpr int kExitUsage = 2;

std::uint64_t fnv1a64(const std::string& data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

struct GraphInput {
  Graph graph;
  std::string source;     // file path or generate spec
  std::string canonical;  // GSet text used for hashing
  bool generated = false;
};

std::map<std::string, std::string> parse_kv(const std::string& s) {
  std::map<std::string, std::string> kv;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos) {
      throw ValidationError("expected key=value in generator spec, got '" +
                            item + "'");
    }
    kv[item.substr(0, eq)] = item.substr(eq + 1);
  }
  return kv;
}

double kv_num(const std::map<std::string, std::string>& kv,
              const std::string& key, std::optional<double> fallback = {}) {
  auto it = kv.find(key);
  if (it == kv.end()) {
    if (fallback) return *fallback;
    throw ValidationError("generator spec is missing '" + key + "'");
  }
  return std::stod(it->second);
}

// Generator specs:
//   toroid:rows=8,cols=100,signs=pm1,seed=7
//   er:n=256,d=0.023,law=uniform|signed|normal,b=1,mu=0,sigma=1,seed=3
Graph generate_from_spec(const std::string& spec) {
  const auto colon = spec.find(':');
  const std::string family = spec.substr(0, colon);
  const auto kv =
      parse_kv(colon == std::string::npos ? "" : spec.substr(colon + 1));
  const auto seed = static_cast<std::uint64_t>(kv_num(kv, "seed", 1.0));
  if (family == "toroid") {
    const int rows = static_cast<int>(kv_num(kv, "rows"));
    const int cols = static_cast<int>(kv_num(kv, "cols"));
    const auto sig = kv.count("signs") ? kv.at("signs") : "pm1";
    const SignLaw law = sig == "pm1" ? SignLaw::RandomPm1 : SignLaw::AllPlusOne;
    return gen_toroid(rows, cols, law, seed);
  }
  if (family == "er") {
    const int n = static_cast<int>(kv_num(kv, "n"));
    const double d = kv_num(kv, "d");
    const std::string law = kv.count("law") ? kv.at("law") : "uniform";
    WeightLaw wl = WeightLaw::uniform(kv_num(kv, "b", 1.0));
    if (law == "signed") wl = WeightLaw::uniform_signed(kv_num(kv, "b", 1.0));
    if (law == "normal") {
      wl = WeightLaw::normal(kv_num(kv, "mu", 0.0), kv_num(kv, "sigma", 1.0));
    }
    return gen_erdos_renyi(n, d, wl, seed);
  }
  throw ValidationError("unknown generator family '" + family +
                        "' (expected toroid or er)");
}

GraphInput resolve_input(const std::string& graph_path,
                         const std::string& generate_spec) {
  if (!graph_path.empty() && !generate_spec.empty()) {
    throw ValidationError("pass either --graph or --generate, not both");
  }
  if (graph_path.empty() && generate_spec.empty()) {
    throw ValidationError("an input graph is required (--graph or --generate)");
  }
  GraphInput in{Graph(1, {}), "", "", false};
  if (!graph_path.empty()) {
    std::ifstream f(graph_path);
    if (!f) throw ParseError("cannot open graph file: " + graph_path);
    std::stringstream buf;
    buf << f.rdbuf();
    in.canonical = buf.str();
    in.graph = parse_gset(in.canonical);
    in.source = graph_path;
  } else {
    in.graph = generate_from_spec(generate_spec);
    in.canonical = emit_gset(in.graph);
    in.source = generate_spec;
    in.generated = true;
  }
  return in;
}

json input_json(const GraphInput& in) {
  return json{{"source", in.source},
              {"generated", in.generated},
              {"n_vertices", in.graph.n_vertices()},
              {"edges", in.graph.edges().size()},
              {"fnv1a64", hex64(fnv1a64(in.canonical))}};
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path.string());
  f << content;
}

json config_json(const SolverConfig& cfg) {
  return json{{"alpha", cfg.alpha},
              {"beta", cfg.beta},
              {"lambda_coeff", cfg.lambda_coeff},
              {"k", cfg.k},
              {"layers", cfg.layers},
              {"eta", cfg.eta},
              {"adam_beta1", cfg.adam_beta1},
              {"adam_beta2", cfg.adam_beta2},
              {"epochs", cfg.epochs},
              {"shots", cfg.shots},
              {"init_angle_stddev", cfg.init_angle_stddev},
              {"include_objective", cfg.include_objective}};
}

int worker_count(std::size_t jobs) {
  unsigned cap = std::thread::hardware_concurrency();
  if (const char* env = std::getenv("HTAAC_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v >= 1) cap = static_cast<unsigned>(v);
  }
  if (cap < 1) cap = 1;
  return static_cast<int>(std::min<std::size_t>(cap, jobs));
}

// Bounded worker pool; job indices are handed out in order and results land
// in per-job slots, so aggregation is deterministic.
template <typename Fn>
void run_pool(std::size_t jobs, Fn&& fn) {
  const int workers = worker_count(jobs);
  std::vector<std::thread> pool;
  std::size_t next = 0;
  std::mutex mu;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        std::size_t job;
        {
          std::lock_guard<std::mutex> lock(mu);
          if (next >= jobs) return;
          job = next++;
        }
        fn(job);
      }
    });
  }
  for (auto& t : pool) t.join();
}

struct FamilyDefaults {
  double beta;
  double lambda_coeff;
};

FamilyDefaults family_defaults(const std::string& family) {
  if (family == "skew-binary") return {1.0 / 3.0, 100.0};
  if (family == "skew-integer") return {1.0 / 3.0, 50.0};
  return {1.0 / 1.2, 100.0};  // toroid and unflagged inputs
}

int cmd_solve(const std::string& graph_path, const std::string& generate_spec,
              const std::string& family, const std::string& config_path,
              CLI::App* sub, const SolverConfig& flag_cfg, int n_seeds,
              std::uint64_t seed_base, std::optional<double> cmax,
              std::optional<double> csdp, const std::string& out_dir) {
  const auto t0 = std::chrono::steady_clock::now();
  const GraphInput in = resolve_input(graph_path, generate_spec);
  if (n_seeds < 1) throw ValidationError("--seeds must be >= 1");

  // Precedence: explicit flags > config file > family defaults.
  SolverConfig cfg;
  const FamilyDefaults fam = family_defaults(family);
  cfg.beta = fam.beta;
  cfg.lambda_coeff = fam.lambda_coeff;
  if (!config_path.empty()) {
    std::ifstream f(config_path);
    if (!f) throw ParseError("cannot open config file: " + config_path);
    json j = json::parse(f, nullptr, true, true);
    if (j.contains("alpha")) cfg.alpha = j["alpha"];
    if (j.contains("beta")) cfg.beta = j["beta"];
    if (j.contains("lambda_coeff")) cfg.lambda_coeff = j["lambda_coeff"];
    if (j.contains("k")) cfg.k = j["k"];
    if (j.contains("layers")) cfg.layers = j["layers"];
    if (j.contains("eta")) cfg.eta = j["eta"];
    if (j.contains("epochs")) cfg.epochs = j["epochs"];
    if (j.contains("shots")) cfg.shots = j["shots"];
    if (j.contains("init_angle_stddev")) {
      cfg.init_angle_stddev = j["init_angle_stddev"];
    }
  }
  auto overlay = [&](const char* flag, auto member) {
    if (sub->count(flag)) cfg.*member = flag_cfg.*member;
  };
  overlay("--alpha", &SolverConfig::alpha);
  overlay("--beta", &SolverConfig::beta);
  overlay("--lambda-coeff", &SolverConfig::lambda_coeff);
  overlay("--k", &SolverConfig::k);
  overlay("--layers", &SolverConfig::layers);
  overlay("--eta", &SolverConfig::eta);
  overlay("--epochs", &SolverConfig::epochs);
  overlay("--shots", &SolverConfig::shots);
  validate_solver_config(cfg);  // before any output exists

  fs::create_directories(out_dir);

  std::vector<TrainTrace> traces(n_seeds);
  std::vector<std::string> errors(n_seeds);
  run_pool(n_seeds, [&](std::size_t s) {
    SolverConfig run_cfg = cfg;
    run_cfg.seed = seed_base + s;
    try {
      traces[s] = train(in.graph, run_cfg);
    } catch (const std::exception& e) {
      errors[s] = e.what();
    }
  });
  for (const auto& err : errors) {
    if (!err.empty()) throw std::runtime_error(err);
  }

  json summary;
  summary["command"] = "solve";
  summary["input"] = input_json(in);
  summary["family"] = family.empty() ? "unspecified" : family;
  summary["config"] = config_json(cfg);
  summary["n_qubits"] = traces.front().n_qubits;
  summary["n_constraints"] = traces.front().n_constraints;
  summary["lambda"] = traces.front().lambda;

  std::vector<std::string> outputs;
  double max_cut = -1e300, mean_cut = 0;
  json per_seed = json::array();
  for (int s = 0; s < n_seeds; ++s) {
    const auto& tr = traces[s];
    const std::string trace_name =
        "trace_seed" + std::to_string(seed_base + s) + ".csv";
    write_file(fs::path(out_dir) / trace_name, trace_csv(tr));
    outputs.push_back(trace_name);
    per_seed.push_back({{"seed", seed_base + s},
                        {"best_cut", tr.best.cut},
                        {"best_epoch", tr.best_epoch},
                        {"wall_seconds", tr.wall_seconds}});
    max_cut = std::max(max_cut, tr.best.cut);
    mean_cut += tr.best.cut / n_seeds;
  }
  summary["per_seed"] = per_seed;
  summary["seeds"] = json::array();
  for (int s = 0; s < n_seeds; ++s) summary["seeds"].push_back(seed_base + s);
  summary["max_cut"] = max_cut;
  summary["mean_cut"] = mean_cut;
  if (cmax) {
    summary["cmax_ref"] = *cmax;
    summary["max_ratio_cmax"] = max_cut / *cmax;
    summary["mean_ratio_cmax"] = mean_cut / *cmax;
  }
  if (csdp) {
    summary["csdp_ref"] = *csdp;
    summary["max_ratio_csdp"] = max_cut / *csdp;
    summary["mean_ratio_csdp"] = mean_cut / *csdp;
  }
  const double wall =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  summary["wall_seconds"] = wall;
  write_file(fs::path(out_dir) / "summary.json", summary.dump(2) + "\n");
  outputs.push_back("summary.json");

  json manifest;
  manifest["command"] = "solve";
  manifest["artifact_version"] = kArtifactVersion;
  manifest["input"] = input_json(in);
  manifest["config"] = summary["config"];
  manifest["seeds"] = summary["seeds"];
  manifest["outputs"] = outputs;
  manifest["wall_seconds"] = wall;
  write_file(fs::path(out_dir) / "manifest.json", manifest.dump(2) + "\n");

  std::cout << "solve: N=" << in.graph.n_vertices() << " seeds=" << n_seeds
            << " max_cut=" << max_cut << " mean_cut=" << mean_cut;
  if (csdp) std::cout << " max/csdp=" << max_cut / *csdp;
  std::cout << "\n";
  return 0;
}

int cmd_generate(const std::string& spec, const std::string& out_file) {
  const Graph g = generate_from_spec(spec);
  const std::string text = emit_gset(g);
  if (out_file.empty() || out_file == "-") {
    std::cout << text;
  } else {
    write_file(out_file, text);
    std::cout << "generate: wrote N=" << g.n_vertices()
              << " E=" << g.edges().size() << " to " << out_file << "\n";
  }
  return 0;
}

int cmd_verify_alpha(const std::string& graph_path,
                     const std::string& generate_spec,
                     std::vector<double> alphas, double scale,
                     const std::string& family_name, bool use_xi_max,
                     const std::string& out_dir) {
  const auto t0 = std::chrono::steady_clock::now();
  const GraphInput in = resolve_input(graph_path, generate_spec);
  if (alphas.empty()) throw ValidationError("provide at least one --alpha");
  for (double a : alphas) {
    if (!(a > 0)) throw ValidationError("alphas must be positive");
  }
  std::sort(alphas.begin(), alphas.end());

  WeightFamily family = WeightFamily::UniformPositive;
  if (family_name == "signed") family = WeightFamily::UniformSigned;
  if (family_name == "normal-mean") family = WeightFamily::NormalLargeMean;
  if (family_name == "normal-sigma") family = WeightFamily::NormalLargeSigma;

  const GraphStats stats = graph_stats(in.graph);
  const BoundResult bound = alpha_upper_bound(stats, scale, family, use_xi_max);

  const Matrix w = pad_to_qubits(in.graph);
  const auto errors = encoding_error_sweep(w, alphas);

  fs::create_directories(out_dir);
  write_file(fs::path(out_dir) / "bound.csv", encoding_error_csv(errors));

  std::cout << "alpha bound (" << to_string(bound.family) << "): alpha^2 <~ "
            << bound.alpha_sq_bound << ", alpha <~ " << bound.alpha_bound()
            << (bound.conservative_floor ? " (conservative floor)" : "")
            << "\n";
  for (const auto& e : errors) {
    const bool ok = e.alpha <= bound.alpha_bound() / 10.0;
    std::cout << "  alpha=" << e.alpha << " rel_err_mean=" << e.rel_err_mean
              << " rel_err_max=" << e.rel_err_max
              << (ok ? "  [within factor-10 margin]" : "  [exceeds margin]")
              << "\n";
  }

  json manifest;
  manifest["command"] = "verify-alpha";
  manifest["artifact_version"] = kArtifactVersion;
  manifest["input"] = input_json(in);
  manifest["config"] = {{"alphas", alphas},
                        {"scale", scale},
                        {"family", to_string(bound.family)},
                        {"use_xi_max", use_xi_max}};
  manifest["bound"] = {{"alpha_sq", bound.alpha_sq_bound},
                       {"alpha", bound.alpha_bound()},
                       {"conservative_floor", bound.conservative_floor}};
  manifest["outputs"] = {"bound.csv"};
  manifest["wall_seconds"] =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  write_file(fs::path(out_dir) / "manifest.json", manifest.dump(2) + "\n");
  return 0;
}

int cmd_decompose(const std::string& graph_path,
                  const std::string& generate_spec, double epsilon,
                  bool emit_circuit, double phase, const std::string& out_dir) {
  const auto t0 = std::chrono::steady_clock::now();
  const GraphInput in = resolve_input(graph_path, generate_spec);
  if (qubits_for(in.graph.n_vertices()) > 12) {
    throw ValidationError("decomposition limited to 12 qubits");
  }
  const Matrix w = pad_to_qubits(in.graph);
  const auto terms = pauli_decompose(w);
  const auto truncated = truncate_decomposition(terms, epsilon);

  fs::create_directories(out_dir);
  std::vector<std::string> outputs;
  if (emit_circuit) {
    const GateSequence seq = trotterize(truncated.kept, phase);
    write_file(fs::path(out_dir) / "gates.txt", format_gate_sequence(seq));
    outputs.push_back("gates.txt");
  }

  std::cout << "decompose: full terms " << terms.size() << ", kept "
            << truncated.kept.size() << " at error budget " << epsilon
            << " (achieved " << truncated.achieved_error << ")\n";

  json manifest;
  manifest["command"] = "decompose";
  manifest["artifact_version"] = kArtifactVersion;
  manifest["input"] = input_json(in);
  manifest["config"] = {{"epsilon", epsilon},
                        {"emit_circuit", emit_circuit},
                        {"phase", phase}};
  manifest["result"] = {{"full_terms", terms.size()},
                        {"kept_terms", truncated.kept.size()},
                        {"achieved_error", truncated.achieved_error}};
  manifest["outputs"] = outputs;
  manifest["wall_seconds"] =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  write_file(fs::path(out_dir) / "manifest.json", manifest.dump(2) + "\n");
  return 0;
}

int cmd_oracle(const std::string& graph_path, const std::string& generate_spec,
               const std::string& method, int rank, int iterations,
               int samples, std::uint64_t seed, const std::string& out_dir) {
  const auto t0 = std::chrono::steady_clock::now();
  const GraphInput in = resolve_input(graph_path, generate_spec);

  CutSolution sol;
  if (method == "brute") {
    sol = oracle::brute_force_maxcut(in.graph);
  } else if (method == "gw") {
    oracle::GWBaselineConfig cfg;
    cfg.rank = rank;
    cfg.iterations = iterations;
    cfg.rounding_samples = samples;
    cfg.seed = seed;
    sol = oracle::classical_gw(in.graph, cfg);
  } else {
    throw ValidationError("--method must be brute or gw");
  }

  fs::create_directories(out_dir);
  json out;
  out["method"] = method;
  out["cut"] = sol.cut;
  out["signs"] = sol.signs;
  write_file(fs::path(out_dir) / "solution.json", out.dump(2) + "\n");

  json manifest;
  manifest["command"] = "oracle";
  manifest["artifact_version"] = kArtifactVersion;
  manifest["input"] = input_json(in);
  manifest["config"] = {{"method", method},
                        {"rank", rank},
                        {"iterations", iterations},
                        {"rounding_samples", samples},
                        {"seed", seed}};
  manifest["outputs"] = {"solution.json"};
  manifest["wall_seconds"] =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  write_file(fs::path(out_dir) / "manifest.json", manifest.dump(2) + "\n");

  std::cout << "oracle " << method << ": cut " << sol.cut << "\n";
  return 0;
}

int cmd_report(const std::vector<std::string>& files) {
  if (files.empty()) throw ValidationError("report needs summary.json paths");
  std::cout << "graph\tseeds\tmax_cut\tmean_cut\tmax/csdp\n";
  for (const auto& path : files) {
    std::ifstream f(path);
    if (!f) throw ParseError("cannot open summary: " + path);
    json j = json::parse(f);
    std::cout << j["input"]["source"].get<std::string>() << "\t"
              << j["seeds"].size() << "\t" << j["max_cut"].get<double>() << "\t"
              << j["mean_cut"].get<double>() << "\t";
    if (j.contains("max_ratio_csdp")) {
      std::cout << j["max_ratio_csdp"].get<double>();
    } else {
      std::cout << "-";
    }
    std::cout << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"HTAAC-QSDP: variational quantum Goemans-Williamson solver"};
  app.require_subcommand(1);

  auto* solve = app.add_subcommand("solve", "train on a MaxCut instance");
  std::string graph_path, generate_spec, family, config_path, out_dir = "out";
  SolverConfig flag_cfg;
  int n_seeds = 1;
  std::uint64_t seed_base = 1;
  double cmax_v = 0, csdp_v = 0;
  solve->add_option("--graph", graph_path, "GSet-format graph file");
  solve->add_option("--generate", generate_spec,
                    "generator spec, e.g. toroid:rows=8,cols=100,seed=2");
  solve->add_option("--family", family,
                    "hyperparameter family: toroid, skew-binary, skew-integer")
      ->check(CLI::IsMember({"toroid", "skew-binary", "skew-integer"}));
  solve->add_option("--config", config_path, "JSON config file");
  solve->add_option("--alpha", flag_cfg.alpha, "objective encoding phase");
  solve->add_option("--beta", flag_cfg.beta, "population-balance weight");
  solve->add_option("--lambda-coeff", flag_cfg.lambda_coeff,
                    "c in lambda = c alpha / m");
  solve->add_option("--k", flag_cfg.k, "Pauli constraint order");
  solve->add_option("--layers", flag_cfg.layers, "ansatz layers");
  solve->add_option("--eta", flag_cfg.eta, "ADAM learning rate");
  solve->add_option("--epochs", flag_cfg.epochs, "training epochs");
  solve->add_option("--shots", flag_cfg.shots,
                    "shot samples for recorded expectations (0 = exact)");
  solve->add_option("--seeds", n_seeds, "number of seeds");
  solve->add_option("--seed-base", seed_base, "first seed value");
  auto* cmax_opt = solve->add_option("--cmax", cmax_v, "reference C_MAX");
  auto* csdp_opt = solve->add_option("--csdp", csdp_v, "reference max(C_SDP)");
  solve->add_option("--out", out_dir, "output directory");

  auto* generate = app.add_subcommand("generate", "emit a GSet-format graph");
  std::string gen_spec, gen_out;
  generate->add_option("--generate", gen_spec, "generator spec")->required();
  generate->add_option("--out", gen_out, "output file ('-' for stdout)");

  auto* verify = app.add_subcommand(
      "verify-alpha", "encoding-phase bound and measured encoding error");
  std::string va_graph, va_generate, va_family = "uniform", va_out = "out";
  std::vector<double> va_alphas;
  double va_scale = 1.0;
  bool va_xi_max = false;
  verify->add_option("--graph", va_graph, "GSet-format graph file");
  verify->add_option("--generate", va_generate, "generator spec");
  verify->add_option("--alpha", va_alphas, "phases to test")->required();
  verify->add_option("--b", va_scale, "weight scale (b, mu, or sigma)");
  verify
      ->add_option("--weight-family", va_family,
                   "uniform, signed, normal-mean, normal-sigma")
      ->check(
          CLI::IsMember({"uniform", "signed", "normal-mean", "normal-sigma"}));
  verify->add_flag("--xi-max", va_xi_max,
                   "use top-decile connectivity for the bound");
  verify->add_option("--out", va_out, "output directory");

  auto* decompose = app.add_subcommand(
      "decompose", "Pauli-term decomposition and truncation report");
  std::string de_graph, de_generate, de_out = "out";
  double de_eps = 0.015, de_phase = 0.01;
  bool de_emit = false;
  decompose->add_option("--graph", de_graph, "GSet-format graph file");
  decompose->add_option("--generate", de_generate, "generator spec");
  decompose->add_option("--epsilon", de_eps, "truncation error budget");
  decompose->add_flag("--emit-circuit", de_emit,
                      "write the Trotterized controlled circuit");
  decompose->add_option("--alpha", de_phase, "circuit phase");
  decompose->add_option("--out", de_out, "output directory");

  auto* orac = app.add_subcommand("oracle", "classical baselines");
  std::string or_graph, or_generate, or_method = "brute", or_out = "out";
  int or_rank = 0, or_iters = 500, or_samples = 100;
  std::uint64_t or_seed = 1;
  orac->add_option("--graph", or_graph, "GSet-format graph file");
  orac->add_option("--generate", or_generate, "generator spec");
  orac->add_option("--method", or_method, "brute or gw");
  orac->add_option("--rank", or_rank, "factorization rank (0 = auto)");
  orac->add_option("--iterations", or_iters, "descent iterations");
  orac->add_option("--samples", or_samples, "rounding hyperplanes");
  orac->add_option("--seed", or_seed, "RNG seed");
  orac->add_option("--out", or_out, "output directory");

  auto* report = app.add_subcommand("report", "tabulate solve summaries");
  std::vector<std::string> report_files;
  report->add_option("files", report_files, "summary.json paths");

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve->parsed()) {
      std::optional<double> cmax, csdp;
      if (cmax_opt->count()) cmax = cmax_v;
      if (csdp_opt->count()) csdp = csdp_v;
      return cmd_solve(graph_path, generate_spec, family, config_path, solve,
                       flag_cfg, n_seeds, seed_base, cmax, csdp, out_dir);
    }
    if (generate->parsed()) return cmd_generate(gen_spec, gen_out);
    if (verify->parsed()) {
      return cmd_verify_alpha(va_graph, va_generate, va_alphas, va_scale,
                              va_family, va_xi_max, va_out);
    }
    if (decompose->parsed()) {
      return cmd_decompose(de_graph, de_generate, de_eps, de_emit, de_phase,
                           de_out);
    }
    if (orac->parsed()) {
      return cmd_oracle(or_graph, or_generate, or_method, or_rank, or_iters,
                        or_samples, or_seed, or_out);
    }
    if (report->parsed()) return cmd_report(report_files);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
