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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

namespace fs = std::filesystem;
using json = nlohmann::json;

namespace {

std::string binary() {
  const char* env = std::getenv("HTAAC_BIN");
  REQUIRE_MESSAGE(env != nullptr, "HTAAC_BIN must point at the CLI binary");
  return env;
}

struct RunResult {
  int exit_code;
  std::string out;
  std::string err;
};

RunResult run(const std::string& args, const fs::path& dir) {
  const fs::path out_file = dir / "stdout.txt";
  const fs::path err_file = dir / "stderr.txt";
  const std::string cmd = "HTAAC_THREADS=1 \"" + binary() + "\" " + args +
                          " >" + out_file.string() + " 2>" + err_file.string();
  const int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WEXITSTATUS(status);
  std::ifstream of(out_file), ef(err_file);
  std::stringstream ob, eb;
  ob << of.rdbuf();
  eb << ef.rdbuf();
  r.out = ob.str();
  r.err = eb.str();
  return r;
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p);
  REQUIRE(f.good());
  std::stringstream b;
  b << f.rdbuf();
  return b.str();
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("htaac_cli_" + std::to_string(::getpid()) + "_" +
            std::to_string(counter()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  static int counter() {
    static int c = 0;
    return c++;
  }
};

}  // namespace

TEST_CASE("generate emits a canonical parseable graph, deterministically") {
  TempDir tmp;
  const std::string gfile = (tmp.path / "t.g").string();
  const auto r1 = run("generate --generate toroid:rows=3,cols=4,seed=5 --out " +
                          gfile, tmp.path);
  CHECK(r1.exit_code == 0);
  const std::string text1 = slurp(gfile);
  CHECK(text1.rfind("12 24\n", 0) == 0);

  const auto r2 = run("generate --generate toroid:rows=3,cols=4,seed=5 --out " +
                          gfile, tmp.path);
  CHECK(r2.exit_code == 0);
  CHECK(slurp(gfile) == text1);
}

TEST_CASE("solve produces summary, traces, and manifest with ratios") {
  TempDir tmp;
  const std::string gfile = (tmp.path / "k3.g").string();
  {
    std::ofstream f(gfile);
    f << "3 3\n1 2 1\n2 3 1\n1 3 1\n";
  }
  const std::string out = (tmp.path / "run").string();
  const auto r = run("solve --graph " + gfile +
                         " --epochs 250 --layers 6 --seeds 2 --csdp 2 --out " +
                         out, tmp.path);
  CHECK(r.exit_code == 0);

  const json summary = json::parse(slurp(fs::path(out) / "summary.json"));
  CHECK(summary["max_cut"].get<double>() == 2.0);  // brute-force optimum of K3
  CHECK(summary["max_ratio_csdp"].get<double>() == 1.0);
  CHECK(summary["seeds"].size() == 2);
  CHECK(summary["config"]["epochs"].get<int>() == 250);

  const json manifest = json::parse(slurp(fs::path(out) / "manifest.json"));
  CHECK(manifest["outputs"].size() == 3);  // 2 traces + summary
  CHECK(fs::exists(fs::path(out) / "trace_seed1.csv"));
  CHECK(fs::exists(fs::path(out) / "trace_seed2.csv"));

  const std::string trace = slurp(fs::path(out) / "trace_seed1.csv");
  CHECK(trace.rfind("epoch,obj_w,obj_p,penalty,loss,cq_est,cq_rounded,sigma_rho",
                    0) == 0);
}

TEST_CASE("identical invocations reproduce identical CSV bytes") {
  TempDir tmp;
  const std::string out1 = (tmp.path / "a").string();
  const std::string out2 = (tmp.path / "b").string();
  const std::string args =
      "solve --generate toroid:rows=3,cols=4,seed=8 --epochs 120 --layers 6 "
      "--seeds 2 --out ";
  CHECK(run(args + out1, tmp.path).exit_code == 0);
  CHECK(run(args + out2, tmp.path).exit_code == 0);
  CHECK(slurp(fs::path(out1) / "trace_seed1.csv") ==
        slurp(fs::path(out2) / "trace_seed1.csv"));
  CHECK(slurp(fs::path(out1) / "trace_seed2.csv") ==
        slurp(fs::path(out2) / "trace_seed2.csv"));
}

TEST_CASE("missing input file exits with code 2 and no partial outputs") {
  TempDir tmp;
  const std::string out = (tmp.path / "never").string();
  const auto r = run("solve --graph /definitely/not/here.g --out " + out,
                     tmp.path);
  CHECK(r.exit_code == 2);
  CHECK(!r.err.empty());
  CHECK(!fs::exists(out));
}

TEST_CASE("invalid config flags exit with code 2 before writing outputs") {
  TempDir tmp;
  const std::string out = (tmp.path / "never2").string();
  const auto r = run(
      "solve --generate toroid:rows=3,cols=3,seed=1 --beta 1.5 --epochs 5 "
      "--out " + out, tmp.path);
  CHECK(r.exit_code == 2);
  CHECK(r.err.find("beta") != std::string::npos);
  CHECK(!fs::exists(fs::path(out) / "summary.json"));
}

TEST_CASE("verify-alpha reports the sinc deficit for the 2-vertex graph") {
  TempDir tmp;
  const std::string gfile = (tmp.path / "edge.g").string();
  {
    std::ofstream f(gfile);
    f << "2 1\n1 2 1\n";
  }
  const std::string out = (tmp.path / "va").string();
  const auto r = run("verify-alpha --graph " + gfile +
                         " --alpha 0.1 --b 1 --out " + out, tmp.path);
  CHECK(r.exit_code == 0);
  const std::string csv = slurp(fs::path(out) / "bound.csv");
  CHECK(csv.find("0.1,0.00166583") != std::string::npos);

  const auto bad = run("verify-alpha --graph " + gfile +
                           " --alpha 0 --out " + out, tmp.path);
  CHECK(bad.exit_code == 2);
}

TEST_CASE("verify-alpha prints the worked bound for the xi=3 family") {
  TempDir tmp;
  const std::string out = (tmp.path / "va2").string();
  const auto r = run(
      "verify-alpha --generate er:n=256,d=0.0235294,law=uniform,b=1,seed=11 "
      "--alpha 0.5 --b 1 --out " + out, tmp.path);
  CHECK(r.exit_code == 0);
  // e fluctuates binomially around 768, so the bound lands near 5.33.
  CHECK(r.out.find("alpha <~ 5.1") != std::string::npos);
}

TEST_CASE("decompose reports terms and emits a verifiable circuit") {
  TempDir tmp;
  const std::string gfile = (tmp.path / "edge.g").string();
  {
    std::ofstream f(gfile);
    f << "2 1\n1 2 1\n";
  }
  const std::string out = (tmp.path / "dec").string();
  const auto r = run("decompose --graph " + gfile +
                         " --epsilon 0.015 --emit-circuit --alpha 0.25 --out " +
                         out, tmp.path);
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("full terms 1, kept 1") != std::string::npos);
  CHECK(r.out.find("achieved 0") != std::string::npos);
  CHECK(slurp(fs::path(out) / "gates.txt") ==
        "H q0\nCRZ anc q0 -0.5\nH q0\n");

  const json manifest = json::parse(slurp(fs::path(out) / "manifest.json"));
  CHECK(manifest["result"]["full_terms"].get<int>() == 1);
}

TEST_CASE("oracle and report close the loop") {
  TempDir tmp;
  const std::string out = (tmp.path / "orc").string();
  const auto r = run(
      "oracle --generate toroid:rows=3,cols=3,signs=plus,seed=1 "
      "--method brute --out " + out, tmp.path);
  CHECK(r.exit_code == 0);
  const json sol = json::parse(slurp(fs::path(out) / "solution.json"));
  CHECK(sol["cut"].get<double>() == 12.0);

  const std::string solve_out = (tmp.path / "run").string();
  CHECK(run("solve --generate toroid:rows=3,cols=3,signs=plus,seed=1 "
            "--epochs 200 --layers 6 --out " + solve_out, tmp.path)
            .exit_code == 0);
  const auto rep = run("report " + solve_out + "/summary.json", tmp.path);
  CHECK(rep.exit_code == 0);
  CHECK(rep.out.find("max_cut") != std::string::npos);
  CHECK(rep.out.find("toroid:rows=3,cols=3") != std::string::npos);
}
