// Copyright 2026 The Qudit Compiler Authors
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

#include "qudit/adaptive_search.hpp"
#include "qudit/bench.hpp"
#include "qudit/errors.hpp"
#include "qudit/io.hpp"
#include "qudit/qr_baseline.hpp"

#include "CLI11.hpp"
#include <spdlog/spdlog.h>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

constexpr int kOk = 0;
constexpr int kNoSolution = 1;
constexpr int kInvalidInput = 2;

struct Overrides {
  std::optional<std::string> config;
  std::optional<double> costLimitFactor;
  std::optional<double> threshold;
  std::optional<std::size_t> maxNodes;
  std::optional<bool> returnFirst;
  bool sortChildren = false;
  std::optional<double> baseFactor;
  std::optional<double> calibratedAngle;
  std::optional<double> angleFloor;
  std::optional<std::string> costModel;

  void attach(CLI::App& app) {
    app.add_option("--config", config, "JSON config with cost/search keys")
        ->check(CLI::ExistingFile);
    app.add_option("--cost-limit-factor", costLimitFactor);
    app.add_option("--threshold", threshold);
    app.add_option("--max-nodes", maxNodes);
    app.add_option("--return-first", returnFirst, "true or false");
    app.add_flag("--sort-children", sortChildren);
    app.add_option("--base-factor", baseFactor);
    app.add_option("--calibrated-angle", calibratedAngle);
    app.add_option("--angle-floor", angleFloor);
    app.add_option("--cost-model", costModel);
  }

  [[nodiscard]] qudit::io::Config resolve(qudit::io::Config c) const {
    if (config) {
      c = qudit::io::configFromJson(qudit::io::readJsonFile(*config));
    }
    if (costLimitFactor) c.search.costLimitFactor = *costLimitFactor;
    if (threshold) c.search.threshold = *threshold;
    if (maxNodes) c.search.maxNodes = *maxNodes;
    if (returnFirst) c.search.returnFirst = *returnFirst;
    if (sortChildren) c.search.sortChildren = true;
    if (baseFactor) c.cost.baseFactor = *baseFactor;
    if (calibratedAngle) c.cost.calibratedAngle = *calibratedAngle;
    if (angleFloor) c.cost.angleFloor = *angleFloor;
    if (costModel) c.cost.model = *costModel;
    c.cost.validate();
    c.search.validate();
    return c;
  }
};

void emit(const qudit::io::json& j, const std::string& out) {
  if (out.empty() || out == "-") {
    std::cout << j.dump(2) << '\n';
  } else {
    qudit::io::writeJsonFile(out, j);
  }
}

int runCompile(const std::string& unitaryPath, const std::string& graphPath,
               const std::string& mode, const std::string& out,
               const Overrides& o) {
  namespace io = qudit::io;
  const auto cfg = o.resolve({});
  const auto u = io::unitaryFromJson(io::readJsonFile(unitaryPath));
  const auto g = io::graphFromJson(io::readJsonFile(graphPath));
  if (mode == "qr") {
    const auto d = qudit::qrDecompose(u, g, cfg.cost);
    auto j = io::toJson(d);
    j["mode"] = "qr";
    emit(j, out);
    return kOk;
  }
  const auto res = qudit::adaptiveCompile(u, g, cfg.search, cfg.cost);
  if (!res.ok()) {
    spdlog::error("{}", res.message);
    emit({{"mode", "adaptive"},
          {"status", qudit::toString(res.status)},
          {"message", res.message},
          {"stats", io::toJson(res.stats)}},
         out);
    return kNoSolution;
  }
  auto j = io::toJson(res.decomposition);
  j["mode"] = "adaptive";
  j["status"] = qudit::toString(res.status);
  j["stats"] = io::toJson(res.stats);
  emit(j, out);
  return kOk;
}

int runVerify(const std::string& unitaryPath, const std::string& seqPath,
              double tol) {
  namespace io = qudit::io;
  const auto u = io::unitaryFromJson(io::readJsonFile(unitaryPath));
  const auto d = io::decompositionFromJson(io::readJsonFile(seqPath));
  const bool ok = qudit::verifyReconstruction(d, u, tol);
  std::cout << (ok ? "OK" : "MISMATCH") << '\n';
  return ok ? kOk : kNoSolution;
}

int runBench(const std::vector<std::size_t>& dims,
             const std::vector<std::size_t>& counts,
             const std::vector<std::string>& graphs,
             const qudit::BenchOptions& opts, const std::string& csv,
             const std::string& records, bool recordTiming,
             const Overrides& o) {
  namespace io = qudit::io;
  qudit::io::Config base;
  base.search.maxNodes = 20000;
  const auto cfg = o.resolve(base);
  std::vector<qudit::Architecture> archs;
  for (const auto& path : graphs) {
    archs.push_back({std::filesystem::path(path).stem().string(),
                     io::graphFromJson(io::readJsonFile(path))});
  }
  const auto recs =
      qudit::runSuite(dims, counts, archs, cfg.search, cfg.cost, opts);
  if (!records.empty()) {
    std::ofstream f(records);
    qudit::writeRecords(f, recs, recordTiming);
  }
  const auto rows = qudit::summarize(recs);
  if (!csv.empty()) {
    std::ofstream f(csv);
    qudit::writeSummaryCsv(f, rows);
  }
  qudit::writeSummaryTable(std::cout, rows);
  return kOk;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Qudit unitary compiler"};
  app.require_subcommand(1);

  auto* compile = app.add_subcommand("compile", "Decompose one unitary");
  std::string unitary, graph, mode = "adaptive", out;
  Overrides compileOverrides;
  compile->add_option("--unitary", unitary)->required()->check(
      CLI::ExistingFile);
  compile->add_option("--graph", graph)->required()->check(CLI::ExistingFile);
  compile->add_option("--mode", mode)->check(
      CLI::IsMember({"adaptive", "qr"}));
  compile->add_option("--out", out, "Output file, stdout by default");
  compileOverrides.attach(*compile);

  auto* verify = app.add_subcommand("verify", "Check a sequence file");
  std::string seq, verifyUnitary;
  double tol = 1e-8;
  verify->add_option("--unitary", verifyUnitary)->required()->check(
      CLI::ExistingFile);
  verify->add_option("--sequence", seq)->required()->check(CLI::ExistingFile);
  verify->add_option("--tol", tol);

  auto* bench = app.add_subcommand("bench", "Run the Clifford benchmark");
  std::vector<std::size_t> dims{3, 5, 7}, counts{333, 2985, 6438};
  std::vector<std::string> graphs;
  qudit::BenchOptions opts;
  std::string csv, records;
  bool recordTiming = false;
  Overrides benchOverrides;
  bench->add_option("--dims", dims)->delimiter(',');
  bench->add_option("--counts", counts)->delimiter(',');
  bench->add_option("--graphs", graphs)->delimiter(',')->required()->check(
      CLI::ExistingFile);
  bench->add_option("--seed", opts.seed);
  bench->add_option("--word-length", opts.wordLength);
  bench->add_option("--workers", opts.workers);
  bench->add_option("--csv", csv);
  bench->add_option("--records", records);
  bench->add_flag("--record-timing", recordTiming);
  benchOverrides.attach(*bench);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInvalidInput;
  }

  try {
    if (*compile) {
      return runCompile(unitary, graph, mode, out, compileOverrides);
    }
    if (*verify) {
      return runVerify(verifyUnitary, seq, tol);
    }
    return runBench(dims, counts, graphs, opts, csv, records, recordTiming,
                    benchOverrides);
  } catch (const qudit::InvalidInput& e) {
    spdlog::error("invalid input: {}", e.what());
    return kInvalidInput;
  } catch (const qudit::DisconnectedGraph& e) {
    spdlog::error("invalid input: {}", e.what());
    return kInvalidInput;
  }
}
