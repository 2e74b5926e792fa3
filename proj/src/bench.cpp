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

#include "qudit/bench.hpp"

#include "qudit/clifford.hpp"
#include "qudit/errors.hpp"
#include "qudit/io.hpp"
#include "qudit/qr_baseline.hpp"

#include <fmt/format.h>
#include <spdlog/spdlog.h>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <limits>
#include <ostream>
#include <thread>

namespace qudit {

namespace {

void compileInstance(const ComplexMatrix& u, const EnergyCouplingGraph& g,
                     const SearchConfig& cfg, const CostParams& p,
                     double tol, BenchRecord& rec) {
  const auto start = std::chrono::steady_clock::now();
  try {
    const auto qr = qrDecompose(u, g, p);
    rec.qrCost = qr.totalCost;
    rec.qrRotations = qr.logicalRotations;
    rec.qrRoutingPulses = qr.routingPulses;
    rec.qrVerified = verifyReconstruction(qr, u, tol);

    const auto res = adaptiveCompile(u, g, cfg, p);
    rec.status = res.status;
    rec.nodesExpanded = res.stats.nodesExpanded;
    rec.budgetExhausted = res.stats.budgetExhausted;
    rec.message = res.message;
    if (res.ok()) {
      rec.adaptiveCost = res.decomposition.totalCost;
      rec.adaptiveRotations = res.decomposition.logicalRotations;
      rec.routingPulses = res.decomposition.routingPulses;
      rec.adaptiveVerified = verifyReconstruction(res.decomposition, u, tol);
    }
  } catch (const std::exception& e) {
    rec.status = CompileStatus::InvalidInput;
    rec.message = e.what();
  }
  rec.wallTimeMs = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - start)
                       .count();
}

Stats stats(const std::vector<double>& xs) {
  Stats s{std::numeric_limits<double>::infinity(), 0.0,
          -std::numeric_limits<double>::infinity()};
  for (double x : xs) {
    s.min = std::min(s.min, x);
    s.max = std::max(s.max, x);
    s.avg += x;
  }
  s.avg /= static_cast<double>(xs.size());
  return s;
}

} // namespace

std::vector<BenchRecord> runSuite(const std::vector<std::size_t>& dims,
                                  const std::vector<std::size_t>& counts,
                                  const std::vector<Architecture>& archs,
                                  const SearchConfig& cfg, const CostParams& p,
                                  const BenchOptions& opts) {
  if (dims.size() != counts.size()) {
    throw InvalidInput("dims and counts must have the same length");
  }
  cfg.validate();
  p.validate();

  struct Job {
    const ComplexMatrix* u;
    const EnergyCouplingGraph* g;
  };
  std::vector<std::vector<ComplexMatrix>> sets;
  sets.reserve(dims.size());
  std::vector<BenchRecord> records;
  std::vector<Job> jobs;
  for (std::size_t k = 0; k < dims.size(); ++k) {
    sets.push_back(cliffordSet(dims[k], counts[k],
                               deriveSeed(opts.seed, dims[k]),
                               opts.wordLength));
    bool matched = false;
    for (const auto& arch : archs) {
      if (arch.graph.numComputational() != dims[k]) {
        continue;
      }
      matched = true;
      for (std::size_t i = 0; i < counts[k]; ++i) {
        BenchRecord rec;
        rec.dim = dims[k];
        rec.architectureId = arch.id;
        rec.unitaryIndex = i;
        records.push_back(std::move(rec));
        jobs.push_back({&sets.back()[i], &arch.graph});
      }
    }
    if (!matched) {
      spdlog::warn("no architecture hosts dimension {}", dims[k]);
    }
  }

  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      compileInstance(*jobs[i].u, *jobs[i].g, cfg, p, opts.verifyTol,
                      records[i]);
    }
  };
  const std::size_t workers =
      std::max<std::size_t>(1, std::min(opts.workers, jobs.size()));
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back(work);
    }
  }
  return records;
}

std::vector<SummaryRow> summarize(const std::vector<BenchRecord>& records) {
  struct Group {
    SummaryRow row;
    std::vector<double> qr;
    std::vector<double> adaptive;
  };
  std::vector<Group> groups;
  for (const auto& r : records) {
    auto it = std::find_if(groups.begin(), groups.end(), [&](const Group& g) {
      return g.row.dim == r.dim && g.row.architectureId == r.architectureId;
    });
    if (it == groups.end()) {
      Group g;
      g.row.dim = r.dim;
      g.row.architectureId = r.architectureId;
      groups.push_back(std::move(g));
      it = std::prev(groups.end());
    }
    if (r.usable()) {
      it->qr.push_back(r.qrCost);
      it->adaptive.push_back(r.adaptiveCost);
    } else {
      ++it->row.excluded;
    }
  }
  std::vector<SummaryRow> rows;
  for (auto& g : groups) {
    if (g.qr.empty()) {
      spdlog::warn("dim {} on {}: no usable records, group omitted",
                   g.row.dim, g.row.architectureId);
      continue;
    }
    g.row.count = g.qr.size();
    g.row.qr = stats(g.qr);
    g.row.adaptive = stats(g.adaptive);
    rows.push_back(g.row);
  }
  return rows;
}

void writeRecords(std::ostream& out, const std::vector<BenchRecord>& records,
                  bool withTiming) {
  for (const auto& r : records) {
    io::json j = {{"dim", r.dim},
                  {"architecture", r.architectureId},
                  {"index", r.unitaryIndex},
                  {"status", toString(r.status)},
                  {"qr_cost", r.qrCost},
                  {"adaptive_cost", r.adaptiveCost},
                  {"qr_rotations", r.qrRotations},
                  {"adaptive_rotations", r.adaptiveRotations},
                  {"qr_routing_pulses", r.qrRoutingPulses},
                  {"routing_pulses", r.routingPulses},
                  {"nodes_expanded", r.nodesExpanded},
                  {"budget_exhausted", r.budgetExhausted},
                  {"qr_verified", r.qrVerified},
                  {"adaptive_verified", r.adaptiveVerified}};
    if (!r.message.empty()) {
      j["message"] = r.message;
    }
    if (withTiming) {
      j["wall_time_ms"] = r.wallTimeMs;
    }
    out << j.dump() << '\n';
  }
}

void writeSummaryCsv(std::ostream& out, const std::vector<SummaryRow>& rows) {
  out << "dim,architecture,count,excluded,qr_min,qr_avg,qr_max,"
         "adaptive_min,adaptive_avg,adaptive_max\n";
  for (const auto& r : rows) {
    out << fmt::format("{},{},{},{},{:.17g},{:.17g},{:.17g},{:.17g},{:.17g},"
                       "{:.17g}\n",
                       r.dim, r.architectureId, r.count, r.excluded, r.qr.min,
                       r.qr.avg, r.qr.max, r.adaptive.min, r.adaptive.avg,
                       r.adaptive.max);
  }
}

void writeSummaryTable(std::ostream& out, const std::vector<SummaryRow>& rows) {
  constexpr double kScale = 1e4;
  out << fmt::format("{:>4} {:<14} {:>6} | {:>8} {:>8} {:>8} | {:>8} {:>8} "
                     "{:>8}\n",
                     "dim", "architecture", "count", "QR min", "avg", "max",
                     "ad. min", "avg", "max");
  for (const auto& r : rows) {
    out << fmt::format("{:>4} {:<14} {:>6} | {:>8.2f} {:>8.2f} {:>8.2f} | "
                       "{:>8.2f} {:>8.2f} {:>8.2f}\n",
                       r.dim, r.architectureId, r.count, kScale * r.qr.min,
                       kScale * r.qr.avg, kScale * r.qr.max,
                       kScale * r.adaptive.min, kScale * r.adaptive.avg,
                       kScale * r.adaptive.max);
  }
  out << "costs x 1e4\n";
}

} // namespace qudit
