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

#include "graphs.hpp"
#include "qudit/errors.hpp"

#include <gtest/gtest.h>

#include <map>
#include <sstream>

namespace qudit {
namespace {

std::vector<Architecture> pathAndStar3() {
  return {{"path3", testing::interleavedPath(3)},
          {"star3", testing::star(3)}};
}

BenchRecord record(std::size_t dim, const std::string& arch, double qr,
                   double ad) {
  BenchRecord r;
  r.dim = dim;
  r.architectureId = arch;
  r.qrCost = qr;
  r.adaptiveCost = ad;
  r.status = CompileStatus::Success;
  r.qrVerified = true;
  r.adaptiveVerified = true;
  return r;
}

TEST(RunSuiteTest, TenQutritCliffordsOnPath) {
  const std::vector<Architecture> archs{{"path3", testing::interleavedPath(3)}};
  const auto recs = runSuite({3}, {10}, archs, SearchConfig{}, CostParams{},
                             BenchOptions{});
  ASSERT_EQ(recs.size(), 10u);
  double qr = 0.0;
  double ad = 0.0;
  for (std::size_t i = 0; i < recs.size(); ++i) {
    const auto& r = recs[i];
    EXPECT_EQ(r.unitaryIndex, i);
    EXPECT_TRUE(r.usable()) << r.message;
    EXPECT_LE(r.adaptiveCost, 1.1 * r.qrCost);
    qr += r.qrCost;
    ad += r.adaptiveCost;
  }
  EXPECT_LT(ad, qr);
}

TEST(RunSuiteTest, EmptyAndUnhostedDims) {
  EXPECT_TRUE(runSuite({}, {}, pathAndStar3(), {}, {}, {}).empty());
  EXPECT_TRUE(runSuite({5}, {3}, pathAndStar3(), {}, {}, {}).empty());
  EXPECT_THROW((void)runSuite({3}, {}, pathAndStar3(), {}, {}, {}),
               InvalidInput);
}

TEST(RunSuiteTest, ArchitecturesShareInputsAndOrder) {
  const auto recs = runSuite({3}, {4}, pathAndStar3(), {}, {}, {});
  ASSERT_EQ(recs.size(), 8u);
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_EQ(recs[i].architectureId, "path3");
    EXPECT_EQ(recs[i + 4].architectureId, "star3");
    EXPECT_EQ(recs[i].unitaryIndex, recs[i + 4].unitaryIndex);
  }
}

TEST(RunSuiteTest, RecordsAreReproducible) {
  BenchOptions serial;
  serial.seed = 17;
  BenchOptions parallel = serial;
  parallel.workers = 3;
  std::ostringstream a, b, c;
  writeRecords(a, runSuite({3, 5}, {6, 2}, pathAndStar3(), {}, {}, serial));
  writeRecords(b, runSuite({3, 5}, {6, 2}, pathAndStar3(), {}, {}, serial));
  writeRecords(c, runSuite({3, 5}, {6, 2}, pathAndStar3(), {}, {}, parallel));
  EXPECT_EQ(a.str(), b.str());
  EXPECT_EQ(a.str(), c.str());
  EXPECT_EQ(a.str().find("wall_time"), std::string::npos);
}

TEST(SummarizeTest, SingleRecord) {
  const auto rows = summarize({record(3, "g", 5e-4, 4e-4)});
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0].qr.min, rows[0].qr.avg);
  EXPECT_EQ(rows[0].qr.avg, rows[0].qr.max);
  EXPECT_EQ(rows[0].adaptive.min, 4e-4);
}

TEST(SummarizeTest, TwoRecordsPrintedTimesTenThousand) {
  const auto rows =
      summarize({record(3, "g", 2e-4, 2e-4), record(3, "g", 4e-4, 4e-4)});
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_NEAR(rows[0].adaptive.avg, 3e-4, 1e-18);
  std::ostringstream table;
  writeSummaryTable(table, rows);
  EXPECT_NE(table.str().find("3.00"), std::string::npos);
  std::ostringstream csv;
  writeSummaryCsv(csv, rows);
  EXPECT_EQ(csv.str().rfind("dim,architecture,count", 0), 0u);
}

TEST(SummarizeTest, UnusableRecordsAreExcluded) {
  auto bad = record(3, "g", 1.0, 1.0);
  bad.status = CompileStatus::NoSolution;
  auto onlyBad = record(5, "h", 1.0, 1.0);
  onlyBad.adaptiveVerified = false;
  const auto rows = summarize({record(3, "g", 2e-4, 1e-4), bad, onlyBad});
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0].count, 1u);
  EXPECT_EQ(rows[0].excluded, 1u);
  EXPECT_EQ(rows[0].qr.max, 2e-4);
}

TEST(SummarizeTest, MatchesIndependentAggregation) {
  const auto recs = runSuite({3}, {12}, pathAndStar3(), {}, {}, {});
  std::map<std::string, std::vector<double>> qr, ad;
  for (const auto& r : recs) {
    qr[r.architectureId].push_back(r.qrCost);
    ad[r.architectureId].push_back(r.adaptiveCost);
  }
  for (const auto& row : summarize(recs)) {
    const auto& q = qr[row.architectureId];
    const auto& a = ad[row.architectureId];
    double qs = 0.0, as = 0.0;
    for (double x : q) qs += x;
    for (double x : a) as += x;
    EXPECT_EQ(row.count, q.size());
    EXPECT_NEAR(row.qr.avg, qs / static_cast<double>(q.size()), 1e-18);
    EXPECT_NEAR(row.adaptive.avg, as / static_cast<double>(a.size()), 1e-18);
    EXPECT_EQ(row.qr.min, *std::min_element(q.begin(), q.end()));
    EXPECT_EQ(row.adaptive.max, *std::max_element(a.begin(), a.end()));
  }
}

} // namespace
} // namespace qudit
