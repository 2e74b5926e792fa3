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

#include "qudit/io.hpp"

#include "oracles.hpp"
#include "qudit/errors.hpp"
#include "qudit/qr_baseline.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>

namespace qudit {
namespace {

using io::json;

TEST(UnitaryIoTest, RoundTrip) {
  std::mt19937_64 rng(70);
  const auto u = oracle::randomUnitaryMatrix(4, rng);
  EXPECT_EQ(io::unitaryFromJson(io::toJson(u)), u);
}

TEST(UnitaryIoTest, RejectsMalformed) {
  EXPECT_THROW((void)io::unitaryFromJson(json::parse(
                   R"({"dim":2,"entries":[[[1,0],[0,0]],[[0,0]]]})")),
               InvalidInput);
  EXPECT_THROW((void)io::unitaryFromJson(json::parse(
                   R"({"dim":2,"entries":[[[1,0],[0,0]]]})")),
               InvalidInput);
  EXPECT_THROW((void)io::unitaryFromJson(json::parse(
                   R"({"dim":2,"entries":[[[1,0],[0,"x"]],[[0,0],[1,0]]]})")),
               InvalidInput);
  EXPECT_THROW((void)io::unitaryFromJson(json::parse(R"({"entries":[]})")),
               InvalidInput);
  json inf = io::toJson(ComplexMatrix::identity(2));
  inf["entries"][0][0][0] = 1e308 * 10;
  EXPECT_THROW((void)io::unitaryFromJson(inf), InvalidInput);
}

TEST(GraphIoTest, ParsesAncillasAndRoutingLevels) {
  const auto g = io::graphFromJson(json::parse(R"({
    "levels": 5, "edges": [[0,1],[1,2],[2,3],[3,4]],
    "logical_map": {"0": 0, "1": 2, "2": 4, "a0": 1},
    "ancillas": ["a0"]})"));
  EXPECT_EQ(g.numLevels(), 5u);
  EXPECT_EQ(g.numLogical(), 4u);
  EXPECT_EQ(g.numComputational(), 3u);
  EXPECT_EQ(g.levelOf(3), 1u);
  EXPECT_TRUE(g.isAncilla(3));
  EXPECT_FALSE(g.stateAt(3).has_value());
  const auto back = io::graphFromJson(io::toJson(g));
  EXPECT_EQ(back.placement(), g.placement());
  EXPECT_EQ(back.ancillas(), g.ancillas());
}

TEST(GraphIoTest, RejectsInconsistentDocuments) {
  // a0 mapped but not declared.
  EXPECT_THROW((void)io::graphFromJson(json::parse(
                   R"({"levels":3,"edges":[[0,1],[1,2]],
                       "logical_map":{"0":0,"1":1,"a0":2}})")),
               InvalidInput);
  // Gap in the numbering.
  EXPECT_THROW((void)io::graphFromJson(json::parse(
                   R"({"levels":3,"edges":[[0,1],[1,2]],
                       "logical_map":{"0":0,"2":1}})")),
               InvalidInput);
  EXPECT_THROW((void)io::graphFromJson(json::parse(
                   R"({"levels":3,"edges":[[0,1],[1,2]],
                       "logical_map":{"0":0,"x":1}})")),
               InvalidInput);
  EXPECT_THROW((void)io::graphFromJson(json::parse(
                   R"({"levels":4,"edges":[[0,1],[2,3]],
                       "logical_map":{"0":0,"1":3}})")),
               DisconnectedGraph);
}

TEST(GraphIoTest, NodePhasesRoundTrip) {
  const auto g = EnergyCouplingGraph::path(3).withNodePhases({0.0, 0.5, 0.0});
  const auto back = io::graphFromJson(io::toJson(g));
  EXPECT_TRUE(back.sameFrame(g));
}

TEST(ConfigIoTest, DefaultsAndOverrides) {
  const auto c = io::configFromJson(json::parse(R"({
    "cost": {"base_factor": 2e-4, "calibrated_angle": 0.5},
    "search": {"cost_limit_factor": 1.5, "max_nodes": 10,
               "return_first": true, "max_depth": 3}})"));
  EXPECT_EQ(c.cost.baseFactor, 2e-4);
  EXPECT_EQ(c.cost.angleFloor, CostParams{}.angleFloor);
  EXPECT_EQ(c.search.costLimitFactor, 1.5);
  EXPECT_EQ(c.search.maxNodes, 10u);
  EXPECT_TRUE(c.search.returnFirst);
  EXPECT_EQ(c.search.maxDepth, 3u);
  EXPECT_THROW((void)io::configFromJson(json::parse(
                   R"({"cost": {"base_factor": -1}})")),
               InvalidInput);
  EXPECT_THROW((void)io::configFromJson(json::parse(
                   R"({"search": {"max_nodes": "many"}})")),
               InvalidInput);
}

TEST(SequenceIoTest, DecompositionRoundTripVerifies) {
  std::mt19937_64 rng(71);
  const auto u = oracle::randomUnitaryMatrix(3, rng);
  const EnergyCouplingGraph g(3, {{0, 1}, {1, 2}}, {0, 2, 1});
  const auto d = qrDecompose(u, g, CostParams{});
  const auto j = io::toJson(d);
  EXPECT_EQ(j.at("order"), "application");
  EXPECT_EQ(j.at("virtual"), true);
  EXPECT_EQ(j.at("virtual_phases").size(), 3u);
  const auto back = io::decompositionFromJson(json::parse(j.dump()));
  EXPECT_TRUE(verifyReconstruction(back, u, 1e-8));
  EXPECT_EQ(back.totalCost, d.totalCost);
}

TEST(SequenceIoTest, RejectsUnknownGatesAndLevels) {
  EXPECT_THROW((void)io::gateFromJson(json::parse(R"({"type":"X"})")),
               InvalidInput);
  EXPECT_THROW((void)io::decompositionFromJson(json::parse(
                   R"({"dim":2,"gates":[{"type":"R","i":0,"j":2,
                       "theta":1,"phi":0}]})")),
               InvalidInput);
  const auto z = io::gateFromJson(json::parse(R"({"type":"Z","i":1,"phi":0.5})"));
  EXPECT_EQ(std::get<VirtualZGate>(z), (VirtualZGate{1, 0.5}));
}

TEST(FileIoTest, MissingAndBrokenFiles) {
  EXPECT_THROW((void)io::readJsonFile("/nonexistent/file.json"), InvalidInput);
  const auto path = std::filesystem::temp_directory_path() / "qudit_io_bad.json";
  {
    std::ofstream(path) << "{ not json";
  }
  EXPECT_THROW((void)io::readJsonFile(path), InvalidInput);
  std::filesystem::remove(path);
}

} // namespace
} // namespace qudit
