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

#pragma once

#include "qudit/adaptive_search.hpp"
#include "qudit/coupling_graph.hpp"
#include "qudit/cost_model.hpp"
#include "qudit/decomposition.hpp"
#include "qudit/linalg.hpp"

#include "json.hpp"

#include <filesystem>
#include <string>

namespace qudit::io {

using nlohmann::json;

// All parsers throw InvalidInput on malformed documents.

/// {"dim": d, "entries": [[[re, im], ...], ...]}, row-major.
ComplexMatrix unitaryFromJson(const json& j);
json toJson(const ComplexMatrix& m);

/**
 * {"levels": N, "edges": [[a, b], ...], "logical_map": {"0": la, "a0": lb},
 *  "ancillas": ["a0"], "node_phases": [...]}. "ancillas" and "node_phases"
 * are optional; every "aK" key must be listed as an ancilla and vice versa.
 */
EnergyCouplingGraph graphFromJson(const json& j);
json toJson(const EnergyCouplingGraph& g);

/// {"cost": {...}, "search": {...}}; absent keys keep their defaults.
struct Config {
  CostParams cost;
  SearchConfig search;
};
Config configFromJson(const json& j);
json toJson(const CostParams& p);
json toJson(const SearchConfig& cfg);

json toJson(const Gate& g);
Gate gateFromJson(const json& j);

/**
 * {"dim": levels, "gates": [...], "order": "application",
 *  "virtual_phases": [...], "virtual": true, "input_placement": [...],
 *  "output_placement": [...], "computational_states": [...], "cost": {...}}.
 */
json toJson(const Decomposition& d);
Decomposition decompositionFromJson(const json& j);

json toJson(const SearchStats& s);

json readJsonFile(const std::filesystem::path& path);
void writeJsonFile(const std::filesystem::path& path, const json& j);

} // namespace qudit::io
