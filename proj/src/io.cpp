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

#include "qudit/errors.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <string>
#include <utility>

namespace qudit::io {

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw InvalidInput(std::string("missing field '") + key + "'");
  }
  return j.at(key);
}

double number(const json& j, const char* what) {
  if (!j.is_number()) {
    throw InvalidInput(std::string(what) + " must be a number");
  }
  const double v = j.get<double>();
  if (!std::isfinite(v)) {
    throw InvalidInput(std::string(what) + " must be finite");
  }
  return v;
}

std::size_t index(const json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0) {
    throw InvalidInput(std::string(what) + " must be a non-negative integer");
  }
  return j.get<std::size_t>();
}

std::vector<std::size_t> indexList(const json& j, const char* what) {
  if (!j.is_array()) {
    throw InvalidInput(std::string(what) + " must be an array");
  }
  std::vector<std::size_t> out;
  for (const auto& e : j) {
    out.push_back(index(e, what));
  }
  return out;
}

template <typename T>
void readOptional(const json& j, const char* key, T& target) {
  if (j.contains(key)) {
    try {
      target = j.at(key).get<T>();
    } catch (const json::exception& e) {
      throw InvalidInput(std::string("bad value for '") + key + "': " +
                         e.what());
    }
  }
}

// Logical index of a state name: numeric states first, ancillas after.
struct StateName {
  bool ancilla;
  std::size_t k;
  bool operator<(const StateName& o) const {
    return std::pair(ancilla, k) < std::pair(o.ancilla, o.k);
  }
};

StateName parseStateName(const std::string& s) {
  const bool anc = !s.empty() && s[0] == 'a';
  const std::string digits = anc ? s.substr(1) : s;
  if (digits.empty() ||
      digits.find_first_not_of("0123456789") != std::string::npos ||
      (digits.size() > 1 && digits[0] == '0')) {
    throw InvalidInput("bad state name '" + s + "'");
  }
  return {anc, std::stoul(digits)};
}

} // namespace

ComplexMatrix unitaryFromJson(const json& j) {
  const std::size_t dim = index(field(j, "dim"), "dim");
  const json& rows = field(j, "entries");
  if (!rows.is_array() || rows.size() != dim) {
    throw InvalidInput("entries must have dim rows");
  }
  if (dim < 2) {
    throw InvalidInput("dim must be at least 2");
  }
  ComplexMatrix::Storage s(static_cast<Eigen::Index>(dim),
                           static_cast<Eigen::Index>(dim));
  for (std::size_t r = 0; r < dim; ++r) {
    if (!rows[r].is_array() || rows[r].size() != dim) {
      throw InvalidInput("matrix is not square");
    }
    for (std::size_t c = 0; c < dim; ++c) {
      const json& e = rows[r][c];
      if (!e.is_array() || e.size() != 2) {
        throw InvalidInput("entries must be [re, im] pairs");
      }
      s(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          Complex(number(e[0], "entry"), number(e[1], "entry"));
    }
  }
  return ComplexMatrix(std::move(s));
}

json toJson(const ComplexMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.dim(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.dim(); ++c) {
      row.push_back({m(r, c).real(), m(r, c).imag()});
    }
    rows.push_back(std::move(row));
  }
  return {{"dim", m.dim()}, {"entries", std::move(rows)}};
}

EnergyCouplingGraph graphFromJson(const json& j) {
  const std::size_t levels = index(field(j, "levels"), "levels");
  std::vector<Edge> edges;
  const json& e = field(j, "edges");
  if (!e.is_array()) {
    throw InvalidInput("edges must be an array");
  }
  for (const auto& pair : e) {
    if (!pair.is_array() || pair.size() != 2) {
      throw InvalidInput("edges must be [a, b] pairs");
    }
    edges.emplace_back(index(pair[0], "edge level"),
                       index(pair[1], "edge level"));
  }

  const json& map = field(j, "logical_map");
  if (!map.is_object()) {
    throw InvalidInput("logical_map must be an object");
  }
  std::map<StateName, std::pair<std::string, Level>> states;
  for (const auto& [name, level] : map.items()) {
    states.emplace(parseStateName(name),
                   std::pair(name, index(level, "logical_map level")));
  }
  std::set<std::string> declared;
  if (j.contains("ancillas")) {
    for (const auto& a : j.at("ancillas")) {
      if (!a.is_string() || !parseStateName(a.get<std::string>()).ancilla) {
        throw InvalidInput("ancillas must be names of the form aK");
      }
      declared.insert(a.get<std::string>());
    }
  }

  std::vector<Level> placement;
  std::vector<std::string> names;
  std::set<LogicalState> ancillas;
  std::size_t numeric = 0;
  std::size_t ancillaCount = 0;
  for (const auto& [key, value] : states) {
    // Names must be dense: 0..k-1 then a0..am-1.
    const std::size_t expected = key.ancilla ? ancillaCount++ : numeric++;
    if (key.k != expected) {
      throw InvalidInput("state names must be contiguous, missing before '" +
                         value.first + "'");
    }
    if (key.ancilla) {
      if (!declared.erase(value.first)) {
        throw InvalidInput("state '" + value.first +
                           "' is not listed in ancillas");
      }
      ancillas.insert(placement.size());
    }
    names.push_back(value.first);
    placement.push_back(value.second);
  }
  if (!declared.empty()) {
    throw InvalidInput("ancilla '" + *declared.begin() +
                       "' is not in logical_map");
  }
  EnergyCouplingGraph g(levels, edges, std::move(placement), ancillas,
                        std::move(names));
  if (j.contains("node_phases")) {
    std::vector<double> phases;
    for (const auto& p : j.at("node_phases")) {
      phases.push_back(number(p, "node phase"));
    }
    g = g.withNodePhases(std::move(phases));
  }
  return g;
}

json toJson(const EnergyCouplingGraph& g) {
  json edges = json::array();
  for (const auto& [a, b] : g.edges()) {
    edges.push_back({a, b});
  }
  json map = json::object();
  json ancillas = json::array();
  for (LogicalState s = 0; s < g.numLogical(); ++s) {
    map[g.name(s)] = g.levelOf(s);
    if (g.isAncilla(s)) {
      ancillas.push_back(g.name(s));
    }
  }
  json out = {{"levels", g.numLevels()},
              {"edges", std::move(edges)},
              {"logical_map", std::move(map)},
              {"ancillas", std::move(ancillas)}};
  bool phased = false;
  json phases = json::array();
  for (Level l = 0; l < g.numLevels(); ++l) {
    phases.push_back(g.nodePhase(l));
    phased = phased || g.nodePhase(l) != 0.0;
  }
  if (phased) {
    out["node_phases"] = std::move(phases);
  }
  return out;
}

Config configFromJson(const json& j) {
  if (!j.is_object()) {
    throw InvalidInput("config must be an object");
  }
  Config c;
  if (j.contains("cost")) {
    const json& p = j.at("cost");
    readOptional(p, "base_factor", c.cost.baseFactor);
    readOptional(p, "calibrated_angle", c.cost.calibratedAngle);
    readOptional(p, "angle_floor", c.cost.angleFloor);
    readOptional(p, "model", c.cost.model);
  }
  if (j.contains("search")) {
    const json& s = j.at("search");
    readOptional(s, "cost_limit_factor", c.search.costLimitFactor);
    readOptional(s, "threshold", c.search.threshold);
    readOptional(s, "zero_tol", c.search.zeroTol);
    readOptional(s, "diag_tol", c.search.diagTol);
    readOptional(s, "max_nodes", c.search.maxNodes);
    readOptional(s, "return_first", c.search.returnFirst);
    readOptional(s, "sort_children", c.search.sortChildren);
    readOptional(s, "zero_pivot_children", c.search.zeroPivotChildren);
    if (s.contains("absolute_cost_limit")) {
      c.search.absoluteCostLimit =
          number(s.at("absolute_cost_limit"), "absolute_cost_limit");
    }
    if (s.contains("max_depth")) {
      c.search.maxDepth = index(s.at("max_depth"), "max_depth");
    }
  }
  c.cost.validate();
  c.search.validate();
  return c;
}

json toJson(const CostParams& p) {
  return {{"base_factor", p.baseFactor},
          {"calibrated_angle", p.calibratedAngle},
          {"angle_floor", p.angleFloor},
          {"model", p.model}};
}

json toJson(const SearchConfig& cfg) {
  json out = {{"cost_limit_factor", cfg.costLimitFactor},
              {"threshold", cfg.threshold},
              {"zero_tol", cfg.zeroTol},
              {"diag_tol", cfg.diagTol},
              {"max_nodes", cfg.maxNodes},
              {"return_first", cfg.returnFirst},
              {"sort_children", cfg.sortChildren},
              {"zero_pivot_children", cfg.zeroPivotChildren}};
  if (cfg.absoluteCostLimit) {
    out["absolute_cost_limit"] = *cfg.absoluteCostLimit;
  }
  if (cfg.maxDepth) {
    out["max_depth"] = *cfg.maxDepth;
  }
  return out;
}

json toJson(const Gate& g) {
  if (const auto* r = std::get_if<RotationGate>(&g)) {
    return {{"type", "R"},
            {"i", r->levelLow},
            {"j", r->levelHigh},
            {"theta", r->theta},
            {"phi", r->phi}};
  }
  const auto& z = std::get<VirtualZGate>(g);
  return {{"type", "Z"}, {"i", z.level}, {"phi", z.phi}};
}

Gate gateFromJson(const json& j) {
  const json& type = field(j, "type");
  if (type == "R") {
    return RotationGate{index(field(j, "i"), "i"), index(field(j, "j"), "j"),
                        number(field(j, "theta"), "theta"),
                        number(field(j, "phi"), "phi")};
  }
  if (type == "Z") {
    return VirtualZGate{index(field(j, "i"), "i"),
                        number(field(j, "phi"), "phi")};
  }
  throw InvalidInput("gate type must be \"R\" or \"Z\"");
}

json toJson(const Decomposition& d) {
  json gates = json::array();
  for (const auto& g : d.sequence) {
    gates.push_back(toJson(g));
  }
  return {{"dim", d.numLevels},
          {"gates", std::move(gates)},
          {"order", "application"},
          {"virtual_phases", d.residual.phases},
          {"virtual", true},
          {"input_placement", d.inputPlacement},
          {"output_placement", d.outputPlacement},
          {"computational_states", d.computationalStates},
          {"cost",
           {{"total", d.totalCost},
            {"logical_rotations", d.logicalRotations},
            {"routing_pulses", d.routingPulses}}}};
}

Decomposition decompositionFromJson(const json& j) {
  Decomposition d;
  d.numLevels = index(field(j, "dim"), "dim");
  if (j.contains("order") && j.at("order") != "application") {
    throw InvalidInput("only application order is supported");
  }
  const json& gates = field(j, "gates");
  if (!gates.is_array()) {
    throw InvalidInput("gates must be an array");
  }
  for (const auto& g : gates) {
    Gate gate = gateFromJson(g);
    validate(gate, d.numLevels);
    d.sequence.push_back(gate);
  }
  std::vector<double> phases;
  if (j.contains("virtual_phases")) {
    for (const auto& p : j.at("virtual_phases")) {
      phases.push_back(number(p, "virtual phase"));
    }
  }
  std::vector<Level> identity(d.numLevels);
  for (Level l = 0; l < d.numLevels; ++l) {
    identity[l] = l;
  }
  d.inputPlacement = j.contains("input_placement")
                         ? indexList(j.at("input_placement"), "placement")
                         : identity;
  d.outputPlacement = j.contains("output_placement")
                          ? indexList(j.at("output_placement"), "placement")
                          : d.inputPlacement;
  if (phases.empty()) {
    phases.assign(d.inputPlacement.size(), 0.0);
  }
  if (phases.size() != d.inputPlacement.size() ||
      d.outputPlacement.size() != d.inputPlacement.size()) {
    throw InvalidInput("placements and virtual phases differ in size");
  }
  d.residual.phases = std::move(phases);
  if (j.contains("computational_states")) {
    d.computationalStates =
        indexList(j.at("computational_states"), "computational state");
  } else {
    for (std::size_t s = 0; s < d.inputPlacement.size(); ++s) {
      d.computationalStates.push_back(s);
    }
  }
  if (j.contains("cost")) {
    const json& c = j.at("cost");
    readOptional(c, "total", d.totalCost);
    readOptional(c, "logical_rotations", d.logicalRotations);
    readOptional(c, "routing_pulses", d.routingPulses);
  }
  return d;
}

json toJson(const SearchStats& s) {
  return {{"nodes_expanded", s.nodesExpanded},
          {"children_generated", s.childrenGenerated},
          {"solutions_found", s.solutionsFound},
          {"max_depth_reached", s.maxDepthReached},
          {"depth", s.depth},
          {"cost_limit", s.costLimit},
          {"qr_cost", s.qrCost},
          {"budget_exhausted", s.budgetExhausted}};
}

json readJsonFile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw InvalidInput("cannot open " + path.string());
  }
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InvalidInput(path.string() + ": " + e.what());
  }
}

void writeJsonFile(const std::filesystem::path& path, const json& j) {
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("cannot write " + path.string());
  }
  out << j.dump(2) << '\n';
}

} // namespace qudit::io
