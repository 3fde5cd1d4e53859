/*
 * Copyright 2026 The localscott Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef LOCALSCOTT_HARNESS_HPP
#define LOCALSCOTT_HARNESS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "localscott/classify.hpp"
#include "localscott/gspace.hpp"
#include "localscott/oracles.hpp"
#include "localscott/scott.hpp"

namespace localscott {

using Json = nlohmann::json;

/**
 * Instance documents.
 *
 *   group:  {order, mul} or {degree, generators}
 *   space:  {size, action} or "self-left-multiplication"
 *   basisU: {seeds}      X is appended
 *   basisV: {seeds}      symmetrized, conjugation-closed, G appended
 *   mode:   "strict" | "exploratory"
 *   name, seed: optional
 *
 * Errors carry a location: "<source>: /space/action/2: ..." for structural
 * problems, "<source>: line L, column C: ..." for syntax.
 */
ActionInstance parse_instance(const Json& doc, const std::string& source = "<input>");
ActionInstance parse_instance_text(const std::string& text, const std::string& source = "<input>");

/// A path to an instance document or one of instance_names().
ActionInstance load_instance(const std::string& path_or_name);

/// Canonical form: {order, mul} group, explicit action, seeds = family
/// members without the appended X / G.
Json instance_to_json(const ActionInstance& inst);
std::string serialize_instance(const ActionInstance& inst);

/// Indented JSON with arrays of scalars kept on one line. Deterministic.
std::string format_json(const Json& j);

Json to_json(const OracleLog& log);
Json to_json(const ClascharReport& rep);
Json to_json(const EventualOpenness& eo);
Json to_json(const ContainmentResult& res);
Json set_json(PointSet s);
Json set_json(ElemSet s);

struct AnalysisOptions {
  bool claschar = true;
  std::size_t containment_budget = 4096;
  /// oracle suites to run; empty for none
  std::vector<std::string> suites;
  OracleOptions oracle;
};

/**
 * Levels, per-cell labelings, signature dictionary, ranks, classification
 * report and oracle log. The output does not depend on worker counts.
 */
Json analysis_to_json(const PieceTable& table, const AnalysisOptions& opts = {});
std::string serialize_analysis(const PieceTable& table, const AnalysisOptions& opts = {});

}  // namespace localscott

#endif  // LOCALSCOTT_HARNESS_HPP
