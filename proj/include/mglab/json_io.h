// Copyright 2026 The mglab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>

#include "json.hpp"

#include "mglab/embed.h"
#include "mglab/gates.h"
#include "mglab/learn.h"
#include "mglab/pfaffian.h"

namespace mglab {

/// Serializes JSON with every floating point number printed at 17
/// significant digits, so values round-trip bit-exactly. Object keys come out
/// sorted, which keeps output byte-stable.
std::string dump_json(const nlohmann::json &value, int indent = 2);

/// {"n": int, "layers": [[{"kind": "UX"|"FSWAP"|"CUSTOM", "t": float?,
/// "wires": [i, j], "matrix": [[re, im] x 16]?}]]}
nlohmann::json circuit_to_json(const MatchgateCircuit &circuit);
/// Throws ParseError on malformed input. Does not validate the circuit.
MatchgateCircuit circuit_from_json(const nlohmann::json &value);

/// {"dim": int, "upper": [[i, j, re, im]]}
nlohmann::json skew_to_json(const SkewMatrix &matrix);
SkewMatrix skew_from_json(const nlohmann::json &value);

/// {"s": "0/1 string", "eta": float, "m": int, "transpositions": [[i, i+1]], "local": bool}
nlohmann::json plan_to_json(const EmbeddingPlan &plan);
/// Rebuilds the plan from its secret and checks the stored fields against it.
EmbeddingPlan plan_from_json(const nlohmann::json &value);

/// {"experiment", "n", "eta", "tau"?, "recovered", "queries_used"?,
/// "samples_used"?, "success", "seed"}. Wallclock time is left out so reports
/// are reproducible.
nlohmann::json report_to_json(const LearnReport &report);

}  // namespace mglab
