// Copyright 2026 The locct developers
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

/**
 * @file protocol_file.hpp
 * @brief JSON serialization of states and measurement protocols. All
 *   rationals travel as lowest-terms strings so files round-trip exactly;
 *   float fields are conveniences and never read back.
 */

#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "locct/convert.hpp"
#include "locct/core.hpp"
#include "locct/diagram.hpp"
#include "locct/protocol.hpp"

namespace locct::cli {

/** Identifier written into every protocol file. */
inline constexpr const char *kProtocolFormat = "locct-protocol/1";

/**
 * Parse a state document: an object with a "lambda" array of rational
 * strings ("a/b" or an exact decimal). Sorting and validation happen in
 * make_schmidt.
 *
 * @throws ParseError on malformed JSON or non-string coefficients.
 */
SchmidtVector parse_state(const std::string &text);

/** parse_state for an already-parsed JSON document. */
SchmidtVector parse_state(const nlohmann::json &document);

/** Serialize a state as {"lambda": [...]}. */
nlohmann::json state_to_json(const SchmidtVector &state);

/** A protocol file read back into memory. */
struct LoadedProtocol {
  std::string kind;  // "distill" or "convert"
  SchmidtVector start;
  SchmidtVector target;
  long Q;  // 0 in distill files
  ColouredDiagram diagram;
  KrausProtocol protocol;
  std::vector<CorrectionRecord> corrections;
};

/**
 * Serialize a full protocol: kind, both states, the coloured diagram, the
 * operators, and the correction audit trail. Output ordering is
 * deterministic so files are diffable.
 */
nlohmann::json protocol_to_json(
    const std::string &kind, const SchmidtVector &start,
    const SchmidtVector &target, long Q, const ColouredDiagram &diagram,
    const KrausProtocol &protocol,
    const std::vector<CorrectionRecord> &corrections);

/**
 * Parse and validate a protocol document.
 *
 * @throws ParseError on structural problems; the domain validators may
 *   throw their own errors for inconsistent payloads.
 */
LoadedProtocol protocol_from_json(const nlohmann::json &document);

}  // namespace locct::cli
