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

#include "cli/protocol_file.hpp"

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "locct/errors.hpp"
#include "locct/rational.hpp"

namespace locct::cli {

namespace {

using nlohmann::json;

/** Fetch a required field, mapping absence to ParseError. */
const json &field(const json &object, const char *key) {
  LOCCT_CHECK(object.is_object() && object.contains(key), ParseError,
              std::string("missing field \"") + key + "\"");
  return object.at(key);
}

std::string string_field(const json &object, const char *key) {
  const json &value = field(object, key);
  LOCCT_CHECK(value.is_string(), ParseError,
              std::string("field \"") + key + "\" must be a string");
  return value.get<std::string>();
}

Rational rational_field(const json &object, const char *key) {
  return parse_rational(string_field(object, key));
}

long integer_field(const json &object, const char *key) {
  const json &value = field(object, key);
  LOCCT_CHECK(value.is_number_integer(), ParseError,
              std::string("field \"") + key + "\" must be an integer");
  return value.get<long>();
}

std::vector<Rational> rational_array(const json &value, const char *what) {
  LOCCT_CHECK(value.is_array(), ParseError,
              std::string(what) + " must be an array");
  std::vector<Rational> result;
  result.reserve(value.size());
  for (const json &item : value) {
    LOCCT_CHECK(item.is_string(), ParseError,
                std::string(what) +
                    " entries must be rational strings, not JSON numbers");
    result.push_back(parse_rational(item.get<std::string>()));
  }
  return result;
}

json rationals_to_json(const std::vector<Rational> &values) {
  json result = json::array();
  for (const Rational &value : values) {
    result.push_back(rational_to_string(value));
  }
  return result;
}

json diagram_to_json(const ColouredDiagram &diagram) {
  json columns = json::array();
  for (const std::vector<ColourSegment> &column : diagram.columns()) {
    json stack = json::array();
    for (const ColourSegment &segment : column) {
      stack.push_back({{"colour", segment.colour},
                       {"height", rational_to_string(segment.height)}});
    }
    columns.push_back(std::move(stack));
  }
  return {{"denominator", diagram.denominator().get_str()},
          {"columns", std::move(columns)}};
}

ColouredDiagram diagram_from_json(const json &value) {
  const std::string denominator_text = string_field(value, "denominator");
  Integer denominator;
  try {
    denominator = Integer(denominator_text);
  } catch (const std::invalid_argument &) {
    throw ParseError("denominator is not an integer: " + denominator_text);
  }
  const json &columns_json = field(value, "columns");
  LOCCT_CHECK(columns_json.is_array(), ParseError,
              "diagram columns must be an array");
  std::vector<std::vector<ColourSegment>> columns;
  columns.reserve(columns_json.size());
  for (const json &stack_json : columns_json) {
    LOCCT_CHECK(stack_json.is_array(), ParseError,
                "diagram column must be an array of segments");
    std::vector<ColourSegment> stack;
    stack.reserve(stack_json.size());
    for (const json &segment_json : stack_json) {
      stack.push_back(
          ColourSegment{static_cast<int>(integer_field(segment_json, "colour")),
                        rational_field(segment_json, "height")});
    }
    columns.push_back(std::move(stack));
  }
  return {std::move(columns), denominator};
}

json operators_to_json(const KrausProtocol &protocol) {
  json result = json::array();
  for (std::size_t index = 0; index < protocol.operators.size(); ++index) {
    json entries = json::array();
    for (const KrausEntry &entry : protocol.operators[index].entries()) {
      entries.push_back({{"i", entry.target_index},
                         {"j", entry.source_index},
                         {"c2", rational_to_string(entry.coeff_sq)}});
    }
    result.push_back(
        {{"label", protocol.outcome_labels[index]},
         {"probability", rational_to_string(protocol.probabilities[index])},
         {"entries", std::move(entries)}});
  }
  return result;
}

KrausProtocol operators_from_json(const json &value) {
  LOCCT_CHECK(value.is_array(), ParseError, "operators must be an array");
  KrausProtocol protocol;
  protocol.operators.reserve(value.size());
  protocol.outcome_labels.reserve(value.size());
  protocol.probabilities.reserve(value.size());
  for (const json &operator_json : value) {
    const json &entries_json = field(operator_json, "entries");
    LOCCT_CHECK(entries_json.is_array(), ParseError,
                "operator entries must be an array");
    auto entries = std::make_shared<std::vector<KrausEntry>>();
    entries->reserve(entries_json.size());
    for (const json &entry_json : entries_json) {
      entries->push_back(
          KrausEntry{static_cast<int>(integer_field(entry_json, "i")),
                     static_cast<int>(integer_field(entry_json, "j")),
                     rational_field(entry_json, "c2")});
    }
    protocol.operators.push_back(KrausOperator(
        std::shared_ptr<const std::vector<KrausEntry>>(std::move(entries))));
    protocol.outcome_labels.push_back(integer_field(operator_json, "label"));
    protocol.probabilities.push_back(
        rational_field(operator_json, "probability"));
  }
  return protocol;
}

json corrections_to_json(const std::vector<CorrectionRecord> &corrections) {
  json result = json::array();
  for (const CorrectionRecord &record : corrections) {
    json terms = json::array();
    for (std::size_t k = 0; k < record.R.size(); ++k) {
      terms.push_back({{"R", record.R[k]},
                       {"X", rational_to_string(record.X[k])},
                       {"Y", rational_to_string(record.Y[k])}});
    }
    result.push_back({{"L", record.L},
                      {"z", rational_to_string(record.z)},
                      {"S_back", rational_to_string(record.S_back)},
                      {"W", rational_to_string(record.W)},
                      {"W_host", record.W_host},
                      {"terms", std::move(terms)}});
  }
  return result;
}

std::vector<CorrectionRecord> corrections_from_json(const json &value) {
  LOCCT_CHECK(value.is_array(), ParseError, "corrections must be an array");
  std::vector<CorrectionRecord> corrections;
  corrections.reserve(value.size());
  for (const json &record_json : value) {
    CorrectionRecord record;
    record.L = static_cast<int>(integer_field(record_json, "L"));
    record.z = rational_field(record_json, "z");
    record.S_back = rational_field(record_json, "S_back");
    record.W = rational_field(record_json, "W");
    record.W_host = static_cast<int>(integer_field(record_json, "W_host"));
    const json &terms = field(record_json, "terms");
    LOCCT_CHECK(terms.is_array(), ParseError,
                "correction terms must be an array");
    for (const json &term : terms) {
      record.R.push_back(static_cast<int>(integer_field(term, "R")));
      record.X.push_back(rational_field(term, "X"));
      record.Y.push_back(rational_field(term, "Y"));
    }
    corrections.push_back(std::move(record));
  }
  return corrections;
}

}  // namespace

SchmidtVector parse_state(const std::string &text) {
  json document;
  try {
    document = json::parse(text);
  } catch (const json::exception &error) {
    throw ParseError(std::string("invalid JSON: ") + error.what());
  }
  return parse_state(document);
}

SchmidtVector parse_state(const json &document) {
  return make_schmidt(rational_array(field(document, "lambda"), "lambda"));
}

json state_to_json(const SchmidtVector &state) {
  return {{"lambda", rationals_to_json(state.lambdas())}};
}

json protocol_to_json(const std::string &kind, const SchmidtVector &start,
                      const SchmidtVector &target, long Q,
                      const ColouredDiagram &diagram,
                      const KrausProtocol &protocol,
                      const std::vector<CorrectionRecord> &corrections) {
  json document = {{"format", kProtocolFormat},
                   {"kind", kind},
                   {"start", state_to_json(start)},
                   {"target", state_to_json(target)},
                   {"diagram", diagram_to_json(diagram)},
                   {"operators", operators_to_json(protocol)},
                   {"corrections", corrections_to_json(corrections)}};
  if (kind == "convert") {
    document["Q"] = Q;
  }
  return document;
}

LoadedProtocol protocol_from_json(const json &document) {
  LOCCT_CHECK(document.is_object(), ParseError,
              "protocol file must be a JSON object");
  const std::string format = string_field(document, "format");
  LOCCT_CHECK(format == kProtocolFormat, ParseError,
              "unsupported format \"" + format + "\"");
  const std::string kind = string_field(document, "kind");
  LOCCT_CHECK(kind == "distill" || kind == "convert", ParseError,
              "kind must be \"distill\" or \"convert\"");
  long Q = 0;
  if (kind == "convert") {
    Q = integer_field(document, "Q");
  }
  return LoadedProtocol{kind,
                        parse_state(field(document, "start")),
                        parse_state(field(document, "target")),
                        Q,
                        diagram_from_json(field(document, "diagram")),
                        operators_from_json(field(document, "operators")),
                        corrections_from_json(field(document, "corrections"))};
}

}  // namespace locct::cli
