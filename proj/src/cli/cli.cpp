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

#include "cli/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cli/protocol_file.hpp"
#include "locct/convert.hpp"
#include "locct/core.hpp"
#include "locct/diagram.hpp"
#include "locct/distill.hpp"
#include "locct/errors.hpp"
#include "locct/protocol.hpp"
#include "locct/rational.hpp"

namespace locct::cli {

namespace {

using nlohmann::json;

std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  LOCCT_CHECK(in.good(), ParseError, "cannot read file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string &path, const std::string &content) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  LOCCT_CHECK(file.good(), ParseError, "cannot write file: " + path);
  file << content;
  file.flush();
  LOCCT_CHECK(file.good(), ParseError, "failed while writing file: " + path);
}

SchmidtVector load_state(const std::string &path) {
  return parse_state(read_file(path));
}

LoadedProtocol load_protocol(const std::string &path) {
  json document;
  try {
    document = json::parse(read_file(path));
  } catch (const json::exception &error) {
    throw ParseError("invalid JSON in " + path + ": " + error.what());
  }
  return protocol_from_json(document);
}

void emit(std::ostream &out, const json &document) {
  out << document.dump(2) << "\n";
}

std::string double_text(double value) {
  std::ostringstream stream;
  stream << std::setprecision(17) << value;
  return stream.str();
}

json heights_to_json(const std::vector<Rational> &heights) {
  json result = json::array();
  for (const Rational &height : heights)
    result.push_back(rational_to_string(height));
  return result;
}

int run_check(const std::string &state_path, const std::string &target_path,
              const std::string &format, std::ostream &out) {
  const SchmidtVector start = load_state(state_path);
  const SchmidtVector target = load_state(target_path);
  const bool convertible = nielsen_condition(start, target);
  if (format == "text")
    out << (convertible ? "convertible: yes\n" : "convertible: no\n");
  else
    emit(out, json{{"convertible", convertible}});
  return convertible ? 0 : 1;
}

int run_distill(const std::string &state_path, const std::string &out_path,
                const std::string &format, std::ostream &out) {
  const SchmidtVector state = load_state(state_path);
  const OutcomeDistribution distribution = optimal_distribution(state);
  const double yield = average_yield(distribution);
  json summary;
  json outcomes = json::array();
  for (const auto &[m, p] : distribution.entries())
    outcomes.push_back({{"m", m},
                        {"p", rational_to_string(p)},
                        {"p_float", rational_to_double(p)}});
  summary["distribution"] = std::move(outcomes);
  summary["average_yield"] = yield;
  if (!out_path.empty()) {
    const ColouredDiagram diagram = canonical_diagram(state);
    const KrausProtocol protocol = kraus_distill(diagram, state);
    write_file(out_path,
               protocol_to_json("distill", state, state, 0, diagram, protocol,
                                {})
                       .dump(2) +
                   "\n");
    summary["protocol_written"] = out_path;
  }
  if (format == "text") {
    for (const auto &[m, p] : distribution.entries())
      out << "m=" << m << "  p=" << rational_to_string(p) << " ("
          << double_text(rational_to_double(p)) << ")\n";
    out << "average yield: " << double_text(yield) << " bits\n";
    if (!out_path.empty()) out << "protocol written to " << out_path << "\n";
  } else {
    emit(out, summary);
  }
  return 0;
}

int run_maxprob(const std::string &state_path, long m,
                const std::string &out_path, const std::string &format,
                std::ostream &out) {
  const SchmidtVector state = load_state(state_path);
  const MaxProbResult result = max_prob(state, m);
  json summary = {{"m", m},
                  {"p_max", rational_to_string(result.p_max)},
                  {"p_max_float", rational_to_double(result.p_max)},
                  {"r0", result.r0},
                  {"h_max", rational_to_string(result.h_max)},
                  {"target", heights_to_json(result.target.heights())}};
  if (!out_path.empty()) {
    const ColouredDiagram diagram = colour_transform(state, result.target);
    const SchmidtVector file_target = make_schmidt(result.target.heights());
    const KrausProtocol protocol = kraus_distill(diagram, state);
    write_file(out_path,
               protocol_to_json("distill", state, file_target, 0, diagram,
                                protocol, {})
                       .dump(2) +
                   "\n");
    summary["protocol_written"] = out_path;
  }
  if (format == "text") {
    out << "p_max = " << rational_to_string(result.p_max) << " ("
        << double_text(rational_to_double(result.p_max)) << ")\n"
        << "r0 = " << result.r0
        << ", h_max = " << rational_to_string(result.h_max) << "\n";
    out << "target profile:";
    for (const Rational &height : result.target.heights())
      out << " " << rational_to_string(height);
    out << "\n";
    if (!out_path.empty()) out << "protocol written to " << out_path << "\n";
  } else {
    emit(out, summary);
  }
  return 0;
}

int run_convert(const std::string &state_path, const std::string &target_path,
                const std::string &out_path, const std::string &format,
                std::ostream &out) {
  const SchmidtVector start = load_state(state_path);
  const SchmidtVector target = load_state(target_path);
  if (!nielsen_condition(start, target)) {
    if (format == "text")
      out << "convertible: no\n";
    else
      emit(out, json{{"convertible", false}});
    return 1;
  }
  const ConversionResult conversion = colour_transform_nielsen(start, target);
  const Integer q_exact = choose_Q(conversion.diagram);
  json summary = {{"convertible", true},
                  {"correction_count", conversion.corrections.size()}};
  if (q_exact.fits_slong_p())
    summary["Q"] = q_exact.get_si();
  else
    summary["Q"] = q_exact.get_str();
  if (!out_path.empty()) {
    LOCCT_CHECK(q_exact.fits_slong_p(), ResolutionTooFine,
                "outcome count " + q_exact.get_str() +
                    " does not fit a machine integer");
    const long Q = q_exact.get_si();
    const KrausProtocol protocol =
        kraus_convert(conversion.diagram, start, target, Q);
    write_file(out_path,
               protocol_to_json("convert", start, target, Q,
                                conversion.diagram, protocol,
                                conversion.corrections)
                       .dump(2) +
                   "\n");
    summary["protocol_written"] = out_path;
  }
  if (format == "text") {
    out << "convertible: yes\n"
        << "Q = " << q_exact.get_str() << ", corrections: "
        << conversion.corrections.size() << "\n";
    if (!out_path.empty()) out << "protocol written to " << out_path << "\n";
  } else {
    emit(out, summary);
  }
  return 0;
}

int run_render(const std::string &state_path, const std::string &target_path,
               const std::string &protocol_path, const std::string &format,
               const std::string &out_path, std::ostream &out) {
  LOCCT_CHECK(state_path.empty() != protocol_path.empty(), ParseError,
              "render needs exactly one of --state or --protocol");
  LOCCT_CHECK(target_path.empty() || !state_path.empty(), ParseError,
              "--target requires --state");
  std::optional<ColouredDiagram> diagram;
  if (!protocol_path.empty()) {
    diagram = load_protocol(protocol_path).diagram;
  } else {
    const SchmidtVector start = load_state(state_path);
    if (!target_path.empty()) {
      const SchmidtVector target = load_state(target_path);
      diagram = colour_transform_nielsen(start, target).diagram;
    } else {
      diagram = canonical_diagram(start);
    }
  }
  const std::string text = render(
      *diagram, format == "svg" ? RenderFormat::Svg : RenderFormat::Ascii);
  if (out_path.empty())
    out << text;
  else
    write_file(out_path, text);
  return 0;
}

bool same_protocol(const KrausProtocol &a, const KrausProtocol &b) {
  if (a.operators.size() != b.operators.size()) return false;
  if (a.outcome_labels != b.outcome_labels) return false;
  if (a.probabilities != b.probabilities) return false;
  for (std::size_t i = 0; i < a.operators.size(); ++i)
    if (a.operators[i].entries() != b.operators[i].entries()) return false;
  return true;
}

/** Re-derive every correction identity from the target coefficients. */
bool audit_corrections(const SchmidtVector &target,
                       const std::vector<CorrectionRecord> &records) {
  for (const CorrectionRecord &record : records) {
    if (record.R.size() != record.X.size() ||
        record.R.size() != record.Y.size())
      return false;
    if (record.L < 1) return false;
    const Rational big_lambda = target.lambda(record.L);
    if (big_lambda <= 0) return false;
    if (record.z < 0 || record.z > big_lambda) return false;
    Rational used = record.W;
    for (std::size_t k = 0; k < record.R.size(); ++k) {
      const Rational rho = target.lambda(record.R[k]);
      if (rho <= 0 || rho >= big_lambda) return false;
      if (record.X[k] <= 0) return false;
      if (record.Y[k] != rho * record.X[k] / (big_lambda - rho)) return false;
      used += record.Y[k];
    }
    if (record.S_back < 0 || record.W < 0) return false;
    if (record.W > 0) {
      if (record.S_back <= 0 || record.W_host < 1) return false;
      const Rational host = target.lambda(record.W_host);
      if (host <= 0 || host > big_lambda) return false;
      if (record.W * (big_lambda - host) > record.S_back * host) return false;
    }
    if (used == 0 || used > record.z) return false;
  }
  return true;
}

int run_verify(const std::string &protocol_path, double tol,
               const std::string &format, std::ostream &out) {
  const LoadedProtocol loaded = load_protocol(protocol_path);
  std::vector<std::pair<std::string, bool>> checks;
  auto add = [&checks](const std::string &name, bool ok) {
    checks.emplace_back(name, ok);
  };

  add("colour_conservation",
      verify_colour_conservation(loaded.diagram, loaded.start));

  bool heights_ok = true;
  const int span = std::max(loaded.diagram.column_count(),
                            loaded.target.size());
  for (int i = 1; i <= span; ++i) {
    const Rational height = i <= loaded.diagram.column_count()
                                ? loaded.diagram.column_height(i)
                                : Rational(0);
    if (height != loaded.target.lambda(i)) {
      heights_ok = false;
      break;
    }
  }
  add("column_heights_match_target", heights_ok);

  if (loaded.kind == "distill") {
    add("rows_distinct", verify_row_distinct(loaded.diagram));
    bool matches = false;
    try {
      matches =
          same_protocol(kraus_distill(loaded.diagram, loaded.start),
                        loaded.protocol);
    } catch (const Error &) {
      matches = false;
    }
    add("protocol_matches_diagram", matches);

    bool posts_ok = true;
    try {
      const std::vector<PostState> posts =
          post_states(loaded.protocol, loaded.start);
      Rational total = 0;
      for (std::size_t i = 0; i < posts.size(); ++i) {
        total += posts[i].probability;
        if (posts[i].probability != loaded.protocol.probabilities[i]) {
          posts_ok = false;
          break;
        }
        const long m = loaded.protocol.outcome_labels[i];
        if (m < 1) {
          posts_ok = false;
          break;
        }
        const std::vector<Rational> flat(static_cast<std::size_t>(m),
                                         Rational(1) / m);
        if (posts[i].coefficients != flat) {
          posts_ok = false;
          break;
        }
      }
      if (total != 1) posts_ok = false;
    } catch (const Error &) {
      posts_ok = false;
    }
    add("post_states_maximally_entangled", posts_ok);
  } else {
    const Integer intrinsic = choose_Q(loaded.diagram);
    add("slice_count_compatible",
        loaded.Q >= 1 && Integer(loaded.Q) % intrinsic == 0);
    add("slices_distinct",
        verify_slice_distinct(loaded.diagram).violations.empty());
    bool matches = false;
    try {
      matches = same_protocol(kraus_convert(loaded.diagram, loaded.start,
                                            loaded.target, loaded.Q),
                              loaded.protocol);
    } catch (const Error &) {
      matches = false;
    }
    add("protocol_matches_diagram", matches);
    add("corrections_consistent",
        audit_corrections(loaded.target, loaded.corrections));

    bool posts_ok = loaded.Q >= 1;
    if (posts_ok) {
      try {
        const std::vector<PostState> posts =
            post_states(loaded.protocol, loaded.start);
        if (posts.size() != static_cast<std::size_t>(loaded.Q))
          posts_ok = false;
        const Rational share = Rational(1) / loaded.Q;
        for (std::size_t i = 0; posts_ok && i < posts.size(); ++i) {
          if (posts[i].probability != share ||
              posts[i].coefficients != loaded.target.lambdas())
            posts_ok = false;
        }
      } catch (const Error &) {
        posts_ok = false;
      }
    }
    add("post_states_match_target", posts_ok);
  }

  add("completeness", verify_completeness(loaded.protocol));

  bool simulation_ok = true;
  SimulationReport report{};
  try {
    report = simulate_float(loaded.protocol, loaded.start, tol);
  } catch (const Error &) {
    simulation_ok = false;
  }
  add("simulation_within_tolerance", simulation_ok);

  const bool all_ok =
      std::all_of(checks.begin(), checks.end(),
                  [](const std::pair<std::string, bool> &check) {
                    return check.second;
                  });

  if (format == "text") {
    for (const auto &[name, ok] : checks)
      out << (ok ? "ok   " : "FAIL ") << name << "\n";
    if (simulation_ok)
      out << "max deviations: identity " << double_text(report.max_identity_dev)
          << ", probability " << double_text(report.max_probability_dev)
          << ", coefficient " << double_text(report.max_coefficient_dev)
          << "\n";
    out << (all_ok ? "verified\n" : "verification FAILED\n");
  } else {
    json check_list = json::array();
    for (const auto &[name, ok] : checks)
      check_list.push_back({{"name", name}, {"ok", ok}});
    json summary = {{"ok", all_ok}, {"checks", std::move(check_list)}};
    if (simulation_ok) {
      summary["max_identity_dev"] = report.max_identity_dev;
      summary["max_probability_dev"] = report.max_probability_dev;
      summary["max_coefficient_dev"] = report.max_coefficient_dev;
    }
    emit(out, summary);
  }
  return all_ok ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out,
        std::ostream &err) {
  CLI::App app{"Exact transformations of bipartite entangled pure states",
               "locct"};
  app.require_subcommand(1);

  CLI::App *check = app.add_subcommand(
      "check", "Decide whether a deterministic conversion exists");
  std::string check_state, check_target, check_format = "json";
  check->add_option("--state", check_state, "start state file")->required();
  check->add_option("--target", check_target, "target state file")
      ->required();
  check->add_option("--format", check_format, "output format")
      ->check(CLI::IsMember({"json", "text"}));

  CLI::App *distill = app.add_subcommand(
      "distill", "Optimal distillation into maximally entangled states");
  std::string distill_state, distill_out, distill_format = "json";
  distill->add_option("--state", distill_state, "state file")->required();
  distill->add_option("--out", distill_out, "write the protocol here");
  distill->add_option("--format", distill_format, "output format")
      ->check(CLI::IsMember({"json", "text"}));

  CLI::App *maxprob = app.add_subcommand(
      "maxprob",
      "Maximum probability of extracting an m-level maximally "
      "entangled state");
  std::string maxprob_state, maxprob_out, maxprob_format = "json";
  long maxprob_m = 0;
  maxprob->add_option("--state", maxprob_state, "state file")->required();
  maxprob->add_option("-m", maxprob_m, "number of levels")->required();
  maxprob->add_option("--out", maxprob_out, "write the protocol here");
  maxprob->add_option("--format", maxprob_format, "output format")
      ->check(CLI::IsMember({"json", "text"}));

  CLI::App *convert = app.add_subcommand(
      "convert", "Deterministic conversion between two states");
  std::string convert_state, convert_target, convert_out,
      convert_format = "json";
  convert->add_option("--state", convert_state, "start state file")
      ->required();
  convert->add_option("--target", convert_target, "target state file")
      ->required();
  convert->add_option("--out", convert_out, "write the protocol here");
  convert->add_option("--format", convert_format, "output format")
      ->check(CLI::IsMember({"json", "text"}));

  CLI::App *render = app.add_subcommand(
      "render", "Draw a state, a conversion colouring, or a stored protocol");
  std::string render_state, render_target, render_protocol, render_out,
      render_format = "ascii";
  render->add_option("--state", render_state, "state file");
  render->add_option("--target", render_target,
                     "render the conversion colouring into this state");
  render->add_option("--protocol", render_protocol,
                     "render a stored protocol's diagram");
  render->add_option("--format", render_format, "output format")
      ->check(CLI::IsMember({"ascii", "svg"}));
  render->add_option("--out", render_out, "write here instead of stdout");

  CLI::App *verify = app.add_subcommand(
      "verify", "Re-run every invariant check on a stored protocol");
  std::string verify_protocol, verify_format = "json";
  double verify_tol = 1e-12;
  verify->add_option("--protocol", verify_protocol, "protocol file")
      ->required();
  verify->add_option("--tol", verify_tol,
                     "tolerance for the floating-point cross-check");
  verify->add_option("--format", verify_format, "output format")
      ->check(CLI::IsMember({"json", "text"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError &error) {
    const int code = app.exit(error, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*check) return run_check(check_state, check_target, check_format, out);
    if (*distill)
      return run_distill(distill_state, distill_out, distill_format, out);
    if (*maxprob)
      return run_maxprob(maxprob_state, maxprob_m, maxprob_out, maxprob_format,
                         out);
    if (*convert)
      return run_convert(convert_state, convert_target, convert_out,
                         convert_format, out);
    if (*render)
      return run_render(render_state, render_target, render_protocol,
                        render_format, render_out, out);
    if (*verify)
      return run_verify(verify_protocol, verify_tol, verify_format, out);
  } catch (const InternalColouringFailure &error) {
    err << "internal error: " << error.what() << "\n";
    return 3;
  } catch (const NotConvertible &error) {
    err << "error: " << error.what() << "\n";
    return 1;
  } catch (const NotReachable &error) {
    err << "error: " << error.what() << "\n";
    return 1;
  } catch (const RowsNotDistinct &error) {
    err << "error: " << error.what() << "\n";
    return 1;
  } catch (const SlicesNotDistinct &error) {
    err << "error: " << error.what() << "\n";
    return 1;
  } catch (const ToleranceExceeded &error) {
    err << "error: " << error.what() << "\n";
    return 1;
  } catch (const Error &error) {
    err << "error: " << error.what() << "\n";
    return 2;
  } catch (const std::exception &error) {
    err << "internal error: " << error.what() << "\n";
    return 3;
  }
  return 2;
}

}  // namespace locct::cli
