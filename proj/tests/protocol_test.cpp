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

#include <doctest.h>

#include <memory>
#include <random>
#include <vector>

#include "generators.hpp"
#include "locct/convert.hpp"
#include "locct/core.hpp"
#include "locct/diagram.hpp"
#include "locct/errors.hpp"
#include "locct/protocol.hpp"

using namespace locct;

namespace {

KrausOperator make_operator(std::vector<KrausEntry> entries) {
  return KrausOperator(
      std::make_shared<const std::vector<KrausEntry>>(std::move(entries)));
}

}  // namespace

TEST_CASE("kraus_distill reads one operator off each band") {
  const SchmidtVector state =
      make_schmidt({Rational(7, 10), Rational(3, 10)});
  const KrausProtocol protocol =
      kraus_distill(canonical_diagram(state), state);

  REQUIRE(protocol.operators.size() == 2);
  CHECK(protocol.outcome_labels == std::vector<long>{2, 1});
  CHECK(protocol.probabilities ==
        std::vector<Rational>{Rational(3, 5), Rational(2, 5)});
  CHECK(protocol.operators[0].entries() ==
        std::vector<KrausEntry>{{1, 1, Rational(3, 7)}, {2, 2, Rational(1)}});
  CHECK(protocol.operators[1].entries() ==
        std::vector<KrausEntry>{{1, 1, Rational(4, 7)}});
}

TEST_CASE("kraus_distill on a uniform state is a single identity branch") {
  const SchmidtVector state = make_schmidt({Rational(1, 2), Rational(1, 2)});
  const KrausProtocol protocol =
      kraus_distill(canonical_diagram(state), state);
  REQUIRE(protocol.operators.size() == 1);
  CHECK(protocol.outcome_labels == std::vector<long>{2});
  CHECK(protocol.probabilities == std::vector<Rational>{Rational(1)});
  CHECK(protocol.operators[0].entries() ==
        std::vector<KrausEntry>{{1, 1, Rational(1)}, {2, 2, Rational(1)}});
}

TEST_CASE("kraus_distill on a levelled diagram extracts two levels surely") {
  const SchmidtVector state =
      make_schmidt({Rational(1, 2), Rational(3, 10), Rational(1, 5)});
  const ColouredDiagram diagram = colour_transform(
      state, StepProfile({Rational(1, 2), Rational(1, 2), Rational(0)}));
  const KrausProtocol protocol = kraus_distill(diagram, state);
  REQUIRE(protocol.operators.size() == 2);
  CHECK(protocol.outcome_labels == std::vector<long>{2, 2});
  CHECK(protocol.probabilities ==
        std::vector<Rational>{Rational(3, 5), Rational(2, 5)});
  CHECK(protocol.operators[0].entries() ==
        std::vector<KrausEntry>{{1, 1, Rational(3, 5)}, {2, 2, Rational(1)}});
  CHECK(protocol.operators[1].entries() ==
        std::vector<KrausEntry>{{1, 1, Rational(2, 5)}, {2, 3, Rational(1)}});
}

TEST_CASE("kraus_distill validates its diagram") {
  const SchmidtVector uniform =
      make_schmidt({Rational(1, 2), Rational(1, 2)});
  const ColouredDiagram clash(
      {{{1, Rational(1, 2)}}, {{1, Rational(1, 2)}}}, Integer(2));
  CHECK_THROWS_AS(kraus_distill(clash, uniform), RowsNotDistinct);

  const ColouredDiagram foreign(
      {{{1, Rational(1, 2)}}, {{3, Rational(1, 2)}}}, Integer(2));
  CHECK_THROWS_AS(kraus_distill(foreign, uniform), DomainError);
}

TEST_CASE("kraus_convert replicates each slice class Q times") {
  const SchmidtVector start =
      make_schmidt({Rational(1, 2), Rational(3, 10), Rational(1, 5)});
  const SchmidtVector target = make_schmidt({Rational(1, 2), Rational(1, 2)});
  const ColouredDiagram diagram =
      colour_transform_nielsen(start, target).diagram;
  const KrausProtocol protocol = kraus_convert(diagram, start, target, 5);

  REQUIRE(protocol.operators.size() == 5);
  CHECK(protocol.outcome_labels == std::vector<long>{1, 2, 3, 4, 5});
  for (const Rational &p : protocol.probabilities) CHECK(p == Rational(1, 5));
  for (int q = 0; q < 3; ++q)
    CHECK(protocol.operators[static_cast<std::size_t>(q)].entries() ==
          std::vector<KrausEntry>{{1, 1, Rational(1, 5)},
                                  {2, 2, Rational(1, 3)}});
  for (int q = 3; q < 5; ++q)
    CHECK(protocol.operators[static_cast<std::size_t>(q)].entries() ==
          std::vector<KrausEntry>{{1, 1, Rational(1, 5)},
                                  {2, 3, Rational(1, 2)}});
  // Slices of one piece class share a single entry list.
  CHECK(protocol.operators[0].shared_entries() ==
        protocol.operators[2].shared_entries());
  CHECK(protocol.operators[3].shared_entries() ==
        protocol.operators[4].shared_entries());
  CHECK(protocol.operators[0].shared_entries() !=
        protocol.operators[4].shared_entries());
}

TEST_CASE("kraus_convert validates the slice count and the diagram") {
  const SchmidtVector start =
      make_schmidt({Rational(1, 2), Rational(3, 10), Rational(1, 5)});
  const SchmidtVector target = make_schmidt({Rational(1, 2), Rational(1, 2)});
  const ColouredDiagram diagram =
      colour_transform_nielsen(start, target).diagram;
  CHECK_THROWS_AS(kraus_convert(diagram, start, target, 0), DomainError);
  CHECK_THROWS_AS(kraus_convert(diagram, start, target, 7),
                  SlicesNotDistinct);
  CHECK_NOTHROW(kraus_convert(diagram, start, target, 10));

  // A row-distinct colouring that is not slice-distinct is rejected.
  const ColouredDiagram overlapping(
      {{{1, Rational(1, 2)}},
       {{2, Rational(1, 4)}, {3, Rational(1, 10)}},
       {{3, Rational(3, 20)}}},
      Integer(20));
  const SchmidtVector example_start =
      make_schmidt({Rational(1, 2), Rational(1, 4), Rational(1, 4)});
  const SchmidtVector example_target =
      make_schmidt({Rational(1, 2), Rational(7, 20), Rational(3, 20)});
  CHECK_THROWS_AS(
      kraus_convert(overlapping, example_start, example_target, 7),
      SlicesNotDistinct);

  // Column heights must be exactly the target coefficients.
  CHECK_THROWS_AS(kraus_convert(diagram, start, start, 5), DomainError);
}

TEST_CASE("verify_completeness accepts synthesized protocols") {
  const SchmidtVector state =
      make_schmidt({Rational(1, 2), Rational(3, 10), Rational(1, 5)});
  CHECK(verify_completeness(
      kraus_distill(canonical_diagram(state), state)));

  const SchmidtVector target = make_schmidt({Rational(1, 2), Rational(1, 2)});
  const ColouredDiagram diagram =
      colour_transform_nielsen(state, target).diagram;
  CHECK(verify_completeness(kraus_convert(diagram, state, target, 5)));
}

TEST_CASE("verify_completeness fails when probability leaks") {
  const SchmidtVector state =
      make_schmidt({Rational(7, 10), Rational(3, 10)});
  KrausProtocol protocol = kraus_distill(canonical_diagram(state), state);
  protocol.operators.pop_back();
  protocol.outcome_labels.pop_back();
  protocol.probabilities.pop_back();
  CHECK_FALSE(verify_completeness(protocol));
}

TEST_CASE("verify_completeness rejects repeated levels within an operator") {
  // Source 1 split across two targets sums to 1 but interferes.
  KrausProtocol split;
  split.operators.push_back(
      make_operator({{1, 1, Rational(1, 2)}, {2, 1, Rational(1, 2)}}));
  split.outcome_labels.push_back(1);
  split.probabilities.push_back(Rational(1));
  CHECK_FALSE(verify_completeness(split));

  // Two sources on one target likewise.
  KrausProtocol merged;
  merged.operators.push_back(
      make_operator({{1, 1, Rational(1)}, {1, 2, Rational(1)}}));
  merged.outcome_labels.push_back(1);
  merged.probabilities.push_back(Rational(1));
  CHECK_FALSE(verify_completeness(merged));
}

TEST_CASE("a conservation-breaking recolouring still distills but is "
          "incomplete") {
  // Recolour the top of column 1: rows stay distinct, areas no longer
  // match the state, and the leak shows up exactly in the completeness
  // sums.
  const SchmidtVector state =
      make_schmidt({Rational(7, 10), Rational(3, 10)});
  const ColouredDiagram mutated(
      {{{1, Rational(3, 10)}, {2, Rational(2, 5)}}, {{2, Rational(3, 10)}}},
      Integer(10));
  CHECK(verify_row_distinct(mutated));
  CHECK_FALSE(verify_colour_conservation(mutated, state));
  const KrausProtocol protocol = kraus_distill(mutated, state);
  CHECK_FALSE(verify_completeness(protocol));
}

TEST_CASE("post_states reports exact probabilities and sorted coefficients") {
  const SchmidtVector state =
      make_schmidt({Rational(7, 10), Rational(3, 10)});
  const std::vector<PostState> posts =
      post_states(kraus_distill(canonical_diagram(state), state), state);
  REQUIRE(posts.size() == 2);
  CHECK(posts[0].probability == Rational(3, 5));
  CHECK(posts[0].coefficients ==
        std::vector<Rational>{Rational(1, 2), Rational(1, 2)});
  CHECK(posts[1].probability == Rational(2, 5));
  CHECK(posts[1].coefficients == std::vector<Rational>{Rational(1)});
}

TEST_CASE("post_states of a conversion all equal the target") {
  const SchmidtVector start =
      make_schmidt({Rational(39, 100), Rational(38, 100), Rational(23, 100)});
  const SchmidtVector target =
      make_schmidt({Rational(2, 5), Rational(2, 5), Rational(1, 5)});
  const ColouredDiagram diagram =
      colour_transform_nielsen(start, target).diagram;
  const KrausProtocol protocol = kraus_convert(diagram, start, target, 20);
  const std::vector<PostState> posts = post_states(protocol, start);
  REQUIRE(posts.size() == 20);
  for (const PostState &post : posts) {
    CHECK(post.probability == Rational(1, 20));
    CHECK(post.coefficients == target.lambdas());
  }
}

TEST_CASE("post_states leaves zero-probability outcomes empty") {
  KrausProtocol protocol;
  protocol.operators.push_back(make_operator({{1, 1, Rational(1)}}));
  protocol.operators.push_back(make_operator({{2, 1, Rational(0)}}));
  protocol.outcome_labels = {1, 1};
  protocol.probabilities = {Rational(1), Rational(0)};
  const SchmidtVector state = make_schmidt({Rational(1)});
  const std::vector<PostState> posts = post_states(protocol, state);
  REQUIRE(posts.size() == 2);
  CHECK(posts[0].probability == 1);
  CHECK(posts[1].probability == 0);
  CHECK(posts[1].coefficients.empty());
}

TEST_CASE("simulate_float passes synthesized protocols at tight tolerance") {
  const SchmidtVector start =
      make_schmidt({Rational(39, 100), Rational(38, 100), Rational(23, 100)});
  const SchmidtVector target =
      make_schmidt({Rational(2, 5), Rational(2, 5), Rational(1, 5)});
  const ColouredDiagram diagram =
      colour_transform_nielsen(start, target).diagram;
  const KrausProtocol protocol = kraus_convert(diagram, start, target, 20);
  const SimulationReport report = simulate_float(protocol, start, 1e-12);
  CHECK(report.max_identity_dev <= 1e-14);
  CHECK(report.max_probability_dev <= 1e-14);
  CHECK(report.max_coefficient_dev <= 1e-14);
}

TEST_CASE("simulate_float catches a perturbed coefficient") {
  const SchmidtVector state =
      make_schmidt({Rational(7, 10), Rational(3, 10)});
  KrausProtocol protocol = kraus_distill(canonical_diagram(state), state);
  std::vector<KrausEntry> entries = protocol.operators[0].entries();
  entries[0].coeff_sq += Rational(1, 1000000);
  protocol.operators[0] = KrausOperator(
      std::make_shared<const std::vector<KrausEntry>>(std::move(entries)));
  CHECK_THROWS_AS(simulate_float(protocol, state, 1e-12),
                  ToleranceExceeded);
}

TEST_CASE("simulate_float rejects empty protocols and bad tolerances") {
  const SchmidtVector state = make_schmidt({Rational(1)});
  CHECK_THROWS_AS(simulate_float(KrausProtocol{}, state, 1e-12),
                  ToleranceExceeded);
  const KrausProtocol protocol =
      kraus_distill(canonical_diagram(state), state);
  CHECK_THROWS_AS(simulate_float(protocol, state, 0.0), DomainError);
  CHECK_THROWS_AS(simulate_float(protocol, state, -1.0), DomainError);
}

TEST_CASE("distillation protocols verify across random states") {
  std::mt19937_64 rng(606060);
  for (int round = 0; round < 80; ++round) {
    const SchmidtVector state = testgen::random_state(rng);
    const KrausProtocol protocol =
        kraus_distill(canonical_diagram(state), state);
    CHECK(verify_completeness(protocol));
    const std::vector<PostState> posts = post_states(protocol, state);
    Rational total = 0;
    for (std::size_t i = 0; i < posts.size(); ++i) {
      total += posts[i].probability;
      const long m = protocol.outcome_labels[i];
      CHECK(posts[i].probability == protocol.probabilities[i]);
      CHECK(posts[i].coefficients ==
            std::vector<Rational>(static_cast<std::size_t>(m),
                                  Rational(1) / m));
    }
    CHECK(total == 1);
    CHECK_NOTHROW(simulate_float(protocol, state, 1e-12));
  }
}
