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

#include <cmath>
#include <map>
#include <random>
#include <vector>

#include "generators.hpp"
#include "locct/core.hpp"
#include "locct/errors.hpp"
#include "locct/rational.hpp"

using namespace locct;

TEST_CASE("parse_rational accepts fractions, integers and exact decimals") {
  CHECK(parse_rational("7/10") == Rational(7, 10));
  CHECK(parse_rational("3") == Rational(3));
  CHECK(parse_rational("0.3") == Rational(3, 10));
  CHECK(parse_rational(".5") == Rational(1, 2));
  CHECK(parse_rational("2.25") == Rational(9, 4));
  CHECK(parse_rational("-3/4") == Rational(-3, 4));
  CHECK(parse_rational("+1/3") == Rational(1, 3));
  CHECK(parse_rational("  7/10\n") == Rational(7, 10));
  CHECK(parse_rational("38/100") == Rational(19, 50));
  CHECK(parse_rational("4.") == Rational(4));
}

TEST_CASE("parse_rational rejects malformed input") {
  CHECK_THROWS_AS(parse_rational(""), ParseError);
  CHECK_THROWS_AS(parse_rational("   "), ParseError);
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("1e5"), ParseError);
  CHECK_THROWS_AS(parse_rational("abc"), ParseError);
  CHECK_THROWS_AS(parse_rational("1.2.3"), ParseError);
  CHECK_THROWS_AS(parse_rational("--1"), ParseError);
  CHECK_THROWS_AS(parse_rational("."), ParseError);
  CHECK_THROWS_AS(parse_rational("1/2/3"), ParseError);
}

TEST_CASE("rational strings round-trip in lowest terms") {
  CHECK(rational_to_string(parse_rational("38/100")) == "19/50");
  CHECK(rational_to_string(Rational(3)) == "3");
  CHECK(rational_to_string(Rational(-1, 2)) == "-1/2");
}

TEST_CASE("canonical reduces direct constructions and rejects zero "
          "denominators") {
  CHECK(canonical(Rational(38, 100)) == Rational(19, 50));
  CHECK(canonical(Rational(38, 100)).get_den() == 50);
  CHECK_THROWS_AS(canonical(Rational(1, 0)), DomainError);
}

TEST_CASE("common_denominator is the lcm of the denominators") {
  CHECK(common_denominator({Rational(1, 2), Rational(3, 10), Rational(1, 5)}) ==
        10);
  CHECK(common_denominator({Rational(1)}) == 1);
  CHECK(common_denominator({Rational(1, 4), Rational(3, 4)}) == 4);
}

TEST_CASE("make_schmidt sorts descending and records the source positions") {
  const SchmidtVector state =
      make_schmidt({Rational(1, 5), Rational(1, 2), Rational(3, 10)});
  CHECK(state.size() == 3);
  CHECK(state.lambdas() ==
        std::vector<Rational>{Rational(1, 2), Rational(3, 10), Rational(1, 5)});
  CHECK(state.source_permutation() == std::vector<int>{1, 2, 0});
}

TEST_CASE("make_schmidt drops zero coefficients") {
  const SchmidtVector state =
      make_schmidt({Rational(1, 2), Rational(0), Rational(1, 2)});
  CHECK(state.size() == 2);
  CHECK(state.lambdas() ==
        std::vector<Rational>{Rational(1, 2), Rational(1, 2)});
  CHECK(state.source_permutation() == std::vector<int>{0, 2});
}

TEST_CASE("make_schmidt keeps ties in input order") {
  const SchmidtVector state =
      make_schmidt({Rational(1, 4), Rational(1, 2), Rational(1, 4)});
  CHECK(state.source_permutation() == std::vector<int>{1, 0, 2});
}

TEST_CASE("make_schmidt validates its input") {
  CHECK_THROWS_AS(make_schmidt({}), DomainError);
  CHECK_THROWS_AS(make_schmidt({Rational(1, 2), Rational(-1, 2), Rational(1)}),
                  NegativeCoefficient);
  CHECK_THROWS_AS(make_schmidt({Rational(1, 2), Rational(1, 3)}), SumNotOne);
  CHECK_THROWS_AS(make_schmidt({Rational(1, 0)}), DomainError);
}

TEST_CASE("make_schmidt canonicalizes unreduced constructions") {
  const SchmidtVector state = make_schmidt(
      {Rational(39, 100), Rational(38, 100), Rational(23, 100)});
  CHECK(state.lambda(2) == Rational(19, 50));
  CHECK(state.lambda(2).get_den() == 50);
}

TEST_CASE("lambda is 1-based and zero beyond the last coefficient") {
  const SchmidtVector state =
      make_schmidt({Rational(7, 10), Rational(3, 10)});
  CHECK(state.lambda(1) == Rational(7, 10));
  CHECK(state.lambda(2) == Rational(3, 10));
  CHECK(state.lambda(3) == 0);
  CHECK(state.lambda(0) == 0);
  CHECK(state.lambda(-4) == 0);
}

TEST_CASE("nielsen_condition on known pairs") {
  const SchmidtVector a =
      make_schmidt({Rational(1, 2), Rational(3, 10), Rational(1, 5)});
  const SchmidtVector b = make_schmidt({Rational(1, 2), Rational(1, 2)});
  const SchmidtVector top = make_schmidt({Rational(1)});
  CHECK(nielsen_condition(a, b));
  CHECK_FALSE(nielsen_condition(b, a));
  CHECK(nielsen_condition(a, a));
  CHECK(nielsen_condition(a, top));
  CHECK(nielsen_condition(b, top));
  CHECK_FALSE(nielsen_condition(top, a));
}

TEST_CASE("nielsen_condition matches the two-level closed form") {
  // With two levels the condition collapses to lambda'_1 >= lambda_1.
  std::mt19937_64 rng(20260822);
  for (int round = 0; round < 200; ++round) {
    const SchmidtVector start = testgen::random_state(rng, 2);
    const SchmidtVector target = testgen::random_state(rng, 2);
    CHECK(nielsen_condition(start, target) ==
          (target.lambda(1) >= start.lambda(1)));
  }
}

TEST_CASE("nielsen_condition holds along generated dominated pairs") {
  std::mt19937_64 rng(7);
  for (int round = 0; round < 200; ++round) {
    const SchmidtVector start = testgen::random_state(rng);
    const SchmidtVector target = testgen::dominated_target(rng, start);
    CHECK(nielsen_condition(start, target));
  }
}

TEST_CASE("outcome distributions validate, drop zeros and look up by label") {
  const OutcomeDistribution distribution(
      {{1, Rational(2, 5)}, {2, Rational(3, 5)}, {3, Rational(0)}});
  CHECK(distribution.entries().size() == 2);
  CHECK(distribution.probability_of(1) == Rational(2, 5));
  CHECK(distribution.probability_of(2) == Rational(3, 5));
  CHECK(distribution.probability_of(3) == 0);
  CHECK(distribution.probability_of(99) == 0);

  CHECK_THROWS_AS(OutcomeDistribution({{0, Rational(1)}}), DomainError);
  CHECK_THROWS_AS(OutcomeDistribution({{1, Rational(-1)}, {2, Rational(2)}}),
                  NegativeCoefficient);
  CHECK_THROWS_AS(OutcomeDistribution({{1, Rational(1, 2)}}), SumNotOne);
}

TEST_CASE("average_yield weights log2(m) by probability") {
  const OutcomeDistribution distribution(
      {{1, Rational(1, 5)}, {2, Rational(1, 5)}, {3, Rational(3, 5)}});
  const double expected = 0.2 + 0.6 * std::log2(3.0);
  CHECK(average_yield(distribution) == doctest::Approx(expected).epsilon(1e-15));
  CHECK(average_yield(OutcomeDistribution({{1, Rational(1)}})) == 0.0);
  CHECK(average_yield(OutcomeDistribution({{2, Rational(1)}})) == 1.0);
}

TEST_CASE("generated states are valid and sorted") {
  std::mt19937_64 rng(99);
  for (int round = 0; round < 200; ++round) {
    const SchmidtVector state = testgen::random_state(rng);
    Rational sum = 0;
    for (int i = 1; i <= state.size(); ++i) {
      sum += state.lambda(i);
      CHECK(state.lambda(i) > 0);
      if (i > 1) CHECK(state.lambda(i) <= state.lambda(i - 1));
    }
    CHECK(sum == 1);
  }
}
