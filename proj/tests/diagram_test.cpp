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

#include <random>
#include <string>
#include <vector>

#include "generators.hpp"
#include "locct/core.hpp"
#include "locct/diagram.hpp"
#include "locct/errors.hpp"

using namespace locct;

namespace {

SchmidtVector demo_state() {
  return make_schmidt({Rational(1, 2), Rational(3, 10), Rational(1, 5)});
}

}  // namespace

TEST_CASE("step profiles validate shape and sum") {
  CHECK_NOTHROW(StepProfile({Rational(1, 2), Rational(1, 2), Rational(0)}));
  CHECK_THROWS_AS(StepProfile({}), DomainError);
  CHECK_THROWS_AS(StepProfile({Rational(3, 2), Rational(-1, 2)}),
                  NegativeCoefficient);
  CHECK_THROWS_AS(StepProfile({Rational(1, 3), Rational(2, 3)}), DomainError);
  CHECK_THROWS_AS(StepProfile({Rational(1, 2), Rational(1, 3)}), SumNotOne);
  // An interior zero makes the following positive height increasing.
  CHECK_THROWS_AS(
      StepProfile({Rational(1, 2), Rational(0), Rational(1, 2)}),
      DomainError);
}

TEST_CASE("step profile heights are 1-based and zero beyond the end") {
  const StepProfile profile({Rational(7, 10), Rational(3, 10)});
  CHECK(profile.size() == 2);
  CHECK(profile.height(1) == Rational(7, 10));
  CHECK(profile.height(2) == Rational(3, 10));
  CHECK(profile.height(3) == 0);
  CHECK(profile.height(0) == 0);
}

TEST_CASE("profile_of reads the state's coefficients") {
  CHECK(profile_of(demo_state()).heights() == demo_state().lambdas());
}

TEST_CASE("coloured diagrams merge adjacent equal colours and drop zero "
          "segments") {
  const ColouredDiagram diagram(
      {{{1, Rational(1, 4)}, {1, Rational(1, 4)}, {2, Rational(0)},
        {1, Rational(1, 4)}},
       {{2, Rational(1, 4)}}},
      Integer(4));
  REQUIRE(diagram.column_count() == 2);
  CHECK(diagram.columns()[0] ==
        std::vector<ColourSegment>{{1, Rational(3, 4)}});
  CHECK(diagram.columns()[1] ==
        std::vector<ColourSegment>{{2, Rational(1, 4)}});
}

TEST_CASE("coloured diagrams validate area, colours and resolution") {
  using Columns = std::vector<std::vector<ColourSegment>>;
  CHECK_THROWS_AS(ColouredDiagram(Columns{{{1, Rational(1)}}}, Integer(0)),
                  DomainError);
  CHECK_THROWS_AS(ColouredDiagram(Columns{{{0, Rational(1)}}}, Integer(1)),
                  DomainError);
  CHECK_THROWS_AS(ColouredDiagram(Columns{{{1, Rational(-1)}, {1, Rational(2)}}},
                                  Integer(1)),
                  NegativeCoefficient);
  CHECK_THROWS_AS(ColouredDiagram(Columns{{{1, Rational(1, 2)}}}, Integer(2)),
                  SumNotOne);
  // Boundary 1/3 is not on the 1/2 grid.
  CHECK_THROWS_AS(
      ColouredDiagram(Columns{{{1, Rational(1, 3)}, {2, Rational(2, 3)}}},
                      Integer(2)),
      DomainError);
}

TEST_CASE("canonical diagrams have one segment per coefficient") {
  const ColouredDiagram diagram = canonical_diagram(demo_state());
  CHECK(diagram.column_count() == 3);
  CHECK(diagram.denominator() == 10);
  CHECK(diagram.columns()[0] ==
        std::vector<ColourSegment>{{1, Rational(1, 2)}});
  CHECK(diagram.columns()[1] ==
        std::vector<ColourSegment>{{2, Rational(3, 10)}});
  CHECK(diagram.columns()[2] ==
        std::vector<ColourSegment>{{3, Rational(1, 5)}});
  CHECK(diagram.column_heights() ==
        std::vector<Rational>{Rational(1, 2), Rational(3, 10), Rational(1, 5)});
  CHECK_THROWS_AS(diagram.column_height(0), RegionOutOfBounds);
  CHECK_THROWS_AS(diagram.column_height(4), RegionOutOfBounds);
}

TEST_CASE("move_area cuts with gravity and pastes onto the free top") {
  const SchmidtVector state =
      make_schmidt({Rational(7, 10), Rational(3, 10)});
  const ColouredDiagram diagram = canonical_diagram(state);
  const ColouredDiagram moved = move_area(
      diagram, Region{1, Rational(0), Rational(3, 10)}, 2, Rational(3, 10));
  CHECK(moved.columns()[0] ==
        std::vector<ColourSegment>{{1, Rational(2, 5)}});
  CHECK(moved.columns()[1] ==
        std::vector<ColourSegment>{{2, Rational(3, 10)}, {1, Rational(3, 10)}});
}

TEST_CASE("move_area splits segments and reassembles the remainder") {
  const ColouredDiagram diagram(
      {{{1, Rational(1, 2)}, {2, Rational(1, 2)}}}, Integer(2));
  const ColouredDiagram moved = move_area(
      diagram, Region{1, Rational(1, 4), Rational(3, 4)}, 1, Rational(1, 2));
  CHECK(moved.columns()[0] ==
        std::vector<ColourSegment>{{1, Rational(1, 4)},
                                   {2, Rational(1, 4)},
                                   {1, Rational(1, 4)},
                                   {2, Rational(1, 4)}});
  CHECK(moved.denominator() == 4);
}

TEST_CASE("move_area zero-height regions are identities") {
  const ColouredDiagram diagram = canonical_diagram(demo_state());
  const ColouredDiagram same = move_area(
      diagram, Region{2, Rational(1, 10), Rational(1, 10)}, 1, Rational(0));
  CHECK(same == diagram);
}

TEST_CASE("move_area validates regions and destinations") {
  const ColouredDiagram diagram = canonical_diagram(demo_state());
  CHECK_THROWS_AS(move_area(diagram, Region{0, Rational(0), Rational(1, 10)},
                            1, Rational(1, 2)),
                  RegionOutOfBounds);
  CHECK_THROWS_AS(move_area(diagram, Region{4, Rational(0), Rational(1, 10)},
                            1, Rational(1, 2)),
                  RegionOutOfBounds);
  CHECK_THROWS_AS(move_area(diagram, Region{1, Rational(0), Rational(1, 10)},
                            0, Rational(0)),
                  RegionOutOfBounds);
  CHECK_THROWS_AS(move_area(diagram,
                            Region{1, Rational(3, 10), Rational(1, 10)}, 2,
                            Rational(3, 10)),
                  RegionOutOfBounds);
  CHECK_THROWS_AS(move_area(diagram, Region{1, Rational(-1, 10), Rational(0)},
                            2, Rational(3, 10)),
                  RegionOutOfBounds);
  CHECK_THROWS_AS(move_area(diagram, Region{3, Rational(0), Rational(1, 4)},
                            2, Rational(3, 10)),
                  RegionOutOfBounds);
  // Landing must be exactly the destination's free top.
  CHECK_THROWS_AS(move_area(diagram, Region{1, Rational(0), Rational(1, 10)},
                            2, Rational(1, 5)),
                  DestinationOccupied);
  CHECK_THROWS_AS(move_area(diagram, Region{1, Rational(0), Rational(1, 10)},
                            2, Rational(2, 5)),
                  DestinationOccupied);
}

TEST_CASE("move_area grows the denominator to fit new boundaries") {
  const ColouredDiagram diagram = canonical_diagram(demo_state());
  const ColouredDiagram moved = move_area(
      diagram, Region{1, Rational(0), Rational(1, 3)}, 3, Rational(1, 5));
  CHECK(moved.denominator() == 30);
  CHECK(moved.column_height(1) == Rational(1, 6));
  CHECK(moved.column_height(3) == Rational(1, 5) + Rational(1, 3));
}

TEST_CASE("row distinctness sees colours repeated at a shared height") {
  CHECK(verify_row_distinct(canonical_diagram(demo_state())));
  const ColouredDiagram clash(
      {{{1, Rational(1, 2)}}, {{1, Rational(1, 2)}}}, Integer(2));
  CHECK_FALSE(verify_row_distinct(clash));
  // The same colour twice in one column is fine at different heights.
  const ColouredDiagram stacked(
      {{{1, Rational(1, 4)}, {2, Rational(1, 4)}, {1, Rational(1, 4)}},
       {{3, Rational(1, 4)}}},
      Integer(4));
  CHECK(verify_row_distinct(stacked));
  // Disjoint height ranges never clash, even with equal colours.
  const ColouredDiagram offset(
      {{{2, Rational(1, 2)}, {1, Rational(1, 4)}}, {{1, Rational(1, 4)}}},
      Integer(4));
  CHECK(verify_row_distinct(offset));
}

TEST_CASE("colour conservation compares per-colour areas with the state") {
  const SchmidtVector state = demo_state();
  const ColouredDiagram diagram = canonical_diagram(state);
  CHECK(verify_colour_conservation(diagram, state));
  // Moving area around never changes the per-colour totals.
  const ColouredDiagram moved = move_area(
      diagram, Region{1, Rational(2, 5), Rational(1, 2)}, 3, Rational(1, 5));
  CHECK(verify_colour_conservation(moved, state));
  // A diagram of the wrong colour multiset fails.
  const ColouredDiagram wrong(
      {{{1, Rational(1, 2)}}, {{2, Rational(1, 2)}}}, Integer(2));
  CHECK_FALSE(verify_colour_conservation(wrong, state));
  // A colour without a coefficient must not appear.
  const ColouredDiagram extra(
      {{{1, Rational(1, 2)}}, {{4, Rational(1, 2)}}}, Integer(2));
  CHECK_FALSE(verify_colour_conservation(extra, demo_state()));
}

TEST_CASE("downward-flow check equals the conversion condition on states") {
  std::mt19937_64 rng(1234);
  for (int round = 0; round < 200; ++round) {
    const SchmidtVector start = testgen::random_state(rng);
    const SchmidtVector target = testgen::random_state(rng);
    const int span = std::max(start.size(), target.size());
    std::vector<Rational> start_heights, target_heights;
    for (int i = 1; i <= span; ++i) {
      start_heights.push_back(start.lambda(i));
      target_heights.push_back(target.lambda(i));
    }
    CHECK(verify_no_downward_flow(StepProfile(start_heights),
                                  StepProfile(target_heights)) ==
          nielsen_condition(start, target));
  }
}

TEST_CASE("ascii rendering draws one row per grid unit, top down") {
  const ColouredDiagram diagram =
      canonical_diagram(make_schmidt({Rational(7, 10), Rational(3, 10)}));
  CHECK(render(diagram, RenderFormat::Ascii) ==
        "1\n1\n1\n1\n12\n12\n12\n");
}

TEST_CASE("ascii rendering cycles glyphs past colour 9") {
  const ColouredDiagram diagram({{{10, Rational(1)}}}, Integer(1));
  CHECK(render(diagram, RenderFormat::Ascii) == "a\n");
}

TEST_CASE("ascii rendering refuses resolutions beyond the row cap") {
  const ColouredDiagram fine = canonical_diagram(
      make_schmidt({Rational(999, 1000), Rational(1, 1000)}));
  CHECK_THROWS_AS(render(fine, RenderFormat::Ascii), ResolutionTooFine);
  CHECK_NOTHROW(render(fine, RenderFormat::Ascii, 1000));
}

TEST_CASE("svg rendering emits one rectangle per segment") {
  const ColouredDiagram diagram = canonical_diagram(demo_state());
  const std::string svg = render(diagram, RenderFormat::Svg);
  CHECK(svg.find("<svg") == 0);
  std::size_t rects = 0;
  for (std::size_t pos = svg.find("<rect"); pos != std::string::npos;
       pos = svg.find("<rect", pos + 1))
    ++rects;
  CHECK(rects == 3);
  CHECK(svg.find("</svg>") != std::string::npos);
}
