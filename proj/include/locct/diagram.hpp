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

#pragma once

#include <string>
#include <vector>

#include "locct/core.hpp"
#include "locct/rational.hpp"

namespace locct {

/**
 * Non-increasing column heights over implicit unit-width columns, summing
 * to exactly 1.  Trailing (and only trailing) zero heights are permitted —
 * they describe columns that vanish under a transformation.
 */
class StepProfile {
 public:
  /** Validates monotonicity, non-negativity and the exact unit sum. */
  explicit StepProfile(std::vector<Rational> heights);

  const std::vector<Rational> &heights() const { return heights_; }

  /** Number of entries, including trailing zeros. */
  int size() const { return static_cast<int>(heights_.size()); }

  /** Height by 1-based index; zero beyond the profile's length. */
  Rational height(int index) const;

  bool operator==(const StepProfile &other) const {
    return heights_ == other.heights_;
  }

 private:
  std::vector<Rational> heights_;
};

/** The profile whose heights are the state's squared Schmidt coefficients. */
StepProfile profile_of(const SchmidtVector &state);

/**
 * A contiguous vertical run of one colour within a column.  Colours are
 * 1-based indices of the coefficient (equivalently, of Bob's basis vector)
 * the area originally belonged to.
 */
struct ColourSegment {
  int colour;
  Rational height;

  bool operator==(const ColourSegment &other) const {
    return colour == other.colour && height == other.height;
  }
};

/**
 * An area diagram: one stack of colour segments per unit-width column,
 * stored bottom to top, plus a denominator N such that every segment
 * boundary is an integer multiple of 1/N.
 *
 * Total area is 1.  Columns may be empty (height zero).  Adjacent segments
 * of equal colour are merged at construction, so the representation is
 * canonical and equality is structural.
 */
class ColouredDiagram {
 public:
  /**
   * Validates the stacks: positive segment heights, 1-based colours, total
   * area exactly 1, and every boundary's denominator dividing N.
   */
  ColouredDiagram(std::vector<std::vector<ColourSegment>> columns,
                  Integer denominator);

  const std::vector<std::vector<ColourSegment>> &columns() const {
    return columns_;
  }

  /** Finite resolution: all boundaries are multiples of 1/denominator(). */
  const Integer &denominator() const { return denominator_; }

  int column_count() const { return static_cast<int>(columns_.size()); }

  /** Height of a column by 1-based index. */
  Rational column_height(int column) const;

  /** All column heights, in order. */
  std::vector<Rational> column_heights() const;

  bool operator==(const ColouredDiagram &other) const {
    return columns_ == other.columns_ && denominator_ == other.denominator_;
  }

 private:
  std::vector<std::vector<ColourSegment>> columns_;
  Integer denominator_;
};

/**
 * The diagram of an untransformed state: column i is one segment of
 * colour i with height lambda_i; N is the coefficients' common denominator.
 */
ColouredDiagram canonical_diagram(const SchmidtVector &state);

/** A height interval [lo, hi) within one column (1-based index). */
struct Region {
  int column;
  Rational lo;
  Rational hi;
};

/**
 * Cut the source region out of its column and paste it on top of the
 * destination column, preserving colours exactly.
 *
 * Simple mode: the content above the cut falls down to close the gap, and
 * `dst_offset` must equal the destination column's free top after the cut
 * (raises DestinationOccupied otherwise) — pieces can only be stacked onto
 * the top of a column.  A zero-area region is an identity (but is still
 * bounds-checked).  Raises RegionOutOfBounds for invalid coordinates.
 *
 * Returns a new diagram; the input is untouched.  The denominator grows to
 * accommodate any new boundaries the cut introduces.
 */
ColouredDiagram move_area(const ColouredDiagram &diagram, const Region &src,
                          int dst_column, const Rational &dst_offset);

/**
 * True iff no colour occurs in two different columns at the same absolute
 * height.  Decided by sweeping segment boundaries, which is exact because
 * colours are constant between breakpoints.
 */
bool verify_row_distinct(const ColouredDiagram &diagram);

/**
 * True iff, for every colour j, the total area of colour j across the
 * diagram equals the state's lambda_j exactly (colours beyond the state's
 * length must not appear).
 */
bool verify_colour_conservation(const ColouredDiagram &diagram,
                                const SchmidtVector &state);

/**
 * True iff every suffix sum of the target profile is at most the
 * corresponding suffix sum of the start profile — i.e. area never has to
 * move towards lower column indices.  Agrees exactly with
 * nielsen_condition on the corresponding states.
 */
bool verify_no_downward_flow(const StepProfile &start,
                             const StepProfile &target);

enum class RenderFormat {
  Ascii,  ///< character grid, one row per 1/N of height
  Svg,    ///< standalone SVG, one rectangle per segment
};

/**
 * Render the diagram as text.
 *
 * Ascii: a grid with one character column per diagram column and one row
 * per 1/N of height, top down; colours map to a repeating glyph alphabet.
 * Raises ResolutionTooFine if N exceeds `ascii_row_cap`.
 *
 * Svg: a standalone document, 100 horizontal units per column, one <rect>
 * per segment, colours drawn from a fixed 12-colour palette cycling by
 * colour index.
 */
std::string render(const ColouredDiagram &diagram, RenderFormat format,
                   long ascii_row_cap = 512);

}  // namespace locct
