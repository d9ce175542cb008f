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
 * @file convert.hpp
 * @brief Deterministic conversion between entangled states: a colouring of
 *   the target shape in which no colour occupies the same relative height
 *   slice in two columns, plus the audit trail of the corrections that
 *   achieve it.
 */

#pragma once

#include <vector>

#include "locct/core.hpp"
#include "locct/diagram.hpp"
#include "locct/rational.hpp"

namespace locct {

/**
 * Audit record of the correction applied to one destination column L.
 *
 * The row-distinct colouring leaves L with a bottom region of its own
 * colour (height z), a stack of pieces received from surplus columns
 * (areas X_k taken from columns R_k), and possibly one piece swapped back
 * from another destination column (area S_back). The correction swaps an
 * extra area Y_k of L's own colour into each R_k — cutting a hole at the
 * matching relative interval — and an area W into the columns holding the
 * swapped-back piece's colour, so that no colour repeats at any relative
 * height.
 */
struct CorrectionRecord {
  /** Destination column whose content was corrected. */
  int L = 0;
  /** Source columns that received a hole, in stack order. */
  std::vector<int> R;
  /** Directly swapped areas X_k, parallel to R. */
  std::vector<Rational> X;
  /** Correction areas Y_k = h_{R_k} X_k / (h_L - h_{R_k}), parallel to R. */
  std::vector<Rational> Y;
  /** Area of the swapped-back piece at the top of L (0 if none). */
  Rational S_back = 0;
  /** Total secondary correction area cut for the swapped-back piece. */
  Rational W = 0;
  /** Tallest column among the W cut sites (0 when W = 0). */
  int W_host = 0;
  /** Own-colour height of L before the correction. */
  Rational z = 0;
};

/** A slice-distinct colouring together with its correction audit trail. */
struct ConversionResult {
  ColouredDiagram diagram;
  std::vector<CorrectionRecord> corrections;
};

/**
 * Colour the target shape so that every relative height slice holds each
 * colour in at most one column — the colouring that realizes the
 * deterministic conversion of @p start into @p target. Runs the
 * row-distinct colouring first and then corrects each destination column
 * right to left.
 *
 * @throws NotConvertible if some suffix sum of the target exceeds the
 *   start's (the conversion is impossible).
 * @throws InternalColouringFailure if any internal feasibility invariant
 *   is violated; this signals a bug, never bad input.
 */
ConversionResult colour_transform_nielsen(const SchmidtVector &start,
                                          const SchmidtVector &target);

/**
 * The smallest number of equal horizontal parts into which every column
 * can be cut so that each part is monochromatic: the least common multiple
 * of the denominators of all relative segment boundaries.
 */
Integer choose_Q(const ColouredDiagram &diagram);

/** One colour occupying slice q in two different columns. */
struct SliceViolation {
  Integer q;
  int colour = 0;
  int column_a = 0;
  int column_b = 0;
};

/** Outcome of a slice-distinctness check at a given slice count Q. */
struct SliceReport {
  Integer Q;
  std::vector<SliceViolation> violations;
};

/**
 * Check that no colour occupies the same slice in two columns, at
 * Q = choose_Q(diagram). The violation list is capped; emptiness is the
 * authoritative verdict.
 */
SliceReport verify_slice_distinct(const ColouredDiagram &diagram);

/**
 * Slice-distinctness at an explicit slice count @p Q (not necessarily a
 * multiple of choose_Q): reports every q whose slice holds the same colour
 * in two columns, including overlaps that only arise through coarse
 * slicing.
 *
 * @throws DomainError if Q < 1.
 */
SliceReport verify_slice_distinct(const ColouredDiagram &diagram,
                                  const Integer &Q);

}  // namespace locct
