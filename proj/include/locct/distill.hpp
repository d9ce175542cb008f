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
 * @file distill.hpp
 * @brief Optimal entanglement distillation: outcome distributions, the
 *   maximum-probability extraction of a single maximally entangled state,
 *   and the row-distinct colouring of a reshaped diagram.
 */

#pragma once

#include "locct/core.hpp"
#include "locct/diagram.hpp"
#include "locct/rational.hpp"

namespace locct {

/**
 * Outcome distribution of the optimal distillation measurement for a given
 * step profile: a maximally entangled state of m levels is obtained with
 * probability (h_m - h_{m+1}) * m, where h is the profile height (zero
 * beyond the last column). Zero-probability outcomes are omitted.
 */
OutcomeDistribution distribution_from_profile(const StepProfile &profile);

/**
 * Distribution of the optimal distillation of @p state, i.e. the
 * distribution of its own (untouched) profile — which maximizes the
 * average yield over all reachable reshapings.
 */
OutcomeDistribution optimal_distribution(const SchmidtVector &state);

/**
 * Exact change (in bits, per unit area over the row length) of the average
 * yield when one area element moves from a row of width m_a to sit on top
 * of a row of width m_b, for m_b + 1 <= m_a:
 *
 *   log2[ ((m_b+1)/m_b)^m_b * ((m_a-1)/m_a)^m_a * (m_b+1)/(m_a-1) ]
 *
 * Returns exactly 0.0 when m_a == m_b + 1 (the two rows merely exchange
 * lengths) and a strictly negative value whenever m_a > m_b + 1. The
 * bracket is evaluated in exact integer arithmetic before taking the
 * logarithm, so the sign is always correct.
 *
 * @throws DomainError if m_a == 1 (the source row would vanish) or if
 *   either argument is smaller than 1.
 */
double swap_delta(long m_a, long m_b);

/**
 * Result of the maximum-probability extraction of an @p m -level maximally
 * entangled state (the Lo--Popescu bound).
 */
struct MaxProbResult {
  /** The maximum extraction probability, m * h_max. */
  Rational p_max;
  /** The minimizing suffix length (smallest on ties), in 1..m. */
  long r0;
  /** Height of the levelled block: r0 * h_max equals the suffix sum of the
   *  last I - (m - r0) coefficients. */
  Rational h_max;
  /** The intermediate profile realizing p_max: the first m - r0
   *  coefficients kept, the next r0 levelled to h_max, zero beyond. */
  StepProfile target;
};

/**
 * Maximum probability of obtaining an m-level maximally entangled state
 * from @p state by local operations, together with the profile that
 * realizes it:
 *
 *   p_max = min over r in 1..m of (m/r) * (sum of the last coefficients
 *           from index m-r+1 onward)
 *
 * For m larger than the number of nonzero coefficients the probability is
 * zero and the returned target is the state's own profile.
 *
 * @throws DomainError if m < 1.
 */
MaxProbResult max_prob(const SchmidtVector &state, long m);

/**
 * Recolour the area of @p state into the column shape @p target so that no
 * colour appears twice at the same height (row-distinct). Surplus columns
 * are processed right to left; each surplus piece is pasted as high as
 * possible into the rightmost non-full deficit column, and any displaced
 * area continues leftward in the same fashion. Every colour ends up in at
 * most two columns.
 *
 * @throws NotReachable if some suffix sum of @p target exceeds the
 *   corresponding suffix sum of the state (area would have to flow
 *   downward).
 */
ColouredDiagram colour_transform(const SchmidtVector &state,
                                 const StepProfile &target);

}  // namespace locct
