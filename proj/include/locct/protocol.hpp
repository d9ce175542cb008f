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
 * @file protocol.hpp
 * @brief Explicit measurement protocols: one Kraus operator per outcome,
 *   synthesized from a coloured diagram, with exact completeness and
 *   post-state verification plus an independent floating-point cross-check.
 */

#pragma once

#include <memory>
#include <vector>

#include "locct/core.hpp"
#include "locct/diagram.hpp"
#include "locct/rational.hpp"

namespace locct {

/**
 * One matrix element of a measurement operator: the squared magnitude of
 * the amplitude sending source level j to target level i. Coefficients are
 * kept squared so every verification identity stays rational.
 */
struct KrausEntry {
  int target_index = 0;
  int source_index = 0;
  Rational coeff_sq;

  friend bool operator==(const KrausEntry &, const KrausEntry &) = default;
};

/**
 * One outcome branch of a measurement. Entries are immutable and shared:
 * protocols with many identical outcomes (every slice of one piece class)
 * reference a single entry list.
 */
class KrausOperator {
 public:
  explicit KrausOperator(
      std::shared_ptr<const std::vector<KrausEntry>> entries)
      : entries_(std::move(entries)) {}

  const std::vector<KrausEntry> &entries() const { return *entries_; }
  const std::shared_ptr<const std::vector<KrausEntry>> &shared_entries()
      const {
    return entries_;
  }

 private:
  std::shared_ptr<const std::vector<KrausEntry>> entries_;
};

/**
 * A complete measurement: parallel sequences of operators, outcome labels
 * (the level count m for distillation, the slice index q for conversion)
 * and exact outcome probabilities.
 */
struct KrausProtocol {
  std::vector<KrausOperator> operators;
  std::vector<long> outcome_labels;
  std::vector<Rational> probabilities;
};

/**
 * The distillation measurement read off a row-distinct diagram: one
 * operator per maximal horizontal band of constant composition. A band of
 * height h spanning m columns yields, with probability h*m, the m-level
 * maximally entangled state; its operator maps source j_i to target i with
 * squared coefficient h / lambda_{j_i}.
 *
 * @throws RowsNotDistinct if some colour appears twice at the same height.
 * @throws DomainError if the diagram uses a colour with no coefficient.
 */
KrausProtocol kraus_distill(const ColouredDiagram &diagram,
                            const SchmidtVector &state);

/**
 * The deterministic-conversion measurement read off a slice-distinct
 * diagram cut into Q equal slices per column: operator q maps source
 * j_{q,i} (the colour of slice q in column i) to target i with squared
 * coefficient h_i / (Q * lambda_j), so every outcome has probability 1/Q
 * and post-state exactly the diagram's profile.
 *
 * @throws SlicesNotDistinct if the diagram fails the slice check or Q is
 *   not a multiple of its intrinsic slice count.
 * @throws DomainError if Q < 1 or a colour has no coefficient.
 */
KrausProtocol kraus_convert(const ColouredDiagram &diagram,
                            const SchmidtVector &start,
                            const SchmidtVector &target, long Q);

/**
 * Exact completeness: every source level's squared coefficients sum to 1
 * across all operators, and within each operator no source or target level
 * repeats (so all cross terms vanish structurally).
 */
bool verify_completeness(const KrausProtocol &protocol);

/** Outcome probability and normalized squared coefficients, sorted
 *  descending. A zero-probability outcome has empty coefficients. */
struct PostState {
  Rational probability;
  std::vector<Rational> coefficients;
};

/** Exact post-measurement states of every outcome of @p protocol applied
 *  to @p state, in operator order. */
std::vector<PostState> post_states(const KrausProtocol &protocol,
                                   const SchmidtVector &state);

/** Maximum deviations found by the floating-point cross-check. */
struct SimulationReport {
  double max_identity_dev = 0.0;
  double max_probability_dev = 0.0;
  double max_coefficient_dev = 0.0;
};

/**
 * Independent floating-point check: accumulates the operators' Gram sum as
 * dense doubles and compares it to the identity, and recomputes every
 * outcome probability and post-state coefficient, comparing against the
 * exact values.
 *
 * @throws DomainError if tol <= 0.
 * @throws ToleranceExceeded if any deviation exceeds @p tol (an empty
 *   protocol fails the identity check).
 */
SimulationReport simulate_float(const KrausProtocol &protocol,
                                const SchmidtVector &state, double tol);

}  // namespace locct
