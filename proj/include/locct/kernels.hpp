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
 * @file kernels.hpp
 * @brief Bulk verification sweeps, each in an OpenMP-parallel variant and
 *   a serial reference implementation kept for testing and benchmarking.
 *   The parallel variants fall back to the serial code for small inputs or
 *   when built without OpenMP, and produce identical results: rational
 *   accumulation is exact, and the float reduction is order-insensitive up
 *   to the documented tolerance.
 */

#pragma once

#include <vector>

#include "locct/diagram.hpp"
#include "locct/protocol.hpp"
#include "locct/rational.hpp"

namespace locct::kernels {

/**
 * Colour of every piece when each column is cut into Q equal slices, as a
 * row-major table indexed by [(q-1) * column_count + (column-1)]:
 * the colour if the piece is monochromatic, 0 if the column is empty
 * there, -1 if the piece straddles a colour boundary.
 *
 * @throws DomainError if Q < 1.
 */
std::vector<int> slice_colour_table(const ColouredDiagram &diagram, long Q);

/** Serial reference for slice_colour_table. */
std::vector<int> slice_colour_table_serial(const ColouredDiagram &diagram,
                                           long Q);

/**
 * Exact per-source sums of squared coefficients across all operators:
 * element j-1 is the total for source level j. A complete measurement has
 * every element equal to 1.
 *
 * @throws DomainError if an entry addresses a source outside
 *   1..source_count.
 */
std::vector<Rational> completeness_sums(const KrausProtocol &protocol,
                                        int source_count);

/** Serial reference for completeness_sums. */
std::vector<Rational> completeness_sums_serial(const KrausProtocol &protocol,
                                               int source_count);

/**
 * Maximum absolute deviation of the per-source squared-coefficient sums
 * from 1, accumulated in floating point.
 *
 * @throws DomainError if an entry addresses a source outside
 *   1..source_count.
 */
double identity_residual(const KrausProtocol &protocol, int source_count);

/** Serial reference for identity_residual. */
double identity_residual_serial(const KrausProtocol &protocol,
                                int source_count);

}  // namespace locct::kernels
