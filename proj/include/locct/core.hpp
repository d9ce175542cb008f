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

#include <map>
#include <vector>

#include "locct/rational.hpp"

namespace locct {

/**
 * The squared Schmidt coefficients of a bipartite pure state, sorted in
 * non-increasing order, all strictly positive, summing to exactly 1.
 *
 * Zero coefficients are trimmed at construction; `source_permutation()`
 * records, for each kept entry, the 0-based position it occupied in the
 * input sequence (so trimmed positions are the ones that do not appear).
 *
 * Immutable value type; equality compares the sorted coefficients only.
 */
class SchmidtVector {
 public:
  /** Sorted, strictly positive squared coefficients; sum is exactly 1. */
  const std::vector<Rational> &lambdas() const { return lambdas_; }

  /** For each kept entry, its 0-based position in the original input. */
  const std::vector<int> &source_permutation() const { return permutation_; }

  /** Number of (positive) Schmidt coefficients. */
  int size() const { return static_cast<int>(lambdas_.size()); }

  /** Coefficient by 1-based index; zero beyond the vector's length. */
  Rational lambda(int index) const;

  bool operator==(const SchmidtVector &other) const {
    return lambdas_ == other.lambdas_;
  }
  bool operator!=(const SchmidtVector &other) const {
    return !(*this == other);
  }

 private:
  friend SchmidtVector make_schmidt(const std::vector<Rational> &coeffs);
  SchmidtVector() = default;

  std::vector<Rational> lambdas_;
  std::vector<int> permutation_;
};

/**
 * Validate and normalize squared Schmidt coefficients.
 *
 * Sorts the coefficients in non-increasing order (stably, so ties keep
 * their input order), trims zeros, and records the provenance of each kept
 * entry.  Raises NegativeCoefficient if any input is negative and SumNotOne
 * if the exact sum differs from 1.
 */
SchmidtVector make_schmidt(const std::vector<Rational> &coeffs);

/**
 * Decide whether `target` is reachable from `start` deterministically.
 *
 * True iff every suffix sum of the target's coefficients is at most the
 * corresponding suffix sum of the start's, evaluated exactly; the shorter
 * vector is implicitly padded with zeros.  This is the majorization
 * criterion for deterministic conversion of pure bipartite states.
 */
bool nielsen_condition(const SchmidtVector &start, const SchmidtVector &target);

/**
 * A probability distribution over measurement outcomes, keyed by the
 * outcome's Schmidt rank m (a positive integer).  Probabilities are exact,
 * lie in [0, 1], and sum to exactly 1; zero-probability entries are
 * dropped at construction.
 */
class OutcomeDistribution {
 public:
  /** Validates the entries; raises NegativeCoefficient / SumNotOne /
   *  DomainError (labels must be >= 1). */
  explicit OutcomeDistribution(std::map<long, Rational> entries);

  const std::map<long, Rational> &entries() const { return entries_; }

  /** Probability of outcome m; exact zero if absent. */
  Rational probability_of(long m) const;

  bool operator==(const OutcomeDistribution &other) const {
    return entries_ == other.entries_;
  }

 private:
  std::map<long, Rational> entries_;
};

/**
 * Average entanglement yield  sum_m p_m * log2(m)  in ebits.
 *
 * This is the only place in the core module where rationals are converted
 * to floating point; everything upstream of the logarithm is exact.
 */
double average_yield(const OutcomeDistribution &distribution);

}  // namespace locct
