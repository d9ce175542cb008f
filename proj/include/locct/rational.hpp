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

#include <gmpxx.h>

#include <string>
#include <vector>

namespace locct {

/**
 * Exact rational scalar.
 *
 * Backed by GMP; always kept in canonical form (lowest terms, positive
 * denominator) by the helpers below and by GMP's own arithmetic.  All
 * library arithmetic on Rational values is exact — floating point appears
 * only at explicitly documented boundaries (yields, rendering, simulation).
 */
using Rational = mpq_class;

/** Arbitrary-precision integer, used for denominators and slice counts. */
using Integer = mpz_class;

/**
 * Parse a string as an exact rational.
 *
 * Accepted forms (optionally signed, surrounding whitespace ignored):
 *   - integers:          "3", "-12"
 *   - fractions:         "7/10", "-3/4" (denominator must be nonzero)
 *   - decimal literals:  "0.3", ".5", "2.25" (converted exactly, e.g.
 *                        "0.3" becomes 3/10 — never a binary float)
 *
 * Anything else (including exponent notation) raises ParseError.
 */
Rational parse_rational(const std::string &text);

/** Canonical "num/den" (or plain "num") representation in lowest terms. */
std::string rational_to_string(const Rational &value);

/** Nearest double; used only at documented floating-point boundaries. */
double rational_to_double(const Rational &value);

/** Least common multiple of the denominators of the given values. */
Integer common_denominator(const std::vector<Rational> &values);

/**
 * Copy of @p value in canonical form.  GMP leaves directly constructed
 * rationals like mpq_class(38, 100) unreduced, and its arithmetic and
 * comparisons silently require canonical operands — so every constructor
 * taking caller-supplied rationals normalizes through this helper.
 *
 * @throws DomainError if the denominator is zero.
 */
Rational canonical(const Rational &value);

}  // namespace locct
