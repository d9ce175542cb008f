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

#include <stdexcept>
#include <string>

namespace locct {

/** Base class for all errors raised by this library. */
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string &message) : std::runtime_error(message) {}
};

/** A set of coefficients or probabilities does not sum to exactly 1. */
class SumNotOne : public Error {
 public:
  using Error::Error;
};

/** A coefficient or probability is negative. */
class NegativeCoefficient : public Error {
 public:
  using Error::Error;
};

/** A target step profile is not reachable from the given state. */
class NotReachable : public Error {
 public:
  using Error::Error;
};

/** A target state is not deterministically reachable (majorization fails). */
class NotConvertible : public Error {
 public:
  using Error::Error;
};

/** A region refers to coordinates outside the diagram. */
class RegionOutOfBounds : public Error {
 public:
  using Error::Error;
};

/** The destination span of an area move is not the free top of a column. */
class DestinationOccupied : public Error {
 public:
  using Error::Error;
};

/** A diagram repeats a colour within a horizontal row. */
class RowsNotDistinct : public Error {
 public:
  using Error::Error;
};

/** A diagram repeats a colour within a relative-height slice. */
class SlicesNotDistinct : public Error {
 public:
  using Error::Error;
};

/** An ascii rendering was requested at a finer resolution than supported. */
class ResolutionTooFine : public Error {
 public:
  using Error::Error;
};

/** A floating-point cross-check deviated beyond the requested tolerance. */
class ToleranceExceeded : public Error {
 public:
  using Error::Error;
};

/** An argument lies outside the mathematical domain of an operation. */
class DomainError : public Error {
 public:
  using Error::Error;
};

/** Text could not be parsed as a rational, state, or protocol document. */
class ParseError : public Error {
 public:
  using Error::Error;
};

/**
 * An internal invariant of the colouring machinery failed.
 *
 * This is a bug sentinel: it indicates a defect in this library (or memory
 * corruption), never a problem with user input.  It is thrown instead of
 * silently emitting a protocol that would not verify.
 */
class InternalColouringFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace locct

/**
 * Always-on invariant check.  Unlike assert(), it is active in release
 * builds; use it for conditions that must hold before results are handed
 * back to callers.
 */
#define LOCCT_CHECK(condition, exception_type, message) \
  do {                                                  \
    if (!(condition)) throw exception_type(message);    \
  } while (0)

/** Always-on internal bug sentinel; see InternalColouringFailure. */
#define LOCCT_INTERNAL_CHECK(condition, message)                            \
  do {                                                                      \
    if (!(condition))                                                       \
      throw ::locct::InternalColouringFailure(                              \
          std::string("internal invariant failed: ") + (message) + " (" +  \
          __FILE__ + ":" + std::to_string(__LINE__) + ")");                 \
  } while (0)
