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

#include "locct/distill.hpp"

#include <cmath>
#include <map>
#include <vector>

#include "locct/errors.hpp"

namespace locct {

OutcomeDistribution distribution_from_profile(const StepProfile &profile) {
  std::map<long, Rational> entries;
  for (int m = 1; m <= profile.size(); ++m) {
    Rational p = (profile.height(m) - profile.height(m + 1)) * m;
    if (p > 0) entries[m] = p;
  }
  return OutcomeDistribution(entries);
}

OutcomeDistribution optimal_distribution(const SchmidtVector &state) {
  return distribution_from_profile(profile_of(state));
}

namespace {

/** base^exp as an exact integer. */
Integer int_pow(long base, long exp) {
  Integer result;
  mpz_ui_pow_ui(result.get_mpz_t(), static_cast<unsigned long>(base),
                static_cast<unsigned long>(exp));
  return result;
}

/** log2 of a positive integer, accurate to double precision at any size. */
double log2_integer(const Integer &value) {
  long exponent = 0;
  double mantissa = mpz_get_d_2exp(&exponent, value.get_mpz_t());
  return std::log2(mantissa) + static_cast<double>(exponent);
}

}  // namespace

double swap_delta(long m_a, long m_b) {
  if (m_a < 1 || m_b < 1)
    throw DomainError("row widths must be positive integers");
  if (m_a == 1)
    throw DomainError(
        "a row of width 1 cannot shed area: the factor (m_a - 1) vanishes");
  if (m_a == m_b + 1) return 0.0;  // the two rows exchange lengths
  // Exact bracket ((m_b+1)/m_b)^m_b * ((m_a-1)/m_a)^m_a * (m_b+1)/(m_a-1),
  // kept as an integer ratio so the comparison with 1 is exact.
  Integer numerator =
      int_pow(m_b + 1, m_b) * int_pow(m_a - 1, m_a) * Integer(m_b + 1);
  Integer denominator = int_pow(m_b, m_b) * int_pow(m_a, m_a) * Integer(m_a - 1);
  if (numerator == denominator) return 0.0;
  return log2_integer(numerator) - log2_integer(denominator);
}

MaxProbResult max_prob(const SchmidtVector &state, long m) {
  if (m < 1) throw DomainError("the requested level count must be >= 1");
  long levels = state.size();
  // Suffix sums of the coefficients, evaluated lazily from the right:
  // suffix(r) = sum of lambda_i for i > m - r.
  Rational best_value;
  long best_r = 0;
  Rational suffix = 0;
  long index = levels;  // next coefficient to absorb into the suffix
  for (long r = 1; r <= m; ++r) {
    while (index > m - r) {
      suffix += state.lambda(static_cast<int>(index));
      --index;
    }
    Rational value = suffix * m / r;
    if (best_r == 0 || value < best_value) {
      best_value = value;
      best_r = r;
    }
  }
  if (best_value == 0) {
    // m exceeds the number of levels: nothing to extract; report the
    // state's own profile as the (vacuous) target.
    return MaxProbResult{Rational(0), best_r, Rational(0), profile_of(state)};
  }
  Rational h = best_value / m;
  std::vector<Rational> target;
  long width = std::max<long>(levels, m);
  target.reserve(static_cast<std::size_t>(width));
  for (long i = 1; i <= width; ++i) {
    if (i <= m - best_r)
      target.push_back(state.lambda(static_cast<int>(i)));
    else if (i <= m)
      target.push_back(h);
    else
      target.push_back(Rational(0));
  }
  return MaxProbResult{best_value, best_r, h, StepProfile(target)};
}

ColouredDiagram colour_transform(const SchmidtVector &state,
                                 const StepProfile &target) {
  StepProfile start = profile_of(state);
  if (!verify_no_downward_flow(start, target))
    throw NotReachable(
        "the target profile needs more area high up than the state holds: "
        "some suffix sum exceeds the state's");
  int columns = std::max(start.size(), target.size());
  // Per column: the top of its own-colour region, the floor of the pieces
  // pasted so far (pieces stack downward from the target ceiling), and the
  // pasted pieces in arrival order (first arrival ends up on top).
  std::vector<Rational> own_top(static_cast<std::size_t>(columns));
  std::vector<Rational> paste_floor(static_cast<std::size_t>(columns));
  std::vector<std::vector<ColourSegment>> pasted(
      static_cast<std::size_t>(columns));
  for (int c = 1; c <= columns; ++c) {
    Rational lambda = start.height(c);
    Rational height = target.height(c);
    own_top[static_cast<std::size_t>(c - 1)] = std::min(lambda, height);
    paste_floor[static_cast<std::size_t>(c - 1)] = height;
  }
  auto is_full = [&](int c) {
    return own_top[static_cast<std::size_t>(c - 1)] ==
           paste_floor[static_cast<std::size_t>(c - 1)];
  };
  // Surplus columns right to left; each surplus moves as one piece and may
  // displace destination area, which continues leftward in the same chain.
  for (int s = columns; s >= 1; --s) {
    if (start.height(s) <= target.height(s)) continue;
    int piece_colour = s;
    Rational piece_height = start.height(s) - target.height(s);
    int origin = s;
    Rational origin_bottom(-1);  // bottom of a displaced piece, for the
                                 // strictly-higher landing check
    while (piece_height > 0) {
      int d = 0;
      for (int c = columns; c >= 1; --c) {
        if (!is_full(c)) {
          d = c;
          break;
        }
      }
      LOCCT_INTERNAL_CHECK(d >= 1, "no room left for a surplus piece");
      LOCCT_INTERNAL_CHECK(d < origin,
                           "a piece would land at or right of its origin");
      Rational landing =
          paste_floor[static_cast<std::size_t>(d - 1)] - piece_height;
      if (origin_bottom >= 0)
        LOCCT_INTERNAL_CHECK(landing > origin_bottom,
                             "a displaced piece failed to land strictly "
                             "higher than its origin");
      Rational &d_own = own_top[static_cast<std::size_t>(d - 1)];
      if (landing >= d_own) {
        // Fits above the destination's own colour.
        pasted[static_cast<std::size_t>(d - 1)].push_back(
            {piece_colour, piece_height});
        paste_floor[static_cast<std::size_t>(d - 1)] = landing;
        piece_height = 0;
      } else {
        // Too long: take the slot anyway and displace the destination's
        // own colour from [landing, own top) to continue the chain.
        Rational displaced = d_own - landing;
        pasted[static_cast<std::size_t>(d - 1)].push_back(
            {piece_colour, piece_height});
        paste_floor[static_cast<std::size_t>(d - 1)] = landing;
        d_own = landing;  // column d is now exactly full
        piece_colour = d;
        piece_height = displaced;
        origin = d;
        origin_bottom = landing;
      }
    }
  }
  std::vector<std::vector<ColourSegment>> stacks;
  stacks.reserve(static_cast<std::size_t>(columns));
  for (int c = 1; c <= columns; ++c) {
    LOCCT_INTERNAL_CHECK(is_full(c), "a target column was left unfilled");
    std::vector<ColourSegment> stack;
    if (own_top[static_cast<std::size_t>(c - 1)] > 0)
      stack.push_back({c, own_top[static_cast<std::size_t>(c - 1)]});
    const auto &pieces = pasted[static_cast<std::size_t>(c - 1)];
    for (auto it = pieces.rbegin(); it != pieces.rend(); ++it)
      stack.push_back(*it);
    stacks.push_back(std::move(stack));
  }
  Integer denominator = common_denominator(state.lambdas());
  for (const auto &stack : stacks) {
    Rational boundary = 0;
    for (const ColourSegment &segment : stack) {
      boundary += segment.height;
      denominator = lcm(denominator, boundary.get_den());
    }
  }
  return ColouredDiagram(std::move(stacks), denominator);
}

}  // namespace locct
