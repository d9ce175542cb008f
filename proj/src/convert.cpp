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

#include "locct/convert.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <tuple>
#include <vector>

#include "locct/distill.hpp"
#include "locct/errors.hpp"

namespace locct {

namespace {

using Stack = std::vector<ColourSegment>;

/** One same-coloured run of a column, in relative height coordinates. */
struct RelInterval {
  int column;
  Rational host_height;
  Rational lo;
  Rational hi;
};

/**
 * Recolour the absolute range [lo, hi) of a column stack. The range must
 * lie inside a single segment of the expected colour; anything else is a
 * bug in the correction book-keeping.
 */
void recolour_range(Stack &stack, const Rational &lo, const Rational &hi,
                    int expected_colour, int new_colour) {
  LOCCT_INTERNAL_CHECK(lo < hi, "recolour range is empty");
  Rational bottom = 0;
  for (std::size_t s = 0; s < stack.size(); ++s) {
    Rational top = bottom + stack[s].height;
    if (bottom <= lo && hi <= top) {
      LOCCT_INTERNAL_CHECK(stack[s].colour == expected_colour,
                           "recolour range holds an unexpected colour");
      Stack replacement;
      if (lo > bottom) replacement.push_back({expected_colour, lo - bottom});
      replacement.push_back({new_colour, hi - lo});
      if (top > hi) replacement.push_back({expected_colour, top - hi});
      stack.erase(stack.begin() + static_cast<std::ptrdiff_t>(s));
      stack.insert(stack.begin() + static_cast<std::ptrdiff_t>(s),
                   replacement.begin(), replacement.end());
      return;
    }
    bottom = top;
  }
  LOCCT_INTERNAL_CHECK(false, "recolour range crosses a segment boundary");
}

}  // namespace

ConversionResult colour_transform_nielsen(const SchmidtVector &start,
                                          const SchmidtVector &target) {
  if (!nielsen_condition(start, target))
    throw NotConvertible(
        "a suffix sum of the target exceeds the start's: no deterministic "
        "local protocol can reach it");
  ColouredDiagram base = colour_transform(start, StepProfile(target.lambdas()));
  const int columns = base.column_count();
  std::vector<Stack> working = base.columns();
  auto height_of = [&](int c) { return target.lambda(c); };

  std::vector<CorrectionRecord> records;
  for (int L = columns; L >= 1; --L) {
    const Stack &stack = working[static_cast<std::size_t>(L - 1)];
    bool has_foreign = false;
    for (const ColourSegment &segment : stack)
      if (segment.colour != L) has_foreign = true;
    if (!has_foreign) continue;

    const Rational big_lambda = height_of(L);
    Rational z = 0;
    std::size_t first_piece = 0;
    if (!stack.empty() && stack[0].colour == L) {
      z = stack[0].height;
      first_piece = 1;
    }
    // Pieces received from other columns, bottom to top. A piece whose home
    // column gained height is the (unique, topmost) swapped-back piece; all
    // others came from columns that shed area.
    struct Piece {
      int colour;
      Rational height;
      Rational expansion;
      bool swapped_back;
    };
    std::vector<Piece> pieces;
    Rational s_back = 0;
    int back_colour = 0;
    for (std::size_t idx = first_piece; idx < stack.size(); ++idx) {
      const ColourSegment &segment = stack[idx];
      LOCCT_INTERNAL_CHECK(segment.colour != L,
                           "own colour stranded above a received piece");
      int c = segment.colour;
      if (start.lambda(c) < height_of(c)) {
        LOCCT_INTERNAL_CHECK(idx + 1 == stack.size(),
                             "swapped-back piece is not the topmost");
        s_back = segment.height;
        back_colour = c;
        pieces.push_back({c, segment.height, Rational(0), true});
      } else {
        LOCCT_INTERNAL_CHECK(start.lambda(c) > height_of(c),
                             "received a piece from an unchanged column");
        pieces.push_back({c, segment.height, Rational(0), false});
      }
    }

    // Primary corrections: each piece from a surviving column R needs a
    // companion area Y so that the combined block, at its relative
    // position, exactly mirrors a hole cut out of R.
    Rational sum_y = 0;
    Rational max_rho = 0;
    std::vector<int> rec_R;
    std::vector<Rational> rec_X;
    std::vector<Rational> rec_Y;
    for (Piece &piece : pieces) {
      if (piece.swapped_back) continue;
      Rational rho = height_of(piece.colour);
      if (rho == 0) continue;  // the colour lives only here: no conflict
      LOCCT_INTERNAL_CHECK(
          big_lambda > rho,
          "corrected column is not strictly taller than its source");
      if (rho > max_rho) max_rho = rho;
      piece.expansion = rho * piece.height / (big_lambda - rho);
      sum_y += piece.expansion;
      rec_R.push_back(piece.colour);
      rec_X.push_back(piece.height);
      rec_Y.push_back(piece.expansion);
    }
    if (max_rho > 0)
      LOCCT_INTERNAL_CHECK(
          z >= max_rho,
          "own-colour region is shorter than the tallest corrected source");

    // Secondary correction: the swapped-back piece pins its colour to the
    // top slices of L, so every other occurrence of that colour must be
    // evicted from those slices. Walk the colour's runs from the highest
    // relative position downward; gaps cost nothing, runs are cut (possibly
    // partially) until the zone [1 - (S+W)/height(L), 1) is clear.
    Rational w_total = 0;
    int w_host = 0;
    Rational w_host_height = 0;
    std::vector<std::tuple<int, Rational, Rational>> cuts;  // col, rel lo/hi
    if (s_back > 0) {
      std::vector<RelInterval> inventory;
      for (int c = 1; c <= columns; ++c) {
        if (c == L) continue;
        Rational h = height_of(c);
        if (h == 0) continue;
        Rational bottom = 0;
        for (const ColourSegment &segment :
             working[static_cast<std::size_t>(c - 1)]) {
          Rational top = bottom + segment.height;
          if (segment.colour == back_colour)
            inventory.push_back({c, h, bottom / h, top / h});
          bottom = top;
        }
      }
      std::sort(inventory.begin(), inventory.end(),
                [](const RelInterval &a, const RelInterval &b) {
                  return a.hi > b.hi;
                });
      for (std::size_t i = 0; i + 1 < inventory.size(); ++i)
        LOCCT_INTERNAL_CHECK(inventory[i + 1].hi <= inventory[i].lo,
                             "colour runs overlap at the same relative "
                             "height before correction");
      for (const RelInterval &run : inventory) {
        Rational zone_bottom = 1 - (s_back + w_total) / big_lambda;
        if (run.hi <= zone_bottom) break;
        LOCCT_INTERNAL_CHECK(run.host_height <= big_lambda,
                             "colour run lives in a column taller than the "
                             "one being corrected");
        bool cut_whole = true;
        if (run.host_height < big_lambda) {
          // A partial cut down to t clears the zone exactly when
          // t == 1 - (S + W + host*(hi - t)) / height(L).
          Rational t =
              (big_lambda - s_back - w_total - run.host_height * run.hi) /
              (big_lambda - run.host_height);
          if (t >= run.lo) {
            LOCCT_INTERNAL_CHECK(t < run.hi, "partial cut would be empty");
            cuts.emplace_back(run.column, t, run.hi);
            w_total += run.host_height * (run.hi - t);
            if (run.host_height > w_host_height) {
              w_host_height = run.host_height;
              w_host = run.column;
            }
            LOCCT_INTERNAL_CHECK(
                1 - (s_back + w_total) / big_lambda == t,
                "partial cut failed to close the conflict zone");
            cut_whole = false;
          }
        }
        if (cut_whole) {
          cuts.emplace_back(run.column, run.lo, run.hi);
          w_total += run.host_height * (run.hi - run.lo);
          if (run.host_height > w_host_height) {
            w_host_height = run.host_height;
            w_host = run.column;
          }
        }
      }
      if (w_total > 0)
        LOCCT_INTERNAL_CHECK(
            w_total * (big_lambda - w_host_height) <= s_back * w_host_height,
            "secondary correction area exceeds its bound");
    }

    Rational used = sum_y + w_total;
    LOCCT_INTERNAL_CHECK(used <= z,
                         "correction areas exceed the own-colour region");
    if (used == 0) continue;  // nothing moved; nothing to record

    // Rebuild L: the own-colour region shrinks by the donated area, every
    // piece keeps its order and grows downward by its companion area.
    for (Piece &piece : pieces)
      if (piece.swapped_back) piece.expansion = w_total;
    Stack rebuilt;
    Rational z_new = z - used;
    if (z_new > 0) rebuilt.push_back({L, z_new});
    std::vector<std::pair<Rational, Rational>> spans(pieces.size());
    Rational position = z_new;
    for (std::size_t i = 0; i < pieces.size(); ++i) {
      Rational top = position + pieces[i].height + pieces[i].expansion;
      rebuilt.push_back({pieces[i].colour, top - position});
      spans[i] = {position, top};
      position = top;
    }
    LOCCT_INTERNAL_CHECK(position == big_lambda,
                         "rebuilt column does not reach its height");
    working[static_cast<std::size_t>(L - 1)] = std::move(rebuilt);

    // Cut the mirror hole for every expanded block: same relative interval,
    // own colour of L moves in, the evicted colour already moved into L.
    for (std::size_t i = 0; i < pieces.size(); ++i) {
      const Piece &piece = pieces[i];
      if (piece.swapped_back || piece.expansion == 0) continue;
      Rational rho = height_of(piece.colour);
      Rational rel_lo = spans[i].first / big_lambda;
      Rational rel_hi = spans[i].second / big_lambda;
      LOCCT_INTERNAL_CHECK(rho * (rel_hi - rel_lo) == piece.expansion,
                           "mirror hole does not match the donated area");
      recolour_range(working[static_cast<std::size_t>(piece.colour - 1)],
                     rel_lo * rho, rel_hi * rho, piece.colour, L);
    }
    for (const auto &[column, rel_lo, rel_hi] : cuts)
      recolour_range(working[static_cast<std::size_t>(column - 1)],
                     rel_lo * height_of(column), rel_hi * height_of(column),
                     back_colour, L);

    CorrectionRecord record;
    record.L = L;
    record.R = std::move(rec_R);
    record.X = std::move(rec_X);
    record.Y = std::move(rec_Y);
    record.S_back = s_back;
    record.W = w_total;
    record.W_host = w_host;
    record.z = z;
    records.push_back(std::move(record));
  }

  Integer denominator = base.denominator();
  for (const Stack &stack : working) {
    Rational boundary = 0;
    for (const ColourSegment &segment : stack) {
      boundary += segment.height;
      denominator = lcm(denominator, boundary.get_den());
    }
  }
  ColouredDiagram result(std::move(working), denominator);
  for (int c = 1; c <= columns; ++c)
    LOCCT_INTERNAL_CHECK(result.column_height(c) == height_of(c),
                         "corrected column height drifted");
  LOCCT_INTERNAL_CHECK(verify_colour_conservation(result, start),
                       "correction failed to conserve colour areas");
  LOCCT_INTERNAL_CHECK(verify_slice_distinct(result).violations.empty(),
                       "correction left a colour sharing a slice");
  return {std::move(result), std::move(records)};
}

Integer choose_Q(const ColouredDiagram &diagram) {
  Integer q(1);
  for (int c = 1; c <= diagram.column_count(); ++c) {
    Rational height = diagram.column_height(c);
    if (height == 0) continue;
    Rational boundary = 0;
    for (const ColourSegment &segment :
         diagram.columns()[static_cast<std::size_t>(c - 1)]) {
      boundary += segment.height;
      Rational relative = boundary / height;
      q = lcm(q, relative.get_den());
    }
  }
  return q;
}

namespace {

/** Index of the first slice with positive overlap of [lo, ...): floor(lo*Q)+1. */
Integer first_slice(const Rational &lo, const Integer &Q) {
  Integer numerator = lo.get_num() * Q;
  Integer result;
  mpz_fdiv_q(result.get_mpz_t(), numerator.get_mpz_t(),
             lo.get_den().get_mpz_t());
  return result + 1;
}

/** Index of the last slice with positive overlap of [..., hi): ceil(hi*Q). */
Integer last_slice(const Rational &hi, const Integer &Q) {
  Integer numerator = hi.get_num() * Q;
  Integer result;
  mpz_cdiv_q(result.get_mpz_t(), numerator.get_mpz_t(),
             hi.get_den().get_mpz_t());
  return result;
}

}  // namespace

SliceReport verify_slice_distinct(const ColouredDiagram &diagram,
                                  const Integer &Q) {
  LOCCT_CHECK(Q >= 1, DomainError, "the slice count must be at least 1");
  constexpr std::size_t kViolationCap = 256;
  std::map<int, std::vector<RelInterval>> runs_by_colour;
  for (int c = 1; c <= diagram.column_count(); ++c) {
    Rational height = diagram.column_height(c);
    if (height == 0) continue;
    Rational bottom = 0;
    for (const ColourSegment &segment :
         diagram.columns()[static_cast<std::size_t>(c - 1)]) {
      Rational top = bottom + segment.height;
      runs_by_colour[segment.colour].push_back(
          {c, height, bottom / height, top / height});
      bottom = top;
    }
  }
  SliceReport report{Q, {}};
  for (const auto &[colour, runs] : runs_by_colour) {
    for (std::size_t i = 0; i < runs.size(); ++i) {
      for (std::size_t j = i + 1; j < runs.size(); ++j) {
        if (runs[i].column == runs[j].column) continue;
        Integer lo = std::max(first_slice(runs[i].lo, Q),
                              first_slice(runs[j].lo, Q));
        Integer hi =
            std::min(last_slice(runs[i].hi, Q), last_slice(runs[j].hi, Q));
        for (Integer q = lo;
             q <= hi && report.violations.size() < kViolationCap; ++q)
          report.violations.push_back(
              {q, colour, runs[i].column, runs[j].column});
      }
    }
  }
  return report;
}

SliceReport verify_slice_distinct(const ColouredDiagram &diagram) {
  return verify_slice_distinct(diagram, choose_Q(diagram));
}

}  // namespace locct
