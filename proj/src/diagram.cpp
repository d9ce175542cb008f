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

#include "locct/diagram.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "locct/errors.hpp"

namespace locct {

namespace {

/** Glyph alphabet for ascii rendering, indexed by (colour - 1) mod size. */
const std::string kAsciiGlyphs =
    "123456789abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ";

/** Fixed qualitative palette for svg rendering, cycled by colour index. */
const char *const kSvgPalette[12] = {
    "#4e79a7", "#f28e2b", "#e15759", "#76b7b2", "#59a14f", "#edc948",
    "#b07aa1", "#ff9da7", "#9c755f", "#bab0ac", "#86bcb6", "#d37295"};

/** Merge adjacent segments of equal colour; drop zero heights. */
std::vector<ColourSegment> merge_segments(
    const std::vector<ColourSegment> &stack) {
  std::vector<ColourSegment> merged;
  for (const ColourSegment &segment : stack) {
    if (segment.height == 0) continue;
    if (!merged.empty() && merged.back().colour == segment.colour) {
      merged.back().height += segment.height;
    } else {
      merged.push_back(segment);
    }
  }
  return merged;
}

/** True iff value is an integer multiple of 1/denominator. */
bool divides(const Integer &denominator, const Rational &value) {
  Rational scaled = value * Rational(denominator);
  return scaled.get_den() == 1;
}

}  // namespace

StepProfile::StepProfile(std::vector<Rational> heights)
    : heights_(std::move(heights)) {
  if (heights_.empty())
    throw DomainError("a step profile needs at least one column");
  for (Rational &height : heights_) height = canonical(height);
  Rational sum = 0;
  for (std::size_t i = 0; i < heights_.size(); ++i) {
    if (heights_[i] < 0)
      throw NegativeCoefficient("profile height " +
                                rational_to_string(heights_[i]) +
                                " is negative");
    if (i > 0 && heights_[i] > heights_[i - 1])
      throw DomainError("profile heights must be non-increasing");
    sum += heights_[i];
  }
  if (sum != 1)
    throw SumNotOne("profile heights sum to " + rational_to_string(sum) +
                    ", not 1");
}

Rational StepProfile::height(int index) const {
  if (index < 1 || index > size()) return Rational(0);
  return heights_[static_cast<std::size_t>(index - 1)];
}

StepProfile profile_of(const SchmidtVector &state) {
  return StepProfile(state.lambdas());
}

ColouredDiagram::ColouredDiagram(
    std::vector<std::vector<ColourSegment>> columns, Integer denominator)
    : denominator_(std::move(denominator)) {
  if (denominator_ < 1)
    throw DomainError("diagram denominator must be a positive integer");
  Rational total = 0;
  columns_.reserve(columns.size());
  for (std::vector<ColourSegment> &stack : columns) {
    for (ColourSegment &segment : stack)
      segment.height = canonical(segment.height);
    std::vector<ColourSegment> merged = merge_segments(stack);
    Rational boundary = 0;
    for (const ColourSegment &segment : merged) {
      if (segment.colour < 1)
        throw DomainError("segment colours are 1-based positive integers");
      if (segment.height < 0)
        throw NegativeCoefficient("segment height " +
                                  rational_to_string(segment.height) +
                                  " is negative");
      boundary += segment.height;
      if (!divides(denominator_, boundary))
        throw DomainError(
            "segment boundary " + rational_to_string(boundary) +
            " is not a multiple of 1/" + denominator_.get_str());
    }
    total += boundary;
    columns_.push_back(std::move(merged));
  }
  if (total != 1)
    throw SumNotOne("diagram area is " + rational_to_string(total) +
                    ", not 1");
}

Rational ColouredDiagram::column_height(int column) const {
  if (column < 1 || column > column_count())
    throw RegionOutOfBounds("column " + std::to_string(column) +
                            " is outside the diagram");
  Rational height = 0;
  for (const ColourSegment &segment :
       columns_[static_cast<std::size_t>(column - 1)])
    height += segment.height;
  return height;
}

std::vector<Rational> ColouredDiagram::column_heights() const {
  std::vector<Rational> heights;
  heights.reserve(columns_.size());
  for (int c = 1; c <= column_count(); ++c)
    heights.push_back(column_height(c));
  return heights;
}

ColouredDiagram canonical_diagram(const SchmidtVector &state) {
  std::vector<std::vector<ColourSegment>> columns;
  columns.reserve(static_cast<std::size_t>(state.size()));
  for (int i = 1; i <= state.size(); ++i)
    columns.push_back({ColourSegment{i, state.lambda(i)}});
  return ColouredDiagram(std::move(columns),
                         common_denominator(state.lambdas()));
}

ColouredDiagram move_area(const ColouredDiagram &diagram, const Region &src,
                          int dst_column, const Rational &dst_offset) {
  const Rational lo = canonical(src.lo);
  const Rational hi = canonical(src.hi);
  const Rational offset = canonical(dst_offset);
  if (src.column < 1 || src.column > diagram.column_count())
    throw RegionOutOfBounds("source column " + std::to_string(src.column) +
                            " is outside the diagram");
  if (dst_column < 1 || dst_column > diagram.column_count())
    throw RegionOutOfBounds("destination column " +
                            std::to_string(dst_column) +
                            " is outside the diagram");
  if (lo < 0 || lo > hi)
    throw RegionOutOfBounds("region [" + rational_to_string(lo) + ", " +
                            rational_to_string(hi) + ") is malformed");
  Rational src_height = diagram.column_height(src.column);
  if (hi > src_height)
    throw RegionOutOfBounds("region extends to " + rational_to_string(hi) +
                            ", above the column top " +
                            rational_to_string(src_height));
  std::vector<std::vector<ColourSegment>> columns = diagram.columns();
  if (lo == hi)
    return ColouredDiagram(std::move(columns), diagram.denominator());

  // Cut [lo, hi) out of the source column; everything above falls down.
  std::vector<ColourSegment> below, cut, above;
  Rational bottom = 0;
  for (const ColourSegment &segment :
       columns[static_cast<std::size_t>(src.column - 1)]) {
    Rational top = bottom + segment.height;
    Rational below_part = std::min(std::max(Rational(lo - bottom),
                                            Rational(0)),
                                   segment.height);
    Rational above_part = std::min(std::max(Rational(top - hi),
                                            Rational(0)),
                                   segment.height);
    Rational cut_part = segment.height - below_part - above_part;
    if (below_part > 0) below.push_back({segment.colour, below_part});
    if (cut_part > 0) cut.push_back({segment.colour, cut_part});
    if (above_part > 0) above.push_back({segment.colour, above_part});
    bottom = top;
  }
  std::vector<ColourSegment> &source =
      columns[static_cast<std::size_t>(src.column - 1)];
  source = std::move(below);
  source.insert(source.end(), above.begin(), above.end());

  // Paste onto the destination's free top (the only landing simple mode
  // supports); the source column has already closed its gap.
  Rational free_top = 0;
  for (const ColourSegment &segment :
       columns[static_cast<std::size_t>(dst_column - 1)])
    free_top += segment.height;
  if (offset != free_top)
    throw DestinationOccupied(
        "destination offset " + rational_to_string(offset) +
        " is not the free top " + rational_to_string(free_top) +
        " of column " + std::to_string(dst_column));
  std::vector<ColourSegment> &destination =
      columns[static_cast<std::size_t>(dst_column - 1)];
  destination.insert(destination.end(), cut.begin(), cut.end());

  Integer denominator =
      lcm(lcm(diagram.denominator(), lo.get_den()), hi.get_den());
  return ColouredDiagram(std::move(columns), denominator);
}

bool verify_row_distinct(const ColouredDiagram &diagram) {
  // Gather every segment boundary; between consecutive boundaries the set
  // of (column, colour) pairs covering a height is constant, so checking
  // one representative interval per gap is exact.
  std::set<Rational> breakpoints;
  breakpoints.insert(Rational(0));
  for (const auto &stack : diagram.columns()) {
    Rational boundary = 0;
    for (const ColourSegment &segment : stack) {
      boundary += segment.height;
      breakpoints.insert(boundary);
    }
  }
  std::vector<Rational> levels(breakpoints.begin(), breakpoints.end());
  for (std::size_t gap = 0; gap + 1 < levels.size(); ++gap) {
    const Rational &level = levels[gap];
    std::set<int> seen;
    for (const auto &stack : diagram.columns()) {
      Rational bottom = 0;
      for (const ColourSegment &segment : stack) {
        Rational top = bottom + segment.height;
        if (bottom <= level && level < top) {
          if (!seen.insert(segment.colour).second) return false;
          break;
        }
        bottom = top;
      }
    }
  }
  return true;
}

bool verify_colour_conservation(const ColouredDiagram &diagram,
                                const SchmidtVector &state) {
  std::map<int, Rational> areas;
  for (const auto &stack : diagram.columns())
    for (const ColourSegment &segment : stack)
      areas[segment.colour] += segment.height;
  for (const auto &[colour, area] : areas)
    if (area != state.lambda(colour)) return false;
  // Colours absent from the diagram must be absent from the state too.
  for (int j = 1; j <= state.size(); ++j)
    if (areas.find(j) == areas.end() && state.lambda(j) != 0) return false;
  return true;
}

bool verify_no_downward_flow(const StepProfile &start,
                             const StepProfile &target) {
  int length = std::max(start.size(), target.size());
  Rational start_suffix = 0;
  Rational target_suffix = 0;
  for (int p = length; p >= 1; --p) {
    start_suffix += start.height(p);
    target_suffix += target.height(p);
    if (target_suffix > start_suffix) return false;
  }
  return true;
}

namespace {

std::string render_ascii(const ColouredDiagram &diagram, long ascii_row_cap) {
  if (diagram.denominator() > ascii_row_cap)
    throw ResolutionTooFine("ascii rendering needs " +
                            diagram.denominator().get_str() +
                            " rows, more than the cap of " +
                            std::to_string(ascii_row_cap));
  // Row r covers heights [(r-1)/N, r/N); draw only up to the tallest column.
  long top_row = 0;
  std::vector<std::vector<long>> row_counts;  // per column: segment tops * N
  std::vector<std::vector<int>> row_colours;
  for (const auto &stack : diagram.columns()) {
    std::vector<long> tops;
    std::vector<int> colours;
    Rational boundary = 0;
    for (const ColourSegment &segment : stack) {
      boundary += segment.height;
      Rational scaled = boundary * Rational(diagram.denominator());
      tops.push_back(scaled.get_num().get_si());
      colours.push_back(segment.colour);
    }
    if (!tops.empty()) top_row = std::max(top_row, tops.back());
    row_counts.push_back(std::move(tops));
    row_colours.push_back(std::move(colours));
  }
  std::ostringstream out;
  for (long r = top_row; r >= 1; --r) {
    std::string line;
    for (std::size_t c = 0; c < row_counts.size(); ++c) {
      char glyph = ' ';
      const std::vector<long> &tops = row_counts[c];
      for (std::size_t s = 0; s < tops.size(); ++s) {
        if (tops[s] >= r) {
          int colour = row_colours[c][s];
          glyph = kAsciiGlyphs[static_cast<std::size_t>(
              (colour - 1) % static_cast<int>(kAsciiGlyphs.size()))];
          break;
        }
      }
      line.push_back(glyph);
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out << line << '\n';
  }
  return out.str();
}

std::string render_svg(const ColouredDiagram &diagram) {
  const double column_width = 100.0;
  const double height_scale = 400.0;
  double width = column_width * diagram.column_count();
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
      << "\" height=\"" << height_scale << "\" viewBox=\"0 0 " << width << " "
      << height_scale << "\">\n";
  int column = 0;
  for (const auto &stack : diagram.columns()) {
    Rational bottom = 0;
    for (const ColourSegment &segment : stack) {
      Rational top = bottom + segment.height;
      double y = (1.0 - rational_to_double(top)) * height_scale;
      double h = rational_to_double(segment.height) * height_scale;
      const char *fill = kSvgPalette[(segment.colour - 1) % 12];
      out << "  <rect x=\"" << column * column_width << "\" y=\"" << y
          << "\" width=\"" << column_width << "\" height=\"" << h
          << "\" fill=\"" << fill
          << "\" stroke=\"#202020\" stroke-width=\"0.5\"/>\n";
      bottom = top;
    }
    ++column;
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace

std::string render(const ColouredDiagram &diagram, RenderFormat format,
                   long ascii_row_cap) {
  switch (format) {
    case RenderFormat::Ascii:
      return render_ascii(diagram, ascii_row_cap);
    case RenderFormat::Svg:
      return render_svg(diagram);
  }
  throw DomainError("unknown render format");
}

}  // namespace locct
