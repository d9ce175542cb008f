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

#include "locct/protocol.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>
#include <vector>

#include "locct/convert.hpp"
#include "locct/errors.hpp"

namespace locct {

namespace {

/** Per-column cumulative boundaries and segment colours, for slicing. */
struct ColumnIndex {
  std::vector<Rational> tops;  // cumulative segment tops, last = height
  std::vector<int> colours;
};

std::vector<ColumnIndex> index_columns(const ColouredDiagram &diagram) {
  std::vector<ColumnIndex> index;
  index.reserve(static_cast<std::size_t>(diagram.column_count()));
  for (const auto &stack : diagram.columns()) {
    ColumnIndex ci;
    Rational boundary = 0;
    for (const ColourSegment &segment : stack) {
      boundary += segment.height;
      ci.tops.push_back(boundary);
      ci.colours.push_back(segment.colour);
    }
    index.push_back(std::move(ci));
  }
  return index;
}

/** Colour of the segment containing height @p level, or 0 above the top. */
int colour_at(const ColumnIndex &column, const Rational &level) {
  for (std::size_t s = 0; s < column.tops.size(); ++s)
    if (level < column.tops[s]) return column.colours[s];
  return 0;
}

Rational positive_lambda(const SchmidtVector &state, int colour) {
  Rational value = state.lambda(colour);
  LOCCT_CHECK(value > 0, DomainError,
              "diagram colour " + std::to_string(colour) +
                  " has no coefficient in the state");
  return value;
}

}  // namespace

KrausProtocol kraus_distill(const ColouredDiagram &diagram,
                            const SchmidtVector &state) {
  LOCCT_CHECK(verify_row_distinct(diagram), RowsNotDistinct,
              "a colour appears twice at the same height; the outcomes "
              "would not be orthogonal on both sides");
  std::vector<ColumnIndex> index = index_columns(diagram);
  std::set<Rational> breakpoints;
  for (const ColumnIndex &column : index)
    for (const Rational &top : column.tops) breakpoints.insert(top);
  KrausProtocol protocol;
  Rational bottom = 0;
  for (const Rational &top : breakpoints) {
    Rational h = top - bottom;
    auto entries = std::make_shared<std::vector<KrausEntry>>();
    for (int i = 1; i <= diagram.column_count(); ++i) {
      int colour = colour_at(index[static_cast<std::size_t>(i - 1)], bottom);
      if (colour == 0) continue;  // column ends below this band
      entries->push_back({i, colour, h / positive_lambda(state, colour)});
    }
    long width = static_cast<long>(entries->size());
    protocol.operators.emplace_back(std::move(entries));
    protocol.outcome_labels.push_back(width);
    protocol.probabilities.push_back(h * width);
    bottom = top;
  }
  return protocol;
}

KrausProtocol kraus_convert(const ColouredDiagram &diagram,
                            const SchmidtVector &start,
                            const SchmidtVector &target, long Q) {
  LOCCT_CHECK(Q >= 1, DomainError, "the slice count must be at least 1");
  Integer intrinsic = choose_Q(diagram);
  LOCCT_CHECK(Integer(Q) % intrinsic == 0, SlicesNotDistinct,
              "slice count " + std::to_string(Q) +
                  " is not a multiple of the diagram's intrinsic slice "
                  "count " +
                  intrinsic.get_str() +
                  "; pieces would straddle colour boundaries");
  SliceReport report = verify_slice_distinct(diagram);
  LOCCT_CHECK(report.violations.empty(), SlicesNotDistinct,
              "a colour occupies the same slice in two columns; the "
              "outcomes would not be orthogonal on both sides");
  for (int i = 1; i <= std::max(diagram.column_count(), target.size()); ++i) {
    Rational height =
        i <= diagram.column_count() ? diagram.column_height(i) : Rational(0);
    LOCCT_CHECK(height == target.lambda(i), DomainError,
                "column " + std::to_string(i) +
                    " does not match the target coefficient");
  }

  // All slices between two consecutive relative breakpoints share one
  // entry list; materialize that list once and reference it Q-many times.
  std::set<Rational> relative_breakpoints;
  relative_breakpoints.insert(Rational(1));
  std::vector<ColumnIndex> index = index_columns(diagram);
  std::vector<Rational> heights = diagram.column_heights();
  for (int c = 1; c <= diagram.column_count(); ++c) {
    const Rational &height = heights[static_cast<std::size_t>(c - 1)];
    if (height == 0) continue;
    for (const Rational &top : index[static_cast<std::size_t>(c - 1)].tops)
      relative_breakpoints.insert(top / height);
  }
  KrausProtocol protocol;
  protocol.operators.reserve(static_cast<std::size_t>(Q));
  protocol.outcome_labels.reserve(static_cast<std::size_t>(Q));
  protocol.probabilities.reserve(static_cast<std::size_t>(Q));
  Rational probability = Rational(1) / Q;
  Rational rel_bottom = 0;
  for (const Rational &rel_top : relative_breakpoints) {
    auto entries = std::make_shared<std::vector<KrausEntry>>();
    for (int i = 1; i <= diagram.column_count(); ++i) {
      const Rational &height = heights[static_cast<std::size_t>(i - 1)];
      if (height == 0) continue;
      int colour = colour_at(index[static_cast<std::size_t>(i - 1)],
                             rel_bottom * height);
      LOCCT_INTERNAL_CHECK(colour != 0, "slice misses a nonempty column");
      entries->push_back(
          {i, colour, height / (positive_lambda(start, colour) * Q)});
    }
    std::shared_ptr<const std::vector<KrausEntry>> shared = entries;
    Rational first = rel_bottom * Q + 1;
    Rational last = rel_top * Q;
    LOCCT_INTERNAL_CHECK(first.get_den() == 1 && last.get_den() == 1,
                         "slice boundaries do not align with the grid");
    long q_first = first.get_num().get_si();
    long q_last = last.get_num().get_si();
    for (long q = q_first; q <= q_last; ++q) {
      protocol.operators.emplace_back(shared);
      protocol.outcome_labels.push_back(q);
      protocol.probabilities.push_back(probability);
    }
    rel_bottom = rel_top;
  }
  LOCCT_INTERNAL_CHECK(protocol.operators.size() ==
                           static_cast<std::size_t>(Q),
                       "slice enumeration did not produce Q outcomes");
  return protocol;
}

bool verify_completeness(const KrausProtocol &protocol) {
  // Identical entry lists contribute identically: accumulate each distinct
  // list once, weighted by its multiplicity.
  std::map<const std::vector<KrausEntry> *, long> multiplicity;
  for (const KrausOperator &op : protocol.operators)
    ++multiplicity[op.shared_entries().get()];
  std::map<int, Rational> source_sums;
  for (const auto &[entries, count] : multiplicity) {
    std::set<int> targets;
    std::set<int> sources;
    for (const KrausEntry &entry : *entries) {
      if (!targets.insert(entry.target_index).second) return false;
      if (!sources.insert(entry.source_index).second) return false;
      source_sums[entry.source_index] += entry.coeff_sq * count;
    }
  }
  for (const auto &[source, sum] : source_sums)
    if (sum != 1) return false;
  return true;
}

std::vector<PostState> post_states(const KrausProtocol &protocol,
                                   const SchmidtVector &state) {
  std::vector<PostState> result;
  result.reserve(protocol.operators.size());
  for (const KrausOperator &op : protocol.operators) {
    Rational probability = 0;
    std::vector<Rational> weights;
    weights.reserve(op.entries().size());
    for (const KrausEntry &entry : op.entries()) {
      Rational weight = entry.coeff_sq * state.lambda(entry.source_index);
      probability += weight;
      weights.push_back(weight);
    }
    PostState post;
    post.probability = probability;
    if (probability > 0) {
      for (Rational &weight : weights) weight /= probability;
      std::sort(weights.begin(), weights.end(), std::greater<Rational>());
      while (!weights.empty() && weights.back() == 0) weights.pop_back();
      post.coefficients = std::move(weights);
    }
    result.push_back(std::move(post));
  }
  return result;
}

SimulationReport simulate_float(const KrausProtocol &protocol,
                                const SchmidtVector &state, double tol) {
  LOCCT_CHECK(tol > 0, DomainError, "the tolerance must be positive");
  const int levels = state.size();
  std::vector<double> gram(
      static_cast<std::size_t>(levels) * static_cast<std::size_t>(levels),
      0.0);
  std::vector<double> lambda_float(static_cast<std::size_t>(levels));
  for (int j = 1; j <= levels; ++j)
    lambda_float[static_cast<std::size_t>(j - 1)] =
        rational_to_double(state.lambda(j));
  SimulationReport report;
  // Operators sharing one entry list behave identically; check each
  // distinct list once and weight its Gram contribution by multiplicity.
  std::map<const std::vector<KrausEntry> *, long> multiplicity;
  for (const KrausOperator &op : protocol.operators)
    ++multiplicity[op.shared_entries().get()];
  for (const auto &[entry_list, count] : multiplicity) {
    const std::vector<KrausEntry> &entries = *entry_list;
    Rational exact_probability = 0;
    std::vector<Rational> exact_weights;
    exact_weights.reserve(entries.size());
    double probability = 0.0;
    std::vector<double> weights;
    weights.reserve(entries.size());
    for (const KrausEntry &entry : entries) {
      LOCCT_CHECK(entry.source_index >= 1 && entry.source_index <= levels,
                  DomainError, "operator entry addresses a missing level");
      Rational exact_weight =
          entry.coeff_sq * state.lambda(entry.source_index);
      exact_probability += exact_weight;
      exact_weights.push_back(exact_weight);
      double c = rational_to_double(entry.coeff_sq);
      double w = c * lambda_float[static_cast<std::size_t>(
                         entry.source_index - 1)];
      probability += w;
      weights.push_back(w);
    }
    for (const KrausEntry &a : entries) {
      double ca = std::sqrt(rational_to_double(a.coeff_sq));
      for (const KrausEntry &b : entries) {
        if (a.target_index != b.target_index) continue;
        double cb = std::sqrt(rational_to_double(b.coeff_sq));
        gram[static_cast<std::size_t>(a.source_index - 1) *
                 static_cast<std::size_t>(levels) +
             static_cast<std::size_t>(b.source_index - 1)] +=
            static_cast<double>(count) * ca * cb;
      }
    }
    double probability_dev =
        std::abs(probability - rational_to_double(exact_probability));
    report.max_probability_dev =
        std::max(report.max_probability_dev, probability_dev);
    if (exact_probability > 0 && probability > 0) {
      for (double &w : weights) w /= probability;
      std::sort(weights.begin(), weights.end(), std::greater<double>());
      for (Rational &w : exact_weights) w /= exact_probability;
      std::sort(exact_weights.begin(), exact_weights.end(),
                std::greater<Rational>());
      for (std::size_t k = 0; k < weights.size(); ++k) {
        double exact_value = rational_to_double(exact_weights[k]);
        report.max_coefficient_dev = std::max(
            report.max_coefficient_dev, std::abs(weights[k] - exact_value));
      }
    }
  }
  for (int j1 = 0; j1 < levels; ++j1) {
    for (int j2 = 0; j2 < levels; ++j2) {
      double expected = j1 == j2 ? 1.0 : 0.0;
      double dev = std::abs(gram[static_cast<std::size_t>(j1) *
                                     static_cast<std::size_t>(levels) +
                                 static_cast<std::size_t>(j2)] -
                            expected);
      report.max_identity_dev = std::max(report.max_identity_dev, dev);
    }
  }
  if (report.max_identity_dev > tol || report.max_probability_dev > tol ||
      report.max_coefficient_dev > tol) {
    std::ostringstream message;
    message << "floating-point cross-check deviations exceed " << tol
            << ": identity " << report.max_identity_dev << ", probability "
            << report.max_probability_dev << ", coefficients "
            << report.max_coefficient_dev;
    throw ToleranceExceeded(message.str());
  }
  return report;
}

}  // namespace locct
