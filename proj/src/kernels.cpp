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

#include "locct/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>

#include "locct/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace locct::kernels {

namespace {

/** Smallest work size for which spawning a parallel region pays off. */
constexpr long kParallelThreshold = 4096;

struct SlicedColumn {
  std::vector<Rational> tops;  // cumulative segment tops
  std::vector<int> colours;
  Rational height;
};

std::vector<SlicedColumn> index_columns(const ColouredDiagram &diagram) {
  std::vector<SlicedColumn> index;
  index.reserve(static_cast<std::size_t>(diagram.column_count()));
  for (const auto &stack : diagram.columns()) {
    SlicedColumn column;
    Rational boundary = 0;
    for (const ColourSegment &segment : stack) {
      boundary += segment.height;
      column.tops.push_back(boundary);
      column.colours.push_back(segment.colour);
    }
    column.height = boundary;
    index.push_back(std::move(column));
  }
  return index;
}

/** Colour of the piece [lo, hi) of one column: 0 empty, -1 mixed. */
int piece_colour(const SlicedColumn &column, const Rational &lo,
                 const Rational &hi) {
  if (column.height == 0) return 0;
  // First segment whose top lies strictly above lo covers the piece start;
  // the piece is monochromatic iff that segment reaches hi.
  auto first = std::upper_bound(column.tops.begin(), column.tops.end(), lo);
  if (first == column.tops.end()) return 0;
  std::size_t s = static_cast<std::size_t>(first - column.tops.begin());
  return column.tops[s] >= hi ? column.colours[s] : -1;
}

void fill_slice_rows(const std::vector<SlicedColumn> &index, long Q,
                     long q_begin, long q_end, std::vector<int> &table) {
  const std::size_t width = index.size();
  for (long q = q_begin; q < q_end; ++q) {
    for (std::size_t c = 0; c < width; ++c) {
      const SlicedColumn &column = index[c];
      Rational lo = column.height * (q - 1) / Q;
      Rational hi = column.height * q / Q;
      table[static_cast<std::size_t>(q - 1) * width + c] =
          piece_colour(column, lo, hi);
    }
  }
}

void accumulate_sums(const KrausProtocol &protocol, std::size_t begin,
                     std::size_t end, int source_count,
                     std::vector<Rational> &sums) {
  for (std::size_t n = begin; n < end; ++n) {
    for (const KrausEntry &entry : protocol.operators[n].entries()) {
      LOCCT_CHECK(
          entry.source_index >= 1 && entry.source_index <= source_count,
          DomainError, "operator entry addresses a source level outside "
                       "the declared span");
      sums[static_cast<std::size_t>(entry.source_index - 1)] +=
          entry.coeff_sq;
    }
  }
}

void accumulate_sums_float(const KrausProtocol &protocol, std::size_t begin,
                           std::size_t end, int source_count,
                           std::vector<double> &sums) {
  for (std::size_t n = begin; n < end; ++n) {
    for (const KrausEntry &entry : protocol.operators[n].entries()) {
      LOCCT_CHECK(
          entry.source_index >= 1 && entry.source_index <= source_count,
          DomainError, "operator entry addresses a source level outside "
                       "the declared span");
      sums[static_cast<std::size_t>(entry.source_index - 1)] +=
          rational_to_double(entry.coeff_sq);
    }
  }
}

double residual_of(const std::vector<double> &sums) {
  double residual = 0.0;
  for (double value : sums) residual = std::max(residual, std::abs(value - 1.0));
  return residual;
}

}  // namespace

std::vector<int> slice_colour_table_serial(const ColouredDiagram &diagram,
                                           long Q) {
  LOCCT_CHECK(Q >= 1, DomainError, "the slice count must be at least 1");
  std::vector<SlicedColumn> index = index_columns(diagram);
  std::vector<int> table(static_cast<std::size_t>(Q) * index.size(), 0);
  fill_slice_rows(index, Q, 1, Q + 1, table);
  return table;
}

std::vector<int> slice_colour_table(const ColouredDiagram &diagram, long Q) {
  LOCCT_CHECK(Q >= 1, DomainError, "the slice count must be at least 1");
#ifdef _OPENMP
  if (Q >= kParallelThreshold) {
    std::vector<SlicedColumn> index = index_columns(diagram);
    std::vector<int> table(static_cast<std::size_t>(Q) * index.size(), 0);
#pragma omp parallel
    {
      int threads = omp_get_num_threads();
      int rank = omp_get_thread_num();
      long chunk = (Q + threads - 1) / threads;
      long begin = 1 + static_cast<long>(rank) * chunk;
      long end = std::min(Q + 1, begin + chunk);
      if (begin < end) fill_slice_rows(index, Q, begin, end, table);
    }
    return table;
  }
#endif
  return slice_colour_table_serial(diagram, Q);
}

std::vector<Rational> completeness_sums_serial(const KrausProtocol &protocol,
                                               int source_count) {
  LOCCT_CHECK(source_count >= 0, DomainError,
              "the source count cannot be negative");
  std::vector<Rational> sums(static_cast<std::size_t>(source_count),
                             Rational(0));
  accumulate_sums(protocol, 0, protocol.operators.size(), source_count, sums);
  return sums;
}

std::vector<Rational> completeness_sums(const KrausProtocol &protocol,
                                        int source_count) {
  LOCCT_CHECK(source_count >= 0, DomainError,
              "the source count cannot be negative");
#ifdef _OPENMP
  if (static_cast<long>(protocol.operators.size()) >= kParallelThreshold) {
    std::vector<Rational> sums(static_cast<std::size_t>(source_count),
                               Rational(0));
    const std::size_t total = protocol.operators.size();
#pragma omp parallel
    {
      std::vector<Rational> local(static_cast<std::size_t>(source_count),
                                  Rational(0));
      int threads = omp_get_num_threads();
      int rank = omp_get_thread_num();
      std::size_t chunk = (total + threads - 1) / threads;
      std::size_t begin = static_cast<std::size_t>(rank) * chunk;
      std::size_t end = std::min(total, begin + chunk);
      if (begin < end)
        accumulate_sums(protocol, begin, end, source_count, local);
#pragma omp critical
      {
        for (std::size_t j = 0; j < local.size(); ++j) sums[j] += local[j];
      }
    }
    return sums;
  }
#endif
  return completeness_sums_serial(protocol, source_count);
}

double identity_residual_serial(const KrausProtocol &protocol,
                                int source_count) {
  LOCCT_CHECK(source_count >= 0, DomainError,
              "the source count cannot be negative");
  std::vector<double> sums(static_cast<std::size_t>(source_count), 0.0);
  accumulate_sums_float(protocol, 0, protocol.operators.size(), source_count,
                        sums);
  return residual_of(sums);
}

double identity_residual(const KrausProtocol &protocol, int source_count) {
  LOCCT_CHECK(source_count >= 0, DomainError,
              "the source count cannot be negative");
#ifdef _OPENMP
  if (static_cast<long>(protocol.operators.size()) >= kParallelThreshold) {
    std::vector<double> sums(static_cast<std::size_t>(source_count), 0.0);
    const std::size_t total = protocol.operators.size();
#pragma omp parallel
    {
      std::vector<double> local(static_cast<std::size_t>(source_count), 0.0);
      int threads = omp_get_num_threads();
      int rank = omp_get_thread_num();
      std::size_t chunk = (total + threads - 1) / threads;
      std::size_t begin = static_cast<std::size_t>(rank) * chunk;
      std::size_t end = std::min(total, begin + chunk);
      if (begin < end)
        accumulate_sums_float(protocol, begin, end, source_count, local);
#pragma omp critical
      {
        for (std::size_t j = 0; j < local.size(); ++j) sums[j] += local[j];
      }
    }
    return residual_of(sums);
  }
#endif
  return identity_residual_serial(protocol, source_count);
}

}  // namespace locct::kernels
