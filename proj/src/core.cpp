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

#include "locct/core.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numeric>

#include "locct/errors.hpp"

namespace locct {

namespace {

bool all_digits(const std::string &s) {
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(),
                     [](unsigned char c) { return std::isdigit(c) != 0; });
}

}  // namespace

Rational parse_rational(const std::string &text) {
  // Trim surrounding whitespace.
  std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos)
    throw ParseError("empty string is not a rational");
  std::size_t last = text.find_last_not_of(" \t\r\n");
  std::string body = text.substr(first, last - first + 1);

  bool negative = false;
  if (body.front() == '+' || body.front() == '-') {
    negative = body.front() == '-';
    body.erase(body.begin());
  }
  if (body.empty()) throw ParseError("'" + text + "' is not a rational");

  Rational result;
  std::size_t slash = body.find('/');
  std::size_t dot = body.find('.');
  if (slash != std::string::npos) {
    // "num/den" with integer parts.
    std::string num = body.substr(0, slash);
    std::string den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
      throw ParseError("'" + text + "' is not a rational");
    Integer denominator(den);
    if (denominator == 0)
      throw ParseError("'" + text + "' has a zero denominator");
    result = Rational(Integer(num), denominator);
  } else if (dot != std::string::npos) {
    // Exact decimal: digits '.' digits, either side may be empty but not
    // both.  GMP does not accept decimal strings, so convert by hand:
    // "a.b" = (a * 10^k + b) / 10^k with k = len(b).
    std::string whole = body.substr(0, dot);
    std::string frac = body.substr(dot + 1);
    if (whole.empty() && frac.empty())
      throw ParseError("'" + text + "' is not a rational");
    if ((!whole.empty() && !all_digits(whole)) ||
        (!frac.empty() && !all_digits(frac)))
      throw ParseError("'" + text + "' is not a rational");
    Integer numerator = whole.empty() ? Integer(0) : Integer(whole);
    Integer scale = 1;
    for (char c : frac) {
      numerator = numerator * 10 + (c - '0');
      scale *= 10;
    }
    result = Rational(numerator, scale);
  } else {
    if (!all_digits(body)) throw ParseError("'" + text + "' is not a rational");
    result = Rational(Integer(body));
  }
  result.canonicalize();
  if (negative) result = -result;
  return result;
}

std::string rational_to_string(const Rational &value) {
  return value.get_str();
}

double rational_to_double(const Rational &value) { return value.get_d(); }

Integer common_denominator(const std::vector<Rational> &values) {
  Integer result = 1;
  for (const Rational &v : values) result = lcm(result, v.get_den());
  return result;
}

Rational canonical(const Rational &value) {
  if (value.get_den() == 0)
    throw DomainError("rational with zero denominator");
  Rational copy = value;
  copy.canonicalize();
  return copy;
}

Rational SchmidtVector::lambda(int index) const {
  if (index < 1 || index > size()) return Rational(0);
  return lambdas_[static_cast<std::size_t>(index - 1)];
}

SchmidtVector make_schmidt(const std::vector<Rational> &raw_coeffs) {
  if (raw_coeffs.empty())
    throw DomainError("a Schmidt vector needs at least one coefficient");
  std::vector<Rational> coeffs;
  coeffs.reserve(raw_coeffs.size());
  for (const Rational &c : raw_coeffs) coeffs.push_back(canonical(c));
  Rational sum = 0;
  for (const Rational &c : coeffs) {
    if (c < 0)
      throw NegativeCoefficient("coefficient " + rational_to_string(c) +
                                " is negative");
    sum += c;
  }
  if (sum != 1)
    throw SumNotOne("coefficients sum to " + rational_to_string(sum) +
                    ", not 1");

  std::vector<int> order(coeffs.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&coeffs](int a, int b) {
    return coeffs[static_cast<std::size_t>(a)] >
           coeffs[static_cast<std::size_t>(b)];
  });

  SchmidtVector result;
  for (int position : order) {
    const Rational &value = coeffs[static_cast<std::size_t>(position)];
    if (value == 0) continue;  // trailing zeros after the descending sort
    result.lambdas_.push_back(value);
    result.permutation_.push_back(position);
  }
  return result;
}

bool nielsen_condition(const SchmidtVector &start,
                       const SchmidtVector &target) {
  // Compare suffix sums right to left; the shorter vector reads as zeros.
  int length = std::max(start.size(), target.size());
  Rational start_suffix = 0;
  Rational target_suffix = 0;
  for (int p = length; p >= 1; --p) {
    start_suffix += start.lambda(p);
    target_suffix += target.lambda(p);
    if (target_suffix > start_suffix) return false;
  }
  return true;
}

OutcomeDistribution::OutcomeDistribution(std::map<long, Rational> entries) {
  Rational sum = 0;
  for (const auto &[label, raw_probability] : entries) {
    if (label < 1)
      throw DomainError("outcome label " + std::to_string(label) +
                        " is not a positive integer");
    Rational probability = canonical(raw_probability);
    if (probability < 0)
      throw NegativeCoefficient("probability of outcome " +
                                std::to_string(label) + " is negative");
    sum += probability;
    if (probability > 0) entries_.emplace(label, probability);
  }
  if (sum != 1)
    throw SumNotOne("outcome probabilities sum to " + rational_to_string(sum) +
                    ", not 1");
}

Rational OutcomeDistribution::probability_of(long m) const {
  auto it = entries_.find(m);
  return it == entries_.end() ? Rational(0) : it->second;
}

double average_yield(const OutcomeDistribution &distribution) {
  double yield = 0.0;
  for (const auto &[m, probability] : distribution.entries()) {
    if (m == 1) continue;  // log2(1) = 0
    yield += rational_to_double(probability) *
             std::log2(static_cast<double>(m));
  }
  return yield;
}

}  // namespace locct
