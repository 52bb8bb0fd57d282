// Copyright 2026 The swapsim Authors
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

#include "swapsim/stats.hpp"

#include <boost/math/distributions/chi_squared.hpp>
#include <cmath>
#include <vector>

namespace swapsim::stats {

namespace {

double binomial_std_error(double value, std::uint64_t n) {
  const double variance = std::max(0.0, 1.0 - value * value);
  return std::sqrt(variance / static_cast<double>(n));
}

CorrelationEstimate correlate_products(const std::vector<int>& products,
                                       std::string conditioning) {
  if (products.empty()) {
    throw EmptySampleError("no records left after conditioning on " +
                           conditioning);
  }
  long long sum = 0;
  for (int p : products) sum += p;
  const auto n = static_cast<std::uint64_t>(products.size());
  const double value = static_cast<double>(sum) / static_cast<double>(n);
  return CorrelationEstimate{value, n, binomial_std_error(value, n),
                             std::move(conditioning), std::nullopt};
}

}  // namespace

CorrelationEstimate correlator(std::span<const TrialRecord> records,
                               std::optional<PartitionKey> key) {
  std::optional<std::pair<double, double>> settings;
  std::vector<int> products;
  products.reserve(records.size());
  for (const TrialRecord& r : records) {
    const std::pair<double, double> s{r.alice_setting.theta(),
                                      r.bob_setting.theta()};
    if (!settings) {
      settings = s;
    } else if (*settings != s) {
      throw std::invalid_argument(
          "correlator: records mix different setting pairs");
    }
    if (key && !(r.partition_key() == *key)) continue;
    products.push_back(r.alice_outcome * r.bob_outcome);
  }
  CorrelationEstimate est = correlate_products(
      std::move(products), key ? key->key_string() : "unconditioned");
  est.settings = settings;
  return est;
}

double ChshResult::violation_sigma() const {
  return (std::abs(s_value) - 2.0) / std_error;
}

ChshResult chsh(std::span<const TrialRecord> records,
                std::optional<PartitionKey> key,
                const ChshSettings& settings) {
  const std::array<std::pair<double, double>, 4> pairs = {{
      {reduce_angle(settings.a), reduce_angle(settings.b)},
      {reduce_angle(settings.a), reduce_angle(settings.b_prime)},
      {reduce_angle(settings.a_prime), reduce_angle(settings.b)},
      {reduce_angle(settings.a_prime), reduce_angle(settings.b_prime)},
  }};

  std::array<std::vector<TrialRecord>, 4> cells;
  for (const TrialRecord& r : records) {
    const std::pair<double, double> s{r.alice_setting.theta(),
                                      r.bob_setting.theta()};
    for (std::size_t i = 0; i < 4; ++i) {
      if (s == pairs[i]) {
        cells[i].push_back(r);
        break;
      }
    }
  }

  ChshResult result{0.0, {}, settings, 0.0};
  double error_sq = 0.0;
  for (std::size_t i = 0; i < 4; ++i) {
    if (cells[i].empty()) {
      throw EmptySampleError(
          "chsh: no records at setting pair " + std::to_string(i + 1) +
          " for " + (key ? key->key_string() : std::string("unconditioned")));
    }
    result.correlators[i] = correlator(cells[i], key);
    error_sq += result.correlators[i].std_error *
                result.correlators[i].std_error;
  }
  result.s_value = result.correlators[0].value + result.correlators[1].value +
                   result.correlators[2].value - result.correlators[3].value;
  result.std_error = std::sqrt(error_sq);
  return result;
}

ChiSquareResult uniformity_chi_square(std::span<const TrialRecord> records,
                                      ContextKind context) {
  if (records.empty()) {
    throw EmptySampleError("uniformity_chi_square: empty record list");
  }
  std::array<std::uint64_t, 4> counts{};
  for (const TrialRecord& r : records) {
    if (r.eve_context != context) {
      throw std::invalid_argument(
          "uniformity_chi_square: record from a different context");
    }
    ++counts[static_cast<std::size_t>(r.eve_outcome_index)];
  }
  const auto n = static_cast<std::uint64_t>(records.size());
  const double expected = static_cast<double>(n) / 4.0;
  double statistic = 0.0;
  for (std::uint64_t c : counts) {
    const double d = static_cast<double>(c) - expected;
    statistic += d * d / expected;
  }
  return ChiSquareResult{statistic, chi_square_p_value(statistic, 3), counts,
                         n};
}

double chi_square_p_value(double statistic, int degrees_of_freedom) {
  if (statistic < 0.0 || degrees_of_freedom < 1) {
    throw std::invalid_argument("chi_square_p_value: bad arguments");
  }
  const boost::math::chi_squared dist(degrees_of_freedom);
  return boost::math::cdf(boost::math::complement(dist, statistic));
}

CorrelationEstimate classical_cross_correlation(
    std::span<const classical::ClassicalRow> rows,
    std::optional<classical::PartitionLabel> label) {
  std::vector<int> products;
  products.reserve(rows.size());
  for (const classical::ClassicalRow& row : rows) {
    if (label &&
        classical::label_row(row, classical::interpretation_of(*label)) !=
            *label) {
      continue;
    }
    products.push_back((1 - 2 * row.a1) * (1 - 2 * row.b4));
  }
  return correlate_products(
      std::move(products),
      label ? std::string(classical::to_string(*label)) : "unconditioned");
}

}  // namespace swapsim::stats
