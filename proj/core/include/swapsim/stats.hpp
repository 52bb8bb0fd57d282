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

#ifndef SWAPSIM_STATS_HPP
#define SWAPSIM_STATS_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>

#include "swapsim/classical.hpp"
#include "swapsim/protocol.hpp"

/// Estimators over trial logs and classical rows: correlators, the CHSH
/// functional, and outcome-uniformity tests. Outcome bits map to signs as
/// bit 0 -> +1, bit 1 -> -1 throughout.
namespace swapsim::stats {

/// Raised when an estimator is asked for a value of an empty (sub)sample.
/// Deliberately an error rather than a NaN.
class EmptySampleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A correlator estimate with its binomial standard error
/// sqrt((1 - value^2) / n).
struct CorrelationEstimate {
  double value = 0.0;
  std::uint64_t n = 0;
  double std_error = 0.0;
  /// "unconditioned", a partition key ("bell:psi-"), or a classical label.
  std::string conditioning = "unconditioned";
  /// (alice_theta, bob_theta); absent for classical rows, which have a
  /// single fixed measurement direction.
  std::optional<std::pair<double, double>> settings;
};

/// Mean of alice_outcome * bob_outcome over the records matching `key`
/// (all records if unconditioned). All records must share one setting pair.
CorrelationEstimate correlator(std::span<const TrialRecord> records,
                               std::optional<PartitionKey> key);

struct ChshSettings {
  double a;
  double a_prime;
  double b;
  double b_prime;
};

/// S = E(a,b) + E(a,b') + E(a',b) - E(a',b'), with correlators stored in
/// that order. |S| <= 2 for any local hidden-variable model; quantum
/// mechanics reaches 2*sqrt(2).
struct ChshResult {
  double s_value;
  std::array<CorrelationEstimate, 4> correlators;
  ChshSettings settings;
  double std_error;  // quadrature sum of the four correlator errors

  /// How far |S| sits above the classical bound, in combined-error units.
  double violation_sigma() const;
  bool violated() const { return violation_sigma() > 0.0; }
};

/// Assembles the four key-conditioned correlators of a CHSH run (or the
/// unconditioned ones when no key is given). Records are matched to setting
/// pairs by their (reduced) angles; every cell must be non-empty.
ChshResult chsh(std::span<const TrialRecord> records,
                std::optional<PartitionKey> key,
                const ChshSettings& settings);

struct ChiSquareResult {
  double statistic;
  double p_value;
  std::array<std::uint64_t, 4> counts;
  std::uint64_t n;
};

/// Pearson chi-square of Eve's four outcome counts against the uniform
/// distribution (1/4 each), 3 degrees of freedom. All records must belong
/// to the given context.
ChiSquareResult uniformity_chi_square(std::span<const TrialRecord> records,
                                      ContextKind context);

/// Upper tail probability of the chi-square distribution.
double chi_square_p_value(double statistic, int degrees_of_freedom);

/// Correlator of the outer classical bits A1 and B4 over rows (restricted
/// to rows carrying `label` if given; the label family fixes the
/// interpretation, so conditioning is well defined on raw rows).
CorrelationEstimate classical_cross_correlation(
    std::span<const classical::ClassicalRow> rows,
    std::optional<classical::PartitionLabel> label);

}  // namespace swapsim::stats

#endif  // SWAPSIM_STATS_HPP
