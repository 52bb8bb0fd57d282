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

#ifndef SWAPSIM_PROTOCOL_HPP
#define SWAPSIM_PROTOCOL_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "swapsim/contexts.hpp"
#include "swapsim/qcore.hpp"
#include "swapsim/rng.hpp"

/// Delayed-choice entanglement-swapping trials with Alice, Bob and Eve as
/// logical agents. Alice records the outer particle 1, Bob the outer
/// particle 4, Eve the inner pair (2,3) in a context of her choice, either
/// before (EveFirst) or after (EveLast) the outer recordings. "Delayed" is
/// an ordering property: timestamps are logical integers, not durations.
namespace swapsim {

enum class Ordering { EveFirst, EveLast };

const char* to_string(Ordering ordering);
std::optional<Ordering> parse_ordering(const std::string& text);

/// Per-event logical clocks within one trial; strictly increasing in the
/// order the events happened.
struct Timestamps {
  int alice;
  int bob;
  int eve_choice;
  int eve_measure;

  friend bool operator==(const Timestamps&, const Timestamps&) = default;
};

/// Eve's announcement for one trial: the context she chose and which of its
/// four outcomes she found. The textual label is derived from the context
/// catalogue, so it cannot disagree with the context.
struct EveReport {
  ContextKind context;
  int outcome_index;

  const char* label() const;
};

/// A conditioning key for partitioning trials: one context plus one outcome
/// label (8 possible keys).
struct PartitionKey {
  ContextKind context;
  int outcome_index;

  const char* label() const;
  /// "bell:psi-", "product:01", ...
  std::string key_string() const;

  static std::array<PartitionKey, 8> all();
  /// Parses "bell:psi-" style strings; empty optional if malformed.
  static std::optional<PartitionKey> parse(const std::string& text);

  friend bool operator==(const PartitionKey&, const PartitionKey&) = default;
};

/// One experimental run.
struct TrialRecord {
  std::uint64_t trial_id;
  AngleSetting alice_setting;
  AngleSetting bob_setting;
  int alice_outcome;  // +1 or -1
  int bob_outcome;    // +1 or -1
  ContextKind eve_context;
  int eve_outcome_index;  // 0..3
  Ordering ordering;
  Timestamps timestamps;

  EveReport eve_report() const { return {eve_context, eve_outcome_index}; }
  PartitionKey partition_key() const {
    return {eve_context, eve_outcome_index};
  }

  friend bool operator==(const TrialRecord&, const TrialRecord&) = default;
};

/// The initial state: the product of two singlets, on particles (1,2) and
/// (3,4).
const StateVector& two_singlet_state();

/// Runs one trial: projective measurements are applied to the two-singlet
/// state in event order (EveFirst: Eve, Alice, Bob; EveLast: Alice, Bob,
/// Eve), each outcome sampled with its Born probability and the state
/// renormalized after each collapse. One uniform draw is consumed per
/// measurement, in event order.
TrialRecord run_trial(std::uint64_t trial_id, double alice_theta,
                      double bob_theta, ContextKind eve_context,
                      Ordering ordering, RngStream& rng);

/// The sub-list of records matching the key, in stable input order. The
/// eight keys partition any record list: disjoint, and their union restores
/// the input split by context.
std::vector<TrialRecord> post_select(std::span<const TrialRecord> records,
                                     PartitionKey key);

/// Exact joint probabilities over (alice outcome, bob outcome, eve outcome),
/// computed by sequential projection with no sampling.
class JointDistribution {
 public:
  double probability(int alice_outcome, int bob_outcome,
                     int eve_outcome_index) const;
  double eve_marginal(int eve_outcome_index) const;
  double ab_marginal(int alice_outcome, int bob_outcome) const;
  /// Conditional correlator E[alice * bob | eve outcome].
  double conditional_correlator(int eve_outcome_index) const;
  /// Unconditioned correlator E[alice * bob].
  double correlator() const;
  double total() const;

  friend JointDistribution joint_distribution(double, double, ContextKind,
                                              Ordering);

 private:
  // [alice: 0=+1, 1=-1][bob: same][eve outcome]
  std::array<std::array<std::array<double, 4>, 2>, 2> p_{};
};

JointDistribution joint_distribution(double alice_theta, double bob_theta,
                                     ContextKind eve_context,
                                     Ordering ordering);

/// How Eve picks her context per trial.
struct EvePolicy {
  enum class Kind { FixedBell, FixedProduct, Alternate, Bernoulli };

  Kind kind = Kind::FixedBell;
  /// Probability of choosing the Bell context (Bernoulli policy only).
  double bell_probability = 1.0;

  static EvePolicy fixed(ContextKind context);
  static EvePolicy alternate();
  static EvePolicy bernoulli(double bell_probability);

  /// Resolves the context for a trial. A Bernoulli policy consumes one
  /// uniform draw from the trial's stream; the others consume nothing.
  ContextKind choose(std::uint64_t trial_id, RngStream& rng) const;

  std::string to_string() const;
  static std::optional<EvePolicy> parse(const std::string& text);
};

/// A batch of trials. Setting pairs are assigned round-robin from
/// `settings` (trial t uses settings[t % settings.size()]), so every pair
/// receives the same trial count up to one.
struct RunPlan {
  std::uint64_t trials = 0;
  std::uint64_t master_seed = 0;
  Ordering ordering = Ordering::EveLast;
  EvePolicy policy;
  std::vector<std::pair<double, double>> settings = {{0.0, 0.0}};
  /// Worker threads. Records are emitted in trial_id order and are
  /// bit-identical for any thread count, since every trial owns stream
  /// RngStream::for_stream(master_seed, trial_id).
  int threads = 1;
};

std::vector<TrialRecord> run_trials(const RunPlan& plan);

}  // namespace swapsim

#endif  // SWAPSIM_PROTOCOL_HPP
