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

#include "swapsim/protocol.hpp"

#include <cmath>
#include <stdexcept>
#include <thread>

namespace swapsim {

namespace {

struct SingleMeasurement {
  int outcome;  // +1 or -1
  RawVector collapsed;
};

double born_probability(const RawVector& projected) {
  return squared_norm(projected);
}

RawVector renormalized(const RawVector& v) {
  const double n2 = squared_norm(v);
  if (!(n2 > 1e-300)) {
    throw std::logic_error(
        "collapse onto a zero-probability branch; this indicates a bug");
  }
  RawVector out = v;
  const double inv = 1.0 / std::sqrt(n2);
  for (auto& a : out) a *= inv;
  return out;
}

SingleMeasurement measure_single(const RawVector& state, int particle,
                                 double theta, RngStream& rng) {
  const AngleBasis basis = angle_basis(theta);
  const RawVector plus = apply_single_projector(basis.plus, particle, state);
  const double p_plus = born_probability(plus);
  if (rng.uniform01() < p_plus) {
    return {+1, renormalized(plus)};
  }
  return {-1, renormalized(
                  apply_single_projector(basis.minus, particle, state))};
}

struct PairMeasurement {
  int outcome_index;
  RawVector collapsed;
};

PairMeasurement measure_pair(const RawVector& state, const Context& context,
                             RngStream& rng) {
  std::array<RawVector, 4> projected;
  std::array<double, 4> probs{};
  for (int k = 0; k < 4; ++k) {
    projected[static_cast<std::size_t>(k)] =
        apply_pair_projector(context, k, state);
    probs[static_cast<std::size_t>(k)] =
        born_probability(projected[static_cast<std::size_t>(k)]);
  }
  const int k = rng.sample4(probs);
  return {k, renormalized(projected[static_cast<std::size_t>(k)])};
}

int sign_slot(int outcome) { return outcome > 0 ? 0 : 1; }

}  // namespace

const char* to_string(Ordering ordering) {
  return ordering == Ordering::EveFirst ? "eve_first" : "eve_last";
}

std::optional<Ordering> parse_ordering(const std::string& text) {
  if (text == "eve_first") return Ordering::EveFirst;
  if (text == "eve_last") return Ordering::EveLast;
  return std::nullopt;
}

const char* EveReport::label() const {
  return context_outcomes(context)
      .labels[static_cast<std::size_t>(outcome_index)];
}

const char* PartitionKey::label() const {
  return context_outcomes(context)
      .labels[static_cast<std::size_t>(outcome_index)];
}

std::string PartitionKey::key_string() const {
  return std::string(to_string(context)) + ":" + label();
}

std::array<PartitionKey, 8> PartitionKey::all() {
  std::array<PartitionKey, 8> keys{};
  for (int k = 0; k < 4; ++k) {
    keys[static_cast<std::size_t>(k)] = {ContextKind::Bell, k};
    keys[static_cast<std::size_t>(4 + k)] = {ContextKind::Product, k};
  }
  return keys;
}

std::optional<PartitionKey> PartitionKey::parse(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) return std::nullopt;
  const std::string ctx = text.substr(0, colon);
  const std::string label = text.substr(colon + 1);
  ContextKind kind;
  if (ctx == "bell") {
    kind = ContextKind::Bell;
  } else if (ctx == "product") {
    kind = ContextKind::Product;
  } else {
    return std::nullopt;
  }
  const int index = outcome_index_of(kind, label.c_str());
  if (index < 0) return std::nullopt;
  return PartitionKey{kind, index};
}

const StateVector& two_singlet_state() {
  static const StateVector state = tensor_to_four(
      bell_state(BellKind::PsiMinus), bell_state(BellKind::PsiMinus));
  return state;
}

TrialRecord run_trial(std::uint64_t trial_id, double alice_theta,
                      double bob_theta, ContextKind eve_context,
                      Ordering ordering, RngStream& rng) {
  const AngleSetting alice_setting(Agent::Alice, alice_theta);
  const AngleSetting bob_setting(Agent::Bob, bob_theta);
  const Context& context = context_outcomes(eve_context);

  RawVector state = two_singlet_state().amplitudes();
  int alice_outcome = 0;
  int bob_outcome = 0;
  int eve_outcome_index = 0;
  Timestamps ts{};

  if (ordering == Ordering::EveFirst) {
    ts = Timestamps{/*alice=*/2, /*bob=*/3, /*eve_choice=*/0,
                    /*eve_measure=*/1};
    const PairMeasurement eve = measure_pair(state, context, rng);
    eve_outcome_index = eve.outcome_index;
    state = eve.collapsed;
    const SingleMeasurement a =
        measure_single(state, 1, alice_setting.theta(), rng);
    alice_outcome = a.outcome;
    state = a.collapsed;
    const SingleMeasurement b =
        measure_single(state, 4, bob_setting.theta(), rng);
    bob_outcome = b.outcome;
  } else {
    ts = Timestamps{/*alice=*/0, /*bob=*/1, /*eve_choice=*/2,
                    /*eve_measure=*/3};
    const SingleMeasurement a =
        measure_single(state, 1, alice_setting.theta(), rng);
    alice_outcome = a.outcome;
    state = a.collapsed;
    const SingleMeasurement b =
        measure_single(state, 4, bob_setting.theta(), rng);
    bob_outcome = b.outcome;
    state = b.collapsed;
    const PairMeasurement eve = measure_pair(state, context, rng);
    eve_outcome_index = eve.outcome_index;
  }

  return TrialRecord{trial_id,      alice_setting, bob_setting,
                     alice_outcome, bob_outcome,   eve_context,
                     eve_outcome_index, ordering,  ts};
}

std::vector<TrialRecord> post_select(std::span<const TrialRecord> records,
                                     PartitionKey key) {
  std::vector<TrialRecord> selected;
  for (const TrialRecord& r : records) {
    if (r.partition_key() == key) selected.push_back(r);
  }
  return selected;
}

double JointDistribution::probability(int alice_outcome, int bob_outcome,
                                      int eve_outcome_index) const {
  return p_[static_cast<std::size_t>(sign_slot(alice_outcome))]
           [static_cast<std::size_t>(sign_slot(bob_outcome))]
           [static_cast<std::size_t>(eve_outcome_index)];
}

double JointDistribution::eve_marginal(int eve_outcome_index) const {
  double acc = 0.0;
  for (int a : {+1, -1})
    for (int b : {+1, -1}) acc += probability(a, b, eve_outcome_index);
  return acc;
}

double JointDistribution::ab_marginal(int alice_outcome,
                                      int bob_outcome) const {
  double acc = 0.0;
  for (int k = 0; k < 4; ++k) acc += probability(alice_outcome, bob_outcome, k);
  return acc;
}

double JointDistribution::conditional_correlator(int eve_outcome_index) const {
  double mass = 0.0;
  double acc = 0.0;
  for (int a : {+1, -1}) {
    for (int b : {+1, -1}) {
      const double p = probability(a, b, eve_outcome_index);
      mass += p;
      acc += a * b * p;
    }
  }
  if (!(mass > 0.0)) {
    throw std::invalid_argument(
        "conditional_correlator: outcome has zero probability");
  }
  return acc / mass;
}

double JointDistribution::correlator() const {
  double acc = 0.0;
  for (int a : {+1, -1})
    for (int b : {+1, -1}) acc += a * b * ab_marginal(a, b);
  return acc;
}

double JointDistribution::total() const {
  double acc = 0.0;
  for (int a : {+1, -1})
    for (int b : {+1, -1}) acc += ab_marginal(a, b);
  return acc;
}

JointDistribution joint_distribution(double alice_theta, double bob_theta,
                                     ContextKind eve_context,
                                     Ordering ordering) {
  const Context& context = context_outcomes(eve_context);
  const AngleBasis alice = angle_basis(reduce_angle(alice_theta));
  const AngleBasis bob = angle_basis(reduce_angle(bob_theta));

  JointDistribution dist;
  for (int k = 0; k < 4; ++k) {
    for (int a = 0; a < 2; ++a) {
      for (int b = 0; b < 2; ++b) {
        const QubitState& alice_axis = (a == 0) ? alice.plus : alice.minus;
        const QubitState& bob_axis = (b == 0) ? bob.plus : bob.minus;
        // The branch probability equals the squared norm of the sequential
        // (unnormalized) projections; the telescoping product of
        // renormalized conditionals gives the same number without the 0/0
        // special cases.
        RawVector v = two_singlet_state().amplitudes();
        if (ordering == Ordering::EveFirst) {
          v = apply_pair_projector(context, k, v);
          v = apply_single_projector(alice_axis, 1, v);
          v = apply_single_projector(bob_axis, 4, v);
        } else {
          v = apply_single_projector(alice_axis, 1, v);
          v = apply_single_projector(bob_axis, 4, v);
          v = apply_pair_projector(context, k, v);
        }
        dist.p_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]
              [static_cast<std::size_t>(k)] = squared_norm(v);
      }
    }
  }
  return dist;
}

EvePolicy EvePolicy::fixed(ContextKind context) {
  return EvePolicy{context == ContextKind::Bell ? Kind::FixedBell
                                                : Kind::FixedProduct,
                   context == ContextKind::Bell ? 1.0 : 0.0};
}

EvePolicy EvePolicy::alternate() { return EvePolicy{Kind::Alternate, 0.5}; }

EvePolicy EvePolicy::bernoulli(double bell_probability) {
  if (!(bell_probability >= 0.0 && bell_probability <= 1.0)) {
    throw std::invalid_argument("EvePolicy::bernoulli: probability of the "
                                "Bell context must lie in [0,1]");
  }
  return EvePolicy{Kind::Bernoulli, bell_probability};
}

ContextKind EvePolicy::choose(std::uint64_t trial_id, RngStream& rng) const {
  switch (kind) {
    case Kind::FixedBell: return ContextKind::Bell;
    case Kind::FixedProduct: return ContextKind::Product;
    case Kind::Alternate:
      return (trial_id % 2 == 0) ? ContextKind::Bell : ContextKind::Product;
    case Kind::Bernoulli:
      return rng.uniform01() < bell_probability ? ContextKind::Bell
                                                : ContextKind::Product;
  }
  throw std::logic_error("EvePolicy::choose: bad kind");
}

std::string EvePolicy::to_string() const {
  switch (kind) {
    case Kind::FixedBell: return "fixed:bell";
    case Kind::FixedProduct: return "fixed:product";
    case Kind::Alternate: return "alternate";
    case Kind::Bernoulli:
      return "bernoulli:" + std::to_string(bell_probability);
  }
  throw std::logic_error("EvePolicy::to_string: bad kind");
}

std::optional<EvePolicy> EvePolicy::parse(const std::string& text) {
  if (text == "fixed:bell") return fixed(ContextKind::Bell);
  if (text == "fixed:product") return fixed(ContextKind::Product);
  if (text == "alternate") return alternate();
  const std::string prefix = "bernoulli:";
  if (text.rfind(prefix, 0) == 0) {
    try {
      const double q = std::stod(text.substr(prefix.size()));
      if (q >= 0.0 && q <= 1.0) return bernoulli(q);
    } catch (const std::exception&) {
    }
  }
  return std::nullopt;
}

std::vector<TrialRecord> run_trials(const RunPlan& plan) {
  if (plan.settings.empty()) {
    throw std::invalid_argument("run_trials: at least one setting pair "
                                "is required");
  }
  if (plan.threads < 1) {
    throw std::invalid_argument("run_trials: thread count must be >= 1");
  }

  const auto run_one = [&plan](std::uint64_t t) {
    RngStream rng = RngStream::for_stream(plan.master_seed, t);
    const ContextKind context = plan.policy.choose(t, rng);
    const auto& [alice_theta, bob_theta] =
        plan.settings[t % plan.settings.size()];
    return run_trial(t, alice_theta, bob_theta, context, plan.ordering, rng);
  };

  std::vector<TrialRecord> records;
  records.reserve(plan.trials);

  if (plan.threads == 1 || plan.trials < 2) {
    for (std::uint64_t t = 0; t < plan.trials; ++t) {
      records.push_back(run_one(t));
    }
    return records;
  }

  // Per-trial streams make trials order-independent; workers fill disjoint
  // chunks of the id-ordered output.
  const TrialRecord blank{0,
                          AngleSetting(Agent::Alice, 0.0),
                          AngleSetting(Agent::Bob, 0.0),
                          0,
                          0,
                          ContextKind::Bell,
                          0,
                          plan.ordering,
                          Timestamps{}};
  records.assign(plan.trials, blank);
  const std::uint64_t n_threads = std::min<std::uint64_t>(
      static_cast<std::uint64_t>(plan.threads), plan.trials);
  const std::uint64_t chunk = (plan.trials + n_threads - 1) / n_threads;
  std::vector<std::thread> workers;
  workers.reserve(n_threads);
  for (std::uint64_t w = 0; w < n_threads; ++w) {
    const std::uint64_t begin = w * chunk;
    const std::uint64_t end = std::min(plan.trials, begin + chunk);
    workers.emplace_back([&records, &run_one, begin, end] {
      for (std::uint64_t t = begin; t < end; ++t) records[t] = run_one(t);
    });
  }
  for (auto& worker : workers) worker.join();
  return records;
}

}  // namespace swapsim
