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

#ifndef SWAPSIM_CONTEXTS_HPP
#define SWAPSIM_CONTEXTS_HPP

#include <array>

#include "swapsim/qcore.hpp"

/// Eve's two measurement contexts on the inner particle pair (2,3) and the
/// single-particle angle measurements used by Alice (particle 1) and Bob
/// (particle 4).
namespace swapsim {

enum class ContextKind { Bell, Product };

const char* to_string(ContextKind kind);

/// A named orthonormal 4-outcome measurement basis on a particle pair.
/// Outcome order is fixed so trial logs are stable across runs:
///   Bell    -> psi-, psi+, phi-, phi+
///   Product -> 00, 01, 10, 11
struct Context {
  ContextKind kind;
  std::array<TwoQubitState, 4> outcomes;
  std::array<const char*, 4> labels;
};

/// The catalogue entry for a context. Returned by reference; the catalogue
/// is built once and immutable.
const Context& context_outcomes(ContextKind kind);

/// Index of an outcome label within its context, or -1 if unknown.
int outcome_index_of(ContextKind kind, const char* label);

enum class Agent { Alice, Bob };

const char* to_string(Agent agent);

/// Reduces an angle to [0, 2*pi). Applied on construction of AngleSetting
/// and when matching logged settings, so equal angles compare bit-equal.
double reduce_angle(double theta);

/// A measurement direction owned by one of the outer-particle agents.
class AngleSetting {
 public:
  AngleSetting(Agent owner, double theta);

  Agent owner() const { return owner_; }
  double theta() const { return theta_; }

  friend bool operator==(const AngleSetting&, const AngleSetting&) = default;

 private:
  Agent owner_;
  double theta_;  // reduced to [0, 2*pi)
};

using QubitState = std::array<Amplitude, 2>;

/// The orthonormal measurement basis at angle theta, half-angle convention:
///   plus  = ( cos(theta/2), sin(theta/2))   -> outcome +1
///   minus = (-sin(theta/2), cos(theta/2))   -> outcome -1
/// This makes the singlet correlator -cos(alpha - beta).
struct AngleBasis {
  QubitState plus;
  QubitState minus;
};

AngleBasis angle_basis(double theta);

/// Applies the projector |outcome><outcome| of a context onto the inner
/// pair (2,3). The result is intentionally unnormalized; its squared norm
/// is the Born probability of the outcome. The four projectors of a context
/// are idempotent, mutually orthogonal and sum to the identity.
RawVector apply_pair_projector(const Context& context, int outcome_index,
                               const RawVector& state);
RawVector apply_pair_projector(const Context& context, int outcome_index,
                               const StateVector& state);

/// Applies the single-particle projector |axis><axis| on one particle.
RawVector apply_single_projector(const QubitState& axis, int particle,
                                 const RawVector& state);
RawVector apply_single_projector(const QubitState& axis, int particle,
                                 const StateVector& state);

}  // namespace swapsim

#endif  // SWAPSIM_CONTEXTS_HPP
