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

#include "swapsim/contexts.hpp"

#include <cmath>
#include <cstring>
#include <numbers>
#include <stdexcept>

namespace swapsim {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

Context make_bell_context() {
  return Context{ContextKind::Bell,
                 {bell_state(BellKind::PsiMinus), bell_state(BellKind::PsiPlus),
                  bell_state(BellKind::PhiMinus), bell_state(BellKind::PhiPlus)},
                 {"psi-", "psi+", "phi-", "phi+"}};
}

Context make_product_context() {
  return Context{ContextKind::Product,
                 {product_state(0, 0), product_state(0, 1),
                  product_state(1, 0), product_state(1, 1)},
                 {"00", "01", "10", "11"}};
}

void require_outcome_index(int outcome_index) {
  if (outcome_index < 0 || outcome_index > 3) {
    throw std::invalid_argument("outcome index must be in 0..3");
  }
}

void require_particle(int particle) {
  if (particle < 1 || particle > 4) {
    throw std::invalid_argument("particle label must be in 1..4");
  }
}

}  // namespace

const char* to_string(ContextKind kind) {
  return kind == ContextKind::Bell ? "bell" : "product";
}

const char* to_string(Agent agent) {
  return agent == Agent::Alice ? "alice" : "bob";
}

const Context& context_outcomes(ContextKind kind) {
  static const Context bell = make_bell_context();
  static const Context product = make_product_context();
  return kind == ContextKind::Bell ? bell : product;
}

int outcome_index_of(ContextKind kind, const char* label) {
  const Context& ctx = context_outcomes(kind);
  for (int k = 0; k < 4; ++k) {
    if (std::strcmp(ctx.labels[static_cast<std::size_t>(k)], label) == 0) {
      return k;
    }
  }
  return -1;
}

double reduce_angle(double theta) {
  if (!std::isfinite(theta)) {
    throw std::invalid_argument("reduce_angle: non-finite angle");
  }
  double r = std::fmod(theta, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r = 0.0;
  return r;
}

AngleSetting::AngleSetting(Agent owner, double theta)
    : owner_(owner), theta_(reduce_angle(theta)) {}

AngleBasis angle_basis(double theta) {
  const double c = std::cos(theta / 2.0);
  const double s = std::sin(theta / 2.0);
  return AngleBasis{{Amplitude{c}, Amplitude{s}},
                    {Amplitude{-s}, Amplitude{c}}};
}

RawVector apply_pair_projector(const Context& context, int outcome_index,
                               const RawVector& state) {
  require_outcome_index(outcome_index);
  const TwoQubitState& phi =
      context.outcomes[static_cast<std::size_t>(outcome_index)];

  // Contract the (2,3) indices against phi, then re-emit phi: for each
  // fixed (b1,b4), overlap = sum_{b2,b3} conj(phi) * state.
  RawVector out{};
  for (int b1 = 0; b1 < 2; ++b1) {
    for (int b4 = 0; b4 < 2; ++b4) {
      Amplitude overlap{0.0, 0.0};
      for (int b2 = 0; b2 < 2; ++b2) {
        for (int b3 = 0; b3 < 2; ++b3) {
          const std::size_t idx =
              static_cast<std::size_t>(8 * b1 + 4 * b2 + 2 * b3 + b4);
          overlap += std::conj(phi.amplitude(b2, b3)) * state[idx];
        }
      }
      for (int b2 = 0; b2 < 2; ++b2) {
        for (int b3 = 0; b3 < 2; ++b3) {
          const std::size_t idx =
              static_cast<std::size_t>(8 * b1 + 4 * b2 + 2 * b3 + b4);
          out[idx] = phi.amplitude(b2, b3) * overlap;
        }
      }
    }
  }
  return out;
}

RawVector apply_pair_projector(const Context& context, int outcome_index,
                               const StateVector& state) {
  return apply_pair_projector(context, outcome_index, state.amplitudes());
}

RawVector apply_single_projector(const QubitState& axis, int particle,
                                 const RawVector& state) {
  require_particle(particle);
  const int shift = 4 - particle;
  const std::size_t mask = std::size_t{1} << shift;

  RawVector out{};
  for (std::size_t base = 0; base < 16; ++base) {
    if (base & mask) continue;  // visit each pair of indices once
    const std::size_t idx0 = base;
    const std::size_t idx1 = base | mask;
    const Amplitude overlap =
        std::conj(axis[0]) * state[idx0] + std::conj(axis[1]) * state[idx1];
    out[idx0] = axis[0] * overlap;
    out[idx1] = axis[1] * overlap;
  }
  return out;
}

RawVector apply_single_projector(const QubitState& axis, int particle,
                                 const StateVector& state) {
  return apply_single_projector(axis, particle, state.amplitudes());
}

}  // namespace swapsim
