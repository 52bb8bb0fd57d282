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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <stdexcept>

#include "oracles.hpp"
#include "swapsim/qcore.hpp"
#include "swapsim/rng.hpp"

using namespace swapsim;

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

const std::array<BellKind, 4> kBellKinds = {
    BellKind::PsiMinus, BellKind::PsiPlus, BellKind::PhiMinus,
    BellKind::PhiPlus};

PairBasis bell_basis() {
  return {bell_state(BellKind::PsiMinus), bell_state(BellKind::PsiPlus),
          bell_state(BellKind::PhiMinus), bell_state(BellKind::PhiPlus)};
}

PairBasis product_basis() {
  return {product_state(0, 0), product_state(0, 1), product_state(1, 0),
          product_state(1, 1)};
}

std::array<std::array<Amplitude, 4>, 4> raw_basis(const PairBasis& basis) {
  return {basis[0].amplitudes(), basis[1].amplitudes(),
          basis[2].amplitudes(), basis[3].amplitudes()};
}

double max_abs_diff(const RawVector& a, const RawVector& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < 16; ++i)
    worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

StateVector two_singlets() {
  return tensor_to_four(bell_state(BellKind::PsiMinus),
                        bell_state(BellKind::PsiMinus));
}

}  // namespace

TEST_CASE("bell states have the catalogued amplitudes") {
  const TwoQubitState psi_minus = bell_state(BellKind::PsiMinus);
  CHECK(psi_minus[0] == Amplitude{0.0});
  CHECK(psi_minus[1].real() == doctest::Approx(kInvSqrt2).epsilon(1e-15));
  CHECK(psi_minus[2].real() == doctest::Approx(-kInvSqrt2).epsilon(1e-15));
  CHECK(psi_minus[3] == Amplitude{0.0});

  const TwoQubitState phi_plus = bell_state(BellKind::PhiPlus);
  CHECK(phi_plus[0].real() == doctest::Approx(kInvSqrt2).epsilon(1e-15));
  CHECK(phi_plus[1] == Amplitude{0.0});
  CHECK(phi_plus[2] == Amplitude{0.0});
  CHECK(phi_plus[3].real() == doctest::Approx(kInvSqrt2).epsilon(1e-15));

  for (BellKind kind : kBellKinds) {
    double norm2 = 0.0;
    for (std::size_t i = 0; i < 4; ++i) norm2 += std::norm(bell_state(kind)[i]);
    CHECK(std::abs(norm2 - 1.0) < kExactTol);
  }
}

TEST_CASE("product states are standard basis vectors") {
  CHECK(product_state(0, 0).amplitudes() ==
        std::array<Amplitude, 4>{1.0, 0.0, 0.0, 0.0});
  CHECK(product_state(1, 0).amplitudes() ==
        std::array<Amplitude, 4>{0.0, 0.0, 1.0, 0.0});
  CHECK(product_state(1, 1).amplitudes() ==
        std::array<Amplitude, 4>{0.0, 0.0, 0.0, 1.0});
  CHECK_THROWS_AS(product_state(2, 0), std::invalid_argument);
  CHECK_THROWS_AS(product_state(0, -1), std::invalid_argument);
}

TEST_CASE("bell and product sets are orthonormal") {
  for (const PairBasis& basis : {bell_basis(), product_basis()}) {
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = 0; j < 4; ++j) {
        const Amplitude g = basis[i].inner(basis[j]);
        CHECK(std::abs(g - (i == j ? 1.0 : 0.0)) < kExactTol);
      }
    }
  }
}

TEST_CASE("tensor_to_four lays out the two-singlet state") {
  const StateVector state = two_singlets();
  for (std::size_t i = 0; i < 16; ++i) {
    double expected = 0.0;
    if (i == 5 || i == 10) expected = 0.5;
    if (i == 6 || i == 9) expected = -0.5;
    CHECK(std::abs(state[i] - expected) < kExactTol);
  }
}

TEST_CASE("tensor_to_four basis case and norm preservation") {
  const StateVector basis_case =
      tensor_to_four(product_state(0, 0), product_state(0, 0));
  CHECK(basis_case[0] == Amplitude{1.0});
  for (std::size_t i = 1; i < 16; ++i) CHECK(basis_case[i] == Amplitude{0.0});

  RngStream rng(42);
  for (int rep = 0; rep < 25; ++rep) {
    const StateVector t = tensor_to_four(oracles::random_pair_state(rng),
                                         oracles::random_pair_state(rng));
    CHECK(std::abs(squared_norm(t.amplitudes()) - 1.0) < kExactTol);
  }
}

TEST_CASE("embed_pair_basis overlaps with the two-singlet state") {
  const StateVector state = two_singlets();
  const auto overlap = [&state](const TwoQubitState& u14,
                                const TwoQubitState& v23) {
    const RawVector s14 = embed_pair_basis(u14, ParticlePair{1, 4});
    const RawVector s23 = embed_pair_basis(v23, ParticlePair{2, 3});
    Amplitude acc{0.0, 0.0};
    for (std::size_t i = 0; i < 16; ++i)
      acc += std::conj(s14[i] * s23[i]) * state[i];
    return acc;
  };

  CHECK(std::abs(overlap(bell_state(BellKind::PsiMinus),
                         bell_state(BellKind::PsiMinus)) -
                 Amplitude{-0.5}) < kExactTol);
  CHECK(std::abs(overlap(product_state(0, 1), product_state(1, 0)) -
                 Amplitude{0.5}) < kExactTol);
}

TEST_CASE("embed_pair_basis rejects bad particle pairs") {
  const TwoQubitState psi = bell_state(BellKind::PsiMinus);
  CHECK_THROWS_AS(embed_pair_basis(psi, ParticlePair{2, 2}),
                  std::invalid_argument);
  CHECK_THROWS_AS(embed_pair_basis(psi, ParticlePair{0, 3}),
                  std::invalid_argument);
  CHECK_THROWS_AS(embed_pair_basis(psi, ParticlePair{1, 5}),
                  std::invalid_argument);
}

TEST_CASE("bell x bell expansion of the two-singlet state") {
  const CoefficientMatrix c =
      expand_in_pair_bases(two_singlets(), bell_basis(), bell_basis());
  // Exactly four nonzero coefficients of magnitude 1/2, signs pinned by the
  // brute-force oracle below.
  const double expected[4][4] = {{-0.5, 0, 0, 0},
                                 {0, 0.5, 0, 0},
                                 {0, 0, 0.5, 0},
                                 {0, 0, 0, -0.5}};
  for (std::size_t m = 0; m < 4; ++m)
    for (std::size_t n = 0; n < 4; ++n)
      CHECK(std::abs(c[m][n] - expected[m][n]) < kExactTol);

  const auto oracle = oracles::expand(two_singlets().amplitudes(),
                                      raw_basis(bell_basis()),
                                      raw_basis(bell_basis()));
  for (std::size_t m = 0; m < 4; ++m)
    for (std::size_t n = 0; n < 4; ++n)
      CHECK(std::abs(c[m][n] - oracle[m][n]) < kExactTol);
}

TEST_CASE("product x product expansion of the two-singlet state") {
  const CoefficientMatrix c =
      expand_in_pair_bases(two_singlets(), product_basis(), product_basis());
  const double expected[4][4] = {{0, 0, 0, -0.5},
                                 {0, 0, 0.5, 0},
                                 {0, 0.5, 0, 0},
                                 {-0.5, 0, 0, 0}};
  for (std::size_t m = 0; m < 4; ++m)
    for (std::size_t n = 0; n < 4; ++n)
      CHECK(std::abs(c[m][n] - expected[m][n]) < kExactTol);
}

TEST_CASE("expansion agrees with the oracle on random states and bases") {
  RngStream rng(7);
  for (int rep = 0; rep < 20; ++rep) {
    const StateVector state = oracles::random_state(rng);
    for (const PairBasis& b14 : {bell_basis(), product_basis()}) {
      for (const PairBasis& b23 : {bell_basis(), product_basis()}) {
        const CoefficientMatrix c = expand_in_pair_bases(state, b14, b23);
        const auto oracle = oracles::expand(state.amplitudes(),
                                            raw_basis(b14), raw_basis(b23));
        double sum = 0.0;
        for (std::size_t m = 0; m < 4; ++m) {
          for (std::size_t n = 0; n < 4; ++n) {
            CHECK(std::abs(c[m][n] - oracle[m][n]) < kExactTol);
            sum += std::norm(c[m][n]);
          }
        }
        CHECK(std::abs(sum - 1.0) < kExactTol);  // Parseval
      }
    }
  }
}

TEST_CASE("expansion round-trips back to the state") {
  RngStream rng(11);
  for (int rep = 0; rep < 20; ++rep) {
    const StateVector state = oracles::random_state(rng);
    const CoefficientMatrix c =
        expand_in_pair_bases(state, bell_basis(), product_basis());
    const RawVector rebuilt = oracles::reconstruct(
        c, raw_basis(bell_basis()), raw_basis(product_basis()));
    CHECK(max_abs_diff(rebuilt, state.amplitudes()) < kExactTol);
  }
}

TEST_CASE("expansion rejects non-orthonormal bases") {
  const PairBasis degenerate = {bell_state(BellKind::PsiMinus),
                                bell_state(BellKind::PsiMinus),
                                bell_state(BellKind::PhiMinus),
                                bell_state(BellKind::PhiPlus)};
  CHECK_THROWS_AS(
      expand_in_pair_bases(two_singlets(), degenerate, bell_basis()),
      std::invalid_argument);
  CHECK_THROWS_AS(
      expand_in_pair_bases(two_singlets(), bell_basis(), degenerate),
      std::invalid_argument);
}

TEST_CASE("a pair state reduces to the maximally mixed single particle") {
  for (BellKind kind : kBellKinds) {
    for (PairSlot slot : {PairSlot::First, PairSlot::Second}) {
      const DensityMatrix rho = partial_trace(bell_state(kind), slot);
      CHECK(rho.dim() == 2);
      CHECK(std::abs(rho.entry(0, 0) - 0.5) < kExactTol);
      CHECK(std::abs(rho.entry(1, 1) - 0.5) < kExactTol);
      CHECK(std::abs(rho.entry(0, 1)) < kExactTol);
      CHECK(std::abs(rho.entry(1, 0)) < kExactTol);
    }
  }

  const DensityMatrix pure = partial_trace(product_state(0, 0),
                                           PairSlot::First);
  CHECK(std::abs(pure.entry(0, 0) - 1.0) < kExactTol);
  CHECK(std::abs(pure.entry(1, 1)) < kExactTol);
}

TEST_CASE("every single-particle reduction of the two-singlet state is I/2") {
  const StateVector state = two_singlets();
  for (int k = 1; k <= 4; ++k) {
    const DensityMatrix rho = partial_trace(state, {k});
    CHECK(std::abs(rho.entry(0, 0) - 0.5) < kExactTol);
    CHECK(std::abs(rho.entry(1, 1) - 0.5) < kExactTol);
    CHECK(std::abs(rho.entry(0, 1)) < kExactTol);
    CHECK(std::abs(rho.entry(1, 0)) < kExactTol);
  }
}

TEST_CASE("partial_trace matches the outer-product oracle") {
  RngStream rng(13);
  const std::vector<std::vector<int>> keeps = {
      {1}, {2}, {3}, {4}, {1, 4}, {2, 3}, {1, 2}, {3, 4}, {1, 2, 3}, {2, 3, 4}};
  for (int rep = 0; rep < 10; ++rep) {
    const StateVector state = oracles::random_state(rng);
    for (const auto& keep : keeps) {
      const DensityMatrix rho = partial_trace(state, keep);
      const auto expected = oracles::partial_trace(state.amplitudes(), keep);
      REQUIRE(rho.dim() == (1 << keep.size()));
      for (int r = 0; r < rho.dim(); ++r) {
        for (int c = 0; c < rho.dim(); ++c) {
          CHECK(std::abs(rho.entry(r, c) -
                         expected[static_cast<std::size_t>(r * rho.dim() +
                                                           c)]) < kExactTol);
        }
      }
    }
  }
}

TEST_CASE("tracing out one particle at a time matches the direct reduction") {
  RngStream rng(17);
  for (int rep = 0; rep < 10; ++rep) {
    const StateVector state = oracles::random_state(rng);
    // keep {2,3,4} then drop 2 and 3 == keep {4} directly
    const DensityMatrix chained =
        partial_trace(state, {2, 3, 4}).trace_out(2).trace_out(3);
    const DensityMatrix direct = partial_trace(state, {4});
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c)
        CHECK(std::abs(chained.entry(r, c) - direct.entry(r, c)) < kExactTol);

    const DensityMatrix chained14 = partial_trace(state, {1, 2, 4}).trace_out(2);
    const DensityMatrix direct14 = partial_trace(state, {1, 4});
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c)
        CHECK(std::abs(chained14.entry(r, c) - direct14.entry(r, c)) <
              kExactTol);
  }
}

TEST_CASE("partial_trace validates its keep set") {
  const StateVector state = two_singlets();
  CHECK_THROWS_AS(partial_trace(state, {}), std::invalid_argument);
  CHECK_THROWS_AS(partial_trace(state, {1, 2, 3, 4}), std::invalid_argument);
  CHECK_THROWS_AS(partial_trace(state, {1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(partial_trace(state, {0}), std::invalid_argument);
  CHECK_THROWS_AS(partial_trace(state, {5}), std::invalid_argument);
}

TEST_CASE("reduced matrices are unit-trace, Hermitian, positive") {
  RngStream rng(19);
  for (int rep = 0; rep < 10; ++rep) {
    const StateVector state = oracles::random_state(rng);
    for (const auto& keep :
         std::vector<std::vector<int>>{{1}, {3}, {1, 4}, {2, 3}, {1, 2, 3}}) {
      const DensityMatrix rho = partial_trace(state, keep);
      CHECK(std::abs(rho.trace() - 1.0) < kExactTol);
      CHECK(rho.hermiticity_residual() < kExactTol);
      const std::vector<double> eig = rho.eigenvalues();
      double sum = 0.0;
      for (double lambda : eig) {
        CHECK(lambda >= -kExactTol);
        sum += lambda;
      }
      CHECK(std::abs(sum - 1.0) < 1e-10);
    }
  }
}

TEST_CASE("eigenvalues of known reductions") {
  const std::vector<double> mixed =
      partial_trace(bell_state(BellKind::PsiMinus), PairSlot::First)
          .eigenvalues();
  CHECK(mixed[0] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(mixed[1] == doctest::Approx(0.5).epsilon(1e-12));

  const std::vector<double> pure =
      partial_trace(product_state(1, 0), PairSlot::Second).eigenvalues();
  CHECK(std::abs(pure[0]) < 1e-12);
  CHECK(pure[1] == doctest::Approx(1.0).epsilon(1e-12));

  const std::vector<double> quarter =
      partial_trace(two_singlets(), {1, 4}).eigenvalues();
  for (double lambda : quarter)
    CHECK(lambda == doctest::Approx(0.25).epsilon(1e-12));

  // complex entries: (|01> + i|10>)/sqrt(2) still reduces to I/2
  const TwoQubitState circular(std::array<Amplitude, 4>{
      Amplitude{0.0}, Amplitude{1.0 / std::sqrt(2.0)},
      Amplitude{0.0, 1.0 / std::sqrt(2.0)}, Amplitude{0.0}});
  for (double lambda :
       partial_trace(circular, PairSlot::First).eigenvalues()) {
    CHECK(lambda == doctest::Approx(0.5).epsilon(1e-12));
  }
}

TEST_CASE("state constructors enforce their invariants") {
  RawVector junk{};
  CHECK_THROWS_AS(StateVector{junk}, std::invalid_argument);  // norm 0
  junk[0] = Amplitude{1.0};
  junk[1] = Amplitude{0.5};
  CHECK_THROWS_AS(StateVector{junk}, std::invalid_argument);  // norm > 1

  RawVector nan_vec{};
  nan_vec[0] = Amplitude{std::nan(""), 0.0};
  CHECK_THROWS_AS(StateVector{nan_vec}, std::invalid_argument);

  CHECK_THROWS_AS(TwoQubitState({Amplitude{0.7}, Amplitude{0.0},
                                 Amplitude{0.0}, Amplitude{0.0}}),
                  std::invalid_argument);

  RawVector zero{};
  CHECK_THROWS_AS(StateVector::normalized(zero), std::invalid_argument);
  RawVector scaled{};
  scaled[3] = Amplitude{0.0, -2.5};
  const StateVector renorm = StateVector::normalized(scaled);
  CHECK(std::abs(renorm[3] - Amplitude{0.0, -1.0}) < kExactTol);
}
