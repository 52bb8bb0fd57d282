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

#ifndef SWAPSIM_QCORE_HPP
#define SWAPSIM_QCORE_HPP

#include <array>
#include <complex>
#include <cstddef>
#include <vector>

/// Exact complex linear algebra for pure states of four two-state particles.
///
/// Dimension is fixed: 2 (one particle), 4 (a particle pair), 16 (the full
/// system). Basis index conventions, used everywhere in this library:
///
///   * full system: index = 8*b1 + 4*b2 + 2*b3 + b4, with bk in {0,1} the
///     quantum number of particle k (particle 1 is the most significant bit,
///     matching left-to-right ket notation),
///   * particle pair (i, j): index = 2*bi + bj.
///
/// All types are immutable values after construction and all operations are
/// pure functions, so everything here is safe to share across threads.
namespace swapsim {

using Amplitude = std::complex<double>;

/// Tolerance for exact-algebra checks. Every catalogued amplitude is 0,
/// +-1/2 or +-1/sqrt(2), far above double rounding noise.
inline constexpr double kExactTol = 1e-12;

/// A 16-component amplitude workspace. Unlike StateVector it carries no
/// normalization guarantee; projections and pair-basis selectors live here.
using RawVector = std::array<Amplitude, 16>;

/// Squared Euclidean norm of a workspace vector.
double squared_norm(const RawVector& v);

/// The four maximally entangled two-particle states.
enum class BellKind { PsiMinus, PsiPlus, PhiMinus, PhiPlus };

const char* to_string(BellKind kind);

/// A normalized pure state of one particle pair, index = 2*b_first + b_second
/// for whichever ordered pair of particles the caller applies it to.
///
/// Construction rejects non-finite amplitudes and vectors whose squared norm
/// deviates from 1 by more than kExactTol.
class TwoQubitState {
 public:
  explicit TwoQubitState(const std::array<Amplitude, 4>& amplitudes);

  const std::array<Amplitude, 4>& amplitudes() const { return amps_; }
  Amplitude amplitude(int b_first, int b_second) const {
    return amps_[static_cast<std::size_t>(2 * b_first + b_second)];
  }
  Amplitude operator[](std::size_t index) const { return amps_[index]; }

  /// <this|other>, conjugating this state.
  Amplitude inner(const TwoQubitState& other) const;

 private:
  std::array<Amplitude, 4> amps_;
};

/// A normalized pure state of the full four-particle system,
/// index = 8*b1 + 4*b2 + 2*b3 + b4.
class StateVector {
 public:
  static constexpr std::size_t kDim = 16;

  explicit StateVector(const RawVector& amplitudes);

  /// Rescales a workspace vector to unit norm. Throws std::invalid_argument
  /// if its squared norm is below `kExactTol` (a zero-probability collapse,
  /// which valid callers never attempt).
  static StateVector normalized(const RawVector& raw);

  const RawVector& amplitudes() const { return amps_; }
  Amplitude amplitude(int b1, int b2, int b3, int b4) const {
    return amps_[static_cast<std::size_t>(8 * b1 + 4 * b2 + 2 * b3 + b4)];
  }
  Amplitude operator[](std::size_t index) const { return amps_[index]; }

  Amplitude inner(const StateVector& other) const;

 private:
  std::array<Amplitude, 16> amps_;
};

/// A reduced density matrix on a declared subset of particles, row-major,
/// dimension 2^(#particles). Produced by partial_trace; the residual
/// accessors exist so callers can assert Hermiticity / unit trace / positive
/// spectrum instead of trusting them.
class DensityMatrix {
 public:
  DensityMatrix(std::vector<int> particles, std::vector<Amplitude> entries);

  int dim() const { return dim_; }
  const std::vector<int>& particles() const { return particles_; }
  Amplitude entry(int row, int col) const {
    return entries_[static_cast<std::size_t>(row * dim_ + col)];
  }

  Amplitude trace() const;
  /// max_ij |A_ij - conj(A_ji)|
  double hermiticity_residual() const;
  /// Eigenvalues in ascending order (cyclic Jacobi on the doubled real
  /// symmetric embedding; exact enough for these tiny dimensions).
  std::vector<double> eigenvalues() const;

  /// Traces out one particle of this matrix, keeping the rest.
  DensityMatrix trace_out(int particle) const;

 private:
  std::vector<int> particles_;  // ascending
  std::vector<Amplitude> entries_;
  int dim_;
};

/// An ordered pair of distinct particle labels from {1,2,3,4}.
struct ParticlePair {
  int first;
  int second;
};

/// (1/sqrt2)(|01> +- |10>) for PsiMinus/PsiPlus,
/// (1/sqrt2)(|00> +- |11>) for PhiMinus/PhiPlus.
TwoQubitState bell_state(BellKind kind);

/// The computational product state |b_i b_j>. Bits must be 0 or 1.
TwoQubitState product_state(int b_i, int b_j);

/// Tensor product of a pair state on particles (1,2) with one on (3,4):
/// amplitude(b1,b2,b3,b4) = a(b1,b2) * b(b3,b4).
StateVector tensor_to_four(const TwoQubitState& pair12,
                           const TwoQubitState& pair34);

/// Spreads a pair state over the 16-dimensional index space of the named
/// particles: selector[idx] = state(b_i, b_j). The result is not a state;
/// the component-wise product of two selectors covering all four particles
/// is the tensor-product bra used for overlaps, which is exactly how
/// expand_in_pair_bases and the pair projectors consume it.
RawVector embed_pair_basis(const TwoQubitState& state, ParticlePair particles);

using PairBasis = std::array<TwoQubitState, 4>;
using CoefficientMatrix = std::array<std::array<Amplitude, 4>, 4>;

/// Expansion coefficients c[m][n] = <basis14[m] (x) basis23[n] | state> of a
/// four-particle state over a basis on the outer pair (1,4) and one on the
/// inner pair (2,3). Both bases must be orthonormal within kExactTol.
/// Parseval: sum |c[m][n]|^2 = 1.
CoefficientMatrix expand_in_pair_bases(const StateVector& state,
                                       const PairBasis& basis14,
                                       const PairBasis& basis23);

/// Reduced density matrix of the kept particles. `keep` must be a non-empty
/// proper subset of {1,2,3,4}; row index bits follow ascending particle
/// order (first kept particle most significant).
DensityMatrix partial_trace(const StateVector& state,
                            const std::vector<int>& keep);

/// Which member of a two-particle system to keep when reducing a pair state.
enum class PairSlot { First, Second };

/// Reduced 2x2 density matrix of one member of a two-particle system.
/// The particle label in the result is the slot position (1 or 2).
DensityMatrix partial_trace(const TwoQubitState& state, PairSlot keep);

}  // namespace swapsim

#endif  // SWAPSIM_QCORE_HPP
