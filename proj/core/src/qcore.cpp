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

#include "swapsim/qcore.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace swapsim {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

void require_finite(const Amplitude& a, const char* what) {
  if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
    throw std::invalid_argument(std::string(what) +
                                ": non-finite amplitude");
  }
}

template <std::size_t N>
double squared_norm_of(const std::array<Amplitude, N>& v) {
  double acc = 0.0;
  for (const auto& a : v) acc += std::norm(a);
  return acc;
}

template <std::size_t N>
void require_unit_norm(const std::array<Amplitude, N>& v, const char* what) {
  for (const auto& a : v) require_finite(a, what);
  const double n2 = squared_norm_of(v);
  if (std::abs(n2 - 1.0) > kExactTol) {
    throw std::invalid_argument(std::string(what) + ": squared norm " +
                                std::to_string(n2) + " is not 1");
  }
}

int bit_of(std::size_t index, int particle) {
  return static_cast<int>((index >> (4 - particle)) & 1u);
}

void require_valid_pair(ParticlePair p, const char* what) {
  if (p.first < 1 || p.first > 4 || p.second < 1 || p.second > 4) {
    throw std::invalid_argument(std::string(what) +
                                ": particle labels must be in 1..4");
  }
  if (p.first == p.second) {
    throw std::invalid_argument(std::string(what) +
                                ": particle labels must be distinct");
  }
}

void require_orthonormal(const PairBasis& basis, const char* what) {
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      const Amplitude g = basis[static_cast<std::size_t>(i)].inner(
          basis[static_cast<std::size_t>(j)]);
      const double expected = (i == j) ? 1.0 : 0.0;
      if (std::abs(g - expected) > kExactTol) {
        throw std::invalid_argument(std::string(what) +
                                    ": basis is not orthonormal");
      }
    }
  }
}

// Eigenvalues of a real symmetric matrix by cyclic Jacobi rotations.
std::vector<double> jacobi_symmetric_eigenvalues(std::vector<double> a,
                                                 int n) {
  const auto at = [&](int r, int c) -> double& {
    return a[static_cast<std::size_t>(r * n + c)];
  };
  for (int sweep = 0; sweep < 64; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off += at(p, q) * at(p, q);
    if (off < 1e-30) break;
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = at(p, q);
        if (std::abs(apq) < 1e-300) continue;
        const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (int k = 0; k < n; ++k) {
          const double akp = at(k, p);
          const double akq = at(k, q);
          at(k, p) = c * akp - s * akq;
          at(k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = at(p, k);
          const double aqk = at(q, k);
          at(p, k) = c * apk - s * aqk;
          at(q, k) = s * apk + c * aqk;
        }
      }
    }
  }
  std::vector<double> eig(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) eig[static_cast<std::size_t>(i)] = at(i, i);
  std::sort(eig.begin(), eig.end());
  return eig;
}

}  // namespace

double squared_norm(const RawVector& v) { return squared_norm_of(v); }

const char* to_string(BellKind kind) {
  switch (kind) {
    case BellKind::PsiMinus: return "psi-";
    case BellKind::PsiPlus: return "psi+";
    case BellKind::PhiMinus: return "phi-";
    case BellKind::PhiPlus: return "phi+";
  }
  throw std::invalid_argument("to_string: bad BellKind");
}

TwoQubitState::TwoQubitState(const std::array<Amplitude, 4>& amplitudes)
    : amps_(amplitudes) {
  require_unit_norm(amps_, "TwoQubitState");
}

Amplitude TwoQubitState::inner(const TwoQubitState& other) const {
  Amplitude acc{0.0, 0.0};
  for (std::size_t i = 0; i < 4; ++i) acc += std::conj(amps_[i]) * other[i];
  return acc;
}

StateVector::StateVector(const RawVector& amplitudes) : amps_(amplitudes) {
  require_unit_norm(amps_, "StateVector");
}

StateVector StateVector::normalized(const RawVector& raw) {
  const double n2 = squared_norm_of(raw);
  if (!(n2 > kExactTol)) {
    throw std::invalid_argument(
        "StateVector::normalized: vanishing norm (zero-probability collapse)");
  }
  RawVector scaled = raw;
  const double inv = 1.0 / std::sqrt(n2);
  for (auto& a : scaled) a *= inv;
  return StateVector(scaled);
}

Amplitude StateVector::inner(const StateVector& other) const {
  Amplitude acc{0.0, 0.0};
  for (std::size_t i = 0; i < kDim; ++i) acc += std::conj(amps_[i]) * other[i];
  return acc;
}

DensityMatrix::DensityMatrix(std::vector<int> particles,
                             std::vector<Amplitude> entries)
    : particles_(std::move(particles)), entries_(std::move(entries)) {
  if (particles_.empty()) {
    throw std::invalid_argument("DensityMatrix: empty particle set");
  }
  dim_ = 1 << particles_.size();
  if (entries_.size() != static_cast<std::size_t>(dim_) *
                             static_cast<std::size_t>(dim_)) {
    throw std::invalid_argument("DensityMatrix: entry count does not match "
                                "2^(#particles) squared");
  }
  for (const auto& e : entries_) require_finite(e, "DensityMatrix");
}

Amplitude DensityMatrix::trace() const {
  Amplitude acc{0.0, 0.0};
  for (int i = 0; i < dim_; ++i) acc += entry(i, i);
  return acc;
}

double DensityMatrix::hermiticity_residual() const {
  double worst = 0.0;
  for (int r = 0; r < dim_; ++r) {
    for (int c = 0; c < dim_; ++c) {
      worst = std::max(worst, std::abs(entry(r, c) - std::conj(entry(c, r))));
    }
  }
  return worst;
}

std::vector<double> DensityMatrix::eigenvalues() const {
  // H = A + iB Hermitian embeds as the real symmetric [[A, -B], [B, A]],
  // whose spectrum is H's with every eigenvalue doubled.
  const int n = 2 * dim_;
  std::vector<double> m(static_cast<std::size_t>(n) *
                        static_cast<std::size_t>(n));
  for (int r = 0; r < dim_; ++r) {
    for (int c = 0; c < dim_; ++c) {
      const Amplitude e = entry(r, c);
      m[static_cast<std::size_t>(r * n + c)] = e.real();
      m[static_cast<std::size_t>(r * n + (c + dim_))] = -e.imag();
      m[static_cast<std::size_t>((r + dim_) * n + c)] = e.imag();
      m[static_cast<std::size_t>((r + dim_) * n + (c + dim_))] = e.real();
    }
  }
  const std::vector<double> doubled = jacobi_symmetric_eigenvalues(m, n);
  std::vector<double> eig(static_cast<std::size_t>(dim_));
  for (int i = 0; i < dim_; ++i) {
    eig[static_cast<std::size_t>(i)] = doubled[static_cast<std::size_t>(2 * i)];
  }
  return eig;
}

DensityMatrix DensityMatrix::trace_out(int particle) const {
  const auto pos_it = std::find(particles_.begin(), particles_.end(), particle);
  if (pos_it == particles_.end()) {
    throw std::invalid_argument("trace_out: particle not in this matrix");
  }
  if (particles_.size() == 1) {
    throw std::invalid_argument("trace_out: cannot reduce to zero particles");
  }
  const int pos = static_cast<int>(pos_it - particles_.begin());
  const int nk = static_cast<int>(particles_.size());
  // bit position of `particle` counted from the most significant index bit
  const int shift = nk - 1 - pos;
  const int new_dim = dim_ / 2;

  std::vector<int> kept;
  for (int p : particles_)
    if (p != particle) kept.push_back(p);

  const auto expand_index = [&](int compact, int bit) {
    const int high = compact >> shift;
    const int low = compact & ((1 << shift) - 1);
    return (high << (shift + 1)) | (bit << shift) | low;
  };

  std::vector<Amplitude> out(static_cast<std::size_t>(new_dim) *
                             static_cast<std::size_t>(new_dim));
  for (int r = 0; r < new_dim; ++r) {
    for (int c = 0; c < new_dim; ++c) {
      Amplitude acc{0.0, 0.0};
      for (int b = 0; b < 2; ++b) {
        acc += entry(expand_index(r, b), expand_index(c, b));
      }
      out[static_cast<std::size_t>(r * new_dim + c)] = acc;
    }
  }
  return DensityMatrix(std::move(kept), std::move(out));
}

TwoQubitState bell_state(BellKind kind) {
  switch (kind) {
    case BellKind::PsiMinus:
      return TwoQubitState({Amplitude{0.0}, Amplitude{kInvSqrt2},
                            Amplitude{-kInvSqrt2}, Amplitude{0.0}});
    case BellKind::PsiPlus:
      return TwoQubitState({Amplitude{0.0}, Amplitude{kInvSqrt2},
                            Amplitude{kInvSqrt2}, Amplitude{0.0}});
    case BellKind::PhiMinus:
      return TwoQubitState({Amplitude{kInvSqrt2}, Amplitude{0.0},
                            Amplitude{0.0}, Amplitude{-kInvSqrt2}});
    case BellKind::PhiPlus:
      return TwoQubitState({Amplitude{kInvSqrt2}, Amplitude{0.0},
                            Amplitude{0.0}, Amplitude{kInvSqrt2}});
  }
  throw std::invalid_argument("bell_state: bad BellKind");
}

TwoQubitState product_state(int b_i, int b_j) {
  if ((b_i != 0 && b_i != 1) || (b_j != 0 && b_j != 1)) {
    throw std::invalid_argument("product_state: bits must be 0 or 1");
  }
  std::array<Amplitude, 4> amps{};
  amps[static_cast<std::size_t>(2 * b_i + b_j)] = Amplitude{1.0};
  return TwoQubitState(amps);
}

StateVector tensor_to_four(const TwoQubitState& pair12,
                           const TwoQubitState& pair34) {
  RawVector amps{};
  for (std::size_t i = 0; i < 16; ++i) {
    amps[i] = pair12[i >> 2] * pair34[i & 3u];
  }
  return StateVector(amps);
}

RawVector embed_pair_basis(const TwoQubitState& state,
                           ParticlePair particles) {
  require_valid_pair(particles, "embed_pair_basis");
  RawVector selector{};
  for (std::size_t idx = 0; idx < 16; ++idx) {
    const int bi = bit_of(idx, particles.first);
    const int bj = bit_of(idx, particles.second);
    selector[idx] = state.amplitude(bi, bj);
  }
  return selector;
}

CoefficientMatrix expand_in_pair_bases(const StateVector& state,
                                       const PairBasis& basis14,
                                       const PairBasis& basis23) {
  require_orthonormal(basis14, "expand_in_pair_bases(basis14)");
  require_orthonormal(basis23, "expand_in_pair_bases(basis23)");

  std::array<RawVector, 4> sel14;
  std::array<RawVector, 4> sel23;
  for (std::size_t k = 0; k < 4; ++k) {
    sel14[k] = embed_pair_basis(basis14[k], ParticlePair{1, 4});
    sel23[k] = embed_pair_basis(basis23[k], ParticlePair{2, 3});
  }

  CoefficientMatrix c{};
  for (std::size_t m = 0; m < 4; ++m) {
    for (std::size_t n = 0; n < 4; ++n) {
      Amplitude acc{0.0, 0.0};
      for (std::size_t idx = 0; idx < 16; ++idx) {
        acc += std::conj(sel14[m][idx] * sel23[n][idx]) * state[idx];
      }
      c[m][n] = acc;
    }
  }
  return c;
}

DensityMatrix partial_trace(const StateVector& state,
                            const std::vector<int>& keep) {
  if (keep.empty()) {
    throw std::invalid_argument("partial_trace: keep set is empty");
  }
  std::vector<int> kept = keep;
  std::sort(kept.begin(), kept.end());
  if (std::adjacent_find(kept.begin(), kept.end()) != kept.end()) {
    throw std::invalid_argument("partial_trace: duplicate particle labels");
  }
  for (int p : kept) {
    if (p < 1 || p > 4) {
      throw std::invalid_argument("partial_trace: particle labels must be "
                                  "in 1..4");
    }
  }
  if (kept.size() == 4) {
    throw std::invalid_argument("partial_trace: keep set must be a proper "
                                "subset");
  }

  std::vector<int> discarded;
  for (int p = 1; p <= 4; ++p) {
    if (std::find(kept.begin(), kept.end(), p) == kept.end()) {
      discarded.push_back(p);
    }
  }

  const int nk = static_cast<int>(kept.size());
  const int nd = static_cast<int>(discarded.size());
  const int dim = 1 << nk;

  const auto full_index = [&](int kept_bits, int disc_bits) {
    std::size_t idx = 0;
    for (int i = 0; i < nk; ++i) {
      const int bit = (kept_bits >> (nk - 1 - i)) & 1;
      idx |= static_cast<std::size_t>(bit)
             << (4 - kept[static_cast<std::size_t>(i)]);
    }
    for (int i = 0; i < nd; ++i) {
      const int bit = (disc_bits >> (nd - 1 - i)) & 1;
      idx |= static_cast<std::size_t>(bit)
             << (4 - discarded[static_cast<std::size_t>(i)]);
    }
    return idx;
  };

  std::vector<Amplitude> entries(static_cast<std::size_t>(dim) *
                                 static_cast<std::size_t>(dim));
  for (int r = 0; r < dim; ++r) {
    for (int c = 0; c < dim; ++c) {
      Amplitude acc{0.0, 0.0};
      for (int d = 0; d < (1 << nd); ++d) {
        acc += state[full_index(r, d)] * std::conj(state[full_index(c, d)]);
      }
      entries[static_cast<std::size_t>(r * dim + c)] = acc;
    }
  }
  return DensityMatrix(std::move(kept), std::move(entries));
}

DensityMatrix partial_trace(const TwoQubitState& state, PairSlot keep) {
  std::vector<Amplitude> entries(4);
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      Amplitude acc{0.0, 0.0};
      for (int d = 0; d < 2; ++d) {
        const Amplitude lhs = (keep == PairSlot::First)
                                  ? state.amplitude(r, d)
                                  : state.amplitude(d, r);
        const Amplitude rhs = (keep == PairSlot::First)
                                  ? state.amplitude(c, d)
                                  : state.amplitude(d, c);
        acc += lhs * std::conj(rhs);
      }
      entries[static_cast<std::size_t>(r * 2 + c)] = acc;
    }
  }
  return DensityMatrix({keep == PairSlot::First ? 1 : 2}, std::move(entries));
}

}  // namespace swapsim
