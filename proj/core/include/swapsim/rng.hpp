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

#ifndef SWAPSIM_RNG_HPP
#define SWAPSIM_RNG_HPP

#include <array>
#include <cstdint>
#include <random>
#include <stdexcept>

namespace swapsim {

/// SplitMix64 finalizer. Used to derive independent per-trial seeds.
inline std::uint64_t splitmix64_mix(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xBF58476D1CE4E5B9ULL;
  z ^= z >> 27;
  z *= 0x94D049BB133111EBULL;
  z ^= z >> 31;
  return z;
}

/// A deterministic random stream owned by a single trial (or other unit of
/// work). Streams derived from the same master seed but different stream ids
/// are independent, so trials can run in any order or in parallel and still
/// reproduce the single-threaded results bit for bit.
///
/// Stream split function: stream i of master seed m is seeded with
///   splitmix64_mix(m + (i + 1) * 0x9E3779B97F4A7C15),
/// i.e. the (i+1)-th output of the SplitMix64 sequence started at m.
///
/// All floating-point draws are built from raw mt19937_64 words (whose
/// output sequence the C++ standard fixes), never from distribution
/// adaptors, so identical seeds give identical draws on every platform.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : engine_(seed) {}

  static RngStream for_stream(std::uint64_t master_seed,
                              std::uint64_t stream_id) {
    return RngStream(
        splitmix64_mix(master_seed + (stream_id + 1) * 0x9E3779B97F4A7C15ULL));
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  /// One fair bit.
  int bit() { return static_cast<int>(engine_() >> 63); }

  /// Index sampled from four probabilities (summing to ~1). Never returns
  /// an index of zero probability; accumulated rounding in the total is
  /// absorbed by the last positive cell.
  int sample4(const std::array<double, 4>& probabilities) {
    const double u = uniform01();
    double cumulative = 0.0;
    for (int k = 0; k < 4; ++k) {
      cumulative += probabilities[static_cast<std::size_t>(k)];
      if (u < cumulative) return k;
    }
    for (int k = 3; k >= 0; --k) {
      if (probabilities[static_cast<std::size_t>(k)] > 0.0) return k;
    }
    throw std::logic_error("sample4: all probabilities vanish");
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace swapsim

#endif  // SWAPSIM_RNG_HPP
