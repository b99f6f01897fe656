// Copyright 2026 The svkit developers
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

#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <utility>

namespace svkit {

/// SplitMix64 finalizer: the bijective avalanche stage of the SplitMix64
/// generator (Steele, Lea & Flood's mix; also the mix13 variant of
/// MurmurHash3's finalizer).
constexpr std::uint64_t splitmix64_mix(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xbf58476d1ce4e5b9ull;
  z ^= z >> 27;
  z *= 0x94d049bb133111ebull;
  z ^= z >> 31;
  return z;
}

/// Counter-based generator built on SplitMix64: draw k of stream s under a
/// seed is splitmix64_mix(key(seed, s) + (k+1) * gamma), a pure function of
/// (seed, s, k). Draws can therefore be made in any order, in parallel, or
/// recomputed, with identical results.
class CounterRng {
 public:
  static constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ull;

  CounterRng(std::uint64_t seed, std::uint64_t stream)
      : key_(splitmix64_mix(seed ^ splitmix64_mix(stream * kGamma +
                                                  0x1d8e4e27c47d124full))) {}

  std::uint64_t bits_at(std::uint64_t counter) const {
    return splitmix64_mix(key_ + (counter + 1) * kGamma);
  }

  /// Uniform double in [0, 1) from the top 53 bits of the draw.
  double uniform_at(std::uint64_t counter) const {
    return double(bits_at(counter) >> 11) * 0x1.0p-53;
  }

  /// Uniform double in [lo, hi).
  double uniform_at(std::uint64_t counter, double lo, double hi) const {
    return lo + uniform_at(counter) * (hi - lo);
  }

  /// Standard-normal pair via Box-Muller from draws at counters
  /// (counter, counter+1). The radial uniform is shifted into (0, 1] so the
  /// logarithm stays finite.
  std::pair<double, double> gaussian_pair_at(std::uint64_t counter) const {
    const double u1 = double((bits_at(counter) >> 11) + 1) * 0x1.0p-53;
    const double u2 = uniform_at(counter + 1);
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double phi = 2.0 * std::numbers::pi * u2;
    return {r * std::cos(phi), r * std::sin(phi)};
  }

 private:
  std::uint64_t key_;
};

}  // namespace svkit
