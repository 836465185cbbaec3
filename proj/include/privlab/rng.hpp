// Copyright 2026 The privlab Authors
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

#ifndef PRIVLAB_RNG_HPP
#define PRIVLAB_RNG_HPP

#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>

namespace privlab {

// Counter-based generator "privlab-ctr64-v1".
//
// Output i of stream (seed, index) is mix(key + (i + 1) * golden) where key =
// mix(seed ^ mix(index + golden)) and mix is the SplitMix64 finalizer. Doubles
// take the top 53 bits; normals use Box-Muller without caching across calls to
// substream(). Everything here is specified bit-for-bit so other
// implementations can reproduce Monte Carlo runs. Changing any of it requires a
// new name.
class CounterRng {
 public:
  using result_type = std::uint64_t;
  static constexpr const char* kName = "privlab-ctr64-v1";

  explicit CounterRng(std::uint64_t seed = 0, std::uint64_t stream = 0)
      : seed_(seed), key_(mix(seed ^ mix(stream + kGolden))) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()() {
    ++counter_;
    return mix(key_ + counter_ * kGolden);
  }

  // Independent generator for trial `index` of a run seeded with the same seed.
  CounterRng substream(std::uint64_t index) const { return CounterRng(seed_, index + 1); }

  double uniform() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

  // Uniform integer in [0, n), unbiased by rejection.
  std::uint64_t below(std::uint64_t n) {
    if (n <= 1) return 0;
    const std::uint64_t limit = max() - max() % n;
    for (;;) {
      std::uint64_t r = (*this)();
      if (r < limit) return r % n;
    }
  }

  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u1 = 0.0;
    do {
      u1 = uniform();
    } while (u1 <= 0.0);
    double u2 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    double t = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(t);
    has_spare_ = true;
    return r * std::cos(t);
  }

  std::uint64_t seed() const { return seed_; }

 private:
  static constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

  static constexpr std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  std::uint64_t seed_;
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

using Rng = CounterRng;

}  // namespace privlab

#endif  // PRIVLAB_RNG_HPP
