// asrtl/util/rng.h

// Copyright 2026  ASRTL Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#ifndef ASRTL_UTIL_RNG_H_
#define ASRTL_UTIL_RNG_H_

#include <cstdint>
#include <random>
#include <string_view>

namespace asrtl {

// Deterministic RNG.  The distribution transforms are implemented here rather
// than through <random> distribution objects so that streams are reproducible
// across standard library implementations.
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  uint64_t Raw() { return engine_(); }

  /// Uniform in [0, 1).
  double Uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  double Uniform(double lo, double hi) { return lo + (hi - lo) * Uniform(); }

  /// Uniform integer in [0, n); n must be positive.
  int64_t UniformInt(int64_t n) {
    return static_cast<int64_t>(Uniform() * static_cast<double>(n)) % n;
  }

  /// Standard normal via Box-Muller.
  double Gaussian();

  bool Bernoulli(double p) { return Uniform() < p; }

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

/// Derives the seed for a named sub-stream (e.g. "train-gmm/utt0042") from a
/// root seed, so stages and utterances get independent reproducible streams.
uint64_t DeriveSeed(uint64_t root_seed, std::string_view name);

}  // namespace asrtl

#endif  // ASRTL_UTIL_RNG_H_
