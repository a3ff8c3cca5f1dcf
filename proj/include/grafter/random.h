//
// Copyright 2026 The Grafter Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#ifndef GRAFTER_RANDOM_H_
#define GRAFTER_RANDOM_H_

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

namespace grafter {

// Seeded random stream. The draws are computed here rather than with the
// <random> distributions, whose output is implementation-defined, so a seed
// yields the same stream with any standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  // Independent stream for one sentence of a run.
  static Rng ForSentence(std::uint64_t run_seed, std::size_t sentence_id);

  std::uint64_t Next() { return engine_(); }

  // Uniform in [0, 1).
  double UniformReal();

  // Uniform in [0, bound); bound must be positive.
  std::size_t Uniform(std::size_t bound);

  bool Bernoulli(double p) { return UniformReal() < p; }

  // `count` distinct indices from [0, population), uniformly without
  // replacement, in draw order.
  std::vector<std::size_t> SampleWithoutReplacement(std::size_t population,
                                                    std::size_t count);

 private:
  std::mt19937_64 engine_;
};

// SplitMix64 finalizer; used to derive stream seeds.
std::uint64_t MixSeed(std::uint64_t value);

}  // namespace grafter

#endif  // GRAFTER_RANDOM_H_
