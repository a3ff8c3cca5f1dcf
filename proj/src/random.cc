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

#include "grafter/random.h"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace grafter {

std::uint64_t MixSeed(std::uint64_t value) {
  value += 0x9e3779b97f4a7c15ULL;
  value = (value ^ (value >> 30)) * 0xbf58476d1ce4e5b9ULL;
  value = (value ^ (value >> 27)) * 0x94d049bb133111ebULL;
  return value ^ (value >> 31);
}

Rng::Rng(std::uint64_t seed) : engine_(MixSeed(seed)) {}

Rng Rng::ForSentence(std::uint64_t run_seed, std::size_t sentence_id) {
  return Rng(MixSeed(run_seed) ^
             MixSeed(~static_cast<std::uint64_t>(sentence_id)));
}

double Rng::UniformReal() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

std::size_t Rng::Uniform(std::size_t bound) {
  if (bound == 0) throw std::invalid_argument("Rng::Uniform: empty range");
  const std::uint64_t range = bound;
  // Largest multiple of `range` representable; draws above it are rejected.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % range;
  std::uint64_t draw;
  do {
    draw = engine_();
  } while (draw >= limit);
  return static_cast<std::size_t>(draw % range);
}

std::vector<std::size_t> Rng::SampleWithoutReplacement(std::size_t population,
                                                       std::size_t count) {
  count = std::min(count, population);
  std::vector<std::size_t> pool(population);
  std::iota(pool.begin(), pool.end(), std::size_t{0});
  for (std::size_t i = 0; i < count; ++i) {
    std::swap(pool[i], pool[i + Uniform(population - i)]);
  }
  pool.resize(count);
  return pool;
}

}  // namespace grafter
