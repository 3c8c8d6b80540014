// Copyright 2026 The minss Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <random>

#include "minss/rational.hpp"

namespace minss {

// Explicitly seeded randomness source. Draws are defined on top of the raw
// 64-bit engine output only, so a seed reproduces the same values on every
// standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform on [0, bound) by rejection; bound > 0.
  std::uint64_t uniform_below(std::uint64_t bound);
  mpz_class uniform_below(const mpz_class& bound);

  // True with probability exactly p (0 <= p <= 1).
  bool bernoulli(const Rational& p);

 private:
  std::mt19937_64 engine_;
};

}  // namespace minss
