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

#include "minss/random.hpp"

#include "minss/error.hpp"

namespace minss {

std::uint64_t Rng::uniform_below(std::uint64_t bound) {
  if (bound == 0) throw InvalidArgumentError("uniform_below(0)");
  // Largest multiple of bound representable in 64 bits.
  const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % bound + 1) % bound;
  for (;;) {
    const std::uint64_t x = next_u64();
    if (x <= limit) return x % bound;
  }
}

mpz_class Rng::uniform_below(const mpz_class& bound) {
  if (bound <= 0) throw InvalidArgumentError("uniform_below of a non-positive bound");
  if (mpz_fits_ulong_p(bound.get_mpz_t()) != 0) {
    return mpz_class(uniform_below(static_cast<std::uint64_t>(bound.get_ui())));
  }
  const std::size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2);
  for (;;) {
    mpz_class x = 0;
    std::size_t have = 0;
    while (have < bits) {
      x <<= 64;
      x += mpz_class(static_cast<unsigned long>(next_u64()));
      have += 64;
    }
    x >>= static_cast<mp_bitcnt_t>(have - bits);
    if (x < bound) return x;
  }
}

bool Rng::bernoulli(const Rational& p) {
  if (p.sign() < 0 || p > Rational(1)) throw InvalidArgumentError("bernoulli probability outside [0, 1]");
  return uniform_below(p.raw().get_den()) < p.raw().get_num();
}

}  // namespace minss
