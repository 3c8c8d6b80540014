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

// Random small joints with exact rational masses, shared by the property
// tests and the acceptance suite.

#pragma once

#include <algorithm>
#include <map>
#include <random>
#include <vector>

#include "minss/entropy.hpp"

namespace minss::testing_support {

inline Tuple decode(long index, const std::vector<int>& alphabet) {
  Tuple row(alphabet.size());
  for (std::size_t v = alphabet.size(); v-- > 0;) {
    row[v] = index % alphabet[v];
    index /= alphabet[v];
  }
  return row;
}

// Random weights 0..9 on every cell of the product alphabet, normalized exactly.
inline JointDist random_joint(std::mt19937_64& gen, const VarList& names, const std::vector<int>& alphabet) {
  long cells = 1;
  for (int a : alphabet) cells *= a;
  std::uniform_int_distribution<int> weight(0, 9);
  std::vector<long> w(cells);
  long total = 0;
  while (total == 0) {
    total = 0;
    for (auto& x : w) total += (x = weight(gen));
  }
  std::map<Tuple, Rational> table;
  for (long c = 0; c < cells; ++c) {
    if (w[c] > 0) table[decode(c, alphabet)] = Rational(w[c], total);
  }
  return JointDist(names, table);
}

inline std::vector<int> random_alphabet(std::mt19937_64& gen, int vars) {
  std::uniform_int_distribution<int> size(1, 3);
  std::vector<int> a(vars);
  for (auto& x : a) x = size(gen);
  a[0] = std::max(a[0], 2);
  return a;
}

}  // namespace minss::testing_support
