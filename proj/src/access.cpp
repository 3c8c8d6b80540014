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

#include "minss/access.hpp"

#include <algorithm>
#include <bit>

#include "minss/error.hpp"

namespace minss {
namespace {

void require_party_count(int n) {
  if (n < 1 || n > kMaxParties) {
    throw InvalidArgumentError("party count " + std::to_string(n) + " outside [1, " +
                               std::to_string(kMaxParties) + "]");
  }
}

void require_subset(int n, PartySet set) {
  if (set >> n) throw InvalidArgumentError("set " + format_set(set) + " not within [n]");
}

void require_monotone(const AccessStructure& g) {
  if (!is_monotone(g)) throw InvalidArgumentError("access structure is not monotone");
}

}  // namespace

PartySet party_bit(int party) {
  if (party < 1 || party > kMaxParties) {
    throw InvalidArgumentError("party index " + std::to_string(party) + " out of range");
  }
  return PartySet{1} << (party - 1);
}

bool contains(PartySet set, int party) { return (set & party_bit(party)) != 0; }

int set_size(PartySet set) { return std::popcount(set); }

std::vector<int> members(PartySet set) {
  std::vector<int> out;
  for (int i = 1; set != 0; ++i, set >>= 1U) {
    if (set & 1U) out.push_back(i);
  }
  return out;
}

PartySet make_set(const std::vector<int>& parties) {
  PartySet out = 0;
  for (int p : parties) out |= party_bit(p);
  return out;
}

std::string format_set(PartySet set) {
  std::string out = "{";
  bool first = true;
  for (int p : members(set)) {
    if (!first) out += ",";
    out += std::to_string(p);
    first = false;
  }
  return out + "}";
}

AccessStructure AccessStructure::from_qualified(int n, const std::vector<PartySet>& qualified) {
  require_party_count(n);
  std::vector<bool> flags(std::size_t{1} << n, false);
  for (PartySet q : qualified) {
    require_subset(n, q);
    flags[q] = true;
  }
  return AccessStructure(n, std::move(flags));
}

AccessStructure AccessStructure::from_partition(int n, const std::vector<PartySet>& qualified,
                                                const std::vector<PartySet>& forbidden) {
  require_party_count(n);
  std::vector<int> seen(std::size_t{1} << n, 0);
  for (PartySet q : qualified) {
    require_subset(n, q);
    seen[q] |= 1;
  }
  for (PartySet f : forbidden) {
    require_subset(n, f);
    seen[f] |= 2;
  }
  std::vector<bool> flags(seen.size());
  for (std::size_t s = 0; s < seen.size(); ++s) {
    if (seen[s] == 0) throw InvalidArgumentError("set " + format_set(static_cast<PartySet>(s)) + " is neither qualified nor forbidden");
    if (seen[s] == 3) throw InvalidArgumentError("set " + format_set(static_cast<PartySet>(s)) + " is both qualified and forbidden");
    flags[s] = seen[s] == 1;
  }
  return AccessStructure(n, std::move(flags));
}

bool AccessStructure::is_qualified(PartySet set) const {
  if (set > universe()) throw InvalidArgumentError("set " + format_set(set) + " not within [n]");
  return qualified_[set];
}

std::vector<PartySet> AccessStructure::qualified_sets() const {
  std::vector<PartySet> out;
  for (PartySet s = 0; s <= universe(); ++s) {
    if (qualified_[s]) out.push_back(s);
  }
  return out;
}

std::vector<PartySet> AccessStructure::forbidden_sets() const {
  std::vector<PartySet> out;
  for (PartySet s = 0; s <= universe(); ++s) {
    if (!qualified_[s]) out.push_back(s);
  }
  return out;
}

std::vector<PartySet> AccessStructure::minimal_qualified() const {
  std::vector<PartySet> out;
  for (PartySet s = 0; s <= universe(); ++s) {
    if (!qualified_[s]) continue;
    bool minimal = true;
    for (int i : members(s)) {
      if (qualified_[s & ~party_bit(i)]) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(s);
  }
  return out;
}

AccessStructure threshold_structure(int k, int n) {
  require_party_count(n);
  if (k < 1 || k > n) {
    throw InvalidArgumentError("threshold k = " + std::to_string(k) + " outside [1, n]");
  }
  std::vector<PartySet> qualified;
  for (PartySet s = 0; s < (PartySet{1} << n); ++s) {
    if (set_size(s) >= k) qualified.push_back(s);
  }
  return AccessStructure::from_qualified(n, qualified);
}

AccessStructure from_minimal_qualified(int n, const std::vector<PartySet>& min_qualified) {
  require_party_count(n);
  if (min_qualified.empty()) throw InvalidArgumentError("empty family of minimal qualified sets");
  for (std::size_t a = 0; a < min_qualified.size(); ++a) {
    require_subset(n, min_qualified[a]);
    for (std::size_t b = 0; b < min_qualified.size(); ++b) {
      if (a == b) continue;
      if ((min_qualified[a] & min_qualified[b]) == min_qualified[a]) {
        throw InvalidArgumentError("minimal qualified family is not an antichain: " +
                                   format_set(min_qualified[a]) + " within " +
                                   format_set(min_qualified[b]));
      }
    }
  }
  std::vector<PartySet> qualified;
  for (PartySet s = 0; s < (PartySet{1} << n); ++s) {
    for (PartySet q : min_qualified) {
      if ((s & q) == q) {
        qualified.push_back(s);
        break;
      }
    }
  }
  return AccessStructure::from_qualified(n, qualified);
}

bool is_monotone(const AccessStructure& g) {
  for (PartySet s = 0; s <= g.universe(); ++s) {
    for (int i = 1; i <= g.n(); ++i) {
      const PartySet bit = party_bit(i);
      if (s & bit) {
        // Subsets of forbidden sets are forbidden.
        if (g.is_forbidden(s) && g.is_qualified(s & ~bit)) return false;
      } else {
        // Supersets of qualified sets are qualified.
        if (g.is_qualified(s) && g.is_forbidden(s | bit)) return false;
      }
    }
  }
  return true;
}

std::vector<PartySet> maximal_forbidden_sets(const AccessStructure& g) {
  require_monotone(g);
  std::vector<PartySet> out;
  for (PartySet f : g.forbidden_sets()) {
    bool maximal = true;
    for (int i = 1; i <= g.n(); ++i) {
      if (!contains(f, i) && g.is_forbidden(f | party_bit(i))) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(f);
  }
  return out;
}

CumulativeMap::CumulativeMap(const AccessStructure& g)
    : maximal_forbidden_(maximal_forbidden_sets(g)), assignment_(static_cast<std::size_t>(g.n())) {
  for (int i = 1; i <= g.n(); ++i) {
    for (std::size_t j = 0; j < maximal_forbidden_.size(); ++j) {
      if (!contains(maximal_forbidden_[j], i)) assignment_[i - 1].push_back(static_cast<int>(j) + 1);
    }
  }
}

const std::vector<int>& CumulativeMap::phi(int party) const {
  if (party < 1 || party > n()) throw InvalidArgumentError("party index out of range");
  return assignment_[party - 1];
}

std::vector<int> CumulativeMap::phi_of_set(PartySet set) const {
  std::vector<bool> hit(static_cast<std::size_t>(m()) + 1, false);
  for (int i : members(set)) {
    for (int j : phi(i)) hit[j] = true;
  }
  std::vector<int> out;
  for (int j = 1; j <= m(); ++j) {
    if (hit[j]) out.push_back(j);
  }
  return out;
}

CumulativeMap cumulative_map(const AccessStructure& g) { return CumulativeMap(g); }

}  // namespace minss
