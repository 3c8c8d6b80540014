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

#include <cstdint>
#include <string>
#include <vector>

namespace minss {

// Subset of parties [n]; party i (1-based) is bit i-1.
using PartySet = std::uint32_t;

inline constexpr int kMaxParties = 20;

PartySet party_bit(int party);
bool contains(PartySet set, int party);
int set_size(PartySet set);
std::vector<int> members(PartySet set);
PartySet make_set(const std::vector<int>& parties);
std::string format_set(PartySet set);  // "{1,3}"

// Partition of 2^[n] into qualified and forbidden sets, stored as one flag
// per subset (forbidden is the complement of qualified).
class AccessStructure {
 public:
  // Qualified family given explicitly; the rest is forbidden. No monotonicity
  // requirement, so violations can be represented and detected.
  static AccessStructure from_qualified(int n, const std::vector<PartySet>& qualified);
  // Both families given; they must partition 2^[n].
  static AccessStructure from_partition(int n, const std::vector<PartySet>& qualified,
                                        const std::vector<PartySet>& forbidden);

  int n() const { return n_; }
  PartySet universe() const { return n_ == 0 ? 0 : (PartySet{1} << n_) - 1; }
  bool is_qualified(PartySet set) const;
  bool is_forbidden(PartySet set) const { return !is_qualified(set); }

  // Ascending bitmask order.
  std::vector<PartySet> qualified_sets() const;
  std::vector<PartySet> forbidden_sets() const;
  // Inclusion-minimal qualified sets, ascending bitmask order.
  std::vector<PartySet> minimal_qualified() const;

  friend bool operator==(const AccessStructure&, const AccessStructure&) = default;

 private:
  AccessStructure(int n, std::vector<bool> qualified) : n_(n), qualified_(std::move(qualified)) {}

  int n_;
  std::vector<bool> qualified_;
};

// (k, n)-threshold: qualified iff |Q| >= k.
AccessStructure threshold_structure(int k, int n);

// Upward closure of an antichain of minimal qualified sets.
AccessStructure from_minimal_qualified(int n, const std::vector<PartySet>& min_qualified);

bool is_monotone(const AccessStructure& g);

// Forbidden sets F with F + {i} qualified for all i outside F, ascending bitmask.
std::vector<PartySet> maximal_forbidden_sets(const AccessStructure& g);

// phi(i) = { j : party i not in F_j } over the maximal forbidden sets F_1..F_m.
class CumulativeMap {
 public:
  explicit CumulativeMap(const AccessStructure& g);

  int n() const { return static_cast<int>(assignment_.size()); }
  int m() const { return static_cast<int>(maximal_forbidden_.size()); }
  const std::vector<PartySet>& maximal_forbidden() const { return maximal_forbidden_; }
  // Ascending 1-based indices into [m].
  const std::vector<int>& phi(int party) const;
  // Union of phi(i) over i in the set, ascending.
  std::vector<int> phi_of_set(PartySet set) const;

 private:
  std::vector<PartySet> maximal_forbidden_;
  std::vector<std::vector<int>> assignment_;
};

CumulativeMap cumulative_map(const AccessStructure& g);

}  // namespace minss
