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

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "minss/access.hpp"
#include "minss/entropy.hpp"
#include "minss/rational.hpp"
#include "minss/schemes.hpp"

namespace minss {

// Joints handed to the verifier range over S, V1..Vn.

struct GapEntry {
  PartySet forbidden = 0;
  // R_a(S) - R_a(S | V_F) in bits; exactly 0.0 when exact_zero holds.
  double gap_bits = 0.0;
  // Decided without tolerance: guessing probabilities at order infinity,
  // exact independence of S and V_F at every other order.
  bool exact_zero = false;
  // Order infinity only: max_s P(s) and sum_v max_s P(s, v).
  std::optional<Rational> secret_prelog;
  std::optional<Rational> conditional_prelog;
};

struct SecurityReport {
  Order order = Order::infinity();
  std::vector<GapEntry> gaps;  // every forbidden set, ascending bitmask
  double epsilon = 0.0;
  bool perfect = false;  // every gap exactly zero at this order
  // First forbidden set (ascending bitmask) on which S and V_F are dependent,
  // i.e. H(S | V_F) < H(S).
  std::optional<PartySet> non_perfect_witness;
};

SecurityReport epsilon_security(const JointDist& j, const AccessStructure& g, const Order& a);

// Some forbidden set strictly lowers the Shannon entropy of the secret.
std::pair<bool, std::optional<PartySet>> is_non_perfect(const JointDist& j, const AccessStructure& g);

struct BoundCheck {
  std::string name;  // eps-bound, perfect-bound, *-secure-*, shannon-entropy-bound, alphabet-size-bound
  int party = 0;
  std::string order;
  double share_value = 0.0;   // left-hand side
  double secret_value = 0.0;  // right-hand side (secret entropy minus epsilon)
  bool applicable = true;     // premise of the statement holds for this joint
  bool pass = false;          // inequality holds
};

struct ShareBoundsReport {
  std::string order;
  double epsilon = 0.0;
  bool min_entropy_secure = false;  // every R~_inf gap exactly zero
  bool shannon_secure = false;      // S independent of every V_F
  std::vector<BoundCheck> checks;
  bool pass = false;  // every applicable check passes
};

inline constexpr double kBoundTolerance = 1e-9;

// Lower bounds on share entropies given epsilon-security at order `a`, plus
// the perfect-security special cases. Every inequality is evaluated; only
// those whose premise holds count towards `pass`.
ShareBoundsReport check_share_bounds(const JointDist& j, const AccessStructure& g, const Order& a,
                                     double epsilon);

struct PartyIdeality {
  int party = 0;
  Rational share_max;
  double share_bits = 0.0;
  bool equal = false;
};

struct IdealityReport {
  Rational secret_max;
  double secret_bits = 0.0;
  std::vector<PartyIdeality> parties;
  bool ideal = false;
};

IdealityReport ideality(const JointDist& j);

struct Claim {
  std::string label;
  bool pass = false;
  std::string detail;
};

// Outcome of checking one construction's claims on its exact joint.
struct ClaimReport {
  std::string name;
  std::vector<Claim> claims;
  // Named exact quantities the claims were decided on.
  std::map<std::string, Rational> values;
  bool pass = false;

  void add(std::string label, bool ok, std::string detail = {});
  std::vector<const Claim*> failures() const;
};

ClaimReport theorem5_check(const Pi1Params& params);
ClaimReport theorem6_check(const Pi2Params& params);
ClaimReport theorem4_check(const GeneralParams& params);

// Closed forms used by theorem6_check.
Rational pi2_secret_zero_mass(const Pi2Params& params);     // (p t^k + (1-p) t^{k-1} - 1)/(t^k - 1)
Rational pi2_secret_nonzero_mass(const Pi2Params& params);  // t^{k-1} (1-p)/(t^k - 1)
Rational pi2_zero_condition_mass(const Pi2Params& params);  // p + (t-1)(1-p)/(t^k - 1)

// True when the largest gap over all forbidden sets is attained on a
// maximal forbidden set.
bool gap_maximized_at_maximal(const SecurityReport& report, const AccessStructure& g);

}  // namespace minss
