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
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "minss/access.hpp"
#include "minss/entropy.hpp"
#include "minss/field.hpp"
#include "minss/random.hpp"
#include "minss/rational.hpp"

namespace minss {

// Variable names used by every joint-distribution oracle: S, V1..Vn, W1..Wm.
inline constexpr const char* kSecretVar = "S";
std::string share_var(int party);
std::string block_var(int j);
VarList share_vars(PartySet parties);

// (n, n) scheme over bits: S, V1..V_{n-1} independent with P(0) = p, and
// Vn = S xor V1 xor ... xor V_{n-1}.
class Pi1Params {
 public:
  // n >= 2, 1/2 < p < 1.
  Pi1Params(int n, Rational p);

  int n() const { return n_; }
  const Rational& p() const { return p_; }

  friend bool operator==(const Pi1Params&, const Pi1Params&) = default;

 private:
  int n_;
  Rational p_;
};

// (k, n) threshold scheme over F_t whose joint puts mass p on the all-zero
// row of the distribution table and spreads 1 - p evenly over the rest.
class Pi2Params {
 public:
  // 1 <= k <= n, 1/t^k <= p < 1; n < t unless points == ReducedModT.
  Pi2Params(std::uint64_t t, int k, int n, Rational p,
            PartyPoints points = PartyPoints::Distinct);

  const PrimeField& field() const { return field_; }
  std::uint64_t t() const { return field_.modulus(); }
  int k() const { return k_; }
  int n() const { return n_; }
  const Rational& p() const { return p_; }
  PartyPoints points() const { return points_; }
  // t^k, the number of table rows.
  std::uint64_t rows() const { return rows_; }

  friend bool operator==(const Pi2Params&, const Pi2Params&) = default;

 private:
  PrimeField field_;
  int k_;
  int n_;
  Rational p_;
  PartyPoints points_;
  std::uint64_t rows_;
};

// Binary secret shared over a monotone access structure by compiling an
// (m, m) Pi1 instance through the cumulative map.
class GeneralParams {
 public:
  // Monotone structure with at least one qualified and one forbidden set; 1/2 < p < 1.
  GeneralParams(AccessStructure structure, Rational p);

  const AccessStructure& structure() const { return structure_; }
  const CumulativeMap& map() const { return map_; }
  const Rational& p() const { return p_; }
  int n() const { return structure_.n(); }
  int m() const { return map_.m(); }

  friend bool operator==(const GeneralParams& a, const GeneralParams& b) {
    return a.structure_ == b.structure_ && a.p_ == b.p_;
  }

 private:
  AccessStructure structure_;
  Rational p_;
  CumulativeMap map_;
};

using SchemeParams = std::variant<Pi1Params, Pi2Params, GeneralParams>;
enum class SchemeKind { Pi1, Pi2, General };

SchemeKind scheme_kind(const SchemeParams& params);
std::string scheme_name(SchemeKind kind);  // "pi1", "pi2", "general"

struct SubShare {
  int j = 0;
  int bit = 0;
  friend bool operator==(const SubShare&, const SubShare&) = default;
};

// One party's share: `value` for Pi1 (a bit) and Pi2 (a field element),
// `subshares` for the general scheme.
struct Share {
  int party = 0;
  std::uint64_t value = 0;
  std::vector<SubShare> subshares;
  friend bool operator==(const Share&, const Share&) = default;
};

class ShareBundle {
 public:
  ShareBundle(SchemeParams params, std::vector<Share> shares);

  const SchemeParams& params() const { return params_; }
  SchemeKind kind() const { return scheme_kind(params_); }
  // Ordered by party.
  const std::vector<Share>& shares() const { return shares_; }
  PartySet parties() const;
  const Share& share(int party) const;
  ShareBundle restricted_to(PartySet parties) const;

  friend bool operator==(const ShareBundle&, const ShareBundle&) = default;

 private:
  SchemeParams params_;
  std::vector<Share> shares_;
};

// ---------------------------------------------------------------------------
// Pi1

int pi1_sample_secret(const Pi1Params& params, Rng& rng);
ShareBundle pi1_share(int secret, const Pi1Params& params, Rng& rng);
// Deterministic core: `randomness` holds v1..v_{n-1}.
ShareBundle pi1_share_with(int secret, const Pi1Params& params, std::span<const int> randomness);
int pi1_combine(const ShareBundle& bundle);
JointDist pi1_joint_distribution(const Pi1Params& params);

// ---------------------------------------------------------------------------
// Pi2

// Rows (s, v1..vn) of the table, in lexicographic order of (s, r1..r_{k-1}).
// Rows are distinct under PartyPoints::Distinct and may repeat otherwise.
class DistributionTable {
 public:
  using Row = std::vector<std::uint64_t>;

  DistributionTable(const PrimeField& field, int k, int n, PartyPoints points);

  const PrimeField& field() const { return field_; }
  int k() const { return k_; }
  int n() const { return n_; }
  const std::vector<Row>& rows() const { return rows_; }
  bool contains(const Row& row) const { return index_.count(row) != 0; }

 private:
  PrimeField field_;
  int k_;
  int n_;
  std::vector<Row> rows_;
  std::set<Row> index_;
};

DistributionTable pi2_distribution_table(const PrimeField& field, int k, int n,
                                         PartyPoints points = PartyPoints::Distinct);
// Row for the coefficient vector (s, r1..r_{k-1}).
DistributionTable::Row pi2_row(const Pi2Params& params, std::span<const std::uint64_t> coeffs);
JointDist pi2_joint_distribution(const Pi2Params& params);
// Draws a row of the joint: all-zero with probability p, else uniformly
// among the other t^k - 1 rows.
std::pair<FieldElement, ShareBundle> pi2_sample(const Pi2Params& params, Rng& rng);
// Shares of a given secret, drawn from the joint conditioned on S = secret.
ShareBundle pi2_share(std::uint64_t secret, const Pi2Params& params, Rng& rng);
ShareBundle pi2_share_with(const Pi2Params& params, std::span<const std::uint64_t> coeffs);
FieldElement pi2_combine(const ShareBundle& bundle, const Pi2Params& params);

// ---------------------------------------------------------------------------
// General access structures

ShareBundle general_share(int secret, const GeneralParams& params, Rng& rng);
// Deterministic core: `randomness` holds w1..w_{m-1}.
ShareBundle general_share_with(int secret, const GeneralParams& params,
                               std::span<const int> randomness);
int general_combine(const ShareBundle& bundle, const GeneralParams& params);
// Joint over (S, V1..Vn); V_i is the packed sub-tuple, bit l = w_{phi(i)[l]}.
JointDist general_joint_distribution(const GeneralParams& params);
// Joint over (S, W1..Wm, V1..Vn).
JointDist general_extended_joint(const GeneralParams& params);

inline constexpr int kMaxBlockShares = 20;

// Dispatch on the bundle's own parameters. Returns the secret as an integer.
std::uint64_t combine(const ShareBundle& bundle);

// Exact joint over (S, V1..Vn) for any scheme.
JointDist joint_distribution(const SchemeParams& params);
// The access structure a scheme realizes: (n, n), (k, n) or the given one.
AccessStructure realized_structure(const SchemeParams& params);

}  // namespace minss
