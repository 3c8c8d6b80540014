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

#include "minss/schemes.hpp"

#include <algorithm>

#include "minss/error.hpp"

namespace minss {
namespace {

const Rational kHalf(1, 2);

void require_bit(int b, const char* what) {
  if (b != 0 && b != 1) throw InvalidArgumentError(std::string(what) + " must be 0 or 1");
}

void require_biased(const Rational& p) {
  if (!(p > kHalf && p < Rational(1))) {
    throw InvalidArgumentError("p = " + p.to_string() + " must satisfy 1/2 < p < 1");
  }
}

// XOR building block over m >= 1 blocks: w_m = s xor w_1 xor ... xor w_{m-1}.
std::vector<int> xor_blocks(int secret, std::span<const int> randomness) {
  std::vector<int> w(randomness.begin(), randomness.end());
  int last = secret;
  for (int b : w) {
    require_bit(b, "randomness");
    last ^= b;
  }
  w.push_back(last);
  return w;
}

// Masses of the independent prefix (s, w1..w_{m-1}) with P(0) = p each.
Rational prefix_mass(const std::vector<int>& bits, const Rational& p) {
  const Rational q = Rational(1) - p;
  Rational mass(1);
  for (int b : bits) mass *= (b == 0 ? p : q);
  return mass;
}

std::vector<int> bits_of(std::uint64_t pattern, int count) {
  std::vector<int> out(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) out[i] = static_cast<int>((pattern >> (count - 1 - i)) & 1U);
  return out;
}

std::uint64_t checked_pow(std::uint64_t base, int exponent, std::uint64_t limit) {
  std::uint64_t out = 1;
  for (int i = 0; i < exponent; ++i) {
    if (out > limit / base) throw InvalidArgumentError("table size t^k exceeds supported bound");
    out *= base;
  }
  return out;
}

// Digits of `index` base t, most significant first: (s, r1..r_{k-1}).
std::vector<std::uint64_t> digits(std::uint64_t index, std::uint64_t t, int k) {
  std::vector<std::uint64_t> out(static_cast<std::size_t>(k));
  for (int i = k - 1; i >= 0; --i) {
    out[i] = index % t;
    index /= t;
  }
  return out;
}

DistributionTable::Row table_row(const PrimeField& field, int n, PartyPoints points,
                                 std::span<const std::uint64_t> coeffs) {
  if (coeffs.empty()) throw InvalidArgumentError("coefficient vector needs the secret");
  std::vector<FieldElement> r;
  for (std::size_t l = 1; l < coeffs.size(); ++l) r.push_back(field.element(coeffs[l]));
  const FieldElement s(field, coeffs[0] % field.modulus());
  DistributionTable::Row row{s.value()};
  for (int i = 1; i <= n; ++i) {
    row.push_back(eval_poly(s, r, party_point(field, static_cast<std::uint64_t>(i),
                                              static_cast<std::uint64_t>(n), points)).value());
  }
  return row;
}

ShareBundle bundle_from_row(const Pi2Params& params, const DistributionTable::Row& row) {
  std::vector<Share> shares;
  for (int i = 1; i <= params.n(); ++i) shares.push_back(Share{i, row[i], {}});
  return ShareBundle(params, std::move(shares));
}

std::uint64_t pack_subshares(const std::vector<int>& phi, const std::vector<int>& w) {
  std::uint64_t packed = 0;
  for (std::size_t l = 0; l < phi.size(); ++l) {
    packed |= static_cast<std::uint64_t>(w[phi[l] - 1]) << l;
  }
  return packed;
}

}  // namespace

std::string share_var(int party) { return "V" + std::to_string(party); }
std::string block_var(int j) { return "W" + std::to_string(j); }

VarList share_vars(PartySet parties) {
  VarList out;
  for (int i : members(parties)) out.push_back(share_var(i));
  return out;
}

// ---------------------------------------------------------------------------
// Parameters and bundles

Pi1Params::Pi1Params(int n, Rational p) : n_(n), p_(std::move(p)) {
  if (n_ < 2 || n_ > kMaxBlockShares) {
    throw InvalidArgumentError("Pi1 needs 2 <= n <= " + std::to_string(kMaxBlockShares));
  }
  require_biased(p_);
}

Pi2Params::Pi2Params(std::uint64_t t, int k, int n, Rational p, PartyPoints points)
    : field_(t), k_(k), n_(n), p_(std::move(p)), points_(points), rows_(0) {
  if (n_ < 1 || n_ > kMaxParties) throw InvalidArgumentError("Pi2 party count out of range");
  if (k_ < 1 || k_ > n_) throw InvalidArgumentError("Pi2 needs 1 <= k <= n");
  if (points_ == PartyPoints::Distinct && static_cast<std::uint64_t>(n_) >= t) {
    throw InvalidArgumentError("Pi2 needs n < t (n = " + std::to_string(n_) +
                               ", t = " + std::to_string(t) + ")");
  }
  rows_ = checked_pow(t, k_, std::uint64_t{1} << 40);
  const Rational floor(mpq_class(mpz_class(1), mpz_class(std::to_string(rows_))));
  if (p_ < floor || p_ >= Rational(1)) {
    throw InvalidArgumentError("p = " + p_.to_string() + " must satisfy 1/t^k <= p < 1");
  }
}

GeneralParams::GeneralParams(AccessStructure structure, Rational p)
    : structure_(std::move(structure)), p_(std::move(p)), map_(structure_) {
  require_biased(p_);
  if (structure_.is_qualified(0)) throw InvalidArgumentError("empty set is qualified");
  if (structure_.is_forbidden(structure_.universe())) {
    throw InvalidArgumentError("access structure has no qualified set");
  }
  if (map_.m() > kMaxBlockShares) {
    throw InvalidArgumentError("m = " + std::to_string(map_.m()) + " maximal forbidden sets exceeds " +
                               std::to_string(kMaxBlockShares));
  }
}

SchemeKind scheme_kind(const SchemeParams& params) {
  return static_cast<SchemeKind>(params.index());
}

std::string scheme_name(SchemeKind kind) {
  switch (kind) {
    case SchemeKind::Pi1: return "pi1";
    case SchemeKind::Pi2: return "pi2";
    case SchemeKind::General: return "general";
  }
  return "?";
}

ShareBundle::ShareBundle(SchemeParams params, std::vector<Share> shares)
    : params_(std::move(params)), shares_(std::move(shares)) {
  std::sort(shares_.begin(), shares_.end(),
            [](const Share& a, const Share& b) { return a.party < b.party; });
  const int n = std::visit([](const auto& p) { return p.n(); }, params_);
  for (std::size_t i = 0; i < shares_.size(); ++i) {
    auto& s = shares_[i];
    if (s.party < 1 || s.party > n) {
      throw InvalidArgumentError("share for party " + std::to_string(s.party) + " outside [1, n]");
    }
    if (i > 0 && shares_[i - 1].party == s.party) {
      throw InvalidArgumentError("duplicate share for party " + std::to_string(s.party));
    }
    switch (kind()) {
      case SchemeKind::Pi1:
        if (s.value > 1 || !s.subshares.empty()) throw InvalidArgumentError("Pi1 shares are bits");
        break;
      case SchemeKind::Pi2:
        if (s.value >= std::get<Pi2Params>(params_).t() || !s.subshares.empty()) {
          throw InvalidArgumentError("Pi2 share value not a field element");
        }
        break;
      case SchemeKind::General: {
        if (s.value != 0) throw InvalidArgumentError("general shares carry sub-shares only");
        std::sort(s.subshares.begin(), s.subshares.end(),
                  [](const SubShare& a, const SubShare& b) { return a.j < b.j; });
        const auto& phi = std::get<GeneralParams>(params_).map().phi(s.party);
        if (s.subshares.size() != phi.size()) {
          throw InvalidArgumentError("party " + std::to_string(s.party) + " holds the wrong number of sub-shares");
        }
        for (std::size_t l = 0; l < phi.size(); ++l) {
          if (s.subshares[l].j != phi[l]) {
            throw InvalidArgumentError("party " + std::to_string(s.party) + " holds sub-share j = " +
                                       std::to_string(s.subshares[l].j) + " outside phi(i)");
          }
          require_bit(s.subshares[l].bit, "sub-share");
        }
        break;
      }
    }
  }
}

PartySet ShareBundle::parties() const {
  PartySet out = 0;
  for (const auto& s : shares_) out |= party_bit(s.party);
  return out;
}

const Share& ShareBundle::share(int party) const {
  for (const auto& s : shares_) {
    if (s.party == party) return s;
  }
  throw InvalidArgumentError("no share for party " + std::to_string(party));
}

ShareBundle ShareBundle::restricted_to(PartySet parties) const {
  std::vector<Share> kept;
  for (const auto& s : shares_) {
    if (contains(parties, s.party)) kept.push_back(s);
  }
  return ShareBundle(params_, std::move(kept));
}

// ---------------------------------------------------------------------------
// Pi1

int pi1_sample_secret(const Pi1Params& params, Rng& rng) { return rng.bernoulli(params.p()) ? 0 : 1; }

ShareBundle pi1_share_with(int secret, const Pi1Params& params, std::span<const int> randomness) {
  require_bit(secret, "secret");
  if (static_cast<int>(randomness.size()) != params.n() - 1) {
    throw InvalidArgumentError("Pi1 needs n - 1 random bits");
  }
  const auto v = xor_blocks(secret, randomness);
  std::vector<Share> shares;
  for (int i = 1; i <= params.n(); ++i) shares.push_back(Share{i, static_cast<std::uint64_t>(v[i - 1]), {}});
  return ShareBundle(params, std::move(shares));
}

ShareBundle pi1_share(int secret, const Pi1Params& params, Rng& rng) {
  std::vector<int> randomness;
  for (int i = 1; i < params.n(); ++i) randomness.push_back(rng.bernoulli(params.p()) ? 0 : 1);
  return pi1_share_with(secret, params, randomness);
}

int pi1_combine(const ShareBundle& bundle) {
  const auto& params = std::get<Pi1Params>(bundle.params());
  const PartySet all = (PartySet{1} << params.n()) - 1;
  if (bundle.parties() != all) {
    throw NotQualifiedError(format_set(bundle.parties()) + " in an (n,n) scheme");
  }
  int s = 0;
  for (const auto& share : bundle.shares()) s ^= static_cast<int>(share.value);
  return s;
}

JointDist pi1_joint_distribution(const Pi1Params& params) {
  const int n = params.n();
  VarList vars{kSecretVar};
  for (int i = 1; i <= n; ++i) vars.push_back(share_var(i));
  std::map<Tuple, Rational> table;
  for (std::uint64_t pattern = 0; pattern < (std::uint64_t{1} << n); ++pattern) {
    const auto prefix = bits_of(pattern, n);  // (s, v1..v_{n-1})
    const auto v = xor_blocks(prefix[0], std::span<const int>(prefix).subspan(1));
    Tuple row{prefix[0]};
    row.insert(row.end(), v.begin(), v.end());
    table.emplace(std::move(row), prefix_mass(prefix, params.p()));
  }
  return JointDist(std::move(vars), std::move(table));
}

// ---------------------------------------------------------------------------
// Pi2

DistributionTable::DistributionTable(const PrimeField& field, int k, int n, PartyPoints points)
    : field_(field), k_(k), n_(n) {
  if (n < 1 || n > kMaxParties) throw InvalidArgumentError("table party count out of range");
  if (k < 1 || k > n) throw InvalidArgumentError("table needs 1 <= k <= n");
  if (points == PartyPoints::Distinct && static_cast<std::uint64_t>(n) >= field.modulus()) {
    throw InvalidArgumentError("table needs n < t for distinct nonzero party points");
  }
  const std::uint64_t count = checked_pow(field.modulus(), k, 1'000'000);
  rows_.reserve(count);
  for (std::uint64_t index = 0; index < count; ++index) {
    const auto coeffs = digits(index, field.modulus(), k);
    rows_.push_back(table_row(field, n, points, coeffs));
    index_.insert(rows_.back());
  }
  // Colliding points can make the coefficient map non-injective; rows then repeat.
  if (points == PartyPoints::Distinct && index_.size() != rows_.size()) {
    throw Error("distribution table rows are not distinct");
  }
}

DistributionTable pi2_distribution_table(const PrimeField& field, int k, int n, PartyPoints points) {
  return DistributionTable(field, k, n, points);
}

DistributionTable::Row pi2_row(const Pi2Params& params, std::span<const std::uint64_t> coeffs) {
  if (static_cast<int>(coeffs.size()) != params.k()) {
    throw InvalidArgumentError("Pi2 coefficient vector needs k entries");
  }
  for (auto c : coeffs) {
    if (c >= params.t()) throw InvalidArgumentError("coefficient not a field element");
  }
  return table_row(params.field(), params.n(), params.points(), coeffs);
}

JointDist pi2_joint_distribution(const Pi2Params& params) {
  const auto table = pi2_distribution_table(params.field(), params.k(), params.n(), params.points());
  const Rational rest = (Rational(1) - params.p()) /
                        Rational(mpq_class(mpz_class(std::to_string(params.rows() - 1))));
  VarList vars{kSecretVar};
  for (int i = 1; i <= params.n(); ++i) vars.push_back(share_var(i));
  // Pushforward of the coefficient distribution: p on the zero vector, the rest uniform.
  std::map<Tuple, Rational> joint;
  const auto& rows = table.rows();
  for (std::size_t index = 0; index < rows.size(); ++index) {
    joint[Tuple(rows[index].begin(), rows[index].end())] += index == 0 ? params.p() : rest;
  }
  return JointDist(std::move(vars), std::move(joint));
}

ShareBundle pi2_share_with(const Pi2Params& params, std::span<const std::uint64_t> coeffs) {
  return bundle_from_row(params, pi2_row(params, coeffs));
}

std::pair<FieldElement, ShareBundle> pi2_sample(const Pi2Params& params, Rng& rng) {
  std::uint64_t index = 0;
  if (!rng.bernoulli(params.p())) index = 1 + rng.uniform_below(params.rows() - 1);
  const auto coeffs = digits(index, params.t(), params.k());
  const auto row = pi2_row(params, coeffs);
  return {FieldElement(params.field(), row[0]), bundle_from_row(params, row)};
}

ShareBundle pi2_share(std::uint64_t secret, const Pi2Params& params, Rng& rng) {
  if (secret >= params.t()) throw InvalidArgumentError("secret not a field element");
  const std::uint64_t per_secret = params.rows() / params.t();  // t^{k-1}
  std::vector<std::uint64_t> coeffs{secret};
  std::uint64_t tail = 0;
  if (secret == 0) {
    // P(r = 0 | s = 0) = p / (p + (t^{k-1} - 1) (1 - p) / (t^k - 1)); the
    // remaining randomness vectors are equally likely.
    const Rational rest = (Rational(1) - params.p()) /
                          Rational(mpq_class(mpz_class(std::to_string(params.rows() - 1))));
    const Rational given_zero =
        params.p() + Rational(mpq_class(mpz_class(std::to_string(per_secret - 1)))) * rest;
    if (!rng.bernoulli(params.p() / given_zero)) tail = 1 + rng.uniform_below(per_secret - 1);
  } else {
    tail = rng.uniform_below(per_secret);
  }
  const auto r = digits(tail, params.t(), params.k() - 1);
  coeffs.insert(coeffs.end(), r.begin(), r.end());
  return pi2_share_with(params, coeffs);
}

FieldElement pi2_combine(const ShareBundle& bundle, const Pi2Params& params) {
  if (bundle.kind() != SchemeKind::Pi2 || std::get<Pi2Params>(bundle.params()) != params) {
    throw InvalidArgumentError("bundle does not belong to these Pi2 parameters");
  }
  if (static_cast<int>(bundle.shares().size()) < params.k()) {
    throw NotQualifiedError(format_set(bundle.parties()) + " has fewer than k = " +
                            std::to_string(params.k()) + " parties");
  }
  std::vector<std::pair<FieldElement, FieldElement>> points;
  for (int l = 0; l < params.k(); ++l) {
    const auto& share = bundle.shares()[l];
    points.emplace_back(party_point(params.field(), static_cast<std::uint64_t>(share.party),
                                    static_cast<std::uint64_t>(params.n()), params.points()),
                        FieldElement(params.field(), share.value));
  }
  return lagrange_at_zero(points);
}

// ---------------------------------------------------------------------------
// General access structures

ShareBundle general_share_with(int secret, const GeneralParams& params,
                               std::span<const int> randomness) {
  require_bit(secret, "secret");
  if (static_cast<int>(randomness.size()) != params.m() - 1) {
    throw InvalidArgumentError("general scheme needs m - 1 random bits");
  }
  const auto w = xor_blocks(secret, randomness);
  std::vector<Share> shares;
  for (int i = 1; i <= params.n(); ++i) {
    Share share{i, 0, {}};
    for (int j : params.map().phi(i)) share.subshares.push_back(SubShare{j, w[j - 1]});
    shares.push_back(std::move(share));
  }
  return ShareBundle(params, std::move(shares));
}

ShareBundle general_share(int secret, const GeneralParams& params, Rng& rng) {
  std::vector<int> randomness;
  for (int j = 1; j < params.m(); ++j) randomness.push_back(rng.bernoulli(params.p()) ? 0 : 1);
  return general_share_with(secret, params, randomness);
}

int general_combine(const ShareBundle& bundle, const GeneralParams& params) {
  if (bundle.kind() != SchemeKind::General || std::get<GeneralParams>(bundle.params()) != params) {
    throw InvalidArgumentError("bundle does not belong to these general-scheme parameters");
  }
  if (!params.structure().is_qualified(bundle.parties())) {
    throw NotQualifiedError(format_set(bundle.parties()) + " is forbidden");
  }
  std::vector<std::optional<int>> w(static_cast<std::size_t>(params.m()));
  for (const auto& share : bundle.shares()) {
    for (const auto& sub : share.subshares) {
      auto& slot = w[sub.j - 1];
      if (slot && *slot != sub.bit) {
        throw InvalidArgumentError("inconsistent copies of sub-share j = " + std::to_string(sub.j));
      }
      slot = sub.bit;
    }
  }
  int s = 0;
  for (std::size_t j = 0; j < w.size(); ++j) {
    if (!w[j]) throw NotQualifiedError("sub-share j = " + std::to_string(j + 1) + " is missing");
    s ^= *w[j];
  }
  return s;
}

namespace {

JointDist general_joint(const GeneralParams& params, bool with_blocks) {
  const int m = params.m();
  const int n = params.n();
  VarList vars{kSecretVar};
  if (with_blocks) {
    for (int j = 1; j <= m; ++j) vars.push_back(block_var(j));
  }
  for (int i = 1; i <= n; ++i) vars.push_back(share_var(i));
  std::map<Tuple, Rational> table;
  for (std::uint64_t pattern = 0; pattern < (std::uint64_t{1} << m); ++pattern) {
    const auto prefix = bits_of(pattern, m);  // (s, w1..w_{m-1})
    const auto w = xor_blocks(prefix[0], std::span<const int>(prefix).subspan(1));
    Tuple row{prefix[0]};
    if (with_blocks) row.insert(row.end(), w.begin(), w.end());
    for (int i = 1; i <= n; ++i) {
      row.push_back(static_cast<Symbol>(pack_subshares(params.map().phi(i), w)));
    }
    table[row] += prefix_mass(prefix, params.p());
  }
  return JointDist(std::move(vars), std::move(table));
}

}  // namespace

JointDist general_joint_distribution(const GeneralParams& params) { return general_joint(params, false); }
JointDist general_extended_joint(const GeneralParams& params) { return general_joint(params, true); }

std::uint64_t combine(const ShareBundle& bundle) {
  switch (bundle.kind()) {
    case SchemeKind::Pi1:
      return static_cast<std::uint64_t>(pi1_combine(bundle));
    case SchemeKind::Pi2:
      return pi2_combine(bundle, std::get<Pi2Params>(bundle.params())).value();
    case SchemeKind::General:
      return static_cast<std::uint64_t>(
          general_combine(bundle, std::get<GeneralParams>(bundle.params())));
  }
  return 0;
}

JointDist joint_distribution(const SchemeParams& params) {
  switch (scheme_kind(params)) {
    case SchemeKind::Pi1: return pi1_joint_distribution(std::get<Pi1Params>(params));
    case SchemeKind::Pi2: return pi2_joint_distribution(std::get<Pi2Params>(params));
    case SchemeKind::General: return general_joint_distribution(std::get<GeneralParams>(params));
  }
  throw InvalidArgumentError("unknown scheme");
}

AccessStructure realized_structure(const SchemeParams& params) {
  switch (scheme_kind(params)) {
    case SchemeKind::Pi1: {
      const int n = std::get<Pi1Params>(params).n();
      return threshold_structure(n, n);
    }
    case SchemeKind::Pi2: {
      const auto& p = std::get<Pi2Params>(params);
      return threshold_structure(p.k(), p.n());
    }
    case SchemeKind::General:
      return std::get<GeneralParams>(params).structure();
  }
  throw InvalidArgumentError("unknown scheme");
}

}  // namespace minss
