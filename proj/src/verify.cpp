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

#include "minss/verify.hpp"

#include <algorithm>
#include <cmath>

#include "minss/error.hpp"

namespace minss {
namespace {

Rational from_u64(std::uint64_t v) { return Rational(mpq_class(mpz_class(std::to_string(v)))); }

void require_scheme_joint(const JointDist& j, int n) {
  if (static_cast<int>(j.arity()) != n + 1 || !j.has_variable(kSecretVar)) {
    throw InvalidArgumentError("joint must range over S, V1..V" + std::to_string(n));
  }
  for (int i = 1; i <= n; ++i) {
    if (!j.has_variable(share_var(i))) {
      throw InvalidArgumentError("joint lacks variable " + share_var(i));
    }
  }
}

int party_count(const JointDist& j) {
  const int n = static_cast<int>(j.arity()) - 1;
  require_scheme_joint(j, n);
  return n;
}

// Whether the `from` coordinates determine the `to` coordinates on the support.
bool determines(const JointDist& j, const VarList& from, const VarList& to) {
  std::vector<std::size_t> fi;
  std::vector<std::size_t> ti;
  for (const auto& v : from) fi.push_back(j.index_of(v));
  for (const auto& v : to) ti.push_back(j.index_of(v));
  std::map<Tuple, Tuple> seen;
  for (const auto& [row, mass] : j.table()) {
    Tuple key;
    Tuple value;
    for (auto i : fi) key.push_back(row[i]);
    for (auto i : ti) value.push_back(row[i]);
    auto [it, inserted] = seen.emplace(std::move(key), value);
    if (!inserted && it->second != value) return false;
  }
  return true;
}

std::string eq_detail(const Rational& got, const Rational& want) {
  return "got " + got.to_string() + ", expected " + want.to_string();
}

const std::vector<Order>& all_finite_orders() {
  static const std::vector<Order> orders{Order::zero(), Order::finite(Rational(1, 2)), Order::one(),
                                         Order::finite(Rational(2)), Order::infinity()};
  return orders;
}

}  // namespace

// ---------------------------------------------------------------------------
// Security

SecurityReport epsilon_security(const JointDist& j, const AccessStructure& g, const Order& a) {
  require_scheme_joint(j, g.n());
  if (a.kind() == Order::Kind::Zero) {
    throw UnsupportedOrderError("security at order 0 needs conditional order 0, which is not supported");
  }
  const VarList secret{kSecretVar};
  const ProbDist ps = j.marginal(kSecretVar);
  const double secret_entropy = renyi_entropy(ps, a);

  SecurityReport report;
  report.order = a;
  report.perfect = true;
  for (PartySet f : g.forbidden_sets()) {
    GapEntry entry;
    entry.forbidden = f;
    const VarList given = share_vars(f);
    const bool independent = j.independent(secret, given);
    if (!independent && !report.non_perfect_witness) report.non_perfect_witness = f;
    if (a.kind() == Order::Kind::Infinity) {
      entry.secret_prelog = ps.max_mass();
      entry.conditional_prelog = f == 0 ? ps.max_mass() : avg_cond_min_entropy(j, secret, given).guess_probability;
      entry.exact_zero = *entry.secret_prelog == *entry.conditional_prelog;
      entry.gap_bits = entry.exact_zero ? 0.0 : log2(*entry.conditional_prelog / *entry.secret_prelog);
    } else {
      entry.exact_zero = f == 0 || independent;
      entry.gap_bits = entry.exact_zero ? 0.0 : secret_entropy - cond_renyi_arimoto(j, secret, given, a);
    }
    report.perfect = report.perfect && entry.exact_zero;
    report.epsilon = std::max(report.epsilon, entry.gap_bits);
    report.gaps.push_back(std::move(entry));
  }
  return report;
}

std::pair<bool, std::optional<PartySet>> is_non_perfect(const JointDist& j, const AccessStructure& g) {
  require_scheme_joint(j, g.n());
  for (PartySet f : g.forbidden_sets()) {
    if (!j.independent({kSecretVar}, share_vars(f))) return {true, f};
  }
  return {false, std::nullopt};
}

bool gap_maximized_at_maximal(const SecurityReport& report, const AccessStructure& g) {
  double worst = 0.0;
  for (const auto& e : report.gaps) worst = std::max(worst, e.gap_bits);
  if (worst == 0.0) return true;
  for (PartySet f : maximal_forbidden_sets(g)) {
    for (const auto& e : report.gaps) {
      if (e.forbidden == f && e.gap_bits >= worst - 1e-12) return true;
    }
  }
  return false;
}

// ---------------------------------------------------------------------------
// Share bounds

ShareBoundsReport check_share_bounds(const JointDist& j, const AccessStructure& g, const Order& a,
                                     double epsilon) {
  require_scheme_joint(j, g.n());
  const VarList secret{kSecretVar};
  const ProbDist ps = j.marginal(kSecretVar);

  ShareBoundsReport report;
  report.order = a.to_string();
  report.epsilon = epsilon;
  report.min_entropy_secure = true;
  report.shannon_secure = true;
  for (PartySet f : g.forbidden_sets()) {
    if (f == 0) continue;
    const VarList given = share_vars(f);
    if (!j.independent(secret, given)) report.shannon_secure = false;
    if (avg_cond_min_entropy(j, secret, given).guess_probability != ps.max_mass()) {
      report.min_entropy_secure = false;
    }
  }

  auto add = [&report](std::string name, int party, const Order& order, double lhs, double rhs,
                       bool applicable, bool pass) {
    report.checks.push_back(BoundCheck{std::move(name), party, order.to_string(), lhs, rhs, applicable, pass});
  };

  for (int i = 1; i <= g.n(); ++i) {
    const ProbDist pv = j.marginal(share_var(i));
    const double share_a = renyi_entropy(pv, a);
    const double secret_a = renyi_entropy(ps, a);
    add("eps-bound", i, a, share_a, secret_a - epsilon, true,
        share_a >= secret_a - epsilon - kBoundTolerance);
    add("perfect-bound", i, a, share_a, secret_a, epsilon == 0.0, share_a >= secret_a - kBoundTolerance);

    // Min-entropy comparisons are exact: R_inf(V) >= R_inf(S) iff max P_V <= max P_S.
    const bool inf_bound = pv.max_mass() <= ps.max_mass();
    const double share_inf = -log2(pv.max_mass());
    const double secret_inf = -log2(ps.max_mass());
    add("min-entropy-secure-bound", i, Order::infinity(), share_inf, secret_inf, report.min_entropy_secure, inf_bound);
    for (const auto& order : all_finite_orders()) {
      const double lhs = renyi_entropy(pv, order);
      const double rhs = renyi_entropy(ps, order);
      add("shannon-secure-bound", i, order, lhs, rhs, report.shannon_secure, lhs >= rhs - kBoundTolerance);
    }
    add("shannon-secure-min-entropy", i, Order::infinity(), share_inf, secret_inf, report.shannon_secure, inf_bound);
    const double hv = shannon_entropy(pv);
    const double hs = shannon_entropy(ps);
    add("shannon-entropy-bound", i, Order::one(), hv, hs, report.shannon_secure, hv >= hs - kBoundTolerance);
    add("alphabet-size-bound", i, Order::zero(), static_cast<double>(pv.support_size()),
        static_cast<double>(ps.support_size()), report.shannon_secure, pv.support_size() >= ps.support_size());
  }
  report.pass = std::all_of(report.checks.begin(), report.checks.end(),
                            [](const BoundCheck& c) { return !c.applicable || c.pass; });
  return report;
}

// ---------------------------------------------------------------------------
// Ideality

IdealityReport ideality(const JointDist& j) {
  const int n = party_count(j);
  IdealityReport report;
  report.secret_max = j.marginal(kSecretVar).max_mass();
  report.secret_bits = -log2(report.secret_max);
  report.ideal = true;
  for (int i = 1; i <= n; ++i) {
    PartyIdeality entry;
    entry.party = i;
    entry.share_max = j.marginal(share_var(i)).max_mass();
    entry.share_bits = -log2(entry.share_max);
    entry.equal = entry.share_max == report.secret_max;
    report.ideal = report.ideal && entry.equal;
    report.parties.push_back(std::move(entry));
  }
  return report;
}

// ---------------------------------------------------------------------------
// Construction checks

void ClaimReport::add(std::string label, bool ok, std::string detail) {
  claims.push_back(Claim{std::move(label), ok, std::move(detail)});
  pass = std::all_of(claims.begin(), claims.end(), [](const Claim& c) { return c.pass; });
}

std::vector<const Claim*> ClaimReport::failures() const {
  std::vector<const Claim*> out;
  for (const auto& c : claims) {
    if (!c.pass) out.push_back(&c);
  }
  return out;
}

ClaimReport theorem5_check(const Pi1Params& params) {
  const int n = params.n();
  const Rational& p = params.p();
  const Rational q = Rational(1) - p;
  const JointDist joint = pi1_joint_distribution(params);
  const VarList secret{kSecretVar};

  ClaimReport report;
  report.name = "t5";
  report.values["p"] = p;
  report.values["p^2+q^2"] = p * p + q * q;
  // Even-parity mass of n independent bits with P(0) = p.
  const Rational parity = (Rational(1) + (p - q).pow(static_cast<unsigned long>(n))) / Rational(2);
  report.values["P(Vn=0)"] = joint.marginal(share_var(n)).mass(0);

  const Rational secret_max = joint.marginal(kSecretVar).max_mass();
  report.add("min-entropy: R_inf(S) = -log p", secret_max == p, eq_detail(secret_max, p));
  for (int i = 1; i < n; ++i) {
    const Rational m = joint.marginal(share_var(i)).max_mass();
    report.add("min-entropy: R_inf(V" + std::to_string(i) + ") = -log p", m == p, eq_detail(m, p));
  }
  const Rational vn_max = joint.marginal(share_var(n)).max_mass();
  report.add("last share: R_inf(V" + std::to_string(n) + ") = -log(p^2+q^2)", vn_max == p * p + q * q,
             eq_detail(vn_max, p * p + q * q));
  report.add("parity: P(V" + std::to_string(n) + "=0) = (1+(p-q)^n)/2",
             report.values["P(Vn=0)"] == parity && vn_max == parity,
             eq_detail(report.values["P(Vn=0)"], parity));

  const AccessStructure g = threshold_structure(n, n);
  const PartySet all = g.universe();
  for (PartySet f = 1; f < all; ++f) {
    const Rational inner = avg_cond_min_entropy(joint, secret, share_vars(f)).guess_probability;
    report.add("guessing: R~_inf(S|V" + format_set(f) + ") = -log p", inner == p, eq_detail(inner, p));
  }

  // Case split on the conditioning value for |F| = n-1 with n in F: with
  // c = xor of the observed v's, only (S, V_j) with S xor V_j = c remain.
  const Rational sum_sq = p * p + q * q;
  const Rational case_posterior = (p * p) / sum_sq;
  for (int missing = 1; missing < n; ++missing) {
    const PartySet f = all & ~party_bit(missing);
    const VarList given = share_vars(f);
    const JointDist sub = joint.marginalize([&] {
      VarList keep{kSecretVar};
      keep.insert(keep.end(), given.begin(), given.end());
      return keep;
    }());
    std::map<Tuple, std::map<Symbol, Rational>> by_condition;
    for (const auto& [row, mass] : sub.table()) {
      by_condition[Tuple(row.begin() + 1, row.end())][row[0]] += mass;
    }
    bool ok = true;
    std::string detail;
    for (const auto& [v, by_s] : by_condition) {
      Rational pv;
      Rational top;
      int parity_bit = 0;
      Rational others(1);  // P of the v's other than Vn, independent bits
      for (std::size_t l = 0; l < v.size(); ++l) {
        parity_bit ^= static_cast<int>(v[l]);
        if (l + 1 < v.size()) others *= (v[l] == 0 ? p : q);
      }
      for (const auto& [s, m] : by_s) {
        pv += m;
        top = std::max(top, m);
      }
      const Rational posterior = top / pv;
      const Rational want_posterior = parity_bit == 1 ? Rational(1, 2) : case_posterior;
      const Rational want_mass = (parity_bit == 1 ? Rational(2) * p * q : sum_sq) * others;
      if (posterior != want_posterior || pv != want_mass) {
        ok = false;
        detail = "condition mass " + pv.to_string() + " posterior " + posterior.to_string();
      }
    }
    report.add("case split on V" + format_set(f), ok, detail);
  }
  return report;
}

Rational pi2_secret_zero_mass(const Pi2Params& params) {
  const Rational tk = from_u64(params.rows());
  const Rational tk1 = from_u64(params.rows() / params.t());
  const Rational& p = params.p();
  return (p * tk + (Rational(1) - p) * tk1 - Rational(1)) / (tk - Rational(1));
}

Rational pi2_secret_nonzero_mass(const Pi2Params& params) {
  const Rational tk = from_u64(params.rows());
  const Rational tk1 = from_u64(params.rows() / params.t());
  return tk1 * (Rational(1) - params.p()) / (tk - Rational(1));
}

Rational pi2_zero_condition_mass(const Pi2Params& params) {
  const Rational tk = from_u64(params.rows());
  const Rational rest = (Rational(1) - params.p()) / (tk - Rational(1));
  return params.p() + from_u64(params.t() - 1) * rest;
}

ClaimReport theorem6_check(const Pi2Params& params) {
  if (params.rows() > 1'000'000) throw InvalidArgumentError("theorem6_check bounded to t^k <= 10^6");
  const JointDist joint = pi2_joint_distribution(params);
  const VarList secret{kSecretVar};
  const int n = params.n();
  const int k = params.k();
  const Rational zero_mass = pi2_secret_zero_mass(params);
  const Rational nonzero_mass = pi2_secret_nonzero_mass(params);
  const Rational tk = from_u64(params.rows());
  const Rational rest = (Rational(1) - params.p()) / (tk - Rational(1));
  const Rational zero_condition = pi2_zero_condition_mass(params);

  ClaimReport report;
  report.name = "t6";
  report.values["P_S(0)"] = zero_mass;
  report.values["P_S(z)"] = nonzero_mass;
  report.values["R(p,t,k)"] = zero_condition;

  // Single-variable marginals, identical to each other and to the closed form.
  std::vector<Rational> expected;
  for (std::uint64_t z = 0; z < params.t(); ++z) expected.push_back(z == 0 ? zero_mass : nonzero_mass);
  for (int v = 0; v <= n; ++v) {
    const std::string name = v == 0 ? std::string(kSecretVar) : share_var(v);
    const ProbDist marginal = joint.marginal(name);
    bool ok = true;
    for (std::uint64_t z = 0; z < params.t(); ++z) {
      ok = ok && marginal.mass(static_cast<Symbol>(z)) == expected[z];
    }
    report.add("marginal " + name + " matches closed form", ok);
  }
  const Rational secret_max = joint.marginal(kSecretVar).max_mass();
  report.add("R_inf(S) = -log closed form", secret_max == zero_mass, eq_detail(secret_max, zero_mass));

  const AccessStructure g = threshold_structure(k, n);
  for (PartySet f : g.forbidden_sets()) {
    const Rational inner = f == 0 ? secret_max
                                  : avg_cond_min_entropy(joint, secret, share_vars(f)).guess_probability;
    report.add("R~_inf(S|V" + format_set(f) + ") = R_inf(S)", inner == secret_max,
               eq_detail(inner, secret_max));
  }

  // Conditional structure for |F| = k-1.
  for (PartySet f : g.forbidden_sets()) {
    if (set_size(f) != k - 1) continue;
    const VarList given = share_vars(f);
    VarList keep{kSecretVar};
    keep.insert(keep.end(), given.begin(), given.end());
    const JointDist sub = joint.marginalize(keep);
    std::map<Tuple, std::pair<Rational, Rational>> by_condition;  // (P(v), max_s P(s, v))
    for (const auto& [row, mass] : sub.table()) {
      auto& [pv, top] = by_condition[Tuple(row.begin() + 1, row.end())];
      pv += mass;
      top = std::max(top, mass);
    }
    bool ok = true;
    std::string detail;
    for (const auto& [v, acc] : by_condition) {
      const bool all_zero = std::all_of(v.begin(), v.end(), [](Symbol x) { return x == 0; });
      const Rational want_mass = all_zero ? zero_condition : from_u64(params.t()) * rest;
      const Rational want_posterior = all_zero ? params.p() / zero_condition : Rational(1) / from_u64(params.t());
      const Rational posterior = acc.second / acc.first;
      if (acc.first != want_mass || posterior != want_posterior) {
        ok = false;
        detail = "condition mass " + acc.first.to_string() + " (want " + want_mass.to_string() +
                 "), posterior " + posterior.to_string() + " (want " + want_posterior.to_string() + ")";
      }
    }
    report.add("conditionals given V" + format_set(f), ok, detail);
  }

  const IdealityReport ideal = ideality(joint);
  report.add("ideal", ideal.ideal);
  const Rational floor = Rational(1) / tk;
  const bool non_perfect = is_non_perfect(joint, g).first;
  report.add("non-perfect iff p > 1/t^k", non_perfect == (params.p() > floor),
             std::string("non-perfect = ") + (non_perfect ? "true" : "false"));
  return report;
}

ClaimReport theorem4_check(const GeneralParams& params) {
  const AccessStructure& g = params.structure();
  const CumulativeMap& map = params.map();
  const int m = params.m();
  const JointDist joint = general_joint_distribution(params);
  const JointDist extended = general_extended_joint(params);
  const VarList secret{kSecretVar};
  const Rational secret_max = joint.marginal(kSecretVar).max_mass();

  ClaimReport report;
  report.name = "t4";
  report.values["m"] = Rational(m);
  report.values["max P_S"] = secret_max;

  bool covers_qualified = true;
  bool misses_forbidden = true;
  for (PartySet u = 0; u <= g.universe(); ++u) {
    const int covered = static_cast<int>(map.phi_of_set(u).size());
    if (g.is_qualified(u)) {
      covers_qualified = covers_qualified && covered >= m;
    } else {
      misses_forbidden = misses_forbidden && covered <= m - 1;
    }
  }
  report.add("coverage: |phi(Q)| >= m for qualified Q", covers_qualified);
  report.add("coverage: |phi(F)| <= m-1 for forbidden F", misses_forbidden);

  bool reconstruct = true;
  std::string detail;
  for (int s = 0; s <= 1; ++s) {
    for (std::uint64_t pattern = 0; pattern < (std::uint64_t{1} << (m - 1)); ++pattern) {
      std::vector<int> randomness;
      for (int l = 0; l < m - 1; ++l) randomness.push_back(static_cast<int>((pattern >> l) & 1U));
      const ShareBundle bundle = general_share_with(s, params, randomness);
      for (PartySet q : g.qualified_sets()) {
        if (general_combine(bundle.restricted_to(q), params) != s) {
          reconstruct = false;
          detail = "set " + format_set(q) + " failed";
        }
      }
    }
  }
  report.add("reconstruction for every qualified set and randomness", reconstruct, detail);

  for (PartySet f : g.forbidden_sets()) {
    const VarList given = share_vars(f);
    VarList blocks;
    for (int j : map.phi_of_set(f)) blocks.push_back(block_var(j));
    const bool relabel = determines(extended, given, blocks) && determines(extended, blocks, given);
    const Rational via_shares =
        f == 0 ? secret_max : avg_cond_min_entropy(joint, secret, given).guess_probability;
    const Rational via_blocks =
        blocks.empty() ? secret_max : avg_cond_min_entropy(extended, secret, blocks).guess_probability;
    report.add("relabeling on " + format_set(f),
               relabel && via_shares == via_blocks && via_blocks == secret_max,
               std::string(relabel ? "" : "V_F is not a relabeling of W_phi(F); ") +
                   eq_detail(via_shares, secret_max));
  }
  return report;
}

}  // namespace minss
