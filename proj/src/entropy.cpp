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

#include "minss/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include "minss/error.hpp"

namespace minss {
namespace {

using Real = long double;

void require_valid_mass(const Rational& m) {
  if (m.sign() < 0) throw InvalidArgumentError("negative probability mass " + m.to_string());
  if (m > Rational(1)) throw InvalidArgumentError("probability mass above 1: " + m.to_string());
}

// Masses of the target restricted to one value of the condition.
struct Slice {
  Rational given_mass;
  std::vector<Rational> joint_masses;
};

std::vector<std::size_t> indices_of(const JointDist& j, const VarList& names) {
  std::vector<std::size_t> out;
  out.reserve(names.size());
  for (const auto& name : names) out.push_back(j.index_of(name));
  return out;
}

void require_disjoint(const VarList& target, const VarList& given) {
  if (target.empty()) throw InvalidArgumentError("conditional entropy needs a target variable");
  std::set<std::string> seen;
  for (const auto& v : target) {
    if (!seen.insert(v).second) throw InvalidArgumentError("duplicate variable " + v);
  }
  for (const auto& v : given) {
    if (!seen.insert(v).second) {
      throw InvalidArgumentError("variable " + v + " appears in both target and condition");
    }
  }
}

Tuple project(const Tuple& row, const std::vector<std::size_t>& idx) {
  Tuple out;
  out.reserve(idx.size());
  for (auto i : idx) out.push_back(row[i]);
  return out;
}

std::vector<Slice> condition_slices(const JointDist& j, const VarList& target,
                                    const VarList& given) {
  require_disjoint(target, given);
  const auto tidx = indices_of(j, target);
  const auto gidx = indices_of(j, given);
  std::map<Tuple, std::map<Tuple, Rational>> grouped;
  for (const auto& [row, mass] : j.table()) {
    grouped[project(row, gidx)][project(row, tidx)] += mass;
  }
  std::vector<Slice> out;
  out.reserve(grouped.size());
  for (const auto& [y, xs] : grouped) {
    Slice slice;
    for (const auto& [x, m] : xs) {
      slice.given_mass += m;
      slice.joint_masses.push_back(m);
    }
    out.push_back(std::move(slice));
  }
  return out;
}

Rational max_of(const std::vector<Rational>& v) { return *std::max_element(v.begin(), v.end()); }

// (sum_x w_x^alpha)^(1/alpha) for nonnegative weights, scaled by the maximum
// so neither tiny masses nor large alpha under- or overflow.
Real alpha_norm(const std::vector<Rational>& weights, Real alpha) {
  const Rational top = max_of(weights);
  Real sum = 0.0L;
  for (const auto& w : weights) {
    const Real ratio = static_cast<Real>((w / top).to_double());
    sum += std::pow(ratio, alpha);
  }
  return static_cast<Real>(top.to_double()) * std::pow(sum, 1.0L / alpha);
}

// log2 sum_x w_x^alpha, scaled like alpha_norm.
Real log2_power_sum(const std::vector<Rational>& weights, Real alpha) {
  const Rational top = max_of(weights);
  Real sum = 0.0L;
  for (const auto& w : weights) {
    sum += std::pow(static_cast<Real>((w / top).to_double()), alpha);
  }
  return alpha * static_cast<Real>(log2(top)) + std::log2(sum);
}

std::vector<Rational> masses_of(const ProbDist& d) {
  std::vector<Rational> out;
  out.reserve(d.outcomes().size());
  for (const auto& [s, m] : d.outcomes()) out.push_back(m);
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// ProbDist

ProbDist::ProbDist(std::vector<std::pair<Symbol, Rational>> outcomes) {
  std::sort(outcomes.begin(), outcomes.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  Rational total;
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    if (i > 0 && outcomes[i].first == outcomes[i - 1].first) {
      throw InvalidArgumentError("duplicate symbol " + std::to_string(outcomes[i].first));
    }
    require_valid_mass(outcomes[i].second);
    total += outcomes[i].second;
    if (outcomes[i].second.sign() > 0) outcomes_.push_back(outcomes[i]);
  }
  if (total != Rational(1)) {
    throw InvalidArgumentError("distribution masses sum to " + total.to_string() + ", not 1");
  }
}

ProbDist ProbDist::uniform(std::size_t count) {
  if (count == 0) throw InvalidArgumentError("uniform distribution over an empty set");
  std::vector<std::pair<Symbol, Rational>> out;
  for (std::size_t i = 0; i < count; ++i) {
    out.emplace_back(static_cast<Symbol>(i), Rational(1, static_cast<long>(count)));
  }
  return ProbDist(std::move(out));
}

Rational ProbDist::mass(Symbol s) const {
  auto it = std::lower_bound(outcomes_.begin(), outcomes_.end(), s,
                             [](const auto& o, Symbol v) { return o.first < v; });
  return (it != outcomes_.end() && it->first == s) ? it->second : Rational(0);
}

Rational ProbDist::max_mass() const { return max_of(masses_of(*this)); }

// ---------------------------------------------------------------------------
// JointDist

JointDist::JointDist(VarList variables, std::map<Tuple, Rational> table)
    : variables_(std::move(variables)) {
  if (variables_.empty()) throw InvalidArgumentError("joint distribution without variables");
  std::set<std::string> names(variables_.begin(), variables_.end());
  if (names.size() != variables_.size()) {
    throw InvalidArgumentError("duplicate variable name in joint distribution");
  }
  Rational total;
  for (auto& [row, mass] : table) {
    if (row.size() != variables_.size()) {
      throw InvalidArgumentError("tuple arity does not match the variable list");
    }
    require_valid_mass(mass);
    total += mass;
    if (mass.sign() > 0) table_.emplace(row, std::move(mass));
  }
  if (total != Rational(1)) {
    throw InvalidArgumentError("joint masses sum to " + total.to_string() + ", not 1");
  }
}

JointDist JointDist::product(const std::vector<std::pair<std::string, ProbDist>>& factors) {
  VarList names;
  std::map<Tuple, Rational> table{{Tuple{}, Rational(1)}};
  for (const auto& [name, dist] : factors) {
    names.push_back(name);
    std::map<Tuple, Rational> next;
    for (const auto& [row, mass] : table) {
      for (const auto& [s, m] : dist.outcomes()) {
        Tuple extended = row;
        extended.push_back(s);
        next.emplace(std::move(extended), mass * m);
      }
    }
    table = std::move(next);
  }
  return JointDist(std::move(names), std::move(table));
}

bool JointDist::has_variable(const std::string& name) const {
  return std::find(variables_.begin(), variables_.end(), name) != variables_.end();
}

std::size_t JointDist::index_of(const std::string& name) const {
  auto it = std::find(variables_.begin(), variables_.end(), name);
  if (it == variables_.end()) throw InvalidArgumentError("unknown variable " + name);
  return static_cast<std::size_t>(it - variables_.begin());
}

JointDist JointDist::marginalize(const VarList& keep) const {
  if (keep.empty()) throw InvalidArgumentError("marginalize needs at least one variable");
  require_disjoint(keep, {});
  const auto idx = indices_of(*this, keep);
  std::map<Tuple, Rational> out;
  for (const auto& [row, mass] : table_) out[project(row, idx)] += mass;
  return JointDist(keep, std::move(out));
}

ProbDist JointDist::marginal(const std::string& name) const {
  const auto i = index_of(name);
  std::map<Symbol, Rational> acc;
  for (const auto& [row, mass] : table_) acc[row[i]] += mass;
  return ProbDist({acc.begin(), acc.end()});
}

bool JointDist::independent(const VarList& a, const VarList& b) const {
  if (a.empty() || b.empty()) return true;
  require_disjoint(a, b);
  const auto ia = indices_of(*this, a);
  const auto ib = indices_of(*this, b);
  std::map<Tuple, Rational> pa;
  std::map<Tuple, Rational> pb;
  std::map<std::pair<Tuple, Tuple>, Rational> pab;
  for (const auto& [row, mass] : table_) {
    auto x = project(row, ia);
    auto y = project(row, ib);
    pa[x] += mass;
    pb[y] += mass;
    pab[{std::move(x), std::move(y)}] += mass;
  }
  // Every support pair must appear, otherwise some P(a,b) = 0 < P(a)P(b).
  if (pab.size() != pa.size() * pb.size()) return false;
  for (const auto& [xy, mass] : pab) {
    if (mass != pa[xy.first] * pb[xy.second]) return false;
  }
  return true;
}

JointDist JointDist::renamed(VarList names) const {
  if (names.size() != variables_.size()) {
    throw InvalidArgumentError("rename needs one name per variable");
  }
  return JointDist(std::move(names), table_);
}

JointDist marginalize(const JointDist& j, const VarList& keep) { return j.marginalize(keep); }

// ---------------------------------------------------------------------------
// Order

Order Order::infinity() {
  return Order(Kind::Infinity, std::numeric_limits<long double>::infinity(), std::nullopt);
}

Order Order::finite(const Rational& alpha) {
  if (alpha.sign() <= 0) throw InvalidArgumentError("finite order must be positive");
  if (alpha == Rational(1)) throw InvalidArgumentError("order 1 is Order::one(), not finite");
  return Order(Kind::Finite, static_cast<long double>(alpha.to_double()), alpha);
}

Order Order::finite_real(double alpha) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw InvalidArgumentError("finite order must be a positive real");
  }
  if (alpha == 1.0) throw InvalidArgumentError("order 1 is Order::one(), not finite");
  return Order(Kind::Finite, alpha, std::nullopt);
}

Order Order::parse(const std::string& text) {
  if (text == "inf" || text == "infinity") return infinity();
  const Rational value = Rational::parse(text);
  if (value.sign() == 0) return zero();
  if (value == Rational(1)) return one();
  if (value.sign() < 0) throw UnsupportedOrderError("negative order " + text);
  return finite(value);
}

std::string Order::to_string() const {
  switch (kind_) {
    case Kind::Zero: return "0";
    case Kind::One: return "1";
    case Kind::Infinity: return "inf";
    case Kind::Finite:
      if (exact_) return exact_->to_string();
      return std::to_string(static_cast<double>(alpha_));
  }
  return "?";
}

bool operator<(const Order& a, const Order& b) { return a.alpha_ < b.alpha_; }

bool operator==(const Order& a, const Order& b) {
  if (a.kind_ != b.kind_) return false;
  if (a.exact_ && b.exact_) return *a.exact_ == *b.exact_;
  return a.alpha_ == b.alpha_;
}

// ---------------------------------------------------------------------------
// Entropies

double shannon_entropy(const ProbDist& d) {
  Real h = 0.0L;
  for (const auto& [s, m] : d.outcomes()) {
    h -= static_cast<Real>(m.to_double()) * static_cast<Real>(log2(m));
  }
  return static_cast<double>(h);
}

std::optional<Rational> renyi_prelog(const ProbDist& d, const Order& a) {
  switch (a.kind()) {
    case Order::Kind::Zero:
      return Rational(static_cast<long>(d.support_size()));
    case Order::Kind::Infinity:
      return d.max_mass();
    case Order::Kind::One:
      return std::nullopt;
    case Order::Kind::Finite:
      if (a.exact_alpha() && a.exact_alpha()->is_integer()) {
        const unsigned long exponent = a.exact_alpha()->raw().get_num().get_ui();
        Rational sum;
        for (const auto& [s, m] : d.outcomes()) sum += m.pow(exponent);
        return sum;
      }
      return std::nullopt;
  }
  return std::nullopt;
}

double renyi_entropy(const ProbDist& d, const Order& a) {
  switch (a.kind()) {
    case Order::Kind::Zero:
      return std::log2(static_cast<double>(d.support_size()));
    case Order::Kind::One:
      return shannon_entropy(d);
    case Order::Kind::Infinity:
      return -log2(d.max_mass());
    case Order::Kind::Finite: {
      const Real alpha = a.alpha();
      if (auto exact = renyi_prelog(d, a)) {
        return static_cast<double>(static_cast<Real>(log2(*exact)) / (1.0L - alpha));
      }
      return static_cast<double>(log2_power_sum(masses_of(d), alpha) / (1.0L - alpha));
    }
  }
  return 0.0;
}

double cond_shannon_entropy(const JointDist& j, const VarList& target, const VarList& given) {
  Real h = 0.0L;
  for (const auto& slice : condition_slices(j, target, given)) {
    for (const auto& m : slice.joint_masses) {
      h += static_cast<Real>(m.to_double()) * static_cast<Real>(log2(slice.given_mass / m));
    }
  }
  return static_cast<double>(h);
}

GuessEntropy avg_cond_min_entropy(const JointDist& j, const VarList& target,
                                  const VarList& given) {
  GuessEntropy out;
  // P(y) max_x P(x|y) = max_x P(x, y).
  for (const auto& slice : condition_slices(j, target, given)) {
    out.guess_probability += max_of(slice.joint_masses);
  }
  out.bits = -log2(out.guess_probability);
  return out;
}

GuessEntropy worst_cond_min_entropy(const JointDist& j, const VarList& target,
                                    const VarList& given) {
  GuessEntropy out;
  for (const auto& slice : condition_slices(j, target, given)) {
    const Rational posterior = max_of(slice.joint_masses) / slice.given_mass;
    if (posterior > out.guess_probability) out.guess_probability = posterior;
  }
  out.bits = -log2(out.guess_probability);
  return out;
}

double cond_renyi_arimoto(const JointDist& j, const VarList& target, const VarList& given,
                          const Order& a) {
  switch (a.kind()) {
    case Order::Kind::Zero:
      throw UnsupportedOrderError("conditional Renyi entropy of order 0 is not supported");
    case Order::Kind::One:
      return cond_shannon_entropy(j, target, given);
    case Order::Kind::Infinity:
      return avg_cond_min_entropy(j, target, given).bits;
    case Order::Kind::Finite:
      break;
  }
  const Real alpha = a.alpha();
  // P(y) (sum_x P(x|y)^alpha)^(1/alpha) = (sum_x P(x,y)^alpha)^(1/alpha).
  Real total = 0.0L;
  for (const auto& slice : condition_slices(j, target, given)) {
    total += alpha_norm(slice.joint_masses, alpha);
  }
  return static_cast<double>(alpha / (1.0L - alpha) * std::log2(total));
}

}  // namespace minss
