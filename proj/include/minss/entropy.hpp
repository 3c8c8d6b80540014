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
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "minss/rational.hpp"

namespace minss {

// Outcome label of a finite random variable.
using Symbol = std::int64_t;
using Tuple = std::vector<Symbol>;
using VarList = std::vector<std::string>;

// Finite distribution with exact masses. Zero-mass outcomes are dropped;
// outcomes are kept sorted by symbol.
class ProbDist {
 public:
  explicit ProbDist(std::vector<std::pair<Symbol, Rational>> outcomes);

  static ProbDist uniform(std::size_t count);

  const std::vector<std::pair<Symbol, Rational>>& outcomes() const { return outcomes_; }
  Rational mass(Symbol s) const;
  Rational max_mass() const;
  std::size_t support_size() const { return outcomes_.size(); }

  friend bool operator==(const ProbDist&, const ProbDist&) = default;

 private:
  std::vector<std::pair<Symbol, Rational>> outcomes_;
};

// Exact joint distribution over named variables. The table holds the
// support only, ordered lexicographically by tuple.
class JointDist {
 public:
  JointDist(VarList variables, std::map<Tuple, Rational> table);

  // Joint of independent variables, one name per factor.
  static JointDist product(const std::vector<std::pair<std::string, ProbDist>>& factors);

  const VarList& variables() const { return variables_; }
  const std::map<Tuple, Rational>& table() const { return table_; }
  std::size_t arity() const { return variables_.size(); }
  bool has_variable(const std::string& name) const;
  std::size_t index_of(const std::string& name) const;

  JointDist marginalize(const VarList& keep) const;
  ProbDist marginal(const std::string& name) const;

  // Exact test of P(a, b) = P(a) P(b) over the full product of supports.
  bool independent(const VarList& a, const VarList& b) const;

  // Same table with variables renamed position by position.
  JointDist renamed(VarList names) const;

  friend bool operator==(const JointDist&, const JointDist&) = default;

 private:
  VarList variables_;
  std::map<Tuple, Rational> table_;
};

// Entropy order: 0, finite alpha (alpha > 0, alpha != 1), 1 (Shannon), infinity.
class Order {
 public:
  enum class Kind { Zero, Finite, One, Infinity };

  static Order zero() { return Order(Kind::Zero, 0.0L, std::nullopt); }
  static Order one() { return Order(Kind::One, 1.0L, std::nullopt); }
  static Order infinity();
  static Order finite(const Rational& alpha);
  // Irrational or otherwise inexact order; power sums are evaluated in floating point.
  static Order finite_real(double alpha);
  // "0", "1", "inf", "a/b" or an integer.
  static Order parse(const std::string& text);

  Kind kind() const { return kind_; }
  long double alpha() const { return alpha_; }
  const std::optional<Rational>& exact_alpha() const { return exact_; }
  std::string to_string() const;

  // Total order: Zero < Finite ascending (with One at alpha = 1) < Infinity.
  friend bool operator<(const Order& a, const Order& b);
  friend bool operator==(const Order& a, const Order& b);

 private:
  Order(Kind kind, long double alpha, std::optional<Rational> exact)
      : kind_(kind), alpha_(alpha), exact_(std::move(exact)) {}

  Kind kind_;
  long double alpha_;
  std::optional<Rational> exact_;
};

double shannon_entropy(const ProbDist& d);

// Renyi entropy in bits.
double renyi_entropy(const ProbDist& d, const Order& a);

// Exact pre-log quantity when one exists: sum_x P(x)^alpha for integer
// alpha, max_x P(x) at infinity, the support size at order zero.
std::optional<Rational> renyi_prelog(const ProbDist& d, const Order& a);

// Min-entropy style quantity: the guessing probability and its -log2.
struct GuessEntropy {
  Rational guess_probability;
  double bits = 0.0;
};

// Arimoto conditional Renyi entropy of `target` given `given` (bits).
// An empty `given` yields the unconditional entropy of the target.
double cond_renyi_arimoto(const JointDist& j, const VarList& target, const VarList& given,
                          const Order& a);

double cond_shannon_entropy(const JointDist& j, const VarList& target, const VarList& given);

// -log2 sum_y P(y) max_x P(x|y); the inner sum is exposed exactly.
GuessEntropy avg_cond_min_entropy(const JointDist& j, const VarList& target,
                                  const VarList& given);

// -log2 max_{x,y: P(y)>0} P(x|y).
GuessEntropy worst_cond_min_entropy(const JointDist& j, const VarList& target,
                                    const VarList& given);

JointDist marginalize(const JointDist& j, const VarList& keep);

}  // namespace minss
