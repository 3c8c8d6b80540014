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

#include <gtest/gtest.h>

#include <random>

#include "minss/entropy.hpp"
#include "oracle.hpp"
#include "random_joint.hpp"

namespace minss {
namespace {

constexpr int kJoints = 200;
constexpr double kTol = 1e-9;
constexpr double kLimitTol = 1e-3;

using testing_support::random_alphabet;
using testing_support::random_joint;

const std::vector<Order>& property_orders() {
  static const std::vector<Order> orders{Order::finite(Rational(1, 2)), Order::finite(Rational(2)), Order::one(),
                                         Order::infinity()};
  return orders;
}

class PropertySuite : public ::testing::Test {
 protected:
  std::mt19937_64 gen{20260101};
};

// H(X | Z) <= H(X, Y | Z).
TEST_F(PropertySuite, ChainLowerBound) {
  for (int trial = 0; trial < kJoints; ++trial) {
    const int vars = 3 + trial % 2;
    VarList names{"X", "Y", "Z", "W"};
    names.resize(vars);
    const JointDist j = random_joint(gen, names, random_alphabet(gen, vars));
    VarList given{"Z"};
    if (vars == 4) given.push_back("W");
    for (const auto& a : property_orders()) {
      const double lhs = cond_renyi_arimoto(j, {"X"}, given, a);
      const double rhs = cond_renyi_arimoto(j, {"X", "Y"}, given, a);
      ASSERT_LE(lhs, rhs + kTol) << "trial " << trial << " order " << a.to_string();
    }
  }
}

// Equality when Y is a function of (X, Z).
TEST_F(PropertySuite, ChainEqualityForFunctions) {
  for (int trial = 0; trial < kJoints; ++trial) {
    const std::vector<int> alphabet = random_alphabet(gen, 2);
    const JointDist xz = random_joint(gen, {"X", "Z"}, alphabet);
    std::uniform_int_distribution<int> pick(0, 2);
    std::map<Tuple, Symbol> f;
    std::map<Tuple, Rational> table;
    for (const auto& [row, mass] : xz.table()) {
      if (!f.count(row)) f[row] = pick(gen);
      table[{row[0], f[row], row[1]}] = mass;
    }
    const JointDist j({"X", "Y", "Z"}, table);
    for (const auto& a : property_orders()) {
      const double lhs = cond_renyi_arimoto(j, {"X"}, {"Z"}, a);
      const double rhs = cond_renyi_arimoto(j, {"X", "Y"}, {"Z"}, a);
      ASSERT_NEAR(lhs, rhs, kTol) << "trial " << trial << " order " << a.to_string();
    }
  }
}

// R(X) >= R(X | Y), with equality on product joints.
TEST_F(PropertySuite, ConditioningReduces) {
  for (int trial = 0; trial < kJoints; ++trial) {
    const int vars = 2 + trial % 3;
    VarList names{"X", "Y", "Z", "W"};
    names.resize(vars);
    const JointDist j = random_joint(gen, names, random_alphabet(gen, vars));
    const VarList given(names.begin() + 1, names.end());
    const ProbDist px = j.marginal("X");
    for (const auto& a : property_orders()) {
      ASSERT_GE(renyi_entropy(px, a) + kTol, cond_renyi_arimoto(j, {"X"}, given, a)) << "trial " << trial;
    }
    const JointDist prod = JointDist::product({{"X", px}, {"Y", j.marginal("Y")}});
    for (const auto& a : property_orders()) {
      ASSERT_NEAR(renyi_entropy(px, a), cond_renyi_arimoto(prod, {"X"}, {"Y"}, a), kTol) << "trial " << trial;
    }
  }
}

TEST_F(PropertySuite, OrderMonotonicity) {
  const std::vector<Order> ladder{Order::zero(),
                                  Order::finite(Rational(1, 4)),
                                  Order::finite(Rational(1, 2)),
                                  Order::one(),
                                  Order::finite(Rational(3, 2)),
                                  Order::finite(Rational(2)),
                                  Order::finite(Rational(5)),
                                  Order::infinity()};
  for (int trial = 0; trial < kJoints; ++trial) {
    const JointDist j = random_joint(gen, {"X", "Y"}, random_alphabet(gen, 2));
    const ProbDist x = j.marginal("X");
    for (std::size_t i = 1; i < ladder.size(); ++i) {
      ASSERT_GE(renyi_entropy(x, ladder[i - 1]) + kTol, renyi_entropy(x, ladder[i])) << "trial " << trial;
      ASSERT_GE(cond_renyi_arimoto(j, {"X"}, {"Y"}, ladder[std::max<std::size_t>(i - 1, 1)]) + kTol,
                cond_renyi_arimoto(j, {"X"}, {"Y"}, ladder[i]))
          << "trial " << trial;
    }
  }
}

TEST_F(PropertySuite, LimitOrders) {
  const Order below = Order::finite(Rational(9999, 10000));
  const Order above = Order::finite(Rational(10001, 10000));
  const Order large = Order::finite(Rational(10000));
  for (int trial = 0; trial < kJoints; ++trial) {
    const int vars = 2 + trial % 3;
    VarList names{"X", "Y", "Z", "W"};
    names.resize(vars);
    const JointDist j = random_joint(gen, names, random_alphabet(gen, vars));
    const VarList given(names.begin() + 1, names.end());
    const double shannon = cond_shannon_entropy(j, {"X"}, given);
    ASSERT_NEAR(cond_renyi_arimoto(j, {"X"}, given, below), shannon, kLimitTol);
    ASSERT_NEAR(cond_renyi_arimoto(j, {"X"}, given, above), shannon, kLimitTol);
    ASSERT_NEAR(cond_renyi_arimoto(j, {"X"}, given, large), avg_cond_min_entropy(j, {"X"}, given).bits, kLimitTol);
  }
}

// The library agrees with the standalone double-precision reference.
TEST_F(PropertySuite, AgreesWithOracle) {
  for (int trial = 0; trial < kJoints; ++trial) {
    const JointDist j = random_joint(gen, {"X", "Y", "Z"}, random_alphabet(gen, 3));
    const auto t = oracle::table_of(j);
    ASSERT_NEAR(cond_shannon_entropy(j, {"X"}, {"Y", "Z"}), oracle::cond_shannon(t, {0}, {1, 2}), 1e-12);
    ASSERT_NEAR(avg_cond_min_entropy(j, {"X"}, {"Z"}).bits, oracle::avg_cond_min(t, {0}, {2}), 1e-12);
    ASSERT_NEAR(renyi_entropy(j.marginal("Y"), Order::finite(Rational(2))), oracle::renyi(oracle::marginal(t, {1}), 2.0),
                1e-12);
  }
}

}  // namespace
}  // namespace minss
