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

#include <cmath>

#include "minss/error.hpp"
#include "minss/entropy.hpp"
#include "minss/schemes.hpp"
#include "oracle.hpp"

namespace minss {
namespace {

ProbDist coin(Rational zero) { return ProbDist({{0, zero}, {1, Rational(1) - zero}}); }

JointDist pi1_n2() { return pi1_joint_distribution(Pi1Params(2, Rational(3, 4))); }

const std::vector<Order>& sample_orders() {
  static const std::vector<Order> orders{Order::zero(), Order::finite(Rational(1, 2)), Order::one(),
                                         Order::finite(Rational(2)), Order::finite(Rational(7, 2)),
                                         Order::infinity()};
  return orders;
}

TEST(ProbDist, ValidatesMass) {
  EXPECT_THROW(ProbDist({{0, Rational(1, 2)}}), InvalidArgumentError);
  EXPECT_THROW(ProbDist({{0, Rational(3, 2)}, {1, Rational(-1, 2)}}), InvalidArgumentError);
  EXPECT_THROW(ProbDist({{0, Rational(1, 2)}, {0, Rational(1, 2)}}), InvalidArgumentError);
  const ProbDist d({{2, Rational(1)}, {1, Rational(0)}});
  EXPECT_EQ(d.support_size(), 1u);
  EXPECT_EQ(d.mass(1), Rational(0));
}

TEST(JointDist, ValidatesShape) {
  EXPECT_THROW(JointDist({"X", "Y"}, {{{0}, Rational(1)}}), InvalidArgumentError);
  EXPECT_THROW(JointDist({"X", "X"}, {{{0, 0}, Rational(1)}}), InvalidArgumentError);
  EXPECT_THROW(JointDist({"X"}, {{{0}, Rational(1, 2)}}), InvalidArgumentError);
}

TEST(Order, ParsesAndOrders) {
  EXPECT_EQ(Order::parse("inf").kind(), Order::Kind::Infinity);
  EXPECT_EQ(Order::parse("1").kind(), Order::Kind::One);
  EXPECT_EQ(Order::parse("0").kind(), Order::Kind::Zero);
  EXPECT_EQ(Order::parse("2/2").kind(), Order::Kind::One);
  EXPECT_EQ(Order::parse("1/2").to_string(), "1/2");
  EXPECT_THROW(Order::parse("-1"), UnsupportedOrderError);
  EXPECT_THROW(Order::parse("0.5"), ParseError);
  EXPECT_TRUE(Order::zero() < Order::finite(Rational(1, 2)));
  EXPECT_TRUE(Order::finite(Rational(1, 2)) < Order::one());
  EXPECT_TRUE(Order::one() < Order::finite(Rational(2)));
  EXPECT_TRUE(Order::finite(Rational(1000)) < Order::infinity());
}

TEST(RenyiEntropy, UniformIsOrderFree) {
  const ProbDist u = ProbDist::uniform(4);
  for (const auto& a : sample_orders()) EXPECT_NEAR(renyi_entropy(u, a), 2.0, 1e-12) << a.to_string();
}

TEST(RenyiEntropy, MinEntropyOfBiasedCoin) {
  const ProbDist d = coin(Rational(3, 4));
  EXPECT_NEAR(renyi_entropy(d, Order::infinity()), std::log2(4.0 / 3.0), 1e-12);
  EXPECT_EQ(*renyi_prelog(d, Order::infinity()), Rational(3, 4));
}

TEST(RenyiEntropy, CollisionEntropyExactPowerSum) {
  const ProbDist d({{0, Rational(1, 2)}, {1, Rational(1, 4)}, {2, Rational(1, 4)}});
  EXPECT_NEAR(renyi_entropy(d, Order::finite(Rational(2))), -std::log2(3.0 / 8.0), 1e-12);
  EXPECT_EQ(*renyi_prelog(d, Order::finite(Rational(2))), Rational(3, 8));
  EXPECT_EQ(*renyi_prelog(d, Order::zero()), Rational(3));
  EXPECT_FALSE(renyi_prelog(d, Order::finite(Rational(1, 2))).has_value());
}

TEST(RenyiEntropy, MatchesOracleOnFractionalOrder) {
  const ProbDist d({{0, Rational(1, 7)}, {1, Rational(2, 7)}, {2, Rational(4, 7)}});
  const std::map<std::vector<long>, double> ref{{{0}, 1.0 / 7}, {{1}, 2.0 / 7}, {{2}, 4.0 / 7}};
  EXPECT_NEAR(renyi_entropy(d, Order::finite(Rational(1, 3))), oracle::renyi(ref, 1.0 / 3), 1e-12);
  EXPECT_NEAR(renyi_entropy(d, Order::finite_real(std::sqrt(2.0))), oracle::renyi(ref, std::sqrt(2.0)), 1e-12);
  EXPECT_NEAR(renyi_entropy(d, Order::one()), oracle::shannon(ref), 1e-12);
}

TEST(CondRenyi, IndependentPairKeepsMinEntropy) {
  const JointDist j = JointDist::product({{"X", coin(Rational(3, 4))}, {"Y", coin(Rational(1, 2))}});
  EXPECT_NEAR(cond_renyi_arimoto(j, {"X"}, {"Y"}, Order::infinity()), std::log2(4.0 / 3.0), 1e-12);
  EXPECT_NEAR(avg_cond_min_entropy(j, {"X"}, {"Y"}).bits, std::log2(4.0 / 3.0), 1e-12);
  EXPECT_NEAR(worst_cond_min_entropy(j, {"X"}, {"Y"}).bits, std::log2(4.0 / 3.0), 1e-12);
}

TEST(CondRenyi, Pi1SecretGivenLastShare) {
  const JointDist j = pi1_n2();
  const auto avg = avg_cond_min_entropy(j, {"S"}, {"V2"});
  EXPECT_EQ(avg.guess_probability, Rational(3, 4));
  EXPECT_NEAR(avg.bits, 0.415037499279, 1e-12);
  EXPECT_NEAR(cond_renyi_arimoto(j, {"S"}, {"V2"}, Order::infinity()), avg.bits, 1e-15);
  const auto worst = worst_cond_min_entropy(j, {"S"}, {"V2"});
  EXPECT_EQ(worst.guess_probability, Rational(9, 10));
  EXPECT_NEAR(worst.bits, 0.152003093445, 1e-12);
}

TEST(CondRenyi, DeterministicTargetHasZeroEntropy) {
  std::map<Tuple, Rational> t{{{0, 0}, Rational(1, 5)}, {{1, 1}, Rational(3, 10)}, {{0, 2}, Rational(1, 2)}};
  const JointDist j({"X", "Y"}, t);
  for (const auto& a : sample_orders()) {
    if (a.kind() == Order::Kind::Zero) continue;
    EXPECT_NEAR(cond_renyi_arimoto(j, {"X"}, {"Y"}, a), 0.0, 1e-12) << a.to_string();
  }
  EXPECT_EQ(avg_cond_min_entropy(j, {"X"}, {"Y"}).guess_probability, Rational(1));
  EXPECT_EQ(worst_cond_min_entropy(j, {"X"}, {"Y"}).bits, 0.0);
}

TEST(CondRenyi, RejectsOrderZeroAndBadNames) {
  const JointDist j = pi1_n2();
  EXPECT_THROW(cond_renyi_arimoto(j, {"S"}, {"V1"}, Order::zero()), UnsupportedOrderError);
  EXPECT_THROW(cond_renyi_arimoto(j, {"S"}, {"Q"}, Order::one()), InvalidArgumentError);
  EXPECT_THROW(cond_renyi_arimoto(j, {"S"}, {"S"}, Order::one()), InvalidArgumentError);
}

TEST(CondRenyi, ShannonMatchesOracle) {
  const JointDist j = pi1_n2();
  const auto t = oracle::table_of(j);
  EXPECT_NEAR(cond_shannon_entropy(j, {"S"}, {"V2"}), oracle::cond_shannon(t, {0}, {2}), 1e-12);
  EXPECT_NEAR(cond_renyi_arimoto(j, {"S"}, {"V2"}, Order::one()), oracle::cond_shannon(t, {0}, {2}), 1e-12);
}

TEST(Marginalize, ExamplesFromPi1) {
  const JointDist j = pi1_n2();
  EXPECT_EQ(marginalize(j, j.variables()), j);
  const ProbDist v2 = j.marginal("V2");
  EXPECT_EQ(v2.mass(0), Rational(5, 8));
  EXPECT_EQ(v2.mass(1), Rational(3, 8));
  EXPECT_THROW(marginalize(j, {}), InvalidArgumentError);
  EXPECT_THROW(marginalize(j, {"Z"}), InvalidArgumentError);
}

TEST(Marginalize, ProductFactorComesBack) {
  const ProbDist x = coin(Rational(2, 3));
  const JointDist j = JointDist::product({{"X", x}, {"Y", ProbDist::uniform(3)}});
  EXPECT_EQ(j.marginal("X"), x);
  EXPECT_TRUE(j.independent({"X"}, {"Y"}));
  EXPECT_FALSE(pi1_n2().independent({"S"}, {"V2"}));
  EXPECT_TRUE(pi1_n2().independent({"S"}, {"V1"}));
}

}  // namespace
}  // namespace minss
