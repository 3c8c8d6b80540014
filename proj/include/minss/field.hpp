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
#include <span>
#include <utility>
#include <vector>

namespace minss {

class FieldElement;

// Prime field F_t with a 64-bit prime modulus.
class PrimeField {
 public:
  explicit PrimeField(std::uint64_t modulus);

  std::uint64_t modulus() const { return modulus_; }
  FieldElement element(std::uint64_t value) const;
  FieldElement zero() const;
  FieldElement one() const;

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint64_t modulus_;
};

// Deterministic Miller-Rabin for 64-bit integers.
bool is_prime(std::uint64_t value);

class FieldElement {
 public:
  FieldElement(const PrimeField& field, std::uint64_t value);

  const PrimeField& field() const { return field_; }
  std::uint64_t value() const { return value_; }
  bool is_zero() const { return value_ == 0; }

  FieldElement inverse() const;
  FieldElement pow(std::uint64_t exponent) const;

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a);

  friend bool operator==(const FieldElement&, const FieldElement&) = default;

 private:
  PrimeField field_;
  std::uint64_t value_;
};

FieldElement add(const FieldElement& a, const FieldElement& b);
FieldElement sub(const FieldElement& a, const FieldElement& b);
FieldElement mul(const FieldElement& a, const FieldElement& b);
FieldElement inv(const FieldElement& a);

// How party indices 1..n are placed in the field. Distinct requires n < t so
// that every party sits on its own nonzero point; ReducedModT places party i
// at i mod t regardless, which can collide or land on zero.
enum class PartyPoints { Distinct, ReducedModT };

// Field point of party `party` among `n`; throws when the policy is violated.
FieldElement party_point(const PrimeField& field, std::uint64_t party, std::uint64_t n,
                         PartyPoints policy = PartyPoints::Distinct);

// constant + sum_l x^l coeffs[l-1], by Horner's rule.
FieldElement eval_poly(const FieldElement& constant, std::span<const FieldElement> coeffs,
                       const FieldElement& x);

// v_i = s + sum_{l=1}^{k-1} i^l r_l at the point of party i (1 <= i <= n < t).
FieldElement eval_share_poly(const FieldElement& s, std::span<const FieldElement> r,
                             std::uint64_t party, std::uint64_t n);

// Value at zero of the unique polynomial of degree < points.size() through
// the points. x-coordinates must be distinct and nonzero.
FieldElement lagrange_at_zero(std::span<const std::pair<FieldElement, FieldElement>> points);

}  // namespace minss
