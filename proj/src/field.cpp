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

#include "minss/field.hpp"

#include <set>
#include <string>

#include "minss/error.hpp"

namespace minss {
namespace {

__extension__ typedef unsigned __int128 u128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exponent, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exponent > 0) {
    if (exponent & 1U) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exponent >>= 1U;
  }
  return result;
}

void require_same_field(const FieldElement& a, const FieldElement& b) {
  if (a.field() != b.field()) {
    throw InvalidArgumentError("field mismatch: F_" + std::to_string(a.field().modulus()) +
                               " vs F_" + std::to_string(b.field().modulus()));
  }
}

}  // namespace

bool is_prime(std::uint64_t value) {
  if (value < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (value % p == 0) return value == p;
  }
  std::uint64_t d = value - 1;
  int r = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++r;
  }
  // These bases are a deterministic witness set for all n < 2^64.
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d, value);
    if (x == 1 || x == value - 1) continue;
    bool composite = true;
    for (int i = 1; i < r; ++i) {
      x = mulmod(x, x, value);
      if (x == value - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint64_t modulus) : modulus_(modulus) {
  if (!is_prime(modulus)) {
    throw InvalidArgumentError("field modulus " + std::to_string(modulus) + " is not prime");
  }
}

FieldElement PrimeField::element(std::uint64_t value) const {
  return FieldElement(*this, value % modulus_);
}
FieldElement PrimeField::zero() const { return FieldElement(*this, 0); }
FieldElement PrimeField::one() const { return FieldElement(*this, 1); }

FieldElement::FieldElement(const PrimeField& field, std::uint64_t value)
    : field_(field), value_(value) {
  if (value >= field.modulus()) {
    throw InvalidArgumentError("field element " + std::to_string(value) + " not reduced mod " +
                               std::to_string(field.modulus()));
  }
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw InvalidArgumentError("inversion of zero");
  return FieldElement(field_, powmod(value_, field_.modulus() - 2, field_.modulus()));
}

FieldElement FieldElement::pow(std::uint64_t exponent) const {
  return FieldElement(field_, powmod(value_, exponent, field_.modulus()));
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  const std::uint64_t m = a.field().modulus();
  return FieldElement(a.field(), static_cast<std::uint64_t>((static_cast<u128>(a.value()) + b.value()) % m));
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  return a + (-b);
}

FieldElement operator-(const FieldElement& a) {
  return FieldElement(a.field(), a.is_zero() ? 0 : a.field().modulus() - a.value());
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  return FieldElement(a.field(), mulmod(a.value(), b.value(), a.field().modulus()));
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) { return a * b.inverse(); }

FieldElement add(const FieldElement& a, const FieldElement& b) { return a + b; }
FieldElement sub(const FieldElement& a, const FieldElement& b) { return a - b; }
FieldElement mul(const FieldElement& a, const FieldElement& b) { return a * b; }
FieldElement inv(const FieldElement& a) { return a.inverse(); }

FieldElement party_point(const PrimeField& field, std::uint64_t party, std::uint64_t n,
                         PartyPoints policy) {
  if (party < 1 || party > n) {
    throw InvalidArgumentError("party index " + std::to_string(party) + " outside [1, " +
                               std::to_string(n) + "]");
  }
  if (policy == PartyPoints::Distinct && n >= field.modulus()) {
    throw InvalidArgumentError("n = " + std::to_string(n) + " parties need n < t = " +
                               std::to_string(field.modulus()) + " for distinct nonzero points");
  }
  return field.element(party);
}

FieldElement eval_poly(const FieldElement& constant, std::span<const FieldElement> coeffs,
                       const FieldElement& x) {
  FieldElement acc = x.field().zero();
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = (acc + *it) * x;
  return acc + constant;
}

FieldElement eval_share_poly(const FieldElement& s, std::span<const FieldElement> r,
                             std::uint64_t party, std::uint64_t n) {
  return eval_poly(s, r, party_point(s.field(), party, n));
}

FieldElement lagrange_at_zero(std::span<const std::pair<FieldElement, FieldElement>> points) {
  if (points.empty()) throw InvalidArgumentError("interpolation needs at least one point");
  const PrimeField& field = points.front().first.field();
  std::set<std::uint64_t> xs;
  for (const auto& [x, y] : points) {
    require_same_field(x, points.front().first);
    require_same_field(y, points.front().first);
    if (x.is_zero()) throw InvalidArgumentError("interpolation point at x = 0");
    if (!xs.insert(x.value()).second) {
      throw InvalidArgumentError("duplicate interpolation point x = " + std::to_string(x.value()));
    }
  }
  // L_j(0) = prod_{m != j} x_m / (x_m - x_j).
  FieldElement acc = field.zero();
  for (std::size_t j = 0; j < points.size(); ++j) {
    FieldElement num = field.one();
    FieldElement den = field.one();
    for (std::size_t m = 0; m < points.size(); ++m) {
      if (m == j) continue;
      num = num * points[m].first;
      den = den * (points[m].first - points[j].first);
    }
    acc = acc + points[j].second * num / den;
  }
  return acc;
}

}  // namespace minss
