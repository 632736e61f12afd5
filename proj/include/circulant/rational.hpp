// Copyright 2026 The circulant Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Exact rationals over 128-bit integers, always in lowest terms with a
// positive denominator. Arithmetic is overflow-checked.

#include <compare>
#include <stdexcept>
#include <string>

#include "circulant/integer.hpp"

namespace circulant {

class Rational {
 public:
  constexpr Rational() = default;
  Rational(integer num, integer den = 1) : num_(num), den_(den) {  // NOLINT: implicit from integer
    if (den_ == 0) throw std::domain_error("zero denominator");
    reduce();
  }

  integer num() const { return num_; }
  integer den() const { return den_; }
  bool is_integer() const { return den_ == 1; }
  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
  std::string str() const { return den_ == 1 ? to_string(num_) : to_string(num_) + "/" + to_string(den_); }

  friend Rational operator*(const Rational& a, const Rational& b) {
    // Cross-cancel first to keep intermediates small.
    const integer g1 = gcd(a.num_, b.den_), g2 = gcd(b.num_, a.den_);
    const integer n1 = g1 ? a.num_ / g1 : a.num_, d2 = g1 ? b.den_ / g1 : b.den_;
    const integer n2 = g2 ? b.num_ / g2 : b.num_, d1 = g2 ? a.den_ / g2 : a.den_;
    return Rational(checked_mul(n1, n2), checked_mul(d1, d2));
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("division by zero");
    return a * Rational(b.den_, b.num_);
  }
  friend Rational operator+(const Rational& a, const Rational& b) {
    const integer g = gcd(a.den_, b.den_);
    const integer l = checked_mul(a.den_ / g, b.den_);
    return Rational(checked_add(checked_mul(a.num_, l / a.den_), checked_mul(b.num_, l / b.den_)), l);
  }
  friend Rational operator-(const Rational& a, const Rational& b) { return a + Rational(-b.num_, b.den_); }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const integer lhs = checked_mul(a.num_, b.den_), rhs = checked_mul(b.num_, a.den_);
    return lhs <=> rhs;
  }

 private:
  void reduce() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    const integer g = gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  integer num_ = 0;
  integer den_ = 1;
};

/// base^exp for exp >= 0, checked.
inline Rational pow(const Rational& base, int exp) {
  Rational out(1);
  for (int i = 0; i < exp; ++i) out = out * base;
  return out;
}

}  // namespace circulant
