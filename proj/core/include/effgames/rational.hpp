// Copyright 2026 The effgames Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef EFFGAMES_RATIONAL_HPP_
#define EFFGAMES_RATIONAL_HPP_

#include <boost/multiprecision/gmp.hpp>

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace effgames {

using BigInt = boost::multiprecision::mpz_int;

/// Arbitrary-precision exact fraction. Always in canonical form:
/// denominator > 0 and gcd(|num|, den) == 1. Every arithmetic operation
/// is exact; dividing by zero throws std::domain_error.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(int n) : v_(n) {}                 // NOLINT(runtime/explicit)
  Rational(long long n) : v_(n) {}           // NOLINT(runtime/explicit)
  Rational(const BigInt& n) : v_(n) {}       // NOLINT(runtime/explicit)
  Rational(long long num, long long den);
  Rational(const BigInt& num, const BigInt& den);

  /// Parses "3", "-3/7", "6.4" (finite decimal; 6.4 -> 32/5).
  static Rational parse(const std::string& text);

  BigInt numerator() const { return boost::multiprecision::numerator(v_); }
  BigInt denominator() const {
    return boost::multiprecision::denominator(v_);
  }
  bool is_integer() const { return denominator() == 1; }
  bool is_zero() const { return v_ == 0; }
  int sign() const { return v_ < 0 ? -1 : (v_ > 0 ? 1 : 0); }
  Rational abs() const { return v_ < 0 ? Rational(-v_) : *this; }

  /// "num/den", or just "num" for integers. Lossless round-trip via parse().
  std::string str() const;
  /// Nearest double, for display only.
  double to_double() const { return v_.convert_to<double>(); }

  Rational operator-() const { return Rational(mpq(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.v_ == 0) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.v_ == b.v_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) {
    return a.v_ != b.v_;
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.v_ < b.v_;
  }
  friend bool operator<=(const Rational& a, const Rational& b) {
    return a.v_ <= b.v_;
  }
  friend bool operator>(const Rational& a, const Rational& b) {
    return a.v_ > b.v_;
  }
  friend bool operator>=(const Rational& a, const Rational& b) {
    return a.v_ >= b.v_;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  using mpq = boost::multiprecision::mpq_rational;
  explicit Rational(const mpq& v) : v_(v) {}
  mpq v_;
};

using Vec = std::vector<Rational>;
using Mat = std::vector<Vec>;

Rational dot(const Vec& a, const Vec& b);
Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator*(const Rational& s, const Vec& v);
Rational sum(const Vec& v);

}  // namespace effgames

#endif  // EFFGAMES_RATIONAL_HPP_
