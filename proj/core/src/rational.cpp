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

#include "effgames/rational.hpp"

#include <cctype>
#include <ostream>

namespace effgames {

namespace {

BigInt parse_integer(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("Rational: empty integer token");
  std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
  if (i == s.size()) throw std::invalid_argument("Rational: bare sign");
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
      throw std::invalid_argument("Rational: bad integer token '" + s + "'");
    }
  }
  return BigInt(s);
}

BigInt pow10(std::size_t n) {
  BigInt r = 1;
  for (std::size_t i = 0; i < n; ++i) r *= 10;
  return r;
}

}  // namespace

Rational::Rational(long long num, long long den)
    : Rational(BigInt(num), BigInt(den)) {}

Rational::Rational(const BigInt& num, const BigInt& den) : v_(0) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  v_ = mpq(num);
  v_ /= mpq(den);
}

Rational Rational::parse(const std::string& text) {
  auto slash = text.find('/');
  if (slash != std::string::npos) {
    BigInt num = parse_integer(text.substr(0, slash));
    BigInt den = parse_integer(text.substr(slash + 1));
    return Rational(num, den);
  }
  auto point = text.find('.');
  if (point != std::string::npos) {
    std::string head = text.substr(0, point);
    std::string frac = text.substr(point + 1);
    if (frac.empty()) throw std::invalid_argument("Rational: trailing point");
    bool negative = !head.empty() && head[0] == '-';
    if (head.empty() || head == "-" || head == "+") head += "0";
    BigInt whole = parse_integer(head);
    BigInt digits = parse_integer(frac);
    BigInt scale = pow10(frac.size());
    BigInt num = whole * scale + (negative ? -digits : digits);
    return Rational(num, scale);
  }
  return Rational(parse_integer(text));
}

std::string Rational::str() const {
  std::string s = numerator().str();
  if (!is_integer()) s += "/" + denominator().str();
  return s;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

Rational dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
  Rational r;
  for (std::size_t i = 0; i < a.size(); ++i) r += a[i] * b[i];
  return r;
}

Vec operator+(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vec+: size mismatch");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vec operator-(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("vec-: size mismatch");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vec operator*(const Rational& s, const Vec& v) {
  Vec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = s * v[i];
  return r;
}

Rational sum(const Vec& v) {
  Rational r;
  for (const auto& x : v) r += x;
  return r;
}

}  // namespace effgames
