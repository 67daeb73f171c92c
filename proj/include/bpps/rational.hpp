// Copyright 2026 The bpps Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Exact rational numbers over 64-bit integers.
//
// Every value is kept normalized (gcd(num, den) == 1, den > 0). Intermediate
// products are computed in 128 bits and narrowed with a range check, so an
// operation either returns the exact result or throws std::overflow_error.

#ifndef BPPS_RATIONAL_HPP_
#define BPPS_RATIONAL_HPP_

#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace bpps {

class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t value) : num_(value) {}  // NOLINT
  Rational(std::int64_t num, std::int64_t den) { Assign(num, den); }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  bool is_integer() const { return den_ == 1; }

  Rational operator-() const {
    return Rational(Narrow(-static_cast<__int128>(num_)), den_);
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    if (a.den_ == b.den_) {
      return FromWide(static_cast<__int128>(a.num_) + b.num_, a.den_);
    }
    const __int128 n = static_cast<__int128>(a.num_) * b.den_ +
                       static_cast<__int128>(b.num_) * a.den_;
    const __int128 d = static_cast<__int128>(a.den_) * b.den_;
    return FromWide(n, d);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return a + (-b);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return FromWide(static_cast<__int128>(a.num_) * b.num_,
                    static_cast<__int128>(a.den_) * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("rational division by zero");
    return FromWide(static_cast<__int128>(a.num_) * b.den_,
                    static_cast<__int128>(a.den_) * b.num_);
  }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    const __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
    const __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
    return lhs <=> rhs;
  }

  std::int64_t floor() const {
    std::int64_t q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) --q;
    return q;
  }
  std::int64_t ceil() const {
    std::int64_t q = num_ / den_;
    if (num_ % den_ != 0 && num_ > 0) ++q;
    return q;
  }

  double to_double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  // "p" or "p/q".
  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  // Decimal rendering rounded half away from zero, computed exactly.
  std::string decimal(int places) const {
    __int128 scale = 1;
    for (int p = 0; p < places; ++p) scale *= 10;
    const bool negative = num_ < 0;
    const __int128 abs_num = negative ? -static_cast<__int128>(num_) : num_;
    const __int128 scaled = (abs_num * scale * 2 + den_) / (2 * den_);
    const __int128 whole = scaled / scale;
    __int128 frac = scaled % scale;
    std::string out = negative && scaled != 0 ? "-" : "";
    out += ToString(whole);
    if (places > 0) {
      std::string digits(static_cast<std::size_t>(places), '0');
      for (int p = places - 1; p >= 0; --p) {
        digits[static_cast<std::size_t>(p)] = static_cast<char>('0' + frac % 10);
        frac /= 10;
      }
      out += "." + digits;
    }
    return out;
  }

  // Parses "p", "-p" or "p/q".
  static Rational Parse(const std::string& text) {
    const auto slash = text.find('/');
    std::size_t used = 0;
    try {
      if (slash == std::string::npos) {
        const std::int64_t v = std::stoll(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
        return Rational(v);
      }
      const std::string a = text.substr(0, slash);
      const std::string b = text.substr(slash + 1);
      const std::int64_t n = std::stoll(a, &used);
      if (used != a.size()) throw std::invalid_argument(text);
      const std::int64_t d = std::stoll(b, &used);
      if (used != b.size()) throw std::invalid_argument(text);
      return Rational(n, d);
    } catch (const std::logic_error&) {
      throw std::invalid_argument("not a rational: '" + text + "'");
    }
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
  }

 private:
  static std::int64_t Narrow(__int128 v) {
    if (v > INT64_MAX || v < INT64_MIN) {
      throw std::overflow_error("rational overflow");
    }
    return static_cast<std::int64_t>(v);
  }

  static __int128 Gcd(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
      const __int128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  static Rational FromWide(__int128 n, __int128 d) {
    if (d == 0) throw std::domain_error("rational with zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    const __int128 g = Gcd(n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    Rational r;
    r.num_ = Narrow(n);
    r.den_ = Narrow(d);
    return r;
  }

  static std::string ToString(__int128 v) {
    if (v == 0) return "0";
    std::string s;
    while (v > 0) {
      s.insert(s.begin(), static_cast<char>('0' + static_cast<int>(v % 10)));
      v /= 10;
    }
    return s;
  }

  void Assign(std::int64_t num, std::int64_t den) {
    *this = FromWide(num, den);
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace bpps

#endif  // BPPS_RATIONAL_HPP_
