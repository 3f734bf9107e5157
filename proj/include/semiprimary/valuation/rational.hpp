#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <string>

#include "semiprimary/errors.hpp"

namespace semiprimary {

/// Exact rational with int64 parts, always reduced with a positive denominator.
class Rational {
 public:
  Rational(std::int64_t n = 0, std::int64_t d = 1) {
    if (d == 0) throw InvalidParameter("zero denominator");
    if (d < 0) n = -n, d = -d;
    std::int64_t g = std::gcd(n < 0 ? -n : n, d);
    if (g == 0) g = 1;
    n_ = n / g;
    d_ = d / g;
  }

  static Rational parse(const std::string& s) {
    try {
      std::size_t used = 0;
      auto slash = s.find('/');
      std::int64_t n = std::stoll(s.substr(0, slash), &used);
      if (used != s.substr(0, slash).size()) throw ParseError("bad rational '" + s + "'");
      std::int64_t d = 1;
      if (slash != std::string::npos) {
        d = std::stoll(s.substr(slash + 1), &used);
        if (used != s.size() - slash - 1) throw ParseError("bad rational '" + s + "'");
      }
      return Rational(n, d);
    } catch (const std::logic_error&) {
      throw ParseError("bad rational '" + s + "'");
    }
  }

  std::int64_t num() const { return n_; }
  std::int64_t den() const { return d_; }
  bool is_integer() const { return d_ == 1; }

  std::int64_t floor() const { return n_ >= 0 ? n_ / d_ : -((-n_ + d_ - 1) / d_); }
  std::int64_t ceil() const { return -Rational(-n_, d_).floor(); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return make(static_cast<__int128>(a.n_) * b.d_ + static_cast<__int128>(b.n_) * a.d_, static_cast<__int128>(a.d_) * b.d_);
  }
  friend Rational operator-(const Rational& a) { return Rational(-a.n_, a.d_); }
  friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return make(static_cast<__int128>(a.n_) * b.n_, static_cast<__int128>(a.d_) * b.d_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.n_ == 0) throw InvalidParameter("division by zero");
    return make(static_cast<__int128>(a.n_) * b.d_, static_cast<__int128>(a.d_) * b.n_);
  }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.n_) * b.d_ <=> static_cast<__int128>(b.n_) * a.d_;
  }

  std::string to_string() const { return d_ == 1 ? std::to_string(n_) : std::to_string(n_) + "/" + std::to_string(d_); }

 private:
  static Rational make(__int128 n, __int128 d) {
    if (d < 0) n = -n, d = -d;
    __int128 a = n < 0 ? -n : n, b = d;
    while (b) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    if (a > 1) n /= a, d /= a;
    if (n > INT64_MAX || n < INT64_MIN || d > INT64_MAX) throw InvalidParameter("rational overflow");
    return Rational(static_cast<std::int64_t>(n), static_cast<std::int64_t>(d));
  }

  std::int64_t n_, d_;
};

}  // namespace semiprimary
