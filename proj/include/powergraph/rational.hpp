#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace powergraph {

/// Exact rational number. Always normalized: gcd(|num|, den) = 1, den > 0.
/// Intermediate products are widened to 128 bits before reduction.
class Rational {
 public:
  Rational() = default;
  Rational(long long n) : num_(n), den_(1) {}
  Rational(long long n, long long d) { assign(n, d); }

  long long num() const { return static_cast<long long>(num_); }
  long long den() const { return static_cast<long long>(den_); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return make(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return make(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return make(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("division by zero rational");
    return make(a.num_ * b.den_, a.den_ * b.num_);
  }
  Rational operator-() const { return make(-num_, den_); }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.num_ * b.den_ < b.num_ * a.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  /// Renders "p" when integral, "p/q" otherwise.
  std::string str() const {
    std::string s = std::to_string(num());
    if (den_ != 1) s += "/" + std::to_string(den());
    return s;
  }

  double approx() const { return static_cast<double>(num_) / static_cast<double>(den_); }

 private:
  using wide = __int128;

  static Rational make(wide n, wide d) {
    Rational r;
    r.assign_wide(n, d);
    return r;
  }

  void assign(long long n, long long d) { assign_wide(n, d); }

  void assign_wide(wide n, wide d) {
    if (d == 0) throw std::domain_error("rational with zero denominator");
    if (d < 0) { n = -n; d = -d; }
    wide g = gcd_wide(n < 0 ? -n : n, d);
    if (g > 1) { n /= g; d /= g; }
    constexpr wide lim = static_cast<wide>(INT64_MAX);
    if (n > lim || n < -lim || d > lim) throw std::overflow_error("rational overflow");
    num_ = n;
    den_ = d;
  }

  static wide gcd_wide(wide a, wide b) {
    while (b != 0) { wide t = a % b; a = b; b = t; }
    return a == 0 ? 1 : a;
  }

  wide num_ = 0;
  wide den_ = 1;
};

}  // namespace powergraph
